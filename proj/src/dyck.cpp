#include "connperm/dyck.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "connperm/errors.hpp"

namespace connperm {

namespace {

// Cycles opened so far, each a fixed-length slot array with the cycle
// minimum in slot 0. Slot s of the cycle opened by m holds alpha^s(m).
class SlotState {
 public:
  struct Slot {
    int cycle;
    int index;
    friend bool operator==(const Slot&, const Slot&) = default;
  };

  explicit SlotState(int n) : where_(static_cast<std::size_t>(n) + 1, Slot{-1, -1}) {}

  void open_cycle(int element, int length) {
    std::vector<int> slots(static_cast<std::size_t>(length), 0);
    slots[0] = element;
    cycles_.push_back(std::move(slots));
    where_[static_cast<std::size_t>(element)] = {static_cast<int>(cycles_.size()) - 1, 0};
    placed_.push_back(element);
  }

  void place(int element, Slot slot) {
    at(slot) = element;
    where_[static_cast<std::size_t>(element)] = slot;
    placed_.push_back(element);
  }

  // Free slots numbered from the pivot: rightward within the pivot's cycle,
  // then later cycles, then wrapping to the first cycle.
  std::vector<Slot> free_slots_from_pivot() const {
    std::vector<Slot> order;
    const auto pivot = pivot_slot();
    if (!pivot) return order;
    const int count = static_cast<int>(cycles_.size());
    auto collect = [&](int c, int from, int to) {
      for (int s = from; s < to; ++s)
        if (cycles_[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] == 0) order.push_back({c, s});
    };
    const int pc = pivot->cycle;
    collect(pc, pivot->index + 1, length(pc));
    for (int step = 1; step < count; ++step) {
      const int c = (pc + step) % count;
      collect(c, 0, length(c));
    }
    collect(pc, 0, pivot->index + 1);
    return order;
  }

  Permutation read_permutation(int n) const {
    std::vector<int> images(static_cast<std::size_t>(n), 0);
    for (const auto& c : cycles_) {
      for (std::size_t s = 0; s < c.size(); ++s) {
        if (c[s] == 0) throw InvalidLabeling("labeled path leaves a free slot unfilled");
        images[static_cast<std::size_t>(c[s] - 1)] = c[(s + 1) % c.size()];
      }
    }
    return Permutation(std::move(images));
  }

 private:
  int length(int c) const { return static_cast<int>(cycles_[static_cast<std::size_t>(c)].size()); }
  int& at(Slot s) { return cycles_[static_cast<std::size_t>(s.cycle)][static_cast<std::size_t>(s.index)]; }

  // The smallest placed element whose next slot in its own cycle is free.
  // The wrap-around successor is slot 0, always filled, so last slots never
  // qualify.
  std::optional<Slot> pivot_slot() const {
    std::optional<Slot> best;
    int best_element = 0;
    for (int e : placed_) {
      const Slot s = where_[static_cast<std::size_t>(e)];
      const auto& c = cycles_[static_cast<std::size_t>(s.cycle)];
      const auto next = static_cast<std::size_t>(s.index + 1);
      if (next < c.size() && c[next] == 0 && (!best || e < best_element)) {
        best = s;
        best_element = e;
      }
    }
    return best;
  }

  std::vector<std::vector<int>> cycles_;
  std::vector<Slot> where_;
  std::vector<int> placed_;
};

bool preceded_by_up(const std::vector<int>& letters, std::size_t i) {
  return i > 0 && letters[i - 1] == kUp;
}

}  // namespace

bool validate_dyck(std::string_view word) {
  int height = 0;
  for (char c : word) {
    if (c == 'a') {
      ++height;
    } else if (c == 'b') {
      if (--height < 0) return false;
    } else {
      return false;
    }
  }
  return height == 0;
}

bool validate_labeling(const LabeledDyckPath& lp) {
  int height = 0;
  for (std::size_t i = 0; i < lp.letters.size(); ++i) {
    const int letter = lp.letters[i];
    if (letter == kUp) {
      ++height;
      continue;
    }
    if (letter < 0) return false;
    const bool peak = preceded_by_up(lp.letters, i);
    if (lp.scheme == LabelScheme::Delta) {
      if (peak != (letter == 0)) return false;
      if (!peak && letter > height) return false;
    } else {
      if (peak && letter != 1) return false;
      if (letter < 1 || letter > height) return false;
    }
    if (--height < 0) return false;
  }
  return height == 0;
}

std::string underlying(const LabeledDyckPath& lp) {
  std::string word;
  word.reserve(lp.letters.size());
  for (int letter : lp.letters) word.push_back(letter == kUp ? 'a' : 'b');
  return word;
}

bool is_primitive(std::string_view word) {
  if (!validate_dyck(word)) throw InvalidPath("not a Dyck path: " + std::string(word));
  if (word.empty()) return false;
  int height = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    height += word[i] == 'a' ? 1 : -1;
    if (height == 0) return false;
  }
  return true;
}

LabeledDyckPath delta(const Permutation& p) {
  const int n = p.size();
  // Orbit position of every element relative to its cycle minimum.
  std::vector<int> cycle_min(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> cycle_len(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& c : cycles(p).cycles) {
    const auto m = std::min_element(c.begin(), c.end()) - c.begin();
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int e = c[(static_cast<std::size_t>(m) + k) % c.size()];
      cycle_min[static_cast<std::size_t>(e)] = c[static_cast<std::size_t>(m)];
      offset[static_cast<std::size_t>(e)] = static_cast<int>(k);
    }
    cycle_len[static_cast<std::size_t>(c[static_cast<std::size_t>(m)])] = static_cast<int>(c.size());
  }

  LabeledDyckPath out;
  out.scheme = LabelScheme::Delta;
  SlotState state(n);
  std::vector<int> cycle_index(static_cast<std::size_t>(n) + 1, -1);
  int opened = 0;
  for (int i = 1; i <= n; ++i) {
    const int m = cycle_min[static_cast<std::size_t>(i)];
    if (m == i) {
      const int k = cycle_len[static_cast<std::size_t>(i)];
      out.letters.insert(out.letters.end(), static_cast<std::size_t>(k), kUp);
      out.letters.push_back(0);
      state.open_cycle(i, k);
      cycle_index[static_cast<std::size_t>(i)] = opened++;
      continue;
    }
    const SlotState::Slot target{cycle_index[static_cast<std::size_t>(m)], offset[static_cast<std::size_t>(i)]};
    const auto order = state.free_slots_from_pivot();
    const auto pos = std::find(order.begin(), order.end(), target);
    if (pos == order.end()) throw InternalMismatch("delta: target slot not free");
    out.letters.push_back(static_cast<int>(pos - order.begin()) + 1);
    state.place(i, target);
  }
  return out;
}

Permutation delta_inverse(const LabeledDyckPath& lp) {
  if (lp.scheme != LabelScheme::Delta) throw InvalidLabeling("delta_inverse expects a Delta-scheme labeling");
  if (!validate_labeling(lp)) throw InvalidLabeling("invalid Delta labeling: " + format_labeled(lp));
  const int n = static_cast<int>(lp.letters.size() / 2);
  SlotState state(n);
  int i = 0;
  int run = 0;
  for (int letter : lp.letters) {
    if (letter == kUp) {
      ++run;
      continue;
    }
    ++i;
    if (letter == 0) {
      state.open_cycle(i, run);
    } else {
      const auto order = state.free_slots_from_pivot();
      if (letter > static_cast<int>(order.size()))
        throw PlacementOutOfRange("label b" + std::to_string(letter) + " exceeds " +
                                  std::to_string(order.size()) + " free slots");
      state.place(i, order[static_cast<std::size_t>(letter - 1)]);
    }
    run = 0;
  }
  return state.read_permutation(n);
}

LabeledDyckPath convert_label_scheme(const LabeledDyckPath& lp) {
  if (!validate_labeling(lp)) throw InvalidLabeling("invalid labeling: " + format_labeled(lp));
  LabeledDyckPath out;
  out.scheme = lp.scheme == LabelScheme::Delta ? LabelScheme::RV : LabelScheme::Delta;
  out.letters.reserve(lp.letters.size());
  int height = 0;
  for (std::size_t i = 0; i < lp.letters.size(); ++i) {
    const int letter = lp.letters[i];
    if (letter == kUp) {
      ++height;
      out.letters.push_back(kUp);
      continue;
    }
    if (preceded_by_up(lp.letters, i))
      out.letters.push_back(out.scheme == LabelScheme::Delta ? 0 : 1);
    else
      out.letters.push_back(height + 1 - letter);
    --height;
  }
  return out;
}

void for_each_dyck_path(int n, const std::function<void(const std::string&)>& visit) {
  if (n < 0) throw InvalidArgument("semilength must be >= 0");
  std::string word;
  word.reserve(static_cast<std::size_t>(2 * n));
  auto rec = [&](auto&& self, int ups, int downs) -> void {
    if (downs == n) {
      visit(word);
      return;
    }
    if (ups < n) {
      word.push_back('a');
      self(self, ups + 1, downs);
      word.pop_back();
    }
    if (downs < ups) {
      word.push_back('b');
      self(self, ups, downs + 1);
      word.pop_back();
    }
  };
  rec(rec, 0, 0);
}

std::vector<std::string> enum_dyck_paths(int n) {
  std::vector<std::string> out;
  for_each_dyck_path(n, [&](const std::string& w) { out.push_back(w); });
  return out;
}

std::vector<LabeledDyckPath> enum_labelings(std::string_view word, LabelScheme scheme) {
  if (!validate_dyck(word)) throw InvalidPath("not a Dyck path: " + std::string(word));
  // Per-letter choice ranges; up steps and peaks have a single choice.
  std::vector<int> lo(word.size()), hi(word.size());
  int height = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == 'a') {
      lo[i] = hi[i] = kUp;
      ++height;
      continue;
    }
    if (i > 0 && word[i - 1] == 'a') {
      lo[i] = hi[i] = scheme == LabelScheme::Delta ? 0 : 1;
    } else {
      lo[i] = 1;
      hi[i] = height;
    }
    --height;
  }

  std::vector<LabeledDyckPath> out;
  LabeledDyckPath cur{lo, scheme};
  while (true) {
    out.push_back(cur);
    // Odometer increment, last letter fastest.
    std::size_t i = word.size();
    while (i > 0) {
      --i;
      if (cur.letters[i] < hi[i]) {
        ++cur.letters[i];
        break;
      }
      cur.letters[i] = lo[i];
      if (i == 0) return out;
    }
    if (word.empty()) return out;
  }
}

int count_label(const LabeledDyckPath& lp, int label) {
  return static_cast<int>(std::count(lp.letters.begin(), lp.letters.end(), label));
}

std::string format_labeled(const LabeledDyckPath& lp) {
  std::ostringstream out;
  for (std::size_t i = 0; i < lp.letters.size(); ++i) {
    if (i) out << ' ';
    if (lp.letters[i] == kUp)
      out << 'a';
    else
      out << 'b' << lp.letters[i];
  }
  return out.str();
}

namespace {

int parse_token(std::string_view tok) {
  if (tok == "a") return kUp;
  if (tok.size() >= 2 && tok[0] == 'b') {
    int label = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), label);
    if (ec == std::errc() && ptr == tok.data() + tok.size() && label >= 0) return label;
  }
  throw ParseError("bad path token '" + std::string(tok) + "'");
}

}  // namespace

LabeledDyckPath parse_labeled(std::string_view text, LabelScheme scheme) {
  LabeledDyckPath out;
  out.scheme = scheme;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end > pos) out.letters.push_back(parse_token(text.substr(pos, end - pos)));
    pos = end;
  }
  return out;
}

nlohmann::ordered_json labeled_to_json(const LabeledDyckPath& lp) {
  auto arr = nlohmann::ordered_json::array();
  for (int letter : lp.letters) arr.push_back(letter == kUp ? std::string("a") : "b" + std::to_string(letter));
  return arr;
}

LabeledDyckPath labeled_from_json(const nlohmann::ordered_json& j, LabelScheme scheme) {
  if (!j.is_array()) throw ParseError("labeled path JSON must be an array");
  LabeledDyckPath out;
  out.scheme = scheme;
  for (const auto& tok : j) {
    if (!tok.is_string()) throw ParseError("labeled path tokens must be strings");
    out.letters.push_back(parse_token(tok.get<std::string>()));
  }
  return out;
}

}  // namespace connperm
