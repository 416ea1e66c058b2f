#include "connperm/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "connperm/errors.hpp"

namespace connperm {

namespace {

void check_bijection(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw NotABijection("permutation must have size >= 1");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : images) {
    if (v < 1 || v > n)
      throw NotABijection("value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)]++)
      throw NotABijection("value " + std::to_string(v) + " appears twice");
  }
}

// Minimal cursor over the permutation grammars. Whitespace is skipped
// everywhere.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_ws();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected integer");
    if (value < 1) fail("values must be positive");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join_cycles(const std::vector<std::vector<int>>& cs) {
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ',';
      out << c[i];
    }
    out << ')';
  }
  return out.str();
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  check_bijection(images_);
}

Permutation make_unchecked(std::vector<int> images) {
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw NotABijection("permutation must have size >= 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return make_unchecked(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cs) {
  if (n < 1) throw NotABijection("permutation must have size >= 1");
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (const auto& c : cs) {
    if (c.empty()) throw NotABijection("empty cycle");
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i];
      int to = c[(i + 1) % c.size()];
      if (from < 1 || from > n)
        throw NotABijection("cycle element " + std::to_string(from) + " outside 1.." +
                            std::to_string(n));
      auto& slot = images[static_cast<std::size_t>(from - 1)];
      if (slot != 0) throw NotABijection("element " + std::to_string(from) + " repeated in cycles");
      slot = to;
    }
  }
  for (int i = 1; i <= n; ++i)
    if (images[static_cast<std::size_t>(i - 1)] == 0) images[static_cast<std::size_t>(i - 1)] = i;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation parse_permutation(std::string_view text, Notation notation) {
  Scanner s(text);
  if (notation == Notation::OneLine) {
    std::vector<int> images;
    images.push_back(s.integer());
    while (s.accept(',')) images.push_back(s.integer());
    if (!s.done()) s.fail("trailing characters");
    return Permutation(std::move(images));
  }

  std::vector<std::vector<int>> cs;
  int max_value = 0;
  std::size_t total = 0;
  while (!s.done()) {
    s.expect('(');
    std::vector<int> c{s.integer()};
    while (s.accept(',')) c.push_back(s.integer());
    s.expect(')');
    max_value = std::max(max_value, *std::max_element(c.begin(), c.end()));
    total += c.size();
    cs.push_back(std::move(c));
  }
  if (cs.empty()) s.fail("expected at least one cycle");
  // Fixed points must be written out: every element of 1..max appears.
  if (total != static_cast<std::size_t>(max_value))
    throw NotABijection("cycle notation must mention every element of 1.." +
                        std::to_string(max_value));
  return Permutation::from_cycles(max_value, cs);
}

std::string format_cycle_form(const CycleForm& form) { return join_cycles(form.cycles); }

std::string format_permutation(const Permutation& p, Notation notation) {
  if (notation == Notation::Cycle) return format_cycle_form(cycles(p));
  std::ostringstream out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out << ',';
    out << p(i);
  }
  return out.str();
}

std::string format_cycles_min_first(const Permutation& p) {
  std::vector<std::vector<int>> cs;
  std::vector<char> seen(static_cast<std::size_t>(p.size()) + 1, 0);
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> c;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
      c.push_back(x);
    }
    cs.push_back(std::move(c));
  }
  return join_cycles(cs);
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw SizeMismatch("compose: sizes " + std::to_string(a.size()) + " and " +
                       std::to_string(b.size()));
  std::vector<int> images(static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) images[static_cast<std::size_t>(i - 1)] = a(b(i));
  return make_unchecked(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) images[static_cast<std::size_t>(p(i) - 1)] = i;
  return make_unchecked(std::move(images));
}

CycleForm cycles(const Permutation& p) {
  CycleForm form;
  form.canonical = true;
  std::vector<char> seen(static_cast<std::size_t>(p.size()) + 1, 0);
  // Scanning starts from the largest unseen element of each cycle by walking
  // candidates downward; the first time we meet a cycle is at its maximum.
  for (int start = p.size(); start >= 1; --start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> c;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
      c.push_back(x);
    }
    form.cycles.push_back(std::move(c));
  }
  std::reverse(form.cycles.begin(), form.cycles.end());
  return form;
}

int cycle_count(const Permutation& p) {
  int count = 0;
  std::vector<char> seen(static_cast<std::size_t>(p.size()) + 1, 0);
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++count;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = p(x)) seen[static_cast<std::size_t>(x)] = 1;
  }
  return count;
}

int fixed_point_count(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) count += p(i) == i;
  return count;
}

std::vector<int> lr_maxima(const Permutation& p) {
  std::vector<int> out;
  int best = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) > best) {
      best = p(i);
      out.push_back(i);
    }
  }
  return out;
}

std::vector<int> rl_minima(const Permutation& p) {
  std::vector<int> out;
  int best = p.size() + 1;
  for (int i = p.size(); i >= 1; --i) {
    if (p(i) < best) {
      best = p(i);
      out.push_back(i);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

// Lengths of the maximal indecomposable blocks, left to right.
std::vector<int> block_lengths(const Permutation& p) {
  std::vector<int> lengths;
  int running_max = 0;
  int start = 0;
  for (int i = 1; i <= p.size(); ++i) {
    running_max = std::max(running_max, p(i));
    if (running_max == i) {
      lengths.push_back(i - start);
      start = i;
    }
  }
  return lengths;
}

}  // namespace

bool is_indecomposable(const Permutation& p) {
  int running_max = 0;
  for (int i = 1; i < p.size(); ++i) {
    running_max = std::max(running_max, p(i));
    if (running_max == i) return false;
  }
  return true;
}

std::vector<Permutation> blocks(const Permutation& p) {
  std::vector<Permutation> out;
  int offset = 0;
  for (int len : block_lengths(p)) {
    std::vector<int> images(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i) images[static_cast<std::size_t>(i - 1)] = p(offset + i) - offset;
    out.push_back(make_unchecked(std::move(images)));
    offset += len;
  }
  return out;
}

Permutation concat_blocks(std::span<const Permutation> bs) {
  if (bs.empty()) throw EmptyInput("concat_blocks needs at least one block");
  std::vector<int> images;
  int offset = 0;
  for (const auto& b : bs) {
    for (int v : b.images()) images.push_back(v + offset);
    offset += b.size();
  }
  return make_unchecked(std::move(images));
}

Permutation fundamental_transform(const Permutation& p) {
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(p.size()));
  for (const auto& c : cycles(p).cycles) seq.insert(seq.end(), c.begin(), c.end());
  return make_unchecked(std::move(seq));
}

Permutation fundamental_transform_inverse(const Permutation& p) {
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  const auto maxima = lr_maxima(p);
  for (std::size_t k = 0; k < maxima.size(); ++k) {
    const int first = maxima[k];
    const int last = k + 1 < maxima.size() ? maxima[k + 1] - 1 : p.size();
    for (int i = first; i <= last; ++i) {
      const int next = i < last ? p(i + 1) : p(first);
      images[static_cast<std::size_t>(p(i) - 1)] = next;
    }
  }
  return make_unchecked(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& phi) {
  if (p.size() != phi.size())
    throw SizeMismatch("conjugate: sizes " + std::to_string(p.size()) + " and " +
                       std::to_string(phi.size()));
  return compose(inverse(phi), compose(p, phi));
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  for (const auto& c : cycles(p).cycles) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace connperm
