#include "connperm/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "connperm/dyck.hpp"
#include "connperm/enumpoly.hpp"
#include "connperm/errors.hpp"
#include "connperm/hypermap.hpp"
#include "connperm/maps.hpp"

namespace connperm {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void check_limit(int n, int limit, const char* what) {
  if (n > limit)
    throw LimitExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds limit " +
                        std::to_string(limit));
}

unsigned resolve_workers(unsigned requested, std::size_t jobs) {
  unsigned w = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(jobs, 1)));
}

// Runs work(begin, end, worker) over [0, jobs) in contiguous chunks.
template <typename Work>
void parallel_chunks(std::size_t jobs, unsigned workers, Work&& work) {
  workers = resolve_workers(workers, jobs);
  std::vector<std::thread> pool;
  const std::size_t chunk = (jobs + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(jobs, w * chunk);
    const std::size_t end = std::min(jobs, begin + chunk);
    pool.emplace_back([&, begin, end, w] { work(begin, end, w); });
  }
  for (auto& t : pool) t.join();
}

std::string one_line(const Permutation& p) { return format_permutation(p, Notation::OneLine); }

}  // namespace

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  if (n < 1) throw InvalidArgument("for_each_permutation: n must be >= 1");
  std::vector<int> images(idx(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    visit(make_unchecked(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

std::vector<Permutation> enum_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

void for_each_fpf_involution(int size, const std::function<void(const Permutation&)>& visit) {
  if (size < 2 || size % 2 != 0) throw InvalidArgument("fixed-point-free involutions need even size >= 2");
  std::vector<int> images(idx(size), 0);
  auto rec = [&](auto&& self) -> void {
    auto first = std::find(images.begin(), images.end(), 0);
    if (first == images.end()) {
      visit(make_unchecked(images));
      return;
    }
    const int a = static_cast<int>(first - images.begin()) + 1;
    for (int b = a + 1; b <= size; ++b) {
      if (images[idx(b - 1)] != 0) continue;
      images[idx(a - 1)] = b;
      images[idx(b - 1)] = a;
      self(self);
      images[idx(a - 1)] = 0;
      images[idx(b - 1)] = 0;
    }
  };
  rec(rec);
}

std::vector<Permutation> enum_fpf_involutions(int size) {
  std::vector<Permutation> out;
  for_each_fpf_involution(size, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

int StatKey::get(Stat s) const {
  switch (s) {
    case Stat::Cycles:
      return cycles;
    case Stat::LrMaxima:
      return lr_maxima;
    case Stat::RlMinima:
      return rl_minima;
    case Stat::LrMinima:
      return lr_minima;
  }
  return 0;
}

BigInt DistributionTable::total() const {
  BigInt t = 0;
  for (const auto& [k, v] : entries) t += v;
  return t;
}

BigInt DistributionTable::indecomposable_total() const {
  BigInt t = 0;
  for (const auto& [k, v] : entries)
    if (k.indecomposable) t += v;
  return t;
}

BivariatePoly DistributionTable::marginal(Stat first, Stat second, bool indecomposable_only) const {
  BivariatePoly out;
  for (const auto& [k, v] : entries)
    if (!indecomposable_only || k.indecomposable) out.add_term(k.get(first), k.get(second), v);
  return out;
}

std::vector<BigInt> DistributionTable::marginal(Stat stat, bool indecomposable_only) const {
  std::vector<BigInt> out(idx(n) + 1);
  for (const auto& [k, v] : entries)
    if (!indecomposable_only || k.indecomposable) out[idx(k.get(stat))] += v;
  return out;
}

DistributionTable joint_distribution(int n, int limit) {
  check_limit(n, limit, "joint_distribution");
  std::map<StatKey, long long> counts;
  for_each_permutation(n, [&](const Permutation& p) {
    int lr_min = 0;
    for (int i = 1, low = n + 1; i <= n; ++i)
      if (p(i) < low) low = p(i), ++lr_min;
    StatKey key{cycle_count(p), static_cast<int>(lr_maxima(p).size()), static_cast<int>(rl_minima(p).size()), lr_min,
                is_indecomposable(p)};
    ++counts[key];
  });
  DistributionTable table;
  table.n = n;
  for (const auto& [k, v] : counts) table.entries.emplace(k, BigInt(v));
  return table;
}

BigInt count_transitive_pairs(int n, int limit, unsigned workers) {
  check_limit(n, limit, "count_transitive_pairs");
  const auto perms = enum_permutations(n);
  std::vector<long long> partial(resolve_workers(workers, perms.size()), 0);
  parallel_chunks(perms.size(), static_cast<unsigned>(partial.size()),
                  [&](std::size_t begin, std::size_t end, unsigned w) {
                    long long count = 0;
                    for (std::size_t s = begin; s < end; ++s)
                      for (const auto& a : perms) count += is_transitive(PermPair(perms[s], a));
                    partial[w] = count;
                  });
  return BigInt(std::accumulate(partial.begin(), partial.end(), 0LL));
}

namespace {

HypermapCensus census_impl(int n, unsigned workers, detail::CanonFaults faults) {
  const auto perms = enum_permutations(n);
  struct Partial {
    long long labeled = 0;
    long long image_form = 0;
    std::set<PermPair> forms;
  };
  std::vector<Partial> partial(resolve_workers(workers, perms.size()));
  parallel_chunks(perms.size(), static_cast<unsigned>(partial.size()),
                  [&](std::size_t begin, std::size_t end, unsigned w) {
                    auto& out = partial[w];
                    for (std::size_t s = begin; s < end; ++s) {
                      for (const auto& a : perms) {
                        PermPair pp(perms[s], a);
                        if (!is_transitive(pp)) continue;
                        ++out.labeled;
                        out.image_form += satisfies_lemma1(pp);
                        const Hypermap h = make_hypermap_unchecked(std::move(pp));
                        out.forms.insert(detail::canonical_rooted_form(h, faults).hypermap.pair());
                      }
                    }
                  });
  HypermapCensus census;
  census.n = n;
  std::set<PermPair> forms;
  long long labeled = 0, image_form = 0;
  for (auto& p : partial) {
    labeled += p.labeled;
    image_form += p.image_form;
    forms.merge(p.forms);
  }
  census.labeled = labeled;
  census.image_form_pairs = image_form;
  census.rooted = forms.size();
  for (const auto& f : forms) census.by_edges_vertices.add_term(cycle_count(f.alpha), cycle_count(f.sigma), 1);
  return census;
}

}  // namespace

HypermapCensus hypermap_census(int n, int limit, unsigned workers) {
  check_limit(n, limit, "hypermap_census");
  return census_impl(n, workers, {});
}

Fault parse_fault(const std::string& name) {
  if (name == "none") return Fault::None;
  if (name == "skip-rotation") return Fault::SkipRotation;
  if (name == "singleton-weight-x") return Fault::SingletonWeightX;
  throw InvalidArgument("unknown fault '" + name + "' (none, skip-rotation, singleton-weight-x)");
}

std::string fault_name(Fault f) {
  switch (f) {
    case Fault::None:
      return "none";
    case Fault::SkipRotation:
      return "skip-rotation";
    case Fault::SingletonWeightX:
      return "singleton-weight-x";
  }
  return "none";
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

nlohmann::ordered_json VerifyReport::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j{{"check", c.check}, {"status", c.passed ? "pass" : "fail"}};
    if (c.witness) j["witness"] = *c.witness;
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.check;
    if (c.witness) out << "  witness: " << *c.witness;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
  }
  out << (all_passed() ? "all checks passed" : "some checks failed") << '\n';
  return out.str();
}

namespace {

// Keeps only the first failure of a check; callers enumerate instances in
// increasing size and lexicographic order, so that failure is the minimal
// witness.
class Check {
 public:
  explicit Check(std::string name) { result_.check = std::move(name); }

  bool failed() const { return !result_.passed; }

  void expect(bool ok, const std::string& witness, const std::string& detail) {
    if (ok || failed()) return;
    result_.passed = false;
    result_.witness = witness;
    result_.detail = detail;
  }

  template <typename Body>
  CheckResult run(Body&& body) && {
    try {
      body(*this);
    } catch (const std::exception& e) {
      if (!failed()) {
        result_.passed = false;
        result_.detail = std::string("exception: ") + e.what();
      }
    }
    return std::move(result_);
  }

 private:
  CheckResult result_;
};

// Stops a for_each enumeration early once a check has failed.
struct StopEnumeration {};

template <typename Fn>
void scan_perms(int n, Check& c, Fn&& fn) {
  try {
    for_each_permutation(n, [&](const Permutation& p) {
      fn(p);
      if (c.failed()) throw StopEnumeration{};
    });
  } catch (const StopEnumeration&) {
  }
}

int fpf_limit(int max_n) {
  int limit = std::min(10, max_n + 3);
  return limit - limit % 2;
}

}  // namespace

VerifyReport verify_suite(const VerifyOptions& opt) {
  const int max_n = opt.max_n;
  if (max_n < 1) throw InvalidArgument("verify: max_n must be >= 1");
  detail::CanonFaults canon_faults;
  canon_faults.skip_rotation = opt.fault == Fault::SkipRotation;

  std::vector<DistributionTable> tables(idx(max_n) + 1);
  for (int n = 1; n <= max_n; ++n) tables[idx(n)] = joint_distribution(n, std::max(max_n, kDefaultPermLimit));

  VerifyReport report;

  report.checks.push_back(Check("indecomposable-counts").run([&](Check& c) {
    for (int n = 1; n <= max_n && !c.failed(); ++n) {
      const BigInt rec = c_count(n);
      const BigInt brute = tables[idx(n)].indecomposable_total();
      c.expect(rec == brute, "n=" + std::to_string(n),
               "recurrence " + to_string(rec) + ", exhaustive " + to_string(brute));
    }
  }));

  report.checks.push_back(Check("indecomposable-stirling").run([&](Check& c) {
    for (int n = 2; n <= max_n && !c.failed(); ++n) {
      const auto brute = tables[idx(n)].marginal(Stat::Cycles, true);
      const auto poly = c_poly(n);
      for (int k = 1; k <= n && !c.failed(); ++k) {
        const BigInt formula = c_count_by_cycles(n, k);
        c.expect(formula == brute[idx(k)] && poly.coeff(k, 0) == formula,
                 "n=" + std::to_string(n) + " k=" + std::to_string(k),
                 "formula " + to_string(formula) + ", exhaustive " + to_string(brute[idx(k)]));
      }
    }
  }));

  report.checks.push_back(Check("fundamental-transform").run([&](Check& c) {
    for (int n = 1; n <= max_n && !c.failed(); ++n) {
      scan_perms(n, c, [&](const Permutation& p) {
        const auto t = fundamental_transform(p);
        c.expect(cycle_count(p) == static_cast<int>(lr_maxima(t).size()), one_line(p),
                 "cycles differ from left-to-right maxima of the transform");
        c.expect(is_indecomposable(p) == is_indecomposable(t), one_line(p), "indecomposability not preserved");
        c.expect(is_indecomposable(p) == is_indecomposable(inverse(p)), one_line(p),
                 "inverse changes indecomposability");
        c.expect(fundamental_transform_inverse(t) == p, one_line(p), "inverse transform does not round trip");
      });
    }
  }));

  report.checks.push_back(Check("psi-round-trip").run([&](Check& c) {
    for (int size = 2; size <= max_n + 1 && !c.failed(); ++size) {
      scan_perms(size, c, [&](const Permutation& theta) {
        if (!is_indecomposable(theta)) return;
        const Hypermap h = psi(theta);
        c.expect(is_transitive(h.pair()), one_line(theta), "psi image not transitive");
        c.expect(h.edge_count() == cycle_count(theta), one_line(theta), "alpha cycles differ from theta cycles");
        c.expect(h.vertex_count() == static_cast<int>(lr_maxima(theta).size()), one_line(theta),
                 "sigma cycles differ from left-to-right maxima");
        c.expect(satisfies_lemma1(h.pair()), one_line(theta), "psi image fails the image characterization");
        const auto back = detail::psi_inverse(h, canon_faults);
        c.expect(back == theta, one_line(theta), "psi_inverse returned " + one_line(back));
      });
    }
  }));

  report.checks.push_back(Check("hypermap-census").run([&](Check& c) {
    for (int n = 1; n <= std::min(max_n, opt.max_pair_n) && !c.failed(); ++n) {
      // Per-pair scan first so a broken canonicalization names a concrete
      // smallest hypermap rather than just a size.
      const auto perms = enum_permutations(n);
      for (const auto& s : perms) {
        for (const auto& a : perms) {
          PermPair pp(s, a);
          if (!is_transitive(pp)) continue;
          const Hypermap h = make_hypermap_unchecked(pp);
          const Hypermap cf = detail::canonical_rooted_form(h, canon_faults).hypermap;
          const auto w = format_hypermap(pp);
          c.expect(satisfies_lemma1(cf.pair()), w, "canonical form " + format_hypermap(cf.pair()) + " is not in image form");
          c.expect(detail::canonical_rooted_form(cf, canon_faults).hypermap == cf, w, "canonical form not idempotent");
          if (c.failed()) return;
        }
      }
      const auto census = census_impl(n, opt.workers, canon_faults);
      const BigInt c_next = c_count(n + 1);
      const std::string w = "darts=" + std::to_string(n);
      c.expect(census.labeled == factorial(n - 1) * c_next, w,
               "labeled " + to_string(census.labeled) + " != (n-1)! c_{n+1}");
      c.expect(census.rooted == c_next, w, "rooted " + to_string(census.rooted) + " != c_{n+1}");
      c.expect(census.image_form_pairs == c_next, w, "image-form pairs " + to_string(census.image_form_pairs));
      c.expect(census.by_edges_vertices == L_family(n + 1).primitive, w,
               "rooted forms by (edges, vertices) differ from L'_{n+1}");
    }
  }));

  report.checks.push_back(Check("delta").run([&](Check& c) {
    for (int n = 1; n <= max_n && !c.failed(); ++n) {
      scan_perms(n, c, [&](const Permutation& p) {
        const auto f = delta(p);
        const auto w = one_line(p);
        c.expect(validate_labeling(f), w, "invalid labeling " + format_labeled(f));
        c.expect(delta_inverse(f) == p, w, "delta_inverse does not round trip");
        c.expect(count_label(f, 0) == cycle_count(p), w, "#b0 != cycles");
        c.expect(is_primitive(underlying(f)) == is_indecomposable(p), w, "primitivity != indecomposability");
        const int b1 = count_label(f, 1);
        const int maxima = static_cast<int>(lr_maxima(p).size());
        if (n >= 2 && is_indecomposable(p)) c.expect(b1 == maxima, w, "#b1 != left-to-right maxima");
        c.expect(b1 <= maxima && maxima <= b1 + fixed_point_count(p), w, "fixed-point bound violated");
      });
      if (c.failed()) break;
      long long primitive_labelings = 0;
      for_each_dyck_path(n, [&](const std::string& word) {
        if (is_primitive(word)) primitive_labelings += static_cast<long long>(enum_labelings(word, LabelScheme::Delta).size());
      });
      c.expect(BigInt(primitive_labelings) == c_count(n), "n=" + std::to_string(n),
               "primitive labeled paths " + std::to_string(primitive_labelings) + " != c_n");
    }
  }));

  report.checks.push_back(Check("label-scheme-conversion").run([&](Check& c) {
    for (int n = 1; n <= std::min(max_n, 5) && !c.failed(); ++n) {
      for (const auto& word : enum_dyck_paths(n)) {
        const auto delta_labels = enum_labelings(word, LabelScheme::Delta);
        const auto rv_labels = enum_labelings(word, LabelScheme::RV);
        c.expect(delta_labels.size() == rv_labels.size(), word, "scheme labeling counts differ");
        for (const auto& lp : delta_labels) {
          const auto rv = convert_label_scheme(lp);
          c.expect(validate_labeling(rv) && underlying(rv) == word, format_labeled(lp), "converted path invalid");
          c.expect(convert_label_scheme(rv) == lp, format_labeled(lp), "conversion is not an involution");
        }
        if (c.failed()) return;
      }
    }
  }));

  report.checks.push_back(Check("L-family").run([&](Check& c) {
    for (int n = 1; n <= max_n + 1 && !c.failed(); ++n) {
      const auto fam = L_family(n);
      const std::string w = "n=" + std::to_string(n);
      if (n >= 2) c.expect(fam.primitive == fam.primitive.swap_xy(), w, "L'_n not symmetric");
      if (n > max_n) break;
      c.expect(fam.all.eval(1, 1) == factorial(n), w, "L_n(1,1) != n!");
      c.expect(fam.primitive.eval(1, 1) == c_count(n), w, "L'_n(1,1) != c_n");
      c.expect(fam.primitive.at_y_one() == c_poly(n), w, "L'_n(x,1) != C_n(x)");
      if (n >= 2)
        c.expect(fam.primitive == tables[idx(n)].marginal(Stat::Cycles, Stat::LrMaxima, true), w,
                 "L'_n differs from exhaustive (cycles, maxima) counts of indecomposables");
    }
  }));

  report.checks.push_back(Check("joint-perm-poly").run([&](Check& c) {
    const auto weight = opt.fault == Fault::SingletonWeightX ? BivariatePoly::x()
                                                             : BivariatePoly::x() * BivariatePoly::y();
    for (int n = 1; n <= max_n && !c.failed(); ++n) {
      const auto& t = tables[idx(n)];
      const auto series = detail::joint_perm_poly(n, weight);
      const auto brute = t.marginal(Stat::Cycles, Stat::LrMaxima);
      const std::string w = "n=" + std::to_string(n);
      c.expect(series == brute, w, "series gives " + series.to_string() + ", exhaustive " + brute.to_string());
      c.expect(brute == brute.swap_xy(), w, "(cycles, maxima) table not symmetric");
      c.expect(t.marginal(Stat::LrMaxima, Stat::Cycles) == t.marginal(Stat::LrMaxima, Stat::RlMinima), w,
               "(maxima, cycles) differs from (maxima, right-to-left minima)");
    }
  }));

  report.checks.push_back(Check("phi-bijection").run([&](Check& c) {
    for (int n = 1; n <= max_n && !c.failed(); ++n) {
      std::set<Permutation> images;
      scan_perms(n, c, [&](const Permutation& p) {
        const auto q = phi_bijection(p);
        c.expect(cycle_count(q) == static_cast<int>(lr_maxima(p).size()) &&
                     static_cast<int>(lr_maxima(q).size()) == cycle_count(p),
                 one_line(p), "statistics not exchanged");
        c.expect(images.insert(q).second, one_line(p), "image " + one_line(q) + " repeated");
      });
    }
  }));

  report.checks.push_back(Check("maps").run([&](Check& c) {
    for (int size = 4; size <= fpf_limit(max_n) && !c.failed(); size += 2) {
      const int m = size / 2 - 1;  // edges of the image maps
      std::set<RootedMap> images;
      BivariatePoly vertices;
      for_each_fpf_involution(size, [&](const Permutation& theta) {
        if (c.failed() || !is_indecomposable(theta)) return;
        const auto map = psi_prime(theta);
        c.expect(map.vertex_count() == static_cast<int>(lr_maxima(theta).size()), one_line(theta),
                 "vertices != left-to-right maxima");
        c.expect(psi_prime_inverse(map) == theta, one_line(theta), "psi_prime does not round trip");
        images.insert(map);
        vertices.add_term(0, map.vertex_count(), 1);
      });
      if (c.failed()) break;
      const std::string w = "edges=" + std::to_string(m);
      c.expect(BigInt(images.size()) == i_count(m + 1), w, "distinct images != i_{m+1}");
      c.expect(vertices == M_family(m + 1).primitive, w, "vertex counts differ from M'_{m+1}");
    }
    for (int m = 1; 2 * m <= fpf_limit(max_n) && !c.failed(); ++m) {
      for_each_fpf_involution(2 * m, [&](const Permutation& theta) {
        if (c.failed()) return;
        const auto f = delta(theta);
        int factors = 0;
        for (std::size_t i = 2; i < f.letters.size(); ++i)
          factors += f.letters[i] == 0 && f.letters[i - 1] == kUp && f.letters[i - 2] == kUp;
        c.expect(static_cast<int>(f.letters.size()) == 4 * m && factors == m, one_line(theta),
                 "involution path is not of length 4m with m factors aab0");
      });
    }
    for (int m = 1; m <= max_n && !c.failed(); ++m) {
      const auto fam = M_family(m);
      c.expect(fam.primitive.eval(1, 1) == i_count(m), "m=" + std::to_string(m), "M'_m(1) != i_m");
      c.expect(fam.all.eval(1, 1) == double_factorial_odd(m), "m=" + std::to_string(m), "M_m(1) != (2m-1)!!");
    }
  }));

  report.checks.push_back(Check("arques-beraud").run([&](Check& c) {
    const auto residual = arques_beraud_check(max_n - 1);
    for (int m = 0; m <= residual.order(); ++m)
      c.expect(residual[m].is_zero(), "z^" + std::to_string(m), "residual " + residual[m].to_string());
  }));

  return report;
}

}  // namespace connperm
