#include "connperm/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "connperm/dyck.hpp"
#include "connperm/enumpoly.hpp"
#include "connperm/errors.hpp"
#include "connperm/hypermap.hpp"
#include "connperm/maps.hpp"
#include "connperm/oracle.hpp"

namespace connperm {

namespace {

enum class Format { Plain, Json, Csv };

struct Options {
  std::string kind;
  std::string format = "plain";
  int n = 0;
  int m = 0;
  int k = 0;
  int v = 0;
  int max_n = 7;
  int max_pair_n = kDefaultPairLimit;
  int limit = 0;  // 0 means the command's default
  unsigned workers = 0;
  std::string perm, sigma, alpha, path;
  std::string fault = "none";
  std::string scheme = "delta";
  bool labeled = false;
  bool brute = false;
};

// Usage errors detected after CLI11 has accepted the syntax.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Runner {
 public:
  Runner(const Options& o, const CLI::App& sub, std::ostream& out)
      : o_(o), sub_(sub), out_(out), format_(format_of(o.format)) {}

  int count();
  int table();
  int bij();
  int poly();
  int prob();
  int verify();

 private:
  static Format format_of(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    return Format::Plain;
  }

  bool given(const std::string& flag) const { return sub_.get_option(flag)->count() > 0; }

  void require(const std::string& flag) const {
    if (!given(flag)) throw UsageError(sub_.get_name() + " " + o_.kind + " requires " + flag);
  }

  void reject_csv() const {
    if (format_ == Format::Csv) throw UsageError("csv output is not available for " + sub_.get_name());
  }

  int limit_or(int fallback) const { return o_.limit > 0 ? o_.limit : fallback; }

  static void guard(int value, int limit, const std::string& what) {
    if (value > limit)
      throw LimitExceeded(what + ": size " + std::to_string(value) + " exceeds limit " + std::to_string(limit) +
                          " (raise with --limit)");
  }

  void emit_count(const std::vector<std::pair<std::string, int>>& keys, const BigInt& value);
  void emit_poly(const BivariatePoly& p);
  void emit_perm(const Permutation& p, Notation notation);

  const Options& o_;
  const CLI::App& sub_;
  std::ostream& out_;
  Format format_;
};

void Runner::emit_count(const std::vector<std::pair<std::string, int>>& keys, const BigInt& value) {
  switch (format_) {
    case Format::Plain:
      out_ << value << '\n';
      break;
    case Format::Json: {
      nlohmann::ordered_json j{{"count", o_.kind}};
      for (const auto& [k, v] : keys) j[k] = v;
      j["value"] = to_string(value);
      out_ << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      for (const auto& [k, v] : keys) out_ << k << ',';
      out_ << "value\n";
      for (const auto& [k, v] : keys) out_ << v << ',';
      out_ << value << '\n';
      break;
  }
}

void Runner::emit_poly(const BivariatePoly& p) {
  switch (format_) {
    case Format::Plain:
      out_ << p.to_string() << '\n';
      break;
    case Format::Json:
      out_ << p.to_json().dump() << '\n';
      break;
    case Format::Csv:
      out_ << "p,q,value\n";
      for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out_ << it->first.first << ',' << it->first.second << ',' << it->second << '\n';
      break;
  }
}

void Runner::emit_perm(const Permutation& p, Notation notation) {
  if (format_ == Format::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (int i = 1; i <= p.size(); ++i) arr.push_back(p(i));
    out_ << arr.dump() << '\n';
  } else {
    out_ << format_permutation(p, notation) << '\n';
  }
}

Permutation parse_any(const std::string& text) {
  const bool cyc = text.find('(') != std::string::npos;
  return parse_permutation(text, cyc ? Notation::Cycle : Notation::OneLine);
}

LabelScheme scheme_of(const std::string& s) { return s == "rv" ? LabelScheme::RV : LabelScheme::Delta; }

// Rows k = 1..n-1 (k = 1 alone for n = 1); c_{n,n} vanishes for n >= 2.
int last_k(int n) { return std::max(1, n - 1); }

int Runner::count() {
  const int poly_limit = limit_or(kDefaultPolyLimit);
  if (o_.kind == "indecomposable") {
    require("--n");
    if (o_.brute) {
      emit_count({{"n", o_.n}}, joint_distribution(o_.n, limit_or(kDefaultPermLimit)).indecomposable_total());
    } else {
      guard(o_.n, poly_limit, "count indecomposable");
      emit_count({{"n", o_.n}}, c_count(o_.n));
    }
  } else if (o_.kind == "hypermaps") {
    require("--n");
    BigInt value;
    if (o_.brute) {
      const auto census = hypermap_census(o_.n, limit_or(kDefaultPairLimit), o_.workers);
      value = o_.labeled ? census.labeled : census.rooted;
    } else {
      guard(o_.n, poly_limit, "count hypermaps");
      value = c_count(o_.n + 1);
      if (o_.labeled) value *= factorial(o_.n - 1);
    }
    emit_count({{"n", o_.n}}, value);
  } else if (o_.kind == "maps") {
    require("--m");
    guard(o_.m, poly_limit, "count maps");
    if (given("--v"))
      emit_count({{"m", o_.m}, {"v", o_.v}}, map_count_by_vertices(o_.m, o_.v));
    else
      emit_count({{"m", o_.m}}, map_count(o_.m));
  } else {  // stirling-indec
    require("--n");
    guard(o_.n, poly_limit, "count stirling-indec");
    if (given("--k")) {
      emit_count({{"n", o_.n}, {"k", o_.k}}, c_count_by_cycles(o_.n, o_.k));
      return kExitOk;
    }
    const auto row = c_poly(o_.n);
    if (format_ == Format::Csv) out_ << "n,k,value\n";
    auto arr = nlohmann::ordered_json::array();
    for (int k = 1; k <= last_k(o_.n); ++k) {
      const BigInt c = row.coeff(k, 0);
      if (format_ == Format::Plain) out_ << (k > 1 ? " " : "") << c;
      if (format_ == Format::Csv) out_ << o_.n << ',' << k << ',' << c << '\n';
      arr.push_back(to_string(c));
    }
    if (format_ == Format::Plain) out_ << '\n';
    if (format_ == Format::Json) out_ << nlohmann::ordered_json{{"count", o_.kind}, {"n", o_.n}, {"values", arr}}.dump() << '\n';
  }
  return kExitOk;
}

int Runner::table() {
  if (o_.kind == "stirling-indec") {
    guard(o_.max_n, limit_or(kDefaultPolyLimit), "table stirling-indec");
    auto arr = nlohmann::ordered_json::array();
    if (format_ == Format::Csv) out_ << "n,k,value\n";
    for (int n = 1; n <= o_.max_n; ++n) {
      const auto row = c_poly(n);
      for (int k = 1; k <= last_k(n); ++k) {
        const BigInt c = row.coeff(k, 0);
        if (format_ == Format::Plain) out_ << (k > 1 ? " " : "") << c;
        if (format_ == Format::Csv) out_ << n << ',' << k << ',' << c << '\n';
        arr.push_back({{"n", n}, {"k", k}, {"value", to_string(c)}});
      }
      if (format_ == Format::Plain) out_ << '\n';
    }
    if (format_ == Format::Json) out_ << arr.dump() << '\n';
    return kExitOk;
  }
  // joint: permutations of size n by (cycles, left-to-right maxima)
  auto arr = nlohmann::ordered_json::array();
  if (format_ == Format::Csv) out_ << "n,p,q,value\n";
  for (int n = 1; n <= o_.max_n; ++n) {
    BivariatePoly p;
    if (o_.brute) {
      p = joint_distribution(n, limit_or(kDefaultPermLimit)).marginal(Stat::Cycles, Stat::LrMaxima);
    } else {
      guard(n, limit_or(kDefaultPolyLimit), "table joint");
      p = joint_perm_poly(n);
    }
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      const auto [px, qy] = it->first;
      if (format_ == Format::Plain) out_ << n << ' ' << px << ' ' << qy << ' ' << it->second << '\n';
      if (format_ == Format::Csv) out_ << n << ',' << px << ',' << qy << ',' << it->second << '\n';
      arr.push_back({{"n", n}, {"p", px}, {"q", qy}, {"value", to_string(it->second)}});
    }
  }
  if (format_ == Format::Json) out_ << arr.dump() << '\n';
  return kExitOk;
}

int Runner::bij() {
  reject_csv();
  const std::string& kind = o_.kind;
  const bool json = format_ == Format::Json;
  if (kind == "omr-inv") {
    require("--sigma");
    require("--alpha");
    const PermPair pp(parse_permutation(o_.sigma, Notation::Cycle), parse_permutation(o_.alpha, Notation::Cycle));
    emit_perm(psi_inverse(make_hypermap(pp)), Notation::OneLine);
    return kExitOk;
  }
  if (kind == "delta-inv") {
    require("--path");
    const auto lp = parse_labeled(o_.path, scheme_of(o_.scheme));
    emit_perm(delta_inverse(lp.scheme == LabelScheme::Delta ? lp : convert_label_scheme(lp)), Notation::OneLine);
    return kExitOk;
  }
  require("--perm");
  const Permutation p = parse_any(o_.perm);
  if (kind == "omr") {
    const Hypermap h = psi(p);
    if (json)
      out_ << hypermap_to_json(h.pair()).dump() << '\n';
    else
      out_ << format_hypermap(h.pair()) << '\n';
  } else if (kind == "psi-prime") {
    const RootedMap map = psi_prime(p);
    if (json)
      out_ << map_to_json(map).dump() << '\n';
    else
      out_ << format_map(map) << '\n';
  } else if (kind == "fft") {
    emit_perm(fundamental_transform(p), Notation::OneLine);
  } else if (kind == "fft-inv") {
    emit_perm(fundamental_transform_inverse(p), Notation::Cycle);
  } else if (kind == "phi") {
    emit_perm(phi_bijection(p), Notation::OneLine);
  } else {  // delta
    auto lp = delta(p);
    if (scheme_of(o_.scheme) == LabelScheme::RV) lp = convert_label_scheme(lp);
    if (json)
      out_ << labeled_to_json(lp).dump() << '\n';
    else
      out_ << format_labeled(lp) << '\n';
  }
  return kExitOk;
}

int Runner::poly() {
  const std::string& kind = o_.kind;
  const bool by_m = kind == "M" || kind == "Mprime";
  const std::string flag = by_m ? "--m" : "--n";
  require(flag);
  const int size = by_m ? o_.m : o_.n;
  guard(size, limit_or(kDefaultPolyLimit), "poly " + kind);
  if (kind == "A")
    emit_poly(stirling_poly(size));
  else if (kind == "C")
    emit_poly(c_poly(size));
  else if (kind == "L")
    emit_poly(L_family(size).all);
  else if (kind == "Lprime")
    emit_poly(L_family(size).primitive);
  else if (kind == "M")
    emit_poly(M_family(size).all);
  else
    emit_poly(M_family(size).primitive);
  return kExitOk;
}

int Runner::prob() {
  require("--n");
  BigRational value;
  if (o_.brute) {
    const BigInt f = factorial(o_.n);
    value = BigRational(count_transitive_pairs(o_.n, limit_or(kDefaultPairLimit), o_.workers), f * f);
  } else {
    guard(o_.n, limit_or(kDefaultPolyLimit), "prob transitive");
    value = transitive_probability(o_.n);
  }
  switch (format_) {
    case Format::Plain:
      out_ << to_string(value) << '\n';
      break;
    case Format::Json:
      out_ << nlohmann::ordered_json{{"n", o_.n}, {"probability", to_string(value)}}.dump() << '\n';
      break;
    case Format::Csv:
      out_ << "n,numerator,denominator\n"
           << o_.n << ',' << boost::multiprecision::numerator(value) << ','
           << boost::multiprecision::denominator(value) << '\n';
      break;
  }
  return kExitOk;
}

int Runner::verify() {
  reject_csv();
  VerifyOptions opt;
  opt.max_n = o_.max_n;
  opt.max_pair_n = o_.max_pair_n;
  opt.fault = parse_fault(o_.fault);
  opt.workers = o_.workers;
  if (opt.max_n > kDefaultPermLimit && o_.limit < opt.max_n)
    throw LimitExceeded("verify: --max-n above " + std::to_string(kDefaultPermLimit) + " needs --limit");
  if (opt.max_pair_n > kDefaultPairLimit && o_.limit < opt.max_pair_n)
    throw LimitExceeded("verify: --max-pair-n above " + std::to_string(kDefaultPairLimit) + " needs --limit");
  const auto report = verify_suite(opt);
  if (format_ == Format::Json)
    out_ << report.to_json().dump() << '\n';
  else
    out_ << report.to_text();
  return report.all_passed() ? kExitOk : kExitDomain;
}

CLI::App* add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  sub->add_option("--limit", o.limit, "Override the size guardrail")->check(CLI::PositiveNumber);
  return sub;
}

void add_kind(CLI::App* sub, Options& o, std::vector<std::string> kinds) {
  sub->add_option("kind", o.kind, "What to compute")->required()->check(CLI::IsMember(std::move(kinds)));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact combinatorics of indecomposable permutations, hypermaps and labeled Dyck paths", "connperm"};
  app.require_subcommand(1);

  auto* count = add_format(app.add_subcommand("count", "Closed-form and exhaustive counts"), o);
  add_kind(count, o, {"indecomposable", "hypermaps", "maps", "stirling-indec"});
  count->add_option("--n", o.n, "Size (permutation length or dart count)")->check(CLI::PositiveNumber);
  count->add_option("--m", o.m, "Number of edges")->check(CLI::NonNegativeNumber);
  count->add_option("--k", o.k, "Number of cycles")->check(CLI::NonNegativeNumber);
  count->add_option("--v", o.v, "Number of vertices")->check(CLI::NonNegativeNumber);
  count->add_flag("--labeled", o.labeled, "Count labeled hypermaps instead of rooted ones");
  count->add_flag("--brute", o.brute, "Use exhaustive enumeration");
  count->add_option("--workers", o.workers, "Worker threads for exhaustive scans (0 = all cores)");

  auto* table = add_format(app.add_subcommand("table", "Tables for sizes 1..max-n"), o);
  add_kind(table, o, {"stirling-indec", "joint"});
  table->add_option("--max-n", o.max_n, "Largest size")->check(CLI::PositiveNumber);
  table->add_flag("--brute", o.brute, "Use exhaustive enumeration");

  auto* bij = add_format(app.add_subcommand("bij", "Apply a bijection"), o);
  add_kind(bij, o, {"omr", "omr-inv", "fft", "fft-inv", "delta", "delta-inv", "phi", "psi-prime"});
  bij->add_option("--perm", o.perm, "Permutation, one-line \"3,1,2\" or cycles \"(1,3,2)\"");
  bij->add_option("--sigma", o.sigma, "Vertex permutation in cycle notation");
  bij->add_option("--alpha", o.alpha, "Edge permutation in cycle notation");
  bij->add_option("--path", o.path, "Labeled Dyck path, e.g. \"a a b0 b1\"");
  bij->add_option("--scheme", o.scheme, "Label scheme for paths")->check(CLI::IsMember({"delta", "rv"}));

  auto* poly = add_format(app.add_subcommand("poly", "Generating polynomials"), o);
  add_kind(poly, o, {"A", "C", "L", "Lprime", "M", "Mprime"});
  poly->add_option("--n", o.n, "Size for A, C, L, Lprime")->check(CLI::PositiveNumber);
  poly->add_option("--m", o.m, "Size for M, Mprime")->check(CLI::PositiveNumber);

  auto* prob = add_format(app.add_subcommand("prob", "Exact probabilities"), o);
  add_kind(prob, o, {"transitive"});
  prob->add_option("--n", o.n, "Number of points")->check(CLI::PositiveNumber);
  prob->add_flag("--brute", o.brute, "Use exhaustive enumeration");
  prob->add_option("--workers", o.workers, "Worker threads for exhaustive scans (0 = all cores)");

  auto* verify = add_format(app.add_subcommand("verify", "Run every cross-check against brute force"), o);
  verify->add_option("--max-n", o.max_n, "Largest permutation size checked")->check(CLI::PositiveNumber);
  verify->add_option("--max-pair-n", o.max_pair_n, "Largest dart count for pair scans")->check(CLI::PositiveNumber);
  verify->add_option("--fault", o.fault, "Inject a known fault")
      ->check(CLI::IsMember({"none", "skip-rotation", "singleton-weight-x"}));
  verify->add_option("--workers", o.workers, "Worker threads (0 = all cores)");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("connperm");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  Runner runner(o, *sub, out);
  try {
    const std::string& name = sub->get_name();
    if (name == "count") return runner.count();
    if (name == "table") return runner.table();
    if (name == "bij") return runner.bij();
    if (name == "poly") return runner.poly();
    if (name == "prob") return runner.prob();
    return runner.verify();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotABijection& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace connperm
