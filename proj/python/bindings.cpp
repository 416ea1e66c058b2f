#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "connperm/cli.hpp"
#include "connperm/dyck.hpp"
#include "connperm/enumpoly.hpp"
#include "connperm/errors.hpp"
#include "connperm/hypermap.hpp"
#include "connperm/maps.hpp"
#include "connperm/oracle.hpp"
#include "connperm/perm.hpp"

namespace py = pybind11;
using namespace connperm;

namespace {

py::int_ to_py(const BigInt& v) {
  const std::string s = to_string(v);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_py(const BigRational& v) {
  return py::module_::import("fractions").attr("Fraction")(to_py(numerator(v)), to_py(denominator(v)));
}

py::object to_py(const nlohmann::ordered_json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<int> images(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

Permutation as_perm(const py::object& o) {
  if (py::isinstance<Permutation>(o)) return o.cast<Permutation>();
  if (py::isinstance<py::str>(o)) {
    const auto s = o.cast<std::string>();
    return parse_permutation(s, s.find('(') != std::string::npos ? Notation::Cycle : Notation::OneLine);
  }
  return Permutation(o.cast<std::vector<int>>());
}

LabelScheme as_scheme(const std::string& s) {
  if (s == "delta") return LabelScheme::Delta;
  if (s == "rv") return LabelScheme::RV;
  throw InvalidArgument("scheme must be 'delta' or 'rv'");
}

py::list terms(const BivariatePoly& p) { return to_py(p.to_json()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Indecomposable permutations, hypermaps and labeled Dyck paths";

  auto base = py::register_exception<Error>(m, "ConnpermError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<NotABijection>(m, "NotABijection", base.ptr());
  py::register_exception<SizeMismatch>(m, "SizeMismatch", base.ptr());
  py::register_exception<EmptyInput>(m, "EmptyInput", base.ptr());
  py::register_exception<NotTransitive>(m, "NotTransitive", base.ptr());
  py::register_exception<Decomposable>(m, "Decomposable", base.ptr());
  py::register_exception<SizeTooSmall>(m, "SizeTooSmall", base.ptr());
  py::register_exception<InvalidPath>(m, "InvalidPath", base.ptr());
  py::register_exception<InvalidLabeling>(m, "InvalidLabeling", base.ptr());
  py::register_exception<PlacementOutOfRange>(m, "PlacementOutOfRange", base.ptr());
  py::register_exception<NotFpf>(m, "NotFpf", base.ptr());
  py::register_exception<LimitExceeded>(m, "LimitExceeded", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<InternalMismatch>(m, "InternalMismatch", base.ptr());

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const py::object& o) { return as_perm(o); }), py::arg("images"))
      .def_static("identity", &Permutation::identity)
      .def_property_readonly("images", &images)
      .def("__len__", &Permutation::size)
      .def("__call__", [](const Permutation& p, int i) {
        if (i < 1 || i > p.size()) throw py::index_error("point out of range");
        return p(i);
      })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__hash__", [](const Permutation& p) { return py::hash(py::tuple(py::cast(images(p)))); })
      .def("__str__", [](const Permutation& p) { return format_permutation(p, Notation::OneLine); })
      .def("__repr__", [](const Permutation& p) { return "Permutation('" + format_permutation(p, Notation::OneLine) + "')"; })
      .def("cycle_notation", [](const Permutation& p) { return format_permutation(p, Notation::Cycle); })
      .def("inverse", [](const Permutation& p) { return inverse(p); })
      .def("compose", [](const Permutation& a, const Permutation& b) { return compose(a, b); })
      .def("cycle_count", [](const Permutation& p) { return cycle_count(p); })
      .def("lr_maxima", [](const Permutation& p) { return lr_maxima(p); })
      .def("rl_minima", [](const Permutation& p) { return rl_minima(p); })
      .def("is_indecomposable", [](const Permutation& p) { return is_indecomposable(p); })
      .def("blocks", [](const Permutation& p) { return blocks(p); });

  py::class_<Hypermap>(m, "Hypermap")
      .def(py::init([](const py::object& s, const py::object& a) { return make_hypermap(PermPair(as_perm(s), as_perm(a))); }),
           py::arg("sigma"), py::arg("alpha"))
      .def_static("parse", [](const std::string& text) { return make_hypermap(parse_perm_pair(text)); })
      .def_property_readonly("sigma", &Hypermap::sigma)
      .def_property_readonly("alpha", &Hypermap::alpha)
      .def("__len__", &Hypermap::size)
      .def("vertex_count", &Hypermap::vertex_count)
      .def("edge_count", &Hypermap::edge_count)
      .def("to_json", [](const Hypermap& h) { return to_py(hypermap_to_json(h.pair())); })
      .def("__eq__", [](const Hypermap& a, const Hypermap& b) { return a == b; })
      .def("__str__", [](const Hypermap& h) { return format_hypermap(h.pair()); })
      .def("__repr__", [](const Hypermap& h) { return "Hypermap.parse('" + format_hypermap(h.pair()) + "')"; });

  py::class_<RootedMap>(m, "RootedMap")
      .def(py::init([](const py::object& s, const py::object& a) { return RootedMap(PermPair(as_perm(s), as_perm(a))); }),
           py::arg("sigma"), py::arg("alpha"))
      .def_property_readonly("sigma", &RootedMap::sigma)
      .def_property_readonly("alpha", &RootedMap::alpha)
      .def("__len__", &RootedMap::size)
      .def("vertex_count", &RootedMap::vertex_count)
      .def("edge_count", &RootedMap::edge_count)
      .def("to_json", [](const RootedMap& r) { return to_py(map_to_json(r)); })
      .def("__eq__", [](const RootedMap& a, const RootedMap& b) { return a == b; })
      .def("__str__", [](const RootedMap& r) { return format_map(r); });

  // permutations
  m.def("fundamental_transform", [](const py::object& p) { return fundamental_transform(as_perm(p)); });
  m.def("fundamental_transform_inverse", [](const py::object& p) { return fundamental_transform_inverse(as_perm(p)); });

  // hypermaps
  m.def("psi", [](const py::object& theta) { return psi(as_perm(theta)); }, py::arg("theta"));
  m.def("psi_inverse", [](const Hypermap& h) { return psi_inverse(h); });
  m.def("canonical_rooted_form", [](const Hypermap& h) {
    auto c = canonical_rooted_form(h);
    return py::make_tuple(c.hypermap, c.phi);
  });
  m.def("rooted_isomorphic", &rooted_isomorphic);
  m.def("is_transitive", [](const py::object& s, const py::object& a) { return is_transitive(PermPair(as_perm(s), as_perm(a))); });
  m.def("satisfies_lemma1", [](const py::object& s, const py::object& a) {
    return satisfies_lemma1(PermPair(as_perm(s), as_perm(a)));
  });
  m.def("phi_bijection", [](const py::object& p) { return phi_bijection(as_perm(p)); });

  // labeled Dyck paths, as space-separated words such as "a a b0 b1"
  m.def("delta", [](const py::object& p, const std::string& scheme) {
    auto lp = delta(as_perm(p));
    if (as_scheme(scheme) == LabelScheme::RV) lp = convert_label_scheme(lp);
    return format_labeled(lp);
  }, py::arg("perm"), py::arg("scheme") = "delta");
  m.def("delta_inverse", [](const std::string& path, const std::string& scheme) {
    auto lp = parse_labeled(path, as_scheme(scheme));
    if (lp.scheme == LabelScheme::RV) lp = convert_label_scheme(lp);
    return delta_inverse(lp);
  }, py::arg("path"), py::arg("scheme") = "delta");
  m.def("is_dyck", [](const std::string& w) { return validate_dyck(w); });
  m.def("is_primitive", [](const std::string& w) { return is_primitive(w); });
  m.def("dyck_paths", &enum_dyck_paths);

  // maps
  m.def("psi_prime", [](const py::object& theta) { return psi_prime(as_perm(theta)); }, py::arg("theta"));
  m.def("psi_prime_inverse", &psi_prime_inverse);
  m.def("map_count", [](int mm) { return to_py(map_count(mm)); }, py::arg("m"));
  m.def("map_count_by_vertices", [](int mm, int v) { return to_py(map_count_by_vertices(mm, v)); });

  // counts and polynomials; polynomials come back as text plus term lists
  m.def("c_count", [](int n) { return to_py(c_count(n)); }, py::arg("n"));
  m.def("c_count_by_cycles", [](int n, int k) { return to_py(c_count_by_cycles(n, k)); });
  m.def("i_count", [](int mm) { return to_py(i_count(mm)); });
  m.def("transitive_probability", [](int n) { return to_py(transitive_probability(n)); });
  m.def("poly", [](const std::string& name, int n) {
    BivariatePoly p;
    if (name == "A") p = stirling_poly(n);
    else if (name == "C") p = c_poly(n);
    else if (name == "L") p = L_family(n).all;
    else if (name == "Lprime") p = L_family(n).primitive;
    else if (name == "M") p = M_family(n).all;
    else if (name == "Mprime") p = M_family(n).primitive;
    else if (name == "joint") p = joint_perm_poly(n);
    else throw InvalidArgument("unknown polynomial " + name);
    return py::make_tuple(p.to_string(), terms(p));
  }, py::arg("name"), py::arg("n"));

  // oracle
  m.def("verify", [](int max_n, int max_pair_n, const std::string& fault, unsigned workers) {
    VerifyOptions opt;
    opt.max_n = max_n;
    opt.max_pair_n = max_pair_n;
    opt.fault = parse_fault(fault);
    opt.workers = workers;
    VerifyReport r;
    {
      py::gil_scoped_release release;
      r = verify_suite(opt);
    }
    return py::make_tuple(r.all_passed(), to_py(r.to_json()));
  }, py::arg("max_n") = 7, py::arg("max_pair_n") = kDefaultPairLimit, py::arg("fault") = "none",
     py::arg("workers") = 0u);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
