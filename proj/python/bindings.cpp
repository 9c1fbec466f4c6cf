#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torelli/classify.hpp"
#include "torelli/group.hpp"

namespace py = pybind11;
using namespace torelli;

namespace {

OmegaPoint point_from_object(const py::object& obj) {
  if (py::isinstance<OmegaPoint>(obj)) return obj.cast<OmegaPoint>();
  if (py::isinstance<py::str>(obj)) return OmegaPoint::parse(obj.cast<std::string>());
  std::vector<ProjPoint> coords;
  for (const auto& item : obj.cast<py::sequence>())
    coords.push_back(ProjPoint::parse(py::str(item).cast<std::string>()));
  return OmegaPoint(std::move(coords));
}

CrossRatioSpec spec_from_object(int k, const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return CrossRatioSpec::parse(obj.cast<std::string>(), k);
  auto seq = obj.cast<py::sequence>();
  if (py::len(seq) != 4) throw MalformedInput("quadruple needs exactly four indices");
  std::array<int, 4> idx{};
  for (int i = 0; i < 4; ++i) idx[static_cast<std::size_t>(i)] = seq[i].cast<int>();
  return CrossRatioSpec(k, idx);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact cross-ratio algebra on configuration spaces of marked spheres";

  py::register_exception<Error>(m, "TorelliError", PyExc_ValueError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::string& text, int degree) {
             return parse_permutation(text, degree);
           }),
           py::arg("text"), py::arg("degree"))
      .def_property_readonly("degree", &Permutation::degree)
      .def("__call__", [](const Permutation& p, int x) { return p(x); })
      .def("cycles", &Permutation::cycles)
      .def("one_line", &Permutation::one_line)
      .def("compose", &Permutation::compose, "compose(s, t)(x) = s(t(x)); t applied first")
      .def("inverse", &Permutation::inverse)
      .def("is_identity", &Permutation::is_identity)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__hash__", [](const Permutation& p) { return py::hash(py::str(p.one_line())); })
      .def("__repr__", [](const Permutation& p) { return "Permutation('" + p.cycles() + "')"; });

  m.def("identity_permutation", [](int degree) { return Permutation(degree); }, py::arg("degree"));
  m.def("enumerate_group", &enumerate_group, py::arg("degree"),
        py::arg("ceiling") = kDefaultDegreeCeiling);

  py::class_<OmegaPoint>(m, "OmegaPoint")
      .def(py::init(&point_from_object), py::arg("coords"))
      .def_property_readonly("ambient_k", &OmegaPoint::ambient_k)
      .def("coords",
           [](const OmegaPoint& z) {
             std::vector<std::string> out;
             for (const ProjPoint& p : z.coords()) out.push_back(p.str());
             return out;
           })
      .def("__str__", &OmegaPoint::str)
      .def("__eq__", [](const OmegaPoint& a, const OmegaPoint& b) { return a == b; })
      .def("__repr__", [](const OmegaPoint& z) { return "OmegaPoint('" + z.str() + "')"; });

  m.def(
      "cross_ratio",
      [](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
        return cross_ratio(ProjPoint::parse(a), ProjPoint::parse(b), ProjPoint::parse(c),
                           ProjPoint::parse(d))
            .str();
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
      "the cross-ratio (d-b)(c-a)/((d-a)(c-b)); points as 'inf' or 'n/d' strings");
  m.def("sample_omega_point", &sample_omega_point, py::arg("k"), py::arg("seed"),
        py::arg("height"));

  py::class_<FactoredMap>(m, "FactoredMap")
      .def(py::init(&FactoredMap::parse), py::arg("text"), py::arg("ambient_k"))
      .def_property_readonly("ambient_k", &FactoredMap::ambient_k)
      .def("multiply", &FactoredMap::multiply)
      .def("invert", &FactoredMap::invert)
      .def("evaluate",
           [](const FactoredMap& f, const py::object& z) {
             return f.evaluate(point_from_object(z)).str();
           })
      .def("__eq__", [](const FactoredMap& a, const FactoredMap& b) { return a == b; })
      .def("__hash__", [](const FactoredMap& f) { return py::hash(py::str(f.str())); })
      .def("__str__", &FactoredMap::str)
      .def("__repr__", [](const FactoredMap& f) {
        return "FactoredMap('" + f.str() + "', " + std::to_string(f.ambient_k()) + ")";
      });

  m.def("equal_randomized", &equal_randomized, py::arg("f"), py::arg("g"), py::arg("trials") = 8,
        py::arg("seed") = 0, py::arg("height") = 1000);

  py::class_<GroupElement>(m, "GroupElement")
      .def_readonly("ambient_k", &GroupElement::ambient_k)
      .def_readonly("coords", &GroupElement::coords)
      .def_property_readonly("source_perm",
                             [](const GroupElement& e) -> py::object {
                               if (!e.source_perm) return py::none();
                               return py::cast(*e.source_perm);
                             })
      .def("apply",
           [](const GroupElement& e, const py::object& z) {
             return apply(e, point_from_object(z));
           })
      .def("coords_str", &GroupElement::coords_str)
      .def("__eq__",
           [](const GroupElement& a, const GroupElement& b) { return a.same_map(b); })
      .def("__repr__", [](const GroupElement& e) {
        return "GroupElement(" + std::to_string(e.ambient_k) + ", '" + e.coords_str() + "')";
      });

  m.def("theta", &theta, py::arg("k"), py::arg("sigma"),
        "the automorphism induced by a permutation of the k+1 marked points");
  m.def("standard_generators", [](int k) {
    Generators g = standard_generators(k);
    return py::make_tuple(g.A, g.B);
  });
  m.def(
      "find_permutation",
      [](int k, const GroupElement& e, int ceiling) { return find_permutation(k, e, ceiling); },
      py::arg("k"), py::arg("element"), py::arg("ceiling") = kDefaultDegreeCeiling);
  m.def(
      "find_permutations",
      [](int k, const GroupElement& e, int ceiling) { return find_permutations(k, e, ceiling); },
      py::arg("k"), py::arg("element"), py::arg("ceiling") = kDefaultDegreeCeiling);
  m.def(
      "find_permutations_blackbox",
      [](int k, const std::function<OmegaPoint(const OmegaPoint&)>& evaluator, int ceiling,
         int sample_points, std::uint64_t seed) {
        return find_permutations(k, evaluator, ceiling, sample_points, seed);
      },
      py::arg("k"), py::arg("evaluator"), py::arg("ceiling") = kDefaultDegreeCeiling,
      py::arg("sample_points") = 3, py::arg("seed") = 0,
      "match an opaque point-to-point evaluator against every candidate at sampled points");
  m.def("closure", &closure, py::arg("k"), py::arg("generators"),
        py::arg("ceiling") = kDefaultDegreeCeiling);
  m.def("kernel_theta3", &kernel_theta3);
  m.def(
      "coordinate_catalog",
      [](int k, int ceiling) { return coordinate_catalog(k, ceiling).functions; }, py::arg("k"),
      py::arg("ceiling") = kDefaultDegreeCeiling);

  m.def(
      "lc_map", [](int k, const py::object& c) { return lc_map(spec_from_object(k, c)); },
      py::arg("k"), py::arg("quadruple"),
      "the cross-ratio coordinate map named by an index quadruple");
  m.def(
      "collision_free",
      [](int k, const py::object& c1, const py::object& c2) {
        return collision_free(spec_from_object(k, c1), spec_from_object(k, c2));
      },
      py::arg("k"), py::arg("c1"), py::arg("c2"));
  m.def(
      "collision_case",
      [](int k, const py::object& c1, const py::object& c2) -> py::object {
        auto slot = collision_case(spec_from_object(k, c1), spec_from_object(k, c2));
        if (!slot) return py::none();
        return py::int_(*slot);
      },
      py::arg("k"), py::arg("c1"), py::arg("c2"));
  m.def(
      "collision_witness",
      [](int k, const py::object& c1, const py::object& c2, int budget, std::uint64_t seed,
         long long base_height) -> py::object {
        auto witness = collision_witness(spec_from_object(k, c1), spec_from_object(k, c2), budget,
                                         seed, base_height);
        if (!witness) return py::none();
        return py::cast(*witness);
      },
      py::arg("k"), py::arg("c1"), py::arg("c2"), py::arg("budget") = 50, py::arg("seed") = 0,
      py::arg("base_height") = 20);
  m.def(
      "certify_no_real_collision_points",
      [](int k, const py::object& c1, const py::object& c2) {
        return certify_no_real_collision_points(spec_from_object(k, c1), spec_from_object(k, c2));
      },
      py::arg("k"), py::arg("c1"), py::arg("c2"));
  m.def(
      "validate_tuple",
      [](int k, const py::list& specs) {
        std::vector<CrossRatioSpec> parsed;
        for (const auto& item : specs) parsed.push_back(spec_from_object(k, py::cast<py::object>(item)));
        return validate_tuple(parsed, k).str();
      },
      py::arg("k"), py::arg("specs"));
  m.def(
      "extend_to_group_element",
      [](int k, const py::list& specs, int ceiling) {
        std::vector<CrossRatioSpec> parsed;
        for (const auto& item : specs) parsed.push_back(spec_from_object(k, py::cast<py::object>(item)));
        return extend_to_group_element(parsed, k, ceiling);
      },
      py::arg("k"), py::arg("specs"), py::arg("ceiling") = kDefaultDegreeCeiling);

  py::class_<HoloMapDescriptor>(m, "HoloMapDescriptor")
      .def_readonly("m", &HoloMapDescriptor::m)
      .def_readonly("n", &HoloMapDescriptor::n)
      .def_readonly("sigma", &HoloMapDescriptor::sigma)
      .def_readonly("index_tuple", &HoloMapDescriptor::index_tuple)
      .def_readonly("coords", &HoloMapDescriptor::coords)
      .def("json", &HoloMapDescriptor::json)
      .def("__repr__", [](const HoloMapDescriptor& d) { return d.json(); });

  m.def("enumerate_maps", &enumerate_maps, py::arg("m"), py::arg("n"),
        py::arg("ceiling") = kDefaultDegreeCeiling,
        "all non-constant maps between the two configuration domains, deduplicated");

  m.def(
      "apply_forgetful",
      [](int m_, const std::vector<int>& J, const py::object& z) {
        return apply_forgetful(ForgetfulSpec(m_, static_cast<int>(J.size()) + 2, J),
                               point_from_object(z));
      },
      py::arg("m"), py::arg("J"), py::arg("z"));

  py::class_<LiftResult>(m, "LiftResult")
      .def_readonly("sigma_hat", &LiftResult::sigma_hat)
      .def_readonly("direct_construction", &LiftResult::direct_construction)
      .def("__repr__", [](const LiftResult& r) {
        return "LiftResult('" + r.sigma_hat.cycles() + "')";
      });

  m.def("lift_permutation", &lift_permutation, py::arg("sigma"), py::arg("m"), py::arg("J"),
        py::arg("verify_points") = 5, py::arg("seed") = 99,
        "lift an automorphism through the coordinate projection, verified pointwise");
}
