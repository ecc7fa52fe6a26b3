#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braceblock/brace.hpp"
#include "braceblock/catalog.hpp"
#include "braceblock/io.hpp"
#include "braceblock/normgraph.hpp"
#include "braceblock/yang_baxter.hpp"

namespace py = pybind11;
using namespace braceblock;

// Elements cross the boundary as plain ints.
namespace pybind11::detail {
template <>
struct type_caster<Elem> {
  PYBIND11_TYPE_CASTER(Elem, const_name("int"));
  bool load(handle src, bool convert) {
    type_caster<std::uint32_t> inner;
    if (!inner.load(src, convert)) return false;
    value = Elem{static_cast<std::uint32_t>(inner)};
    return true;
  }
  static handle cast(Elem e, return_value_policy, handle) { return PyLong_FromUnsignedLong(e.index); }
};

// The library hands out shared_ptr<const T>; Python sees the same object through a shared_ptr<T> holder.
template <typename T>
struct type_caster<std::shared_ptr<const T>> {
  using Inner = make_caster<std::shared_ptr<T>>;
  PYBIND11_TYPE_CASTER(std::shared_ptr<const T>, Inner::name);
  bool load(handle src, bool convert) {
    Inner inner;
    if (!inner.load(src, convert)) return false;
    value = cast_op<std::shared_ptr<T>>(inner);
    return true;
  }
  static handle cast(const std::shared_ptr<const T>& src, return_value_policy policy, handle parent) {
    return Inner::cast(std::const_pointer_cast<T>(src), policy, parent);
  }
};
}  // namespace pybind11::detail

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_python(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return Json::parse(obj.cast<std::string>());
  return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

std::vector<std::vector<std::uint32_t>> square(const std::vector<std::uint32_t>& flat, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i].assign(flat.begin() + i * n, flat.begin() + (i + 1) * n);
  return rows;
}

std::vector<Elem> flatten(const std::vector<std::vector<std::uint32_t>>& rows) {
  std::vector<Elem> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw Error(ErrorKind::ParseError, "operation table must be square");
    for (auto v : row) flat.push_back(Elem{v});
  }
  return flat;
}

std::vector<std::vector<std::uint32_t>> op_table(const GroupOperation& op) {
  const auto t = op.table();
  std::vector<std::uint32_t> flat(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) flat[i] = t[i].index;
  return square(flat, op.order());
}

VerifyOptions opts(const std::optional<VerifyOptions>& o) { return o.value_or(VerifyOptions{}); }

}  // namespace

PYBIND11_MODULE(braceblock, m) {
  m.doc() = "Brace blocks, skew braces, Yang-Baxter solutions and normalising graphs on finite groups";
  m.attr("__version__") = std::string(library_version());

  static py::exception<Error> error_type(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    } catch (const Json::exception& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
      inst.attr("kind") = std::string(to_string(ErrorKind::ParseError));
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  py::class_<VerifyOptions>(m, "VerifyOptions")
      .def(py::init<>())
      .def_static("exhaustive", &VerifyOptions::exhaustive)
      .def_static("sampled", &VerifyOptions::sampled, py::arg("seed"), py::arg("count"))
      .def_static("parse", &VerifyOptions::parse)
      .def_readwrite("seed", &VerifyOptions::seed)
      .def_readwrite("samples", &VerifyOptions::samples);

  // Groups.
  py::class_<FiniteGroup, std::shared_ptr<FiniteGroup>>(m, "Group")
      .def_static("cayley", &FiniteGroup::cayley, py::arg("table"))
      .def_static("heisenberg", &FiniteGroup::heisenberg, py::arg("modulus"))
      .def_static("unitriangular", &FiniteGroup::unitriangular, py::arg("size"), py::arg("modulus"))
      .def_static("permutation", &FiniteGroup::permutation, py::arg("degree"), py::arg("generators"))
      .def_static("cyclic", &cyclic_group, py::arg("n"))
      .def_static("cyclic_semidirect", &cyclic_semidirect, py::arg("m"), py::arg("n"), py::arg("r"))
      .def_static("direct_product", &direct_product)
      .def_static("from_spec", &group_from_spec, py::arg("name"), py::arg("modulus") = 0)
      .def_static("from_json", [](const py::object& j) { return group_from_json(from_python(j)); })
      .def("to_json", [](const FiniteGroup& g) { return to_python(to_json(g)); })
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("backend", [](const FiniteGroup& g) { return to_string(g.backend()); })
      .def_property_readonly("generators", &FiniteGroup::generators)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("pow", &FiniteGroup::pow)
      .def("commutator", &FiniteGroup::commutator)
      .def("element_order", &FiniteGroup::element_order)
      .def("coordinates", &FiniteGroup::coordinates)
      .def("from_coordinates",
           [](const FiniteGroup& g, const std::vector<std::int64_t>& c) { return g.from_coordinates(c); })
      .def("format", &FiniteGroup::format)
      .def("table", [](const FiniteGroup& g) { return square(materialize_table(g), g.order()); })
      .def("__repr__", [](const FiniteGroup& g) { return "<Group " + g.name() + ">"; });

  m.def("is_abelian", &is_abelian);
  m.def("nilpotency_class", &nilpotency_class);
  m.def("is_nilpotent_of_class_two", &is_nilpotent_of_class_two);

  py::class_<Subgroup>(m, "Subgroup")
      .def(py::init<GroupPtr, std::vector<Elem>>(), py::arg("parent"), py::arg("generators"))
      .def_property_readonly("members", &Subgroup::members)
      .def_property_readonly("generators", &Subgroup::generators)
      .def_property_readonly("order", &Subgroup::order)
      .def("contains", &Subgroup::contains)
      .def("exponent", &Subgroup::exponent);
  m.def("centre", &centre);
  m.def("derived_subgroup", &derived_subgroup);
  m.def("trivial_subgroup", &trivial_subgroup);
  m.def("whole_group", &whole_group);
  m.def("lower_central_series", &lower_central_series);

  // Central pairs and the endomorphism ring.
  py::class_<CentralPair, std::shared_ptr<CentralPair>>(m, "CentralPair")
      .def_property_readonly("group", &CentralPair::group)
      .def_property_readonly("k", &CentralPair::k)
      .def_property_readonly("a", &CentralPair::a)
      .def_property_readonly("has_unity", &CentralPair::has_unity)
      .def_property_readonly("quotient_order", [](const CentralPair& p) { return p.quotient().order(); })
      .def("project", [](const CentralPair& p, Elem g) { return p.quotient().project(g); })
      .def("transversal", [](const CentralPair& p, Elem c) { return p.quotient().transversal(c); })
      .def("to_json", [](const CentralPair& p) { return to_python(to_json(p)); });
  m.def("make_central_pair", &make_central_pair, py::arg("group"), py::arg("k"), py::arg("a"));
  m.def("class_two_pair", &class_two_pair);
  m.def("pair_from_json", [](const py::object& j) { return pair_from_json(from_python(j)); });

  py::class_<QuotientEndo>(m, "QuotientEndo")
      .def(py::init<PairPtr, std::vector<Elem>>(), py::arg("pair"), py::arg("table"))
      .def_static("zero", &QuotientEndo::zero)
      .def_static("identity", &QuotientEndo::identity)
      .def_static("from_generator_images", &endo_from_generator_images)
      .def_static("power", &power_endo, py::arg("pair"), py::arg("n"))
      .def_property_readonly("table", &QuotientEndo::table)
      .def_property_readonly("pair", &QuotientEndo::pair)
      .def("is_zero", &QuotientEndo::is_zero)
      .def("__call__", &QuotientEndo::operator())
      .def("__add__", &ring_add)
      .def("__sub__", &ring_sub)
      .def("__mul__", &ring_mul)
      .def("__neg__", &ring_neg)
      .def("__eq__", [](const QuotientEndo& a, const QuotientEndo& b) { return a == b; })
      .def("to_json", [](const QuotientEndo& e) { return to_python(to_json(e)); });
  m.def("jacobson_circle", &jacobson_circle);
  m.def("ring_pow", &ring_pow);
  m.def("ring_scale", &ring_scale);
  m.def("enumerate_ring", &enumerate_ring);
  m.def("heisenberg_psi", &heisenberg_psi, py::arg("pair"), py::arg("x"));
  m.def("heisenberg_scaling", &heisenberg_scaling, py::arg("group"), py::arg("x"));
  m.def("endo_from_json", [](const py::object& j) { return endo_from_json(from_python(j)); });

  py::class_<Lifting>(m, "Lifting")
      .def_property_readonly("endo", &Lifting::endo)
      .def_property_readonly("values", &Lifting::values)
      .def("__call__", &Lifting::operator());
  m.def("canonical_lifting", &canonical_lifting);
  m.def("lifting_from_endomorphism", &lifting_from_endomorphism, py::arg("pair"), py::arg("images"));
  m.def("is_endomorphism",
        [](const GroupPtr& g, const std::vector<Elem>& images) { return is_endomorphism(*g, images); });

  py::class_<CentralBilinearMap>(m, "CentralBilinearMap")
      .def_static("trivial", &trivial_bilinear)
      .def_static("commutator_power", &bilinear_from_commutator_power, py::arg("pair"), py::arg("n"))
      .def_static("from_table",
                  [](const PairPtr& p, const std::vector<std::vector<std::uint32_t>>& rows) {
                    return validate_bilinear(p, flatten(rows));
                  })
      .def_static("random", &random_bilinear, py::arg("pair"), py::arg("seed"), py::arg("attempts") = 64)
      .def_static("from_json", [](const py::object& j) { return bilinear_from_json(from_python(j)); })
      .def_property_readonly("is_trivial", &CentralBilinearMap::is_trivial)
      .def("__call__", &CentralBilinearMap::operator())
      .def("__eq__", [](const CentralBilinearMap& a, const CentralBilinearMap& b) { return equal(a, b); })
      .def("to_json", [](const CentralBilinearMap& b) { return to_python(to_json(b)); });

  // Operations and verification.
  py::class_<GroupOperation>(m, "Operation")
      .def_static("dot", &GroupOperation::dot)
      .def_static("from_table",
                  [](GroupPtr base, const std::vector<std::vector<std::uint32_t>>& rows, const std::string& label) {
                    return GroupOperation::from_table(std::move(base), flatten(rows), ExplicitProvenance{label});
                  },
                  py::arg("base"), py::arg("table"), py::arg("label") = "explicit")
      .def_static("from_json",
                  [](const GroupPtr& base, const py::object& j) { return operation_from_json(base, from_python(j)); })
      .def_property_readonly("order", &GroupOperation::order)
      .def_property_readonly("base", &GroupOperation::base)
      .def_property_readonly("provenance", [](const GroupOperation& op) { return describe(op.provenance()); })
      .def_property_readonly("is_materialized", &GroupOperation::is_materialized)
      .def("__call__", &GroupOperation::operator())
      .def("inverse", &GroupOperation::inverse)
      .def("table", &op_table)
      .def("__eq__", &operations_equal)
      .def("to_json", [](const GroupOperation& op) { return to_python(to_json(op)); });
  m.def("deformed_operation",
        py::overload_cast<const PairPtr&, const QuotientEndo&, const CentralBilinearMap&, std::string>(
            &deformed_operation),
        py::arg("pair"), py::arg("psi"), py::arg("alpha"), py::arg("label") = "");
  m.def("deformed_operation_from_lifting",
        py::overload_cast<const Lifting&, const CentralBilinearMap&, std::string>(&deformed_operation),
        py::arg("lifting"), py::arg("alpha"), py::arg("label") = "");
  m.def("first_difference", &first_difference);

  m.def("verify_group",
        [](const GroupOperation& op, const std::optional<VerifyOptions>& o) {
          return to_python(to_json(verify_group(op, opts(o))));
        },
        py::arg("op"), py::arg("options") = py::none());
  m.def("verify_skew_brace",
        [](const GroupOperation& a, const GroupOperation& b, const std::optional<VerifyOptions>& o) {
          return to_python(to_json(verify_skew_brace(a, b, opts(o))));
        },
        py::arg("dot"), py::arg("circ"), py::arg("options") = py::none());
  m.def("check_bilinear", [](const CentralBilinearMap& b) { return check_bilinear(b).ok; });

  m.def("iterate_block",
        [](const PairPtr& pair, const std::vector<std::pair<QuotientEndo, CentralBilinearMap>>& steps) {
          std::vector<BlockStep> s;
          for (const auto& [e, a] : steps) s.push_back({e, a});
          return iterate_block(pair, s);
        },
        py::arg("pair"), py::arg("steps"));
  m.def("qn_endo", &qn_endo);
  m.def("closed_form_operation", &closed_form_operation);

  // Yang-Baxter.
  py::class_<YBMap>(m, "YBMap")
      .def_static("flip", &YBMap::flip)
      .def_static("identity", &YBMap::identity)
      .def_static("from_permutation", &YBMap::from_permutation, py::arg("n"), py::arg("images"),
                  py::arg("label") = "explicit")
      .def_static("from_json", [](const py::object& j) { return yb_map_from_json(from_python(j)); })
      .def_property_readonly("carrier_size", &YBMap::carrier_size)
      .def_property_readonly("label", &YBMap::label)
      .def_property_readonly("permutation", &YBMap::permutation)
      .def("__call__", &YBMap::operator())
      .def("__eq__", &maps_equal)
      .def("to_json", [](const YBMap& r) { return to_python(to_json(r)); });
  m.def("verify_ybe",
        [](const YBMap& r, const std::optional<VerifyOptions>& o) { return to_python(to_json(verify_ybe(r, opts(o)))); },
        py::arg("r"), py::arg("options") = py::none());
  m.def("is_bijective", &is_bijective);
  m.def("is_nondegenerate", &verify_nondegenerate);
  m.def("is_involutive", &is_involutive);
  m.def("inverse_pair", &inverse_pair);
  m.def("solutions_from_brace",
        [](const GroupOperation& dot, const GroupOperation& circ, bool force) {
          auto s = solutions_from_brace(dot, circ, force);
          return py::make_tuple(s.r, s.r_prime);
        },
        py::arg("dot"), py::arg("circ"), py::arg("force") = false);
  m.def("explicit_solutions_thm",
        [](const PairPtr& pair, const QuotientEndo& psi, const CentralBilinearMap& alpha, const QuotientEndo& phi,
           const CentralBilinearMap& beta) {
          auto s = explicit_solutions_thm(pair, {psi, alpha}, {phi, beta});
          return py::make_tuple(s.r, s.r_prime);
        },
        py::arg("pair"), py::arg("psi"), py::arg("alpha"), py::arg("phi"), py::arg("beta"));
  m.def("explicit_solutions_cor",
        [](const PairPtr& pair, const QuotientEndo& psi, const CentralBilinearMap& alpha) {
          auto s = explicit_solutions_cor(pair, {psi, alpha});
          return py::make_tuple(s.r, s.r_prime, s.r_tilde, s.r_tilde_prime);
        },
        py::arg("pair"), py::arg("psi"), py::arg("alpha"));

  // Regular subgroups and the normalising graph.
  py::class_<RegularSubgroup>(m, "RegularSubgroup")
      .def(py::init<std::vector<Perm>>(), py::arg("nu"))
      .def_property_readonly("degree", &RegularSubgroup::degree)
      .def_property_readonly("nu_table", &RegularSubgroup::nu_table)
      .def_property_readonly("generators", &RegularSubgroup::generators)
      .def("members", &RegularSubgroup::members)
      .def("contains", &RegularSubgroup::contains)
      .def("fingerprint", &RegularSubgroup::fingerprint)
      .def("__eq__", [](const RegularSubgroup& a, const RegularSubgroup& b) { return a == b; });
  m.def("enumerate_regular_subgroups", &enumerate_regular_subgroups, py::arg("n"), py::arg("force") = false);
  m.def("lambda_of_operation", &lambda_of_operation);
  m.def("operation_of_regular_subgroup", &operation_of_regular_subgroup, py::arg("n"), py::arg("base") = nullptr);
  m.def("normalises", &normalises);

  py::class_<NormalisingGraph>(m, "NormalisingGraph")
      .def_readonly("vertices", &NormalisingGraph::vertices)
      .def_readonly("edges", &NormalisingGraph::edges)
      .def("adjacent", &NormalisingGraph::adjacent)
      .def("cliques", [](const NormalisingGraph& g) { return cliques(g); })
      .def("to_dot", [](const NormalisingGraph& g) { return to_dot(g, cliques(g)); })
      .def("to_json", [](const NormalisingGraph& g) { return to_python(to_json(g, cliques(g))); })
      .def("cross_validate",
           [](const NormalisingGraph& g, std::size_t samples, std::uint64_t seed) {
             auto v = cross_validate(g, samples, seed);
             py::dict d;
             d["edges_checked"] = v.edges_checked;
             d["non_edges_checked"] = v.non_edges_checked;
             d["mismatches"] = v.mismatches;
             return d;
           },
           py::arg("samples") = 50, py::arg("seed") = 1);
  m.def("build_graph", &build_graph);

  // Catalog.
  py::class_<CatalogEntry>(m, "CatalogEntry")
      .def_readonly("name", &CatalogEntry::name)
      .def_readonly("group", &CatalogEntry::group)
      .def_readonly("pair", &CatalogEntry::pair)
      .def_readonly("labels", &CatalogEntry::labels)
      .def_readonly("operations", &CatalogEntry::operations)
      .def("check",
           [](const CatalogEntry& e, const std::optional<VerifyOptions>& o) {
             py::list out;
             for (const auto& r : check_entry(e, opts(o))) out.append(to_python(to_json(r)));
             return out;
           },
           py::arg("options") = py::none());
  m.def("heisenberg_block", &heisenberg_block, py::arg("modulus"));
  m.def("class_two_power_block",
        py::overload_cast<const GroupPtr&, const std::vector<long long>&>(&class_two_power_block), py::arg("group"),
        py::arg("exponents"));
  m.def("endo_block_class_two", &endo_block_class_two, py::arg("group"), py::arg("endomorphisms"));
  m.def("enumerate_endomorphisms", &enumerate_endomorphisms);
  m.def("koch_block", &koch_block, py::arg("group"), py::arg("endomorphism"), py::arg("steps"));
  m.def("koch_s3", &koch_s3, py::arg("steps"));
  m.def("koch_c9_c3", &koch_c9_c3, py::arg("steps"));
  m.def("heisenberg_convergence", &heisenberg_convergence, py::arg("p"), py::arg("k"), py::arg("max_power"));
  m.def("catalog_listing", &catalog_listing);
  m.def("distinct_operations", &distinct_operations);
}
