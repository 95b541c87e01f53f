#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "dissoc/checkers.hpp"
#include "dissoc/density.hpp"
#include "dissoc/errors.hpp"
#include "dissoc/gpfamily.hpp"
#include "dissoc/greedy.hpp"

namespace py = pybind11;

namespace {

py::object to_py_int(const dissoc::bigint& v) {
  const std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::object to_py_fraction(const dissoc::bigrat& v) {
  static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
  return fraction_type(to_py_int(numerator(v)), to_py_int(denominator(v)));
}

dissoc::bigint from_py_int(const py::object& v) {
  return dissoc::bigint(static_cast<std::string>(py::str(v)));
}

dissoc::Variant make_variant(std::optional<unsigned> g, std::optional<unsigned> k) {
  if (g && k) throw std::invalid_argument("pass at most one of g and k");
  if (g) return dissoc::Variant::subset_bounded(*g);
  if (k) return dissoc::Variant::sign_bounded(*k);
  return dissoc::Variant::dissociated();
}

py::dict greedy_py(std::uint64_t a, std::uint64_t b, std::size_t terms,
                   std::optional<unsigned> g, std::optional<unsigned> k,
                   std::uint64_t mem_cap_bits) {
  const dissoc::Variant variant = make_variant(g, k);
  dissoc::GenerateOptions opts;
  opts.mem_cap_bits = mem_cap_bits;
  const dissoc::GreedySequence seq = dissoc::generate(a, b, variant, terms, opts);

  py::list term_list, ratio_list;
  for (const auto& t : seq.terms()) term_list.append(to_py_int(t));
  for (const auto& r : dissoc::ratio_trace(seq)) ratio_list.append(to_py_fraction(r));

  py::dict out;
  out["terms"] = term_list;
  out["ratios"] = ratio_list;
  if (variant.kind != dissoc::VariantKind::SignBounded) {
    py::list potentials;
    for (const auto& p : dissoc::potential_trace(seq)) potentials.append(to_py_fraction(p));
    out["potentials"] = potentials;
  } else {
    out["potentials"] = py::none();
  }
  if (seq.terms().size() >= 3) {
    const dissoc::DoublingReport d = dissoc::detect_doubling(seq);
    out["onset"] = d.onset;
    out["certificate_index"] =
        d.certificate_index ? py::object(py::int_(*d.certificate_index)) : py::none();
    out["bound"] = d.bound;
  } else {
    out["onset"] = py::none();
    out["certificate_index"] = py::none();
    out["bound"] = dissoc::n0_upper_bound(a, b);
  }
  return out;
}

py::dict interval_density_py(unsigned k, double C) {
  const dissoc::DensityPoint p = dissoc::interval_density(k, C);
  py::dict out;
  out["k"] = p.k;
  out["C"] = p.C;
  out["threshold"] = to_py_int(p.threshold);
  out["member_count"] = to_py_int(p.member_count);
  out["interval_size"] = to_py_int(p.interval_size);
  out["fraction"] = to_py_fraction(p.fraction);
  out["limit"] = p.limit;
  return out;
}

py::dict gp_experiment_py(std::uint64_t n, unsigned L, std::uint64_t samples,
                          std::uint64_t seed, unsigned workers) {
  const dissoc::FamilySpec spec = dissoc::build_spec(n, L);
  const dissoc::GpExperimentReport rep = dissoc::run_experiment(spec, samples, seed, workers);
  py::dict out;
  out["n"] = n;
  out["L"] = L;
  out["m"] = spec.m;
  out["m_tilde"] = spec.m_tilde;
  out["samples"] = rep.samples;
  out["with_gp"] = rep.with_gp;
  out["fraction"] = to_py_fraction(rep.fraction);
  out["union_bound"] = to_py_fraction(rep.union_bound_exact);
  out["all_dissociated"] = rep.all_dissociated;
  out["seed"] = rep.seed;
  return out;
}

}  // namespace

PYBIND11_MODULE(_dissoc, m) {
  m.doc() = "Dissociated sets: greedy generators, class checkers, densities, "
            "and the random dyadic family experiment";
  m.attr("__version__") = "0.1.0";

  py::register_exception<dissoc::capacity_error>(m, "CapacityError", PyExc_MemoryError);
  py::register_exception<dissoc::budget_error>(m, "BudgetError", PyExc_ValueError);
  py::register_exception<dissoc::precision_error>(m, "PrecisionError", PyExc_ArithmeticError);
  py::register_exception<dissoc::invariant_violation>(m, "InvariantViolation", PyExc_AssertionError);

  m.def("greedy", &greedy_py, py::arg("a"), py::arg("b"), py::arg("terms"),
        py::arg("g") = py::none(), py::arg("k") = py::none(),
        py::arg("mem_cap_bits") = (std::uint64_t{1} << 33),
        "Greedy sequence with ratios, potentials, and the doubling report");

  m.def("n0_upper_bound", &dissoc::n0_upper_bound, py::arg("a"), py::arg("b"));

  m.def("is_dissociated",
        [](const std::vector<std::uint64_t>& a) {
          return dissoc::is_dissociated_bruteforce(a);
        },
        py::arg("a"));
  m.def("min_representation_bound",
        [](const std::vector<std::uint64_t>& a) {
          return dissoc::min_representation_bound(a);
        },
        py::arg("a"));
  m.def("is_dk_set",
        [](const std::vector<std::uint64_t>& a, unsigned k) {
          return dissoc::is_dk_set(a, k);
        },
        py::arg("a"), py::arg("k"));
  m.def("classify",
        [](const std::vector<std::uint64_t>& a, unsigned probe_k_max) {
          const dissoc::SetClassReport r = dissoc::classify(a, probe_k_max);
          py::dict out;
          out["is_dissociated"] = r.is_dissociated;
          out["min_g"] = r.min_g;
          out["max_k"] = r.max_k;
          return out;
        },
        py::arg("a"), py::arg("probe_k_max") = 3);

  m.def("central_binomial",
        [](unsigned k) { return to_py_int(dissoc::central_binomial(k)); }, py::arg("k"));
  m.def("big_u", [](const py::object& n) { return dissoc::big_U(from_py_int(n)); },
        py::arg("n"));
  m.def("in_nc",
        [](const py::object& n, double C) { return dissoc::in_NC(from_py_int(n), C); },
        py::arg("n"), py::arg("C"));
  m.def("interval_density", &interval_density_py, py::arg("k"), py::arg("C"));
  m.def("theoretical_density", &dissoc::theoretical_density, py::arg("C"));
  m.def("c_star", &dissoc::c_star);
  m.def("size_bound_rhs",
        [](const py::object& n, std::optional<unsigned> g, std::optional<unsigned> k) {
          return dissoc::size_bound_rhs(from_py_int(n), make_variant(g, k));
        },
        py::arg("n"), py::arg("g") = py::none(), py::arg("k") = py::none());
  m.def("max_multinomial",
        [](unsigned m_, unsigned k) { return to_py_int(dissoc::max_multinomial(m_, k)); },
        py::arg("m"), py::arg("k"));
  m.def("isoperimetric_check",
        [](const std::vector<std::uint64_t>& a, std::optional<unsigned> g,
           std::optional<unsigned> k) {
          return dissoc::isoperimetric_check(a, make_variant(g, k));
        },
        py::arg("a"), py::arg("g") = py::none(), py::arg("k") = py::none());

  m.def("has_three_term_gp",
        [](const std::vector<std::uint64_t>& a) { return dissoc::has_three_term_gp(a); },
        py::arg("a"));
  m.def("gp_experiment", &gp_experiment_py, py::arg("n"), py::arg("L"), py::arg("samples"),
        py::arg("seed"), py::arg("workers") = 1);
  m.def("preset_shrinkage", &dissoc::preset_shrinkage, py::arg("n"), py::arg("A"));
}
