#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

#include "korobov/approximator.hpp"
#include "korobov/complexity.hpp"
#include "korobov/errors.hpp"
#include "korobov/spectrum.hpp"
#include "korobov/tractability.hpp"
#include "korobov/zeta.hpp"

namespace py = pybind11;
using namespace korobov;

namespace {

// Counts cross as Python ints through their decimal form.
py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

WeightSequence make_weights(const std::string& family, const py::kwargs& kw) {
  auto num = [&](const char* key) {
    if (!kw.contains(key)) throw DomainError(std::string("missing weight parameter '") + key + "'");
    return kw[key].cast<double>();
  };
  auto vals = [&] {
    if (!kw.contains("values")) throw DomainError("missing weight parameter 'values'");
    return kw["values"].cast<std::vector<double>>();
  };
  const auto f = parse_family(family);
  if (!f) throw DomainError("unknown weight family '" + family + "'");
  switch (*f) {
    case WeightFamily::Constant: return WeightSequence::constant(num("c"));
    case WeightFamily::PolynomialDecay: return WeightSequence::polynomial_decay(num("c"), num("a"));
    case WeightFamily::Geometric: return WeightSequence::geometric(num("c"), num("q"));
    case WeightFamily::FiniteSupport: return WeightSequence::finite_support(vals());
    case WeightFamily::Explicit: return WeightSequence::explicit_values(vals());
  }
  throw DomainError("unknown weight family");
}

}  // namespace

PYBIND11_MODULE(_korobov, m) {
  m.doc() = "Information complexity and tractability of L2 approximation in weighted Korobov spaces";

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<MissingMetadataError>(m, "MissingMetadataError", PyExc_ValueError);
  py::register_exception<NotInSpaceError>(m, "NotInSpaceError", PyExc_ValueError);
  py::register_exception<OutOfRangeError>(m, "OutOfRangeError", PyExc_IndexError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<WeightSequence>(m, "Weights")
      .def(py::init(&make_weights), py::arg("family"),
           "Weights('poly', c=1, a=2); families: const, poly, geom, finite, explicit")
      .def("gamma", &WeightSequence::gamma, py::arg("j"))
      .def("prefix_sum", &WeightSequence::prefix_sum, py::arg("s"))
      .def("infimum", &WeightSequence::infimum)
      .def("sum_exponent", &WeightSequence::sum_exponent)
      .def_property_readonly("family", [](const WeightSequence& w) { return std::string(family_name(w.family())); })
      .def("__repr__", [](const WeightSequence& w) {
        return "Weights(" + std::string(family_name(w.family())) + ", " + w.describe_params() + ")";
      });

  py::class_<SpaceSpec>(m, "Space")
      .def(py::init<double, WeightSequence>(), py::arg("alpha"), py::arg("weights"))
      .def_property_readonly("alpha", &SpaceSpec::alpha)
      .def_property_readonly("weights", &SpaceSpec::weights);

  m.def("zeta", &zeta, py::arg("x"));
  m.def("r", [](const SpaceSpec& spec, const FreqIndex& k) { return r_multivariate(spec, k).value; },
        py::arg("spec"), py::arg("k"));
  m.def("trace", [](const SpaceSpec& spec, std::size_t s) { return trace(spec, s).value; },
        py::arg("spec"), py::arg("s"));
  m.def(
      "top_eigenvalues",
      [](const SpaceSpec& spec, std::size_t s, std::size_t n) {
        py::list out;
        for (const auto& e : top_eigenvalues(spec, s, n).entries) {
          out.append(py::make_tuple(py::tuple(py::cast(e.index)), e.eigenvalue));
        }
        return out;
      },
      py::arg("spec"), py::arg("s"), py::arg("n"), "[(index, eigenvalue)] in nonincreasing order");

  m.def(
      "count",
      [](const SpaceSpec& spec, std::size_t s, double eps, bool memoize) {
        CountOptions opt;
        opt.memoize = memoize;
        ComplexityResult r;
        {
          py::gil_scoped_release release;
          r = count_A(spec, s, eps, opt);
        }
        return py::make_tuple(to_py(r.count), to_py(r.boundary_ties));
      },
      py::arg("spec"), py::arg("s"), py::arg("eps"), py::arg("memoize") = false,
      "(|A(eps,s)|, boundary_ties)");
  m.def("brute_force_count", &brute_force_count, py::arg("spec"), py::arg("s"), py::arg("eps"));
  m.def("info_complexity_via_errors", &info_complexity_via_errors, py::arg("spec"), py::arg("s"),
        py::arg("eps"), py::arg("cap") = kDefaultSpectrumCap);
  m.def(
      "minimal_errors",
      [](const SpaceSpec& spec, std::size_t s, std::size_t n_max) {
        std::vector<double> e;
        for (const auto& p : nth_minimal_error(spec, s, n_max).points) e.push_back(p.error);
        return e;
      },
      py::arg("spec"), py::arg("s"), py::arg("n_max"), "[e(0), ..., e(n_max)]");
  m.def(
      "k_epsilon", [](const WeightSequence& w, std::size_t s, double eps) { return k_epsilon(w, s, eps).k; },
      py::arg("weights"), py::arg("s"), py::arg("eps"));

  m.def(
      "classify",
      [](const SpaceSpec& spec, const std::string& notion, const std::string& info_class, double sigma,
         double tau) {
        static const std::map<std::string, Notion> notions = {
            {"SPT", Notion::SPT}, {"PT", Notion::PT},   {"QPT", Notion::QPT},
            {"UWT", Notion::UWT}, {"WT", Notion::WT},   {"sigma-tau-WT", Notion::SigmaTauWT}};
        const auto it = notions.find(notion);
        if (it == notions.end()) throw DomainError("unknown notion '" + notion + "'");
        if (info_class != "all" && info_class != "std") throw DomainError("class must be 'all' or 'std'");
        const auto r = classify(spec, {it->second, info_class == "all" ? InfoClass::All : InfoClass::Std,
                                       sigma, tau});
        py::dict d;
        d["verdict"] = std::string(verdict_name(r.verdict));
        d["rule"] = r.rule;
        d["exponent"] = r.exponent ? py::cast(*r.exponent) : py::none();
        return d;
      },
      py::arg("spec"), py::arg("notion"), py::arg("info_class") = "all", py::arg("sigma") = 1.0,
      py::arg("tau") = 1.0);
  m.def(
      "spt_exponent",
      [](const SpaceSpec& spec, const std::string& c) {
        return spt_exponent(spec, c == "std" ? InfoClass::Std : InfoClass::All);
      },
      py::arg("spec"), py::arg("info_class") = "all");
  m.def("qpt_exponent", &qpt_exponent, py::arg("spec"));
  m.def(
      "qpt_criterion",
      [](const SpaceSpec& spec, std::uint64_t s, double tau) { return qpt_criterion_value(spec, s, tau).value; },
      py::arg("spec"), py::arg("s"), py::arg("tau"));

  m.def(
      "truncate",
      [](const SpaceSpec& spec, const std::map<FreqIndex, std::complex<double>>& coeffs, std::size_t s,
         std::size_t n) {
        FourierPolynomial f(s);
        for (const auto& [k, v] : coeffs) f.set(k, v);
        const auto a = truncate(spec, f, n);
        py::dict kept;
        for (const auto& [k, v] : a.result.coefficients()) kept[py::tuple(py::cast(k))] = v;
        return py::make_tuple(kept, l2_error(f, a));
      },
      py::arg("spec"), py::arg("coefficients"), py::arg("s"), py::arg("n"),
      "({index: coefficient} kept, exact L2 error)");
}
