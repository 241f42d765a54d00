#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aliquot/cli.hpp"
#include "aliquot/divisor_sieve.hpp"
#include "aliquot/error.hpp"
#include "aliquot/goldbach.hpp"
#include "aliquot/key_lemma.hpp"
#include "aliquot/preimage.hpp"
#include "aliquot/report.hpp"
#include "aliquot/statistics.hpp"

namespace py = pybind11;
using namespace aliquot;

namespace {

SieveConfig config(unsigned threads) { return SieveConfig{.threads = threads}; }

// Reports cross the boundary as JSON text; the Python package decodes them.
template <typename T>
std::string as_json(const T& value) {
  return to_json_line(to_report(value));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Aliquot preimages of integers with restricted digits";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);

  m.attr("version") = kToolVersion;

  py::class_<DigitSet>(m, "DigitSet")
      .def(py::init<u64, const std::vector<unsigned>&>(), py::arg("base"), py::arg("digits"))
      .def_static("parse", [](const std::string& text) { return DigitSet::parse(text); })
      .def_property_readonly("base", &DigitSet::base)
      .def_property_readonly("digits", &DigitSet::digits)
      .def("__len__", &DigitSet::size)
      .def("__contains__", &DigitSet::allows)
      .def("__str__", &DigitSet::str)
      .def("__repr__", [](const DigitSet& ds) { return "DigitSet('" + ds.str() + "')"; });

  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("sigma", &sigma_naive, py::arg("n"));
  m.def("s", &s_of, py::arg("n"));
  m.def(
      "sigma_range",
      [](u64 lo, u64 hi) {
        const auto seg = sieve_range(lo, hi, primes_for_sieve(hi));
        return std::vector<u64>(seg.sigma().begin(), seg.sigma().end());
      },
      py::arg("lo"), py::arg("hi"), "sigma(n) for lo <= n < hi");

  m.def("is_ellipsephic", &is_ellipsephic, py::arg("n"), py::arg("digit_set"));
  m.def("count_up_to", &count_up_to, py::arg("x"), py::arg("digit_set"));
  m.def(
      "count_in_class",
      [](u64 x, const DigitSet& ds, u64 q, u64 a) { return count_in_class(x, ds, ClassQuery{q, a}); },
      py::arg("x"), py::arg("digit_set"), py::arg("modulus"), py::arg("residue"));
  m.def("class_counts", &class_counts, py::arg("x"), py::arg("digit_set"), py::arg("modulus"));
  m.def("enumerate", &enumerate, py::arg("digit_set"), py::arg("x"));

  m.def(
      "_preimage_count",
      [](u64 x, const DigitSet& ds, double gamma, unsigned threads) {
        return as_json(preimage_count(x, ds, gamma, config(threads)));
      },
      py::arg("x"), py::arg("digit_set"), py::arg("gamma"), py::arg("threads"));
  m.def("choose_k", &choose_k, py::arg("x"), py::arg("digit_set"), py::arg("gamma"));
  m.def(
      "_split",
      [](u64 x, const DigitSet& ds, u64 k, unsigned threads) {
        return as_json(s1_s2_split(x, ds, k, config(threads)));
      },
      py::arg("x"), py::arg("digit_set"), py::arg("k"), py::arg("threads"));
  m.def(
      "key_lemma_count",
      [](u64 x, u64 g, u64 k, unsigned threads) { return key_lemma_count(x, g, k, config(threads)); },
      py::arg("x"), py::arg("base"), py::arg("k"), py::arg("threads") = 0);
  m.def(
      "_key_lemma_params",
      [](u64 x, u64 g, u64 k) { return as_json(key_lemma_params(x, g, k)); }, py::arg("x"),
      py::arg("base"), py::arg("k"));
  m.def(
      "bound_suite",
      [](u64 x, u64 q, double gamma, double delta) {
        const auto b = bound_suite(x, q, gamma, delta);
        return py::dict(py::arg("pollack") = b.pollack, py::arg("key_lemma") = b.key_lemma,
                        py::arg("main") = b.main, py::arg("phi_q") = b.phi_q);
      },
      py::arg("x"), py::arg("q"), py::arg("gamma"), py::arg("delta"));
  m.def(
      "ab_decompose",
      [](u64 n, u64 m) {
        const auto d = ab_decompose(n, m);
        return py::make_tuple(d.a, d.b);
      },
      py::arg("n"), py::arg("m"));
  m.def(
      "_omega_stats",
      [](u64 x, double epsilon, unsigned threads) { return as_json(omega_s_stats(x, epsilon, config(threads))); },
      py::arg("x"), py::arg("epsilon"), py::arg("threads"));
  m.def(
      "_residue_counts",
      [](u64 x, u64 p, unsigned threads) { return as_json(residue_counts(x, p, config(threads))); },
      py::arg("x"), py::arg("p"), py::arg("threads"));
  m.def(
      "c_of_D",
      [](const DigitSet& ds) {
        const Rational c = c_of_D(ds);
        return py::make_tuple(c.num(), c.den());
      },
      py::arg("digit_set"), "c(D) as a (numerator, denominator) pair");
  m.def(
      "_goldbach_count",
      [](u64 x, const DigitSet& ds, unsigned threads) {
        return as_json(goldbach_count(x, ds, primes_up_to(x), config(threads)));
      },
      py::arg("x"), py::arg("digit_set"), py::arg("threads"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> argv{"aliquot"};
        argv.insert(argv.end(), args.begin(), args.end());
        std::ostringstream out;
        std::ostringstream err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = cli::run(argv, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line tool in-process; returns (exit_code, stdout, stderr)");
}
