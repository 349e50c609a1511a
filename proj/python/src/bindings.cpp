// Thin Python layer. Structured results cross the boundary as the same JSON
// documents the CLI prints; the package wrapper decodes them.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hypoh/bivar.hpp"
#include "hypoh/census.hpp"
#include "hypoh/cli.hpp"
#include "hypoh/format.hpp"
#include "hypoh/report.hpp"
#include "hypoh/wreath.hpp"

namespace py = pybind11;
using namespace hypoh;

namespace {

std::string doc_json(const Document& doc) { return render(doc, Format::json, true); }

std::vector<FactType> to_types(const std::vector<std::vector<unsigned>>& parts) {
  std::vector<FactType> out;
  for (const auto& p : parts) out.emplace_back(p);
  return out;
}

}  // namespace

PYBIND11_MODULE(_hypoh, m) {
  // Translators run newest first, so the subclass goes last.
  auto& domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", domain.ptr());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));

  m.def(
      "field_info",
      [](std::uint64_t p, unsigned k) {
        Document doc = make_document("field-info");
        doc.body["field"] = field_json(*make_field(p, k));
        return doc_json(doc);
      },
      py::arg("p"), py::arg("k") = 1);

  m.def(
      "census",
      [](std::uint64_t p, unsigned k, unsigned n, const std::vector<std::string>& fs, bool sample,
         std::uint64_t samples, std::uint64_t seed, bool raw, unsigned threads) {
        CensusSpec spec;
        spec.ctx = make_field(p, k);
        spec.n = n;
        for (const auto& f : fs) spec.fs.push_back(parse_poly(spec.ctx, f));
        spec.sample = sample;
        spec.samples = samples;
        spec.seed = seed;
        spec.raw = raw;
        spec.threads = threads;
        CensusReport rep;
        {
          py::gil_scoped_release release;
          rep = run_census(spec);
        }
        Document doc = make_document("census");
        add_census(doc, spec, rep);
        return doc_json(doc);
      },
      py::arg("p"), py::arg("k"), py::arg("n"), py::arg("fs"), py::arg("sample") = false,
      py::arg("samples") = 0, py::arg("seed") = 0, py::arg("raw") = false, py::arg("threads") = 1);

  m.def(
      "predict_density",
      [](unsigned n, const std::vector<unsigned>& orbit_sizes,
         const std::optional<std::vector<std::vector<unsigned>>>& targets) {
        const OrbitSetup s = setup_from_orbit_sizes(n, orbit_sizes);
        const Rational r = predict_density(s, targets ? to_types(*targets) : all_transitive_targets(s));
        return py::make_tuple(r.numerator(), r.denominator());
      },
      py::arg("n"), py::arg("orbit_sizes"), py::arg("targets") = py::none());

  m.def(
      "count_transitive",
      [](unsigned n, const std::vector<unsigned>& orbit_sizes, unsigned threads) {
        const OrbitSetup s = setup_from_orbit_sizes(n, orbit_sizes);
        py::gil_scoped_release release;
        return count_transitive(s, threads);
      },
      py::arg("n"), py::arg("orbit_sizes"), py::arg("threads") = 1);

  m.def(
      "factor_type",
      [](std::uint64_t p, unsigned k, const std::string& poly) {
        return fact_type(parse_poly(make_field(p, k), poly)).parts;
      },
      py::arg("p"), py::arg("k"), py::arg("poly"));

  m.def(
      "is_irreducible",
      [](std::uint64_t p, unsigned k, const std::string& poly) {
        return is_irreducible(parse_poly(make_field(p, k), poly));
      },
      py::arg("p"), py::arg("k"), py::arg("poly"));

  m.def(
      "discriminant",
      [](std::uint64_t p, unsigned k, const std::string& poly) {
        FieldPtr F = make_field(p, k);
        return format_elem(*F, discriminant(parse_poly(F, poly)).code());
      },
      py::arg("p"), py::arg("k"), py::arg("poly"));

  m.def(
      "symbolic_discriminant",
      [](std::uint64_t p, unsigned k, const std::string& poly) {
        return format_poly(sym_discriminant(RPoly::parse(make_field(p, k), poly)), "T");
      },
      py::arg("p"), py::arg("k"), py::arg("poly"));

  m.def(
      "swan",
      [](unsigned max_degree, unsigned threads) {
        SwanReport rep;
        {
          py::gil_scoped_release release;
          rep = swan_mode(max_degree, threads);
        }
        Document doc = make_document("swan");
        add_swan(doc, rep);
        return doc_json(doc);
      },
      py::arg("max_degree"), py::arg("threads") = 1);

  m.def(
      "correlation",
      [](unsigned k, const std::vector<std::string>& omega) {
        FieldPtr F = make_field(2, k);
        std::vector<Elem> w;
        for (const auto& s : omega) w.push_back(parse_elem(*F, s));
        const CorrelationReport rep = correlation_mode(F, w);
        Document doc = make_document("corr");
        add_correlation(doc, *F, rep);
        return doc_json(doc);
      },
      py::arg("k"), py::arg("omega"));
}
