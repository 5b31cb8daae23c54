// Python bindings. Results come back as plain dicts built from the same JSON
// documents the command-line tool writes, so they can be fed to verify().

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "waring/apolarity.hpp"
#include "waring/certificates.hpp"
#include "waring/cli.hpp"
#include "waring/errors.hpp"
#include "waring/parse.hpp"
#include "waring/rank_series.hpp"

namespace py = pybind11;
using namespace waring;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::int_ big(const mpz_class& z) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10))); }

}  // namespace

PYBIND11_MODULE(_waring, m) {
  m.doc() = "Waring ranks and power-sum decompositions of forms";

  auto base = py::register_exception<Error>(m, "WaringError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  auto pre = py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<AmbiguityError>(m, "AmbiguityError", pre.ptr());
  py::register_exception<InternalConsistencyError>(m, "InternalConsistencyError", base.ptr());
  py::register_exception<ModeMismatch>(m, "ModeMismatch", base.ptr());

  m.def(
      "generic_k_rank",
      [](int n, int k, int d) {
        RankAnswer r = generic_k_rank(n, k, d);
        py::dict out;
        out["value"] = r.value;
        out["status"] = to_string(r.status);
        out["exceptional"] = r.exceptional;
        out["path"] = to_string(r.path);
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("d"));

  m.def(
      "froeberg_series",
      [](int n, const std::vector<int>& degrees, int cutoff) {
        TruncatedSeries s = froeberg_series(n, degrees, cutoff);
        py::list out;
        for (int j = 0; j <= cutoff; ++j) out.append(big(s[j]));
        return out;
      },
      py::arg("n"), py::arg("degrees"), py::arg("cutoff"));

  m.def(
      "secant_codim", [](int n, int k, int d, long s) { return big(secant_codim(n, k, d, s)); }, py::arg("n"),
      py::arg("k"), py::arg("d"), py::arg("s"));

  m.def("si_thresholds", &si_thresholds, py::arg("n"), py::arg("k"), py::arg("d"));

  m.def(
      "sylvester",
      [](const std::string& poly) {
        BinaryForm f = parse_binary(poly);
        return to_py(power_sum_json(sylvester_decompose(f), f.to_multi()));
      },
      py::arg("poly"));

  m.def(
      "three_cubes",
      [](const std::string& poly, bool fold) {
        BinaryForm p = parse_binary(poly);
        CubesCertificate c = three_cubes(p);
        if (fold) c = c.folded();
        return to_py(sextic_cubes_json(c, p));
      },
      py::arg("poly"), py::arg("fold") = false);

  m.def(
      "canonical_form",
      [](const std::string& poly, int k, int d, bool relaxed) {
        BinaryForm p = parse_binary(poly);
        return to_py(
            canonical_json(canonical_form(p, k, d, relaxed ? CanonicalVariant::relaxed : CanonicalVariant::unique), p));
      },
      py::arg("poly"), py::arg("k"), py::arg("d"), py::arg("relaxed") = false);

  m.def(
      "monomial_factor",
      [](const std::vector<int>& exponents, int k) {
        Exponent a(exponents.begin(), exponents.end());
        return to_py(monomial_json(monomial_k_factor(a, k), monomial_krank_upper(a, k)));
      },
      py::arg("exponents"), py::arg("k"));

  m.def(
      "krank_bound",
      [](const std::string& poly, int k, int budget, long samples, std::uint64_t seed) {
        BinaryForm f = parse_binary(poly);
        KrankOptions kopt;
        kopt.budget = budget;
        kopt.seed = seed;
        KrankUpper up;
        KrankLower lo;
        {
          py::gil_scoped_release release;
          up = krank_upper(f, k, kopt);
          ProbeOptions popt;
          popt.samples = samples;
          popt.seed = seed;
          popt.extra_points = {up.fiber_form};
          lo = krank_lower_probe(f, k, popt);
        }
        return to_py(krank_json(f, k, up, lo));
      },
      py::arg("poly"), py::arg("k"), py::arg("budget") = 500, py::arg("samples") = 2000, py::arg("seed") = 0);

  m.def(
      "verify",
      [](const py::object& doc, double tol) {
        CertificateCheck c = check_certificate(from_py(doc), tol);
        py::dict out;
        out["ok"] = c.ok;
        out["exact"] = c.exact;
        out["residual"] = c.residual;
        out["kind"] = c.kind;
        out["message"] = c.message;
        return out;
      },
      py::arg("certificate"), py::arg("tol") = 1e-8);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");
}
