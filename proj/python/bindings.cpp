// Python module exposing model loading, circuit compilation, exact
// Franck-Condon profiles and the sampler. Occupation vectors cross the
// boundary as tuples of ints; matrices and vectors as numpy arrays.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vbs/doktorov.hpp"
#include "vbs/error.hpp"
#include "vbs/fcf.hpp"
#include "vbs/permanent.hpp"
#include "vbs/quadrature.hpp"
#include "vbs/sampler.hpp"
#include "vbs/spectrum.hpp"
#include "vbs/verify.hpp"
#include "vbs/vibmodel.hpp"

namespace py = pybind11;
using namespace vbs;

namespace {

using Occupations = std::vector<int>;

Occupations to_tuple(const FockState& s) { return {s.occupations().begin(), s.occupations().end()}; }

std::vector<Occupations> to_tuples(const std::vector<FockState>& states) {
  std::vector<Occupations> out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(to_tuple(s));
  return out;
}

py::dict binned_dict(const BinnedSpectrum& b) {
  py::dict d;
  d["bin_width"] = b.bin_width;
  d["origin"] = b.origin;
  d["values"] = b.values;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Vibronic spectra via the modified boson-sampling construction";

  static py::exception<Error> vbs_error(m, "VbsError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = vbs_error;
      py::object instance = exc(e.what());
      instance.attr("code") = errc_name(e.code());
      PyErr_SetObject(exc.ptr(), instance.ptr());
    }
  });

  py::class_<MolecularModel>(m, "MolecularModel")
      .def(py::init([](Vector wi, Vector wf, Matrix u, Vector delta, std::vector<std::string> labels) {
             return MolecularModel(std::move(wi), std::move(wf), std::move(u),
                                   DimensionlessDisplacement{std::move(delta)}, std::move(labels));
           }),
           py::arg("omega_initial"), py::arg("omega_final"), py::arg("duschinsky"), py::arg("delta"),
           py::arg("block_labels") = std::vector<std::string>{})
      .def_property_readonly("modes", &MolecularModel::mode_count)
      .def_property_readonly("omega_initial", &MolecularModel::omega_initial)
      .def_property_readonly("omega_final", &MolecularModel::omega_final)
      .def_property_readonly("duschinsky", &MolecularModel::duschinsky)
      .def_property_readonly("block_labels", &MolecularModel::block_labels)
      .def_property_readonly("delta", [](const MolecularModel& model) { return delta_from_displacement(model); })
      .def("to_json", &serialize_molecule);

  m.def("parse_molecule", [](const std::string& path) { return parse_molecule(path); }, py::arg("path"));
  m.def("parse_molecule_json", [](const std::string& text) { return parse_molecule_json(text); }, py::arg("text"));

  py::class_<DoktorovParameters>(m, "DoktorovParameters")
      .def_readonly("j_matrix", &DoktorovParameters::j_matrix)
      .def_readonly("delta", &DoktorovParameters::delta)
      .def_readonly("q_matrix", &DoktorovParameters::q_matrix)
      .def_readonly("p_matrix", &DoktorovParameters::p_matrix)
      .def_readonly("r_matrix", &DoktorovParameters::r_matrix)
      .def_readonly("w_matrix", &DoktorovParameters::w_matrix)
      .def_readonly("r_vector", &DoktorovParameters::r_vector)
      .def_readonly("vacuum_overlap", &DoktorovParameters::vacuum_overlap);

  py::class_<CircuitSpec>(m, "CircuitSpec")
      .def_readonly("rotation_left", &CircuitSpec::rotation_left)
      .def_readonly("sigma", &CircuitSpec::sigma)
      .def_readonly("rotation_right", &CircuitSpec::rotation_right)
      .def_readonly("log_squeezing", &CircuitSpec::log_squeezing)
      .def_readonly("input_coherent", &CircuitSpec::input_coherent)
      .def("report", &apparatus_report)
      .def("to_json", &circuit_to_json);

  m.def("build_doktorov", &build_doktorov, py::arg("model"));
  m.def("compile_circuit", &compile_circuit, py::arg("params"));

  m.def(
      "fc_amplitude",
      [](const DoktorovParameters& p, const Occupations& n, const Occupations& mm) {
        return fc_amplitude(generating_function(p), FockState(n), FockState(mm));
      },
      py::arg("params"), py::arg("n"), py::arg("m"));

  m.def(
      "fcp_exact",
      [](const DoktorovParameters& p, int cutoff, double prob_floor, unsigned threads) {
        FcfOptions o;
        o.threads = threads;
        const FcpResult r = fcp_exact(p, cutoff, prob_floor, o);
        py::list entries;
        for (const auto& e : r.entries) entries.append(py::make_tuple(py::tuple(py::cast(to_tuple(e.state))), e.fcf));
        return py::make_tuple(entries, r.captured_probability);
      },
      py::arg("params"), py::arg("cutoff") = 10, py::arg("prob_floor") = 1e-4, py::arg("threads") = 1,
      "Returns ([(occupations, fcf), ...], captured_probability).");

  m.def(
      "sample",
      [](const MolecularModel& model, std::size_t n, std::uint64_t seed, int cutoff, double epsilon, double bin_width,
         bool counts, unsigned threads) {
        FcfOptions o;
        o.threads = threads;
        const TruncatedDistribution dist = build_distribution(build_doktorov(model), cutoff, epsilon, o);
        const SampleRun run = draw_samples(dist, n, seed, threads);
        py::dict d;
        d["samples"] = to_tuples(run.samples);
        d["captured_mass"] = dist.captured_mass;
        d["target_reached"] = dist.target_reached;
        d["histogram"] = binned_dict(estimate_fcp(run, model.omega_final(), bin_width, counts));
        d["exact"] = binned_dict(bin_sticks(distribution_sticks(dist, model.omega_final()), bin_width));
        return d;
      },
      py::arg("model"), py::arg("n") = 300, py::arg("seed") = 42, py::arg("cutoff") = 10,
      py::arg("epsilon") = 1e-4, py::arg("bin_width") = 200.0, py::arg("counts") = false, py::arg("threads") = 1);

  m.def(
      "bin_sticks",
      [](const std::vector<std::pair<double, double>>& sticks, double bin_width) {
        StickSpectrum s;
        for (const auto& [w, i] : sticks) s.sticks.push_back({w, i, std::nullopt});
        return binned_dict(bin_sticks(s, bin_width));
      },
      py::arg("sticks"), py::arg("bin_width"));

  m.def(
      "enumerate_bin_states",
      [](const Vector& omega_final, double lo, double hi, int max_quanta) {
        return to_tuples(enumerate_bin_states(omega_final, lo, hi, max_quanta));
      },
      py::arg("omega_final"), py::arg("lo"), py::arg("hi"), py::arg("max_quanta"));

  m.def(
      "quadrature_overlap",
      [](const MolecularModel& model, const Occupations& n, const Occupations& mm) {
        return quadrature_overlap(model, FockState(n), FockState(mm));
      },
      py::arg("model"), py::arg("n"), py::arg("m"));

  m.def("ryser_permanent", py::overload_cast<const Matrix&>(&ryser_permanent), py::arg("a"));
  m.def("required_samples", &required_samples, py::arg("epsilon"));
  m.def(
      "estimate_hermite_terms",
      [](const Occupations& n, const Occupations& mm) {
        const auto c = estimate_hermite_terms(FockState(n), FockState(mm));
        return py::make_tuple(c.kan_terms, c.wick_terms);
      },
      py::arg("n"), py::arg("m"));

  m.def(
      "verify",
      [](const std::string& oracle, std::uint64_t seed, bool corrupt_w) {
        VerifyOptions o;
        if (oracle == "quadrature") {
          o.oracle = Oracle::Quadrature;
        } else if (oracle == "permanent") {
          o.oracle = Oracle::Permanent;
        } else if (oracle == "none") {
          o.oracle = Oracle::None;
        } else {
          throw Error(Errc::InvalidArgument, "unknown oracle '" + oracle + "'");
        }
        o.seed = seed;
        o.corrupt_w = corrupt_w;
        const VerifyReport r = run_oracle_suite(o);
        return py::make_tuple(r.passed(), r.to_text());
      },
      py::arg("oracle") = "quadrature", py::arg("seed") = 42, py::arg("corrupt_w") = false,
      "Returns (passed, report_text).");
}
