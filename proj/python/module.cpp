// Python bindings for the main toolkit operations: instance generation,
// exact measurement sampling, the two detectors, the self-similarity
// pipeline, and the classical baselines.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hidsym/baseline.hpp"
#include "hidsym/fast_sampler.hpp"
#include "hidsym/json_io.hpp"
#include "hidsym/rational.hpp"
#include "hidsym/selfsim.hpp"
#include "hidsym/shor.hpp"
#include "hidsym/simon.hpp"
#include "hidsym/state_sim.hpp"

namespace py = pybind11;
using namespace hidsym;

namespace {

py::dict json_to_dict(const Json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

}  // namespace

PYBIND11_MODULE(_hidsym, m) {
    m.doc() = "Hidden two-point symmetry detection toolkit";

    py::class_<OracleTable>(m, "OracleTable")
        .def(py::init([](int n, std::vector<std::uint32_t> values) {
                 OracleTable f{n, std::move(values)};
                 if (f.values.size() != f.size())
                     throw std::invalid_argument("table length must be 2^n");
                 return f;
             }),
             py::arg("n"), py::arg("values"))
        .def_readonly("n", &OracleTable::n)
        .def_readonly("values", &OracleTable::values)
        .def("__call__",
             [](const OracleTable& f, std::uint32_t x) { return f.values.at(x); });

    py::class_<Rng>(m, "Rng").def(py::init<std::uint64_t>(), py::arg("seed"));

    // Instances.
    py::class_<SimonInstance>(m, "SimonInstance")
        .def_readonly("n", &SimonInstance::n)
        .def_readonly("p", &SimonInstance::p)
        .def_readonly("q", &SimonInstance::q)
        .def_readonly("table", &SimonInstance::table);
    py::class_<LinearInstance>(m, "LinearInstance")
        .def_readonly("n", &LinearInstance::n)
        .def_readonly("b", &LinearInstance::b)
        .def_readonly("table", &LinearInstance::table)
        .def("apply_a", &LinearInstance::apply_a);
    py::class_<ShorInstance>(m, "ShorInstance")
        .def_readonly("n", &ShorInstance::n)
        .def_readonly("p", &ShorInstance::p)
        .def_readonly("q", &ShorInstance::q)
        .def_readonly("base", &ShorInstance::base)
        .def_readonly("table", &ShorInstance::table);
    py::class_<MultiXorInstance>(m, "MultiXorInstance")
        .def_readonly("n", &MultiXorInstance::n)
        .def_readonly("p", &MultiXorInstance::p)
        .def("reduce", &MultiXorInstance::reduce);

    m.def("gen_simon", &gen_simon, py::arg("n"), py::arg("p"), py::arg("q"),
          py::arg("seed"));
    m.def("gen_linear", &gen_linear, py::arg("n"), py::arg("seed"));
    m.def("gen_shor", &gen_shor, py::arg("n"), py::arg("p"), py::arg("q"),
          py::arg("seed"));
    m.def("gen_multixor", &gen_multixor, py::arg("n"), py::arg("p"),
          py::arg("seed"));

    // Sampling.
    m.def("sample_simon_y",
          [](const OracleTable& f, Rng& rng) {
              const auto s = sample_simon_y(f, rng);
              return py::make_tuple(s.y1, s.y2);
          },
          py::arg("table"), py::arg("rng"));
    m.def("sample_shor_pair", &sample_shor_pair, py::arg("table"),
          py::arg("rng"));
    m.def("simon_joint_distribution", &simon_joint_distribution);
    m.def("shor_joint_distribution", &shor_joint_distribution);

    // Detectors; reports surface as plain dicts.
    m.def("detect_simon",
          [](const OracleTable& f, int max_samples, int verify_trials,
             std::uint64_t seed, const std::string& engine) {
              SimonConfig cfg;
              cfg.max_samples = max_samples;
              cfg.verify_trials = verify_trials;
              cfg.seed = seed;
              cfg.engine = engine == "dense" ? Engine::Dense : Engine::Fast;
              return json_to_dict(report_to_json(detect_simon(f, cfg)));
          },
          py::arg("table"), py::arg("max_samples") = 0,
          py::arg("verify_trials") = 32, py::arg("seed") = 0,
          py::arg("engine") = "fast");
    m.def("detect_shor",
          [](const OracleTable& f, int max_pairs, long long m_bound,
             long long p_max, int lambda_max, double c, int verify_trials,
             std::uint64_t seed) {
              ShorConfig cfg;
              cfg.max_pairs = max_pairs;
              cfg.m = m_bound;
              cfg.p_max = p_max;
              cfg.lambda_max = lambda_max;
              cfg.c = c;
              cfg.verify_trials = verify_trials;
              cfg.seed = seed;
              return json_to_dict(report_to_json(detect_shor(f, cfg)));
          },
          py::arg("table"), py::arg("max_pairs") = 12, py::arg("M") = 0,
          py::arg("p_max") = 0, py::arg("lambda_max") = 16, py::arg("c") = 4.0,
          py::arg("verify_trials") = 32, py::arg("seed") = 0);
    m.def("detect_scale_invariance",
          [](const ShorInstance& inst, double g, double b, double chi_min,
             double delta, std::uint64_t seed) {
              const auto sig = synth_signal(inst, g, b, chi_min);
              ShorConfig cfg;
              cfg.seed = seed;
              return json_to_dict(
                  report_to_json(detect_scale_invariance(sig, cfg, delta)));
          },
          py::arg("instance"), py::arg("g") = 2.0, py::arg("b") = 2.0,
          py::arg("chi_min") = 1.0, py::arg("delta") = 1e-6,
          py::arg("seed") = 0);

    // Continued fractions.
    m.def("cf_quotients", &cf_quotients, py::arg("a"), py::arg("b"));
    m.def("convergents",
          [](const std::vector<long long>& qs) {
              std::vector<std::pair<long long, long long>> out;
              for (const auto& c : convergents(qs))
                  out.emplace_back(c.h, c.k);
              return out;
          });
    m.def("best_bounded",
          [](long long num, long long den, long long kmax) {
              const auto c = best_bounded(Fraction(num, den), kmax);
              return py::make_tuple(c.h, c.k);
          },
          py::arg("num"), py::arg("den"), py::arg("kmax"));
    m.def("cancel_combination",
          [](long long ky1, long long ky2, long long m_bound) {
              const auto cc = cancel_combination(ky1, ky2, m_bound);
              return py::make_tuple(cc.alpha1, cc.alpha2, cc.residual);
          },
          py::arg("ky1"), py::arg("ky2"), py::arg("M"));

    // Baselines.
    m.def("simon_scan",
          [](const OracleTable& f, std::uint64_t seed) {
              QueryCounter counter;
              Rng rng(seed);
              return json_to_dict(report_to_json(simon_scan(f, counter, rng)));
          },
          py::arg("table"), py::arg("seed") = 0);
    m.def("simon_birthday",
          [](const OracleTable& f, std::uint64_t seed) {
              QueryCounter counter;
              Rng rng(seed);
              return json_to_dict(
                  report_to_json(simon_birthday(f, counter, rng)));
          },
          py::arg("table"), py::arg("seed") = 0);
    m.def("shor_scan",
          [](const OracleTable& f, long long p_max, std::uint64_t seed) {
              QueryCounter counter;
              Rng rng(seed);
              return json_to_dict(
                  report_to_json(shor_scan(f, p_max, counter, rng)));
          },
          py::arg("table"), py::arg("p_max"), py::arg("seed") = 0);
}
