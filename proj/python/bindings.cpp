#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "concbound/bounds.hpp"
#include "concbound/commands.hpp"
#include "concbound/concurrence.hpp"
#include "concbound/errors.hpp"
#include "concbound/roof.hpp"

namespace py = pybind11;
using namespace concbound;

namespace {

py::dict report_dict(const BoundReport& r) {
    py::dict d;
    d["method"] = std::string(method_name(r.method));
    d["quantity"] = std::string(quantity_name(r.quantity));
    d["value"] = r.value;
    d["concurrence"] = r.concurrence();
    d["parties"] = r.parties;
    d["witness_cut"] = r.witness_cut;
    std::vector<std::string> parts;
    for (const auto& p : r.witness_partitions) parts.push_back(p.render());
    d["witness_partitions"] = parts;
    d["params"] = r.params;
    return d;
}

DensityMatrix density(const std::vector<int>& dims, const ComplexMatrix& m) {
    return DensityMatrix(SubsystemDims(dims), m);
}

PureState pure(const std::vector<int>& dims, const ComplexVector& v) {
    return PureState(SubsystemDims(dims), v);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Concurrence lower bounds for multipartite quantum states.";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    m.def("generalized_ghz", [](int n, double theta) { return make_generalized_ghz(n, theta).amplitudes(); },
          py::arg("n"), py::arg("theta"));
    m.def("double_bell", [] { return make_double_bell().amplitudes(); });
    m.def("isotropic_mixture",
          [](const std::vector<int>& dims, const ComplexVector& psi, double t) {
              return make_isotropic_mixture(pure(dims, psi), t).matrix();
          },
          py::arg("dims"), py::arg("psi"), py::arg("t"));
    m.def("random_pure",
          [](const std::vector<int>& dims, std::uint64_t seed) {
              return random_pure(SubsystemDims(dims), seed).amplitudes();
          },
          py::arg("dims"), py::arg("seed"));
    m.def("random_density",
          [](const std::vector<int>& dims, std::size_t rank, std::uint64_t seed) {
              return random_density(SubsystemDims(dims), rank, seed).matrix();
          },
          py::arg("dims"), py::arg("rank"), py::arg("seed"));

    m.def("partial_trace",
          [](const ComplexMatrix& rho, const std::vector<int>& dims, const std::vector<int>& keep) {
              return partial_trace(rho, SubsystemDims(dims), keep);
          },
          py::arg("rho"), py::arg("dims"), py::arg("keep"));
    m.def("partial_transpose",
          [](const ComplexMatrix& rho, const std::vector<int>& dims, bool second) {
              return partial_transpose(rho, SubsystemDims(dims), second ? Side::Second : Side::First);
          },
          py::arg("rho"), py::arg("dims"), py::arg("second") = true);
    m.def("realign",
          [](const ComplexMatrix& rho, const std::vector<int>& dims) {
              return realign(rho, SubsystemDims(dims));
          },
          py::arg("rho"), py::arg("dims"));
    m.def("trace_norm", [](const ComplexMatrix& a) { return trace_norm(a); }, py::arg("m"));

    m.def("pure_concurrence",
          [](const std::vector<int>& dims, const ComplexVector& psi) {
              return pure_concurrence_full(pure(dims, psi)).value;
          },
          py::arg("dims"), py::arg("psi"));
    m.def("partition_concurrence",
          [](const std::vector<int>& dims, const ComplexVector& psi, const std::string& partition) {
              return pure_concurrence_partition(pure(dims, psi), Partition::parse(partition)).value;
          },
          py::arg("dims"), py::arg("psi"), py::arg("partition"));
    m.def("avg_partition_concurrence_sq",
          [](const std::vector<int>& dims, const ComplexVector& psi, int blocks) {
              return avg_partition_concurrence_sq(pure(dims, psi), blocks);
          },
          py::arg("dims"), py::arg("psi"), py::arg("m"));
    m.def("wootters_concurrence",
          [](const ComplexMatrix& rho) { return wootters_concurrence(density({2, 2}, rho)).value; },
          py::arg("rho"));
    m.def("enumerate_partitions",
          [](int n, int blocks) {
              std::vector<std::string> out;
              for (const auto& p : enumerate_partitions(n, blocks)) out.push_back(p.render());
              return out;
          },
          py::arg("n"), py::arg("m"));

    m.def("bound",
          [](const std::vector<int>& dims, const ComplexMatrix& rho, const std::string& method,
             const std::vector<double>& weights) {
              const auto tag = parse_method(method);
              if (!tag) throw DomainError("unknown method '" + method + "'");
              return report_dict(compute_bound(density(dims, rho), *tag, weights));
          },
          py::arg("dims"), py::arg("rho"), py::arg("method"),
          py::arg("weights") = std::vector<double>{});
    m.def("reference_curves",
          [](double t) {
              const auto c = reference_curves(t);
              py::dict d;
              d["a"] = c.a;
              d["b"] = c.b;
              d["combined"] = c.combined;
              return d;
          },
          py::arg("t"));
    m.def("roof_upper",
          [](const std::vector<int>& dims, const ComplexMatrix& rho, std::size_t ensemble_size,
             int iterations, int restarts, std::uint64_t seed) {
              RoofOptions opt;
              opt.ensemble_size = ensemble_size;
              opt.iterations = iterations;
              opt.restarts = restarts;
              opt.seed = seed;
              const auto e = convex_roof_upper(density(dims, rho), opt);
              py::dict d;
              d["value"] = e.value;
              d["rank"] = e.rank;
              d["ensemble_size"] = e.ensemble_size;
              d["best_restart"] = e.best_restart;
              d["converged"] = e.converged;
              return d;
          },
          py::arg("dims"), py::arg("rho"), py::arg("ensemble_size") = 0,
          py::arg("iterations") = 2000, py::arg("restarts") = 20, py::arg("seed") = kDefaultSeed);

    m.def("ghz_sweep_csv",
          [](int n, int points, unsigned threads) { return ghz_sweep_csv(n, {points, threads}); },
          py::arg("n") = 4, py::arg("points") = 181, py::arg("threads") = 1);
    m.def("example_sweep_csv",
          [](int points, unsigned threads) {
              ExampleSweepOptions opt;
              opt.points = points;
              opt.threads = threads;
              return example_sweep(opt).csv;
          },
          py::arg("points") = 201, py::arg("threads") = 1);
}
