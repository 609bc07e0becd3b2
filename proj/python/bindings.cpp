// Python bindings for the entangling-machine core. States and operators
// cross the boundary as numpy arrays; composite dims are passed explicitly
// where a function needs them.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "auem/circuit.hpp"
#include "auem/cli.hpp"
#include "auem/machine.hpp"
#include "auem/measures.hpp"
#include "auem/qkd.hpp"
#include "auem/qudit.hpp"
#include "auem/random.hpp"
#include "auem/tensor.hpp"

namespace py = pybind11;
using namespace auem;

namespace {

PureState state_from(const Vector& amps, std::vector<int> dims) {
  return PureState(std::move(dims), amps);
}

PureState signal_from(const Vector& amps) {
  return PureState({static_cast<int>(amps.size())}, amps);
}

DensityOperator density_from(const Matrix& mat, std::vector<int> dims) {
  return DensityOperator(std::move(dims), mat);
}

}  // namespace

PYBIND11_MODULE(auem, m) {
  m.doc() = "asymmetric universal entangling machine for d-level systems";

  py::class_<MachineParams>(m, "MachineParams")
      .def_readonly("d", &MachineParams::d)
      .def_readonly("fidelity", &MachineParams::fidelity)
      .def_readonly("phi", &MachineParams::phi)
      .def_readonly("pi_s", &MachineParams::pi_s)
      .def_readonly("a", &MachineParams::a)
      .def_readonly("b", &MachineParams::b)
      .def_readonly("alpha", &MachineParams::alpha)
      .def_readonly("beta", &MachineParams::beta)
      .def_property_readonly("pi_x", &MachineParams::pi_x)
      .def_property_readonly("pi_y", &MachineParams::pi_y)
      .def("__repr__", [](const MachineParams& p) {
        return "MachineParams(d=" + std::to_string(p.d) +
               ", fidelity=" + std::to_string(p.fidelity) + ", phi=" + std::to_string(p.phi) + ")";
      });

  m.def("params_from_fidelity", &params_from_fidelity, py::arg("d"), py::arg("fidelity"),
        py::arg("phi") = 0.0);
  m.def("params_symmetric", &params_symmetric, py::arg("d"));
  m.def("optimal_entanglement", &optimal_entanglement, py::arg("d"), py::arg("fidelity"),
        "h_d(F), the optimal entanglement (bits) at signal fidelity F");
  m.def("fidelity_for_entanglement", &fidelity_for_entanglement, py::arg("d"),
        py::arg("entanglement_bits"));
  m.def("minimal_fidelity_bound", &minimal_fidelity_bound, py::arg("d"));
  m.def(
      "minimal_interaction_angles",
      [](int d, double f) {
        const auto a = minimal_interaction_angles(d, f);
        return py::make_tuple(a.phi0, a.theta0, a.theta);
      },
      py::arg("d"), py::arg("fidelity"), "(phi0, theta0, theta)");

  m.def(
      "bell_state", [](int d, int mm, int nn) { return bell_state(BellIndex(d, mm, nn)).amps; },
      py::arg("d"), py::arg("m"), py::arg("n"));
  m.def(
      "weyl_operator", [](int d, int mm, int nn) { return weyl_operator(BellIndex(d, mm, nn)).mat; },
      py::arg("d"), py::arg("m"), py::arg("n"));
  m.def(
      "orthogonal_state", [](const Vector& psi) { return orthogonal_state(signal_from(psi)).amps; },
      py::arg("psi"));

  m.def(
      "apply_machine",
      [](const MachineParams& p, const Vector& psi) { return apply_machine(p, signal_from(psi)).amps; },
      py::arg("params"), py::arg("psi"),
      "closed-form machine output on S x X x Y (row-major, S most significant)");
  m.def(
      "machine_unitary", [](const MachineParams& p) { return machine_unitary(p).mat; },
      py::arg("params"));
  m.def(
      "minimal_interaction_unitary",
      [](const MachineParams& p) { return minimal_interaction_unitary(p).mat; }, py::arg("params"));
  m.def(
      "coupling_operator", [](const MachineParams& p) { return coupling_operator(p).mat; },
      py::arg("params"));
  m.def(
      "kraus_operators",
      [](const MachineParams& p) {
        std::vector<Matrix> mats;
        for (auto& k : kraus_operators(p)) mats.push_back(std::move(k.mat));
        return mats;
      },
      py::arg("params"));
  m.def(
      "depolarize",
      [](const MachineParams& p, const Vector& psi) { return depolarize(p, signal_from(psi)).mat; },
      py::arg("params"), py::arg("psi"));
  m.def(
      "local_outputs",
      [](const MachineParams& p, const Vector& psi) {
        const auto lo = local_outputs(p, signal_from(psi));
        return py::make_tuple(lo.signal.mat, lo.conjugate.mat, lo.clone.mat);
      },
      py::arg("params"), py::arg("psi"), "(rho_S, rho_X, rho_Y)");
  m.def("conjugate_fidelity", &conjugate_fidelity, py::arg("params"));

  m.def(
      "partial_trace",
      [](const Matrix& rho, std::vector<int> dims, const std::vector<int>& keep) {
        return partial_trace(density_from(rho, std::move(dims)), keep).mat;
      },
      py::arg("rho"), py::arg("dims"), py::arg("keep"));
  m.def(
      "reduced_density",
      [](const Vector& psi, std::vector<int> dims, const std::vector<int>& keep) {
        return reduced_density(state_from(psi, std::move(dims)), keep).mat;
      },
      py::arg("psi"), py::arg("dims"), py::arg("keep"));
  m.def(
      "von_neumann_entropy",
      [](const Matrix& rho) {
        return von_neumann_entropy(density_from(rho, {static_cast<int>(rho.rows())}));
      },
      py::arg("rho"));
  m.def(
      "entanglement_entropy",
      [](const Vector& psi, std::vector<int> dims, const std::vector<int>& cut) {
        return entanglement_entropy(state_from(psi, std::move(dims)), cut);
      },
      py::arg("psi"), py::arg("dims"), py::arg("cut"));
  m.def(
      "fidelity",
      [](const Vector& psi, const Matrix& rho) {
        return fidelity(signal_from(psi), density_from(rho, {static_cast<int>(rho.rows())}));
      },
      py::arg("psi"), py::arg("rho"));
  m.def(
      "concurrence", [](const Matrix& rho) { return concurrence(density_from(rho, {2, 2})); },
      py::arg("rho"));
  m.def(
      "entanglement_of_formation",
      [](const Matrix& rho) { return entanglement_of_formation(density_from(rho, {2, 2})); },
      py::arg("rho"));

  m.def(
      "haar_random_state",
      [](int d, std::uint64_t seed) { return haar_random_state(d, seed).amps; }, py::arg("d"),
      py::arg("seed"));
  m.def(
      "haar_random_unitary",
      [](int d, std::uint64_t seed) { return haar_random_unitary(d, seed).mat; }, py::arg("d"),
      py::arg("seed"));

  m.def("six_state_bases", [] {
    py::list out;
    for (const auto& b : six_state_bases())
      out.append(py::make_tuple(b.name, b.zero.amps, b.one.amps));
    return out;
  });

  py::class_<EveStates>(m, "EveStates")
      .def_property_readonly("a", [](const EveStates& e) { return e.a.amps; })
      .def_property_readonly("b", [](const EveStates& e) { return e.b.amps; })
      .def_property_readonly("c", [](const EveStates& e) { return e.c.amps; })
      .def_property_readonly("d", [](const EveStates& e) { return e.d.amps; })
      .def_readonly("fidelity", &EveStates::fidelity);
  m.def("extract_eve_states", &extract_eve_states, py::arg("params"));
  m.def(
      "check_eve_states",
      [](const EveStates& e) {
        py::list out;
        for (const auto& c : check_eve_states(e).checks)
          out.append(py::make_tuple(c.name, c.residual, c.tolerance, c.pass));
        return out;
      },
      py::arg("eve_states"), "[(condition, residual, tolerance, pass), ...]");

  m.def(
      "bell_phase_matrix", [](double theta) { return circuit_matrix(bell_phase_circuit(theta)); },
      py::arg("theta"), "4x4 matrix of the gate: exp(-i theta/4) exp(i theta |Phi+><Phi+|)");
  m.def(
      "entangler_circuit_matrix",
      [](double f, double phi) { return circuit_matrix(entangler_circuit(f, phi)); },
      py::arg("fidelity"), py::arg("phi") = 0.0);
  m.def(
      "entangler_circuit_text",
      [](double f, double phi) { return format_circuit(entangler_circuit(f, phi)); },
      py::arg("fidelity"), py::arg("phi") = 0.0, "gate dump consumed by `auem circuit-verify`");

  py::class_<OptimalityScanResult>(m, "OptimalityScanResult")
      .def_readonly("max_entanglement", &OptimalityScanResult::max_entanglement)
      .def_readonly("bound", &OptimalityScanResult::bound)
      .def_readonly("trials", &OptimalityScanResult::trials)
      .def_readonly("accepted", &OptimalityScanResult::accepted)
      .def_readonly("seed", &OptimalityScanResult::seed);
  m.def("optimality_scan", &optimality_scan, py::arg("d"), py::arg("fidelity"), py::arg("trials"),
        py::arg("seed"));

  m.def(
      "tradeoff_curve",
      [](int d, long long samples) {
        py::list out;
        for (const auto& r : auem::cli::curve_records(d, samples, false))
          out.append(py::make_tuple(r.fidelity, r.entanglement_bits));
        return out;
      },
      py::arg("d"), py::arg("samples"), "[(F, E_bits), ...] on a uniform grid over [1/d, 1]");
}
