#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "auem/types.hpp"

namespace auem {

// Elementary qubit gates: CNOT, rotations exp(-i sigma_z xi/2) and
// exp(-i sigma_y xi/2), and an explicit global phase. Qubit 0 is the
// leftmost (most significant) register position.
enum class GateKind { kCnot, kRz, kRy, kGlobalPhase };

struct Gate {
  GateKind kind;
  int target = 0;
  int control = -1;
  double angle = 0.0;

  static Gate cnot(int control, int target) { return {GateKind::kCnot, target, control, 0.0}; }
  static Gate rz(int target, double xi) { return {GateKind::kRz, target, -1, xi}; }
  static Gate ry(int target, double xi) { return {GateKind::kRy, target, -1, xi}; }
  static Gate global_phase(double angle) { return {GateKind::kGlobalPhase, 0, -1, angle}; }
};

struct GateCircuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
};

// Sequential left-to-right application; all subsystems must be qubits.
PureState apply_circuit(const GateCircuit& c, const PureState& psi);

// Full matrix of the circuit: columns are the images of basis states.
Matrix circuit_matrix(const GateCircuit& c);

// Two-qubit gate whose matrix is exactly e^{-i theta/4} exp(i theta |Phi+><Phi+|):
// the Bell states are eigenstates, Phi+ picks up e^{i 3 theta/4} and the other
// three e^{-i theta/4}. `q0`, `q1` place the gate inside a larger register.
GateCircuit bell_phase_circuit(double theta, int n_qubits = 2, int q0 = 0, int q1 = 1);

// Three-qubit entangling circuit (register order S, X, Y): the Bell-phase
// gate with the minimal-interaction angle theta on (S, X), then the one with
// phi - phi0 on (X, Y), plus the phase making it equal to the
// minimal-interaction unitary. Requires F >= 1/2.
GateCircuit entangler_circuit(double fidelity, double phi);

// Text dump, one gate per line:
//   CNOT <target> <control>
//   RZ <target> <angle>
//   RY <target> <angle>
//   GPHASE <angle>
// with a leading "qubits <n>" line. Angles are printed with 17 significant
// digits so the dump round-trips exactly.
std::string format_circuit(const GateCircuit& c);
GateCircuit parse_circuit(std::istream& in);
GateCircuit parse_circuit(const std::string& text);

}  // namespace auem
