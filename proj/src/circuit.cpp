#include "auem/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

#include "auem/machine.hpp"

namespace auem {
namespace {

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) throw std::invalid_argument("gate qubit index out of range");
}

void apply_single(Vector& amps, int n, int target, const Matrix& u) {
  const long long mask = 1LL << (n - 1 - target);  // qubit 0 is most significant
  for (long long i = 0; i < amps.size(); ++i) {
    if (i & mask) continue;
    const Complex a0 = amps(i);
    const Complex a1 = amps(i | mask);
    amps(i) = u(0, 0) * a0 + u(0, 1) * a1;
    amps(i | mask) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

void apply_gate(Vector& amps, int n, const Gate& g) {
  switch (g.kind) {
    case GateKind::kCnot: {
      check_qubit(g.control, n);
      check_qubit(g.target, n);
      if (g.control == g.target) throw std::invalid_argument("CNOT control equals target");
      const long long cmask = 1LL << (n - 1 - g.control);
      const long long tmask = 1LL << (n - 1 - g.target);
      for (long long i = 0; i < amps.size(); ++i)
        if ((i & cmask) && !(i & tmask)) std::swap(amps(i), amps(i | tmask));
      break;
    }
    case GateKind::kRz: {
      check_qubit(g.target, n);
      Matrix u(2, 2);
      u << std::polar(1.0, -g.angle / 2), 0.0, 0.0, std::polar(1.0, g.angle / 2);
      apply_single(amps, n, g.target, u);
      break;
    }
    case GateKind::kRy: {
      check_qubit(g.target, n);
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      Matrix u(2, 2);
      u << Complex(c), Complex(-s), Complex(s), Complex(c);
      apply_single(amps, n, g.target, u);
      break;
    }
    case GateKind::kGlobalPhase:
      amps *= std::polar(1.0, g.angle);
      break;
  }
}

}  // namespace

PureState apply_circuit(const GateCircuit& c, const PureState& psi) {
  for (int d : psi.dims)
    if (d != 2) throw std::invalid_argument("apply_circuit: all subsystems must be qubits");
  if (static_cast<int>(psi.dims.size()) != c.n_qubits)
    throw std::invalid_argument("apply_circuit: register size mismatch");
  Vector amps = psi.amps;
  for (const Gate& g : c.gates) apply_gate(amps, c.n_qubits, g);
  return PureState(psi.dims, std::move(amps));
}

Matrix circuit_matrix(const GateCircuit& c) {
  const long long n = 1LL << c.n_qubits;
  Matrix m(n, n);
  for (long long k = 0; k < n; ++k) {
    Vector amps = Vector::Zero(n);
    amps(k) = 1.0;
    for (const Gate& g : c.gates) apply_gate(amps, c.n_qubits, g);
    m.col(k) = amps;
  }
  return m;
}

GateCircuit bell_phase_circuit(double theta, int n_qubits, int q0, int q1) {
  if (n_qubits < 2) throw std::invalid_argument("bell_phase_circuit needs at least 2 qubits");
  check_qubit(q0, n_qubits);
  check_qubit(q1, n_qubits);
  if (q0 == q1) throw std::invalid_argument("bell_phase_circuit: identical qubits");

  GateCircuit c;
  c.n_qubits = n_qubits;
  const auto hadamard = [&](int q) {
    // H = i RY(pi/2) RZ(pi)
    c.gates.push_back(Gate::rz(q, M_PI));
    c.gates.push_back(Gate::ry(q, M_PI / 2));
    c.gates.push_back(Gate::global_phase(M_PI / 2));
  };

  // Bell -> computational basis change, a phase on |00> via three RZ layers
  // (one XOR-conjugated), then the inverse basis change. The composite is
  // exactly e^{-i theta/4} exp(i theta |Phi+><Phi+|).
  c.gates.push_back(Gate::cnot(q0, q1));
  hadamard(q0);
  c.gates.push_back(Gate::rz(q0, -theta / 2));
  c.gates.push_back(Gate::rz(q1, -theta / 2));
  c.gates.push_back(Gate::cnot(q0, q1));
  c.gates.push_back(Gate::rz(q1, -theta / 2));
  c.gates.push_back(Gate::cnot(q0, q1));
  hadamard(q0);
  c.gates.push_back(Gate::cnot(q0, q1));
  return c;
}

GateCircuit entangler_circuit(double fidelity, double phi) {
  const MinimalInteractionAngles ang = minimal_interaction_angles(2, fidelity);
  GateCircuit c;
  c.n_qubits = 3;
  const GateCircuit g_sx = bell_phase_circuit(ang.theta, 3, 0, 1);
  const GateCircuit g_xy = bell_phase_circuit(phi - ang.phi0, 3, 1, 2);
  c.gates = g_sx.gates;
  c.gates.insert(c.gates.end(), g_xy.gates.begin(), g_xy.gates.end());
  // lift the two e^{-i xi/4} prefactors and add e^{i theta0}
  c.gates.push_back(Gate::global_phase(ang.theta0 + (ang.theta + phi - ang.phi0) / 4));
  return c;
}

std::string format_circuit(const GateCircuit& c) {
  std::ostringstream out;
  char buf[64];
  const auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  out << "qubits " << c.n_qubits << "\n";
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::kCnot:
        out << "CNOT " << g.target << " " << g.control << "\n";
        break;
      case GateKind::kRz:
        out << "RZ " << g.target << " " << num(g.angle) << "\n";
        break;
      case GateKind::kRy:
        out << "RY " << g.target << " " << num(g.angle) << "\n";
        break;
      case GateKind::kGlobalPhase:
        out << "GPHASE " << num(g.angle) << "\n";
        break;
    }
  }
  return out.str();
}

GateCircuit parse_circuit(std::istream& in) {
  GateCircuit c;
  std::string line;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    const auto fail = [&](const char* why) {
      throw std::invalid_argument("circuit line " + std::to_string(lineno) + ": " + why);
    };
    if (!have_header) {
      if (tok != "qubits") fail("expected 'qubits <n>' header");
      if (!(ls >> c.n_qubits) || c.n_qubits < 1) fail("bad qubit count");
      have_header = true;
      continue;
    }
    if (tok == "CNOT") {
      int t, ctl;
      if (!(ls >> t >> ctl)) fail("CNOT needs target and control");
      c.gates.push_back(Gate::cnot(ctl, t));
    } else if (tok == "RZ" || tok == "RY") {
      int t;
      double a;
      if (!(ls >> t >> a)) fail("rotation needs target and angle");
      c.gates.push_back(tok == "RZ" ? Gate::rz(t, a) : Gate::ry(t, a));
    } else if (tok == "GPHASE") {
      double a;
      if (!(ls >> a)) fail("GPHASE needs an angle");
      c.gates.push_back(Gate::global_phase(a));
    } else {
      fail("unknown gate");
    }
  }
  if (!have_header) throw std::invalid_argument("circuit dump missing 'qubits' header");
  return c;
}

GateCircuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

}  // namespace auem
