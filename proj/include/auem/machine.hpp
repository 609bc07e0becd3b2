#pragma once

#include <cstdint>
#include <vector>

#include "auem/types.hpp"

namespace auem {

// Raised when a fidelity is below the minimal-interaction bound
// 1 - 4(d-1)/d^3 (1/2 for d=2, 19/27 for d=3).
class FidelityTooLowError : public std::invalid_argument {
 public:
  FidelityTooLowError(int d, double fidelity, double bound);
  double bound() const { return bound_; }

 private:
  double bound_;
};

// Machine parameters for dimension d and signal fidelity F, with the
// constraint chain
//   F = 1 - pi_s + pi_s/d,
//   a = sqrt(1 - pi_s + pi_s/d^2),    b = sqrt(pi_s)/d,
//   alpha = a e^{i phi} - b,          beta = b d = sqrt(pi_s),
//   |alpha|^2 + (2/d) Re(alpha) beta + beta^2 = 1.
struct MachineParams {
  int d = 2;
  double fidelity = 1.0;
  double phi = 0.0;
  double pi_s = 0.0;  // depolarized fraction of the signal channel
  double a = 1.0;
  double b = 0.0;
  Complex alpha{1.0, 0.0};
  double beta = 0.0;

  double pi_x() const { return std::norm(alpha) + beta * beta; }
  double pi_y() const { return std::norm(alpha); }
};

// F in [1/d, 1]; both endpoints are admitted for limiting tests (F = 1 is the
// no-interaction machine, F = 1/d discards the input).
MachineParams params_from_fidelity(int d, double fidelity, double phi);

// alpha = beta preset (phi = 0): both clones come out with fidelity
// (d+3)/(2d+2); for d = 2 this is the symmetric entangler / cloner / UNOT
// configuration with alpha = beta = 1/sqrt(3).
MachineParams params_symmetric(int d);

// Optimal entanglement (bits) reachable at signal fidelity F:
//   h_d(F) = -F log2 F - (1-F) log2((1-F)/(d-1)),
// strictly decreasing on (1/d, 1).
double optimal_entanglement(int d, double fidelity);

// Inverse of the trade-off: the unique F in [1/d, 1] with h_d(F) = E,
// located by bisection to |h_d(F) - E| < 1e-12.
double fidelity_for_entanglement(int d, double entanglement_bits);

// d^2 Kraus operators of the depolarizing channel, indexed m*d + n:
// a*I for (0,0) and b*U_{m,n} otherwise.
std::vector<OperatorMatrix> kraus_operators(const MachineParams& p);

// (1 - pi_s)|psi><psi| + (pi_s/d) I.
DensityOperator depolarize(const MachineParams& p, const PureState& psi);

// The d^2 phase-shifted Bell states paired with the Kraus operators, indexed
// m*d + n: e^{i phi}|psi_00> for (0,0) and e^{2 pi i m n/d}|psi_{-m,-n}> else.
std::vector<PureState> ancilla_basis(const MachineParams& p);

// alpha I + beta d |psi_00><psi_00| on S x X; diagonal in the Bell basis with
// entries alpha + beta d on (0,0) and alpha elsewhere. Unitary only on the
// input subspace W unless phi equals the minimal-interaction phase.
OperatorMatrix coupling_operator(const MachineParams& p);

// Full machine unitary on S x X x Y: acts on W = span{|k>_S |psi_00>_XY} as
// the coupling operator and maps a deterministic orthonormal completion of W
// onto the matching completion of the image space.
OperatorMatrix machine_unitary(const MachineParams& p);

// Closed form of the machine output:
//   |psi>_S |psi_00>_XY -> alpha |psi>_S |psi_00>_XY + beta |psi_00>_SX |psi>_Y.
PureState apply_machine(const MachineParams& p, const PureState& psi);

struct LocalOutputs {
  DensityOperator signal;     // rho_S: depolarized input, fraction beta^2
  DensityOperator conjugate;  // rho_X: depolarized conjugate, fraction |alpha|^2 + beta^2
  DensityOperator clone;      // rho_Y: depolarized input, fraction |alpha|^2
};

// Closed forms of the three single-system reductions of the output.
LocalOutputs local_outputs(const MachineParams& p, const PureState& psi);

// Fidelity <psi*| rho_X |psi*> = |alpha + beta|^2 / d of the conjugate output.
double conjugate_fidelity(const MachineParams& p);

struct MinimalInteractionAngles {
  double phi0;    // phase making the coupling operator unitary, in [-pi, 0]
  double theta0;  // global phase of the unitary form, in [-pi, 0]
  double theta;   // Bell-phase angle on (S, X), in [0, pi]
};

double minimal_fidelity_bound(int d);

// Angles of the two-body phase-gate form. The cosines come from the closed
// formulas; the sign branch is fixed by requiring e^{i theta0} = a e^{i phi0} - b
// and e^{i theta0}(e^{i theta} - 1)/d = b d, which is asserted here.
MinimalInteractionAngles minimal_interaction_angles(int d, double fidelity);

// e^{i theta0} exp(i (phi - phi0) P_XY) exp(i theta P_SX) with P the projector
// on |psi_00> of the named pair. Agrees with apply_machine on W.
OperatorMatrix minimal_interaction_unitary(const MachineParams& p);

struct TradeoffRecord {
  double fidelity;
  double entanglement_bits;
  int d;
};

struct OptimalityScanResult {
  double max_entanglement;  // best H(|lambda|^2) over all feasible samples
  double bound;             // h_d(F)
  long long trials;
  long long accepted;
  std::uint64_t seed;
};

// Monte-Carlo scan over Schmidt weights and input weights on the simplex,
// constrained to fidelity F. Each trial draws both weight vectors from
// Dirichlet(1,...,1) and matches the constraint by moving the input weights
// along a straight line toward a vertex; infeasible draws are rejected. The
// analytic optimum (lambda^2 = (F, (1-F)/(d-1), ...), c = e_1) is injected
// deterministically so the supremum is attained.
OptimalityScanResult optimality_scan(int d, double fidelity, long long trials, std::uint64_t seed);

}  // namespace auem
