#pragma once

#include <string>
#include <vector>

#include "auem/machine.hpp"
#include "auem/types.hpp"

namespace auem {

struct BasisPair {
  std::string name;
  PureState zero;
  PureState one;
};

// Rectilinear {|0>,|1>}, diagonal (|0>+-|1>)/sqrt2, circular (|0>+-i|1>)/sqrt2.
std::vector<BasisPair> six_state_bases();

// Ancilla states of the optimal individual attack, read off the machine
// output on the signal basis:
//   |0>|Phi+> -> sqrt(F)|0>|A> + sqrt(1-F)|1>|B>
//   |1>|Phi+> -> sqrt(F)|1>|C> + sqrt(1-F)|0>|D>
// The required conditions are {A, C} _|_ B _|_ D and Re<A|C> = 2 - 1/F.
struct EveStates {
  PureState a, b, c, d;  // states on the X x Y ancilla, dims {2, 2}
  double fidelity;
};

// Requires d = 2 and 1/2 < F < 1; amplitudes below 1e-12 on either signal
// component make the decomposition degenerate and raise invalid_argument.
EveStates extract_eve_states(const MachineParams& p);

struct EveCheck {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

struct EveReport {
  std::vector<EveCheck> checks;
  bool passed() const;
  double max_residual() const;
};

// Evaluates every defining condition (five orthogonality relations, the
// Re<A|C> value, the four norms) and reports the residual of each.
EveReport check_eve_states(const EveStates& e);

}  // namespace auem
