#pragma once

#include "auem/types.hpp"

namespace auem {

// Index pair (m, n) labelling the d^2 generalized Bell states and the
// Weyl shift/phase operators. All arithmetic on m, n is modulo d; the
// constructor reduces any integers into [0, d).
struct BellIndex {
  int d;
  int m;
  int n;
  BellIndex(int d_, int m_, int n_);
};

// e^{2*pi*i*k/d}, with k reduced mod d before any float arithmetic.
Complex root_of_unity(int d, long long k);

// |psi_mn> = (1/sqrt d) sum_j e^{2 pi i j n / d} |j>|j+m>, on dims {d, d}.
PureState bell_state(const BellIndex& idx);

// U_{m,n} = sum_k e^{2 pi i k n / d} |k+m><k|, on one d-level system.
OperatorMatrix weyl_operator(const BellIndex& idx);

enum class Side { kLeft, kRight };

// The Bell state obtained from |psi_00> by a one-sided Weyl operator:
// right: (I x U_{m,n})|psi_00>, left: e^{-2 pi i m n / d}(U_{-m,n} x I)|psi_00>.
PureState bell_from_weyl(const BellIndex& idx, Side side);

// (1/d) sum_{m,n} U_{m,n} rho U_{m,n}^dag, which equals I * Tr(rho).
OperatorMatrix weyl_twirl_sum(const DensityOperator& rho);

// Overlap <psi_kl| U_{m,n} x U_{m,-n} |psi_kl>; checked against the closed
// form e^{-2 pi i (n k + m l)/d} before returning.
Complex bell_eigenphase(const BellIndex& kl, const BellIndex& mn);

// sum_{m,n} U_{m,n} x U_{m,-n} = d^2 |psi_00><psi_00|, on dims {d, d}.
OperatorMatrix weyl_pair_sum(int d);

// For even d: sigma_y^{01} sigma_y^{23} ... |psi*>, a state orthogonal to psi.
PureState orthogonal_state(const PureState& psi);

}  // namespace auem
