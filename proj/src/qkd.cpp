#include "auem/qkd.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace auem {
namespace {

PureState two_amp_state(Complex a0, Complex a1) {
  Vector v(2);
  v << a0, a1;
  v /= v.norm();
  return PureState({2}, std::move(v));
}

}  // namespace

std::vector<BasisPair> six_state_bases() {
  const double r = 1.0 / std::sqrt(2.0);
  return {
      {"rectilinear", two_amp_state(1.0, 0.0), two_amp_state(0.0, 1.0)},
      {"diagonal", two_amp_state(r, r), two_amp_state(r, -r)},
      {"circular", two_amp_state(r, Complex(0.0, r)), two_amp_state(r, Complex(0.0, -r))},
  };
}

EveStates extract_eve_states(const MachineParams& p) {
  if (p.d != 2) throw std::invalid_argument("extract_eve_states requires d = 2");

  // Split the S x X x Y output over the signal basis; the four ancilla
  // blocks keep the phases the projection gives them.
  const auto ancilla_blocks = [&](int signal_in) {
    const PureState out = apply_machine(p, basis_state(2, signal_in));
    std::array<Vector, 2> blocks;
    for (int s = 0; s < 2; ++s) blocks[s] = out.amps.segment(s * 4, 4);
    return blocks;
  };
  const auto blocks0 = ancilla_blocks(0);
  const auto blocks1 = ancilla_blocks(1);

  const auto normalized = [](const Vector& v, const char* which) {
    const double n = v.norm();
    if (n < 1e-12)
      throw std::invalid_argument(std::string("extract_eve_states: degenerate configuration, ") +
                                  which + " component vanishes");
    return PureState({2, 2}, v / n);
  };

  EveStates e{
      normalized(blocks0[0], "|A>"),
      normalized(blocks0[1], "|B>"),
      normalized(blocks1[1], "|C>"),
      normalized(blocks1[0], "|D>"),
      p.fidelity,
  };
  return e;
}

bool EveReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const EveCheck& c) { return c.pass; });
}

double EveReport::max_residual() const {
  double m = 0.0;
  for (const EveCheck& c : checks) m = std::max(m, c.residual);
  return m;
}

EveReport check_eve_states(const EveStates& e) {
  EveReport report;
  const auto add = [&](std::string name, double residual, double tol) {
    report.checks.push_back({std::move(name), residual, tol, residual <= tol});
  };
  const auto overlap = [](const PureState& u, const PureState& v) { return u.amps.dot(v.amps); };

  add("<A|B> = 0", std::abs(overlap(e.a, e.b)), kTolAlg);
  add("<C|B> = 0", std::abs(overlap(e.c, e.b)), kTolAlg);
  add("<A|D> = 0", std::abs(overlap(e.a, e.d)), kTolAlg);
  add("<C|D> = 0", std::abs(overlap(e.c, e.d)), kTolAlg);
  add("<B|D> = 0", std::abs(overlap(e.b, e.d)), kTolAlg);
  add("Re<A|C> = 2 - 1/F", std::abs(std::real(overlap(e.a, e.c)) - (2.0 - 1.0 / e.fidelity)),
      kTolEig);
  for (const auto& [name, state] :
       {std::pair<const char*, const PureState*>{"|A|", &e.a}, {"|B|", &e.b}, {"|C|", &e.c}, {"|D|", &e.d}})
    add(std::string(name) + " = 1", std::abs(state->norm() - 1.0), kTolAlg);
  return report;
}

}  // namespace auem
