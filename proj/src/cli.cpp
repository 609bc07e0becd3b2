#include "auem/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "auem/circuit.hpp"
#include "auem/measures.hpp"
#include "auem/qudit.hpp"
#include "auem/random.hpp"
#include "auem/tensor.hpp"
#include "auem/verify.hpp"

namespace auem::cli {
namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Write to the configured path, or to `fallback` when no path is set.
// Returns kExitIo on filesystem failure.
int deliver(const RunConfig& cfg, const std::string& payload, std::ostream& fallback,
            std::ostream& err) {
  if (cfg.output.empty()) {
    fallback << payload;
    return kExitOk;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) {
    err << "error: cannot open output file '" << cfg.output << "'\n";
    return kExitIo;
  }
  f << payload;
  f.flush();
  if (!f) {
    err << "error: write to '" << cfg.output << "' failed\n";
    return kExitIo;
  }
  return kExitOk;
}

double symmetric_entangler_eof() {
  // Entanglement of formation of the symmetric entangler's S-Y output,
  // via its concurrence 1/3.
  const PureState psi = basis_state(2, 0);
  const MachineParams p = params_symmetric(2);
  const PureState out = apply_machine(p, psi);
  const DensityOperator rho_sy = partial_trace(density_from_pure(out), {0, 2});
  return entanglement_of_formation(rho_sy);
}

}  // namespace

std::vector<TradeoffRecord> curve_records(int d, long long samples, bool compare_symmetric) {
  if (d < 2) throw std::invalid_argument("curve: d must be >= 2");
  if (samples < 1) throw std::invalid_argument("curve: samples must be >= 1");
  std::vector<TradeoffRecord> rows;
  rows.reserve(samples + 1);
  const double lo = 1.0 / d;
  for (long long i = 0; i < samples; ++i) {
    const double f = (samples == 1) ? lo : lo + (1.0 - lo) * static_cast<double>(i) / (samples - 1);
    rows.push_back({f, optimal_entanglement(d, f), d});
  }
  if (compare_symmetric && d == 2) rows.push_back({5.0 / 6.0, symmetric_entangler_eof(), 2});
  return rows;
}

std::string render_curve_csv(const std::vector<TradeoffRecord>& records) {
  std::ostringstream out;
  out << "F,E_bits,d\n";
  for (const auto& r : records) out << fmt(r.fidelity) << "," << fmt(r.entanglement_bits) << "," << r.d << "\n";
  return out.str();
}

std::string render_curve_json(const std::vector<TradeoffRecord>& records) {
  std::ostringstream out;
  out << "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    out << "  {\"F\": " << fmt(r.fidelity) << ", \"E_bits\": " << fmt(r.entanglement_bits)
        << ", \"d\": " << r.d << "}" << (i + 1 < records.size() ? "," : "") << "\n";
  }
  out << "]\n";
  return out.str();
}

std::vector<TradeoffRecord> parse_curve_csv(std::istream& in) {
  std::vector<TradeoffRecord> rows;
  std::string line;
  if (!std::getline(in, line) || line != "F,E_bits,d")
    throw std::invalid_argument("curve csv: bad header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    TradeoffRecord r{};
    char* end = nullptr;
    r.fidelity = std::strtod(line.c_str(), &end);
    if (!end || *end != ',') throw std::invalid_argument("curve csv: bad row");
    r.entanglement_bits = std::strtod(end + 1, &end);
    if (!end || *end != ',') throw std::invalid_argument("curve csv: bad row");
    r.d = static_cast<int>(std::strtol(end + 1, &end, 10));
    rows.push_back(r);
  }
  return rows;
}

SimulationReport simulate(const RunConfig& cfg) {
  const MachineParams p = params_from_fidelity(cfg.dim, cfg.fidelity, cfg.phi);
  SimulationReport rep{};
  rep.d = cfg.dim;
  rep.fidelity = cfg.fidelity;
  rep.phi = cfg.phi;
  rep.samples = cfg.samples;
  rep.seed = cfg.seed;
  rep.target_entanglement = optimal_entanglement(cfg.dim, p.fidelity);

  double sum_fdev = 0.0, sum_edev = 0.0;
  double sum_sig = 0.0, sum_clone = 0.0, sum_conj = 0.0;
  for (long long i = 0; i < cfg.samples; ++i) {
    const PureState psi = haar_random_state(cfg.dim, CounterRng::derive(cfg.seed, i));
    const PureState out = apply_machine(p, psi);

    const double f_meas = fidelity(psi, reduced_density(out, {0}));
    const double e_meas = entanglement_entropy(out, {0});
    const double fdev = std::abs(f_meas - p.fidelity);
    const double edev = std::abs(e_meas - rep.target_entanglement);
    rep.max_fidelity_dev = std::max(rep.max_fidelity_dev, fdev);
    rep.max_entanglement_dev = std::max(rep.max_entanglement_dev, edev);
    sum_fdev += fdev;
    sum_edev += edev;

    sum_sig += f_meas;
    sum_clone += fidelity(psi, reduced_density(out, {2}));
    const PureState conj({cfg.dim}, psi.amps.conjugate());
    sum_conj += fidelity(conj, reduced_density(out, {1}));
  }
  const double n = static_cast<double>(cfg.samples);
  rep.mean_fidelity_dev = sum_fdev / n;
  rep.mean_entanglement_dev = sum_edev / n;
  rep.signal_fidelity = sum_sig / n;
  rep.clone_fidelity = sum_clone / n;
  rep.conjugate_fidelity = sum_conj / n;
  return rep;
}

int cmd_curve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<TradeoffRecord> rows;
  try {
    rows = curve_records(cfg.dim, cfg.samples, cfg.compare_symmetric);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  const std::string payload = (cfg.format == "json") ? render_curve_json(rows) : render_curve_csv(rows);
  return deliver(cfg, payload, out, err);
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SimulationReport rep{};
  try {
    rep = simulate(cfg);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }

  std::ostringstream body;
  if (cfg.format == "json") {
    body << "{\n"
         << "  \"d\": " << rep.d << ",\n"
         << "  \"fidelity\": " << fmt(rep.fidelity) << ",\n"
         << "  \"phi\": " << fmt(rep.phi) << ",\n"
         << "  \"samples\": " << rep.samples << ",\n"
         << "  \"seed\": " << rep.seed << ",\n"
         << "  \"target_entanglement\": " << fmt(rep.target_entanglement) << ",\n"
         << "  \"max_fidelity_dev\": " << fmt(rep.max_fidelity_dev) << ",\n"
         << "  \"mean_fidelity_dev\": " << fmt(rep.mean_fidelity_dev) << ",\n"
         << "  \"max_entanglement_dev\": " << fmt(rep.max_entanglement_dev) << ",\n"
         << "  \"mean_entanglement_dev\": " << fmt(rep.mean_entanglement_dev) << ",\n"
         << "  \"signal_fidelity\": " << fmt(rep.signal_fidelity) << ",\n"
         << "  \"clone_fidelity\": " << fmt(rep.clone_fidelity) << ",\n"
         << "  \"conjugate_fidelity\": " << fmt(rep.conjugate_fidelity) << "\n"
         << "}\n";
  } else {
    body << "d: " << rep.d << "\n"
         << "fidelity: " << fmt(rep.fidelity) << "\n"
         << "phi: " << fmt(rep.phi) << "\n"
         << "samples: " << rep.samples << "\n"
         << "seed: " << rep.seed << "\n"
         << "target_entanglement: " << fmt(rep.target_entanglement) << "\n"
         << "max_fidelity_dev: " << fmt(rep.max_fidelity_dev) << "\n"
         << "mean_fidelity_dev: " << fmt(rep.mean_fidelity_dev) << "\n"
         << "max_entanglement_dev: " << fmt(rep.max_entanglement_dev) << "\n"
         << "mean_entanglement_dev: " << fmt(rep.mean_entanglement_dev) << "\n"
         << "signal_fidelity: " << fmt(rep.signal_fidelity) << "\n"
         << "clone_fidelity: " << fmt(rep.clone_fidelity) << "\n"
         << "conjugate_fidelity: " << fmt(rep.conjugate_fidelity) << "\n";
  }
  const int rc = deliver(cfg, body.str(), out, err);
  if (rc != kExitOk) return rc;
  return (rep.max_fidelity_dev <= kTolEig && rep.max_entanglement_dev <= kTolEig) ? kExitOk
                                                                                  : kExitFail;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<SuiteReport> reports;
  try {
    if (cfg.suite.empty()) {
      reports = verify_all(cfg.seed);
    } else if (cfg.suite == "algebra") {
      reports.push_back(verify_algebra(cfg.dim));
    } else if (cfg.suite == "channel") {
      reports.push_back(verify_channel(cfg.dim, cfg.fidelity, cfg.phi,
                                       static_cast<int>(cfg.samples), cfg.seed));
    } else if (cfg.suite == "unitarity") {
      reports.push_back(verify_unitarity(cfg.dim, cfg.fidelity, cfg.phi));
    } else if (cfg.suite == "covariance") {
      reports.push_back(verify_covariance(cfg.dim, cfg.fidelity, cfg.phi,
                                          static_cast<int>(cfg.samples), cfg.seed));
    } else if (cfg.suite == "circuit") {
      reports.push_back(verify_circuit(static_cast<int>(cfg.samples), cfg.seed));
    } else if (cfg.suite == "qkd") {
      reports.push_back(verify_qkd({cfg.fidelity}, {0.0, 0.7, M_PI / 2}));
    } else {
      err << "error: unknown suite '" << cfg.suite
          << "' (algebra, channel, unitarity, covariance, circuit, qkd)\n";
      return kExitFail;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }

  std::ostringstream body;
  bool all_pass = true;
  for (const auto& rep : reports) {
    body << "suite " << rep.suite << (rep.passed() ? " PASS" : " FAIL") << "\n";
    for (const auto& c : rep.checks) {
      body << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": residual "
           << fmt(c.residual) << " (tol " << fmt(c.tolerance) << ")\n";
      all_pass = all_pass && c.pass;
    }
  }
  body << (all_pass ? "all suites passed\n" : "verification FAILED\n");
  const int rc = deliver(cfg, body.str(), out, err);
  if (rc != kExitOk) return rc;
  return all_pass ? kExitOk : kExitFail;
}

int cmd_optimality_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  OptimalityScanResult res{};
  try {
    res = optimality_scan(cfg.dim, cfg.fidelity, cfg.samples, cfg.seed);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  const double margin = res.bound - res.max_entanglement;
  std::ostringstream body;
  if (cfg.format == "json") {
    body << "{\n"
         << "  \"d\": " << cfg.dim << ",\n"
         << "  \"fidelity\": " << fmt(cfg.fidelity) << ",\n"
         << "  \"trials\": " << res.trials << ",\n"
         << "  \"accepted\": " << res.accepted << ",\n"
         << "  \"seed\": " << res.seed << ",\n"
         << "  \"max_entanglement\": " << fmt(res.max_entanglement) << ",\n"
         << "  \"bound\": " << fmt(res.bound) << ",\n"
         << "  \"margin\": " << fmt(margin) << "\n"
         << "}\n";
  } else {
    body << "d: " << cfg.dim << "\n"
         << "fidelity: " << fmt(cfg.fidelity) << "\n"
         << "trials: " << res.trials << "\n"
         << "accepted: " << res.accepted << "\n"
         << "seed: " << res.seed << "\n"
         << "max_entanglement: " << fmt(res.max_entanglement) << "\n"
         << "bound: " << fmt(res.bound) << "\n"
         << "margin: " << fmt(margin) << "\n";
  }
  const int rc = deliver(cfg, body.str(), out, err);
  if (rc != kExitOk) return rc;
  return (res.max_entanglement <= res.bound + kTolEig) ? kExitOk : kExitFail;
}

int cmd_circuit_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  GateCircuit circuit;
  try {
    if (!cfg.circuit_file.empty()) {
      std::ifstream f(cfg.circuit_file);
      if (!f) {
        err << "error: cannot open circuit file '" << cfg.circuit_file << "'\n";
        return kExitIo;
      }
      circuit = parse_circuit(f);
    } else {
      circuit = entangler_circuit(cfg.fidelity, cfg.phi);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  if (circuit.n_qubits != 3) {
    err << "error: entangler circuit must act on 3 qubits\n";
    return kExitFail;
  }

  const MachineParams p = params_from_fidelity(2, cfg.fidelity, cfg.phi);
  const PureState phip = bell_state(BellIndex(2, 0, 0));
  double worst = 0.0;
  for (long long i = 0; i < cfg.samples; ++i) {
    const PureState psi = haar_random_state(2, CounterRng::derive(cfg.seed, i));
    const Vector got = apply_circuit(circuit, tensor_product(psi, phip)).amps;
    const Vector want = apply_machine(p, psi).amps;
    Eigen::Index imax;
    want.cwiseAbs().maxCoeff(&imax);
    const Complex ratio = want(imax) / got(imax);
    worst = std::max(worst, (got * (ratio / std::abs(ratio)) - want).cwiseAbs().maxCoeff());
  }
  const bool pass = worst <= kTolEig;

  std::ostringstream body;
  body << "fidelity: " << fmt(cfg.fidelity) << "\n"
       << "phi: " << fmt(cfg.phi) << "\n"
       << "samples: " << cfg.samples << "\n"
       << "seed: " << cfg.seed << "\n"
       << "gates: " << circuit.gates.size() << "\n"
       << "max_deviation: " << fmt(worst) << "\n"
       << (pass ? "circuit matches closed form\n" : "circuit DOES NOT match closed form\n");
  out << body.str();

  // --output emits the gate dump for later consumption by --circuit
  if (!cfg.output.empty()) {
    RunConfig dump_cfg = cfg;
    const int rc = deliver(dump_cfg, format_circuit(circuit), out, err);
    if (rc != kExitOk) return rc;
  }
  return pass ? kExitOk : kExitFail;
}

}  // namespace auem::cli
