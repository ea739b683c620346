#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tqc/constants.hpp"

namespace tqc {

// Reference state-vector circuit simulator.  Qubits are numbered from 1;
// qubit 1 is the most significant bit of the basis index.

// BQP decision thresholds, used by the CLI demo's accept/reject report.
inline constexpr double kBqpAcceptThreshold = 2.0 / 3.0;
inline constexpr double kBqpRejectThreshold = 1.0 / 3.0;

struct QubitState {
  int n = 0;
  Eigen::VectorXcd amplitudes;

  static QubitState zero(int n);
  // Basis state |bits>, bits given MSB first, e.g. "10".
  static QubitState basis(const std::string& bits);
};

struct Gate {
  Eigen::MatrixXcd matrix;     // 2x2 or 4x4 unitary
  std::vector<int> targets;    // 1 or 2 distinct qubit indices, 1-based
};

struct Circuit {
  int n = 0;
  std::vector<Gate> gates;
};

void validate_gate(const Gate& g, int n);
void validate_circuit(const Circuit& c);

// Apply the gates in order, each acting as the identity on untouched
// factors.  Throws std::invalid_argument on dimension mismatch.
QubitState run_circuit(const Circuit& c, const QubitState& input);

// Eq. probability of measuring |1> on qubit 1 after running on |0...0>.
double prob_first_qubit_one(const Circuit& c);

// Named gate matrices: "phase" = diag(1, e^{2 pi i/5}), "cnot" (first
// target is the control), "x", "z", "h".
struct GateDef {
  std::string name;
  Eigen::MatrixXcd matrix;
};
std::vector<GateDef> gate_library();
const GateDef& gate_by_name(const std::string& name);

// Circuit JSON: {"n": int, "gates": [{"name": str | "matrix": [[ [re,im],
// ...], ...], "targets": [int,...]}, ...]}.  Throws std::invalid_argument
// on malformed input.
Circuit circuit_from_json(const std::string& json_text);
std::string circuit_to_json(const Circuit& c);

}  // namespace tqc
