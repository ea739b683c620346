#include "tqc/circuit.hpp"

#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace tqc {

QubitState QubitState::zero(int n) {
  if (n < 1) throw std::invalid_argument("need at least one qubit");
  QubitState s;
  s.n = n;
  s.amplitudes = Eigen::VectorXcd::Zero(1L << n);
  s.amplitudes[0] = 1.0;
  return s;
}

QubitState QubitState::basis(const std::string& bits) {
  QubitState s;
  s.n = static_cast<int>(bits.size());
  if (s.n < 1) throw std::invalid_argument("empty bit string");
  long idx = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("bad bit string");
    idx = (idx << 1) | (ch == '1' ? 1 : 0);
  }
  s.amplitudes = Eigen::VectorXcd::Zero(1L << s.n);
  s.amplitudes[idx] = 1.0;
  return s;
}

void validate_gate(const Gate& g, int n) {
  const long dim = g.matrix.rows();
  if (g.matrix.cols() != dim || (dim != 2 && dim != 4)) {
    throw std::invalid_argument("gate matrix must be 2x2 or 4x4");
  }
  const std::size_t arity = dim == 2 ? 1 : 2;
  if (g.targets.size() != arity) throw std::invalid_argument("gate arity mismatch");
  for (int t : g.targets) {
    if (t < 1 || t > n) throw std::invalid_argument("gate target out of range");
  }
  if (arity == 2 && g.targets[0] == g.targets[1]) {
    throw std::invalid_argument("gate targets must be distinct");
  }
  const Eigen::MatrixXcd gram = g.matrix.adjoint() * g.matrix;
  if ((gram - Eigen::MatrixXcd::Identity(dim, dim)).norm() > 1e-12 * dim) {
    throw std::invalid_argument("gate matrix is not unitary");
  }
}

void validate_circuit(const Circuit& c) {
  if (c.n < 1) throw std::invalid_argument("need at least one qubit");
  for (const Gate& g : c.gates) validate_gate(g, c.n);
}

namespace {

// Qubit q (1-based, MSB first) selects bit position n - q from the LSB.
void apply_one_qubit(Eigen::VectorXcd& psi, int n, const Eigen::MatrixXcd& m, int q) {
  const long bit = 1L << (n - q);
  const long dim = psi.size();
  for (long i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const Complex a0 = psi[i];
    const Complex a1 = psi[i | bit];
    psi[i] = m(0, 0) * a0 + m(0, 1) * a1;
    psi[i | bit] = m(1, 0) * a0 + m(1, 1) * a1;
  }
}

void apply_two_qubit(Eigen::VectorXcd& psi, int n, const Eigen::MatrixXcd& m, int q1, int q2) {
  const long bit1 = 1L << (n - q1);
  const long bit2 = 1L << (n - q2);
  const long dim = psi.size();
  for (long i = 0; i < dim; ++i) {
    if ((i & bit1) || (i & bit2)) continue;
    const long i00 = i;
    const long i01 = i | bit2;
    const long i10 = i | bit1;
    const long i11 = i | bit1 | bit2;
    const Complex a00 = psi[i00], a01 = psi[i01], a10 = psi[i10], a11 = psi[i11];
    psi[i00] = m(0, 0) * a00 + m(0, 1) * a01 + m(0, 2) * a10 + m(0, 3) * a11;
    psi[i01] = m(1, 0) * a00 + m(1, 1) * a01 + m(1, 2) * a10 + m(1, 3) * a11;
    psi[i10] = m(2, 0) * a00 + m(2, 1) * a01 + m(2, 2) * a10 + m(2, 3) * a11;
    psi[i11] = m(3, 0) * a00 + m(3, 1) * a01 + m(3, 2) * a10 + m(3, 3) * a11;
  }
}

}  // namespace

QubitState run_circuit(const Circuit& c, const QubitState& input) {
  validate_circuit(c);
  if (input.n != c.n || input.amplitudes.size() != (1L << c.n)) {
    throw std::invalid_argument("state dimension does not match circuit");
  }
  QubitState out = input;
  for (const Gate& g : c.gates) {
    if (g.targets.size() == 1) {
      apply_one_qubit(out.amplitudes, c.n, g.matrix, g.targets[0]);
    } else {
      apply_two_qubit(out.amplitudes, c.n, g.matrix, g.targets[0], g.targets[1]);
    }
  }
  return out;
}

double prob_first_qubit_one(const Circuit& c) {
  const QubitState out = run_circuit(c, QubitState::zero(c.n));
  const long bit = 1L << (c.n - 1);
  double p = 0.0;
  for (long i = 0; i < out.amplitudes.size(); ++i) {
    if (i & bit) p += std::norm(out.amplitudes[i]);
  }
  return p;
}

std::vector<GateDef> gate_library() {
  std::vector<GateDef> defs;
  const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi / 5.0);

  Eigen::MatrixXcd m(2, 2);
  m << 1, 0, 0, phase;
  defs.push_back({"phase", m});

  Eigen::MatrixXcd cnot(4, 4);
  cnot << 1, 0, 0, 0,
          0, 1, 0, 0,
          0, 0, 0, 1,
          0, 0, 1, 0;
  defs.push_back({"cnot", cnot});

  Eigen::MatrixXcd x(2, 2);
  x << 0, 1, 1, 0;
  defs.push_back({"x", x});

  Eigen::MatrixXcd z(2, 2);
  z << 1, 0, 0, -1;
  defs.push_back({"z", z});

  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd h(2, 2);
  h << r, r, r, -r;
  defs.push_back({"h", h});

  return defs;
}

const GateDef& gate_by_name(const std::string& name) {
  static const std::vector<GateDef> defs = gate_library();
  for (const GateDef& d : defs) {
    if (d.name == name) return d;
  }
  throw std::invalid_argument("unknown gate: " + name);
}

namespace {

Eigen::MatrixXcd matrix_from_json(const nlohmann::json& rows) {
  const long dim = static_cast<long>(rows.size());
  Eigen::MatrixXcd m(dim, dim);
  for (long r = 0; r < dim; ++r) {
    const auto& row = rows.at(r);
    if (static_cast<long>(row.size()) != dim) {
      throw std::invalid_argument("matrix is not square");
    }
    for (long c = 0; c < dim; ++c) {
      const auto& entry = row.at(c);
      if (!entry.is_array() || entry.size() != 2) {
        throw std::invalid_argument("matrix entries must be [re, im] pairs");
      }
      m(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (long r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (long c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Circuit circuit_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad circuit JSON: ") + e.what());
  }
  Circuit c;
  try {
    c.n = j.at("n").get<int>();
    for (const auto& gj : j.at("gates")) {
      Gate g;
      if (gj.contains("name")) {
        g.matrix = gate_by_name(gj.at("name").get<std::string>()).matrix;
      } else {
        g.matrix = matrix_from_json(gj.at("matrix"));
      }
      for (const auto& t : gj.at("targets")) g.targets.push_back(t.get<int>());
      c.gates.push_back(std::move(g));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad circuit JSON: ") + e.what());
  }
  validate_circuit(c);
  return c;
}

std::string circuit_to_json(const Circuit& c) {
  nlohmann::json j;
  j["n"] = c.n;
  j["gates"] = nlohmann::json::array();
  for (const Gate& g : c.gates) {
    nlohmann::json gj;
    gj["matrix"] = matrix_to_json(g.matrix);
    gj["targets"] = g.targets;
    j["gates"].push_back(gj);
  }
  return j.dump();
}

}  // namespace tqc
