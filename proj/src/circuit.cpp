// Copyright 2026 The QLT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlt/circuit.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numbers>

namespace qlt {

namespace {

constexpr int kMaxQubits = 64;

int ceil_log2(long v) {
  int r = 0;
  while ((1L << r) < v) ++r;
  return r;
}

long gate_size(const Gate& g) {
  const long c = static_cast<long>(g.controls.size());
  return c > 2 ? 2 * c - 3 : 1;
}

long gate_depth(const Gate& g) {
  const long c = static_cast<long>(g.controls.size());
  return c > 2 ? 2 * ceil_log2(c) - 1 : 1;
}

std::uint64_t gate_mask(const Gate& g) {
  std::uint64_t m = std::uint64_t{1} << g.target;
  for (int q : g.controls) m |= std::uint64_t{1} << q;
  return m;
}

}  // namespace

GateKind Gate::kind() const {
  if (op == GateOp::X) {
    if (controls.size() == 1) return GateKind::CNOT;
    if (controls.size() >= 2) return GateKind::MultiControlledX;
    return GateKind::X;
  }
  if (!controls.empty()) return GateKind::ControlledU2;
  switch (op) {
    case GateOp::H:
      return GateKind::H;
    case GateOp::Phase:
      return GateKind::Phase;
    case GateOp::RY:
      return GateKind::RY;
    case GateOp::RZ:
      return GateKind::RZ;
    default:
      return GateKind::U2;
  }
}

Eigen::Matrix2cd Gate::unitary() const {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  switch (op) {
    case GateOp::H: {
      const double r = std::numbers::sqrt2 / 2;
      m << r, r, r, -r;
      break;
    }
    case GateOp::X:
      m << 0, 1, 1, 0;
      break;
    case GateOp::Phase:
      m << 1, 0, 0, std::exp(1i * theta);
      break;
    case GateOp::RY: {
      const double c = std::cos(theta / 2), s = std::sin(theta / 2);
      m << c, -s, s, c;
      break;
    }
    case GateOp::RZ:
      m << std::exp(-0.5i * theta), 0, 0, std::exp(0.5i * theta);
      break;
    case GateOp::U2:
      m = matrix;
      break;
  }
  return m;
}

Gate Gate::inverse() const {
  Gate g = *this;
  switch (op) {
    case GateOp::Phase:
    case GateOp::RY:
    case GateOp::RZ:
      g.theta = -theta;
      break;
    case GateOp::U2:
      g.matrix = matrix.adjoint();
      break;
    default:
      break;
  }
  return g;
}

Gate make_gate(GateOp op, int target, double theta) {
  Gate g;
  g.op = op;
  g.target = target;
  g.theta = theta;
  return g;
}

Gate make_u2(int target, const Eigen::Matrix2cd& m) {
  if (!(m.adjoint() * m).isIdentity(1e-12)) {
    throw std::invalid_argument("make_u2: matrix is not unitary");
  }
  Gate g = make_gate(GateOp::U2, target);
  g.matrix = m;
  return g;
}

int RegisterLayout::add(std::string name, int size) {
  if (size < 0) throw std::invalid_argument("register size must be >= 0");
  if (contains(name)) {
    int suffix = 2;
    while (contains(name + "_" + std::to_string(suffix))) ++suffix;
    name += "_" + std::to_string(suffix);
  }
  const int offset = total_;
  registers_.push_back({std::move(name), offset, size});
  total_ += size;
  return offset;
}

const Register& RegisterLayout::find(const std::string& name) const {
  for (const auto& r : registers_) {
    if (r.name == name) return r;
  }
  throw std::out_of_range("no register named '" + name + "'");
}

bool RegisterLayout::contains(const std::string& name) const {
  return std::any_of(registers_.begin(), registers_.end(),
                     [&](const Register& r) { return r.name == name; });
}

Circuit::Circuit(int num_qubits) {
  if (num_qubits < 0 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("circuit width must lie in [0, 64]");
  }
  if (num_qubits > 0) layout_.add("q", num_qubits);
}

Circuit::Circuit(RegisterLayout layout) : layout_(std::move(layout)) {
  if (layout_.total() > kMaxQubits) {
    throw std::invalid_argument("circuit width must lie in [0, 64]");
  }
}

Circuit& Circuit::add(Gate g) {
  const int n = num_qubits();
  auto in_range = [n](int q) { return q >= 0 && q < n; };
  if (!in_range(g.target)) {
    throw std::out_of_range("gate target " + std::to_string(g.target) +
                            " outside circuit of width " + std::to_string(n));
  }
  std::uint64_t seen = std::uint64_t{1} << g.target;
  for (int c : g.controls) {
    if (!in_range(c)) throw std::out_of_range("gate control out of range");
    const std::uint64_t bit = std::uint64_t{1} << c;
    if (seen & bit) {
      throw std::invalid_argument("gate controls must be distinct from target");
    }
    seen |= bit;
  }
  if (g.op == GateOp::U2 &&
      !(g.matrix.adjoint() * g.matrix).isIdentity(1e-12)) {
    throw std::invalid_argument("U2 gate matrix is not unitary");
  }
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::cx(int control, int target) {
  Gate g = make_gate(GateOp::X, target);
  g.controls = {control};
  return add(std::move(g));
}

Circuit& Circuit::ccx(int c0, int c1, int target) {
  Gate g = make_gate(GateOp::X, target);
  g.controls = {c0, c1};
  return add(std::move(g));
}

Circuit& Circuit::append(const Circuit& other, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != other.num_qubits()) {
    throw std::invalid_argument("append: qubit map has wrong length");
  }
  std::map<int, int> renumber;
  for (const Gate& src : other.gates()) {
    Gate g = src;
    g.target = map[src.target];
    for (int& c : g.controls) c = map[c];
    if (src.oracle >= 0) {
      auto it = renumber.find(src.oracle);
      if (it == renumber.end()) {
        it = renumber.emplace(src.oracle, fresh_oracle_id()).first;
      }
      g.oracle = it->second;
    }
    add(std::move(g));
  }
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  std::vector<int> map(other.num_qubits());
  for (int i = 0; i < other.num_qubits(); ++i) map[i] = i;
  return append(other, map);
}

Circuit& Circuit::mark_oracle() {
  const int id = fresh_oracle_id();
  for (Gate& g : gates_) g.oracle = id;
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit out(layout_);
  out.next_oracle_ = next_oracle_;
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    out.gates_.push_back(it->inverse());
  }
  return out;
}

std::vector<GateBlock> gate_blocks(const Circuit& c) {
  std::vector<GateBlock> blocks;
  const auto& gates = c.gates();
  std::size_t i = 0;
  while (i < gates.size()) {
    GateBlock b{i, i + 1, gate_mask(gates[i])};
    if (gates[i].oracle >= 0) {
      while (b.end < gates.size() && gates[b.end].oracle == gates[i].oracle) {
        b.qubits |= gate_mask(gates[b.end]);
        ++b.end;
      }
    }
    blocks.push_back(b);
    i = b.end;
  }
  return blocks;
}

std::vector<int> block_layers(const std::vector<GateBlock>& blocks) {
  std::vector<int> level(kMaxQubits, 0);
  std::vector<int> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) {
    int start = 0;
    for (std::uint64_t m = b.qubits; m; m &= m - 1) {
      start = std::max(start, level[std::countr_zero(m)]);
    }
    for (std::uint64_t m = b.qubits; m; m &= m - 1) {
      level[std::countr_zero(m)] = start + 1;
    }
    out.push_back(start);
  }
  return out;
}

Metrics metrics(const Circuit& c, CostModel model) {
  std::vector<long> level(kMaxQubits, 0);
  Metrics m;
  auto schedule = [&](std::uint64_t qubits, long weight) {
    long start = 0;
    for (std::uint64_t r = qubits; r; r &= r - 1) {
      start = std::max(start, level[std::countr_zero(r)]);
    }
    for (std::uint64_t r = qubits; r; r &= r - 1) {
      level[std::countr_zero(r)] = start + weight;
    }
    m.depth = std::max(m.depth, start + weight);
  };
  if (model == CostModel::Gates) {
    for (const Gate& g : c.gates()) {
      m.size += gate_size(g);
      schedule(gate_mask(g), gate_depth(g));
    }
    return m;
  }
  for (const auto& b : gate_blocks(c)) {
    const Gate& g = c.gates()[b.begin];
    if (g.oracle >= 0) {
      const long cost = model == CostModel::Oracle ? 1 : 0;
      m.size += cost;
      schedule(b.qubits, cost);
    } else {
      m.size += gate_size(g);
      schedule(b.qubits, gate_depth(g));
    }
  }
  return m;
}

void apply_gate(const Gate& g, VectorXc& state) {
  const std::uint64_t tbit = std::uint64_t{1} << g.target;
  std::uint64_t cmask = 0;
  for (int q : g.controls) cmask |= std::uint64_t{1} << q;
  std::vector<int> fixed = g.controls;
  fixed.push_back(g.target);
  std::sort(fixed.begin(), fixed.end());

  const int width = std::countr_zero(static_cast<std::uint64_t>(state.size()));
  const std::uint64_t count = std::uint64_t{1}
                              << (width - static_cast<int>(fixed.size()));

  // Deposits the bits of r into the positions not listed in `fixed`.
  auto deposit = [&fixed](std::uint64_t r) {
    for (int p : fixed) {
      const std::uint64_t low = r & ((std::uint64_t{1} << p) - 1);
      r = ((r >> p) << (p + 1)) | low;
    }
    return r;
  };

  Complex* a = state.data();
  if (g.op == GateOp::X) {
    for (std::uint64_t r = 0; r < count; ++r) {
      const std::uint64_t i0 = deposit(r) | cmask;
      std::swap(a[i0], a[i0 | tbit]);
    }
    return;
  }
  const Eigen::Matrix2cd u = g.unitary();
  if (g.op == GateOp::Phase || g.op == GateOp::RZ) {
    const Complex d0 = u(0, 0), d1 = u(1, 1);
    for (std::uint64_t r = 0; r < count; ++r) {
      const std::uint64_t i0 = deposit(r) | cmask;
      a[i0] *= d0;
      a[i0 | tbit] *= d1;
    }
    return;
  }
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (std::uint64_t r = 0; r < count; ++r) {
    const std::uint64_t i0 = deposit(r) | cmask;
    const std::uint64_t i1 = i0 | tbit;
    const Complex v0 = a[i0], v1 = a[i1];
    a[i0] = u00 * v0 + u01 * v1;
    a[i1] = u10 * v0 + u11 * v1;
  }
}

VectorXc simulate(const Circuit& c, const VectorXc& input) {
  const int q = c.num_qubits();
  if (q > kMaxSimulationQubits) {
    throw std::length_error("simulate: " + std::to_string(q) +
                            " qubits exceeds the limit of " +
                            std::to_string(kMaxSimulationQubits));
  }
  if (input.size() != (Eigen::Index{1} << q)) {
    throw std::invalid_argument("simulate: state dimension does not match 2^" +
                                std::to_string(q));
  }
  VectorXc state = input;
  for (const Gate& g : c.gates()) apply_gate(g, state);
  return state;
}

MatrixXc unitary_matrix(const Circuit& c) {
  const int q = c.num_qubits();
  if (q > 12) throw std::length_error("unitary_matrix: more than 12 qubits");
  const Eigen::Index dim = Eigen::Index{1} << q;
  MatrixXc u(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    VectorXc e = VectorXc::Zero(dim);
    e(j) = 1.0;
    u.col(j) = simulate(c, e);
  }
  return u;
}

MatrixXc extract_block(const Circuit& c, int n, int a) {
  if (n < 0 || a < 0 || n + a != c.num_qubits()) {
    throw std::invalid_argument("extract_block: n + a must equal circuit width");
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index total = Eigen::Index{1} << c.num_qubits();
  MatrixXc block(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    VectorXc e = VectorXc::Zero(total);
    e(j) = 1.0;
    block.col(j) = simulate(c, e).head(dim);
  }
  return block;
}

}  // namespace qlt
