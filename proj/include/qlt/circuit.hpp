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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlt/numerics.hpp"

namespace qlt {

/** Base operation of a gate. Every IR gate is a (possibly multi-controlled)
 * single-qubit gate; CNOT and Toffoli are X with one or two controls. */
enum class GateOp { H, X, Phase, RY, RZ, U2 };

/// Category names used by reports and tests.
enum class GateKind {
  H,
  X,
  Phase,
  RY,
  RZ,
  U2,
  CNOT,
  ControlledU2,
  MultiControlledX
};

struct Gate {
  GateOp op = GateOp::H;
  int target = 0;
  std::vector<int> controls;
  double theta = 0.0;
  Eigen::Matrix2cd matrix = Eigen::Matrix2cd::Identity();  // U2 only
  // Gates sharing a non-negative id form one diagonal-oracle invocation.
  int oracle = -1;

  GateKind kind() const;
  /// The 2x2 matrix applied to the target when all controls are set.
  Eigen::Matrix2cd unitary() const;
  Gate inverse() const;
};

Gate make_gate(GateOp op, int target, double theta = 0.0);
Gate make_u2(int target, const Eigen::Matrix2cd& m);

struct Register {
  std::string name;
  int offset = 0;
  int size = 0;
};

/// Named, disjoint qubit ranges covering [0, total). Qubit 0 is the least
/// significant bit of a basis index.
class RegisterLayout {
 public:
  /// Appends a register; a taken name gets a numeric suffix. Returns offset.
  int add(std::string name, int size);
  int total() const { return total_; }
  const std::vector<Register>& registers() const { return registers_; }
  const Register& find(const std::string& name) const;
  bool contains(const std::string& name) const;

 private:
  std::vector<Register> registers_;
  int total_ = 0;
};

struct Metrics {
  long size = 0;
  long depth = 0;
};

/// How metrics() charges gates. Oracle counts each contiguous diagonal-oracle
/// run as one gate of depth one.
/**
 * Gates charges every gate. Oracle charges each diagonal-oracle run as one
 * gate of depth one. Additional charges oracle runs nothing, so only the
 * circuit around the oracles is counted; a run still orders the gates on
 * its qubits.
 */
enum class CostModel { Gates, Oracle, Additional };

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int num_qubits);
  explicit Circuit(RegisterLayout layout);

  int num_qubits() const { return layout_.total(); }
  const RegisterLayout& layout() const { return layout_; }
  RegisterLayout& layout() { return layout_; }
  const std::vector<Gate>& gates() const { return gates_; }
  bool empty() const { return gates_.empty(); }

  /// Appends after checking indices and control/target distinctness.
  Circuit& add(Gate g);

  Circuit& h(int q) { return add(make_gate(GateOp::H, q)); }
  Circuit& x(int q) { return add(make_gate(GateOp::X, q)); }
  Circuit& phase(int q, double theta) {
    return add(make_gate(GateOp::Phase, q, theta));
  }
  Circuit& ry(int q, double theta) {
    return add(make_gate(GateOp::RY, q, theta));
  }
  Circuit& rz(int q, double theta) {
    return add(make_gate(GateOp::RZ, q, theta));
  }
  Circuit& cx(int control, int target);
  Circuit& ccx(int c0, int c1, int target);

  /// Appends `other` with its qubit i sent to map[i]. Oracle ids are renumbered
  /// so invocations from different appends never merge.
  Circuit& append(const Circuit& other, const std::vector<int>& map);
  Circuit& append(const Circuit& other);

  /// Tags every gate as part of one fresh oracle invocation.
  Circuit& mark_oracle();

  Circuit inverse() const;

 private:
  int fresh_oracle_id() { return next_oracle_++; }

  RegisterLayout layout_;
  std::vector<Gate> gates_;
  int next_oracle_ = 0;
};

/// Gate counts and greedy earliest-slot depth. Gates with c > 2 controls are
/// charged as the AND-tree they stand for: 2c-3 gates, depth 2*ceil(log2 c)-1.
Metrics metrics(const Circuit& c, CostModel model = CostModel::Gates);

/// A gate block as scheduled by metrics: one gate or one oracle run.
struct GateBlock {
  std::size_t begin = 0;
  std::size_t end = 0;  // one past last
  std::uint64_t qubits = 0;
};

/// Splits the gate list into oracle runs and single gates.
std::vector<GateBlock> gate_blocks(const Circuit& c);

/// Unit-weight greedy layer index of every block.
std::vector<int> block_layers(const std::vector<GateBlock>& blocks);

inline constexpr int kMaxSimulationQubits = 24;

/// Applies the circuit to a state vector of dimension 2^num_qubits.
VectorXc simulate(const Circuit& c, const VectorXc& input);

/// Applies one gate in place.
void apply_gate(const Gate& g, VectorXc& state);

/// Full 2^q x 2^q operator (q <= 12).
MatrixXc unitary_matrix(const Circuit& c);

/// (<0|^a (x) I) U (|0>^a (x) I) for ancillas on the top a qubits.
MatrixXc extract_block(const Circuit& c, int n, int a);

}  // namespace qlt
