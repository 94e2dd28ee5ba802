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

#include "qlt/subcircuits.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace qlt {

namespace {

std::vector<int> iota_vec(int begin, int count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), begin);
  return v;
}

}  // namespace

void append_copy(Circuit& host, const std::vector<int>& lines) {
  const std::size_t n = lines.size();
  for (std::size_t have = 1; have < n; have *= 2) {
    for (std::size_t i = 0; i < have && i + have < n; ++i) {
      host.cx(lines[i], lines[i + have]);
    }
  }
}

Circuit copy_circuit(int n_a) {
  if (n_a < 1) throw std::invalid_argument("copy_circuit: n_a must be >= 1");
  RegisterLayout layout;
  layout.add("source", 1);
  layout.add("copies", n_a - 1);
  Circuit c(layout);
  append_copy(c, iota_vec(0, n_a));
  return c;
}

void append_controlled(Circuit& host, const Circuit& u,
                       const std::vector<int>& map,
                       const std::vector<int>& lines) {
  if (lines.empty()) {
    throw std::invalid_argument("append_controlled: no control line");
  }
  if (static_cast<int>(map.size()) != u.num_qubits()) {
    throw std::invalid_argument("append_controlled: qubit map has wrong length");
  }
  if (u.empty()) return;

  Circuit mapped(host.layout());
  mapped.append(u, map);
  const auto blocks = gate_blocks(mapped);
  const auto layer = block_layers(blocks);
  std::map<int, std::vector<std::size_t>> by_layer;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    by_layer[layer[i]].push_back(i);
  }

  Circuit body(host.layout());
  Circuit fan(host.layout());
  append_copy(fan, lines);
  body.append(fan);
  const std::size_t width = lines.size();
  for (const auto& entry : by_layer) {
    const auto& members = entry.second;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const GateBlock& b = blocks[members[k]];
      for (std::size_t gi = b.begin; gi < b.end; ++gi) {
        Gate g = mapped.gates()[gi];
        g.controls.push_back(lines[k % width]);
        body.add(std::move(g));
      }
    }
  }
  body.append(fan.inverse());
  host.append(body);
}

Circuit parallel_controlled(const Circuit& u, int ancillas) {
  if (ancillas < 0) {
    throw std::invalid_argument("parallel_controlled: ancillas must be >= 0");
  }
  RegisterLayout layout;
  layout.add("target", u.num_qubits());
  const int control = layout.add("control", 1);
  layout.add("copies", ancillas);
  Circuit c(layout);
  append_controlled(c, u, iota_vec(0, u.num_qubits()),
                    iota_vec(control, ancillas + 1));
  return c;
}

Circuit and_tree(int width, const std::vector<int>& controls,
                 const std::vector<int>& work, std::vector<int>& roots) {
  Circuit c(width);
  std::vector<int> level = controls;
  std::size_t next_work = 0;
  while (level.size() > 2) {
    std::vector<int> up;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      if (next_work >= work.size()) {
        throw std::invalid_argument("and_tree: not enough work qubits");
      }
      const int w = work[next_work++];
      c.ccx(level[i], level[i + 1], w);
      up.push_back(w);
    }
    if (level.size() % 2 == 1) up.push_back(level.back());
    level = std::move(up);
  }
  roots = level;
  return c;
}

void append_mcx(Circuit& host, const std::vector<int>& controls, int target,
                const std::vector<int>& work) {
  if (controls.empty()) {
    throw std::invalid_argument("append_mcx: at least one control required");
  }
  if (work.size() + 2 < controls.size()) {
    throw std::invalid_argument("append_mcx: needs " +
                                std::to_string(controls.size() - 2) +
                                " work qubits");
  }
  std::vector<int> roots;
  const Circuit tree = and_tree(host.num_qubits(), controls, work, roots);
  host.append(tree);
  if (roots.size() == 1) {
    host.cx(roots[0], target);
  } else {
    host.ccx(roots[0], roots[1], target);
  }
  host.append(tree.inverse());
}

Circuit decompose_mcx(int c, int work) {
  if (c < 1) throw std::invalid_argument("decompose_mcx: c must be >= 1");
  RegisterLayout layout;
  layout.add("controls", c);
  const int target = layout.add("target", 1);
  const int w = layout.add("work", work);
  Circuit circ(layout);
  append_mcx(circ, iota_vec(0, c), target, iota_vec(w, work));
  return circ;
}

void append_uniformly_controlled(Circuit& host, GateOp axis,
                                 const std::vector<double>& angles,
                                 const std::vector<int>& controls, int target) {
  if (axis != GateOp::RY && axis != GateOp::RZ) {
    throw std::invalid_argument("uniformly controlled rotation must be RY or RZ");
  }
  const int m = static_cast<int>(controls.size());
  const std::size_t count = std::size_t{1} << m;
  if (angles.size() != count) {
    throw std::invalid_argument("uniformly controlled rotation: need 2^m angles");
  }
  if (std::all_of(angles.begin(), angles.end(),
                  [](double a) { return a == 0.0; })) {
    return;
  }
  if (m == 0) {
    host.add(make_gate(axis, target, angles[0]));
    return;
  }
  // angles_j = sum_i (-1)^{popcount(j & gray_i)} theta_i
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t gray = i ^ (i >> 1);
    double theta = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      const bool odd = std::popcount(j & gray) & 1;
      theta += odd ? -angles[j] : angles[j];
    }
    theta /= static_cast<double>(count);
    host.add(make_gate(axis, target, theta));
    const int bit = i + 1 < count ? std::countr_zero(i + 1) : m - 1;
    host.cx(controls[bit], target);
  }
}

Circuit prepare_state(const std::vector<double>& mu) {
  const std::size_t dim = mu.size();
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw std::invalid_argument("prepare_state: length must be a power of two");
  }
  double norm2 = 0.0;
  for (double v : mu) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("prepare_state: amplitudes must be >= 0");
    }
    norm2 += v * v;
  }
  if (std::abs(norm2 - 1.0) > 1e-10) {
    throw std::invalid_argument("prepare_state: amplitudes are not normalized");
  }
  const int b = std::countr_zero(dim);
  RegisterLayout layout;
  layout.add("selector", b);
  Circuit c(layout);

  // Level l splits on qubit b-1-l, controlled by the l higher qubits.
  for (int l = 0; l < b; ++l) {
    const int target = b - 1 - l;
    const std::size_t groups = std::size_t{1} << l;
    const std::size_t span = dim / groups;
    std::vector<double> angles(groups);
    for (std::size_t g = 0; g < groups; ++g) {
      double w0 = 0.0, w1 = 0.0;
      for (std::size_t k = g * span; k < (g + 1) * span; ++k) {
        (k < g * span + span / 2 ? w0 : w1) += mu[k] * mu[k];
      }
      angles[g] = 2.0 * std::atan2(std::sqrt(w1), std::sqrt(w0));
    }
    append_uniformly_controlled(c, GateOp::RY, angles, iota_vec(target + 1, l),
                                target);
  }
  return c;
}

}  // namespace qlt
