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

#include "qlt/block_encoding.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "qlt/subcircuits.hpp"

namespace qlt {

namespace {

std::vector<int> iota_vec(int begin, int count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), begin);
  return v;
}

int ceil_log2(std::size_t v) {
  int r = 0;
  while ((std::size_t{1} << r) < v) ++r;
  return r;
}

// Copies the registers of `src` lying above its n system qubits.
void add_ancilla_registers(RegisterLayout& dst, const Circuit& src, int n) {
  for (const auto& r : src.layout().registers()) {
    const int lo = std::max(r.offset, n);
    const int hi = r.offset + r.size;
    if (hi > lo) dst.add(r.name, hi - lo);
  }
}

}  // namespace

BlockEncoding unitary_be(const Circuit& u) {
  BlockEncoding be;
  RegisterLayout layout;
  layout.add("system", u.num_qubits());
  be.circuit = Circuit(layout);
  be.circuit.append(u);
  be.n = u.num_qubits();
  be.oracle_calls = 0;
  return be;
}

BlockEncoding identity_be(int n) {
  if (n < 0) throw std::invalid_argument("identity_be: n must be >= 0");
  return unitary_be(Circuit(n));
}

BlockEncoding product_be(const BlockEncoding& A, const BlockEncoding& B) {
  if (A.n != B.n) {
    throw std::invalid_argument("product_be: system sizes differ (" +
                                std::to_string(A.n) + " vs " +
                                std::to_string(B.n) + ")");
  }
  const int n = A.n;
  RegisterLayout layout;
  layout.add("system", n);
  add_ancilla_registers(layout, A.circuit, n);
  add_ancilla_registers(layout, B.circuit, n);
  Circuit c(layout);

  std::vector<int> map_b = iota_vec(0, n);
  for (int i = 0; i < B.a; ++i) map_b.push_back(n + A.a + i);
  std::vector<int> map_a = iota_vec(0, n + A.a);
  c.append(B.circuit, map_b);
  c.append(A.circuit, map_a);

  BlockEncoding out;
  out.circuit = std::move(c);
  out.n = n;
  out.a = A.a + B.a;
  out.alpha = A.alpha * B.alpha;
  out.eps = A.alpha * B.eps + B.alpha * A.eps;
  out.oracle_calls = A.oracle_calls + B.oracle_calls;
  return out;
}

std::vector<double> lcu_amplitudes(const std::vector<BlockEncoding>& terms,
                                   const std::vector<double>& lambdas) {
  if (terms.empty()) throw std::invalid_argument("lcu_be: no terms");
  if (lambdas.size() != terms.size()) {
    throw std::invalid_argument("lcu_be: one lambda per term required");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (!(lambdas[k] >= 0.0) || !std::isfinite(lambdas[k])) {
      throw std::invalid_argument("lcu_be: lambdas must be finite and >= 0");
    }
    total += lambdas[k] * terms[k].alpha;
  }
  if (!(total > 0.0)) throw std::invalid_argument("lcu_be: sum of weights is 0");
  const std::size_t dim = std::size_t{1} << ceil_log2(terms.size());
  std::vector<double> mu(dim, 0.0);
  double norm2 = 0.0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    mu[k] = std::sqrt(lambdas[k] * terms[k].alpha / total);
    norm2 += mu[k] * mu[k];
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (double& m : mu) m *= scale;
  return mu;
}

BlockEncoding lcu_be(const std::vector<BlockEncoding>& terms,
                     const std::vector<double>& lambdas, int copies) {
  const std::vector<double> mu = lcu_amplitudes(terms, lambdas);
  const int n = terms.front().n;
  int a_max = 0;
  for (const auto& t : terms) {
    if (t.n != n) throw std::invalid_argument("lcu_be: system sizes differ");
    a_max = std::max(a_max, t.a);
  }
  if (copies == kDefaultCopies) copies = std::max(0, n - 1);
  if (copies < 0) throw std::invalid_argument("lcu_be: copies must be >= 0");

  const int b = ceil_log2(terms.size());
  const int work = std::max(0, b - 2);
  RegisterLayout layout;
  layout.add("system", n);
  const bool uniform_layout =
      std::all_of(terms.begin(), terms.end(),
                  [&](const BlockEncoding& t) { return t.a == a_max; });
  if (uniform_layout) {
    add_ancilla_registers(layout, terms.front().circuit, n);
  } else {
    layout.add("term_ancilla", a_max);
  }
  const bool single = terms.size() == 1;
  const int ctrl = single ? -1 : layout.add("lcu_control", 1);
  const int copy0 = single ? -1 : layout.add("lcu_copies", copies);
  const int sel0 = layout.add("lcu_selector", b);
  const int work0 = layout.add("lcu_work", work);
  Circuit c(layout);

  BlockEncoding out;
  out.n = n;
  out.a = c.num_qubits() - n;
  double lambda = 0.0, eps = 0.0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    lambda += lambdas[k] * terms[k].alpha;
    eps += lambdas[k] * terms[k].eps;
    out.oracle_calls += terms[k].oracle_calls;
  }
  out.alpha = lambda;
  out.eps = eps;

  if (single) {
    c.append(terms.front().circuit, iota_vec(0, n + terms.front().a));
    out.circuit = std::move(c);
    return out;
  }

  const std::vector<int> selector = iota_vec(sel0, b);
  const std::vector<int> work_q = iota_vec(work0, work);
  const std::vector<int> high(selector.begin() + 1, selector.end());
  const int s0 = selector[0];
  std::vector<int> lines{ctrl};
  for (int i = 0; i < copies; ++i) lines.push_back(copy0 + i);

  Circuit prep = prepare_state(mu);
  c.append(prep, selector);

  auto body = [&](std::size_t k) {
    append_controlled(c, terms[k].circuit, iota_vec(0, n + terms[k].a), lines);
  };

  // Terms 2j and 2j+1 share P = [high bits == j]. The control holds P & !s0
  // for the even term; one CNOT from P turns it into P & s0 for the odd one.
  const std::size_t high_mask = (std::size_t{1} << high.size()) - 1;
  std::size_t flipped = 0;
  for (std::size_t j = 0; 2 * j < terms.size(); ++j) {
    const std::size_t want = ~j & high_mask;
    for (std::size_t d = want ^ flipped; d; d &= d - 1) {
      c.x(high[std::countr_zero(d)]);
    }
    flipped = want;

    Circuit tree(c.num_qubits());
    int P = -1;
    if (high.size() == 1) {
      P = high[0];
    } else if (high.size() > 1) {
      std::vector<int> roots;
      tree = and_tree(c.num_qubits(), high, work_q, roots);
      if (roots.size() == 2) {
        P = work_q[high.size() - 2];
        tree.ccx(roots[0], roots[1], P);
      } else {
        P = roots[0];
      }
    }
    // ctrl ^= P & s0, with P == 1 when there are no high bits.
    auto toggle = [&] {
      if (P < 0) {
        c.cx(s0, ctrl);
      } else {
        c.ccx(P, s0, ctrl);
      }
    };
    auto toggle_p = [&] {
      if (P < 0) {
        c.x(ctrl);
      } else {
        c.cx(P, ctrl);
      }
    };

    c.append(tree);
    c.x(s0);
    toggle();  // P & !s0
    c.x(s0);
    body(2 * j);
    if (2 * j + 1 < terms.size()) {
      toggle_p();  // P & s0
      body(2 * j + 1);
      toggle();
    } else {
      c.x(s0);
      toggle();
      c.x(s0);
    }
    c.append(tree.inverse());
  }
  for (std::size_t d = flipped; d; d &= d - 1) {
    c.x(high[std::countr_zero(d)]);
  }
  c.append(prep.inverse(), selector);
  out.circuit = std::move(c);
  return out;
}

BlockEncoding elementwise_product_be(const Circuit& U, const Circuit& V) {
  if (U.num_qubits() != V.num_qubits()) {
    throw std::invalid_argument("elementwise_product_be: size mismatch");
  }
  const int n = U.num_qubits();
  RegisterLayout layout;
  layout.add("system", n);
  const int anc = layout.add("elementwise", n);
  Circuit c(layout);
  for (int i = 0; i < n; ++i) c.cx(i, anc + i);
  c.append(V, iota_vec(anc, n));
  c.append(U, iota_vec(0, n));
  for (int i = 0; i < n; ++i) c.cx(i, anc + i);

  BlockEncoding be;
  be.circuit = std::move(c);
  be.n = n;
  be.a = n;
  return be;
}

BlockEncoding uniform_matrix_be(int n) {
  if (n < 1) throw std::invalid_argument("uniform_matrix_be: n must be >= 1");
  Circuit h(n);
  for (int i = 0; i < n; ++i) h.h(i);
  BlockEncoding be = elementwise_product_be(h, h);
  return be;
}

BlockEncoding diagonal_be_exact(const VectorXc& d, const std::string& name) {
  const Eigen::Index dim = d.size();
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("diagonal_be_exact: length must be 2^n");
  }
  const int n = std::countr_zero(static_cast<std::uint64_t>(dim));
  bool real = true;
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double m = std::abs(d(j));
    if (!std::isfinite(m) || m > 1.0 + 1e-12) {
      throw std::invalid_argument("diagonal_be_exact: |d_" + std::to_string(j) +
                                  "| = " + std::to_string(m) + " exceeds 1");
    }
    if (d(j).imag() != 0.0) real = false;
  }

  std::vector<double> beta(dim), phi(dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    if (real) {
      beta[j] = 2.0 * std::acos(std::clamp(d(j).real(), -1.0, 1.0));
    } else {
      beta[j] = 2.0 * std::acos(std::min(1.0, std::abs(d(j))));
      phi[j] = -std::arg(d(j));
    }
  }

  RegisterLayout layout;
  layout.add("system", n);
  const int anc = layout.add(name, 1);
  Circuit c(layout);
  const std::vector<int> controls = iota_vec(0, n);
  if (!real) append_uniformly_controlled(c, GateOp::RZ, phi, controls, anc);
  append_uniformly_controlled(c, GateOp::RY, beta, controls, anc);
  if (!real) append_uniformly_controlled(c, GateOp::RZ, phi, controls, anc);
  // A trivial diagonal is still one invocation; keep it visible in the circuit.
  if (c.empty()) c.ry(anc, 0.0);
  c.mark_oracle();

  BlockEncoding be;
  be.circuit = std::move(c);
  be.n = n;
  be.a = 1;
  be.oracle_calls = 1;
  return be;
}

}  // namespace qlt
