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

#include <numbers>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "qlt/transform.hpp"

using namespace qlt;
using doctest::Approx;

namespace {

QltProblem problem(VectorXc x, VectorXc y, double eps, SeriesKind kind) {
  QltProblem p;
  p.x = std::move(x);
  p.y = std::move(y);
  p.eps = eps;
  p.kind = kind;
  return p;
}

VectorXc vec(std::initializer_list<Complex> v) {
  VectorXc out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (Complex c : v) out(i++) = c;
  return out;
}

}  // namespace

TEST_CASE("dlt matrix") {
  CHECK((dlt_matrix(vec({0, 0}), vec({0, 0})) - MatrixXc::Constant(2, 2, 0.5)).norm() <
        1e-15);
  const MatrixXc m = dlt_matrix(vec({0, std::numbers::ln2}), vec({0, 1}));
  CHECK(std::abs(m(1, 1) - 1.0) < 1e-15);
  CHECK(std::abs(m(0, 1) - 0.5) < 1e-15);
  const MatrixXc e = dlt_matrix(vec({0, Complex(0, std::numbers::pi)}), vec({0, 1}));
  CHECK(std::abs(e(1, 1) + 0.5) < 1e-15);
  CHECK_THROWS_AS(dlt_matrix(vec({0, 1, 2}), vec({0, 1, 2})), std::invalid_argument);
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(plan_series(problem(vec({0, 1}), vec({0}), 1e-2, SeriesKind::Taylor)),
                  std::invalid_argument);
  CHECK_THROWS_AS(plan_series(problem(vec({0, 1}), vec({0, 1}), 0.0, SeriesKind::Taylor)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      plan_series(problem(vec({0, 1}), vec({0, Complex(0, 1)}), 1e-2, SeriesKind::Chebyshev)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      plan_series(problem(vec({0, 10}), vec({0, 10}), 1e-2, SeriesKind::Chebyshev)),
      std::invalid_argument);
  try {
    plan_series(problem(vec({0, std::nan("")}), vec({0, 1}), 1e-2, SeriesKind::Taylor));
    FAIL("expected a validation error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("x") == 0);
  }
}

TEST_CASE("plan series") {
  const SeriesPlan zero = plan_series(problem(vec({0, 0}), vec({0, 0}), 1e-2, SeriesKind::Taylor));
  CHECK(zero.K == 0);
  CHECK(zero.terms.size() == 1);
  CHECK(zero.alpha == 1.0);
  CHECK(zero.degenerate);

  const SeriesPlan t =
      plan_series(problem(vec({0, std::numbers::ln2}), vec({0, 1}), 1e-3, SeriesKind::Taylor));
  CHECK(t.K == 5);
  CHECK(t.alpha == Approx(2.0));
  CHECK(t.terms.size() == 6);
  CHECK(t.tail_bound == Approx(3.0807e-4).epsilon(1e-4));

  const SeriesPlan c = plan_series(problem(vec({0, 1}), vec({0, 1}), 1e-3, SeriesKind::Chebyshev));
  CHECK(c.K == 5);
  CHECK(c.terms[0].lambda == Approx(std::numbers::e));
  CHECK(c.terms[1].lambda == Approx(std::numbers::e));
  CHECK(c.terms[2].lambda == Approx(std::numbers::e / 4.0));
  CHECK(c.alpha == Approx(std::numbers::e * (2.0 * std::exp(0.5) - 1.0)));

  const SeriesPlan d = plan_series(
      problem(vec({0, 1}), vec({0, Complex(0, 1)}), 1e-2, SeriesKind::DoubleChebyshev));
  CHECK(d.terms.size() == static_cast<std::size_t>((d.K + 1) * (d.K + 1)));

  const SeriesPlan o = plan_series(problem(vec({0, 1}), vec({0, 1}), 1e-2, SeriesKind::Taylor), 2);
  CHECK(o.K == 2);
  CHECK(o.tail_bound == Approx(taylor_tail_bound(1.0, 2)));
}

TEST_CASE("series terms reproduce the kernel") {
  std::mt19937_64 rng(31);
  for (SeriesKind kind : {SeriesKind::Taylor, SeriesKind::Chebyshev}) {
    const QltProblem p =
        problem(testing::random_real(rng, 4), testing::random_real(rng, 4), 1e-6, kind);
    const SeriesPlan plan = plan_series(p);
    MatrixXc sum = MatrixXc::Zero(4, 4);
    for (const auto& t : plan.terms) sum += t.lambda * t.left * t.right.transpose();
    CHECK((sum / 4.0 - dlt_matrix(p.x, p.y)).cwiseAbs().maxCoeff() <= plan.tail_bound / 4.0);
  }
}

TEST_CASE("build qlt") {
  SUBCASE("degenerate") {
    const QltProblem p = problem(vec({0, 0}), vec({0, 0}), 1e-2, SeriesKind::Taylor);
    const BlockEncoding be = build_qlt(p);
    CHECK(be.alpha == 1.0);
    CHECK((be.block() - MatrixXc::Constant(2, 2, 0.5)).norm() < 1e-12);
    CHECK(verify_qlt(p, be).measured_error <= 1e-9);
  }
  SUBCASE("real taylor") {
    const QltProblem p =
        problem(vec({0, std::numbers::ln2}), vec({0, 1}), 1e-3, SeriesKind::Taylor);
    const BlockEncoding be = build_qlt(p);
    const MatrixXc ref = 0.5 * MatrixXc{{1.0, 1.0}, {1.0, 2.0}};
    CHECK(spectral_norm(ref - be.alpha * be.block()) <= 1e-3);
  }
  SUBCASE("complex taylor") {
    const QltProblem p = problem(vec({0, Complex(0, std::numbers::pi / 4)}), vec({0, 1}),
                                 1e-3, SeriesKind::Taylor);
    const BlockEncoding be = build_qlt(p);
    MatrixXc ref = MatrixXc::Constant(2, 2, 0.5);
    ref(1, 1) = 0.5 * std::polar(1.0, std::numbers::pi / 4);
    CHECK(spectral_norm(ref - be.alpha * be.block()) <= 1e-3);
  }
  SUBCASE("random n = 2, both real kinds") {
    std::mt19937_64 rng(37);
    const VectorXc x = testing::random_real(rng, 4), y = testing::random_real(rng, 4);
    for (SeriesKind kind : {SeriesKind::Taylor, SeriesKind::Chebyshev}) {
      const QltProblem p = problem(x, y, 1e-2, kind);
      const Verification v = verify_qlt(p, build_qlt(p));
      CHECK(v.pass);
      CHECK(v.measured_error <= 1e-2);
    }
  }
  SUBCASE("double chebyshev") {
    std::mt19937_64 rng(41);
    const QltProblem p = problem(testing::random_complex(rng, 2),
                                 testing::random_complex(rng, 2), 1e-2,
                                 SeriesKind::DoubleChebyshev);
    const Verification v = verify_qlt(p, build_qlt(p));
    CHECK(v.pass);
  }
  SUBCASE("forced low order fails verification") {
    const QltProblem p = problem(vec({0, 1}), vec({0, 1}), 1e-4, SeriesKind::Taylor);
    const SeriesPlan plan = plan_series(p, 1);
    const Verification v = verify_qlt(p, build_qlt(p, plan));
    CHECK_FALSE(v.pass);
  }
}

TEST_CASE("resource report") {
  const QltProblem zero = problem(vec({0, 0}), vec({0, 0}), 1e-2, SeriesKind::Taylor);
  const SeriesPlan zp = plan_series(zero);
  CHECK(resource_report(build_qlt(zero, zp), zp).controlled_diagonal_calls == 2);

  const QltProblem p =
      problem(vec({0, std::numbers::ln2}), vec({0, 1}), 1e-3, SeriesKind::Taylor);
  const SeriesPlan plan = plan_series(p);
  const ResourceReport r = resource_report(build_qlt(p, plan), plan);
  CHECK(r.K == 5);
  CHECK(r.controlled_diagonal_calls == 12);
  CHECK(r.system_qubits == 1);
  CHECK(r.total_qubits == r.system_qubits + r.ancillas);
  CHECK(r.alpha == Approx(2.0));
  int covered = 0;
  for (const Register& reg : r.registers) covered += reg.size;
  CHECK(covered == r.total_qubits);

  // Fixed K: the oracle-model size grows roughly linearly in n.
  std::mt19937_64 rng(43);
  long sizes[2];
  for (int n : {2, 3}) {
    const Eigen::Index N = Eigen::Index{1} << n;
    const QltProblem q = problem(testing::random_real(rng, N), testing::random_real(rng, N),
                                 1e-2, SeriesKind::Taylor);
    const SeriesPlan fixed = plan_series(q, 4);
    sizes[n - 2] = resource_report(build_qlt(q, fixed), fixed).oracle_size;
  }
  CHECK(static_cast<double>(sizes[1]) / static_cast<double>(sizes[0]) < 1.9);
}

TEST_CASE("verify refuses large systems") {
  std::mt19937_64 rng(47);
  const QltProblem p = problem(testing::random_real(rng, 32), testing::random_real(rng, 32),
                               1e-1, SeriesKind::Taylor);
  const SeriesPlan plan = plan_series(p, 0);
  CHECK_THROWS_AS(verify_qlt(p, build_qlt(p, plan)), std::length_error);
}
