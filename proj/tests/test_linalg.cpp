#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "nilrigid/linalg.hpp"

using namespace nilrigid;

namespace {

QMat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  QMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = make_rat(d(rng), 1 + (d(rng) & 1));
  return m;
}

// Plain textbook Gaussian elimination over Q, used as an oracle.
std::size_t naive_rank(QMat m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      Rat f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

// Leibniz expansion over all permutations.
Rat leibniz_det(const QMat& m) {
  std::vector<std::size_t> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  Rat total;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inv;
    Rat t = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < p.size(); ++i) t *= m(i, p[i]);
    total += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST_CASE("rank on small examples") {
  CHECK(rank(QMat::identity(3)) == 3);
  CHECK(rank(QMat{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(QMat(3, 4)) == 0);
  CHECK(rank(QMat{{Rat(1, 2), Rat(1, 3)}, {Rat(3, 2), 1}}) == 1);
}

TEST_CASE("kernel of a rank one matrix") {
  QMat k = kernel(QMat{{1, 1}, {0, 0}});
  REQUIRE(k.rows() == 2);
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -1);
  CHECK(k(1, 0) == 1);
  CHECK(proportional(k.col(0), QVec{1, -1}));
}

TEST_CASE("solve: unique, inconsistent and underdetermined") {
  auto x = solve(QMat::identity(2), QVec{3, Rat(-1, 2)});
  REQUIRE(x);
  CHECK(*x == QVec{3, Rat(-1, 2)});
  CHECK_FALSE(solve(QMat{{1, 1}, {1, 1}}, QVec{1, 0}));
  auto y = solve(QMat{{2, 0}, {0, 0}}, QVec{4, 0});
  REQUIRE(y);
  CHECK(*y == QVec{2, 0});
}

TEST_CASE("signature of small symmetric matrices") {
  CHECK(signature(QMat{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}) == Inertia{2, 1, 0});
  CHECK(signature(QMat{{0, 1}, {1, 0}}) == Inertia{1, 1, 0});
  CHECK(signature(QMat{{0}}) == Inertia{0, 0, 1});
  CHECK(signature(QMat{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}) == Inertia{1, 1, 1});
  CHECK_THROWS_AS(signature(QMat{{0, 1}, {0, 0}}), Error);
}

TEST_CASE("algebra closure dimensions") {
  std::vector<QMat> none;
  CHECK(algebra_closure(none, 2, 4).size() == 1);
  std::vector<QMat> units{QMat{{1, 0}, {0, 0}}, QMat{{0, 1}, {0, 0}}, QMat{{0, 0}, {1, 0}},
                          QMat{{0, 0}, {0, 1}}};
  CHECK(algebra_closure(units, 2, 4).size() == 4);
  // The complex structure generates a copy of C inside 2x2 matrices.
  std::vector<QMat> j{QMat{{0, -1}, {1, 0}}};
  CHECK(algebra_closure(j, 2, 4).size() == 2);
  // Upper triangular nilpotent generator: span{I, N}.
  std::vector<QMat> n{QMat{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}};
  CHECK(algebra_closure(n, 3, 9).size() == 3);
}

TEST_CASE("rank agrees with naive elimination") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    QMat m = random_mat(rng, r, c, -2, 2);
    CHECK(rank(m) == naive_rank(m));
    CHECK(rank(m) == rank(m.transpose()));
    auto mp = rank_mod_p(m);
    if (mp) CHECK(*mp == rank(m));
    CHECK(rank(m) == rank(to_complex(m)));
  }
}

TEST_CASE("determinant and inverse against Leibniz") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + rng() % 5;
    QMat m = random_mat(rng, n, n, -3, 3);
    Rat d = leibniz_det(m);
    CHECK(det(m) == d);
    CHECK(is_nonsingular(m) == (sgn(d) != 0));
    auto inv = inverse(m);
    CHECK(inv.has_value() == (sgn(d) != 0));
    if (inv) CHECK(m * *inv == QMat::identity(n));
  }
}

TEST_CASE("kernel and rref invariants") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    QMat m = random_mat(rng, r, c, -1, 1);
    QMat k = kernel(m);
    CHECK(k.cols() + rank(m) == c);
    CHECK((m * k).is_zero());
    Rref e = rref(m);
    CHECK(e.reduced.rows() == rank(m));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      CHECK(e.reduced(i, e.pivots[i]) == 1);
      if (i) CHECK(e.pivots[i] > e.pivots[i - 1]);
    }
    // b in the column space is always solvable and the answer checks out
    QVec x0(c);
    for (auto& v : x0) v = Rat(static_cast<long>(rng() % 5) - 2);
    QVec b = m.apply(x0);
    auto x = solve(m, b);
    REQUIRE(x);
    CHECK(m.apply(*x) == b);
  }
}

TEST_CASE("signature is a congruence invariant") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + rng() % 6;
    QVec d(n);
    Inertia expect;
    for (auto& v : d) {
      int s = static_cast<int>(rng() % 3) - 1;
      v = Rat(s * static_cast<long>(1 + rng() % 3));
      (s > 0 ? expect.pos : s < 0 ? expect.neg : expect.null)++;
    }
    QMat p = random_mat(rng, n, n, -2, 2);
    if (!is_nonsingular(p)) continue;
    QMat g = p.transpose() * QMat::diagonal(d) * p;
    CHECK(signature(g) == expect);
  }
}

TEST_CASE("span builder") {
  SpanBuilder s(3);
  CHECK(s.add(QVec{1, 2, 3}));
  CHECK_FALSE(s.add(QVec{2, 4, 6}));
  CHECK(s.add(QVec{0, 1, 0}));
  CHECK(s.dim() == 2);
  CHECK(s.contains(QVec{1, 0, 3}));
  CHECK_FALSE(s.contains(QVec{0, 0, 1}));
  CHECK(s.reduce(QVec{1, 1, 3}) == QVec{0, 0, 0});
}

TEST_CASE("gaussian rank sees complex dependence") {
  // rows (1, i) and (i, -1) are proportional over Q(i)
  CMat m(2, 2);
  m(0, 0) = GaussRat(1);
  m(0, 1) = GaussRat(0, 1);
  m(1, 0) = GaussRat(0, 1);
  m(1, 1) = GaussRat(-1);
  CHECK(rank(m) == 1);
}

TEST_CASE("large kernels agree with the exact echelon form") {
  // Above the size threshold kernel() goes through modular arithmetic; the
  // exact reduced echelon form is the oracle.
  std::mt19937_64 rng(77);
  for (int t = 0; t < 4; ++t) {
    const std::size_t rows = 70 + 10 * t, cols = 80, rk = 30 + 10 * t;
    QMat left = random_mat(rng, rows, rk, -3, 3), right = random_mat(rng, rk, cols, -2, 2);
    QMat m = left * right;
    QMat k = kernel(m);
    Rref e = rref(m);
    REQUIRE(k.cols() == cols - e.pivots.size());
    CHECK((m * k).is_zero());
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::size_t f = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      if (is_pivot[j]) continue;
      for (std::size_t i = 0; i < e.pivots.size(); ++i) CHECK(k(e.pivots[i], f) == -e.reduced(i, j));
      CHECK(k(j, f) == 1);
      ++f;
    }
  }
}
