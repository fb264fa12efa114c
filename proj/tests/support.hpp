#pragma once

// Small helpers shared by the test programs. Deliberately naive so they can
// serve as independent oracles.

#include <random>
#include <vector>

#include "nilrigid/algebra.hpp"

namespace nilrigid::testing {

inline QVec mat_vec(const QMat& a, const QVec& x) {
  QVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

inline QVec unit(std::size_t n, std::size_t i) {
  QVec v(n);
  v[i] = 1;
  return v;
}

// Bracket computed straight from the definition, without the class helpers.
inline QVec naive_bracket(const Graded2Step& a, const QVec& x, const QVec& y) {
  QVec z(a.m());
  for (std::size_t k = 0; k < a.m(); ++k)
    for (std::size_t i = 0; i < a.n(); ++i)
      for (std::size_t j = 0; j < a.n(); ++j) z[k] += x[i] * y[j] * a.coef(i, j, k);
  return z;
}

inline QMat random_diagonal_metric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(1, 3);
  std::bernoulli_distribution neg(0.4);
  QMat g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = neg(rng) ? -d(rng) : d(rng);
  return g;
}

// A random symmetric invertible form: SᵀDS with S unit upper triangular.
inline QMat random_symmetric_metric(std::mt19937_64& rng, std::size_t n) {
  QMat d = random_diagonal_metric(rng, n);
  std::uniform_int_distribution<int> e(-2, 2);
  QMat s = QMat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s(i, j) = e(rng);
  return s.transpose() * d * s;
}

}  // namespace nilrigid::testing
