#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nilrigid/matrix.hpp"
#include "nilrigid/rational.hpp"

namespace nilrigid {

inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector of a monomial in at most kMaxVars variables.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  unsigned degree = 0;

  static Monomial variable(std::size_t i);
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// this / other; caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);

/// Degree reverse lexicographic comparison with x1 > x2 > ... > xn.
/// Returns <0, 0, >0 like strcmp.
int degrevlex_cmp(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rat coef;
};

/// Polynomial over Q in a fixed number of variables. Terms are kept sorted
/// in decreasing degrevlex order with no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) { check_vars(); }

  static Poly constant(std::size_t nvars, const Rat& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly monomial(std::size_t nvars, const Monomial& m, const Rat& c);
  /// Linear form sum_i coeffs[i] * x_{i+1}.
  static Poly linear(std::span<const Rat> coeffs);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading() const;
  const Monomial& lm() const { return leading().mono; }
  const Rat& lc() const { return leading().coef; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Rat(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  /// this += c * m * g, the basic reduction step.
  void add_scaled(const Poly& g, const Rat& c, const Monomial& m);
  Poly monic() const;

  /// Removes the leading term.
  void drop_leading();
  /// Appends a term smaller than every present term (no reordering).
  void append_trailing(Term t);

  Rat evaluate(std::span<const Rat> x) const;
  GaussRat evaluate(std::span<const GaussRat> x) const;

  /// Substitutes x_i -> sum_j u(i,j) x_j.
  Poly substitute_linear(const QMat& u) const;

  /// Canonical text, e.g. "3/2*x1^2*x3 - x2*x4"; "0" for zero.
  std::string to_string() const;

 private:
  void check_vars() const;
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Ideal given by generators over a common variable count.
struct Ideal {
  std::size_t nvars = 0;
  std::vector<Poly> gens;

  Ideal() = default;
  Ideal(std::size_t n, std::vector<Poly> g);
};

/// Matrix with polynomial entries, row-major.
using PolyMatrix = std::vector<std::vector<Poly>>;

/// All nonzero k x k minors of m, in lexicographic order of (row set,
/// column set). Entries must be linear homogeneous.
Ideal symbolic_matrix_minors(const PolyMatrix& m, std::size_t nvars, std::size_t k);

/// Determinant of a square polynomial matrix by cofactor expansion.
Poly poly_det(const PolyMatrix& m, std::size_t nvars);

}  // namespace nilrigid
