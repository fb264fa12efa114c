#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nilrigid/matrix.hpp"

namespace nilrigid {

// Exact dense linear algebra. Rational routines clear denominators row by
// row and run fraction-free (Bareiss) elimination over the integers; results
// are normalized back to lowest-terms rationals.

std::size_t rank(const QMat& m);
std::size_t rank(const CMat& m);

struct Rref {
  QMat reduced;                    // rank rows, pivots normalized to 1
  std::vector<std::size_t> pivots; // pivot column of each row
};

/// Reduced row echelon form (zero rows dropped).
Rref rref(const QMat& m);

/// Null-space basis as the columns of the result. One column per free
/// variable, in increasing column order; that free variable is 1, the other
/// free variables 0.
QMat kernel(const QMat& m);

/// One solution of a x = b with every free variable set to 0, or nullopt
/// when the system is inconsistent.
std::optional<QVec> solve(const QMat& a, std::span<const Rat> b);

Rat det(const QMat& m);
std::optional<QMat> inverse(const QMat& m);

/// Fast exact non-singularity test (a mod-p rank certificate first, then
/// exact elimination when the prime is unlucky).
bool is_nonsingular(const QMat& m);

/// Rank modulo the Mersenne prime 2^61 - 1; nullopt if a denominator
/// vanishes modulo the prime.
std::optional<std::size_t> rank_mod_p(const QMat& m);

struct Inertia {
  std::size_t pos = 0;
  std::size_t neg = 0;
  std::size_t null = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia of a symmetric matrix (Sylvester), via symmetric fraction-free
/// LDLᵀ with diagonal pivoting and a 2x2 congruence step when the remaining
/// diagonal vanishes. Throws on non-symmetric input.
Inertia signature(const QMat& g);

bool is_symmetric(const QMat& m);

/// Incrementally maintained span of rational vectors of a fixed length.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t length) : length_(length) {}

  /// Reduces v against the span; returns the residue (zero iff v is inside).
  QVec reduce(QVec v) const;
  bool contains(const QVec& v) const;
  /// Adds v if it is outside the span. Returns true when the span grew.
  bool add(QVec v);

  std::size_t dim() const { return rows_.size(); }
  std::size_t length() const { return length_; }
  /// Canonical basis (reduced echelon rows).
  std::vector<QVec> basis() const;

 private:
  std::size_t length_;
  std::vector<QVec> rows_;
  std::vector<std::size_t> pivots_;
};

QVec flatten(const QMat& m);
QMat unflatten(std::span<const Rat> v, std::size_t rows, std::size_t cols);

/// Basis of the unital associative subalgebra of n×n matrices generated by
/// `gens`. Stops as soon as the dimension reaches max_dim. The basis is the
/// reduced echelon form of the flattened (row-major) matrices.
std::vector<QMat> algebra_closure(std::span<const QMat> gens, std::size_t n, std::size_t max_dim);

/// True when v is a nonzero multiple of u (both nonzero); sets ratio with
/// v = ratio * u.
bool proportional(std::span<const Rat> u, std::span<const Rat> v, Rat* ratio = nullptr);

}  // namespace nilrigid
