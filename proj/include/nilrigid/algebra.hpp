#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nilrigid/linalg.hpp"
#include "nilrigid/poly.hpp"

namespace nilrigid {

/// Graded 2-step nilpotent Lie algebra n = n₋₂ ⊕ n₋₁ given by structure
/// constants: [e_i, e_j] = Σ_k c(k)(i,j) f_k, with every c(k) antisymmetric.
/// Indices are 0-based in the API and 1-based in JSON.
class Graded2Step {
 public:
  struct Bracket {
    std::size_t i;
    std::size_t j;
    QVec z;  // coordinates of [e_i, e_j] in the f basis, length m
  };

  Graded2Step() = default;
  Graded2Step(std::size_t n, std::size_t m);

  /// Builds from a bracket list. Entries with i > j are stored as
  /// [e_j, e_i] = −z; duplicates are summed; i == j must carry z = 0.
  static Graded2Step from_brackets(std::size_t n, std::size_t m, std::span<const Bracket> brackets);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }

  const Rat& coef(std::size_t i, std::size_t j, std::size_t k) const { return c_[k](i, j); }
  /// Sets c_{ij}^k and c_{ji}^k = −c_{ij}^k.
  void set(std::size_t i, std::size_t j, std::size_t k, const Rat& v);
  /// The antisymmetric n×n matrix of the k-th component.
  const QMat& component(std::size_t k) const { return c_[k]; }

  QVec bracket(std::span<const Rat> x, std::span<const Rat> y) const;
  /// Non-zero brackets [e_i, e_j], i < j, in lexicographic order.
  std::vector<Bracket> brackets() const;

  /// Concrete ad_x : n₋₁ → n₋₂ as an m×n matrix, column j = [x, e_j].
  QMat ad(std::span<const Rat> x) const;
  CMat ad(std::span<const GaussRat> x) const;

  friend bool operator==(const Graded2Step&, const Graded2Step&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<QMat> c_;
};

/// Gram matrices of the scalar products on n₋₁ (V) and n₋₂ (Z).
struct Metric {
  QMat V;
  QMat Z;

  static Metric euclidean(std::size_t n, std::size_t m);
  friend bool operator==(const Metric&, const Metric&) = default;
};

/// Graded 2-step algebra with orthogonal non-degenerate scalar products.
class MTypeAlgebra {
 public:
  MTypeAlgebra(Graded2Step a, Metric g);
  explicit MTypeAlgebra(Graded2Step a);

  const Graded2Step& algebra() const { return a_; }
  const Metric& metric() const { return g_; }

 private:
  Graded2Step a_;
  Metric g_;
};

/// J-maps of the basis f_k of n₋₂: ⟨J_{f_k} x, y⟩_V = ⟨f_k, [x, y]⟩_Z.
/// Matrices act on column vectors.
struct JMaps {
  std::vector<QMat> maps;
  Metric metric;

  std::size_t n() const { return metric.V.rows(); }
  std::size_t m() const { return maps.size(); }
  /// J_z for z given in the f basis (linear in z).
  QMat of(std::span<const Rat> z) const;
};

struct ValidationReport {
  bool fundamental = false;
  bool surjective_bracket = false;
  std::vector<QVec> central_in_minus1;  // basis of {x : [x, n₋₁] = 0}
};

ValidationReport validate(const Graded2Step& a);

/// m×n matrix of ad_x with entry (k, j) = Σ_i c_{ij}^k x_i.
PolyMatrix ad_matrix_symbolic(const Graded2Step& a);

JMaps j_maps(const MTypeAlgebra& a);

/// Clifford relations J_iJ_j + J_jJ_i = −2⟨f_i,f_j⟩ Id for all i, j.
bool verify_htype(const JMaps& j);

/// Basis of n₋₂ orthonormal up to sign for the form g, computed in Q.
/// Columns are the new vectors in f coordinates. Throws when a
/// normalization would need a square root.
QMat orthonormal_basis(const QMat& g);

/// Signs ε with J_{z_i}² = ε_i Id on a ±1-orthonormal basis of n₋₂ (the f
/// basis itself when G_Z is already diagonal ±1), or nullopt.
std::optional<std::vector<int>> verify_jtype(const JMaps& j);

struct ConditionCCertificate {
  std::array<std::size_t, 3> indices{};  // basis indices into n₋₂
  std::array<int, 3> sigma{};            // σ₁₂, σ₁₃, σ₂₃
};

/// Searches triples of basis vectors (all a<b<c when `triples` is empty)
/// for condition (C). Absence is inconclusive.
std::optional<ConditionCCertificate> condition_C(
    const JMaps& j, std::span<const std::array<std::size_t, 3>> triples = {});

/// Re-checks a condition (C) certificate from scratch.
bool check_condition_C(const JMaps& j, const ConditionCCertificate& cert);

struct MetivierReport {
  bool all_nondegenerate_on_probes = true;
  std::optional<QVec> degenerate_witness;
};

MetivierReport metivier_probe(const JMaps& j, std::span<const QVec> probes);

/// Free 2-step algebra on n generators: [e_i, e_j] = f_{(i,j)}, pairs in
/// lexicographic order.
Graded2Step free_two_step(std::size_t n);

}  // namespace nilrigid
