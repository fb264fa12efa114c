#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nilrigid/algebra.hpp"
#include "nilrigid/clifford.hpp"

namespace nilrigid {

enum class J2Mode { Standard, GeneralProbe };

/// A point where J_z J_{z'} x leaves span{J_w x : w ∈ n₋₂}. z and z' are
/// orthogonal and given in f coordinates.
struct J2Witness {
  QVec x;
  QVec z;
  QVec z_prime;
  Rat norm;                       // ⟨x, x⟩
  std::size_t span_rank = 0;      // rank [J_{f_1}x ... J_{f_m}x]
  std::size_t augmented_rank = 0; // same with J_z J_{z'} x appended
};

struct J2Verdict {
  bool holds = false;
  J2Mode mode = J2Mode::Standard;
  std::optional<J2Witness> witness;
  /// Standard mode: the ±1-orthonormal basis of n₋₂ (columns, f
  /// coordinates) and the pairs of it whose cubic residual vanishes
  /// identically.
  QMat basis;
  std::vector<std::array<std::size_t, 2>> zero_residual_pairs;
};

/// Complete decision of the J²-condition for pseudo H-type algebras.
/// On a ±1-orthonormal basis z_1..z_m (ε_k = ⟨z_k, z_k⟩) the H-type Gram
/// identity ⟨J_k x, J_l x⟩ = ε_k δ_kl ⟨x, x⟩ turns membership of
/// J_i J_j x in span{J_k x} into vanishing of the cubic
///   r_ij(x) = ⟨x,x⟩ J_i J_j x − Σ_k ε_k ⟨J_k x, J_i J_j x⟩ J_k x.
/// Basis pairs suffice: for orthogonal z = Σ a_i z_i, z' = Σ b_j z_j the
/// diagonal terms cancel (Σ a_i b_i ε_i = ⟨z, z'⟩ = 0 and J_i² = −ε_i Id),
/// leaving Σ_{i<j} (a_i b_j − a_j b_i) J_i J_j x.
/// Throws when the algebra is not pseudo H-type.
J2Verdict j2_standard(const MTypeAlgebra& a);

/// rank[J_{f_1}x ... J_{f_m}x] == rank[... | J_z J_{z'} x]. z and z' must be
/// orthogonal.
bool j2_pointwise(const JMaps& j, std::span<const Rat> x, std::span<const Rat> z, std::span<const Rat> z_prime);
/// Same for the basis vectors f_i and f_l (0-based).
bool j2_pointwise(const JMaps& j, std::span<const Rat> x, std::size_t i, std::size_t l);

/// Semi-decision of the general J²-condition: every orthogonal pair of
/// basis vectors against the probes (default: basis vectors and e_a ± e_b,
/// which include the null probes). holds = true only means no probe failed.
J2Verdict j2_general_probe(const JMaps& j, const std::optional<std::vector<QVec>>& probes = std::nullopt);

/// Re-checks a witness from scratch; require_non_null for standard mode.
bool check_j2_witness(const JMaps& j, const J2Witness& w, bool require_non_null);

/// x with ⟨x,x⟩ ≠ 0 and a pair of the ±1-orthonormal basis with
/// ⟨J_k x, J_z J_{z'} x⟩ = 0 for all k.
struct ForallWitness {
  QVec x;
  QVec z;
  QVec z_prime;
};

/// Searches the lattice {−2..2}ⁿ with at most three nonzero coordinates.
std::optional<ForallWitness> forall_witness_search(const MTypeAlgebra& a);

bool check_forall_witness(const JMaps& j, const ForallWitness& w);

/// For n^{3,4} on two copies of the same minimal module: x = w_1 + J_{z_k} w_2
/// with w_α spanning the common +1 eigenspace of P_1, P_2, P_3 in copy α,
/// k ∈ {1, 2} (or {5, 6, 7} when w_1 and w_2 have norms of opposite sign),
/// and the pair (z_3, z_4). Returns the first k that works.
struct DoubledWitness {
  J2Witness witness;
  std::size_t k = 0;  // 1-based
};
std::optional<DoubledWitness> doubled_34_witness(const HTypeAlgebra& h);

}  // namespace nilrigid
