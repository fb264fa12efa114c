#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilrigid/algebra.hpp"

namespace nilrigid {

// Conventions: Cl(r,s) is generated by J_1..J_{r+s} with
// J_iJ_j + J_jJ_i = −2η_ij Id, η = diag(+1^r, −1^s); so J_i² = −Id for the
// first r generators and +Id for the last s. The volume element is
// ω = J_1 J_2 ⋯ J_{r+s}.

inline constexpr std::size_t kMaxCliffordIndex = 8;

struct IrreducibleInfo {
  std::size_t dim = 0;
  bool two_classes = false;  // r − s ≡ 3 (mod 4): V₊ and V₋ told apart by ω = ±Id
};

IrreducibleInfo irreducible_dim(std::size_t r, std::size_t s);

/// Which irreducible to build. Plus/Minus are only valid when two classes
/// exist; Default is whatever the recursion produces.
enum class ModuleClass { Default, Plus, Minus };

/// Integer generators of an irreducible Cl(r,s)-module (all entries 0, ±1,
/// one nonzero per row and column).
std::vector<QMat> build_generators(std::size_t r, std::size_t s, ModuleClass target = ModuleClass::Default);

/// Exact Clifford relation check against η = diag(+1^r, −1^s).
bool satisfies_clifford_relations(std::span<const QMat> gens, std::size_t r);

QMat volume_element(std::span<const QMat> gens, std::size_t dim);

/// Basis of the symmetric solutions G of J_iᵀG + GJ_i = 0 (deterministic order).
std::vector<QMat> admissible_form_space(std::span<const QMat> gens, std::size_t dim);

/// A non-degenerate admissible symmetric form, or nullopt when every
/// solution is singular (proved, not guessed; may throw ResourceExhausted
/// on very large solution spaces whose determinant polynomial cannot be
/// certified).
std::optional<QMat> admissible_form(std::span<const QMat> gens, std::size_t dim);

struct CliffordRep {
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t dim = 0;
  std::vector<QMat> gens;
  std::optional<QMat> G;
  /// Irreducible summands, e.g. {"V+", "V+"} or {"V"}.
  std::vector<std::string> composition;
  bool twin_flag = false;   // two inequivalent minimal admissible modules
  bool mixed_flag = false;  // minimal admissible module is not irreducible
};

/// Minimal admissible module. Tries one irreducible (V₊ before V₋), then
/// V₊⊕V₊ and V₋⊕V₋, then V₊⊕V₋.
CliffordRep minimal_admissible(std::size_t r, std::size_t s);

/// Minimal admissible module built from the irreducible of class `cls`
/// (Default means the overall minimal one).
CliffordRep minimal_admissible_of_class(std::size_t r, std::size_t s, ModuleClass cls);

struct CopySpec {
  ModuleClass cls = ModuleClass::Default;
  std::size_t count = 1;
};

/// Parses "min:1", "+:2,-:1" and similar.
std::vector<CopySpec> parse_copies(const std::string& text);

struct HTypeAlgebra {
  MTypeAlgebra algebra;
  std::vector<QMat> gens;  // J-maps of the basis z_k (block diagonal)
  std::vector<std::string> composition;
};

/// Pseudo H-type algebra n^{r,s}(V) with V the orthogonal sum of the
/// requested minimal admissible modules; [x,y] = Σ_k η_kk ⟨J_k x, y⟩_V z_k.
HTypeAlgebra build_htype(std::size_t r, std::size_t s, std::span<const CopySpec> copies);

struct InvolutionSet {
  std::vector<QMat> P;
  std::vector<std::vector<int>> sign_table;  // [j][k]: +1 if P_j commutes with J_k, else −1
  /// Sign patterns in order (+..+), (+..−), ..., the first involution varying slowest.
  std::vector<std::vector<int>> patterns;
  std::vector<std::vector<QVec>> eigenbasis;  // per pattern
};

/// Default quadruples (1-based) for (3,4) and (7,0).
std::vector<std::array<std::size_t, 4>> default_quadruples(std::size_t r, std::size_t s);

/// P_j = J_a J_b J_c J_d for each quadruple (1-based indices). Verifies
/// P² = Id, pairwise commutation and G-symmetry.
InvolutionSet involution_set(const CliffordRep& rep, std::span<const std::array<std::size_t, 4>> quadruples);

struct Table1Entry {
  std::size_t r = 0;
  std::size_t s = 0;
  bool computed = false;  // false when the module would exceed max_dim
  std::size_t dim = 0;
  bool twin = false;
  bool mixed = false;
  std::vector<std::string> composition;
};

/// Minimal admissible dimensions for 0 ≤ r,s ≤ 8 (s-major, then r).
/// Entries whose module exceeds max_dim are left uncomputed.
std::vector<Table1Entry> table1(std::size_t max_dim);

}  // namespace nilrigid
