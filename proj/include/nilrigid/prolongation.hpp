#pragma once

#include <cstddef>
#include <vector>

#include "nilrigid/algebra.hpp"

namespace nilrigid {

inline constexpr std::size_t kDefaultMaxLevel = 10;
/// Largest linear system (number of unknowns) solved for a single level.
inline constexpr std::size_t kDefaultMaxUnknowns = 4000;

/// A basis element u of g_k, stored as its action on the generators of n:
/// column i of A is u(e_i) in g_{k-1}, column l of B is u(f_l) in g_{k-2}
/// (coordinates in the bases chosen for those levels; level -1 is the e
/// basis and level -2 the f basis).
struct LevelElement {
  QMat A;
  QMat B;
};

struct ProlongationResult {
  std::vector<std::size_t> level_dims;  // dim g_0, dim g_1, ...
  bool terminated = false;              // the last computed level is 0
  /// Stopped before max_level because the next level exceeded the
  /// unknown budget (never set when terminated).
  bool budget_exhausted = false;
  /// n + m + Σ level_dims; the full dimension of ĝ only when terminated.
  std::size_t total_dim = 0;
  /// Bases of g_0, g_1, ... (empty vector for the final zero level).
  std::vector<std::vector<LevelElement>> bases;
};

/// Tanaka prolongation level by level: g_k consists of the degree k
/// derivations from n into n ⊕ g_0 ⊕ ... ⊕ g_{k-1}. Computes g_0 through
/// g_{max_level}, stopping early at the first zero level, or before a level
/// whose system has more than max_unknowns unknowns. Requires a fundamental
/// algebra.
ProlongationResult prolong(const Graded2Step& a, std::size_t max_level = kDefaultMaxLevel,
                           std::size_t max_unknowns = kDefaultMaxUnknowns);

/// Recomputes level `k` from the stored bases of the lower levels and
/// returns its dimension. Used to re-check a termination certificate.
std::size_t recompute_level_dim(const Graded2Step& a, const ProlongationResult& r, std::size_t k);

/// True when (A, B) in g_0 is the grading element (A = Id, B = 2 Id) up to
/// the span of the computed basis.
bool contains_grading_element(const Graded2Step& a, const ProlongationResult& r);

}  // namespace nilrigid
