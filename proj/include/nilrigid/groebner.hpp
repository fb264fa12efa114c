#pragma once

#include <cstddef>
#include <vector>

#include "nilrigid/poly.hpp"

namespace nilrigid {

struct GroebnerOptions {
  /// Upper bound on elementary reduction steps before giving up with
  /// ResourceExhausted.
  std::size_t max_reductions = 200000;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t reductions = 0;
};

/// Reduced Groebner basis in degrevlex (monic, sorted by increasing leading
/// monomial). Buchberger's algorithm with the Gebauer-Moeller criteria and
/// the normal selection strategy.
std::vector<Poly> groebner(const Ideal& ideal, const GroebnerOptions& opts = {},
                           GroebnerStats* stats = nullptr);

/// Full normal form of p modulo `basis` (any finite set; unique when basis
/// is a Groebner basis).
Poly normal_form(const Poly& p, const std::vector<Poly>& basis);

/// For a homogeneous ideal: true iff its complex zero set is {0}. Decided by
/// checking that every variable has a pure power among the leading
/// monomials of the reduced Groebner basis.
bool vanishes_only_at_origin(const Ideal& ideal, const GroebnerOptions& opts = {});

/// Same test on a precomputed reduced Groebner basis. `missing` receives the
/// 0-based variables without a pure-power leading monomial.
bool has_pure_powers(const std::vector<Poly>& gb, std::size_t nvars,
                     std::vector<std::size_t>* missing = nullptr);

}  // namespace nilrigid
