#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilrigid/algebra.hpp"
#include "nilrigid/groebner.hpp"
#include "nilrigid/prolongation.hpp"

namespace nilrigid {

enum class Verdict { Rigid, Infinite };

enum class CertificateKind {
  SmallCenter,
  RankOneWitness,
  ConditionC,
  BurnsideFull,
  IdealOriginOnly,
  IdealPositiveDim,
  ProlongationTerminated,
};

std::string to_string(Verdict v);
std::string to_string(CertificateKind k);

/// Gröbner evidence for the corank ideal.
struct GroebnerSummary {
  std::size_t minors = 0;      // number of 2x2 minors of ad_x
  std::size_t generators = 0;  // the ones that are not identically zero
  std::vector<Poly> basis;     // reduced Gröbner basis
  /// 0-based variables lacking a pure-power leading monomial (empty iff
  /// the zero set is the origin).
  std::vector<std::size_t> missing_pure_powers;
  GroebnerStats stats;
};

struct RankOneCertificate {
  CVec x;                // over Q(i); purely real when the imaginary parts vanish
  std::size_t rank = 0;  // rank of ad_x
};

/// Outcome of one stage in cross-check mode.
struct StageReport {
  std::string stage;    // "small_center", "rank_one", "condition_c", "burnside", "ideal", "prolongation"
  std::string outcome;  // "rigid", "infinite", "inconclusive", "not_terminated", "skipped"
};

struct RigidityVerdict {
  Verdict verdict = Verdict::Infinite;
  CertificateKind kind = CertificateKind::SmallCenter;
  std::size_t m = 0;  // dim n₋₂, recorded for SmallCenter
  std::optional<RankOneCertificate> rank_one;
  std::optional<ConditionCCertificate> condition_c;
  std::size_t closure_dim = 0;  // BurnsideFull
  std::optional<GroebnerSummary> ideal;
  std::optional<ProlongationResult> prolongation;
  std::vector<StageReport> stages;  // filled by Method::All
};

enum class Method { Auto, Ideal, Fast, Prolong, All };

Method parse_method(const std::string& name);

struct DecideOptions {
  Method method = Method::Auto;
  /// Metric used by the J-map stages; Euclidean when absent. The verdict
  /// does not depend on it.
  std::optional<Metric> metric;
  GroebnerOptions groebner;
  std::size_t max_level = kDefaultMaxLevel;
  std::size_t max_unknowns = kDefaultMaxUnknowns;
};

/// Rigid versus infinite type. Auto runs, in order, the small-center rule,
/// rank-one probes, condition (C), the Burnside closure and finally the
/// complete Gröbner decision on the corank ideal; the first conclusive
/// stage wins. Ideal skips straight to the Gröbner decision; Fast stops
/// after the shortcuts and Prolong uses only the prolongation, both
/// throwing ResourceExhausted when they cannot conclude. All runs every
/// stage and throws Error on any disagreement. The small-center rule
/// applies under every method.
RigidityVerdict decide(const Graded2Step& a, const DecideOptions& opts = {});

/// The 2x2 minors of the symbolic ad_x matrix.
Ideal corank_ideal(const Graded2Step& a);

/// Rank-one probe: basis vectors, e_i ± e_j, then e_i ± i e_j over Q(i).
std::optional<RankOneCertificate> rank_one_probe(const Graded2Step& a);

/// n² when the unital algebra generated by {J_i J_j : i < j} is all of
/// End(n₋₁), otherwise nullopt (inconclusive).
std::optional<std::size_t> burnside_check(const JMaps& j);

/// Re-checks the certificate carried by v against the algebra.
bool verify_certificate(const Graded2Step& a, const RigidityVerdict& v, const DecideOptions& opts = {});

struct SampleReport {
  std::size_t rigid_count = 0;
  std::size_t infinite_count = 0;
  std::vector<RigidityVerdict> verdicts;  // trial order
};

/// Trial t decides catalog random_algebra(m, n, seed + t). Trials run on
/// worker threads; the report does not depend on scheduling.
SampleReport sample_generic(std::size_t m, std::size_t n, std::uint64_t seed, std::size_t trials,
                            const DecideOptions& opts = {});

}  // namespace nilrigid
