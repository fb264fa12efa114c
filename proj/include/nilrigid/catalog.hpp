#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilrigid/algebra.hpp"

namespace nilrigid {

struct CatalogEntry {
  std::string name;
  Graded2Step algebra;
  /// A metric making the algebra pseudo H-type, when one is known.
  std::optional<Metric> htype_metric;
  std::optional<bool> expected_rigid;
  std::optional<bool> expected_j2;  // J²-condition under htype_metric
  std::string source;
};

/// The six graded 2-step algebras with dim n₋₁ = 4, dim n₋₂ = 3 (k = 1..6).
CatalogEntry gnla(int k);

/// The rigid (m, n) = (3, 5) algebra given by three explicit 5x5 J-maps
/// for the Euclidean metric.
CatalogEntry example_35();

/// The three J-maps of example_35 (Euclidean metric).
std::vector<QMat> example_35_jmaps();

/// Structure constants with the given J-maps for the metric g:
/// c_{xy}^l = Σ_k (G_Z⁻¹)_{lk} (G_V J_k)_{yx}.
Graded2Step algebra_from_jmaps(const std::vector<QMat>& jmaps, const Metric& g);

std::vector<std::string> catalog_names();
CatalogEntry catalog_get(const std::string& name);
std::vector<CatalogEntry> catalog_all();

/// splitmix64, the generator behind random_algebra.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// Random structure constants in {-3..3}: for each pair i < j in
/// lexicographic order and then each k, c_{ij}^k = (next() mod 7) - 3.
/// For m >= 1, draws continue on the same stream until the algebra is
/// fundamental (at most 100 rejections).
Graded2Step random_algebra(std::size_t m, std::size_t n, std::uint64_t seed);

/// m·C(n,2) − m² − n² + 1 + d(m,n), for the bi-dimensions whose generic
/// stabilizer dimension d(m,n) is tabulated.
Rat moduli_codim(std::size_t m, std::size_t n);

}  // namespace nilrigid
