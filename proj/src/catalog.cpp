#include "nilrigid/catalog.hpp"

#include "nilrigid/linalg.hpp"

namespace nilrigid {

namespace {

struct Br {
  int i, j, k, sign;  // [e_i, e_j] += sign * f_k, 1-based
};

Graded2Step from_list(std::size_t n, std::size_t m, std::initializer_list<Br> list) {
  std::vector<Graded2Step::Bracket> b;
  for (const auto& t : list) {
    QVec z(m);
    z[static_cast<std::size_t>(t.k - 1)] = t.sign;
    b.push_back({static_cast<std::size_t>(t.i - 1), static_cast<std::size_t>(t.j - 1), std::move(z)});
  }
  return Graded2Step::from_brackets(n, m, b);
}

QMat diag3(int a, int b, int c) { return QMat{{a, 0, 0}, {0, b, 0}, {0, 0, c}}; }

}  // namespace

CatalogEntry gnla(int k) {
  CatalogEntry e;
  e.name = "gnla" + std::to_string(k);
  switch (k) {
    case 1:
      e.algebra = from_list(4, 3, {{1, 4, 1, 1}, {2, 4, 2, 1}, {3, 4, 3, 1}});
      break;
    case 2:
      e.algebra = from_list(4, 3, {{1, 4, 1, 1}, {2, 4, 2, 1}, {3, 4, 3, 1}, {2, 3, 1, 1}});
      break;
    case 3:
      e.algebra = from_list(4, 3, {{1, 4, 1, 1}, {2, 3, 2, 1}, {3, 4, 3, 1}});
      break;
    case 4:
      e.algebra = from_list(4, 3, {{1, 3, 1, 1}, {4, 2, 1, 1}, {1, 4, 2, 1}, {2, 3, 2, 1}, {3, 4, 3, 1}});
      break;
    case 5:
      e.algebra = from_list(4, 3, {{1, 2, 1, 1}, {3, 4, 1, 1}, {1, 4, 2, 1}, {2, 3, 3, 1}});
      // n^{1,2}: f_1 timelike, f_2 and f_3 span a hyperbolic plane. No
      // diagonal metric works for this basis.
      e.htype_metric = Metric{QMat{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}},
                              QMat{{-1, 0, 0}, {0, 0, -2}, {0, -2, 0}}};
      e.expected_j2 = true;
      break;
    case 6:
      e.algebra = from_list(4, 3, {{1, 2, 1, 1}, {3, 4, 1, 1}, {1, 3, 2, 1}, {4, 2, 2, 1}, {1, 4, 3, 1}, {2, 3, 3, 1}});
      e.htype_metric = Metric{QMat::identity(4), diag3(1, 1, 1)};
      e.expected_j2 = true;
      break;
    default:
      throw Error("gnla: k must be between 1 and 6");
  }
  e.expected_rigid = k >= 5;
  e.source = k <= 3   ? "rank(ad_{e_1}) = 1, infinite type"
             : k == 4 ? "rank(ad_{e_1 + i e_2}) = 1 over C, infinite type"
             : k == 5 ? "isomorphic to the pseudo H-type algebra n^{1,2}, rigid"
                      : "isomorphic to the pseudo H-type algebra n^{3,0}, rigid";
  return e;
}

std::vector<QMat> example_35_jmaps() {
  return {
      QMat{{0, 1, 0, 0, 1}, {-1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, -1, 0, 0}, {-1, 0, 0, 0, 0}},
      QMat{{0, 0, 0, 0, 0}, {0, 0, 1, 0, 1}, {0, -1, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, -1, 0, 0, 0}},
      QMat{{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0}, {-1, 0, 0, 0, 1}, {0, -1, 0, -1, 0}},
  };
}

Graded2Step algebra_from_jmaps(const std::vector<QMat>& jmaps, const Metric& g) {
  const std::size_t n = g.V.rows(), m = g.Z.rows();
  if (jmaps.size() != m) throw Error("algebra_from_jmaps: need one map per basis vector of n₋₂");
  auto zinv = inverse(g.Z);
  if (!zinv) throw Error("algebra_from_jmaps: singular metric on n₋₂");
  std::vector<QMat> b;
  for (const auto& j : jmaps) {
    if (j.rows() != n || j.cols() != n) throw Error("algebra_from_jmaps: map has wrong shape");
    QMat gj = g.V * j;
    if (gj.transpose() != -gj) throw Error("algebra_from_jmaps: map is not skew for the metric");
    b.push_back(gj.transpose());
  }
  Graded2Step a(n, m);
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        Rat c;
        for (std::size_t k = 0; k < m; ++k) c += (*zinv)(l, k) * b[k](x, y);
        a.set(x, y, l, c);
      }
  return a;
}

CatalogEntry example_35() {
  CatalogEntry e;
  e.name = "example_35";
  e.algebra = algebra_from_jmaps(example_35_jmaps(), Metric::euclidean(5, 3));
  e.expected_rigid = true;
  e.source = "explicit (m, n) = (3, 5) J-maps; ad_x has rank >= 2 for x != 0, finite type";
  return e;
}

std::vector<std::string> catalog_names() {
  return {"heisenberg", "free3", "gnla1", "gnla2", "gnla3", "gnla4", "gnla5", "gnla6", "example_35"};
}

CatalogEntry catalog_get(const std::string& name) {
  if (name == "heisenberg") {
    CatalogEntry e{"heisenberg", free_two_step(2), Metric::euclidean(2, 1), false, true,
                   "dim n₋₂ = 1, infinite type"};
    return e;
  }
  if (name == "free3") {
    CatalogEntry e{"free3", free_two_step(3), std::nullopt, true, std::nullopt,
                   "free 2-step on 3 generators; prolongation of type B_3, rigid"};
    return e;
  }
  if (name == "example_35") return example_35();
  if (name.size() == 5 && name.starts_with("gnla") && name[4] >= '1' && name[4] <= '6') return gnla(name[4] - '0');
  throw Error("unknown catalog entry '" + name + "'");
}

std::vector<CatalogEntry> catalog_all() {
  std::vector<CatalogEntry> out;
  for (const auto& n : catalog_names()) out.push_back(catalog_get(n));
  return out;
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Graded2Step random_algebra(std::size_t m, std::size_t n, std::uint64_t seed) {
  if (n < 2) throw Error("random_algebra: n must be at least 2");
  if (m > n * (n - 1) / 2) throw Error("random_algebra: m exceeds dim Λ²n₋₁");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt <= 100; ++attempt) {
    Graded2Step a(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k) a.set(i, j, k, Rat(static_cast<long>(rng.next() % 7) - 3));
    if (m == 0 || validate(a).fundamental) return a;
  }
  throw Error("random_algebra: no fundamental algebra after 100 rejections");
}

Rat moduli_codim(std::size_t m, std::size_t n) {
  long d = -1;
  if (m == 2 && n >= 3 && n % 2 == 1)
    d = static_cast<long>(n) + 3;  // 2k + 4 with n = 2k + 1
  else if (m == 2 && n == 4)
    d = 7;
  else if (m == 2 && n == 6)
    d = 9;
  else if (m == 2 && n >= 8 && n % 2 == 0)
    d = 3 * static_cast<long>(n / 2);
  else if (m == 3 && n == 4)
    d = 6;
  else if (m == 3 && n == 5)
    d = 3;
  if (d < 0)
    throw Error("moduli_codim: stabilizer dimension d(" + std::to_string(m) + "," + std::to_string(n) +
                ") not tabulated");
  const long mm = static_cast<long>(m), nn = static_cast<long>(n);
  return Rat(mm * nn * (nn - 1) / 2 - mm * mm - nn * nn + 1 + d);
}

}  // namespace nilrigid
