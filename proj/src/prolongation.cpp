#include "nilrigid/prolongation.hpp"

namespace nilrigid {

namespace {

// Read access to the graded pieces computed so far. Level -1 is n₋₁ with
// the e basis, level -2 is n₋₂ with the f basis; lower levels are zero.
class Tower {
 public:
  Tower(const Graded2Step& a, const std::vector<std::vector<LevelElement>>& bases)
      : a_(a), bases_(bases) {}

  std::size_t dim(long p) const {
    if (p == -2) return a_.m();
    if (p == -1) return a_.n();
    if (p < -2) return 0;
    auto idx = static_cast<std::size_t>(p);
    return idx < bases_.size() ? bases_[idx].size() : 0;
  }

  // [w, e_j] for the w-th basis element of level p, in level p-1.
  QVec on_e(long p, std::size_t w, std::size_t j) const {
    if (p >= 0) return bases_[static_cast<std::size_t>(p)][w].A.col(j);
    if (p == -1) {
      QVec z(a_.m());
      for (std::size_t k = 0; k < a_.m(); ++k) z[k] = a_.coef(w, j, k);
      return z;
    }
    return {};
  }

  // [w, f_l] for the w-th basis element of level p, in level p-2.
  QVec on_f(long p, std::size_t w, std::size_t l) const {
    if (p >= 0) return bases_[static_cast<std::size_t>(p)][w].B.col(l);
    return {};
  }

 private:
  const Graded2Step& a_;
  const std::vector<std::vector<LevelElement>>& bases_;
};

void add_into(QMat& mat, std::size_t row0, std::size_t col, const QVec& v, int sign) {
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (sgn(v[r]) == 0) continue;
    if (sign > 0)
      mat(row0 + r, col) += v[r];
    else
      mat(row0 + r, col) -= v[r];
  }
}

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  // i < j, lexicographic
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// Kernel of the derivation constraints for level k. Unknowns: A (d1 x n)
// column-major then B (d2 x m) column-major, d1 = dim g_{k-1}, d2 = dim g_{k-2}.
// Constraints, for u = (A, B):
//   u[e_i, e_j] = [u e_i, e_j] - [u e_j, e_i]   in g_{k-2}
//   [u e_i, f_l] = [u f_l, e_i]                  in g_{k-3}
//   [u f_l, f_l'] = [u f_l', f_l]                in g_{k-4}
QMat level_kernel(const Graded2Step& a, const std::vector<std::vector<LevelElement>>& bases, long k) {
  Tower t(a, bases);
  const std::size_t n = a.n(), m = a.m();
  const std::size_t d1 = t.dim(k - 1), d2 = t.dim(k - 2), d3 = t.dim(k - 3), d4 = t.dim(k - 4);
  const std::size_t npairs = n * (n - 1) / 2, mpairs = m * (m - 1) / 2;
  const std::size_t rows_a = npairs * d2, rows_b = n * m * d3, rows_c = mpairs * d4;
  const std::size_t ncols = d1 * n + d2 * m;
  QMat mat(rows_a + rows_b + rows_c, ncols);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t w = 0; w < d1; ++w) {
      const std::size_t col = i * d1 + w;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        QVec v = t.on_e(k - 1, w, j);
        if (i < j)
          add_into(mat, pair_index(i, j, n) * d2, col, v, -1);
        else
          add_into(mat, pair_index(j, i, n) * d2, col, v, +1);
      }
      for (std::size_t l = 0; l < m && d3; ++l)
        add_into(mat, rows_a + (i * m + l) * d3, col, t.on_f(k - 1, w, l), +1);
    }

  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t w = 0; w < d2; ++w) {
      const std::size_t col = d1 * n + l * d2 + w;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          const Rat& c = a.coef(i, j, l);
          if (sgn(c) != 0) mat(pair_index(i, j, n) * d2 + w, col) += c;
        }
      for (std::size_t i = 0; i < n && d3; ++i)
        add_into(mat, rows_a + (i * m + l) * d3, col, t.on_e(k - 2, w, i), -1);
      for (std::size_t l2 = 0; l2 < m && d4; ++l2) {
        if (l2 == l) continue;
        QVec v = t.on_f(k - 2, w, l2);
        if (l < l2)
          add_into(mat, rows_a + rows_b + pair_index(l, l2, m) * d4, col, v, +1);
        else
          add_into(mat, rows_a + rows_b + pair_index(l2, l, m) * d4, col, v, -1);
      }
    }
  return kernel(mat);
}

std::vector<LevelElement> unpack(const QMat& ker, std::size_t n, std::size_t m, std::size_t d1, std::size_t d2) {
  std::vector<LevelElement> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    LevelElement e{QMat(d1, n), QMat(d2, m)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t w = 0; w < d1; ++w) e.A(w, i) = ker(i * d1 + w, c);
    for (std::size_t l = 0; l < m; ++l)
      for (std::size_t w = 0; w < d2; ++w) e.B(w, l) = ker(d1 * n + l * d2 + w, c);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

ProlongationResult prolong(const Graded2Step& a, std::size_t max_level, std::size_t max_unknowns) {
  if (!validate(a).fundamental) throw Error("prolong: the algebra is not fundamental");
  ProlongationResult r;
  r.total_dim = a.n() + a.m();
  for (std::size_t k = 0; k <= max_level; ++k) {
    const auto lk = static_cast<long>(k);
    Tower t(a, r.bases);
    const std::size_t d1 = t.dim(lk - 1), d2 = t.dim(lk - 2);
    if (d1 * a.n() + d2 * a.m() > max_unknowns) {
      r.budget_exhausted = true;
      break;
    }
    QMat ker = level_kernel(a, r.bases, lk);
    r.level_dims.push_back(ker.cols());
    r.total_dim += ker.cols();
    if (ker.cols() == 0) {
      r.terminated = true;
      break;
    }
    r.bases.push_back(unpack(ker, a.n(), a.m(), d1, d2));
  }
  return r;
}

std::size_t recompute_level_dim(const Graded2Step& a, const ProlongationResult& r, std::size_t k) {
  if (k > r.bases.size()) throw Error("recompute_level_dim: lower levels are missing");
  std::vector<std::vector<LevelElement>> lower(r.bases.begin(), r.bases.begin() + static_cast<std::ptrdiff_t>(k));
  return level_kernel(a, lower, static_cast<long>(k)).cols();
}

bool contains_grading_element(const Graded2Step& a, const ProlongationResult& r) {
  if (r.bases.empty()) return false;
  const std::size_t n = a.n(), m = a.m();
  SpanBuilder span(n * n + m * m);
  auto pack = [&](const QMat& A, const QMat& B) {
    QVec v = flatten(A);
    QVec b = flatten(B);
    v.insert(v.end(), b.begin(), b.end());
    return v;
  };
  for (const auto& e : r.bases[0]) span.add(pack(e.A, e.B));
  return span.contains(pack(QMat::identity(n), QMat::identity(m) * Rat(2)));
}

}  // namespace nilrigid
