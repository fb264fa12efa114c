#include "nilrigid/algebra.hpp"

namespace nilrigid {

Graded2Step::Graded2Step(std::size_t n, std::size_t m) : n_(n), m_(m), c_(m, QMat(n, n)) {}

Graded2Step Graded2Step::from_brackets(std::size_t n, std::size_t m, std::span<const Bracket> brackets) {
  Graded2Step a(n, m);
  for (const auto& b : brackets) {
    if (b.i >= n || b.j >= n) throw Error("bracket index out of range");
    if (b.z.size() != m) throw Error("bracket value has wrong length");
    if (b.i == b.j) {
      for (const auto& v : b.z)
        if (sgn(v) != 0) throw Error("bracket [e_i, e_i] must vanish");
      continue;
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (sgn(b.z[k]) == 0) continue;
      Rat v = b.i < b.j ? b.z[k] : Rat(-b.z[k]);
      std::size_t i = std::min(b.i, b.j), j = std::max(b.i, b.j);
      a.set(i, j, k, a.coef(i, j, k) + v);
    }
  }
  return a;
}

void Graded2Step::set(std::size_t i, std::size_t j, std::size_t k, const Rat& v) {
  if (i >= n_ || j >= n_ || k >= m_) throw Error("Graded2Step::set: index out of range");
  if (i == j) {
    if (sgn(v) != 0) throw Error("Graded2Step::set: diagonal must vanish");
    return;
  }
  c_[k](i, j) = v;
  c_[k](j, i) = -v;
}

QVec Graded2Step::bracket(std::span<const Rat> x, std::span<const Rat> y) const {
  if (x.size() != n_ || y.size() != n_) throw Error("bracket: vector length mismatch");
  QVec z(m_);
  for (std::size_t k = 0; k < m_; ++k) z[k] = bilinear(c_[k], x, y);
  return z;
}

std::vector<Graded2Step::Bracket> Graded2Step::brackets() const {
  std::vector<Bracket> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      QVec z(m_);
      bool nz = false;
      for (std::size_t k = 0; k < m_; ++k) {
        z[k] = c_[k](i, j);
        nz = nz || sgn(z[k]) != 0;
      }
      if (nz) out.push_back({i, j, std::move(z)});
    }
  return out;
}

QMat Graded2Step::ad(std::span<const Rat> x) const {
  if (x.size() != n_) throw Error("ad: vector length mismatch");
  QMat a(m_, n_);
  for (std::size_t k = 0; k < m_; ++k)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < n_; ++i)
        if (sgn(x[i]) != 0 && sgn(c_[k](i, j)) != 0) a(k, j) += c_[k](i, j) * x[i];
  return a;
}

CMat Graded2Step::ad(std::span<const GaussRat> x) const {
  if (x.size() != n_) throw Error("ad: vector length mismatch");
  CMat a(m_, n_);
  for (std::size_t k = 0; k < m_; ++k)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < n_; ++i)
        if (!x[i].is_zero() && sgn(c_[k](i, j)) != 0) a(k, j) += GaussRat(c_[k](i, j)) * x[i];
  return a;
}

Metric Metric::euclidean(std::size_t n, std::size_t m) {
  return {QMat::identity(n), QMat::identity(m)};
}

MTypeAlgebra::MTypeAlgebra(Graded2Step a, Metric g) : a_(std::move(a)), g_(std::move(g)) {
  if (g_.V.rows() != a_.n() || g_.V.cols() != a_.n()) throw Error("metric V has wrong shape");
  if (g_.Z.rows() != a_.m() || g_.Z.cols() != a_.m()) throw Error("metric Z has wrong shape");
  if (!is_symmetric(g_.V) || !is_symmetric(g_.Z)) throw Error("metric must be symmetric");
  if (!is_nonsingular(g_.V) || !is_nonsingular(g_.Z)) throw Error("metric must be non-degenerate");
}

MTypeAlgebra::MTypeAlgebra(Graded2Step a) : MTypeAlgebra(a, Metric::euclidean(a.n(), a.m())) {}

QMat JMaps::of(std::span<const Rat> z) const {
  if (z.size() != maps.size()) throw Error("J_z: vector length mismatch");
  QMat r(n(), n());
  for (std::size_t k = 0; k < maps.size(); ++k)
    if (sgn(z[k]) != 0) r += maps[k] * z[k];
  return r;
}

ValidationReport validate(const Graded2Step& a) {
  const std::size_t n = a.n(), m = a.m();
  ValidationReport rep;
  // Columns are the brackets [e_i, e_j], i < j.
  QMat span_m(m, n * (n - (n ? 1 : 0)) / 2);
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++col)
      for (std::size_t k = 0; k < m; ++k) span_m(k, col) = a.coef(i, j, k);
  rep.surjective_bracket = rank(span_m) == m;

  // x is central in n₋₁ iff Σ_i x_i c_{ij}^k = 0 for all j, k.
  QMat cm(m * n, n);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) cm(k * n + j, i) = a.coef(i, j, k);
  QMat ker = kernel(cm);
  for (std::size_t c = 0; c < ker.cols(); ++c) rep.central_in_minus1.push_back(ker.col(c));
  rep.fundamental = rep.surjective_bracket && rep.central_in_minus1.empty();
  return rep;
}

PolyMatrix ad_matrix_symbolic(const Graded2Step& a) {
  const std::size_t n = a.n(), m = a.m();
  PolyMatrix mat(m, std::vector<Poly>(n, Poly(n)));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      QVec coeffs(n);
      for (std::size_t i = 0; i < n; ++i) coeffs[i] = a.coef(i, j, k);
      mat[k][j] = Poly::linear(coeffs);
    }
  return mat;
}

JMaps j_maps(const MTypeAlgebra& alg) {
  const auto& a = alg.algebra();
  const auto& g = alg.metric();
  auto vinv = inverse(g.V);
  if (!vinv) throw Error("j_maps: singular metric on n₋₁");
  JMaps out;
  out.metric = g;
  for (std::size_t k = 0; k < a.m(); ++k) {
    // B(x, y) = ⟨f_k, [e_x, e_y]⟩ and G_V J = Bᵀ.
    QMat b(a.n(), a.n());
    for (std::size_t l = 0; l < a.m(); ++l)
      if (sgn(g.Z(k, l)) != 0) b += a.component(l) * g.Z(k, l);
    out.maps.push_back(*vinv * b.transpose());
  }
  return out;
}

bool verify_htype(const JMaps& j) {
  const std::size_t n = j.n();
  const QMat id = QMat::identity(n);
  for (std::size_t a = 0; a < j.m(); ++a)
    for (std::size_t b = a; b < j.m(); ++b) {
      QMat anti = j.maps[a] * j.maps[b] + j.maps[b] * j.maps[a];
      if (anti != id * Rat(-2 * j.metric.Z(a, b))) return false;
    }
  return true;
}

namespace {

bool is_rational_square(const Rat& q) {
  return sgn(q) >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

Rat rational_sqrt(const Rat& q) {
  Int num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_pm_one_diagonal(const QMat& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const Rat& v = g(i, j);
      if (i == j ? (v != 1 && v != -1) : sgn(v) != 0) return false;
    }
  return true;
}

}  // namespace

QMat orthonormal_basis(const QMat& g) {
  if (!is_symmetric(g)) throw Error("orthonormal_basis: form is not symmetric");
  const std::size_t m = g.rows();
  std::vector<QVec> pending;
  for (std::size_t i = 0; i < m; ++i) {
    QVec e(m);
    e[i] = 1;
    pending.push_back(std::move(e));
  }
  std::vector<QVec> chosen;
  while (!pending.empty()) {
    std::size_t pick = pending.size();
    for (std::size_t i = 0; i < pending.size(); ++i)
      if (sgn(bilinear(g, pending[i], pending[i])) != 0) {
        pick = i;
        break;
      }
    QVec v;
    if (pick < pending.size()) {
      v = pending[pick];
      Rat q = bilinear(g, v, v);
      Rat a = sgn(q) > 0 ? q : Rat(-q);
      if (!is_rational_square(a))
        throw Error("orthonormal_basis: normalizing needs the square root of " + to_string(a) +
                    "; supply a metric on n₋₂ that is diagonal with entries ±1");
      Rat s = rational_sqrt(a);
      for (auto& x : v) x /= s;
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
    } else {
      // All remaining vectors are null: combine a pairing u, w into
      // u + w/(2b), which has norm exactly 1.
      bool found = false;
      for (std::size_t i = 0; i < pending.size() && !found; ++i)
        for (std::size_t k = i + 1; k < pending.size() && !found; ++k) {
          Rat b = bilinear(g, pending[i], pending[k]);
          if (sgn(b) == 0) continue;
          v = pending[i];
          Rat t = 1 / (2 * b);
          for (std::size_t c = 0; c < m; ++c) v[c] += t * pending[k][c];
          pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
          found = true;
        }
      if (!found) throw Error("orthonormal_basis: form is degenerate");
    }
    Rat eps = bilinear(g, v, v);
    for (auto& w : pending) {
      Rat c = bilinear(g, w, v) * eps;
      if (sgn(c) == 0) continue;
      for (std::size_t i = 0; i < m; ++i) w[i] -= c * v[i];
    }
    chosen.push_back(std::move(v));
  }
  return from_columns(chosen, m);
}

std::optional<std::vector<int>> verify_jtype(const JMaps& j) {
  const std::size_t m = j.m();
  QMat basis = is_pm_one_diagonal(j.metric.Z) ? QMat::identity(m) : orthonormal_basis(j.metric.Z);
  const QMat id = QMat::identity(j.n());
  std::vector<int> signs;
  for (std::size_t k = 0; k < m; ++k) {
    QMat jk = j.of(basis.col(k));
    QMat sq = jk * jk;
    if (sq == id)
      signs.push_back(1);
    else if (sq == -id)
      signs.push_back(-1);
    else
      return std::nullopt;
  }
  return signs;
}

namespace {

// σ with ab = σ ba, or 0 when neither sign works.
int commutation_sign(const QMat& a, const QMat& b) {
  QMat ab = a * b, ba = b * a;
  if (ab == ba) return 1;
  if (ab == -ba) return -1;
  return 0;
}

}  // namespace

bool check_condition_C(const JMaps& j, const ConditionCCertificate& cert) {
  const auto& idx = cert.indices;
  for (auto i : idx)
    if (i >= j.m()) return false;
  if (idx[0] == idx[1] || idx[0] == idx[2] || idx[1] == idx[2]) return false;
  for (auto i : idx)
    if (!is_nonsingular(j.maps[i])) return false;
  int s12 = commutation_sign(j.maps[idx[0]], j.maps[idx[1]]);
  int s13 = commutation_sign(j.maps[idx[0]], j.maps[idx[2]]);
  int s23 = commutation_sign(j.maps[idx[1]], j.maps[idx[2]]);
  if (s12 != cert.sigma[0] || s13 != cert.sigma[1] || s23 != cert.sigma[2]) return false;
  return s12 * s13 * s23 == -1;
}

std::optional<ConditionCCertificate> condition_C(const JMaps& j,
                                                 std::span<const std::array<std::size_t, 3>> triples) {
  const std::size_t m = j.m();
  if (m < 3) throw Error("condition_C: needs dim n₋₂ >= 3");
  std::vector<std::array<std::size_t, 3>> all;
  if (triples.empty()) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        for (std::size_t c = b + 1; c < m; ++c) all.push_back({a, b, c});
    triples = all;
  }
  std::vector<int> nondeg(m, -1);
  auto nd = [&](std::size_t i) {
    if (nondeg[i] < 0) nondeg[i] = is_nonsingular(j.maps[i]) ? 1 : 0;
    return nondeg[i] == 1;
  };
  for (const auto& t : triples) {
    if (!nd(t[0]) || !nd(t[1]) || !nd(t[2])) continue;
    ConditionCCertificate cert{t, {commutation_sign(j.maps[t[0]], j.maps[t[1]]),
                                   commutation_sign(j.maps[t[0]], j.maps[t[2]]),
                                   commutation_sign(j.maps[t[1]], j.maps[t[2]])}};
    if (cert.sigma[0] * cert.sigma[1] * cert.sigma[2] == -1) return cert;
  }
  return std::nullopt;
}

MetivierReport metivier_probe(const JMaps& j, std::span<const QVec> probes) {
  MetivierReport rep;
  for (const auto& z : probes) {
    bool zero = true;
    for (const auto& v : z) zero = zero && sgn(v) == 0;
    if (zero) throw Error("metivier_probe: zero probe vector");
    if (!is_nonsingular(j.of(z))) {
      rep.all_nondegenerate_on_probes = false;
      rep.degenerate_witness = z;
      break;
    }
  }
  return rep;
}

Graded2Step free_two_step(std::size_t n) {
  if (n < 2) throw Error("free_two_step: n must be at least 2");
  Graded2Step a(n, n * (n - 1) / 2);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a.set(i, j, k++, Rat(1));
  return a;
}

}  // namespace nilrigid
