#include "nilrigid/jsquared.hpp"

#include <numeric>

#include "nilrigid/linalg.hpp"

namespace nilrigid {

namespace {

using PolyVec = std::vector<Poly>;

// Entry c is the linear form (m x)_c.
PolyVec apply_linear(const QMat& m) {
  PolyVec out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(Poly::linear(m.row(r)));
  return out;
}

Poly form(const QMat& g, const PolyVec& u, const PolyVec& w, std::size_t nvars) {
  Poly s(nvars);
  for (std::size_t a = 0; a < g.rows(); ++a)
    for (std::size_t b = 0; b < g.cols(); ++b) {
      if (sgn(g(a, b)) == 0 || u[a].is_zero() || w[b].is_zero()) continue;
      s += (u[a] * w[b]) * g(a, b);
    }
  return s;
}

struct Frame {
  QMat basis;              // columns z_k in f coordinates
  std::vector<Rat> eps;    // ⟨z_k, z_k⟩ = ±1
  std::vector<QMat> maps;  // J_{z_k}
};

Frame orthonormal_frame(const JMaps& j) {
  Frame f;
  f.basis = orthonormal_basis(j.metric.Z);
  for (std::size_t k = 0; k < j.m(); ++k) {
    QVec z = f.basis.col(k);
    Rat e = bilinear(j.metric.Z, z, z);
    if (e != 1 && e != -1) throw Error("j2: could not build a ±1-orthonormal basis of n₋₂");
    f.eps.push_back(e);
    f.maps.push_back(j.of(z));
  }
  return f;
}

QVec residual_at(const Frame& f, const QMat& gv, const QVec& x, std::size_t i, std::size_t l) {
  QVec w = f.maps[i].apply(f.maps[l].apply(x));
  Rat q = bilinear(gv, x, x);
  QVec r(x.size());
  for (std::size_t c = 0; c < x.size(); ++c) r[c] = q * w[c];
  for (std::size_t k = 0; k < f.maps.size(); ++k) {
    QVec jk = f.maps[k].apply(x);
    Rat coef = f.eps[k] * bilinear(gv, jk, w);
    if (sgn(coef) == 0) continue;
    for (std::size_t c = 0; c < x.size(); ++c) r[c] -= coef * jk[c];
  }
  return r;
}

bool all_zero(const QVec& v) {
  for (const auto& c : v)
    if (sgn(c) != 0) return false;
  return true;
}

// Lattice points of {−2..2}ⁿ by support size, then support set in
// lexicographic order, then values cycling 1, −1, 2, −2 with the last
// coordinate fastest. The visitor returns true to stop.
template <class Visit>
bool visit_lattice(std::size_t n, std::size_t max_support, std::size_t max_points, Visit&& visit) {
  static const int values[] = {1, -1, 2, -2};
  std::size_t visited = 0;
  for (std::size_t s = 1; s <= std::min(n, max_support); ++s) {
    std::vector<std::size_t> supp(s);
    std::iota(supp.begin(), supp.end(), 0);
    for (;;) {
      std::vector<int> idx(s, 0);
      for (;;) {
        QVec x(n);
        for (std::size_t t = 0; t < s; ++t) x[supp[t]] = values[idx[t]];
        if (visit(x)) return true;
        if (++visited >= max_points) throw ResourceExhausted("lattice search budget exhausted");
        std::size_t t = s;
        while (t > 0 && idx[t - 1] == 3) idx[--t] = 0;
        if (t == 0) break;
        ++idx[t - 1];
      }
      std::size_t t = s;
      while (t > 0 && supp[t - 1] == n - s + t - 1) --t;
      if (t == 0) break;
      ++supp[t - 1];
      for (std::size_t u = t; u < s; ++u) supp[u] = supp[u - 1] + 1;
    }
  }
  return false;
}

constexpr std::size_t kLatticeBudget = 5'000'000;

J2Witness make_witness(const JMaps& j, const QVec& x, const QVec& z, const QVec& zp) {
  J2Witness w{x, z, zp, bilinear(j.metric.V, x, x), 0, 0};
  std::vector<QVec> cols;
  for (const auto& m : j.maps) cols.push_back(m.apply(x));
  w.span_rank = rank(from_columns(cols, x.size()));
  cols.push_back(j.of(z).apply(j.of(zp).apply(x)));
  w.augmented_rank = rank(from_columns(cols, x.size()));
  return w;
}

QVec unit(std::size_t m, std::size_t i) {
  QVec e(m);
  e[i] = 1;
  return e;
}

}  // namespace

J2Verdict j2_standard(const MTypeAlgebra& a) {
  JMaps j = j_maps(a);
  if (!verify_htype(j)) throw Error("j2_standard: the algebra is not pseudo H-type; use the general probe");
  const std::size_t n = j.n(), m = j.m();
  const QMat& gv = j.metric.V;
  J2Verdict v;
  v.mode = J2Mode::Standard;
  if (m == 0) {
    v.holds = true;
    return v;
  }
  Frame f = orthonormal_frame(j);
  v.basis = f.basis;

  std::vector<PolyVec> jx;
  for (const auto& mk : f.maps) jx.push_back(apply_linear(mk));
  PolyVec id = apply_linear(QMat::identity(n));
  Poly q = form(gv, id, id, n);

  std::vector<std::array<std::size_t, 2>> failing;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = i + 1; l < m; ++l) {
      PolyVec w = apply_linear(f.maps[i] * f.maps[l]);
      PolyVec r;
      for (const auto& wc : w) r.push_back(q * wc);
      for (std::size_t k = 0; k < m; ++k) {
        Poly coef = form(gv, jx[k], w, n) * f.eps[k];
        if (coef.is_zero()) continue;
        for (std::size_t c = 0; c < n; ++c)
          if (!jx[k][c].is_zero()) r[c] -= coef * jx[k][c];
      }
      bool zero = true;
      for (const auto& p : r) zero = zero && p.is_zero();
      if (zero)
        v.zero_residual_pairs.push_back({i, l});
      else
        failing.push_back({i, l});
    }
  v.holds = failing.empty();
  if (v.holds) return v;

  visit_lattice(n, n, kLatticeBudget, [&](const QVec& x) {
    if (sgn(bilinear(gv, x, x)) == 0) return false;
    for (const auto& p : failing) {
      if (all_zero(residual_at(f, gv, x, p[0], p[1]))) continue;
      v.witness = make_witness(j, x, f.basis.col(p[0]), f.basis.col(p[1]));
      return true;
    }
    return false;
  });
  if (!v.witness) throw ResourceExhausted("j2_standard: no witness found on the probe lattice");
  return v;
}

bool j2_pointwise(const JMaps& j, std::span<const Rat> x, std::span<const Rat> z, std::span<const Rat> z_prime) {
  if (sgn(bilinear(j.metric.Z, z, z_prime)) != 0) throw Error("j2_pointwise: z and z' are not orthogonal");
  QVec xv(x.begin(), x.end());
  std::vector<QVec> cols;
  for (const auto& m : j.maps) cols.push_back(m.apply(xv));
  std::size_t r0 = rank(from_columns(cols, xv.size()));
  cols.push_back(j.of(z).apply(j.of(z_prime).apply(xv)));
  return rank(from_columns(cols, xv.size())) == r0;
}

bool j2_pointwise(const JMaps& j, std::span<const Rat> x, std::size_t i, std::size_t l) {
  if (i == l || i >= j.m() || l >= j.m()) throw Error("j2_pointwise: need two distinct basis indices");
  return j2_pointwise(j, x, unit(j.m(), i), unit(j.m(), l));
}

J2Verdict j2_general_probe(const JMaps& j, const std::optional<std::vector<QVec>>& probes) {
  const std::size_t n = j.n(), m = j.m();
  std::vector<QVec> xs;
  if (probes) {
    xs = *probes;
  } else {
    for (std::size_t a = 0; a < n; ++a) xs.push_back(unit(n, a));
    for (int s : {1, -1})
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
          QVec x = unit(n, a);
          x[b] = s;
          xs.push_back(std::move(x));
        }
  }
  J2Verdict v;
  v.mode = J2Mode::GeneralProbe;
  v.holds = true;
  for (const auto& x : xs) {
    if (x.size() != n) throw Error("j2_general_probe: probe has wrong length");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t l = i + 1; l < m; ++l) {
        if (sgn(j.metric.Z(i, l)) != 0) continue;
        if (!j2_pointwise(j, x, i, l)) {
          v.holds = false;
          v.witness = make_witness(j, x, unit(m, i), unit(m, l));
          return v;
        }
      }
  }
  return v;
}

bool check_j2_witness(const JMaps& j, const J2Witness& w, bool require_non_null) {
  if (w.x.size() != j.n() || w.z.size() != j.m() || w.z_prime.size() != j.m()) return false;
  if (sgn(bilinear(j.metric.Z, w.z, w.z_prime)) != 0) return false;
  if (all_zero(w.z) || all_zero(w.z_prime) || proportional(w.z, w.z_prime)) return false;
  Rat q = bilinear(j.metric.V, w.x, w.x);
  if (q != w.norm || (require_non_null && sgn(q) == 0)) return false;
  J2Witness again = make_witness(j, w.x, w.z, w.z_prime);
  return again.span_rank == w.span_rank && again.augmented_rank == w.augmented_rank &&
         w.augmented_rank > w.span_rank;
}

std::optional<ForallWitness> forall_witness_search(const MTypeAlgebra& a) {
  JMaps j = j_maps(a);
  if (!verify_htype(j)) throw Error("forall_witness_search: the algebra is not pseudo H-type");
  const std::size_t n = j.n(), m = j.m();
  if (m < 2) return std::nullopt;
  Frame f = orthonormal_frame(j);
  std::optional<ForallWitness> out;
  visit_lattice(n, 3, kLatticeBudget, [&](const QVec& x) {
    if (sgn(bilinear(j.metric.V, x, x)) == 0) return false;
    std::vector<QVec> jx;
    for (const auto& mk : f.maps) jx.push_back(mk.apply(x));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t l = i + 1; l < m; ++l) {
        QVec w = f.maps[i].apply(jx[l]);
        bool orth = true;
        for (std::size_t k = 0; k < m && orth; ++k) orth = sgn(bilinear(j.metric.V, jx[k], w)) == 0;
        if (orth) {
          out = ForallWitness{x, f.basis.col(i), f.basis.col(l)};
          return true;
        }
      }
    return false;
  });
  return out;
}

bool check_forall_witness(const JMaps& j, const ForallWitness& w) {
  if (w.x.size() != j.n() || w.z.size() != j.m() || w.z_prime.size() != j.m()) return false;
  if (sgn(bilinear(j.metric.V, w.x, w.x)) == 0) return false;
  if (sgn(bilinear(j.metric.Z, w.z, w.z_prime)) != 0 || all_zero(w.z) || all_zero(w.z_prime)) return false;
  QVec v = j.of(w.z).apply(j.of(w.z_prime).apply(w.x));
  if (all_zero(v)) return false;
  for (const auto& mk : j.maps)
    if (sgn(bilinear(j.metric.V, mk.apply(w.x), v)) != 0) return false;
  return true;
}

std::optional<DoubledWitness> doubled_34_witness(const HTypeAlgebra& h) {
  const auto& alg = h.algebra;
  const std::size_t n = alg.algebra().n();
  if (alg.algebra().m() != 7 || h.gens.size() != 7 || n % 2 != 0)
    throw Error("doubled_34_witness: expects n^{3,4} on two copies of one module");
  const std::size_t half = n / 2;
  const QMat& gv = alg.metric().V;
  auto block = [&](const QMat& mat, std::size_t off) {
    QMat b(half, half);
    for (std::size_t r = 0; r < half; ++r)
      for (std::size_t c = 0; c < half; ++c) b(r, c) = mat(off + r, off + c);
    return b;
  };
  std::vector<QVec> ws;
  for (std::size_t off : {std::size_t{0}, half}) {
    CliffordRep rep;
    rep.r = 3;
    rep.s = 4;
    rep.dim = half;
    for (const auto& g : h.gens) rep.gens.push_back(block(g, off));
    rep.G = block(gv, off);
    auto quads = default_quadruples(3, 4);
    InvolutionSet inv = involution_set(rep, quads);
    if (inv.eigenbasis.empty() || inv.eigenbasis[0].size() != 1) return std::nullopt;
    QVec w(n);
    for (std::size_t c = 0; c < half; ++c) w[off + c] = inv.eigenbasis[0][0][c];
    ws.push_back(std::move(w));
  }
  JMaps j = j_maps(alg);
  Rat n1 = bilinear(gv, ws[0], ws[0]), n2 = bilinear(gv, ws[1], ws[1]);
  if (sgn(n1) == 0 || sgn(n2) == 0) return std::nullopt;
  std::vector<std::size_t> ks = sgn(n1) == sgn(n2) ? std::vector<std::size_t>{1, 2} : std::vector<std::size_t>{5, 6, 7};
  for (std::size_t k : ks) {
    QVec jw = h.gens[k - 1].apply(ws[1]);
    QVec x(n);
    for (std::size_t c = 0; c < n; ++c) x[c] = ws[0][c] + jw[c];
    if (sgn(bilinear(gv, x, x)) == 0) continue;
    J2Witness w = make_witness(j, x, unit(7, 2), unit(7, 3));
    if (check_j2_witness(j, w, true)) return DoubledWitness{std::move(w), k};
  }
  return std::nullopt;
}

}  // namespace nilrigid
