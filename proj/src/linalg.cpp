#include "nilrigid/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>

namespace nilrigid {

CMat to_complex(const QMat& m) {
  CMat c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = GaussRat(m(i, j));
  return c;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw Error("dot: length mismatch");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Rat bilinear(const QMat& g, std::span<const Rat> x, std::span<const Rat> y) {
  auto gy = g.apply(y);
  return dot(x, gy);
}

std::string to_string(const QMat& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += to_string(m(i, j));
    }
    s += "]";
  }
  return s + "]";
}

namespace {

// Matrices at least this large go through the modular kernel first.
constexpr std::size_t kModularKernelThreshold = 4096;

// Integer matrix with rows scaled to clear denominators.
struct IntMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> a;
  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

IntMat clear_denominators(const QMat& m, std::vector<Int>* scales = nullptr) {
  IntMat out{m.rows(), m.cols(), std::vector<Int>(m.rows() * m.cols())};
  if (scales) scales->assign(m.rows(), Int(1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Int& d = m(i, j).get_den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& q = m(i, j);
      if (sgn(q) == 0) continue;
      out.at(i, j) = q.get_num() * (l / q.get_den());
    }
    if (scales) (*scales)[i] = l;
  }
  return out;
}

struct Forward {
  std::vector<std::size_t> pivots;
  Int last_pivot = 1;
  int swaps = 0;
};

// Bareiss fraction-free forward elimination in place. Rows [0, rank) end up
// in echelon form; entries below the pivots are zeroed.
Forward bareiss_forward(IntMat& m) {
  Forward f;
  Int prev = 1;
  std::size_t r = 0;
  Int t;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
      ++f.swaps;
    }
    const Int piv = m.at(r, c);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      const Int lead = m.at(i, c);
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        Int& x = m.at(i, j);
        t = piv * x;
        if (lead != 0 && m.at(r, j) != 0) t -= lead * m.at(r, j);
        if (prev != 1) mpz_divexact(x.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        else x = t;
      }
      m.at(i, c) = 0;
    }
    prev = piv;
    f.pivots.push_back(c);
    ++r;
  }
  f.last_pivot = prev;
  return f;
}

template <class T>
std::size_t field_rank(Mat<T> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      T f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

// Kernel through modular reduced echelon forms. The kernel basis mod p is
// lifted by CRT and rational reconstruction and then checked exactly; since
// rank mod p never exceeds the rational rank, a verified basis of size
// cols - rank_p is the whole kernel. Returns nullopt when the lift does not
// stabilize within the prime budget.
using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct ModEchelon {
  std::vector<std::size_t> pivots;
  std::vector<u64> red;  // rank x cols, row-major
};

static_assert(sizeof(unsigned long) == 8, "mpz_get_ui must cover 64 bits");

Int from_u64(u64 v) {
  Int z;
  mpz_set_ui(z.get_mpz_t(), v);
  return z;
}

u64 mod_pow(u64 b, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = static_cast<u64>(static_cast<u128>(r) * b % p);
    b = static_cast<u64>(static_cast<u128>(b) * b % p);
    e >>= 1;
  }
  return r;
}

ModEchelon mod_rref(const IntMat& im, u64 p) {
  const std::size_t rows = im.rows, cols = im.cols;
  Int pz = from_u64(p);
  std::vector<u64> a(rows * cols);
  Int t;
  for (std::size_t i = 0; i < rows * cols; ++i) {
    if (im.a[i] == 0) continue;
    mpz_fdiv_r(t.get_mpz_t(), im.a[i].get_mpz_t(), pz.get_mpz_t());
    a[i] = mpz_get_ui(t.get_mpz_t());
  }
  ModEchelon e;
  std::vector<std::size_t> nz;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    u64* pr = &a[r * cols];
    const u64 inv = mod_pow(pr[c], p - 2, p);
    nz.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (pr[j]) {
        pr[j] = static_cast<u64>(static_cast<u128>(pr[j]) * inv % p);
        nz.push_back(j);
      }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      u64* row = &a[i * cols];
      const u64 f = row[c];
      if (f == 0) continue;
      for (auto j : nz) {
        const u64 sub = static_cast<u64>(static_cast<u128>(f) * pr[j] % p);
        row[j] = row[j] >= sub ? row[j] - sub : row[j] + p - sub;
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.red.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(r * cols));
  return e;
}

// a/b with |a|, b <= sqrt(N/2) and a/b = x mod N, when it exists.
std::optional<Rat> rational_reconstruct(const Int& x, const Int& n) {
  Int bound;
  mpz_fdiv_q_2exp(bound.get_mpz_t(), n.get_mpz_t(), 1);
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
  Int r0 = n, r1 = x, s0 = 0, s1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  Int g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rat out(r1, s1);
  out.canonicalize();
  return out;
}

std::optional<QMat> modular_kernel(const QMat& m) {
  IntMat im = clear_denominators(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  // Sparse copy of the integer rows for the exact check.
  std::vector<std::vector<std::pair<std::size_t, Int>>> sparse(rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (im.at(i, j) != 0) sparse[i].emplace_back(j, im.at(i, j));

  constexpr int kMaxPrimes = 12;
  std::vector<std::size_t> pivots;
  std::vector<Int> residues;  // rank x cols, CRT-combined
  Int modulus = 0;
  Int next;
  mpz_ui_pow_ui(next.get_mpz_t(), 2, 62);
  for (int attempt = 0; attempt < kMaxPrimes; ++attempt) {
    mpz_sub_ui(next.get_mpz_t(), next.get_mpz_t(), 1000003);
    Int pz;
    mpz_nextprime(pz.get_mpz_t(), next.get_mpz_t());
    const u64 p = mpz_get_ui(pz.get_mpz_t());
    ModEchelon e = mod_rref(im, p);
    if (modulus == 0 || e.pivots.size() > pivots.size() ||
        (e.pivots.size() == pivots.size() && e.pivots != pivots)) {
      // First prime, or the earlier ones were unlucky.
      pivots = e.pivots;
      residues.assign(e.red.size(), Int(0));
      for (std::size_t i = 0; i < e.red.size(); ++i) residues[i] = from_u64(e.red[i]);
      modulus = pz;
    } else if (e.pivots.size() < pivots.size()) {
      continue;  // this prime is unlucky
    } else {
      // CRT: x = r + M * ((v - r) * M^{-1} mod p).
      Int minv, diff;
      mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
      for (std::size_t i = 0; i < e.red.size(); ++i) {
        diff = from_u64(e.red[i]) - residues[i];
        diff *= minv;
        mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), pz.get_mpz_t());
        residues[i] += modulus * diff;
      }
      modulus *= pz;
    }

    const std::size_t rk = pivots.size();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < cols; ++j)
      if (!is_pivot[j]) free.push_back(j);
    QMat k(cols, free.size());
    bool ok = true;
    for (std::size_t f = 0; f < free.size() && ok; ++f) {
      k(free[f], f) = 1;
      for (std::size_t i = 0; i < rk && ok; ++i) {
        const Int& x = residues[i * cols + free[f]];
        if (x == 0) continue;
        auto q = rational_reconstruct(x, modulus);
        if (!q) ok = false;
        else k(pivots[i], f) = -*q;
      }
    }
    if (!ok) continue;
    // Exact check, one column at a time over a common denominator.
    for (std::size_t f = 0; f < free.size() && ok; ++f) {
      Int den = 1;
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(k(j, f)) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), k(j, f).get_den_mpz_t());
      std::vector<Int> v(cols);
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(k(j, f)) != 0) v[j] = k(j, f).get_num() * (den / k(j, f).get_den());
      Int acc;
      for (std::size_t i = 0; i < rows && ok; ++i) {
        acc = 0;
        for (const auto& [j, c] : sparse[i])
          if (v[j] != 0) acc += c * v[j];
        ok = acc == 0;
      }
    }
    if (ok) return k;
  }
  return std::nullopt;
}

}  // namespace

std::size_t rank(const QMat& m) {
  IntMat im = clear_denominators(m);
  return bareiss_forward(im).pivots.size();
}

std::size_t rank(const CMat& m) { return field_rank(m); }

Rref rref(const QMat& m) {
  IntMat im = clear_denominators(m);
  Forward f = bareiss_forward(im);
  const std::size_t r = f.pivots.size();
  QMat red(r, m.cols());
  for (std::size_t i = 0; i < r; ++i) {
    const Int& piv = im.at(i, f.pivots[i]);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (im.at(i, j) != 0) {
        red(i, j) = Rat(im.at(i, j), piv);
        red(i, j).canonicalize();
      }
    }
  }
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = f.pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      Rat factor = red(k, pc);
      if (sgn(factor) == 0) continue;
      for (std::size_t j = pc; j < m.cols(); ++j) {
        if (sgn(red(i, j)) != 0) red(k, j) -= factor * red(i, j);
      }
    }
  }
  return {std::move(red), std::move(f.pivots)};
}

QMat kernel(const QMat& m) {
  if (m.rows() * m.cols() >= kModularKernelThreshold) {
    if (auto k = modular_kernel(m)) return *k;
  }
  Rref e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  QMat k(m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) k(e.pivots[i], f) = -e.reduced(i, free[f]);
  }
  return k;
}

std::optional<QVec> solve(const QMat& a, std::span<const Rat> b) {
  if (b.size() != a.rows()) throw Error("solve: right-hand side length mismatch");
  QMat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Rref e = rref(aug);
  QVec x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, a.cols());
  }
  return x;
}

Rat det(const QMat& m) {
  if (!m.is_square()) throw Error("det: matrix not square");
  if (m.rows() == 0) return Rat(1);
  std::vector<Int> scales;
  IntMat im = clear_denominators(m, &scales);
  Forward f = bareiss_forward(im);
  if (f.pivots.size() < m.rows()) return Rat(0);
  Int denom = 1;
  for (const auto& s : scales) denom *= s;
  Rat d(f.last_pivot, denom);
  d.canonicalize();
  return (f.swaps % 2) ? Rat(-d) : d;
}

std::optional<QMat> inverse(const QMat& m) {
  if (!m.is_square()) throw Error("inverse: matrix not square");
  const std::size_t n = m.rows();
  QMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Rref e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  QMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<std::size_t> rank_mod_p(const QMat& m) {
  using u64 = std::uint64_t;
  using u128 = unsigned __int128;
  constexpr u64 p = (u64{1} << 61) - 1;
  auto mulmod = [](u64 a, u64 b) {
    u128 r = static_cast<u128>(a) * b;
    u64 lo = static_cast<u64>(r & p) + static_cast<u64>(r >> 61);
    return lo >= p ? lo - p : lo;
  };
  auto powmod = [&](u64 b, u64 e) {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  Int pz;
  mpz_set_ui(pz.get_mpz_t(), 0);
  mpz_setbit(pz.get_mpz_t(), 61);
  pz -= 1;
  auto reduce = [&](const Int& z) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
    return static_cast<u64>(r.get_ui());
  };
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<u64> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const Rat& q = m(i, j);
      if (sgn(q) == 0) continue;
      u64 d = reduce(q.get_den());
      if (d == 0) return std::nullopt;
      a[i * cols + j] = mulmod(reduce(q.get_num()), powmod(d, p - 2));
    }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    u64 inv = powmod(a[r * cols + c], p - 2);
    for (std::size_t i = r + 1; i < rows; ++i) {
      u64 f = a[i * cols + c];
      if (f == 0) continue;
      f = mulmod(f, inv);
      for (std::size_t j = c; j < cols; ++j) {
        u64 sub = mulmod(f, a[r * cols + j]);
        u64& x = a[i * cols + j];
        x = x >= sub ? x - sub : x + p - sub;
      }
    }
    ++r;
  }
  return r;
}

bool is_nonsingular(const QMat& m) {
  if (!m.is_square()) return false;
  if (auto r = rank_mod_p(m); r && *r == m.rows()) return true;
  return rank(m) == m.rows();
}

bool is_symmetric(const QMat& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

namespace {

// Inertia of one connected block (integer symmetric matrix, k x k).
Inertia block_inertia(std::vector<std::vector<Int>> a) {
  const std::size_t k = a.size();
  Inertia out;
  std::vector<bool> active(k, true);
  std::size_t remaining = k;
  Int prev = 1;
  int prev_sign = 1;
  Int t;
  while (remaining > 0) {
    std::size_t piv = k;
    for (std::size_t i = 0; i < k && piv == k; ++i)
      if (active[i] && a[i][i] != 0) piv = i;
    if (piv == k) {
      std::size_t pi = k, pj = k;
      for (std::size_t i = 0; i < k && pi == k; ++i) {
        if (!active[i]) continue;
        for (std::size_t j = i + 1; j < k; ++j)
          if (active[j] && a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      }
      if (pi == k) break;
      // congruence e_i <- e_i + e_j on the active block
      for (std::size_t c = 0; c < k; ++c)
        if (active[c]) a[pi][c] += a[pj][c];
      for (std::size_t r = 0; r < k; ++r)
        if (active[r]) a[r][pi] += a[r][pj];
      piv = pi;
    }
    const Int p = a[piv][piv];
    const int ps = sgn(p);
    (ps * prev_sign > 0 ? out.pos : out.neg) += 1;
    active[piv] = false;
    --remaining;
    for (std::size_t r = 0; r < k; ++r) {
      if (!active[r]) continue;
      for (std::size_t c = 0; c < k; ++c) {
        if (!active[c]) continue;
        t = p * a[r][c];
        if (a[r][piv] != 0 && a[piv][c] != 0) t -= a[r][piv] * a[piv][c];
        if (prev != 1) mpz_divexact(a[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        else a[r][c] = t;
      }
    }
    prev = p;
    prev_sign = ps;
  }
  out.null += remaining;
  return out;
}

}  // namespace

Inertia signature(const QMat& g) {
  if (!is_symmetric(g)) throw Error("signature: matrix is not symmetric");
  const std::size_t n = g.rows();
  Int l = 1;
  for (const auto& q : g.data())
    if (q.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  // Split into connected components of the nonzero pattern; inertia is
  // additive over the resulting block-diagonal congruence.
  std::vector<int> comp(n, -1);
  Inertia total;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<std::size_t> members;
    std::queue<std::size_t> q;
    q.push(s);
    comp[s] = static_cast<int>(s);
    while (!q.empty()) {
      auto i = q.front();
      q.pop();
      members.push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] == -1 && sgn(g(i, j)) != 0) {
          comp[j] = static_cast<int>(s);
          q.push(j);
        }
    }
    std::sort(members.begin(), members.end());
    const std::size_t k = members.size();
    std::vector<std::vector<Int>> a(k, std::vector<Int>(k));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) {
        const Rat& x = g(members[r], members[c]);
        if (sgn(x) != 0) a[r][c] = x.get_num() * (l / x.get_den());
      }
    Inertia b = block_inertia(std::move(a));
    total.pos += b.pos;
    total.neg += b.neg;
    total.null += b.null;
  }
  return total;
}

QVec SpanBuilder::reduce(QVec v) const {
  if (v.size() != length_) throw Error("SpanBuilder: length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat f = v[pivots_[r]];
    if (sgn(f) == 0) continue;
    const QVec& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < length_; ++j)
      if (sgn(row[j]) != 0) v[j] -= f * row[j];
  }
  return v;
}

bool SpanBuilder::contains(const QVec& v) const {
  QVec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rat& q) { return sgn(q) == 0; });
}

bool SpanBuilder::add(QVec v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < length_ && sgn(v[p]) == 0) ++p;
  if (p == length_) return false;
  const Rat inv = 1 / v[p];
  for (std::size_t j = p; j < length_; ++j)
    if (sgn(v[j]) != 0) v[j] *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

std::vector<QVec> SpanBuilder::basis() const {
  if (rows_.empty()) return {};
  QMat m(rows_.size(), length_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < length_; ++j) m(i, j) = rows_[i][j];
  Rref e = rref(m);
  std::vector<QVec> out;
  for (std::size_t i = 0; i < e.reduced.rows(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

QVec flatten(const QMat& m) { return m.data(); }

QMat unflatten(std::span<const Rat> v, std::size_t rows, std::size_t cols) {
  return QMat(rows, cols, QVec(v.begin(), v.end()));
}

std::vector<QMat> algebra_closure(std::span<const QMat> gens, std::size_t n, std::size_t max_dim) {
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n) throw Error("algebra_closure: generator dimension mismatch");
  if (max_dim > n * n) throw Error("algebra_closure: max_dim exceeds n^2");
  SpanBuilder span(n * n);
  std::vector<QMat> words;
  std::queue<QMat> pending;
  auto offer = [&](QMat w) {
    if (span.dim() >= max_dim) return;
    if (span.add(flatten(w))) {
      words.push_back(w);
      pending.push(std::move(w));
    }
  };
  offer(QMat::identity(n));
  for (const auto& g : gens) offer(g);
  while (!pending.empty() && span.dim() < max_dim) {
    QMat w = std::move(pending.front());
    pending.pop();
    for (const auto& g : gens) {
      if (span.dim() >= max_dim) break;
      offer(g * w);
    }
  }
  std::vector<QMat> out;
  for (const auto& row : span.basis()) out.push_back(unflatten(row, n, n));
  return out;
}

bool proportional(std::span<const Rat> u, std::span<const Rat> v, Rat* ratio) {
  if (u.size() != v.size()) return false;
  std::size_t k = 0;
  while (k < u.size() && sgn(u[k]) == 0) ++k;
  if (k == u.size()) return false;
  if (sgn(v[k]) == 0) return false;
  Rat r = v[k] / u[k];
  for (std::size_t i = 0; i < u.size(); ++i)
    if (v[i] != r * u[i]) return false;
  if (ratio) *ratio = r;
  return true;
}

}  // namespace nilrigid
