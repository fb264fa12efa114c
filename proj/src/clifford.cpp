#include "nilrigid/clifford.hpp"

#include <algorithm>
#include <numeric>

namespace nilrigid {

IrreducibleInfo irreducible_dim(std::size_t r, std::size_t s) {
  if (r > kMaxCliffordIndex || s > kMaxCliffordIndex)
    throw Error("Clifford signature out of range: need 0 <= r, s <= 8");
  const std::size_t n = r + s;
  const std::size_t idx = ((s + 8 * 8) - r) % 8;
  IrreducibleInfo info;
  // Cl(r,s) is a full matrix algebra over R, C, H or a sum of two copies.
  switch (idx) {
    case 0:
    case 2:
      info.dim = std::size_t{1} << (n / 2);  // M(R)
      break;
    case 1:
      info.dim = std::size_t{1} << ((n - 1) / 2);  // M(R) ⊕ M(R)
      info.two_classes = true;
      break;
    case 3:
    case 7:
      info.dim = std::size_t{1} << ((n + 1) / 2);  // M(C)
      break;
    case 4:
    case 6:
      info.dim = std::size_t{1} << ((n + 2) / 2);  // M(H)
      break;
    default:
      info.dim = std::size_t{1} << ((n + 1) / 2);  // M(H) ⊕ M(H)
      info.two_classes = true;
      break;
  }
  return info;
}

namespace {

QMat rot() { return QMat{{0, -1}, {1, 0}}; }
QMat swap2() { return QMat{{0, 1}, {1, 0}}; }

// Left multiplication by the imaginary units on the octonions, basis
// 1, e1..e7, with e_a e_b = e_c along each oriented line below.
std::vector<QMat> octonion_units() {
  static const int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                                  {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
  // table[a][b] = signed index of e_a e_b (0 is the unit).
  int sign[8][8], prod[8][8];
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      sign[a][b] = 0;
      prod[a][b] = -1;
    }
  for (int a = 0; a < 8; ++a) {
    sign[0][a] = sign[a][0] = 1;
    prod[0][a] = prod[a][0] = a;
  }
  for (int a = 1; a < 8; ++a) {
    sign[a][a] = -1;
    prod[a][a] = 0;
  }
  for (const auto& l : lines)
    for (int rot3 = 0; rot3 < 3; ++rot3) {
      int a = l[rot3], b = l[(rot3 + 1) % 3], c = l[(rot3 + 2) % 3];
      sign[a][b] = 1;
      prod[a][b] = c;
      sign[b][a] = -1;
      prod[b][a] = c;
    }
  std::vector<QMat> units;
  for (int a = 1; a < 8; ++a) {
    QMat l(8, 8);
    for (int b = 0; b < 8; ++b) l(static_cast<std::size_t>(prod[a][b]), static_cast<std::size_t>(b)) = sign[a][b];
    units.push_back(std::move(l));
  }
  return units;
}

std::vector<QMat> tensor_right(const std::vector<QMat>& a, const QMat& b) {
  std::vector<QMat> out;
  for (const auto& m : a) out.push_back(kron(m, b));
  return out;
}

// Irreducible generators following the fixed recursion. Every branch is
// taken only when its dimension count equals the irreducible dimension, so
// the result is irreducible by a dimension argument.
std::vector<QMat> build_irreducible(std::size_t r, std::size_t s) {
  const std::size_t want = irreducible_dim(r, s).dim;
  if (r == 0 && s == 0) return {};
  if (r == 1 && s == 0) return {rot()};
  if (r == 0 && s == 1) return {QMat{{1}}};
  if (s == 0 && r >= 5 && r <= 7) {
    auto units = octonion_units();
    units.resize(r);
    return units;
  }
  if (r >= 1 && s >= 1 && 2 * irreducible_dim(r - 1, s - 1).dim == want) {
    // Cl(r,s) = Cl(r−1,s−1) ⊗ Cl(1,1).
    auto a = build_irreducible(r - 1, s - 1);
    const std::size_t d = want / 2;
    const QMat jp = rot(), jm = swap2(), omega = jp * jm;
    std::vector<QMat> out;
    for (std::size_t k = 0; k < r - 1; ++k) out.push_back(kron(a[k], omega));
    out.push_back(kron(QMat::identity(d), jp));
    for (std::size_t k = r - 1; k < a.size(); ++k) out.push_back(kron(a[k], omega));
    out.push_back(kron(QMat::identity(d), jm));
    return out;
  }
  if (r >= 2 && 4 * irreducible_dim(s, r - 2).dim == want) {
    // Cl(r,s) = Cl(s,r−2) ⊗ Cl(2,0), Cl(2,0) acting on H by left
    // multiplication with i and j.
    auto b = build_irreducible(s, r - 2);
    const std::size_t d = want / 4;
    const QMat e1{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
    const QMat e2{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
    const QMat e12 = e1 * e2;
    std::vector<QMat> out{kron(QMat::identity(d), e1), kron(QMat::identity(d), e2)};
    // b's generators s..s+r−3 square to +Id and become positive.
    for (std::size_t k = s; k < b.size(); ++k) out.push_back(kron(b[k], e12));
    for (std::size_t k = 0; k < s; ++k) out.push_back(kron(b[k], e12));
    return out;
  }
  if (s >= 2 && 2 * irreducible_dim(s - 2, r).dim == want) {
    // Cl(r,s) = Cl(s−2,r) ⊗ Cl(0,2).
    auto b = build_irreducible(s - 2, r);
    const std::size_t d = want / 2;
    const QMat f1 = swap2(), f2{{1, 0}, {0, -1}}, f12 = f1 * f2;
    std::vector<QMat> out;
    for (std::size_t k = s - 2; k < b.size(); ++k) out.push_back(kron(b[k], f12));
    for (std::size_t k = 0; k < s - 2; ++k) out.push_back(kron(b[k], f12));
    out.push_back(kron(QMat::identity(d), f1));
    out.push_back(kron(QMat::identity(d), f2));
    return out;
  }
  if (r == 8 && s == 0) {
    auto a = build_irreducible(7, 0);
    const QMat d{{1, 0}, {0, -1}};
    auto out = tensor_right(a, d);
    out.push_back(kron(QMat::identity(8), rot()));
    return out;
  }
  throw Error("no generator recursion reaches Cl(" + std::to_string(r) + "," + std::to_string(s) + ")");
}

int omega_sign(std::span<const QMat> gens, std::size_t dim) {
  QMat w = volume_element(gens, dim);
  if (w == QMat::identity(dim)) return 1;
  if (w == -QMat::identity(dim)) return -1;
  return 0;
}

std::vector<QMat> negated(std::vector<QMat> g) {
  for (auto& m : g) m = -m;
  return g;
}

std::vector<QMat> direct_sum(const std::vector<QMat>& a, const std::vector<QMat>& b) {
  std::vector<QMat> out;
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(block_diag(a[k], b[k]));
  return out;
}

// Signed permutation view of a matrix with exactly one ±1 per column:
// J e_b = sign[b] e_{perm[b]}.
struct SignedPerm {
  std::vector<std::size_t> perm;
  std::vector<int> sign;
};

std::optional<SignedPerm> as_signed_perm(const QMat& m) {
  const std::size_t n = m.rows();
  SignedPerm p{std::vector<std::size_t>(n), std::vector<int>(n)};
  std::vector<bool> hit(n, false);
  for (std::size_t b = 0; b < n; ++b) {
    int found = 0;
    for (std::size_t a = 0; a < n; ++a) {
      const Rat& v = m(a, b);
      if (sgn(v) == 0) continue;
      if (v != 1 && v != -1) return std::nullopt;
      if (++found > 1 || hit[a]) return std::nullopt;
      hit[a] = true;
      p.perm[b] = a;
      p.sign[b] = sgn(v);
    }
    if (found != 1) return std::nullopt;
  }
  return p;
}


SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  // (AB) e_x = σ^B_x σ^A_{π^B(x)} e_{π^A(π^B(x))}
  const std::size_t n = a.perm.size();
  SignedPerm c{std::vector<std::size_t>(n), std::vector<int>(n)};
  for (std::size_t x = 0; x < n; ++x) {
    c.perm[x] = a.perm[b.perm[x]];
    c.sign[x] = b.sign[x] * a.sign[b.perm[x]];
  }
  return c;
}

// Whether a = c·b for the scalar c = ±1.
bool equals_scaled(const SignedPerm& a, const SignedPerm& b, int c) {
  for (std::size_t x = 0; x < a.perm.size(); ++x)
    if (a.perm[x] != b.perm[x] || a.sign[x] != c * b.sign[x]) return false;
  return true;
}

bool is_scaled_identity(const SignedPerm& a, int c) {
  for (std::size_t x = 0; x < a.perm.size(); ++x)
    if (a.perm[x] != x || a.sign[x] != c) return false;
  return true;
}

}  // namespace

bool satisfies_clifford_relations(std::span<const QMat> gens, std::size_t r) {
  if (gens.empty()) return true;
  const std::size_t dim = gens[0].rows();
  std::vector<SignedPerm> perms;
  for (const auto& g : gens) {
    if (g.rows() != dim || g.cols() != dim) return false;
    auto p = as_signed_perm(g);
    if (!p) break;
    perms.push_back(std::move(*p));
  }
  if (perms.size() == gens.size()) {
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (!is_scaled_identity(compose(perms[i], perms[i]), i < r ? -1 : 1)) return false;
      for (std::size_t j = i + 1; j < perms.size(); ++j)
        if (!equals_scaled(compose(perms[i], perms[j]), compose(perms[j], perms[i]), -1)) return false;
    }
    return true;
  }
  const QMat id = QMat::identity(dim);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].rows() != dim || gens[i].cols() != dim) return false;
    for (std::size_t j = i; j < gens.size(); ++j) {
      QMat anti = gens[i] * gens[j] + gens[j] * gens[i];
      if (i != j) {
        if (!anti.is_zero()) return false;
      } else if (anti != id * Rat(i < r ? -2 : 2)) {
        return false;
      }
    }
  }
  return true;
}

QMat volume_element(std::span<const QMat> gens, std::size_t dim) {
  QMat w = QMat::identity(dim);
  for (const auto& g : gens) w = w * g;
  return w;
}

std::vector<QMat> build_generators(std::size_t r, std::size_t s, ModuleClass target) {
  auto info = irreducible_dim(r, s);
  auto gens = build_irreducible(r, s);
  if (!satisfies_clifford_relations(gens, r)) throw Error("internal: generator recursion broke the Clifford relations");
  if (target == ModuleClass::Default) return gens;
  if (!info.two_classes) throw Error("Cl(r,s) has a single irreducible class; V+/V- are unavailable");
  int sign = omega_sign(gens, info.dim);
  if (sign == 0) throw Error("internal: volume element is not ±Id on an irreducible module");
  // r + s is odd here, so negating every generator flips ω.
  bool want_plus = target == ModuleClass::Plus;
  if ((sign > 0) != want_plus) gens = negated(std::move(gens));
  return gens;
}

namespace {

// Union-find over the entries G_ab (a ≤ b) with a ±1 relation to the parent.
class SignedUnionFind {
 public:
  explicit SignedUnionFind(std::size_t n) : parent_(n), parity_(n, 1), zero_(n, false) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  // Returns root and sets p with x = p · root.
  std::size_t find(std::size_t x, int& p) {
    p = 1;
    std::size_t r = x;
    while (parent_[r] != r) {
      p *= parity_[r];
      r = parent_[r];
    }
    // path compression
    int q = p;
    while (parent_[x] != x) {
      std::size_t next = parent_[x];
      int px = parity_[x];
      parent_[x] = r;
      parity_[x] = q;
      q *= px;
      x = next;
    }
    return r;
  }
  // Imposes x = s · y.
  void unite(std::size_t x, std::size_t y, int s) {
    int px, py;
    std::size_t rx = find(x, px), ry = find(y, py);
    if (rx == ry) {
      if (px != s * py) zero_[rx] = true;
      return;
    }
    // rx = px·x = px·s·py·ry
    if (rx < ry) {
      std::swap(rx, ry);
      std::swap(px, py);
    }
    parent_[rx] = ry;
    parity_[rx] = px * s * py;
    zero_[ry] = zero_[ry] || zero_[rx];
  }
  bool forced_zero(std::size_t root) const { return zero_[root]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
  std::vector<bool> zero_;
};

std::vector<QMat> orbit_solutions(const std::vector<SignedPerm>& gens, std::size_t n) {
  auto idx = [n](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return a * n - a * (a + 1) / 2 + b;
  };
  SignedUnionFind uf(n * (n + 1) / 2);
  // (JᵀG + GJ)_ab = σ_a G_{π(a), b} + σ_b G_{a, π(b)} = 0.
  for (const auto& g : gens)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b)
        uf.unite(idx(g.perm[a], b), idx(a, g.perm[b]), -g.sign[a] * g.sign[b]);
  std::vector<std::size_t> roots;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> members;
  std::vector<std::vector<int>> signs;
  std::vector<long> root_slot(n * (n + 1) / 2, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      int p;
      std::size_t r = uf.find(idx(a, b), p);
      if (uf.forced_zero(r)) continue;
      if (root_slot[r] < 0) {
        root_slot[r] = static_cast<long>(members.size());
        members.emplace_back();
        signs.emplace_back();
      }
      members[static_cast<std::size_t>(root_slot[r])].push_back({a, b});
      signs[static_cast<std::size_t>(root_slot[r])].push_back(p);
    }
  std::vector<QMat> basis;
  for (std::size_t c = 0; c < members.size(); ++c) {
    QMat g(n, n);
    // Normalize so the first entry (row-major) is +1.
    int first = signs[c][0];
    for (std::size_t t = 0; t < members[c].size(); ++t) {
      auto [a, b] = members[c][t];
      g(a, b) = signs[c][t] * first;
      g(b, a) = g(a, b);
    }
    basis.push_back(std::move(g));
  }
  return basis;
}

std::vector<QMat> dense_solutions(std::span<const QMat> gens, std::size_t n) {
  if (n > 24) throw ResourceExhausted("admissible_form: dense solver limited to dimension 24 for non-monomial generators");
  const std::size_t unknowns = n * (n + 1) / 2;
  auto idx = [n](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return a * n - a * (a + 1) / 2 + b;
  };
  QMat sys(gens.size() * n * n, unknowns);
  std::size_t row = 0;
  for (const auto& j : gens)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b, ++row)
        for (std::size_t c = 0; c < n; ++c) {
          // (JᵀG)_ab = Σ_c J_ca G_cb ; (GJ)_ab = Σ_c G_ac J_cb
          if (sgn(j(c, a)) != 0) sys(row, idx(c, b)) += j(c, a);
          if (sgn(j(c, b)) != 0) sys(row, idx(a, c)) += j(c, b);
        }
  QMat ker = kernel(sys);
  std::vector<QMat> basis;
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    QMat g(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        g(a, b) = ker(idx(a, b), k);
        g(b, a) = g(a, b);
      }
    basis.push_back(std::move(g));
  }
  return basis;
}

QMat combine(const std::vector<QMat>& basis, const std::vector<int>& coeffs) {
  QMat g(basis[0].rows(), basis[0].cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i]) g += basis[i] * Rat(coeffs[i]);
  return g;
}

// Iterates over {lo..hi}^d in lexicographic order; returns false at the end.
bool next_tuple(std::vector<int>& t, int lo, int hi) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] < hi) {
      ++t[i];
      return true;
    }
    t[i] = lo;
  }
  return false;
}

}  // namespace

std::vector<QMat> admissible_form_space(std::span<const QMat> gens, std::size_t dim) {
  std::vector<SignedPerm> perms;
  for (const auto& g : gens) {
    if (g.rows() != dim || g.cols() != dim) throw Error("admissible_form: generator has wrong size");
    auto p = as_signed_perm(g);
    if (!p) return dense_solutions(gens, dim);
    perms.push_back(std::move(*p));
  }
  return orbit_solutions(perms, dim);
}

std::optional<QMat> admissible_form(std::span<const QMat> gens, std::size_t dim) {
  auto basis = admissible_form_space(gens, dim);
  if (basis.empty()) return std::nullopt;
  for (const auto& b : basis)
    if (is_nonsingular(b)) return b;
  const std::size_t d = basis.size();
  if (d <= 6) {
    std::vector<int> t(d, -2);
    do {
      bool nz = std::any_of(t.begin(), t.end(), [](int v) { return v != 0; });
      if (!nz) continue;
      QMat g = combine(basis, t);
      if (is_nonsingular(g)) return g;
    } while (next_tuple(t, -2, 2));
  }
  // det(Σ t_i B_i) has degree ≤ dim in each t_i; vanishing on the grid
  // {0..dim}^d proves it is identically zero.
  double points = 1;
  for (std::size_t i = 0; i < d; ++i) points *= static_cast<double>(dim + 1);
  if (points > 20000) throw ResourceExhausted("admissible_form: cannot certify absence of a non-degenerate form");
  std::vector<int> t(d, 0);
  do {
    QMat g = combine(basis, t);
    if (is_nonsingular(g)) return g;
  } while (next_tuple(t, 0, static_cast<int>(dim)));
  return std::nullopt;
}

namespace {

std::string class_tag(ModuleClass c) {
  switch (c) {
    case ModuleClass::Plus:
      return "V+";
    case ModuleClass::Minus:
      return "V-";
    default:
      return "V";
  }
}

struct Attempt {
  std::vector<QMat> gens;
  std::vector<std::string> comp;
};

std::optional<CliffordRep> try_module(std::size_t r, std::size_t s, Attempt at) {
  const std::size_t dim = at.gens.empty() ? 0 : at.gens[0].rows();
  const std::size_t n = at.gens.empty() ? at.comp.size() : dim;
  // Every nonzero symmetric solution is non-degenerate at each step of the
  // minimal search (Schur's lemma on the earlier failures), so the first
  // basis element decides; admissible_form still re-checks it.
  auto g = admissible_form(at.gens, n);
  if (!g) return std::nullopt;
  CliffordRep rep;
  rep.r = r;
  rep.s = s;
  rep.dim = n;
  rep.gens = std::move(at.gens);
  rep.G = std::move(g);
  rep.composition = std::move(at.comp);
  return rep;
}

std::vector<Attempt> attempts(std::size_t r, std::size_t s, ModuleClass only) {
  auto info = irreducible_dim(r, s);
  std::vector<Attempt> out;
  if (!info.two_classes) {
    auto v = build_generators(r, s);
    if (r + s == 0) {
      out.push_back({{}, {"V"}});
      out.push_back({{}, {"V", "V"}});
    } else {
      out.push_back({v, {"V"}});
      out.push_back({direct_sum(v, v), {"V", "V"}});
    }
    return out;
  }
  auto vp = build_generators(r, s, ModuleClass::Plus);
  auto vm = build_generators(r, s, ModuleClass::Minus);
  if (only != ModuleClass::Minus) out.push_back({vp, {"V+"}});
  if (only != ModuleClass::Plus) out.push_back({vm, {"V-"}});
  if (only != ModuleClass::Minus) out.push_back({direct_sum(vp, vp), {"V+", "V+"}});
  if (only != ModuleClass::Plus) out.push_back({direct_sum(vm, vm), {"V-", "V-"}});
  if (only == ModuleClass::Default) out.push_back({direct_sum(vp, vm), {"V+", "V-"}});
  return out;
}

}  // namespace

CliffordRep minimal_admissible_of_class(std::size_t r, std::size_t s, ModuleClass cls) {
  auto info = irreducible_dim(r, s);
  if (cls != ModuleClass::Default && !info.two_classes)
    throw Error("Cl(" + std::to_string(r) + "," + std::to_string(s) + ") has a single irreducible class");
  for (auto& at : attempts(r, s, cls)) {
    auto rep = try_module(r, s, std::move(at));
    if (!rep) continue;
    rep->mixed_flag = rep->composition.size() > 1;
    bool mixed_classes = rep->composition.size() == 2 && rep->composition[0] != rep->composition[1];
    rep->twin_flag = info.two_classes && !mixed_classes;
    return *rep;
  }
  throw Error("no admissible module of class " + class_tag(cls) + " for Cl(" + std::to_string(r) + "," +
              std::to_string(s) + ")");
}

CliffordRep minimal_admissible(std::size_t r, std::size_t s) {
  return minimal_admissible_of_class(r, s, ModuleClass::Default);
}

std::vector<CopySpec> parse_copies(const std::string& text) {
  std::vector<CopySpec> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t colon = item.find(':');
    std::string cls = item.substr(0, colon);
    CopySpec c;
    if (cls == "+")
      c.cls = ModuleClass::Plus;
    else if (cls == "-")
      c.cls = ModuleClass::Minus;
    else if (cls == "min")
      c.cls = ModuleClass::Default;
    else
      throw Error("copies: class must be '+', '-' or 'min', got '" + cls + "'");
    if (colon != std::string::npos) {
      std::string cnt = item.substr(colon + 1);
      if (cnt.empty() || cnt.find_first_not_of("0123456789") != std::string::npos)
        throw Error("copies: bad count '" + cnt + "'");
      c.count = std::stoul(cnt);
    }
    if (c.count == 0) throw Error("copies: count must be positive");
    out.push_back(c);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

HTypeAlgebra build_htype(std::size_t r, std::size_t s, std::span<const CopySpec> copies) {
  if (copies.empty()) throw Error("build_htype: at least one copy is required");
  const std::size_t m = r + s;
  std::vector<QMat> gens(m);
  QMat gv;
  std::vector<std::string> comp;
  bool first = true;
  for (const auto& c : copies) {
    if (c.count == 0) throw Error("build_htype: zero copies");
    CliffordRep block = minimal_admissible_of_class(r, s, c.cls);
    for (std::size_t t = 0; t < c.count; ++t) {
      if (first) {
        gens = block.gens;
        gv = *block.G;
        first = false;
      } else {
        for (std::size_t k = 0; k < m; ++k) gens[k] = block_diag(gens[k], block.gens[k]);
        gv = block_diag(gv, *block.G);
      }
      comp.insert(comp.end(), block.composition.begin(), block.composition.end());
    }
  }
  const std::size_t n = gv.rows();
  Graded2Step a(n, m);
  for (std::size_t k = 0; k < m; ++k) {
    QMat gj = gv * gens[k];
    Rat eta = k < r ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (sgn(gj(j, i)) != 0) a.set(i, j, k, eta * gj(j, i));
  }
  QVec z(m);
  for (std::size_t k = 0; k < m; ++k) z[k] = k < r ? 1 : -1;
  Metric met{gv, QMat::diagonal(z)};
  return {MTypeAlgebra(std::move(a), std::move(met)), std::move(gens), std::move(comp)};
}

std::vector<std::array<std::size_t, 4>> default_quadruples(std::size_t r, std::size_t s) {
  if (r == 3 && s == 4) return {{1, 2, 4, 5}, {1, 2, 6, 7}, {1, 3, 5, 7}};
  if (r == 7 && s == 0) return {{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 3, 5, 7}};
  throw Error("no default involutions for Cl(" + std::to_string(r) + "," + std::to_string(s) + ")");
}

InvolutionSet involution_set(const CliffordRep& rep, std::span<const std::array<std::size_t, 4>> quadruples) {
  const std::size_t n = rep.dim;
  const QMat id = QMat::identity(n);
  InvolutionSet out;
  for (const auto& q : quadruples) {
    QMat p = id;
    for (auto k : q) {
      if (k < 1 || k > rep.gens.size()) throw Error("involution index out of range");
      p = p * rep.gens[k - 1];
    }
    if (p * p != id) throw Error("P is not an involution");
    if (rep.G && p.transpose() * *rep.G != *rep.G * p) throw Error("P is not symmetric for the admissible form");
    out.P.push_back(std::move(p));
  }
  for (std::size_t a = 0; a < out.P.size(); ++a)
    for (std::size_t b = a + 1; b < out.P.size(); ++b)
      if (out.P[a] * out.P[b] != out.P[b] * out.P[a]) throw Error("involutions do not commute");
  for (const auto& p : out.P) {
    std::vector<int> row;
    for (const auto& j : rep.gens) {
      QMat pj = p * j, jp = j * p;
      if (pj == jp)
        row.push_back(1);
      else if (pj == -jp)
        row.push_back(-1);
      else
        throw Error("involution neither commutes nor anticommutes with a generator");
    }
    out.sign_table.push_back(std::move(row));
  }
  const std::size_t k = out.P.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<int> pat(k);
    QMat stacked(k * n, n);
    for (std::size_t j = 0; j < k; ++j) {
      pat[j] = (mask >> (k - 1 - j)) & 1 ? -1 : 1;
      QMat d = out.P[j] - id * Rat(pat[j]);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) stacked(j * n + a, b) = d(a, b);
    }
    QMat ker = kernel(stacked);
    std::vector<QVec> vecs;
    for (std::size_t c = 0; c < ker.cols(); ++c) vecs.push_back(ker.col(c));
    out.patterns.push_back(std::move(pat));
    out.eigenbasis.push_back(std::move(vecs));
  }
  return out;
}

std::vector<Table1Entry> table1(std::size_t max_dim) {
  std::vector<Table1Entry> out;
  for (std::size_t s = 0; s <= kMaxCliffordIndex; ++s)
    for (std::size_t r = 0; r <= kMaxCliffordIndex; ++r) {
      Table1Entry e;
      e.r = r;
      e.s = s;
      auto info = irreducible_dim(r, s);
      if (info.dim <= max_dim) {
        // The irreducible attempt is always affordable; a doubled module is
        // built only when it fits as well.
        auto v = build_generators(r, s, info.two_classes ? ModuleClass::Plus : ModuleClass::Default);
        bool irreducible_ok = admissible_form(v, info.dim).has_value();
        if (!irreducible_ok && info.two_classes) {
          auto vm = build_generators(r, s, ModuleClass::Minus);
          irreducible_ok = admissible_form(vm, info.dim).has_value();
        }
        if (irreducible_ok || 2 * info.dim <= max_dim) {
          CliffordRep rep = minimal_admissible(r, s);
          e.computed = true;
          e.dim = rep.dim;
          e.twin = rep.twin_flag;
          e.mixed = rep.mixed_flag;
          e.composition = rep.composition;
        }
      }
      out.push_back(std::move(e));
    }
  return out;
}

}  // namespace nilrigid
