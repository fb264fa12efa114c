#include "nilrigid/poly.hpp"

#include <algorithm>
#include <functional>

namespace nilrigid {

Monomial Monomial::variable(std::size_t i) {
  Monomial m;
  m.exp[i] = 1;
  m.degree = 1;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree > o.degree) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] && o.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exp[i]) + o.exp[i];
    if (e > 255) throw Error("monomial exponent overflow");
    m.exp[i] = static_cast<std::uint8_t>(e);
  }
  m.degree = degree + o.degree;
  return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint8_t>(exp[i] - o.exp[i]);
  m.degree = degree - o.degree;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = std::max(a.exp[i], b.exp[i]);
    m.degree += m.exp[i];
  }
  return m;
}

int degrevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

void Poly::check_vars() const {
  if (nvars_ > kMaxVars) throw Error("Poly: at most 32 variables are supported");
}

Poly Poly::constant(std::size_t nvars, const Rat& c) { return monomial(nvars, Monomial{}, c); }

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error("Poly::variable: index out of range");
  return monomial(nvars, Monomial::variable(i), Rat(1));
}

Poly Poly::monomial(std::size_t nvars, const Monomial& m, const Rat& c) {
  Poly p(nvars);
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::linear(std::span<const Rat> coeffs) {
  Poly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) p.terms_.push_back({Monomial::variable(i), coeffs[i]});
  // x1 > x2 > ... so increasing index is already decreasing order
  return p;
}

const Term& Poly::leading() const {
  if (terms_.empty()) throw Error("Poly: leading term of zero polynomial");
  return terms_.front();
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree));
  return d;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree != terms_.front().mono.degree) return false;
  return true;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, const Rat& c,
                        const Monomial* shift) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Monomial bm;
  auto b_mono = [&](std::size_t k) -> const Monomial& {
    if (!shift) return b[k].mono;
    bm = b[k].mono * *shift;
    return bm;
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    const Monomial& mb = b_mono(j);
    int cmp = i == a.size() ? -1 : degrevlex_cmp(a[i].mono, mb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({mb, c * b[j].coef});
      ++j;
    } else {
      Rat s = a[i].coef + c * b[j].coef;
      if (sgn(s) != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw Error("Poly: variable count mismatch");
  terms_ = merge(terms_, o.terms_, Rat(1), nullptr);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw Error("Poly: variable count mismatch");
  terms_ = merge(terms_, o.terms_, Rat(-1), nullptr);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

void Poly::add_scaled(const Poly& g, const Rat& c, const Monomial& m) {
  if (g.nvars_ != nvars_) throw Error("Poly: variable count mismatch");
  if (sgn(c) == 0) return;
  terms_ = merge(terms_, g.terms_, c, &m);
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw Error("Poly: variable count mismatch");
  Poly r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& big = a.size() <= b.size() ? b : a;
  for (const auto& t : small.terms_) r.add_scaled(big, t.coef, t.mono);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly p = *this;
  Rat inv = 1 / lc();
  return p *= inv;
}

void Poly::drop_leading() {
  if (terms_.empty()) throw Error("Poly: drop_leading on zero polynomial");
  terms_.erase(terms_.begin());
}

void Poly::append_trailing(Term t) {
  if (sgn(t.coef) == 0) return;
  if (!terms_.empty() && degrevlex_cmp(terms_.back().mono, t.mono) <= 0)
    throw Error("Poly: append_trailing out of order");
  terms_.push_back(std::move(t));
}

Rat Poly::evaluate(std::span<const Rat> x) const {
  if (x.size() != nvars_) throw Error("Poly::evaluate: point has wrong length");
  Rat sum;
  for (const auto& t : terms_) {
    Rat v = t.coef;
    for (std::size_t i = 0; i < nvars_ && sgn(v) != 0; ++i)
      for (unsigned e = 0; e < t.mono.exp[i]; ++e) v *= x[i];
    sum += v;
  }
  return sum;
}

GaussRat Poly::evaluate(std::span<const GaussRat> x) const {
  if (x.size() != nvars_) throw Error("Poly::evaluate: point has wrong length");
  GaussRat sum;
  for (const auto& t : terms_) {
    GaussRat v(t.coef);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < t.mono.exp[i]; ++e) v *= x[i];
    sum += v;
  }
  return sum;
}

Poly Poly::substitute_linear(const QMat& u) const {
  if (u.rows() != nvars_ || u.cols() != nvars_) throw Error("substitute_linear: matrix shape mismatch");
  std::vector<Poly> images;
  for (std::size_t i = 0; i < nvars_; ++i) images.push_back(linear(u.row(i)));
  Poly r(nvars_);
  for (const auto& t : terms_) {
    Poly p = constant(nvars_, t.coef);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < t.mono.exp[i]; ++e) p = p * images[i];
    r += p;
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Rat c = t.coef;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!t.mono.exp[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (t.mono.exp[i] > 1) mono += "^" + std::to_string(t.mono.exp[i]);
    }
    if (mono.empty()) {
      s += nilrigid::to_string(c);
    } else if (c == 1) {
      s += mono;
    } else {
      s += nilrigid::to_string(c) + "*" + mono;
    }
  }
  return s;
}

Ideal::Ideal(std::size_t n, std::vector<Poly> g) : nvars(n), gens(std::move(g)) {
  for (const auto& p : gens) {
    if (p.nvars() != nvars) throw Error("Ideal: generator variable count mismatch");
  }
  std::erase_if(gens, [](const Poly& p) { return p.is_zero(); });
}

Poly poly_det(const PolyMatrix& m, std::size_t nvars) {
  const std::size_t k = m.size();
  if (k == 0) return Poly::constant(nvars, Rat(1));
  for (const auto& row : m)
    if (row.size() != k) throw Error("poly_det: matrix not square");
  if (k == 1) return m[0][0];
  if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Poly d(nvars);
  for (std::size_t j = 0; j < k; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix sub;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) row.push_back(m[i][c]);
      sub.push_back(std::move(row));
    }
    Poly term = m[0][j] * poly_det(sub, nvars);
    if (j % 2) d -= term;
    else d += term;
  }
  return d;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Ideal symbolic_matrix_minors(const PolyMatrix& m, std::size_t nvars, std::size_t k) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  if (k == 0 || k > std::min(rows, cols)) throw Error("symbolic_matrix_minors: k out of range");
  for (const auto& row : m) {
    if (row.size() != cols) throw Error("symbolic_matrix_minors: ragged matrix");
    for (const auto& p : row) {
      if (p.nvars() != nvars) throw Error("symbolic_matrix_minors: variable count mismatch");
      if (!p.is_zero() && (p.degree() != 1 || !p.is_homogeneous()))
        throw Error("symbolic_matrix_minors: entries must be linear forms");
    }
  }
  std::vector<Poly> gens;
  for_each_subset(rows, k, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
      PolyMatrix sub(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i].push_back(m[rs[i]][cs[j]]);
      Poly d = poly_det(sub, nvars);
      if (!d.is_zero()) gens.push_back(std::move(d));
    });
  });
  return Ideal(nvars, std::move(gens));
}

}  // namespace nilrigid
