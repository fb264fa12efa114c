#include "nilrigid/groebner.hpp"

#include <algorithm>

namespace nilrigid {

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

bool pair_less(const Pair& a, const Pair& b) {
  int c = degrevlex_cmp(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

class Reducer {
 public:
  Reducer(const std::vector<Poly>& polys, const std::vector<bool>& active, std::size_t budget,
          std::size_t* counter)
      : polys_(polys), active_(active), budget_(budget), counter_(counter) {}

  // Complete reduction: every term of the result is irreducible.
  Poly reduce(Poly p) const {
    Poly done(p.nvars());
    while (!p.is_zero()) {
      const Term& lt = p.leading();
      const Poly* div = find_divisor(lt.mono);
      if (div) {
        tick();
        Rat c = -lt.coef / div->lc();
        p.add_scaled(*div, c, lt.mono / div->lm());
      } else {
        done.append_trailing(lt);
        p.drop_leading();
      }
    }
    return done;
  }

 private:
  const Poly* find_divisor(const Monomial& m) const {
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k] && polys_[k].lm().divides(m)) return &polys_[k];
    return nullptr;
  }
  void tick() const {
    if (++*counter_ > budget_) throw ResourceExhausted("Groebner basis: reduction budget exhausted");
  }

  const std::vector<Poly>& polys_;
  const std::vector<bool>& active_;
  std::size_t budget_;
  std::size_t* counter_;
};

Poly s_polynomial(const Poly& f, const Poly& g) {
  Monomial l = lcm(f.lm(), g.lm());
  Poly s(f.nvars());
  s.add_scaled(f, 1 / f.lc(), l / f.lm());
  s.add_scaled(g, -1 / g.lc(), l / g.lm());
  return s;
}

// Gebauer-Moeller update when polynomial h (index hi) joins the basis.
void update(std::vector<Pair>& pairs, std::vector<bool>& active, const std::vector<Poly>& polys,
            std::size_t hi) {
  const Monomial& lh = polys[hi].lm();
  std::vector<Pair> c;
  for (std::size_t g = 0; g < hi; ++g)
    if (active[g]) c.push_back({g, hi, lcm(polys[g].lm(), lh)});

  // Pairs are taken from c in order; a pair survives if its leading monomials
  // are coprime or no other pair, still pending or already kept, has an lcm
  // dividing its own.
  std::vector<Pair> d;
  for (std::size_t a = 0; a < c.size(); ++a) {
    bool keep = polys[c[a].i].lm().coprime(lh);
    if (!keep) {
      keep = true;
      for (std::size_t b = a + 1; b < c.size() && keep; ++b)
        if (c[b].lcm.divides(c[a].lcm)) keep = false;
      for (std::size_t b = 0; b < d.size() && keep; ++b)
        if (d[b].lcm.divides(c[a].lcm)) keep = false;
    }
    if (keep) d.push_back(c[a]);
  }
  std::vector<Pair> e;
  for (const auto& p : d)
    if (!polys[p.i].lm().coprime(lh)) e.push_back(p);

  std::vector<Pair> kept;
  for (const auto& p : pairs) {
    bool drop = lh.divides(p.lcm) && !(lcm(polys[p.i].lm(), lh) == p.lcm) &&
                !(lcm(polys[p.j].lm(), lh) == p.lcm);
    if (!drop) kept.push_back(p);
  }
  for (auto& p : e) kept.push_back(p);
  pairs = std::move(kept);

  for (std::size_t g = 0; g < hi; ++g)
    if (active[g] && lh.divides(polys[g].lm())) active[g] = false;
}

}  // namespace

Poly normal_form(const Poly& p, const std::vector<Poly>& basis) {
  std::vector<bool> active(basis.size(), true);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (basis[k].is_zero()) active[k] = false;
  std::size_t counter = 0;
  Reducer r(basis, active, static_cast<std::size_t>(-1), &counter);
  return r.reduce(p);
}

std::vector<Poly> groebner(const Ideal& ideal, const GroebnerOptions& opts, GroebnerStats* stats) {
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  std::vector<Poly> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  // Seed with the generators, each reduced against the ones before it.
  std::vector<Poly> input = ideal.gens;
  for (const auto& g : input)
    if (g.nvars() != ideal.nvars) throw Error("groebner: variable count mismatch");
  std::stable_sort(input.begin(), input.end(),
                   [](const Poly& a, const Poly& b) { return degrevlex_cmp(a.lm(), b.lm()) < 0; });
  for (const auto& g : input) {
    Reducer red(polys, active, opts.max_reductions, &st.reductions);
    Poly h = red.reduce(g);
    if (h.is_zero()) continue;
    polys.push_back(h.monic());
    active.push_back(true);
    update(pairs, active, polys, polys.size() - 1);
  }

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair p = *it;
    pairs.erase(it);
    ++st.pairs_considered;
    Poly s = s_polynomial(polys[p.i], polys[p.j]);
    Reducer red(polys, active, opts.max_reductions, &st.reductions);
    Poly h = red.reduce(std::move(s));
    ++st.pairs_reduced;
    if (h.is_zero()) continue;
    polys.push_back(h.monic());
    active.push_back(true);
    update(pairs, active, polys, polys.size() - 1);
  }

  // Reduced basis: minimal leading monomials, then tail reduction.
  std::vector<Poly> minimal;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) minimal.push_back(polys[k]);
  std::vector<Poly> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Poly> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    Poly tail = minimal[k];
    Poly lead = Poly::monomial(tail.nvars(), tail.lm(), tail.lc());
    tail -= lead;
    reduced.push_back((lead + normal_form(tail, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Poly& a, const Poly& b) { return degrevlex_cmp(a.lm(), b.lm()) < 0; });
  return reduced;
}

bool has_pure_powers(const std::vector<Poly>& gb, std::size_t nvars, std::vector<std::size_t>* missing) {
  std::vector<bool> found(nvars, false);
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    const Monomial& m = g.lm();
    if (m.degree == 0) return true;  // unit ideal: empty zero set
    std::size_t var = nvars, count = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m.exp[i]) {
        var = i;
        ++count;
      }
    if (count == 1) found[var] = true;
  }
  bool all = true;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (!found[i]) {
      all = false;
      if (missing) missing->push_back(i);
    }
  }
  return all;
}

bool vanishes_only_at_origin(const Ideal& ideal, const GroebnerOptions& opts) {
  for (const auto& g : ideal.gens) {
    if (!g.is_homogeneous() || g.degree() < 1)
      throw Error("vanishes_only_at_origin: generators must be homogeneous of positive degree");
  }
  auto gb = groebner(ideal, opts);
  return has_pure_powers(gb, ideal.nvars);
}

}  // namespace nilrigid
