#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>

#include "nilrigid/clifford.hpp"
#include "nilrigid/linalg.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace nilrigid;
using namespace nilrigid::testing;

namespace {

QMat eta(std::size_t r, std::size_t s) {
  QMat e(r + s, r + s);
  for (std::size_t i = 0; i < r + s; ++i) e(i, i) = i < r ? 1 : -1;
  return e;
}

}  // namespace

TEST_CASE("irreducible dimensions and class counts agree with the table") {
  for (std::size_t s = 0; s <= 8; ++s)
    for (std::size_t r = 0; r <= 8; ++r) {
      CAPTURE(r);
      CAPTURE(s);
      Cell c = table1_cell(r, s);
      IrreducibleInfo info = irreducible_dim(r, s);
      CHECK(info.dim == (c.bold ? c.dim / 2 : c.dim));
      CHECK(info.two_classes == ((r + 8 - s % 8) % 4 == 3));
    }
}

TEST_CASE("generators satisfy the Clifford relations and are signed permutations") {
  for (std::size_t s = 0; s <= 8; ++s)
    for (std::size_t r = 0; r <= 8; ++r) {
      if (irreducible_dim(r, s).dim > 32) continue;
      CAPTURE(r);
      CAPTURE(s);
      auto gens = build_generators(r, s);
      REQUIRE(gens.size() == r + s);
      CHECK(satisfies_clifford_relations(gens, r));
      QMat e = eta(r, s);
      std::size_t d = irreducible_dim(r, s).dim;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t a = 0; a < d; ++a) {
          int nz = 0;
          for (std::size_t b = 0; b < d; ++b)
            if (gens[i](a, b) != 0) {
              ++nz;
              CHECK(abs(gens[i](a, b)) == 1);
            }
          CHECK(nz == 1);
        }
        // Independent relation check against η.
        for (std::size_t j = 0; j < gens.size(); ++j)
          CHECK(gens[i] * gens[j] + gens[j] * gens[i] == Rat(-2) * e(i, j) * QMat::identity(d));
      }
      if (irreducible_dim(r, s).two_classes) {
        QMat w = volume_element(gens, d);
        CHECK((w == QMat::identity(d) || w == -QMat::identity(d)));
      }
    }
}

TEST_CASE("the two classes are distinguished by the volume element") {
  for (auto [r, s] : {std::pair<std::size_t, std::size_t>{3, 0}, {1, 2}, {0, 1}, {7, 0}, {3, 4}, {2, 3}}) {
    auto d = irreducible_dim(r, s).dim;
    REQUIRE(irreducible_dim(r, s).two_classes);
    auto plus = build_generators(r, s, ModuleClass::Plus);
    auto minus = build_generators(r, s, ModuleClass::Minus);
    CHECK(satisfies_clifford_relations(plus, r));
    CHECK(satisfies_clifford_relations(minus, r));
    CHECK(volume_element(plus, d) == QMat::identity(d));
    CHECK(volume_element(minus, d) == -QMat::identity(d));
  }
  CHECK_THROWS_AS(build_generators(2, 0, ModuleClass::Plus), Error);
}

TEST_CASE("table1 reproduces every entry up to dimension 64") {
  auto entries = table1(64);
  REQUIRE(entries.size() == 81);
  for (const auto& e : entries) {
    CAPTURE(e.r);
    CAPTURE(e.s);
    Cell c = table1_cell(e.r, e.s);
    CHECK(e.computed == (c.dim <= 64));
    if (!e.computed) continue;
    CHECK(e.dim == c.dim);
    CHECK(e.twin == c.twin);
    CHECK(e.mixed == c.bold);
    CHECK(e.composition.size() == (c.bold ? 2u : 1u));
  }
}

TEST_CASE("full table including the 128 and 256 dimensional modules") {
  for (const auto& e : table1(256)) {
    CAPTURE(e.r);
    CAPTURE(e.s);
    Cell c = table1_cell(e.r, e.s);
    REQUIRE(e.computed);
    CHECK(e.dim == c.dim);
    CHECK(e.twin == c.twin);
    CHECK(e.mixed == c.bold);
  }
}

TEST_CASE("minimal admissible forms are admissible, non-degenerate and neutral when indefinite") {
  for (std::size_t s = 0; s <= 8; ++s)
    for (std::size_t r = 0; r <= 8; ++r) {
      if (table1_cell(r, s).dim > 32) continue;
      CAPTURE(r);
      CAPTURE(s);
      CliffordRep rep = minimal_admissible(r, s);
      REQUIRE(rep.G);
      const QMat& g = *rep.G;
      CHECK(is_symmetric(g));
      CHECK(det(g) != 0);
      for (const auto& j : rep.gens) CHECK((j.transpose() * g + g * j).is_zero());
      Inertia in = signature(g);
      if (s >= 1) CHECK(in.pos == in.neg);
      if (s == 0) CHECK((in.pos == rep.dim || in.neg == rep.dim));
    }
}

TEST_CASE("admissible form space consists of symmetric solutions") {
  const std::size_t d = irreducible_dim(1, 2).dim;
  CHECK(d == 2);
  auto plus = build_generators(1, 2, ModuleClass::Plus);
  auto minus = build_generators(1, 2, ModuleClass::Minus);
  // A single irreducible of Cl(1,2) carries no admissible form.
  CHECK_FALSE(admissible_form(plus, d).has_value());
  CHECK_FALSE(admissible_form(minus, d).has_value());
  // Two copies of the same class do carry one (the minimal module).
  std::vector<QMat> doubled;
  for (std::size_t k = 0; k < 3; ++k) doubled.push_back(block_diag(plus[k], plus[k]));
  auto space = admissible_form_space(doubled, 2 * d);
  CHECK(!space.empty());
  for (const auto& g : space) {
    CHECK(is_symmetric(g));
    for (const auto& j : doubled) CHECK((j.transpose() * g + g * j).is_zero());
  }
  auto g = admissible_form(doubled, 2 * d);
  REQUIRE(g);
  CHECK(det(*g) != 0);
}

TEST_CASE("commutation signs of the (3,4) involutions match the published table") {
  const auto& expected = kTable2Signs;
  CliffordRep rep = minimal_admissible(3, 4);
  CHECK(rep.dim == 8);
  auto quads = default_quadruples(3, 4);
  REQUIRE(quads.size() == 3);
  CHECK(quads[0] == std::array<std::size_t, 4>{1, 2, 4, 5});
  CHECK(quads[1] == std::array<std::size_t, 4>{1, 2, 6, 7});
  CHECK(quads[2] == std::array<std::size_t, 4>{1, 3, 5, 7});
  InvolutionSet inv = involution_set(rep, quads);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 7; ++k) CHECK(inv.sign_table[j][k] == expected[j][k]);
  // Independent recomputation from the matrices.
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(inv.P[j] * inv.P[j] == QMat::identity(8));
    CHECK(*rep.G * inv.P[j] == inv.P[j].transpose() * *rep.G);
    for (std::size_t l = 0; l < 3; ++l) CHECK(inv.P[j] * inv.P[l] == inv.P[l] * inv.P[j]);
    for (std::size_t k = 0; k < 7; ++k) {
      const QMat& jk = rep.gens[k];
      CHECK(inv.P[j] * jk == Rat(expected[j][k]) * (jk * inv.P[j]));
    }
  }
  REQUIRE(inv.eigenbasis.size() == 8);
  for (const auto& b : inv.eigenbasis) CHECK(b.size() == 1);
}

TEST_CASE("(3,4) eigenvector table: each column holds four proportional vectors") {
  CliffordRep rep = minimal_admissible(3, 4);
  InvolutionSet inv = involution_set(rep, default_quadruples(3, 4));
  const QVec& w = inv.eigenbasis[0][0];
  auto J = [&](std::size_t k, const QVec& v) { return mat_vec(rep.gens[k - 1], v); };
  const auto& cols = kTable3Columns;
  for (std::size_t c = 0; c < 7; ++c) {
    std::vector<QVec> vs;
    for (const auto& e : cols[c]) vs.push_back(e[1] == 0 ? J(e[0], w) : J(e[0], J(e[1], w)));
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b) {
        Rat ratio;
        CHECK(proportional(vs[a], vs[b], &ratio));
        CHECK((ratio == 1 || ratio == -1));
      }
    // The column sits in the eigenspace with pattern c + 1.
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(mat_vec(inv.P[j], vs[0]) == QVec([&] {
              QVec t = vs[0];
              for (auto& x : t) x *= inv.patterns[c + 1][j];
              return t;
            }()));
  }
}

TEST_CASE("(7,0) involutions also split the module into eight lines") {
  CliffordRep rep = minimal_admissible(7, 0);
  CHECK(rep.dim == 8);
  auto quads = default_quadruples(7, 0);
  CHECK(quads[0] == std::array<std::size_t, 4>{1, 2, 3, 4});
  CHECK(quads[1] == std::array<std::size_t, 4>{1, 2, 5, 6});
  CHECK(quads[2] == std::array<std::size_t, 4>{1, 3, 5, 7});
  InvolutionSet inv = involution_set(rep, quads);
  REQUIRE(inv.eigenbasis.size() == 8);
  for (const auto& b : inv.eigenbasis) CHECK(b.size() == 1);
}

TEST_CASE("copy specifications") {
  auto c = parse_copies("+:2,-:1");
  REQUIRE(c.size() == 2);
  CHECK(c[0].cls == ModuleClass::Plus);
  CHECK(c[0].count == 2);
  CHECK(c[1].cls == ModuleClass::Minus);
  CHECK(c[1].count == 1);
  CHECK(parse_copies("min")[0].cls == ModuleClass::Default);
  CHECK_THROWS_AS(parse_copies("x:1"), Error);
  CHECK_THROWS_AS(parse_copies("+:0"), Error);
  CHECK_THROWS_AS(parse_copies("+:a"), Error);
}

TEST_CASE("H-type algebras built from modules satisfy the Clifford relations on n") {
  for (auto [r, s, spec] : {std::tuple<std::size_t, std::size_t, const char*>{1, 0, "min:2"},
                            {3, 0, "+:1,-:1"},
                            {1, 2, "+:2"},
                            {2, 1, "min"},
                            {3, 4, "min"},
                            {0, 3, "min"}}) {
    CAPTURE(r);
    CAPTURE(s);
    HTypeAlgebra h = build_htype(r, s, parse_copies(spec));
    JMaps j = j_maps(h.algebra);
    CHECK(verify_htype(j));
    CHECK(validate(h.algebra.algebra()).fundamental);
    CHECK(h.algebra.metric().Z == eta(r, s));
    for (std::size_t k = 0; k < r + s; ++k) CHECK(j.maps[k] == h.gens[k]);
  }
}
