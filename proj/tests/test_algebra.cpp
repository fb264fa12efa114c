#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nilrigid/algebra_json.hpp"
#include "nilrigid/catalog.hpp"
#include "nilrigid/linalg.hpp"
#include "support.hpp"

using namespace nilrigid;
using namespace nilrigid::testing;

namespace {

Graded2Step heisenberg() {
  std::vector<Graded2Step::Bracket> b{{0, 1, {Rat(1)}}};
  return Graded2Step::from_brackets(2, 1, b);
}

}  // namespace

TEST_CASE("brackets are stored antisymmetrically and duplicates add up") {
  std::vector<Graded2Step::Bracket> b{{0, 1, {Rat(1), Rat(0)}}, {1, 0, {Rat(0), Rat(2)}}, {0, 1, {Rat(1), Rat(0)}}};
  Graded2Step a = Graded2Step::from_brackets(3, 2, b);
  CHECK(a.coef(0, 1, 0) == 2);
  CHECK(a.coef(1, 0, 0) == -2);
  CHECK(a.coef(0, 1, 1) == -2);
  CHECK(a.coef(2, 2, 0) == 0);
  std::vector<Graded2Step::Bracket> diag{{1, 1, {Rat(1), Rat(0)}}};
  CHECK_THROWS_AS(Graded2Step::from_brackets(3, 2, diag), Error);
  std::vector<Graded2Step::Bracket> out{{0, 3, {Rat(1), Rat(0)}}};
  CHECK_THROWS_AS(Graded2Step::from_brackets(3, 2, out), Error);
}

TEST_CASE("bracket is bilinear and antisymmetric on random algebras") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graded2Step a = random_algebra(3, 5, seed);
    QVec x(5), y(5);
    for (std::size_t i = 0; i < 5; ++i) {
      x[i] = make_rat(d(rng), 2);
      y[i] = d(rng);
    }
    QVec xy = a.bracket(x, y), yx = a.bracket(y, x);
    CHECK(xy == naive_bracket(a, x, y));
    for (std::size_t k = 0; k < 3; ++k) CHECK(xy[k] == -yx[k]);
    CHECK(mat_vec(a.ad(x), y) == xy);
  }
}

TEST_CASE("validate: Heisenberg and free algebras are fundamental, a central generator is not") {
  CHECK(validate(heisenberg()).fundamental);
  CHECK(validate(free_two_step(4)).fundamental);
  std::vector<Graded2Step::Bracket> b{{0, 1, {Rat(1)}}};
  auto rep = validate(Graded2Step::from_brackets(3, 1, b));
  CHECK_FALSE(rep.fundamental);
  REQUIRE(rep.central_in_minus1.size() == 1);
  CHECK(rep.central_in_minus1[0] == unit(3, 2));
  std::vector<Graded2Step::Bracket> c{{0, 1, {Rat(1), Rat(0)}}, {0, 2, {Rat(1), Rat(0)}}};
  auto rep2 = validate(Graded2Step::from_brackets(3, 2, c));
  CHECK_FALSE(rep2.surjective_bracket);
}

TEST_CASE("free two-step algebra dimensions") {
  for (std::size_t n = 2; n <= 6; ++n) {
    Graded2Step a = free_two_step(n);
    CHECK(a.n() == n);
    CHECK(a.m() == n * (n - 1) / 2);
    CHECK(a.brackets().size() == a.m());
  }
}

TEST_CASE("J-map defining identity holds exactly for random metrics") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    std::size_t m = 2 + seed % 3, n = 4 + seed % 2;
    Graded2Step a = random_algebra(m, n, 100 + seed);
    Metric g{random_symmetric_metric(rng, n), random_symmetric_metric(rng, m)};
    JMaps j = j_maps(MTypeAlgebra(a, g));
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          Rat lhs = bilinear(g.V, mat_vec(j.maps[k], unit(n, x)), unit(n, y));
          Rat rhs = bilinear(g.Z, unit(m, k), naive_bracket(a, unit(n, x), unit(n, y)));
          CHECK(lhs == rhs);
        }
    // Skewness with respect to G_V.
    for (const auto& jk : j.maps) CHECK((jk.transpose() * g.V + g.V * jk).is_zero());
  }
}

TEST_CASE("degenerate metrics are rejected") {
  QMat singular{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
  CHECK_THROWS_AS(MTypeAlgebra(heisenberg(), Metric{singular, QMat::identity(1)}), Error);
}

TEST_CASE("orthonormal_basis produces a ±1 diagonal Gram matrix") {
  std::mt19937_64 rng(8);
  int done = 0;
  for (int t = 0; t < 40; ++t) {
    QMat g = random_symmetric_metric(rng, 3);
    QMat b;
    try {
      b = orthonormal_basis(g);
    } catch (const Error&) {
      continue;  // needs an irrational square root
    }
    ++done;
    QMat gram = b.transpose() * g * b;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        if (i == j)
          CHECK((gram(i, i) == 1 || gram(i, i) == -1));
        else
          CHECK(gram(i, j) == 0);
      }
    CHECK(signature(gram) == signature(g));
  }
  CHECK(done > 0);
  QMat hyp{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  QMat b = orthonormal_basis(hyp);
  QMat gram = b.transpose() * hyp * b;
  CHECK(gram(0, 1) == 0);
  CHECK(gram(0, 0) * gram(1, 1) == -1);
}

TEST_CASE("H-type and J-type checks on known algebras") {
  JMaps h = j_maps(MTypeAlgebra(heisenberg()));
  CHECK(verify_htype(h));
  // Euclidean J of [e1,e2] = f: ⟨Je1, e2⟩ = 1, so J e1 = e2 and J e2 = −e1.
  CHECK(h.maps[0] == QMat{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}});
  auto eps = verify_jtype(h);
  REQUIRE(eps);
  CHECK((*eps)[0] == -1);

  CatalogEntry g6 = gnla(6);
  JMaps j6 = j_maps(MTypeAlgebra(g6.algebra, *g6.htype_metric));
  CHECK(verify_htype(j6));
  auto cert = condition_C(j6);
  REQUIRE(cert);
  CHECK(check_condition_C(j6, *cert));
  CHECK(cert->sigma[0] * cert->sigma[1] * cert->sigma[2] == -1);

  JMaps j1 = j_maps(MTypeAlgebra(gnla(1).algebra));
  CHECK_FALSE(verify_htype(j1));
  CHECK_FALSE(condition_C(j1).has_value());
}

TEST_CASE("Metivier probe detects a degenerate J-map") {
  JMaps j1 = j_maps(MTypeAlgebra(gnla(1).algebra));
  std::vector<QVec> probes{unit(3, 0), unit(3, 1)};
  auto rep = metivier_probe(j1, probes);
  CHECK_FALSE(rep.all_nondegenerate_on_probes);
  REQUIRE(rep.degenerate_witness);
  CHECK(det(j1.of(*rep.degenerate_witness)) == 0);
  CatalogEntry g6 = gnla(6);
  JMaps j6 = j_maps(MTypeAlgebra(g6.algebra, *g6.htype_metric));
  CHECK(metivier_probe(j6, probes).all_nondegenerate_on_probes);
}

TEST_CASE("algebra JSON round-trips through the canonical document") {
  for (const auto& e : catalog_all()) {
    Json doc = algebra_to_json(e.algebra, e.htype_metric ? &*e.htype_metric : nullptr);
    ParsedAlgebra back = algebra_from_json(Json::parse(doc.dump()));
    CHECK(back.algebra == e.algebra);
    CHECK(back.metric.has_value() == e.htype_metric.has_value());
    if (e.htype_metric) CHECK(*back.metric == *e.htype_metric);
    CHECK(algebra_to_json(back.algebra, back.metric ? &*back.metric : nullptr) == doc);
  }
}

TEST_CASE("algebra JSON reports the offending field") {
  auto msg = [](const char* text) -> std::string {
    try {
      algebra_from_json(Json::parse(text));
    } catch (const Error& e) {
      return e.what();
    }
    return "";
  };
  CHECK(msg(R"({"m":1,"brackets":[]})").find("\"n\"") != std::string::npos);
  CHECK(msg(R"({"n":2,"m":1})").find("brackets") != std::string::npos);
  CHECK(msg(R"({"n":2,"m":1,"brackets":[{"i":1,"j":3,"z":["1"]}]})").find("out of range") != std::string::npos);
  CHECK(msg(R"({"n":2,"m":1,"brackets":[{"i":1,"j":2,"z":["1","2"]}]})").find("entries") != std::string::npos);
  CHECK(msg(R"({"n":2,"m":1,"brackets":[{"i":1,"j":2,"z":["x"]}]})").find("rational") != std::string::npos);
  CHECK(msg(R"({"n":2,"m":1,"brackets":[],"metric":{"V":[["1"]],"Z":[["1"]]}})").find("metric.V") !=
        std::string::npos);
  CHECK(msg(R"({"n":2,"m":1,"brackets":[{"i":1,"j":2,"z":["6/4"]}]})").empty());
  ParsedAlgebra p = algebra_from_json(Json::parse(R"({"n":2,"m":1,"brackets":[{"i":2,"j":1,"z":["6/4"]}]})"));
  CHECK(p.algebra.coef(0, 1, 0) == make_rat(-3, 2));
}
