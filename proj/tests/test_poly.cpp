#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "toricode/poly.hpp"

using namespace toricode;
using namespace toricode::testsupport;

namespace {

Polynomial mono(const Ring& ring, std::initializer_list<long long> exps,
                Field::Elem coef = 1) {
  Exp e(ring.nvars);
  int i = 0;
  for (long long x : exps) e(i++) = x;
  std::vector<Term> terms{{coef, e}};
  return Polynomial::fromTerms(ring, std::move(terms));
}

bool isPlusMinusBinomial(const Ring& ring, const Polynomial& p) {
  if (p.terms().size() != 2) return false;
  const Field& f = *ring.field;
  return p.terms()[0].coef == f.one() &&
         p.terms()[1].coef == f.neg(f.one());
}

}  // namespace

TEST_CASE("toBinomial") {
  Field f(11);
  Ring ring = makeLexRing(f, 4);
  Polynomial b = toBinomial(ring, intVec({2, 1, 0, -1}));
  CHECK(polyEq(b, polySub(ring, mono(ring, {2, 1, 0, 0}), mono(ring, {0, 0, 0, 1}))));
  CHECK(polyToString(ring, b) == "x_1^2*x_2 - x_4");

  CHECK(toBinomial(ring, intVec({0, 0, 0, 0})).isZero());

  Polynomial c = toBinomial(ring, intVec({-5, 0, 5, 0}));
  CHECK(polyEq(c, polySub(ring, mono(ring, {0, 0, 5, 0}), mono(ring, {5, 0, 0, 0}))));
}

TEST_CASE("buchberger worked examples") {
  Field f(7);
  Ring ring = makeLexRing(f, 3);
  // {x - y, y - z}, lex x > y > z -> {x - z, y - z}
  Polynomial g1 = toBinomial(ring, intVec({1, -1, 0}));
  Polynomial g2 = toBinomial(ring, intVec({0, 1, -1}));
  auto gb = buchberger(ring, {g1, g2});
  REQUIRE(gb.size() == 2);
  CHECK(polyEq(gb[0], toBinomial(ring, intVec({0, 1, -1}))));  // y - z
  CHECK(polyEq(gb[1], toBinomial(ring, intVec({1, 0, -1}))));  // x - z

  // single monic binomial is its own reduced basis
  auto single = buchberger(ring, {g2});
  REQUIRE(single.size() == 1);
  CHECK(polyEq(single[0], g2));

  // redundant generator f, f*g collapses to monic f
  Polynomial x = mono(ring, {1, 0, 0});
  Polynomial fx = polySub(ring, mono(ring, {1, 0, 0}), mono(ring, {0, 1, 0}));
  Polynomial fxTimesY = polySub(ring, mono(ring, {1, 1, 0}), mono(ring, {0, 2, 0}));
  auto collapsed = buchberger(ring, {fx, fxTimesY});
  REQUIRE(collapsed.size() == 1);
  CHECK(polyEq(collapsed[0], fx));
}

TEST_CASE("buchberger is a fixed point on its own output") {
  Field f(11);
  Ring ring = makeLexRing(f, 4);
  std::vector<Polynomial> gens = {toBinomial(ring, intVec({5, 0, -5, 0})),
                                  toBinomial(ring, intVec({2, 1, 0, -1}))};
  auto gb = buchberger(ring, gens);
  auto gb2 = buchberger(ring, gb);
  REQUIRE(gb.size() == gb2.size());
  for (std::size_t i = 0; i < gb.size(); ++i) CHECK(polyEq(gb[i], gb2[i]));
  // binomial ideals have binomial bases
  for (const auto& p : gb) CHECK(isPlusMinusBinomial(ring, p));
}

TEST_CASE("normal form") {
  Field f(11);
  Ring ring = makeLexRing(f, 4);
  std::vector<Polynomial> gens = {toBinomial(ring, intVec({5, 0, -5, 0})),
                                  toBinomial(ring, intVec({2, 1, 0, -1}))};
  auto gb = buchberger(ring, gens);
  for (const auto& g : gb) CHECK(normalForm(ring, g, gb).isZero());
  CHECK(normalForm(ring, toBinomial(ring, intVec({5, 0, -5, 0})), gb).isZero());
  Polynomial x1 = mono(ring, {1, 0, 0, 0});
  CHECK(polyEq(normalForm(ring, x1, gb), x1));

  // membership linearity: f + g reduces to zero for ideal members
  Polynomial sum = polyAdd(ring, gens[0], polyMulMonomial(ring, gens[1], 3, toExp(intVec({1, 2, 0, 0}))));
  CHECK(normalForm(ring, sum, gb).isZero());
}

TEST_CASE("eliminate") {
  Field f(5);
  // lex y > x > z on variables indexed (x=0, y=1, z=2)
  Ring ring;
  ring.field = &f;
  ring.nvars = 3;
  ring.order.priority = {1, 0, 2};
  ring.names = {"x", "y", "z"};
  Polynomial g1 = toBinomial(ring, intVec({1, -1, 0}));  // x - y
  Polynomial g2 = toBinomial(ring, intVec({0, 1, -1}));  // y - z
  auto elim = eliminateVars(ring, {g1, g2}, {1});
  REQUIRE(elim.size() == 1);
  CHECK(polyEq(elim[0], toBinomial(ring, intVec({1, 0, -1}))));  // x - z

  // empty drop set returns the full reduced basis
  auto full = eliminateVars(ring, {g1, g2}, {});
  CHECK(full.size() == 2);

  // dropped variable ranked below a kept one is rejected
  CHECK_THROWS_AS(eliminateVars(ring, {g1, g2}, {2}), Error);

  // elimination output lies in the ideal and in the subring
  auto fullGb = buchberger(ring, {g1, g2});
  for (const Polynomial& p : elim) {
    CHECK(normalForm(ring, p, fullGb).isZero());
    for (const Term& t : p.terms()) CHECK(t.exp(1) == 0);
  }
}

TEST_CASE("saturation") {
  Field f(11);
  Ring ring = makeLexRing(f, 2);
  // <x1 (x1 - x2)> : x1 = <x1 - x2>
  Polynomial gen = polySub(ring, mono(ring, {2, 0}), mono(ring, {1, 1}));
  Polynomial x1 = mono(ring, {1, 0});
  auto sat = saturate(ring, {gen}, x1);
  REQUIRE(sat.size() == 1);
  CHECK(polyEq(sat[0], toBinomial(ring, intVec({1, -1}))));

  // saturation by a unit is the identity
  Polynomial one = mono(ring, {0, 0});
  auto same = saturate(ring, {gen}, one);
  CHECK(idealEqual(ring, same, {gen}));

  // expanding and idempotent
  auto sat2 = saturate(ring, sat, x1);
  CHECK(idealEqual(ring, sat, sat2));
  CHECK(normalForm(ring, gen, buchberger(ring, sat)).isZero());
}

TEST_CASE("lattice basis ideal saturates to the paper ideal") {
  Field f(11);
  Ring ring = makeLexRing(f, 4);
  // basis {(2,1,0,-1), (-5,0,5,0)} of L
  std::vector<Polynomial> gens = {toBinomial(ring, intVec({2, 1, 0, -1})),
                                  toBinomial(ring, intVec({-5, 0, 5, 0}))};
  std::vector<Polynomial> j = gens;
  for (int v = 0; v < 4; ++v) {
    Exp e = zeroExp(4);
    e(v) = 1;
    std::vector<Term> t{{f.one(), e}};
    j = saturate(ring, j, Polynomial::fromTerms(ring, std::move(t)));
  }
  std::vector<Polynomial> paper = {toBinomial(ring, intVec({2, 1, 0, -1})),
                                   toBinomial(ring, intVec({5, 0, -5, 0}))};
  CHECK(idealEqual(ring, j, paper));
}

TEST_CASE("reduced basis does not depend on generator order") {
  Field f(11);
  Ring ring = makeLexRing(f, 4);
  std::vector<Polynomial> gens = {toBinomial(ring, intVec({5, 0, -5, 0})),
                                  toBinomial(ring, intVec({2, 1, 0, -1})),
                                  toBinomial(ring, intVec({1, 0, -1, 1}))};
  auto gb = buchberger(ring, gens);
  std::vector<Polynomial> perm = {gens[2], gens[0], gens[1]};
  auto gb2 = buchberger(ring, perm);
  REQUIRE(gb.size() == gb2.size());
  for (std::size_t i = 0; i < gb.size(); ++i) CHECK(polyEq(gb[i], gb2[i]));
}

TEST_CASE("degenerate inputs") {
  Field f(3);
  Ring ring = makeLexRing(f, 2);
  CHECK(buchberger(ring, {}).empty());
  CHECK(buchberger(ring, {Polynomial(2)}).empty());
  Polynomial xm1 = toBinomial(ring, intVec({1, 0}));  // x_1 - 1
  CHECK(polyEq(normalForm(ring, xm1, {}), xm1));
}

TEST_CASE("S-pair oracle on random dense ideals") {
  // Criteria-free Groebner check: every S-polynomial of the output reduces
  // to zero, and every input generator lies in the output ideal.
  Field f(5);
  Ring ring = makeLexRing(f, 3);
  std::mt19937 gen(42);
  std::uniform_int_distribution<int> coef(0, 4), expo(0, 3), nterms(2, 4);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<Polynomial> gens;
    for (int gi = 0; gi < 3; ++gi) {
      std::vector<Term> terms;
      int tcount = nterms(gen);
      for (int t = 0; t < tcount; ++t) {
        Exp e(3);
        for (int v = 0; v < 3; ++v) e(v) = expo(gen);
        terms.push_back({static_cast<Field::Elem>(coef(gen)), e});
      }
      gens.push_back(Polynomial::fromTerms(ring, std::move(terms)));
    }
    auto gb = buchberger(ring, gens);
    for (const Polynomial& g : gens)
      CHECK(normalForm(ring, g, gb).isZero());
    for (std::size_t i = 0; i < gb.size(); ++i)
      for (std::size_t j = i + 1; j < gb.size(); ++j) {
        const Exp lcm = expLcm(gb[i].leading().exp, gb[j].leading().exp);
        Polynomial a = polyMulMonomial(ring, gb[i],
                                       f.inv(gb[i].leading().coef),
                                       lcm - gb[i].leading().exp);
        Polynomial b = polyMulMonomial(ring, gb[j],
                                       f.inv(gb[j].leading().coef),
                                       lcm - gb[j].leading().exp);
        CHECK(normalForm(ring, polySub(ring, a, b), gb).isZero());
      }
  }
}

TEST_CASE("idealEqual") {
  Field f(11);
  Ring ring = makeLexRing(f, 2);
  Polynomial xy = toBinomial(ring, intVec({1, -1}));
  Polynomial yx = toBinomial(ring, intVec({-1, 1}));
  CHECK(idealEqual(ring, {xy}, {xy}));
  CHECK(idealEqual(ring, {xy}, {yx}));
  CHECK_FALSE(idealEqual(ring, {mono(ring, {1, 0})}, {mono(ring, {2, 0})}));
}

TEST_CASE("homogeneous binomials") {
  IntMat beta = paperBeta();
  CHECK(isHomogeneousBinomial(beta, intVec({1, 1, 0, 0}), intVec({1, 1, 0, 0})));
  CHECK(isHomogeneousBinomial(beta, intVec({2, 1, 0, 0}), intVec({0, 0, 0, 1})));
  CHECK_FALSE(isHomogeneousBinomial(beta, intVec({1, 0, 0, 0}), intVec({0, 1, 0, 0})));
}

TEST_CASE("rendering") {
  Field f11(11);
  Ring ring = makeLexRing(f11, 4);
  CHECK(polyToString(ring, toBinomial(ring, intVec({5, 0, -5, 0}))) ==
        "x_1^5 - x_3^5");
  CHECK(polyToString(ring, Polynomial(4)) == "0");
  Field f2(2);
  Ring ring2 = makeLexRing(f2, 4);
  CHECK(polyToString(ring2, toBinomial(ring2, intVec({1, 0, -1, 0}))) ==
        "x_1 + x_3");
  // constant and coefficient rendering
  std::vector<Term> t{{4, toExp(intVec({1, 0, 0, 0}))},
                      {7, toExp(intVec({0, 0, 0, 0}))}};
  CHECK(polyToString(ring, Polynomial::fromTerms(ring, std::move(t))) ==
        "4*x_1 + 7");
}
