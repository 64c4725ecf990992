#include "involute/completion.hpp"
#include "involute/jets.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace involute;
using testing::corpus_system;
using testing::system_from;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("formal derivative shifts every term") {
  const auto s = system_from("system a { coordinates x y; fields u, v; eq: d(x)u + 2*v = 0; }");
  const auto d = formal_derivative(s.equations().front(), 1);
  CHECK(d.terms().size() == 2);
  CHECK(d.terms().at({0, MultiIndex{1, 1}}) == 1);
  CHECK(d.terms().at({1, MultiIndex{0, 1}}) == 2);
  CHECK_THROWS_AS(formal_derivative(s.equations().front(), 2), std::out_of_range);
}

TEST_CASE("prolongation") {
  const auto maxwell = corpus_system("maxwell");
  const auto p1 = prolong(maxwell, 1);
  CHECK(p1.q() == 3);
  CHECK(p1.equations().size() == 20);
  CHECK(coefficient_matrix(p1, 3).cols() == 140);
  const auto p2 = prolong(maxwell, 2);
  CHECK(p2.q() == 4);
  CHECK(row_space_equal(coefficient_matrix(prolong(p1, 1), 4), coefficient_matrix(p2, 4)));
  CHECK_THROWS_AS(prolong(maxwell, 0), std::invalid_argument);
}

TEST_CASE("projection of Proca exposes the divergence") {
  const auto proca = corpus_system("proca");
  const auto r1 = project(prolong(proca, 1), 2);
  CHECK(r1.q() == 2);
  CHECK(r1.equations().size() == 5);
  CHECK(dim_R(r1) == 55);
  CHECK(testing::row_space_contains(r1, proca, 2));
  // eta^ab d_a A_b with eta = diag(1,1,1,-1)
  LinearEquation div;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    MultiIndex idx(4);
    div.add({mu, idx.incremented(mu)}, mu == 3 ? -1 : 1);
  }
  const auto with_div = proca.with_equations({div}, 2);
  CHECK(testing::row_space_contains(r1, with_div, 2));
  const auto r2 = project(prolong(r1, 1), 2);
  CHECK(dim_R(r2) == 51);
  CHECK_THROWS_AS(project(proca, 2), std::invalid_argument);
}

TEST_CASE("projection of Maxwell changes nothing") {
  const auto maxwell = corpus_system("maxwell");
  const auto r1 = project(prolong(maxwell, 1), 2);
  CHECK(row_space_equal(coefficient_matrix(r1, 2), coefficient_matrix(maxwell, 2)));
}

TEST_CASE("symbol") {
  const auto wave = corpus_system("wave");
  const auto sym = symbol(wave);
  CHECK(sym.q == 2);
  CHECK(sym.base.rows() == 1);
  CHECK(sym.base.cols() == 10);
  CHECK(sym.columns.size() == 10);
  CHECK(dim_S(wave) == 9);
  const auto proca = corpus_system("proca");
  CHECK(symbol(proca).base.cols() == 40);
  CHECK(symbol_rank(proca) == 4);
  // lower-order terms do not enter the symbol
  const auto mass = system_from("system a { coordinates x t; fields u; eq: d(t,t)u - d(x,x)u + 5*u = 0; }");
  const auto nomass = system_from("system a { coordinates x t; fields u; eq: d(t,t)u - d(x,x)u = 0; }");
  CHECK(symbol(mass).base == symbol(nomass).base);
}

TEST_CASE("characters of the three-equation example") {
  const auto s = system_from(
      "system e { coordinates x y z; fields Phi;"
      " eq: d(y,y)Phi - d(x,x)Phi = 0; eq: d(x,y)Phi = 0; eq: d(z,z)Phi + d(x,z)Phi = 0; }");
  const auto c = characters(s);
  CHECK(c.beta == ints({1, 1, 1}));
  CHECK(c.alpha == ints({2, 1, 0}));
  CHECK(num_multiplicative(c) == 6);
}

TEST_CASE("characters of corpus systems") {
  CHECK(characters(corpus_system("wave")).beta == ints({0, 0, 0, 1}));
  CHECK(characters(corpus_system("maxwell")).beta == ints({0, 0, 1, 3}));
  CHECK(num_multiplicative(characters(corpus_system("maxwell"))) == 15);
  CHECK(num_multiplicative(characters(corpus_system("proca"))) == 15);
  const auto completed = cartan_kuranishi(corpus_system("proca")).result;
  CHECK(characters(completed).beta == ints({1, 1, 2, 4}));
  CHECK(num_multiplicative(characters(completed)) == 25);
  CHECK(num_multiplicative(characters(system_from(
            "system a { coordinates x y; fields u, v; order = 1; eq: u = 0; eq: v = 0; }"))) == 0);
  CHECK_THROWS_AS(characters(system_from("system a { coordinates x; fields u; eq: u = 0; }")),
                  std::domain_error);
}

TEST_CASE("involutivity and integrability") {
  const auto proca = corpus_system("proca");
  CHECK(symbol_involutive(proca));
  CHECK(has_integrability_conditions(proca));
  const auto r1 = project(prolong(proca, 1), 2);
  CHECK(has_integrability_conditions(r1));
  const auto r2 = project(prolong(r1, 1), 2);
  CHECK_FALSE(has_integrability_conditions(r2));
  CHECK(symbol_involutive(r2));

  const auto maxwell = corpus_system("maxwell");
  CHECK(symbol_involutive(maxwell));
  CHECK_FALSE(has_integrability_conditions(maxwell));

  const auto wave = corpus_system("wave");
  CHECK(symbol_involutive(wave));
  CHECK_FALSE(has_integrability_conditions(wave));

  const auto xx_yy = system_from("system p { coordinates x y; fields Phi; eq: d(x,x)Phi = 0; eq: d(y,y)Phi = 0; }");
  CHECK(num_multiplicative(characters(xx_yy)) == 3);
  CHECK(symbol_rank(prolong(xx_yy, 1)) == 4);
  CHECK_FALSE(symbol_involutive(xx_yy));
  CHECK_FALSE(has_integrability_conditions(xx_yy));
}

TEST_CASE("dimension of the projection from prolonged dimensions") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    const auto s = corpus_system(entry.name);
    const auto p = prolong(s, 1);
    CHECK(dim_R(project(p, s.q())) == dim_R(p) - dim_S(p));
  }
}

TEST_CASE("projection keeps the original equations") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    const auto s = corpus_system(entry.name);
    CHECK(testing::row_space_contains(project(prolong(s, 1), s.q()), s, s.q()));
  }
}

TEST_CASE("character propagation law") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    const auto completed = cartan_kuranishi(corpus_system(entry.name)).result;
    const auto c = characters(completed);
    for (unsigned r = 1; r <= 2; ++r) {
      CHECK(characters(prolong(completed, r)) == propagate_characters(c, completed.n(), r));
    }
  }
  // wave by hand: beta^(k) of order q+r
  const auto wave = characters(corpus_system("wave"));
  CHECK(propagate_characters(wave, 4, 1).beta == ints({1, 1, 1, 1}));
  CHECK(propagate_characters(wave, 4, 2).beta == ints({4, 3, 2, 1}));
}

TEST_CASE("characters do not depend on the order of columns within a class") {
  std::mt19937 rng(99);
  for (const char* name : {"maxwell", "fp_massless", "2form_stueckelberg"}) {
    CAPTURE(name);
    const auto completed = cartan_kuranishi(corpus_system(name)).result;
    const auto sym = symbol(completed);
    const auto expected = characters(completed);
    CHECK(characters_of(sym.base, sym.columns, completed.n(), completed.m(), sym.q) == expected);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::size_t> perm(sym.columns.size());
      std::iota(perm.begin(), perm.end(), 0);
      // shuffle each class block, classes stay descending
      auto begin = perm.begin();
      while (begin != perm.end()) {
        const auto cls = sym.columns[*begin].index.class_of();
        auto end = std::find_if(begin, perm.end(),
                                [&](std::size_t c) { return sym.columns[c].index.class_of() != cls; });
        std::shuffle(begin, end, rng);
        begin = end;
      }
      RationalMatrix shuffled(sym.base.rows(), sym.base.cols());
      std::vector<JetCoordinate> columns;
      for (std::size_t j = 0; j < perm.size(); ++j) {
        columns.push_back(sym.columns[perm[j]]);
        for (std::size_t i = 0; i < sym.base.rows(); ++i) shuffled(i, j) = sym.base(i, perm[j]);
      }
      CHECK(characters_of(shuffled, columns, completed.n(), completed.m(), sym.q).beta == expected.beta);
    }
  }
}
