#include "hdx/ideal.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace hdx;
using testing::ideal;

namespace {

const char* kWorked = "n=3; x1^2, x1*x2, x1*x3, x2^2, x3^2";
const char* kWorkedLex = "n=3; x1^2, x1*x2, x1*x3, x2^2, x2*x3, x3^3";
const char* kWorkedSigma = "n=5; x1*x2, x1*x3, x1*x4, x2*x3, x2*x4, x3*x4*x5";

}  // namespace

TEST_CASE("from_generators minimalizes") {
  const auto I = ideal("n=3; x1^2, x1^2*x2, x2^2");
  CHECK(I == ideal("n=3; x1^2, x2^2"));
  CHECK(I.generators().size() == 2);
  CHECK(ideal(kWorked).generators().size() == 5);
  CHECK(ideal("n=1; x1").to_string() == "n=1; x1");
  CHECK(ideal("n=3; x3^2, x1*x2, x1^2").to_string() == "n=3; x1^2, x1*x2, x3^2");
}

TEST_CASE("from_generators rejects bad input") {
  CHECK_THROWS_AS(MonomialIdeal::from_generators(3, {}), InvalidInput);
  CHECK_THROWS_AS(MonomialIdeal::from_generators(3, {Monomial::one(3)}), InvalidInput);
  CHECK_THROWS_AS(MonomialIdeal::from_generators(3, {Monomial::variable(2, 1)}), InvalidInput);
  CHECK_THROWS_AS(MonomialIdeal::from_generators(0, {Monomial::variable(2, 1)}), InvalidInput);
}

TEST_CASE("contains") {
  const auto I = ideal("n=3; x1*x2");
  CHECK(I.contains(Monomial(std::vector<Exponent>{1, 1, 1})));
  CHECK_FALSE(I.contains(Monomial::variable(3, 1)));
  CHECK(ideal(kWorkedSigma).contains(Monomial(std::vector<Exponent>{0, 0, 1, 1, 1})));
  CHECK_THROWS_AS(I.contains(Monomial::variable(4, 1)), InvalidInput);
}

TEST_CASE("squarefree counts") {
  auto counts = squarefree_counts(ideal(kWorkedSigma));
  CHECK(counts.d == 2);
  CHECK(counts.counts == testing::bigs({5, 10, 5, 1}));
  CHECK(counts.as_polynomial() == IntPolynomial{0, 0, 5, 10, 5, 1});
  counts = squarefree_counts(ideal("n=5; x1, x2, x3, x4, x5"));
  CHECK(counts.counts == testing::bigs({5, 10, 10, 5, 1}));
  CHECK_THROWS_AS(squarefree_counts(ideal(kWorked)), InvalidInput);
}

TEST_CASE("squarefree counts of a sigma image in 11 variables") {
  // sigma of (x1^2, x1*x2, ..., x1*x10, x2^2, x2*x3) in 10 variables
  const auto L2 = ideal("n=10; x1^2, x1*x2, x1*x3, x1*x4, x1*x5, x1*x6, x1*x7, x1*x8, x1*x9, x1*x10, x2^2, x2*x3");
  const auto image = sigma_ideal(L2);
  CHECK(image.m == 11);
  const auto counts = squarefree_counts(image.ideal);
  CHECK(counts.at(2) == 12);
  CHECK(counts.at(3) == 60);
}

TEST_CASE("squarefree counts match subset enumeration") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto I = testing::random_ideal(rng, n, 5, 8, true);
    const auto brute = testing::brute_squarefree_counts(I);
    for (bool parallel : {false, true}) {
      const auto counts = squarefree_counts(I, parallel);
      for (unsigned i = counts.d; i <= n; ++i) CHECK(counts.at(i) == brute[i]);
    }
  }
}

TEST_CASE("squarefree counts with many variables use exact arithmetic") {
  // (x1*x2, x3*x4) in 40 variables: everything minus the faces of two missing edges
  const auto I = ideal("n=40; x1*x2, x3*x4");
  const auto c = squarefree_counts(I);
  for (unsigned i = 2; i <= 40; ++i)
    CHECK(c.at(i) == binomial(40, i) - (binomial(40, i) - 2 * binomial(38, i - 2) + binomial(36, i - 4)));
}

TEST_CASE("hilbert numerators") {
  CHECK(hilbert_numerator(ideal(kWorked)) == IntPolynomial{0, 0, 5, -5, 0, 1});
  CHECK(hilbert_numerator(ideal("n=5; x1, x2, x3, x4, x5")) == IntPolynomial{0, 5, -10, 10, -5, 1});
  std::vector<BigInt> squares(21);
  for (long k = 1; k <= 10; ++k) squares[2 * k] = (k % 2 ? 1 : -1) * binomial(10, k);
  CHECK(hilbert_numerator(ideal("n=10; x1^2,x2^2,x3^2,x4^2,x5^2,x6^2,x7^2,x8^2,x9^2,x10^2")) ==
        IntPolynomial(squares));
}

TEST_CASE("closed-form numerators") {
  CHECK(hilbert_numerator_stable(ideal(kWorkedLex)) == IntPolynomial{0, 0, 5, -5, 0, 1});
  CHECK(hilbert_numerator_stable(ideal("n=4; x1*x2, x1*x3, x1*x4, x2*x3*x4")) == IntPolynomial{0, 0, 3, -2});
  const auto q = hilbert_numerator_stable(testing::lex100_ideal());
  CHECK(q.coeff(2) == 112);
  CHECK(q.coeff(3) == -5028);
  CHECK(q.coeff(4) == 161986);
  CHECK(q.coeff(5) == -3921940);
  CHECK(q.degree() == 101);
  CHECK(q.coeff(101) == -1);
  CHECK_THROWS_AS(hilbert_numerator_stable(ideal("n=2; x2")), InvalidInput);
}

TEST_CASE("numerators match enumeration on random ideals") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto I = testing::random_ideal(rng, n, 4, 6, false);
    const auto brute = testing::to_poly(testing::brute_numerator(I));
    CHECK(hilbert_numerator(I) == brute);
    CHECK(hilbert_series(I).numerator == brute);
    if (is_stable(I)) CHECK(hilbert_numerator_stable(I) == brute);
  }
}

TEST_CASE("numerator identity for squarefree ideals") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto I = testing::random_ideal(rng, n, 4, 7, true);
    const auto c = squarefree_counts(I);
    IntPolynomial sum;
    for (unsigned i = c.d; i <= n; ++i) sum.add_scaled_shifted(c.at(i), i, pow_one_minus_t(static_cast<unsigned>(n - i)));
    CHECK(sum == hilbert_numerator(I));
  }
}

TEST_CASE("stable closed form agrees on strongly stable ideals") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<Monomial> seeds;
    for (int i = 0; i < 2; ++i) seeds.push_back(testing::random_monomial(rng, n, 1, 3, false));
    const auto I = testing::borel_closure(n, seeds);
    REQUIRE(is_strongly_stable(I));
    CHECK(is_stable(I));
    CHECK(hilbert_numerator_stable(I) == hilbert_numerator(I));
  }
}

TEST_CASE("stability predicates") {
  CHECK(is_lex(ideal(kWorkedLex)));
  CHECK_FALSE(is_lex(ideal(kWorkedSigma)));
  // x1*x2 -> x1^2 leaves the sigma image, so it is only squarefree strongly stable.
  CHECK_FALSE(is_strongly_stable(ideal(kWorkedSigma)));
  CHECK(is_squarefree_strongly_stable(ideal(kWorkedSigma)));
  CHECK(is_squarefree_stable(ideal(kWorkedSigma)));
  CHECK_FALSE(is_stable(ideal("n=2; x2")));
  CHECK_FALSE(is_lex(ideal(kWorked)));
  CHECK(is_lex(testing::lex100_ideal()));
  CHECK(is_strongly_stable(ideal("n=3; x1^2, x1*x2, x1*x3, x2^2, x2*x3, x3^3")));
}

TEST_CASE("stability predicates match enumeration") {
  std::mt19937_64 rng(28);
  int stable = 0, strong = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto I = trial % 3 ? testing::random_ideal(rng, n, 3, 5, trial % 2)
                             : testing::borel_closure(n, {testing::random_monomial(rng, n, 1, 3, false)});
    const bool st = testing::brute_is_stable(I, false), ss = testing::brute_is_stable(I, true);
    stable += st;
    strong += ss;
    CHECK(is_stable(I) == st);
    CHECK(is_strongly_stable(I) == ss);
    if (I.is_squarefree()) {
      CHECK(is_squarefree_stable(I) == testing::brute_is_squarefree_stable(I));
      CHECK(is_squarefree_strongly_stable(I) == testing::brute_is_squarefree_strongly_stable(I));
    }
  }
  CHECK(stable > 20);
  CHECK(strong > 20);
}

TEST_CASE("is_lex matches enumeration") {
  std::mt19937_64 rng(25);
  int lex_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto I = trial % 2 ? testing::random_ideal(rng, n, 3, 4, false)
                             : testing::borel_closure(n, {testing::random_monomial(rng, n, 1, 3, false)});
    const bool want = testing::brute_is_lex(I);
    lex_seen += want;
    CHECK(is_lex(I) == want);
  }
  CHECK(lex_seen > 10);
}

TEST_CASE("sigma on ideals") {
  auto image = sigma_ideal(ideal(kWorkedLex));
  CHECK(image.ideal == ideal(kWorkedSigma));
  CHECK(image.m == 5);
  image = sigma_ideal(ideal("n=1; x1"));
  CHECK(image.ideal == ideal("n=1; x1"));
  CHECK(image.m == 1);
  image = sigma_ideal(ideal("n=3; x1^2, x1*x2, x1*x3, x2^3"));
  CHECK(image.ideal == ideal("n=4; x1*x2, x1*x3, x1*x4, x2*x3*x4"));
  CHECK(image.m == 4);
  CHECK_FALSE(sigma_ideal(ideal("n=2; x2^2")).source_strongly_stable);
}

TEST_CASE("sigma keeps the numerator of strongly stable ideals") {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto I = testing::borel_closure(n, {testing::random_monomial(rng, n, 1, 4, false)});
    const auto image = sigma_ideal(I);
    CHECK(image.source_strongly_stable);
    CHECK(image.ideal.is_squarefree());
    CHECK(hilbert_numerator(image.ideal) == hilbert_numerator(I));
  }
}

TEST_CASE("closed-form squarefree counts on sigma images") {
  std::mt19937_64 rng(29);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto I = testing::borel_closure(n, {testing::random_monomial(rng, n, 1, 3, false)});
    const auto image = sigma_ideal(I);
    if (image.m > 16) continue;
    ++checked;
    CHECK(testing::brute_is_squarefree_strongly_stable(image.ideal));
    const auto c = squarefree_counts_stable(image.ideal);
    const auto brute = testing::brute_squarefree_counts(image.ideal);
    for (unsigned i = 0; i <= image.m; ++i) CHECK(c.at(i) == brute[i]);
  }
  CHECK(checked > 40);
}

TEST_CASE("lowest numerator coefficient counts minimal-degree generators") {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 100; ++trial) {
    const auto I = testing::random_ideal(rng, 1 + rng() % 5, 4, 6, false);
    const auto q = hilbert_numerator(I);
    CHECK(q.coeff(0) == 0);
    long gens = 0;
    for (const auto& u : I.generators()) gens += u.degree() == I.min_degree();
    CHECK(q.low_degree() == I.min_degree());
    CHECK(q.coeff(I.min_degree()) == gens);
  }
}
