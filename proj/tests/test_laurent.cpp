#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supercb/laurent.hpp"

#include <random>

using namespace supercb;

namespace {

Laurent v(int k) { return Laurent::monomial(k); }

Laurent random_poly(std::mt19937_64& rng, int lo = -6, int hi = 6) {
    std::uniform_int_distribution<int> nterms(0, 6), expd(lo, hi), coeffd(-9, 9);
    Laurent f;
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) f.add_term(expd(rng), coeffd(rng));
    return f;
}

} // namespace

TEST_CASE("bar involution on monomials and fixed points") {
    CHECK(v(1).bar() == v(-1));
    Laurent f = v(1) + v(-1);
    CHECK(f.bar() == f);
    CHECK((Laurent(1) + v(2)).bar() == Laurent(1) + v(-2));
}

TEST_CASE("gaussian integers") {
    CHECK(gauss_int(2, 2) == Laurent(1) + v(2));
    CHECK(gauss_int(1, -2) == Laurent(1));
    CHECK(gauss_int(3, -2) == Laurent(1) + v(-2) + v(-4));
    CHECK(gauss_int(0, 2).is_zero());
}

TEST_CASE("symmetric quantum integers") {
    CHECK(sym_int(1) == Laurent(1));
    CHECK(sym_int(2) == v(1) + v(-1));
    CHECK(sym_int(3, Parity::odd) == v(2) + Laurent(1) + v(-2));
    CHECK(sym_int_signed(-3) == -sym_int(3));
    CHECK(sym_int_signed(0).is_zero());
}

TEST_CASE("gaussian binomials") {
    CHECK(qq_binom(2, 1, 2) == Laurent(1) + v(2));
    CHECK(qq_binom(7, 0, 2) == Laurent(1));
    CHECK(qq_binom(7, 0, -2) == Laurent(1));
    CHECK(qq_binom(3, 1, 2) == Laurent(1) + v(2) + v(4));
    CHECK(qq_binom(2, 5, 2).is_zero());
}

TEST_CASE("exact division guards") {
    CHECK(divide_exact(gauss_int(4, 2), gauss_int(2, 2)) == Laurent(1) + v(4));
    CHECK_THROWS_AS(divide_exact(v(1) + Laurent(1), v(1) - Laurent(1)), std::domain_error);
}

TEST_CASE("antisymmetric solve") {
    CHECK(antisym_solve(v(1) - v(-1)) == -v(-1));
    CHECK(antisym_solve(Laurent()).is_zero());
    CHECK(antisym_solve(v(2) - v(-2) + v(1) - v(-1)) == -v(-1) - v(-2));
    CHECK_THROWS_AS(antisym_solve(v(1)), std::domain_error);
    CHECK_THROWS_AS(antisym_solve(Laurent(2)), std::domain_error);
}

TEST_CASE("Y decomposition") {
    auto [sym0, neg0] = y_decompose(Laurent(2));
    CHECK(sym0 == Laurent(2));
    CHECK(neg0.is_zero());

    CHECK_THROWS_AS(y_decompose(v(1) + Laurent(1) + v(-1)), std::domain_error);

    auto [sym1, neg1] = y_decompose(v(2) + v(-1));
    CHECK(sym1 == v(2) + v(-2));
    CHECK(neg1 == v(-1) - v(-2));
}

TEST_CASE("bar split is total and marks odd constants") {
    BarSplit s = bar_split(v(1) + Laurent(1) + v(-2));
    CHECK(s.odd_constant);
    CHECK(s.sym == v(1) + Laurent(1) + v(-1));
    CHECK(s.sym.bar_symmetric());
    CHECK(s.neg.only_negative_exponents());
    CHECK(s.sym + s.neg == v(1) + Laurent(1) + v(-2));
}

TEST_CASE("bar is a ring involution (randomized)") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 500; ++t) {
        Laurent f = random_poly(rng), g = random_poly(rng);
        CHECK((f * g).bar() == f.bar() * g.bar());
        CHECK((f + g).bar() == f.bar() + g.bar());
        CHECK(f.bar().bar() == f);
    }
}

TEST_CASE("antisym round trip (randomized)") {
    std::mt19937_64 rng(102);
    for (int t = 0; t < 500; ++t) {
        Laurent p = random_poly(rng, -8, -1);
        CHECK(antisym_solve(p - p.bar()) == p);
    }
}

TEST_CASE("shifted barred bracket equals the symmetric integer") {
    for (int i = 1; i <= 40; ++i) CHECK(gauss_int(i, 2).bar().shifted(i - 1) == sym_int(i));
}

TEST_CASE("binomial subset-of-subset identity") {
    for (int s : {2, -2})
        for (int n = 0; n <= 8; ++n)
            for (int k = 0; k <= n; ++k)
                for (int j = 0; j <= k; ++j)
                    CHECK(qq_binom(n, k, s) * qq_binom(k, j, s) ==
                          qq_binom(n, j, s) * qq_binom(n - j, k - j, s));
}

TEST_CASE("ring operations are commutative and distributive (randomized)") {
    std::mt19937_64 rng(103);
    for (int t = 0; t < 200; ++t) {
        Laurent f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f * g) * h == f * (g * h));
    }
}
