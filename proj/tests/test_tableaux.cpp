#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supercb/tableaux.hpp"

#include <algorithm>

using namespace supercb;

namespace {
const Shape s21{2, 1};
const Shape s11{1, 1};
} // namespace

TEST_CASE("family membership") {
    CHECK(partition_in_family({2, 1}, s21));
    CHECK(partition_in_family({3, 3}, s21));
    CHECK(partition_in_family({1, 1, 1, 1}, s21));
    CHECK(partition_in_family({1, 1, 1}, s21));
    CHECK_FALSE(partition_in_family({2, 2, 2}, s21));
}

TEST_CASE("two-cell column over (1|1)") {
    long total = 0;
    for (const Comp& mu : enumerate_compositions(2, 2))
        total += (long)enumerate_ssyt({1, 1}, mu, s11).size();
    CHECK(total == 2);
    CHECK(enumerate_ssyt({1, 1}, {1, 1}, s11).size() == 1);
    CHECK(enumerate_ssyt({1, 1}, {0, 2}, s11).size() == 1);
    CHECK(enumerate_ssyt({1, 1}, {2, 0}, s11).empty());
}

TEST_CASE("single row of even entries") {
    CHECK(enumerate_ssyt({4}, {4, 0, 0}, s21).size() == 1);
}

TEST_CASE("shape outside the family has no fillings") {
    const Partition pi{2, 2, 2}; // row 3 has width 2 > n = 1
    for (const Comp& mu : enumerate_compositions(3, 6))
        CHECK(enumerate_ssyt(pi, mu, s21).empty());
}

TEST_CASE("distinguished tableau and its weight") {
    CHECK(pi_tilde({2, 1}, s21) == Comp{2, 1, 0});
    CHECK(pi_tilde({1, 1}, s11) == Comp{1, 1});
    Tableau t = t_pi({2, 1}, s21);
    CHECK(t.rows == std::vector<std::vector<int>>{{1, 1}, {2}});
    CHECK(pi_tilde({3, 2, 1}, s21) == Comp{3, 2, 1});
}

TEST_CASE("uniqueness across a range of shapes") {
    for (Shape sh : {Shape{2, 1}, Shape{1, 1}, Shape{2, 2}})
        for (int r = 1; r <= 6; ++r)
            for (const Partition& pi : partitions_in_family(r, sh))
                CHECK(enumerate_ssyt(pi, pi_tilde(pi, sh), sh).size() == 1);
}

TEST_CASE("dominance order") {
    CHECK(dominates({2, 0}, {1, 1}));
    CHECK(dominates({2, 1}, {2, 1}));
    CHECK_FALSE(dominates({1, 1}, {2, 0}));
    CHECK_THROWS_AS(dominates({2}, {1}), std::invalid_argument);
}

TEST_CASE("content dominance of the distinguished weight") {
    for (int r = 1; r <= 5; ++r)
        for (const Partition& pi : partitions_in_family(r, s21)) {
            Comp tilde = pi_tilde(pi, s21);
            for (const Comp& mu : enumerate_compositions(3, r))
                if (!enumerate_ssyt(pi, mu, s21).empty()) CHECK(dominates(tilde, mu));
        }
}

TEST_CASE("block content symmetry of the total count") {
    const Shape sh{2, 2};
    for (int r = 1; r <= 5; ++r)
        for (const Partition& pi : partitions_in_family(r, sh))
            for (const Comp& mu : enumerate_compositions(4, r)) {
                Comp swapped_even{mu[1], mu[0], mu[2], mu[3]};
                Comp swapped_odd{mu[0], mu[1], mu[3], mu[2]};
                CHECK(enumerate_ssyt(pi, mu, sh).size() ==
                      enumerate_ssyt(pi, swapped_even, sh).size());
                CHECK(enumerate_ssyt(pi, mu, sh).size() ==
                      enumerate_ssyt(pi, swapped_odd, sh).size());
            }
}

TEST_CASE("distinguished weight is weakly decreasing in both blocks") {
    for (Shape sh : {Shape{2, 1}, Shape{2, 2}, Shape{1, 2}})
        for (int r = 1; r <= 6; ++r)
            for (const Partition& pi : partitions_in_family(r, sh)) {
                Comp t = pi_tilde(pi, sh);
                for (int i = 1; i < sh.m; ++i) CHECK(t[i - 1] >= t[i]);
                for (int i = sh.m + 1; i < sh.size(); ++i) CHECK(t[i - 1] >= t[i]);
            }
}

TEST_CASE("counting is consistent with direct enumeration") {
    TableauCount c = count_tableaux({2, 1}, s21);
    long direct = 0;
    for (const Comp& mu : enumerate_compositions(3, 3))
        direct += (long)enumerate_ssyt({2, 1}, mu, s21).size();
    CHECK(c.total == direct);
}
