#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supercb/matrices.hpp"

#include <random>

using namespace supercb;

namespace {
const Shape s21{2, 1};
const Shape s22{2, 2};
} // namespace

TEST_CASE("mixed-block validity") {
    CHECK(Mat::unit(s21, 1, 2, 2).is_valid());
    CHECK_FALSE(Mat::unit(s21, 1, 3, 2).is_valid());
    CHECK(Mat::unit(s22, 3, 4, 2).is_valid());
}

TEST_CASE("margins and size") {
    Mat A = Mat::unit(s21, 1, 2).added(2, 3, 1);
    CHECK(A.ro() == Comp{1, 1, 0});
    CHECK(A.co() == Comp{0, 1, 1});
    Mat B = Mat::unit(s22, 1, 2, 5).added(3, 4, 2);
    CHECK(B.total() == 7);
}

TEST_CASE("norm") {
    CHECK(Mat::unit(s21, 1, 3).norm() == 3);
    CHECK(Mat::unit(s21, 1, 2).added(2, 3, 1).norm() == 2);
    CHECK(Mat::unit(s22, 1, 2, 7).norm() == 7);
}

TEST_CASE("order examples") {
    Mat chain = Mat::unit(s21, 1, 2).added(2, 3, 1);
    Mat hook = Mat::unit(s21, 1, 3);
    CHECK(preceq(chain, hook));
    CHECK(preceq(hook, hook));
    CHECK_FALSE(preceq(hook, chain));
    CHECK(prec(chain, hook));
    CHECK_FALSE(preceq_rc(chain, hook)); // margins differ
}

TEST_CASE("sign statistics") {
    for (const Mat& A : enumerate_upper(s22, 2)) CHECK(A.sign_bar() == 0);
    Mat B = Mat::unit(s22, 1, 4).add_diag({0, 0, 1, 0});
    CHECK(B.sign_bar() == 1);
    CHECK(Mat::diag(s22, {3, 1, 2, 0}).sign_hat() == 0);
}

TEST_CASE("hook sums and diagonal completion") {
    Mat A = Mat::unit(s21, 2, 1);
    CHECK(A.hooks() == Comp{1, 0, 0}); // column sums for a strictly lower matrix
    CHECK(a_lambda(A, {1, 0, 0}) == A);
    CHECK(a_lambda(A, {2, 1, 1}) == A.add_diag({1, 1, 1}));
    CHECK(a_lambda(A, {1, 1, 0}) == A.add_diag({0, 1, 0}));
    CHECK_THROWS_AS(a_lambda(A, {0, 1, 0}), std::invalid_argument);
    Mat B = Mat::unit(s21, 2, 1).added(1, 2, 1);
    CHECK(B.hooks() == Comp{2, 0, 0}); // co(minus part) + ro(plus part)
}

TEST_CASE("row statistics") {
    CHECK(stat_sigma(Mat::unit(s22, 1, 4), 3) == 1);
    Mat A4 = Mat::unit(s21, 1, 2, 4);
    CHECK(stat_f_cap(A4, 1, 2) == 4);
    CHECK(stat_f_cap(Mat(s21), 2, 1) == 0);
    CHECK(stat_fm(1, Mat(s22)) == 0);
    Mat L = Mat::unit(s22, 3, 1);
    CHECK(stat_gm(1, L) == 1);
}

TEST_CASE("composition statistics specialize to the single-box ones") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> md(0, 2);
    for (int t = 0; t < 100; ++t) {
        Mat A(s22);
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                const bool mixed = (i <= 2) != (j <= 2);
                A.at(i, j) = mixed ? md(rng) % 2 : md(rng);
            }
        for (int h = 1; h < 4; ++h) {
            Comp e(4, 0);
            e[h] = 1; // e_{h+1}
            if (h != 2) CHECK(stat_fh(e, A, h) == stat_f_cap(A, h, h + 1));
        }
    }
}

TEST_CASE("composition enumeration") {
    auto c = enumerate_compositions(2, 2);
    CHECK(c == std::vector<Comp>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(enumerate_compositions(3, 0) == std::vector<Comp>{{0, 0, 0}});
    Comp bound{0, 1, 1};
    CHECK(enumerate_compositions(3, 1, &bound) == std::vector<Comp>{{0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("partial order axioms on the exhaustive (2|2) universe") {
    std::vector<Mat> univ = enumerate_upper(s22, 1);
    CHECK(univ.size() == 64);
    for (const Mat& A : univ) CHECK(preceq(A, A));
    for (const Mat& A : univ)
        for (const Mat& B : univ) {
            if (preceq(A, B) && preceq(B, A)) CHECK(A == B);
            if (prec(B, A)) CHECK(B.norm() < A.norm());
        }
    for (const Mat& A : univ)
        for (const Mat& B : univ) {
            if (!preceq(A, B)) continue;
            for (const Mat& C : univ)
                if (preceq(B, C)) CHECK(preceq(A, C));
        }
}

TEST_CASE("transpose swaps margins and triangles") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> d(0, 2);
    for (int t = 0; t < 200; ++t) {
        Mat A(s22);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                const bool mixed = (i <= 2) != (j <= 2);
                A.at(i, j) = mixed ? d(rng) % 2 : d(rng);
            }
        CHECK(A.transpose().transpose() == A);
        CHECK(A.transpose().ro() == A.co());
        CHECK(A.transpose().co() == A.ro());
        CHECK(A.plus_part().transpose().is_strictly_lower());
        Mat L = A.minus_part();
        Comp lam = L.hooks();
        lam[d(rng) % 4] += d(rng);
        CHECK(a_lambda(L, lam).co() == lam);
    }
}

TEST_CASE("margin class enumeration matches brute force") {
    Comp rows{1, 1, 1}, cols{1, 1, 1};
    auto cls = enumerate_margin_class(s21, rows, cols);
    for (const Mat& D : cls) {
        CHECK(D.ro() == rows);
        CHECK(D.co() == cols);
        CHECK(D.is_valid());
    }
    long brute = 0;
    for (const Mat& D : enumerate_level(s21, 3))
        if (D.ro() == rows && D.co() == cols) ++brute;
    CHECK((long)cls.size() == brute);
}

TEST_CASE("text form") {
    Mat A = Mat::unit(s22, 1, 2, 2).added(1, 3, 1);
    CHECK(A.str() == "2E[1,2]+E[1,3]");
    CHECK(Mat(s21).str() == "0");
}
