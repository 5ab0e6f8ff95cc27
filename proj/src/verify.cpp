#include "supercb/verify.hpp"

#include "supercb/golden.hpp"
#include "supercb/laurent.hpp"
#include "supercb/schur.hpp"
#include "supercb/stable.hpp"
#include "supercb/tableaux.hpp"
#include "supercb/uplus.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace supercb {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::map<Mat, Laurent> record_expansion(const CanonicalRecord& rec) { return rec.expansion; }

std::string mat_line(const Mat& A) { return A.str(); }

Laurent random_laurent(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 6), expd(-6, 6), coeffd(-9, 9);
    Laurent f;
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) f.add_term(expd(rng), coeffd(rng));
    return f;
}

} // namespace

CheckResult check_golden_gl21(int a_max) {
    Timer tm;
    CheckResult res{"gl(2|1) golden table"};
    res.pass = true;
    UplusContext ctx(Shape{2, 1});
    std::ostringstream detail;
    for (int a = 0; a <= a_max; ++a) {
        for (const GoldenCase& g : golden_gl21(a)) {
            ++res.cases;
            CanonicalRecord rec = ctx.canonical(g.target);
            if (record_expansion(rec) != g.expansion) {
                res.pass = false;
                detail << "mismatch " << g.name << " a=" << a << "; ";
            }
            if (g.witness_known) {
                CanonicalRecord sub = ctx.layered_subtraction(g.target);
                if (!sub.witness || *sub.witness != g.witness) {
                    res.pass = false;
                    detail << "witness mismatch " << g.name << " a=" << a << "; ";
                }
            }
        }
    }
    res.detail = detail.str();
    res.seconds = tm.elapsed();
    return res;
}

CheckResult check_golden_gl22(int a_max, int f_max) {
    Timer tm;
    CheckResult res{"gl(2|2) golden table"};
    res.pass = true;
    UplusContext ctx(Shape{2, 2});
    std::ostringstream detail;
    for (int a = 0; a <= a_max; ++a)
        for (int f = 0; f <= f_max; ++f) {
            for (const GoldenCase& g : golden_gl22(a, f)) {
                ++res.cases;
                CanonicalRecord rec = ctx.canonical(g.target);
                if (record_expansion(rec) != g.expansion) {
                    res.pass = false;
                    detail << "mismatch " << g.name << " a=" << a << " f=" << f << "; ";
                }
                if (g.witness_known) {
                    CanonicalRecord sub = ctx.layered_subtraction(g.target);
                    if (!sub.witness || *sub.witness != g.witness) {
                        res.pass = false;
                        detail << "witness mismatch " << g.name << " a=" << a << " f=" << f << "; ";
                    }
                }
            }
        }
    res.detail = detail.str();
    res.seconds = tm.elapsed();
    return res;
}

CheckResult check_pbw(Shape sh, int entry_max) {
    Timer tm;
    CheckResult res{"PBW oracle (" + std::to_string(sh.m) + "|" + std::to_string(sh.n) + ")"};
    res.pass = true;
    UplusContext ctx(sh);
    std::ostringstream detail;
    for (const Mat& A : enumerate_upper(sh, entry_max)) {
        ++res.cases;
        Element lhs = ctx.pbw(A);
        Element rhs = ctx.basis(A);
        if (lhs != rhs) {
            res.pass = false;
            detail << "pbw mismatch at " << mat_line(A) << "; ";
        }
    }
    res.detail = detail.str();
    res.seconds = tm.elapsed();
    return res;
}

CheckResult check_serre(Shape sh, long norm_bound) {
    Timer tm;
    CheckResult res{"defining relations (" + std::to_string(sh.m) + "|" + std::to_string(sh.n) + ")"};
    UplusContext ctx(sh);
    SerreReport rep = serre_check(ctx, norm_bound);
    res.pass = rep.ok();
    res.cases = rep.relations_checked;
    std::ostringstream detail;
    for (const auto& v : rep.violations) detail << v.relation << " at " << mat_line(v.witness) << "; ";
    res.detail = detail.str();
    res.seconds = tm.elapsed();
    return res;
}

CheckResult check_qs3(Shape sh, int r_max) {
    Timer tm;
    CheckResult res{"level-r commutator identity (" + std::to_string(sh.m) + "|" +
                    std::to_string(sh.n) + ")"};
    res.pass = true;
    UplusContext up(sh);
    const int N = sh.size(), m = sh.m;
    std::ostringstream detail;
    for (int r = 0; r <= r_max; ++r) {
        SchurContext sc(up, r);
        for (const Mat& D : enumerate_level(sh, r)) {
            SchurElement x = sc.basis(D);
            for (int h = 1; h < N; ++h)
                for (int k = 1; k < N; ++k) {
                    ++res.cases;
                    SchurElement lhs = sc.left_mult_E(h, 1, sc.left_mult_F(k, 1, x));
                    SchurElement fe = sc.left_mult_F(k, 1, sc.left_mult_E(h, 1, x));
                    if (h == m && k == m)
                        lhs += fe;
                    else
                        lhs -= fe;
                    SchurElement rhs = sc.zero();
                    if (h == k) {
                        Comp ro = D.ro();
                        const int dot = sh.sign_at(h) * ro[h - 1] - sh.sign_at(h + 1) * ro[h];
                        Laurent num = Laurent::monomial(dot) - Laurent::monomial(-dot);
                        Laurent den = Laurent::monomial(sh.sign_at(h)) -
                                      Laurent::monomial(-sh.sign_at(h));
                        rhs = x.scaled(divide_exact(num, den));
                    }
                    if (lhs != rhs) {
                        res.pass = false;
                        detail << "h=" << h << " k=" << k << " r=" << r << " at "
                               << mat_line(D) << "; ";
                    }
                }
        }
    }
    res.detail = detail.str();
    res.seconds = tm.elapsed();
    return res;
}

CheckResult check_canonical_axioms() {
    Timer tm;
    CheckResult res{"canonical-basis axioms"};
    res.pass = true;
    long parity_events = 0;
    long dropped = 0;
    std::ostringstream detail;

    auto run = [&](UplusContext& ctx, const std::vector<Mat>& targets) {
        for (const Mat& A : targets) {
            ++res.cases;
            CanonicalRecord rec = ctx.canonical(A);
            CanonicalRecord sub = ctx.layered_subtraction(A);
            parity_events += sub.parity_events;
            if (sub.expansion != rec.expansion) {
                res.pass = false;
                detail << "subtraction-route mismatch at " << mat_line(A) << "; ";
                continue;
            }
            bool uni = true;
            Element el = ctx.zero();
            for (const auto& [B, c] : rec.expansion) {
                el.add_term(B, c);
                if (B == A) {
                    if (!(c == Laurent(1))) uni = false;
                } else {
                    if (!c.only_negative_exponents() || !prec(B, A)) uni = false;
                }
            }
            if (!uni) {
                res.pass = false;
                detail << "triangularity fails at " << mat_line(A) << "; ";
            }
            if (ctx.bar_element(el) != el) {
                res.pass = false;
                detail << "not bar-invariant at " << mat_line(A) << "; ";
            }
            try {
                std::vector<int> w = ctx.weight(el);
                (void)w;
            } catch (const std::exception&) {
                res.pass = false;
                detail << "not weight-homogeneous at " << mat_line(A) << "; ";
            }
        }
    };

    {
        UplusContext ctx(Shape{2, 1});
        std::vector<Mat> targets;
        for (int a = 0; a <= 6; ++a)
            for (const GoldenCase& g : golden_gl21(a)) targets.push_back(g.target);
        for (const Mat& A : enumerate_upper(Shape{2, 1}, 3)) targets.push_back(A);
        run(ctx, targets);
        dropped += ctx.dropped_terms();
    }
    {
        UplusContext ctx(Shape{1, 2});
        run(ctx, enumerate_upper(Shape{1, 2}, 3));
        dropped += ctx.dropped_terms();
    }
    {
        UplusContext ctx(Shape{2, 2});
        std::vector<Mat> targets;
        for (int a = 0; a <= 3; ++a)
            for (int f = 0; f <= 3; ++f)
                for (const GoldenCase& g : golden_gl22(a, f)) targets.push_back(g.target);
        for (const Mat& A : enumerate_upper(Shape{2, 2}, 2)) targets.push_back(A);
        run(ctx, targets);
        dropped += ctx.dropped_terms();
    }

    std::ostringstream d2;
    d2 << detail.str() << "odd-constant subtraction multiples: " << parity_events
       << ", invalid-matrix terms dropped: " << dropped;
    res.detail = d2.str();
    res.seconds = tm.elapsed();
    return res;
}

CheckResult check_stabilization() {
    Timer tm;
    CheckResult res{"stabilized multiplication"};
    res.pass = true;
    std::ostringstream detail;

    struct Inst {
        Shape sh;
        Mat A;
        int h;
        std::vector<int> j;
    };
    const Shape s21{2, 1}, s12{1, 2}, s22{2, 2};
    auto M = [](Shape sh, std::vector<std::pair<std::pair<int, int>, int>> es) {
        Mat A(sh);
        for (auto& [ij, v] : es) A.at(ij.first, ij.second) = v;
        return A;
    };
    std::vector<Inst> insts = {
        {s21, M(s21, {{{2, 1}, 1}}), 1, {0, 0, 0}},
        {s21, M(s21, {{{2, 1}, 1}}), 2, {0, 0, 0}},
        {s21, Mat(s21), 1, {0, 0, 0}},
        {s21, Mat(s21), 2, {1, 0, -1}},
        {s21, M(s21, {{{1, 2}, 1}}), 1, {0, 0, 0}},
        {s21, M(s21, {{{1, 2}, 1}}), 2, {0, 0, 0}},
        {s21, M(s21, {{{2, 3}, 1}}), 2, {0, 1, 1}},
        {s21, M(s21, {{{2, 1}, 1}, {{3, 2}, 1}}), 2, {0, 0, 0}},
        {s21, M(s21, {{{1, 2}, 1}, {{2, 1}, 1}}), 1, {0, 0, 0}},
        {s12, M(s12, {{{2, 1}, 1}}), 1, {0, 0, 0}},
        {s12, M(s12, {{{2, 3}, 1}}), 1, {0, 0, 0}},
        {s12, M(s12, {{{2, 3}, 1}}), 2, {0, 0, 0}},
        {s12, M(s12, {{{3, 1}, 1}, {{1, 2}, 1}}), 2, {1, -1, 0}},
        {s22, M(s22, {{{1, 2}, 1}, {{3, 4}, 1}}), 1, {0, 0, 0, 0}},
        {s22, M(s22, {{{1, 2}, 1}, {{3, 4}, 1}}), 2, {0, 0, 0, 0}},
        {s22, M(s22, {{{1, 2}, 1}, {{3, 4}, 1}}), 3, {0, 0, 0, 0}},
        {s22, M(s22, {{{2, 1}, 1}, {{4, 3}, 1}}), 2, {0, 0, 0, 0}},
        {s22, M(s22, {{{3, 2}, 1}}), 2, {0, 0, 0, 0}},
        {s22, M(s22, {{{2, 4}, 1}}), 3, {1, 0, 0, -1}},
        {s22, M(s22, {{{3, 1}, 1}, {{1, 3}, 1}}), 2, {0, 1, 1, 0}},
    };

    std::map<std::pair<int, int>, UplusContext> ups;
    for (const Inst& in : insts) {
        ++res.cases;
        auto key = std::make_pair(in.sh.m, in.sh.n);
        auto it = ups.try_emplace(key, in.sh).first;
        const int base = in.A.total() + 1;
        StabInstanceReport rep =
            verify_stabilization(it->second, in.A, in.h, in.j, {base, base + 1, base + 2});
        if (!rep.pass) {
            res.pass = false;
            detail << "instance " << mat_line(in.A) << " h=" << in.h << ": " << rep.detail << "; ";
        }
    }
    res.detail = detail.str();
    res.seconds = tm.elapsed();
    return res;
}

CheckResult check_thm54(Shape sh, int r) {
    Timer tm;
    CheckResult res{"lower canonical image vs Xi, r=" + std::to_string(r)};
    res.pass = true;
    UplusContext up(sh);
    SchurContext sc(up, r);
    std::ostringstream detail;

    for (const Mat& A : enumerate_lower(sh, r)) {
        if (A.total() > r) continue;
        Element cminus(sh, Side::minus);
        for (const auto& [B, c] : canonical_minus(up, A).expansion) cminus.add_term(B, c);
        SchurElement cA = sc.eta(cminus);

        SchurElement total = sc.zero();
        const Comp h = A.hooks();
        for (const Comp& lam : enumerate_compositions(sh.size(), r)) {
            if (!comp_leq(h, lam)) continue;
            ++res.cases;
            Mat Al = a_lambda(A, lam);
            SchurElement xi = sc.canonical_Xi(Al);
            SchurElement lhs = SchurContext::right_mult_idempotent(cA, lam);
            if (Al.sign_bar()) lhs = lhs.scaled(Laurent(-1));
            if (lhs != xi) {
                res.pass = false;
                detail << "per-weight mismatch A=" << mat_line(A) << " lam sum; ";
            }
            total += Al.sign_bar() ? xi.scaled(Laurent(-1)) : xi;
        }
        if (total != cA) {
            res.pass = false;
            detail << "sum mismatch A=" << mat_line(A) << "; ";
        }
    }
    res.detail = detail.str();
    res.seconds = tm.elapsed();
    return res;
}

CheckResult check_pbw_product(Shape sh, int r_max) {
    Timer tm;
    CheckResult res{"triangular triple products"};
    res.pass = true;
    std::ostringstream detail;
    UplusContext up(sh);
    for (int r = 1; r <= r_max; ++r) {
        SchurContext sc(up, r);
        for (const Mat& A : enumerate_zero_diag(sh, r)) {
            const Comp h = A.hooks();
            for (const Comp& lam : enumerate_compositions(sh.size(), r)) {
                ++res.cases;
                SchurElement P = sc.pbw_product(A, lam);
                if (comp_leq(h, lam)) {
                    Mat Al = a_lambda(A, lam);
                    auto it = P.terms.find(Al);
                    Laurent lead = it == P.terms.end() ? Laurent() : it->second;
                    Laurent want = Al.sign_bar() ? Laurent(-1) : Laurent(1);
                    if (lead != want) {
                        res.pass = false;
                        detail << "leading term A=" << mat_line(A) << " r=" << r << "; ";
                    }
                    for (const auto& [C, c] : P.terms) {
                        if (C == Al) continue;
                        if (!(preceq_rc(C, Al) && C != Al)) {
                            res.pass = false;
                            detail << "support not lower A=" << mat_line(A) << " r=" << r << "; ";
                            break;
                        }
                    }
                } else {
                    for (const auto& [C, c] : P.terms) {
                        if (C.plus_part() == A.plus_part() && C.minus_part() == A.minus_part()) {
                            res.pass = false;
                            detail << "unexpected leading slot A=" << mat_line(A) << "; ";
                            break;
                        }
                    }
                }
            }
        }
    }
    res.detail = detail.str();
    res.seconds = tm.elapsed();
    return res;
}

CheckResult check_tableaux() {
    Timer tm;
    CheckResult res{"supertableaux"};
    res.pass = true;
    std::ostringstream detail;
    for (Shape sh : {Shape{2, 1}, Shape{2, 2}, Shape{1, 2}}) {
        for (int r = 1; r <= 6; ++r) {
            for (const Partition& pi : partitions_in_family(r, sh)) {
                ++res.cases;
                Comp tilde = pi_tilde(pi, sh);
                std::vector<Tableau> distinguished = enumerate_ssyt(pi, tilde, sh);
                if (distinguished.size() != 1) {
                    res.pass = false;
                    detail << "T_pi not unique; ";
                    continue;
                }
                for (const Comp& mu : enumerate_compositions(sh.size(), r)) {
                    if (enumerate_ssyt(pi, mu, sh).empty()) continue;
                    if (!dominates(tilde, mu)) {
                        res.pass = false;
                        detail << "dominance fails; ";
                    }
                }
            }
        }
    }
    res.detail = detail.str();
    res.seconds = tm.elapsed();
    return res;
}

CheckResult check_laurent_properties(unsigned seed, int cases) {
    Timer tm;
    CheckResult res{"exact arithmetic properties"};
    res.pass = true;
    std::ostringstream detail;
    std::mt19937_64 rng(seed);

    for (int t = 0; t < cases; ++t) {
        ++res.cases;
        Laurent f = random_laurent(rng), g = random_laurent(rng);
        if ((f * g).bar() != f.bar() * g.bar() || f.bar().bar() != f ||
            (f + g).bar() != f.bar() + g.bar()) {
            res.pass = false;
            detail << "bar not a ring involution; ";
            break;
        }
    }
    for (int t = 0; t < cases; ++t) {
        ++res.cases;
        Laurent p;
        std::uniform_int_distribution<int> expd(-8, -1), coeffd(-9, 9), nterms(0, 5);
        const int k = nterms(rng);
        for (int i = 0; i < k; ++i) p.add_term(expd(rng), coeffd(rng));
        if (antisym_solve(p - p.bar()) != p) {
            res.pass = false;
            detail << "antisym round trip fails; ";
            break;
        }
    }
    for (int i = 1; i <= 40; ++i) {
        ++res.cases;
        if (gauss_int(i, 2).bar().shifted(i - 1) != sym_int(i)) {
            res.pass = false;
            detail << "bracket identity fails at " << i << "; ";
        }
    }
    for (int s : {2, -2})
        for (int n = 0; n <= 8; ++n)
            for (int k = 0; k <= n; ++k)
                for (int j = 0; j <= k; ++j) {
                    ++res.cases;
                    if (qq_binom(n, k, s) * qq_binom(k, j, s) !=
                        qq_binom(n, j, s) * qq_binom(n - j, k - j, s)) {
                        res.pass = false;
                        detail << "subset identity fails; ";
                    }
                }
    res.detail = detail.str();
    res.seconds = tm.elapsed();
    return res;
}

CheckResult check_matrices_properties(unsigned seed, int cases) {
    Timer tm;
    CheckResult res{"super matrix order properties"};
    res.pass = true;
    std::ostringstream detail;
    std::mt19937_64 rng(seed);
    const Shape sh{2, 2};

    std::vector<Mat> univ = enumerate_upper(sh, 1);
    for (const Mat& A : univ) {
        ++res.cases;
        if (!preceq(A, A)) {
            res.pass = false;
            detail << "not reflexive; ";
        }
    }
    for (const Mat& A : univ)
        for (const Mat& B : univ) {
            ++res.cases;
            if (preceq(A, B) && preceq(B, A) && A != B) {
                res.pass = false;
                detail << "not antisymmetric; ";
            }
            if (prec(B, A) && !(B.norm() < A.norm())) {
                res.pass = false;
                detail << "norm not monotone; ";
            }
        }
    for (const Mat& A : univ)
        for (const Mat& B : univ) {
            if (!preceq(A, B)) continue;
            for (const Mat& C : univ) {
                if (preceq(B, C) && !preceq(A, C)) {
                    res.pass = false;
                    detail << "not transitive; ";
                }
            }
        }

    std::uniform_int_distribution<int> entry(0, 2);
    for (int t = 0; t < cases; ++t) {
        ++res.cases;
        Mat A(sh);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                const bool mixed = (i <= 2) != (j <= 2);
                A.at(i, j) = mixed ? entry(rng) % 2 : entry(rng);
            }
        if (A.transpose().transpose() != A || A.transpose().ro() != A.co() ||
            A.transpose().co() != A.ro()) {
            res.pass = false;
            detail << "transpose involution fails; ";
            break;
        }
        Mat L = A.minus_part();
        Comp h = L.hooks();
        Comp lam = h;
        for (int i = 0; i < 4; ++i) lam[i] += entry(rng);
        if (a_lambda(L, lam).co() != lam) {
            res.pass = false;
            detail << "column margins of completed matrix wrong; ";
            break;
        }
    }
    res.detail = detail.str();
    res.seconds = tm.elapsed();
    return res;
}

std::vector<CheckResult> run_acceptance() {
    std::vector<CheckResult> out;

    CheckResult c1 = check_golden_gl21(6);
    c1.name = "[1] " + c1.name;
    out.push_back(c1);

    CheckResult c2 = check_golden_gl22(3, 3);
    c2.name = "[2] " + c2.name;
    out.push_back(c2);

    {
        CheckResult a = check_pbw(Shape{2, 2}, 2);
        CheckResult b = check_pbw(Shape{2, 1}, 3);
        CheckResult c = check_pbw(Shape{1, 2}, 3);
        CheckResult tot{"[3] PBW oracle (2|2),(2|1),(1|2)"};
        tot.pass = a.pass && b.pass && c.pass;
        tot.cases = a.cases + b.cases + c.cases;
        tot.detail = a.detail + b.detail + c.detail;
        tot.seconds = a.seconds + b.seconds + c.seconds;
        out.push_back(tot);
    }
    {
        CheckResult s1 = check_serre(Shape{2, 1}, 6);
        CheckResult s2 = check_serre(Shape{1, 2}, 6);
        CheckResult s3 = check_serre(Shape{2, 2}, 6);
        CheckResult q1 = check_qs3(Shape{2, 1}, 3);
        CheckResult q2 = check_qs3(Shape{1, 2}, 3);
        CheckResult tot{"[4] defining relations + level-r commutators"};
        tot.pass = s1.pass && s2.pass && s3.pass && q1.pass && q2.pass;
        tot.cases = s1.cases + s2.cases + s3.cases + q1.cases + q2.cases;
        tot.detail = s1.detail + s2.detail + s3.detail + q1.detail + q2.detail;
        tot.seconds = s1.seconds + s2.seconds + s3.seconds + q1.seconds + q2.seconds;
        out.push_back(tot);
    }
    {
        CheckResult c5 = check_canonical_axioms();
        c5.name = "[5] " + c5.name;
        out.push_back(c5);
    }
    {
        CheckResult c6 = check_stabilization();
        c6.name = "[6] " + c6.name;
        out.push_back(c6);
    }
    {
        CheckResult a = check_thm54(Shape{2, 1}, 1);
        CheckResult b = check_thm54(Shape{2, 1}, 2);
        CheckResult c = check_thm54(Shape{2, 1}, 3);
        CheckResult tot{"[7] lower canonical image vs Xi, r=1,2,3"};
        tot.pass = a.pass && b.pass && c.pass;
        tot.cases = a.cases + b.cases + c.cases;
        tot.detail = a.detail + b.detail + c.detail;
        tot.seconds = a.seconds + b.seconds + c.seconds;
        out.push_back(tot);
    }
    {
        CheckResult c8 = check_pbw_product(Shape{2, 1}, 3);
        c8.name = "[8] " + c8.name;
        out.push_back(c8);
    }
    {
        CheckResult c9 = check_tableaux();
        c9.name = "[9] " + c9.name;
        out.push_back(c9);
    }
    {
        CheckResult a = check_laurent_properties(20240601u, 500);
        CheckResult b = check_matrices_properties(20240602u, 500);
        CheckResult tot{"[10] property suites"};
        tot.pass = a.pass && b.pass;
        tot.cases = a.cases + b.cases;
        tot.detail = a.detail + b.detail;
        tot.seconds = a.seconds + b.seconds;
        out.push_back(tot);
    }
    return out;
}

std::string format_result(const CheckResult& r) {
    std::ostringstream out;
    out << r.name << " (" << r.cases << " cases, " << r.seconds << "s): "
        << (r.pass ? "PASS" : "FAIL");
    if (!r.detail.empty()) out << "  -- " << r.detail;
    return out.str();
}

} // namespace supercb
