#include "supercb/golden.hpp"

namespace supercb {

Mat mat21(int a, int b, int c) {
    Mat A(Shape{2, 1});
    A.at(1, 2) = a;
    A.at(1, 3) = b;
    A.at(2, 3) = c;
    return A;
}

Mat mat22(int al, int be, int de, int ga, int ep, int ph) {
    Mat A(Shape{2, 2});
    A.at(1, 2) = al;
    A.at(1, 3) = be;
    A.at(1, 4) = de;
    A.at(2, 3) = ga;
    A.at(2, 4) = ep;
    A.at(3, 4) = ph;
    return A;
}

namespace {

Laurent vpow(int k) { return Laurent::monomial(k); }

GoldenCase make(std::string name, Mat target,
                std::vector<std::pair<Mat, Laurent>> lower = {}) {
    GoldenCase g{std::move(name), target, {}, {}, false};
    g.expansion.emplace(target, Laurent(1));
    for (auto& [B, c] : lower)
        if (!c.is_zero()) g.expansion.emplace(B, c);
    return g;
}

void set_witness(GoldenCase& g, std::vector<std::pair<Mat, Laurent>> w) {
    g.witness_known = true;
    for (auto& [B, c] : w)
        if (!c.is_zero()) g.witness.emplace(B, c);
}

} // namespace

std::vector<GoldenCase> golden_gl21(int a) {
    std::vector<GoldenCase> out;
    out.push_back(make("E1^(a)", mat21(a, 0, 0)));
    out.push_back(make("E2 E1^(a)", mat21(a, 0, 1)));
    {
        GoldenCase g = make("E1 E2 E1^(a) family", mat21(a, 1, 0),
                            {{mat21(a + 1, 0, 1), vpow(-(a + 1))}});
        set_witness(g, {{mat21(a + 1, 0, 1), sym_int(a)}});
        out.push_back(std::move(g));
    }
    out.push_back(make("E2 E1 E2 E1^(a)", mat21(a, 1, 1)));
    return out;
}

std::vector<GoldenCase> golden_gl22(int a, int f) {
    std::vector<GoldenCase> out;

    out.push_back(make("(0)", mat22(a, 0, 0, 0, 0, f)));
    out.push_back(make("(1)", mat22(a, 0, 0, 1, 0, f)));
    {
        GoldenCase g = make("(2)", mat22(a, 1, 0, 0, 0, f),
                            {{mat22(a + 1, 0, 0, 1, 0, f), vpow(-a - 1)}});
        set_witness(g, {{mat22(a + 1, 0, 0, 1, 0, f), sym_int(a)}});
        out.push_back(std::move(g));
    }
    {
        GoldenCase g = make("(3)", mat22(a, 0, 0, 0, 1, f),
                            {{mat22(a, 0, 0, 1, 0, f + 1), -vpow(-f - 1)}});
        set_witness(g, {{mat22(a, 0, 0, 1, 0, f + 1), sym_int(f + 2)}});
        out.push_back(std::move(g));
    }
    {
        // branch split only changes the printed form of the last coefficient
        Laurent last;
        std::string name;
        if (a <= f) {
            last = -vpow(-f - a - 2);
            name = "(4a)";
        } else if (f == a - 1) {
            last = vpow(-f - 1) * sym_int(a) - vpow(-a - 1) * sym_int(f + 2);
            name = "(4b)";
        } else {
            last = -vpow(-f - a - 2);
            name = "(4c)";
        }
        out.push_back(make(name, mat22(a, 0, 1, 0, 0, f),
                           {{mat22(a + 1, 0, 0, 0, 1, f), vpow(-a - 1)},
                            {mat22(a, 1, 0, 0, 0, f + 1), -vpow(-f - 1)},
                            {mat22(a + 1, 0, 0, 1, 0, f + 1), last}}));
    }
    out.push_back(make("(5)", mat22(a, 1, 0, 1, 0, f)));
    out.push_back(make("(6)", mat22(a, 0, 0, 1, 1, f)));
    out.push_back(make("(7)", mat22(a, 1, 0, 0, 1, f),
                       {{mat22(a + 1, 0, 0, 1, 1, f), vpow(-a - 1)},
                        {mat22(a, 1, 0, 1, 0, f + 1), -vpow(-f - 1)}}));
    if (a == 0) {
        out.push_back(make("(8a)", mat22(0, 0, 1, 1, 0, f),
                           {{mat22(0, 1, 0, 0, 1, f), vpow(-1)},
                            {mat22(1, 0, 0, 1, 1, f), vpow(-2)}}));
    } else {
        out.push_back(make("(8b)", mat22(a, 0, 1, 1, 0, f),
                           {{mat22(a, 1, 0, 0, 1, f), vpow(-1)},
                            {mat22(a + 1, 0, 0, 1, 1, f), vpow(-a) + vpow(-a - 2)}}));
    }
    {
        GoldenCase g = make("(9)", mat22(a, 1, 1, 0, 0, f),
                            {{mat22(a + 1, 0, 1, 1, 0, f), vpow(-a - 1)},
                             {mat22(a + 1, 1, 0, 0, 1, f), vpow(-a - 2)},
                             {mat22(a + 2, 0, 0, 1, 1, f), vpow(-2 * a - 4)}});
        set_witness(g, {{mat22(a + 1, 0, 1, 1, 0, f), sym_int(a)},
                        {mat22(a + 1, 1, 0, 0, 1, f), sym_int(a + 1)},
                        {mat22(a + 2, 0, 0, 1, 1, f), -(sym_int(a + 1) * sym_int(a + 1))}});
        out.push_back(std::move(g));
    }
    out.push_back(make("(10)", mat22(a, 1, 0, 1, 1, f)));
    out.push_back(make("(11)", mat22(a, 1, 1, 1, 0, f),
                       {{mat22(a + 1, 1, 0, 1, 1, f), vpow(-a - 1)}}));
    out.push_back(make("(12)", mat22(a, 0, 1, 1, 1, f),
                       {{mat22(a, 1, 0, 1, 1, f + 1), vpow(-f - 1)}}));
    {
        Laurent last;
        std::string name;
        if (a <= f) {
            last = vpow(-f - a - 2);
            name = "(13a)";
        } else if (f == a - 1) {
            last = vpow(-a - 1) * sym_int(f + 2) - vpow(-f - 1) * sym_int(a);
            name = "(13b)";
        } else {
            last = vpow(-f - a - 2);
            name = "(13c)";
        }
        out.push_back(make(name, mat22(a, 1, 1, 0, 1, f),
                           {{mat22(a, 1, 1, 1, 0, f + 1), vpow(-f - 1)},
                            {mat22(a + 1, 0, 1, 1, 1, f), vpow(-a - 1)},
                            {mat22(a + 1, 1, 0, 1, 1, f + 1), last}}));
    }
    out.push_back(make("(14)", mat22(a, 1, 1, 1, 1, f)));
    return out;
}

} // namespace supercb
