#include "supercb/uplus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace supercb {

void Element::add_term(const Mat& A, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(A, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [A, c] : o.terms) add_term(A, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [A, c] : o.terms) add_term(A, -c);
    return *this;
}

Element Element::scaled(const Laurent& c) const {
    Element r(sh, side);
    if (c.is_zero()) return r;
    for (const auto& [A, k] : terms) r.terms.emplace(A, c * k);
    return r;
}

std::string Element::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [A, c] : terms) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")*(" << A.str() << ")(0)";
    }
    return out.str();
}

Element UplusContext::identity(Side side) const {
    Element e(sh_, side);
    e.terms.emplace(Mat(sh_), Laurent(1));
    return e;
}

Element UplusContext::basis(const Mat& A) const {
    if (!A.is_valid()) throw std::invalid_argument("invalid matrix");
    Side side;
    if (A.is_strictly_upper())
        side = Side::plus;
    else if (A.is_strictly_lower())
        side = Side::minus;
    else
        throw std::invalid_argument("basis matrix must be strictly triangular");
    Element e(sh_, side);
    e.terms.emplace(A, Laurent(1));
    return e;
}

Element UplusContext::left_mult_divided_E(int h, int p, const Element& x) const {
    const int N = sh_.size(), m = sh_.m;
    if (h < 1 || h >= N) throw std::invalid_argument("generator index out of range");
    if (p < 1) throw std::invalid_argument("divided power must be positive");
    if (x.side != Side::plus) throw std::invalid_argument("plus-side operation");

    Element out(sh_, Side::plus);
    if (h == m && p >= 2) return out;

    const int sgn_h = sh_.sign_at(h);
    const int step_h = sh_.step(h);

    for (const auto& [A, c] : x.terms) {
        if (h == m) {
            // single box from row m+1 to row m, with sign
            auto emit = [&](int k) {
                Mat T = A.added(m, k, 1);
                if (k != m + 1) T.at(m + 1, k) -= 1;
                if (!T.is_valid()) {
                    ++dropped_;
                    return;
                }
                Laurent coeff = Laurent::monomial(sgn_h * stat_f_cap(A, m, k)) *
                                gauss_int(A.at(m, k) + 1, step_h).bar();
                if (stat_sigma(A, k) % 2) coeff = -coeff;
                out.add_term(T, c * coeff);
            };
            emit(m + 1);
            for (int k = m + 2; k <= N; ++k)
                if (A.at(m + 1, k) >= 1) emit(k);
        } else {
            Comp bound = Comp(N, 0);
            for (int l = 1; l <= N; ++l) bound[l - 1] = A.at(h + 1, l);
            bound[h] = p; // nu_{h+1} unconstrained
            for (const Comp& nu : enumerate_compositions(N, p, &bound)) {
                Mat T = A;
                for (int l = 1; l <= N; ++l) {
                    if (nu[l - 1] == 0) continue;
                    T.at(h, l) += nu[l - 1];
                    if (l != h + 1) T.at(h + 1, l) -= nu[l - 1];
                }
                if (!T.is_valid()) {
                    ++dropped_;
                    continue;
                }
                Laurent coeff = Laurent::monomial(sgn_h * (int)stat_fh(nu, A, h));
                for (int k = 1; k <= N; ++k)
                    if (nu[k - 1] > 0)
                        coeff *= qq_binom(A.at(h, k) + nu[k - 1], nu[k - 1], step_h).bar();
                out.add_term(T, c * coeff);
            }
        }
    }
    return out;
}

Word UplusContext::monomial_word(const Mat& A) const {
    if (!A.is_valid() || !A.is_strictly_upper())
        throw std::invalid_argument("monomial word needs a valid strictly upper matrix");
    const int N = sh_.size();
    std::vector<std::pair<int, int>> pos; // (i,j), a_{i,j} > 0
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            if (A.at(i, j) > 0) pos.push_back({i, j});
    std::sort(pos.begin(), pos.end(), [](auto& a, auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first > b.first;
    });
    Word w;
    for (auto [i, j] : pos)
        for (int h = i; h < j; ++h) w.push_back({A.at(i, j), h});
    return w;
}

Element UplusContext::eval_word(const Word& w) const { return apply_word(w, identity()); }

Element UplusContext::apply_word(const Word& w, Element x) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        x = left_mult_divided_E(it->h, it->p, x);
    return x;
}

const Element& UplusContext::monomial_expansion(const Mat& A) {
    {
        std::lock_guard lk(mu_);
        auto it = mono_cache_.find(A);
        if (it != mono_cache_.end()) return it->second;
    }
    Element e = eval_word(monomial_word(A));
    std::lock_guard lk(mu_);
    return mono_cache_.try_emplace(A, std::move(e)).first->second;
}

Closure UplusContext::build_closure(const std::vector<Mat>& roots) {
    std::vector<Mat> queue = roots;
    std::map<Mat, bool> seen;
    for (const Mat& r : roots) seen[r] = true;
    while (!queue.empty()) {
        Mat cur = queue.back();
        queue.pop_back();
        const Element& e = monomial_expansion(cur);
        for (const auto& [B, c] : e.terms) {
            if (!seen.count(B)) {
                seen[B] = true;
                queue.push_back(B);
            }
        }
    }

    Closure cl;
    for (const auto& [M, _] : seen) cl.order.push_back(M);
    std::sort(cl.order.begin(), cl.order.end(), topo_before);
    const int K = (int)cl.order.size();
    for (int i = 0; i < K; ++i) cl.index[cl.order[i]] = i;

    cl.mono.assign(K, std::vector<Laurent>(K));
    for (int j = 0; j < K; ++j) {
        const Element& e = monomial_expansion(cl.order[j]);
        for (const auto& [B, c] : e.terms) {
            auto it = cl.index.find(B);
            if (it == cl.index.end()) throw std::logic_error("closure not downward closed");
            if (it->second < j) throw std::logic_error("monomial expansion not triangular");
            cl.mono[j][it->second] = c;
        }
        if (!(cl.mono[j][j] == Laurent(1)))
            throw std::logic_error("monomial expansion not unitriangular");
    }
    return cl;
}

const Closure& UplusContext::transition_closure(const Mat& A) {
    {
        std::lock_guard lk(mu_);
        auto it = closure_cache_.find(A);
        if (it != closure_cache_.end()) return it->second;
    }
    Closure cl = build_closure({A});
    std::lock_guard lk(mu_);
    return closure_cache_.try_emplace(A, std::move(cl)).first->second;
}

std::vector<Laurent> UplusContext::monomial_coords(const Closure& cl, const Element& x) const {
    const int K = (int)cl.order.size();
    std::vector<Laurent> res(K), mu(K);
    for (const auto& [B, c] : x.terms) {
        auto it = cl.index.find(B);
        if (it == cl.index.end()) throw std::logic_error("element outside closure");
        res[it->second] = c;
    }
    for (int j = 0; j < K; ++j) {
        mu[j] = res[j];
        if (mu[j].is_zero()) continue;
        for (int i = j; i < K; ++i) res[i] -= mu[j] * cl.mono[j][i];
    }
    return mu;
}

Element UplusContext::bar_element(const Element& x) {
    if (x.is_zero()) return x;
    if (x.side == Side::minus) {
        // expand over the bar-fixed minus word products
        std::vector<Mat> roots;
        for (const auto& [B, _] : x.terms) roots.push_back(B.transpose());
        Closure cl = build_closure(roots);
        const MinusTransition& mt = compute_minus_transition(*this, cl);
        const int K = (int)cl.order.size();
        std::vector<Laurent> res(K), mu(K);
        for (const auto& [B, c] : x.terms) res[cl.index.at(B.transpose())] = c;
        for (int j = 0; j < K; ++j) {
            mu[j] = mt.sign[j] < 0 ? -res[j] : res[j];
            if (mu[j].is_zero()) continue;
            for (int i = j; i < K; ++i) res[i] -= mu[j] * mt.psi[j][i];
        }
        Element out(sh_, Side::minus);
        for (int j = 0; j < K; ++j) {
            if (mu[j].is_zero()) continue;
            Laurent b = mu[j].bar();
            for (int i = j; i < K; ++i) out.add_term(cl.order[i].transpose(), b * mt.psi[j][i]);
        }
        return out;
    }
    std::vector<Mat> roots;
    for (const auto& [B, _] : x.terms) roots.push_back(B);
    Closure cl = build_closure(roots);
    std::vector<Laurent> mu = monomial_coords(cl, x);
    Element out(sh_, Side::plus);
    for (size_t j = 0; j < mu.size(); ++j) {
        if (mu[j].is_zero()) continue;
        Laurent b = mu[j].bar();
        for (size_t i = j; i < mu.size(); ++i)
            out.add_term(cl.order[i], b * cl.mono[j][i]);
    }
    return out;
}

CanonicalRecord UplusContext::canonical(const Mat& A) {
    if (!A.is_valid() || !A.is_strictly_upper())
        throw std::invalid_argument("canonical needs a valid strictly upper matrix");
    {
        std::lock_guard lk(mu_);
        auto it = canonical_cache_.find(A);
        if (it != canonical_cache_.end()) return it->second;
    }
    const Closure& cl = transition_closure(A);
    const int K = (int)cl.order.size();

    // candidate coordinates over {order[i](0)}, seeded at the target
    std::vector<Laurent> c(K);
    c[0] = Laurent(1);

    auto bar_coords = [&](const std::vector<Laurent>& v) {
        // bar of sum v_i order[i](0), via bar-fixed monomials
        std::vector<Laurent> res = v, mu(K), out(K);
        for (int j = 0; j < K; ++j) {
            mu[j] = res[j];
            if (mu[j].is_zero()) continue;
            for (int i = j; i < K; ++i) res[i] -= mu[j] * cl.mono[j][i];
        }
        for (int j = 0; j < K; ++j) {
            if (mu[j].is_zero()) continue;
            Laurent b = mu[j].bar();
            for (int i = j; i < K; ++i) out[i] += b * cl.mono[j][i];
        }
        return out;
    };

    for (int j = 1; j < K; ++j) {
        std::vector<Laurent> bc = bar_coords(c);
        Laurent delta = bc[j] - c[j];
        if (!delta.is_zero()) c[j] += antisym_solve(delta);
    }
    {
        std::vector<Laurent> bc = bar_coords(c);
        for (int j = 0; j < K; ++j)
            if (bc[j] != c[j]) throw std::logic_error("canonical solve: not bar-invariant");
    }

    CanonicalRecord rec;
    rec.target = A;
    rec.side = Side::plus;
    for (int j = 0; j < K; ++j)
        if (!c[j].is_zero()) {
            if (j > 0 && !c[j].only_negative_exponents())
                throw std::logic_error("canonical solve: correction not in v^-1 Z[v^-1]");
            rec.expansion.emplace(cl.order[j], c[j]);
        }
    std::lock_guard lk(mu_);
    return canonical_cache_.try_emplace(A, std::move(rec)).first->second;
}

CanonicalRecord UplusContext::layered_subtraction(const Mat& A) {
    if (!A.is_valid() || !A.is_strictly_upper())
        throw std::invalid_argument("layered_subtraction needs a valid strictly upper matrix");
    const Closure& cl = transition_closure(A);
    const int K = (int)cl.order.size();

    std::vector<Laurent> cur(cl.mono[0]); // coefficients of m+_A
    std::map<Mat, Laurent> witness;
    long parity_events = 0;

    // Sweep layers from the top: subtracting a bar-invariant multiple of
    // m+_B only changes coefficients strictly below B.
    for (int j = 1; j < K; ++j) {
        BarSplit s = bar_split(cur[j]);
        if (s.sym.is_zero()) continue;
        witness.emplace(cl.order[j], s.sym);
        if (s.odd_constant) ++parity_events;
        for (int i = j; i < K; ++i) cur[i] -= s.sym * cl.mono[j][i];
    }

    CanonicalRecord rec;
    rec.target = A;
    rec.side = Side::plus;
    rec.witness = std::move(witness);
    rec.parity_events = parity_events;
    if (!(cur[0] == Laurent(1))) throw std::logic_error("layered subtraction: leading term lost");
    for (int j = 0; j < K; ++j)
        if (!cur[j].is_zero()) {
            if (j > 0 && !cur[j].only_negative_exponents())
                throw std::logic_error("layered subtraction: residue not in v^-1 Z[v^-1]");
            rec.expansion.emplace(cl.order[j], cur[j]);
        }
    return rec;
}

Element UplusContext::mult(const Element& x, const Element& y) {
    if (x.sh != sh_ || y.sh != sh_ || x.side != y.side)
        throw std::invalid_argument("mult: mismatched operands");
    if (x.is_zero() || y.is_zero()) return zero(x.side);
    if (x.side == Side::minus) return stable_minus_product(*this, x, y);

    std::vector<Mat> roots;
    for (const auto& [B, _] : x.terms) roots.push_back(B);
    Closure cl = build_closure(roots);
    std::vector<Laurent> mu = monomial_coords(cl, x);

    Element out(sh_, Side::plus);
    for (size_t j = 0; j < mu.size(); ++j) {
        if (mu[j].is_zero()) continue;
        Element w = apply_word(monomial_word(cl.order[j]), y);
        out += w.scaled(mu[j]);
    }
    return out;
}

Element UplusContext::root_vector(int a, int b) {
    return divided_root_power(a, b, 1);
}

Element UplusContext::divided_root_power(int a, int b, int p) {
    const int N = sh_.size();
    if (a == b || a < 1 || b < 1 || a > N || b > N)
        throw std::invalid_argument("root vector indices out of range");
    if (p == 0) return identity(a < b ? Side::plus : Side::minus);
    const bool odd_root = sh_.odd_index(a) != sh_.odd_index(b);
    if (odd_root && p >= 2)
        throw std::invalid_argument("odd root vector admits no higher divided powers");
    {
        std::lock_guard lk(mu_);
        auto it = root_cache_.find({a, b, p});
        if (it != root_cache_.end()) return it->second;
    }

    Element r = zero();
    if (p == 1) {
        if (b == a + 1 || a == b + 1) {
            r = basis(Mat::unit(sh_, a, b));
        } else {
            const int c = (a < b) ? a + 1 : a - 1;
            Element left = mult(divided_root_power(a, c, 1), divided_root_power(c, b, 1));
            Element right = mult(divided_root_power(c, b, 1), divided_root_power(a, c, 1));
            const int twist = (a < b) ? -sh_.sign_at(c) : sh_.sign_at(c);
            r = left;
            r -= right.scaled(Laurent::monomial(twist));
        }
    } else {
        Element pw = divided_root_power(a, b, 1);
        Element acc = pw;
        for (int t = 2; t <= p; ++t) acc = mult(pw, acc);
        Laurent fact = sym_factorial(p);
        r = Element(sh_, acc.side);
        for (const auto& [M, coeff] : acc.terms) r.terms.emplace(M, divide_exact(coeff, fact));
    }
    std::lock_guard lk(mu_);
    return root_cache_.try_emplace(std::make_tuple(a, b, p), std::move(r)).first->second;
}

Element UplusContext::pbw(const Mat& A) {
    if (!A.is_valid() || !A.is_strictly_upper())
        throw std::invalid_argument("pbw needs a valid strictly upper matrix");
    const int N = sh_.size();
    std::vector<std::pair<int, int>> pos;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            if (A.at(i, j) > 0) pos.push_back({i, j});
    std::sort(pos.begin(), pos.end(), [](auto& x, auto& y) {
        if (x.second != y.second) return x.second > y.second;
        return x.first > y.first;
    });
    Element acc = identity();
    for (auto it = pos.rbegin(); it != pos.rend(); ++it)
        acc = mult(divided_root_power(it->first, it->second, A.at(it->first, it->second)), acc);
    return acc;
}

Element UplusContext::pbw_minus(const Mat& A) {
    if (!A.is_valid() || !A.is_strictly_lower())
        throw std::invalid_argument("pbw_minus needs a valid strictly lower matrix");
    return tau_transpose(pbw(A.transpose()));
}

std::vector<int> UplusContext::weight(const Element& x) const {
    const int N = sh_.size();
    std::vector<int> w(N, 0);
    bool first = true;
    for (const auto& [A, _] : x.terms) {
        std::vector<int> cur(N, 0);
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                if (i == j) continue;
                cur[i - 1] += A.at(i, j);
                cur[j - 1] -= A.at(i, j);
            }
        if (first) {
            w = cur;
            first = false;
        } else if (cur != w) {
            throw std::invalid_argument("non-homogeneous element");
        }
    }
    return w;
}

Element tau_transpose(const Element& x) {
    Element r(x.sh, x.side == Side::plus ? Side::minus : Side::plus);
    for (const auto& [A, c] : x.terms) r.terms.emplace(A.transpose(), c);
    return r;
}

CanonicalRecord canonical_minus(UplusContext& ctx, const Mat& A) {
    if (!A.is_valid() || !A.is_strictly_lower())
        throw std::invalid_argument("canonical_minus needs a valid strictly lower matrix");
    {
        std::lock_guard lk(ctx.mu_);
        auto it = ctx.canonical_minus_cache_.find(A);
        if (it != ctx.canonical_minus_cache_.end()) return it->second;
    }
    const Closure& cl = ctx.transition_closure(A.transpose());
    const MinusTransition& mt = ctx.minus_transition(A.transpose());
    const int K = (int)cl.order.size();

    // same solve as on the plus side, over the normalized bar-fixed word
    // products sign[j] * psi_j
    std::vector<Laurent> c(K);
    c[0] = Laurent(1);

    auto bar_coords = [&](const std::vector<Laurent>& v) {
        std::vector<Laurent> res = v, mu(K), out(K);
        for (int j = 0; j < K; ++j) {
            mu[j] = mt.sign[j] < 0 ? -res[j] : res[j];
            if (mu[j].is_zero()) continue;
            for (int i = j; i < K; ++i) res[i] -= mu[j] * mt.psi[j][i];
        }
        for (int j = 0; j < K; ++j) {
            if (mu[j].is_zero()) continue;
            Laurent b = mu[j].bar();
            if (mt.sign[j] < 0) b = -b;
            for (int i = j; i < K; ++i) {
                Laurent entry = mt.sign[j] < 0 ? -mt.psi[j][i] : mt.psi[j][i];
                out[i] += b * entry;
            }
        }
        return out;
    };

    for (int j = 1; j < K; ++j) {
        std::vector<Laurent> bc = bar_coords(c);
        Laurent delta = bc[j] - c[j];
        if (!delta.is_zero()) c[j] += antisym_solve(delta);
    }
    {
        std::vector<Laurent> bc = bar_coords(c);
        for (int j = 0; j < K; ++j)
            if (bc[j] != c[j]) throw std::logic_error("minus canonical solve: not bar-invariant");
    }

    CanonicalRecord rec;
    rec.target = A;
    rec.side = Side::minus;
    for (int j = 0; j < K; ++j)
        if (!c[j].is_zero()) {
            if (j > 0 && !c[j].only_negative_exponents())
                throw std::logic_error("minus canonical solve: correction not in v^-1 Z[v^-1]");
            rec.expansion.emplace(cl.order[j].transpose(), c[j]);
        }
    std::lock_guard lk(ctx.mu_);
    return ctx.canonical_minus_cache_.try_emplace(A, std::move(rec)).first->second;
}

SerreReport serre_check(UplusContext& ctx, long norm_bound) {
    const Shape sh = ctx.shape();
    const int N = sh.size(), m = sh.m;
    SerreReport rep;

    auto E = [&](int h, const Element& x) { return ctx.left_mult_divided_E(h, 1, x); };
    const Laurent two = sym_int(2);

    std::vector<Mat> span = enumerate_upper(sh, (int)norm_bound, norm_bound);
    for (const Mat& A : span) {
        Element x = ctx.basis(A);
        for (int h = 1; h < N; ++h)
            for (int k = h + 2; k < N; ++k) {
                ++rep.relations_checked;
                if (E(h, E(k, x)) != E(k, E(h, x)))
                    rep.violations.push_back({"QS4 commutation E" + std::to_string(h) + ",E" + std::to_string(k), A});
            }
        for (int h = 1; h < N; ++h) {
            if (h == m) continue;
            for (int k : {h - 1, h + 1}) {
                if (k < 1 || k >= N) continue;
                ++rep.relations_checked;
                Element lhs = E(h, E(h, E(k, x)));
                lhs -= E(h, E(k, E(h, x))).scaled(two);
                lhs += E(k, E(h, E(h, x)));
                if (!lhs.is_zero())
                    rep.violations.push_back({"QS5 Serre E" + std::to_string(h) + ",E" + std::to_string(k), A});
            }
        }
        if (m >= 1 && sh.n >= 1) {
            ++rep.relations_checked;
            if (!E(m, E(m, x)).is_zero()) rep.violations.push_back({"QS6 E_m^2", A});
        }
        if (m >= 2 && m + 2 <= N) {
            ++rep.relations_checked;
            auto X = [&](const Element& y) {
                Element r = E(m - 1, E(m, E(m + 1, y)));
                r -= E(m - 1, E(m + 1, E(m, y))).scaled(Laurent::monomial(1));
                r -= E(m, E(m + 1, E(m - 1, y))).scaled(Laurent::monomial(-1));
                r += E(m + 1, E(m, E(m - 1, y)));
                return r;
            };
            Element lhs = E(m, X(x));
            lhs += X(E(m, x));
            if (!lhs.is_zero()) rep.violations.push_back({"QS6 [E_m, E_{m-1,m+2}]", A});
        }
    }
    return rep;
}

} // namespace supercb
