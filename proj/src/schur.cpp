#include "supercb/schur.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace supercb {

void SchurElement::add_term(const Mat& D, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(D, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

SchurElement& SchurElement::operator+=(const SchurElement& o) {
    for (const auto& [D, c] : o.terms) add_term(D, c);
    return *this;
}

SchurElement& SchurElement::operator-=(const SchurElement& o) {
    for (const auto& [D, c] : o.terms) add_term(D, -c);
    return *this;
}

SchurElement SchurElement::scaled(const Laurent& c) const {
    SchurElement r(sh, this->r);
    if (c.is_zero()) return r;
    for (const auto& [D, k] : terms) r.terms.emplace(D, c * k);
    return r;
}

std::string SchurElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [D, c] : terms) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")*[" << D.str() << "]";
    }
    return out.str();
}

SchurContext::SchurContext(UplusContext& up, int r) : up_(up), sh_(up.shape()), r_(r) {
    if (r < 0) throw std::invalid_argument("level must be nonnegative");
}

SchurElement SchurContext::basis(const Mat& D) const {
    if (!D.is_valid() || D.total() != r_)
        throw std::invalid_argument("basis matrix must be valid of entry sum r");
    SchurElement e(sh_, r_);
    e.terms.emplace(D, Laurent(1));
    return e;
}

SchurElement SchurContext::identity() const {
    SchurElement e(sh_, r_);
    for (const Comp& lam : enumerate_compositions(sh_.size(), r_))
        e.terms.emplace(Mat::diag(sh_, lam), Laurent(1));
    return e;
}

SchurElement SchurContext::left_mult_E(int h, int p, const SchurElement& x) const {
    const int N = sh_.size(), m = sh_.m;
    if (h < 1 || h >= N) throw std::invalid_argument("generator index out of range");
    if (p < 1) throw std::invalid_argument("divided power must be positive");
    SchurElement out(sh_, r_);
    if (h == m && p >= 2) return out;

    const int sgn_h = sh_.sign_at(h);
    const int step_h = sh_.step(h);

    for (const auto& [D, c] : x.terms) {
        if (h == m) {
            for (int k = 1; k <= N; ++k) {
                if (D.at(m + 1, k) < 1) continue;
                Mat T = D.added(m, k, 1).added(m + 1, k, -1);
                if (!T.is_valid()) {
                    ++dropped_;
                    continue;
                }
                int sg = 0;
                for (int i = m + 1; i <= N; ++i)
                    for (int j = 1; j < k; ++j) sg += D.at(i, j);
                Laurent coeff = Laurent::monomial(sgn_h * stat_fm(k, D)) *
                                gauss_int(D.at(m, k) + 1, step_h).bar();
                if (sg % 2) coeff = -coeff;
                out.add_term(T, c * coeff);
            }
        } else {
            Comp bound(N, 0);
            for (int l = 1; l <= N; ++l) bound[l - 1] = D.at(h + 1, l);
            for (const Comp& nu : enumerate_compositions(N, p, &bound)) {
                Mat T = D;
                for (int l = 1; l <= N; ++l) {
                    if (nu[l - 1] == 0) continue;
                    T.at(h, l) += nu[l - 1];
                    T.at(h + 1, l) -= nu[l - 1];
                }
                if (!T.is_valid()) {
                    ++dropped_;
                    continue;
                }
                Laurent coeff = Laurent::monomial(sgn_h * (int)stat_fh(nu, D, h));
                for (int k = 1; k <= N; ++k)
                    if (nu[k - 1] > 0)
                        coeff *= qq_binom(D.at(h, k) + nu[k - 1], nu[k - 1], step_h).bar();
                out.add_term(T, c * coeff);
            }
        }
    }
    return out;
}

SchurElement SchurContext::left_mult_F(int h, int p, const SchurElement& x) const {
    const int N = sh_.size(), m = sh_.m;
    if (h < 1 || h >= N) throw std::invalid_argument("generator index out of range");
    if (p < 1) throw std::invalid_argument("divided power must be positive");
    SchurElement out(sh_, r_);
    if (h == m && p >= 2) return out;

    const int sgn_h1 = sh_.sign_at(h + 1);
    const int step_h1 = sh_.step(h + 1);

    for (const auto& [D, c] : x.terms) {
        if (h == m) {
            for (int k = 1; k <= N; ++k) {
                if (D.at(m, k) < 1) continue;
                Mat T = D.added(m, k, -1).added(m + 1, k, 1);
                if (!T.is_valid()) {
                    ++dropped_;
                    continue;
                }
                int sg = 0;
                for (int i = m + 1; i <= N; ++i)
                    for (int j = 1; j < k; ++j) sg += D.at(i, j);
                Laurent coeff = Laurent::monomial(sgn_h1 * stat_gm(k, D)) *
                                gauss_int(D.at(m + 1, k) + 1, step_h1).bar();
                if (sg % 2) coeff = -coeff;
                out.add_term(T, c * coeff);
            }
        } else {
            Comp bound(N, 0);
            for (int l = 1; l <= N; ++l) bound[l - 1] = D.at(h, l);
            for (const Comp& nu : enumerate_compositions(N, p, &bound)) {
                Mat T = D;
                for (int l = 1; l <= N; ++l) {
                    if (nu[l - 1] == 0) continue;
                    T.at(h, l) -= nu[l - 1];
                    T.at(h + 1, l) += nu[l - 1];
                }
                if (!T.is_valid()) {
                    ++dropped_;
                    continue;
                }
                Laurent coeff = Laurent::monomial(sgn_h1 * (int)stat_gh(nu, D, h));
                for (int k = 1; k <= N; ++k)
                    if (nu[k - 1] > 0)
                        coeff *= qq_binom(D.at(h + 1, k) + nu[k - 1], nu[k - 1], step_h1).bar();
                out.add_term(T, c * coeff);
            }
        }
    }
    return out;
}

SchurElement SchurContext::span_element(const Mat& A, const std::vector<int>& j) const {
    SchurElement out(sh_, r_);
    if (!A.is_zero_diagonal())
        throw std::invalid_argument("span element needs a zero-diagonal matrix");
    if (!A.is_valid() || A.total() > r_) return out;
    const int N = sh_.size();
    for (const Comp& lam : enumerate_compositions(N, r_ - A.total())) {
        Mat D = A.add_diag(lam);
        long dot = 0;
        for (int i = 1; i <= N; ++i) dot += (long)sh_.sign_at(i) * lam[i - 1] * j[i - 1];
        Laurent coeff = Laurent::monomial((int)dot);
        if (D.sign_bar()) coeff = -coeff;
        out.add_term(D, coeff);
    }
    return out;
}

SchurElement SchurContext::span_element(const Mat& A) const {
    return span_element(A, std::vector<int>(sh_.size(), 0));
}

SchurElement SchurContext::eta(const Element& x) const {
    SchurElement out(sh_, r_);
    for (const auto& [A, c] : x.terms) out += span_element(A).scaled(c);
    return out;
}

SchurElement SchurContext::idempotent(const Comp& lambda) const {
    if (comp_sum(lambda) != r_) throw std::invalid_argument("weight must have size r");
    return basis(Mat::diag(sh_, lambda));
}

SchurElement SchurContext::filter_ro(const SchurElement& x, const Comp& lambda) const {
    SchurElement out(sh_, r_);
    for (const auto& [D, c] : x.terms)
        if (D.ro() == lambda) out.terms.emplace(D, c);
    return out;
}

SchurElement SchurContext::right_mult_idempotent(const SchurElement& x, const Comp& lambda) {
    SchurElement out(x.sh, x.r);
    for (const auto& [D, c] : x.terms)
        if (D.co() == lambda) out.terms.emplace(D, c);
    return out;
}

SchurElement SchurContext::apply_plus_word(const Word& w, SchurElement x) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = left_mult_E(it->h, it->p, x);
    return x;
}

SchurElement SchurContext::apply_minus_of_plus_word(const Word& w, SchurElement x) const {
    for (const WordFactor& f : w) x = left_mult_F(f.h, f.p, x);
    return x;
}

SchurElement SchurContext::apply_stable(const Mat& A, const SchurElement& y) {
    if (A.is_zero()) return y;
    const bool lower = A.is_strictly_lower();
    if (!lower && !A.is_strictly_upper())
        throw std::invalid_argument("apply_stable needs a strictly triangular matrix");
    const Mat root = lower ? A.transpose() : A;
    const Closure& cl = up_.transition_closure(root);
    const int K = (int)cl.order.size();

    // coordinates of A(0) over the word products realizing the monomials
    std::vector<Laurent> res(K), mu(K);
    res[0] = Laurent(1);
    if (lower) {
        const MinusTransition& mt = up_.minus_transition(root);
        for (int j = 0; j < K; ++j) {
            mu[j] = mt.sign[j] < 0 ? -res[j] : res[j];
            if (mu[j].is_zero()) continue;
            for (int i = j; i < K; ++i) res[i] -= mu[j] * mt.psi[j][i];
        }
    } else {
        for (int j = 0; j < K; ++j) {
            mu[j] = res[j];
            if (mu[j].is_zero()) continue;
            for (int i = j; i < K; ++i) res[i] -= mu[j] * cl.mono[j][i];
        }
    }

    SchurElement out(sh_, r_);
    for (int j = 0; j < K; ++j) {
        if (mu[j].is_zero()) continue;
        Word w = up_.monomial_word(cl.order[j]);
        SchurElement part = lower ? apply_minus_of_plus_word(w, y) : apply_plus_word(w, y);
        out += part.scaled(mu[j]);
    }
    return out;
}

SchurElement SchurContext::pbw_product(const Mat& A, const Comp& lambda) {
    if (!A.is_zero_diagonal() || !A.is_valid())
        throw std::invalid_argument("pbw_product needs a valid zero-diagonal matrix");
    if (comp_sum(lambda) != r_) throw std::invalid_argument("weight must have size r");
    SchurElement e = span_element(A.plus_part());
    e = filter_ro(e, lambda);
    if (e.is_zero()) return e;
    return apply_stable(A.minus_part(), e);
}

SchurElement SchurContext::n_element(const Mat& D) {
    const Comp lamD = D.hooks();
    SchurElement y = apply_plus_word(up_.monomial_word(D.plus_part()), identity());
    y = filter_ro(y, lamD);
    y = apply_minus_of_plus_word(up_.monomial_word(D.minus_part().transpose()), y);
    // bar-fixed by construction; normalize the leading unit, which carries
    // the odd-row inversion parity on top of the diagonal-weight sign
    auto it = y.terms.find(D);
    if (it == y.terms.end()) throw std::logic_error("spanning family lost its leading term");
    if (it->second == Laurent(-1)) return y.scaled(Laurent(-1));
    if (!(it->second == Laurent(1)))
        throw std::logic_error("spanning family leading coefficient is not a sign");
    return y;
}

const ClassClosure& SchurContext::class_closure(const Comp& row_sums, const Comp& col_sums) {
    const auto key = std::make_pair(row_sums, col_sums);
    {
        std::lock_guard lk(mu_);
        auto it = class_cache_.find(key);
        if (it != class_cache_.end()) return it->second;
    }
    ClassClosure cl;
    cl.order = enumerate_margin_class(sh_, row_sums, col_sums);
    std::sort(cl.order.begin(), cl.order.end(), topo_before);
    const int K = (int)cl.order.size();
    for (int i = 0; i < K; ++i) cl.index[cl.order[i]] = i;
    cl.nmat.assign(K, std::vector<Laurent>(K));
    for (int j = 0; j < K; ++j) {
        SchurElement nd = n_element(cl.order[j]);
        for (const auto& [C, c] : nd.terms) {
            auto it = cl.index.find(C);
            if (it == cl.index.end())
                throw std::logic_error("spanning family leaves the margin class");
            if (it->second < j)
                throw std::logic_error("spanning family not triangular");
            cl.nmat[j][it->second] = c;
        }
        if (!(cl.nmat[j][j] == Laurent(1)))
            throw std::logic_error("spanning family not unitriangular");
    }
    std::lock_guard lk(mu_);
    return class_cache_.try_emplace(key, std::move(cl)).first->second;
}

SchurElement SchurContext::bar(const SchurElement& x) {
    // block-diagonal across margin classes
    std::map<std::pair<Comp, Comp>, SchurElement> blocks;
    for (const auto& [D, c] : x.terms) {
        auto key = std::make_pair(D.ro(), D.co());
        auto it = blocks.find(key);
        if (it == blocks.end()) it = blocks.emplace(key, zero()).first;
        it->second.terms.emplace(D, c);
    }
    SchurElement out(sh_, r_);
    for (auto& [key, blk] : blocks) {
        const ClassClosure& cl = class_closure(key.first, key.second);
        const int K = (int)cl.order.size();
        std::vector<Laurent> res(K), mu(K);
        for (const auto& [D, c] : blk.terms) res[cl.index.at(D)] = c;
        for (int j = 0; j < K; ++j) {
            mu[j] = res[j];
            if (mu[j].is_zero()) continue;
            for (int i = j; i < K; ++i) res[i] -= mu[j] * cl.nmat[j][i];
        }
        for (int j = 0; j < K; ++j) {
            if (mu[j].is_zero()) continue;
            Laurent b = mu[j].bar();
            for (int i = j; i < K; ++i) out.add_term(cl.order[i], b * cl.nmat[j][i]);
        }
    }
    return out;
}

namespace {

/* read the coefficients of a level element over the zero-diagonal spanning
 * family, peeling by off-diagonal parts; the witness key packs the free
 * diagonal weight into the first slot */
std::map<Mat, Laurent> family_coefficients(const SchurContext& sc, const SchurElement& z) {
    const Shape sh = z.sh;
    std::map<Mat, Laurent> out;
    SchurElement rest = z;
    while (!rest.is_zero()) {
        Mat B = rest.terms.begin()->first;
        for (int i = 1; i <= sh.size(); ++i) B.at(i, i) = 0;
        Comp key(sh.size(), 0);
        key[0] = z.r - B.total();
        Mat witness = B.add_diag(key);
        Laurent c = rest.terms.count(witness) ? rest.terms.at(witness) : Laurent();
        if (witness.sign_bar()) c = -c;
        if (c.is_zero())
            throw std::logic_error("level element is not in the span of the stable family");
        rest -= sc.span_element(B).scaled(c);
        out.emplace(std::move(B), std::move(c));
    }
    return out;
}

} // namespace

MinusTransition compute_minus_transition(UplusContext& ctx, const Closure& cl) {
    const int K = (int)cl.order.size();
    int rstar = 1;
    for (const Mat& U : cl.order) rstar = std::max(rstar, U.total() + 1);
    SchurContext sc(ctx, rstar);
    const SchurElement one = sc.identity();

    MinusTransition mt;
    mt.sign.assign(K, 1);
    mt.psi.assign(K, std::vector<Laurent>(K));
    for (int j = 0; j < K; ++j) {
        SchurElement comp = sc.apply_minus_of_plus_word(ctx.monomial_word(cl.order[j]), one);
        for (auto& [B, c] : family_coefficients(sc, comp)) {
            auto it = cl.index.find(B.transpose());
            if (it == cl.index.end() || it->second < j)
                throw std::logic_error("minus word product leaves its closure");
            mt.psi[j][it->second] = c;
        }
        const Laurent& lead = mt.psi[j][j];
        if (lead == Laurent(-1))
            mt.sign[j] = -1;
        else if (!(lead == Laurent(1)))
            throw std::logic_error("minus word product has a non-unit leading coefficient");
    }
    return mt;
}

const MinusTransition& UplusContext::minus_transition(const Mat& root) {
    {
        std::lock_guard lk(mu_);
        auto it = minus_cache_.find(root);
        if (it != minus_cache_.end()) return it->second;
    }
    MinusTransition mt = compute_minus_transition(*this, transition_closure(root));
    std::lock_guard lk(mu_);
    return minus_cache_.try_emplace(root, std::move(mt)).first->second;
}

Element stable_minus_product(UplusContext& ctx, const Element& x, const Element& y) {
    const Shape sh = ctx.shape();
    std::vector<Mat> roots;
    int xtot = 0, ytot = 0;
    for (const auto& [B, _] : x.terms) {
        roots.push_back(B.transpose());
        xtot = std::max(xtot, B.total());
    }
    for (const auto& [B, _] : y.terms) ytot = std::max(ytot, B.total());
    Closure cl = ctx.build_closure(roots);
    MinusTransition mt = compute_minus_transition(ctx, cl);
    const int K = (int)cl.order.size();
    for (const Mat& U : cl.order) xtot = std::max(xtot, U.total());

    std::vector<Laurent> res(K), nu(K);
    for (const auto& [B, c] : x.terms) res[cl.index.at(B.transpose())] = c;
    for (int j = 0; j < K; ++j) {
        nu[j] = mt.sign[j] < 0 ? -res[j] : res[j];
        if (nu[j].is_zero()) continue;
        for (int i = j; i < K; ++i) res[i] -= nu[j] * mt.psi[j][i];
    }

    const int rstar = xtot + ytot + 1;
    SchurContext sc(ctx, rstar);
    SchurElement acc = sc.zero();
    for (const auto& [B, c] : y.terms) acc += sc.span_element(B).scaled(c);
    SchurElement prod = sc.zero();
    for (int j = 0; j < K; ++j) {
        if (nu[j].is_zero()) continue;
        prod += sc.apply_minus_of_plus_word(ctx.monomial_word(cl.order[j]), acc).scaled(nu[j]);
    }

    Element out = ctx.zero(Side::minus);
    for (auto& [B, c] : family_coefficients(sc, prod)) {
        if (!B.is_strictly_lower())
            throw std::logic_error("minus product left the lower triangle");
        out.add_term(B, c);
    }
    return out;
}

SchurElement SchurContext::canonical_Xi(const Mat& D) {
    if (!D.is_valid() || D.total() != r_)
        throw std::invalid_argument("canonical_Xi needs a valid matrix of entry sum r");
    const ClassClosure& cl = class_closure(D.ro(), D.co());
    const int K = (int)cl.order.size();
    const int jD = cl.index.at(D);

    std::vector<Laurent> c(K);
    c[jD] = Laurent(1);

    auto bar_coords = [&](const std::vector<Laurent>& v) {
        std::vector<Laurent> res = v, mu(K), out(K);
        for (int j = 0; j < K; ++j) {
            mu[j] = res[j];
            if (mu[j].is_zero()) continue;
            for (int i = j; i < K; ++i) res[i] -= mu[j] * cl.nmat[j][i];
        }
        for (int j = 0; j < K; ++j) {
            if (mu[j].is_zero()) continue;
            Laurent b = mu[j].bar();
            for (int i = j; i < K; ++i) out[i] += b * cl.nmat[j][i];
        }
        return out;
    };

    for (int j = jD + 1; j < K; ++j) {
        std::vector<Laurent> bc = bar_coords(c);
        Laurent delta = bc[j] - c[j];
        if (!delta.is_zero()) c[j] += antisym_solve(delta);
    }
    {
        std::vector<Laurent> bc = bar_coords(c);
        for (int j = 0; j < K; ++j)
            if (bc[j] != c[j]) throw std::logic_error("Xi solve: not bar-invariant");
    }

    SchurElement out(sh_, r_);
    for (int j = 0; j < K; ++j)
        if (!c[j].is_zero()) {
            if (j != jD && !c[j].only_negative_exponents())
                throw std::logic_error("Xi solve: correction not in v^-1 Z[v^-1]");
            out.terms.emplace(cl.order[j], c[j]);
        }
    return out;
}

} // namespace supercb
