#include "supercb/laurent.hpp"

#include <sstream>
#include <vector>

namespace supercb {

Laurent Laurent::monomial(int exp, Int coeff) {
    Laurent f;
    if (coeff != 0) f.c_[exp] = std::move(coeff);
    return f;
}

Int Laurent::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Int(0) : it->second;
}

int Laurent::min_exp() const {
    if (c_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return c_.begin()->first;
}

int Laurent::max_exp() const {
    if (c_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return c_.rbegin()->first;
}

void Laurent::add_term(int exp, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = c_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

Laurent Laurent::bar() const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

Laurent Laurent::shifted(int k) const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[e + k] = c;
    return r;
}

bool Laurent::only_negative_exponents() const {
    return c_.empty() || c_.rbegin()->first <= -1;
}

bool Laurent::bar_symmetric() const { return bar() == *this; }

bool Laurent::bar_antisymmetric() const { return bar() == -*this; }

std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Int c = it->second;
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        int e = it->first;
        if (e == 0) {
            out << c;
        } else {
            if (c != 1) out << c << "*";
            out << "v";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.coeffs())
        for (const auto& [eb, cb] : b.coeffs())
            r.add_term(ea + eb, ca * cb);
    return r;
}

Laurent operator*(const Int& s, const Laurent& a) {
    Laurent r;
    if (s == 0) return r;
    for (const auto& [e, c] : a.coeffs()) r.add_term(e, s * c);
    return r;
}

Laurent gauss_int(int i, int step) {
    if (step == 0) throw std::invalid_argument("gauss_int: step must be nonzero");
    Laurent r;
    for (int t = 0; t < i; ++t) r.add_term(t * step, 1);
    return r;
}

Laurent gauss_factorial(int i, int step) {
    Laurent r(1);
    for (int t = 1; t <= i; ++t) r *= gauss_int(t, step);
    return r;
}

Laurent sym_int(int i, Parity) {
    Laurent r;
    for (int t = 0; t < i; ++t) r.add_term(i - 1 - 2 * t, 1);
    return r;
}

Laurent sym_int_signed(int i) {
    if (i >= 0) return sym_int(i);
    return -sym_int(-i);
}

Laurent sym_factorial(int i) {
    Laurent r(1);
    for (int t = 1; t <= i; ++t) r *= sym_int(t);
    return r;
}

Laurent qq_binom(int n, int k, int step) {
    if (k < 0 || k > n) return Laurent();
    Laurent r(1);
    for (int t = 1; t <= k; ++t)
        r = divide_exact(r * gauss_int(n - k + t, step), gauss_int(t, step));
    return r;
}

Laurent divide_exact(const Laurent& num, const Laurent& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) return Laurent();

    const int num_lo = num.min_exp(), num_hi = num.max_exp();
    const int den_lo = den.min_exp(), den_hi = den.max_exp();
    const int qd = (num_hi - num_lo) - (den_hi - den_lo);
    if (qd < 0) throw std::domain_error("inexact polynomial division");

    std::vector<Int> rem(num_hi - num_lo + 1), d(den_hi - den_lo + 1), q(qd + 1);
    for (const auto& [e, c] : num.coeffs()) rem[e - num_lo] = c;
    for (const auto& [e, c] : den.coeffs()) d[e - den_lo] = c;

    for (int i = qd; i >= 0; --i) {
        const Int& lead = rem[i + (int)d.size() - 1];
        if (lead == 0) continue;
        if (lead % d.back() != 0) throw std::domain_error("inexact polynomial division");
        q[i] = lead / d.back();
        for (size_t t = 0; t < d.size(); ++t) rem[i + t] -= q[i] * d[t];
    }
    for (const Int& c : rem)
        if (c != 0) throw std::domain_error("inexact polynomial division");

    Laurent result;
    for (int i = 0; i <= qd; ++i) result.add_term(i + num_lo - den_lo, q[i]);
    return result;
}

Laurent antisym_solve(const Laurent& r) {
    if (!r.bar_antisymmetric()) throw std::domain_error("not bar-antisymmetric");
    Laurent p;
    for (const auto& [e, c] : r.coeffs()) {
        if (e == 0 && c != 0) throw std::domain_error("not bar-antisymmetric");
        if (e < 0) p.add_term(e, c);
    }
    return p;
}

BarSplit bar_split(const Laurent& g) {
    BarSplit out;
    for (const auto& [e, c] : g.coeffs()) {
        if (e > 0) {
            out.sym.add_term(e, c);
            out.sym.add_term(-e, c);
        } else if (e == 0) {
            out.sym.add_term(0, c);
            out.odd_constant = (c % 2 != 0);
        }
    }
    out.neg = g - out.sym;
    return out;
}

std::pair<Laurent, Laurent> y_decompose(const Laurent& g) {
    BarSplit s = bar_split(g);
    if (s.odd_constant) throw std::domain_error("no Y-decomposition");
    return {s.sym, s.neg};
}

} // namespace supercb
