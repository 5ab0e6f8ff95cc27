#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace supercb {

using Int = boost::multiprecision::cpp_int;

/* Exact element of Z[v,v^-1], stored sparsely as exponent -> nonzero
 * coefficient. The empty map is zero; equality is map equality. */
class Laurent {
public:
    Laurent() = default;
    Laurent(long c) { if (c != 0) c_[0] = c; }
    explicit Laurent(Int c) { if (c != 0) c_[0] = std::move(c); }

    static Laurent monomial(int exp, Int coeff = 1);

    bool is_zero() const { return c_.empty(); }
    const std::map<int, Int>& coeffs() const { return c_; }
    Int coeff(int exp) const;
    Int constant_term() const { return coeff(0); }
    int min_exp() const;
    int max_exp() const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    Laurent operator-() const;

    // v -> v^-1 on every term
    Laurent bar() const;
    // multiply by v^k
    Laurent shifted(int k) const;

    bool only_negative_exponents() const;   // zero qualifies
    bool bar_symmetric() const;             // bar(f) == f
    bool bar_antisymmetric() const;         // bar(f) == -f

    std::string str() const;                // plain text, e.g. "v^2 - 1 + v^-2"

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    void add_term(int exp, const Int& c);

private:
    std::map<int, Int> c_;
};

Laurent operator+(Laurent a, const Laurent& b);
Laurent operator-(Laurent a, const Laurent& b);
Laurent operator*(const Laurent& a, const Laurent& b);
Laurent operator*(const Int& s, const Laurent& a);

enum class Parity { even, odd };

/* [[i]] = 1 + x + x^2 + ... + x^{i-1} with x = v^step. */
Laurent gauss_int(int i, int step);

/* [[i]]! in the variable v^step. */
Laurent gauss_factorial(int i, int step);

/* [i] = v^{i-1} + v^{i-3} + ... + v^{1-i}; fixed under v -> v^-1, so the
 * parity argument only records which variable it was evaluated at. */
Laurent sym_int(int i, Parity parity = Parity::even);

/* [i] extended to all integers: [-i] = -[i], [0] = 0. */
Laurent sym_int_signed(int i);

/* [i]! = [1][2]...[i]. */
Laurent sym_factorial(int i);

/* [[n]]!/([[k]]! [[n-k]]!) in the variable v^step; zero when k < 0 or k > n. */
Laurent qq_binom(int n, int k, int step);

/* Exact division; throws std::domain_error if the remainder is nonzero. */
Laurent divide_exact(const Laurent& num, const Laurent& den);

/* For bar(r) == -r, the unique p with all exponents <= -1 and p - bar(p) = r.
 * Throws std::domain_error("not bar-antisymmetric") otherwise. */
Laurent antisym_solve(const Laurent& r);

/* g = sym + neg with sym = c_0 + sum_{k>=1} c_k (v^k + v^-k) bar-invariant and
 * neg in v^-1 Z[v^-1]. odd_constant marks c_0 odd, i.e. sym lies outside the
 * literal set {h + bar(h) | h in Z[v]}. */
struct BarSplit {
    Laurent sym;
    Laurent neg;
    bool odd_constant = false;
};
BarSplit bar_split(const Laurent& g);

/* The split above restricted to even constant terms; throws
 * std::domain_error("no Y-decomposition") when the constant term is odd. */
std::pair<Laurent, Laurent> y_decompose(const Laurent& g);

} // namespace supercb
