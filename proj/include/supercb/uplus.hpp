#pragma once

#include "supercb/laurent.hpp"
#include "supercb/matrices.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace supercb {

enum class Side { plus, minus };

/* Finite Z[v,v^-1]-combination of strictly triangular basis symbols A(0). */
struct Element {
    Shape sh;
    Side side = Side::plus;
    std::map<Mat, Laurent> terms;

    Element(Shape s, Side sd) : sh(s), side(sd) {}

    bool is_zero() const { return terms.empty(); }
    void add_term(const Mat& A, const Laurent& c);
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element scaled(const Laurent& c) const;
    friend bool operator==(const Element& a, const Element& b) {
        return a.sh == b.sh && a.side == b.side && a.terms == b.terms;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
    std::string str() const;
};

/* One factor (p E_{h,h+1})(0): the divided power of a simple generator. */
struct WordFactor {
    int p = 1;
    int h = 1;
    friend bool operator==(const WordFactor& a, const WordFactor& b) {
        return a.p == b.p && a.h == b.h;
    }
};
using Word = std::vector<WordFactor>;

/* Downward-closed set reachable from a root set through monomial expansions,
 * topologically sorted (norm descending). mono[j] holds the coordinates of
 * m+_{order[j]} over the basis {order[i](0)}: m+_j = sum_i mono[j][i] order[i](0). */
struct Closure {
    std::vector<Mat> order;
    std::map<Mat, int> index;
    std::vector<std::vector<Laurent>> mono; // mono[j][i], unitriangular: mono[j][j] = 1
};

/* Coordinates of the reversed-word products over the minus basis: the product
 * of (p E_{h+1,h})(0) factors matching order[j]'s word equals
 * sum_i psi[j][i] (order[i])^t(0). Extracted once at a sufficient level; the
 * diagonal holds signs only. */
struct MinusTransition {
    std::vector<int> sign;                 // psi[j][j], each +1 or -1
    std::vector<std::vector<Laurent>> psi; // triangular like mono
};

struct CanonicalRecord {
    Mat target;
    Side side = Side::plus;
    std::map<Mat, Laurent> expansion;
    std::optional<std::map<Mat, Laurent>> witness;
    long parity_events = 0; // subtraction multiples with odd constant term
};

/* Per-shape computation context for the plus-side realization; the minus side
 * is reached through transposition. Caches are monotone memo tables: readers
 * may race with writers, duplicated computation is allowed, results are
 * deterministic so last-writer-wins is safe. */
class UplusContext {
public:
    explicit UplusContext(Shape sh) : sh_(sh) {}
    Shape shape() const { return sh_; }

    Element zero(Side side = Side::plus) const { return Element(sh_, side); }
    Element identity(Side side = Side::plus) const;
    Element basis(const Mat& A) const; // single term A(0), side from triangularity

    /* (p E_{h,h+1})(0) . x on the plus side; terms whose matrix violates the
     * mixed 0/1 constraint are dropped (and counted). */
    Element left_mult_divided_E(int h, int p, const Element& x) const;

    Word monomial_word(const Mat& A) const;
    Element eval_word(const Word& w) const;
    Element apply_word(const Word& w, Element x) const;

    const Element& monomial_expansion(const Mat& A);
    const Closure& transition_closure(const Mat& A);
    Closure build_closure(const std::vector<Mat>& roots);
    /* cached per root matrix; defined alongside the level-r machinery */
    const MinusTransition& minus_transition(const Mat& root);

    Element bar_element(const Element& x);
    CanonicalRecord canonical(const Mat& A);            // triangular bar solve
    CanonicalRecord layered_subtraction(const Mat& A);  // monomial-combination route

    Element mult(const Element& x, const Element& y);
    Element root_vector(int a, int b);
    Element divided_root_power(int a, int b, int p);
    Element pbw(const Mat& A);        // strictly upper A
    Element pbw_minus(const Mat& A);  // strictly lower A, via tau

    std::vector<int> weight(const Element& x) const;

    /* forward substitution: coordinates of x over cl's monomial basis */
    std::vector<Laurent> monomial_coords(const Closure& cl, const Element& x) const;

    long dropped_terms() const { return dropped_.load(); }

private:
    Shape sh_;
    mutable std::atomic<long> dropped_{0};
    std::mutex mu_;
    std::map<Mat, Element> mono_cache_;
    std::map<Mat, Closure> closure_cache_;
    std::map<Mat, CanonicalRecord> canonical_cache_;
    std::map<Mat, CanonicalRecord> canonical_minus_cache_;
    std::map<Mat, MinusTransition> minus_cache_;
    std::map<std::tuple<int, int, int>, Element> root_cache_; // (a,b,p)

    friend CanonicalRecord canonical_minus(UplusContext&, const Mat&);
};

/* term-by-term matrix transpose, coefficients unchanged */
Element tau_transpose(const Element& x);

/* uncached variant for multi-root closures; defined with the level machinery */
MinusTransition compute_minus_transition(UplusContext& ctx, const Closure& cl);

/* product of minus-side elements, computed at a sufficient level and lifted
 * back to the stable coordinates */
Element stable_minus_product(UplusContext& ctx, const Element& x, const Element& y);

/* Canonical basis element for strictly lower A: the bar-invariant solve on
 * the minus side, run over the word-product transition. On shapes where the
 * odd-row inversion parity vanishes this is the plain transpose of the
 * plus-side record. */
CanonicalRecord canonical_minus(UplusContext& ctx, const Mat& A);

struct SerreViolation {
    std::string relation;
    Mat witness;
};
struct SerreReport {
    long relations_checked = 0;
    std::vector<SerreViolation> violations;
    bool ok() const { return violations.empty(); }
};

/* Checks QS4, QS5 and the E-side of QS6 as operator identities on the span of
 * all A(0) with norm(A) <= norm_bound. */
SerreReport serre_check(UplusContext& ctx, long norm_bound);

} // namespace supercb
