#pragma once

#include "supercb/laurent.hpp"
#include "supercb/matrices.hpp"
#include "supercb/uplus.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace supercb {

/* Finite combination of basis symbols [D], D in M(m|n,r). */
struct SchurElement {
    Shape sh;
    int r = 0;
    std::map<Mat, Laurent> terms;

    SchurElement(Shape s, int level) : sh(s), r(level) {}

    bool is_zero() const { return terms.empty(); }
    void add_term(const Mat& D, const Laurent& c);
    SchurElement& operator+=(const SchurElement& o);
    SchurElement& operator-=(const SchurElement& o);
    SchurElement scaled(const Laurent& c) const;
    friend bool operator==(const SchurElement& a, const SchurElement& b) {
        return a.sh == b.sh && a.r == b.r && a.terms == b.terms;
    }
    friend bool operator!=(const SchurElement& a, const SchurElement& b) { return !(a == b); }
    std::string str() const;
};

/* Margin class of M(m|n,r) with the bar-fixed spanning family N_D expressed
 * over {[C]}: N_D = sum_C nmat[index(D)][index(C)] [C], unitriangular. */
struct ClassClosure {
    std::vector<Mat> order;
    std::map<Mat, int> index;
    std::vector<std::vector<Laurent>> nmat;
};

/* The level-r algebra presented by the generator multiplication formulas. */
class SchurContext {
public:
    SchurContext(UplusContext& up, int r);

    Shape shape() const { return sh_; }
    int level() const { return r_; }
    UplusContext& uplus() { return up_; }

    SchurElement zero() const { return SchurElement(sh_, r_); }
    SchurElement basis(const Mat& D) const;
    SchurElement identity() const;

    /* (p E_{h,h+1})(0,r) . x and (p E_{h+1,h})(0,r) . x */
    SchurElement left_mult_E(int h, int p, const SchurElement& x) const;
    SchurElement left_mult_F(int h, int p, const SchurElement& x) const;

    /* A(j, r) for zero-diagonal A; zero when |A| > r; invalid keys dropped. */
    SchurElement span_element(const Mat& A, const std::vector<int>& j) const;
    SchurElement span_element(const Mat& A) const; // j = 0

    SchurElement eta(const Element& x) const;

    SchurElement idempotent(const Comp& lambda) const;                   // [diag lambda]
    SchurElement filter_ro(const SchurElement& x, const Comp& lambda) const;  // [diag lambda] . x
    static SchurElement right_mult_idempotent(const SchurElement& x, const Comp& lambda);

    SchurElement apply_plus_word(const Word& w, SchurElement x) const;
    /* applies the tau image of a plus word, i.e. the matching product of
     * (p E_{h+1,h})(0,r) factors */
    SchurElement apply_minus_of_plus_word(const Word& w, SchurElement x) const;

    /* A(0,r) . y for strictly triangular A, through monomial words */
    SchurElement apply_stable(const Mat& A, const SchurElement& y);

    /* A^-(0,r) [diag lambda] A^+(0,r) for zero-diagonal A, |lambda| = r */
    SchurElement pbw_product(const Mat& A, const Comp& lambda);

    SchurElement bar(const SchurElement& x);
    SchurElement canonical_Xi(const Mat& D);

    const ClassClosure& class_closure(const Comp& row_sums, const Comp& col_sums);

    long dropped_terms() const { return dropped_.load(); }

private:
    UplusContext& up_;
    Shape sh_;
    int r_;
    mutable std::atomic<long> dropped_{0};
    std::mutex mu_;
    std::map<std::pair<Comp, Comp>, ClassClosure> class_cache_;

    SchurElement n_element(const Mat& D); // the family element for D, sign divided out
};

} // namespace supercb
