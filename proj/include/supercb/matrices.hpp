#pragma once

#include <optional>
#include <string>
#include <vector>

namespace supercb {

/* (m|n) super shape; indices 1..m are even, m+1..m+n odd. */
struct Shape {
    int m = 0;
    int n = 0;

    int size() const { return m + n; }
    bool odd_index(int i) const { return i > m; }         // \hat i, 1-based
    int sign_at(int i) const { return odd_index(i) ? -1 : 1; }
    int step(int h) const { return odd_index(h) ? -2 : 2; } // variable v_h^2

    friend bool operator==(const Shape& a, const Shape& b) { return a.m == b.m && a.n == b.n; }
    friend bool operator!=(const Shape& a, const Shape& b) { return !(a == b); }
    friend bool operator<(const Shape& a, const Shape& b) {
        return a.m != b.m ? a.m < b.m : a.n < b.n;
    }
};

using Comp = std::vector<int>; // composition, one part per index

int comp_sum(const Comp& c);
bool comp_leq(const Comp& a, const Comp& b); // componentwise

/* Dense (m+n) x (m+n) matrix of small naturals. */
class Mat {
public:
    Mat() : sh_{0, 0} {} // empty sentinel
    explicit Mat(Shape sh) : sh_(sh), e_(sh.size() * sh.size(), 0) {}
    Mat(Shape sh, std::vector<int> entries);

    static Mat unit(Shape sh, int i, int j, int value = 1);
    static Mat diag(Shape sh, const Comp& d);

    Shape shape() const { return sh_; }
    int at(int i, int j) const { return e_[(i - 1) * sh_.size() + (j - 1)]; }
    int& at(int i, int j) { return e_[(i - 1) * sh_.size() + (j - 1)]; }
    const std::vector<int>& entries() const { return e_; }

    Comp ro() const;
    Comp co() const;
    int total() const;
    long norm() const;

    /* mixed-block entries (i<=m<j or j<=m<i) are 0 or 1 */
    bool is_valid() const;
    bool is_strictly_upper() const;
    bool is_strictly_lower() const;
    bool is_zero_diagonal() const;
    bool is_diagonal() const;
    bool is_zero() const;

    Mat transpose() const;
    Mat plus_part() const;   // strictly upper entries
    Mat minus_part() const;  // strictly lower entries
    Comp diagonal() const;

    Mat added(int i, int j, int delta) const;
    Mat add_diag(const Comp& d) const;

    /* parity of \bar A = sum over i>m>=k, m<j<l of a_{i,j} a_{k,l} */
    int sign_bar() const;
    /* parity of \hat A = sum over m<k<i, j<l of a_{i,j} a_{k,l} */
    int sign_hat() const;

    Comp hooks() const; // h_i = a_{i,i} + sum_{j>i} (a_{i,j} + a_{j,i})

    std::string str() const; // compact text form, e.g. "2E[1,2]+E[1,3]"

    friend bool operator==(const Mat& a, const Mat& b) { return a.sh_ == b.sh_ && a.e_ == b.e_; }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
    friend bool operator<(const Mat& a, const Mat& b) {
        if (a.sh_ != b.sh_) return a.sh_ < b.sh_;
        return a.e_ < b.e_;
    }

private:
    Shape sh_;
    std::vector<int> e_;
};

/* A + diag(lambda - hooks(A)); throws if lambda < hooks(A) anywhere. */
Mat a_lambda(const Mat& A, const Comp& lambda);

/* Corner-sum tables driving the order: upper[s][t] = sum_{i<=s, j>=t} a_{i,j}
 * for s < t, lower[s][t] = sum_{i>=s, j<=t} a_{i,j} for s > t. */
struct CornerTables {
    int N = 0;
    std::vector<long> upper, lower; // N*N, row-major, unused cells zero
    long up(int s, int t) const { return upper[(s - 1) * N + (t - 1)]; }
    long lo(int s, int t) const { return lower[(s - 1) * N + (t - 1)]; }
};
CornerTables corner_tables(const Mat& A);

bool preceq(const CornerTables& B, const CornerTables& A);
bool preceq(const Mat& B, const Mat& A);
bool prec(const Mat& B, const Mat& A);       // preceq and different off-diagonal parts
bool preceq_rc(const Mat& B, const Mat& A);  // equal margins and preceq

/* sigma_A(k) = sum_{i<=m, j>k} a_{i,j} */
int stat_sigma(const Mat& A, int k);
/* f_A(h,k) = sum_{j>=k} a_{h,j} - (-1)^{delta_{m,h}} sum_{j>k} a_{h+1,j} */
int stat_f_cap(const Mat& A, int h, int k);
/* f_h(nu,A) = sum_{j>=t} a_{h,j} nu_t - sum_{j>t} a_{h+1,j} nu_t + sum_{t<t'} nu_t nu_{t'} */
long stat_fh(const Comp& nu, const Mat& A, int h);
long stat_gh(const Comp& nu, const Mat& A, int h);
/* f_m(e_k, A) = sum_{j>=k} a_{m,j} + sum_{j>k} a_{m+1,j} */
int stat_fm(int k, const Mat& A);
int stat_gm(int k, const Mat& A);

/* sum_{k<=m, l>i} a_{k,l}: the weight of a diagonal unit at i>m inside sign_bar */
int upper_mixed_beyond(const Mat& A, int i);

/* All nu with |nu| = p (and nu <= bound when given), first part descending. */
std::vector<Comp> enumerate_compositions(int parts, int p, const Comp* bound = nullptr);

std::vector<Mat> enumerate_upper(Shape sh, int entry_max, long norm_max = -1);
std::vector<Mat> enumerate_lower(Shape sh, int entry_max, long norm_max = -1);
std::vector<Mat> enumerate_zero_diag(Shape sh, int size_max);
std::vector<Mat> enumerate_level(Shape sh, int r);
std::vector<Mat> enumerate_margin_class(Shape sh, const Comp& row_sums, const Comp& col_sums);

/* topological comparator for poset sweeps: norm descending, then entries */
bool topo_before(const Mat& a, const Mat& b);

} // namespace supercb
