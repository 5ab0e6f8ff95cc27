#include "supercb/matrices.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace supercb {

int comp_sum(const Comp& c) {
    int s = 0;
    for (int x : c) s += x;
    return s;
}

bool comp_leq(const Comp& a, const Comp& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mat::Mat(Shape sh, std::vector<int> entries) : sh_(sh), e_(std::move(entries)) {
    if ((int)e_.size() != sh.size() * sh.size())
        throw std::invalid_argument("matrix entries do not match shape");
}

Mat Mat::unit(Shape sh, int i, int j, int value) {
    Mat A(sh);
    A.at(i, j) = value;
    return A;
}

Mat Mat::diag(Shape sh, const Comp& d) {
    if ((int)d.size() != sh.size()) throw std::invalid_argument("diag length mismatch");
    Mat A(sh);
    for (int i = 1; i <= sh.size(); ++i) A.at(i, i) = d[i - 1];
    return A;
}

Comp Mat::ro() const {
    const int N = sh_.size();
    Comp r(N, 0);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) r[i - 1] += at(i, j);
    return r;
}

Comp Mat::co() const {
    const int N = sh_.size();
    Comp c(N, 0);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) c[j - 1] += at(i, j);
    return c;
}

int Mat::total() const {
    int s = 0;
    for (int x : e_) s += x;
    return s;
}

long Mat::norm() const {
    const int N = sh_.size();
    long s = 0;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            long d = j - i;
            s += d * (d + 1) / 2 * (at(i, j) + at(j, i));
        }
    return s;
}

bool Mat::is_valid() const {
    const int N = sh_.size();
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            if (at(i, j) < 0) return false;
            const bool mixed = (i <= sh_.m) != (j <= sh_.m);
            if (mixed && at(i, j) > 1) return false;
        }
    return true;
}

bool Mat::is_strictly_upper() const {
    const int N = sh_.size();
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= i; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

bool Mat::is_strictly_lower() const {
    const int N = sh_.size();
    for (int i = 1; i <= N; ++i)
        for (int j = i; j <= N; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

bool Mat::is_zero_diagonal() const {
    for (int i = 1; i <= sh_.size(); ++i)
        if (at(i, i) != 0) return false;
    return true;
}

bool Mat::is_diagonal() const {
    const int N = sh_.size();
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

bool Mat::is_zero() const {
    for (int x : e_)
        if (x != 0) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat T(sh_);
    const int N = sh_.size();
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) T.at(j, i) = at(i, j);
    return T;
}

Mat Mat::plus_part() const {
    Mat P(sh_);
    const int N = sh_.size();
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) P.at(i, j) = at(i, j);
    return P;
}

Mat Mat::minus_part() const {
    Mat P(sh_);
    const int N = sh_.size();
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j < i; ++j) P.at(i, j) = at(i, j);
    return P;
}

Comp Mat::diagonal() const {
    Comp d(sh_.size());
    for (int i = 1; i <= sh_.size(); ++i) d[i - 1] = at(i, i);
    return d;
}

Mat Mat::added(int i, int j, int delta) const {
    Mat A = *this;
    A.at(i, j) += delta;
    return A;
}

Mat Mat::add_diag(const Comp& d) const {
    Mat A = *this;
    for (int i = 1; i <= sh_.size(); ++i) A.at(i, i) += d[i - 1];
    return A;
}

int Mat::sign_bar() const {
    const int N = sh_.size(), m = sh_.m;
    long s = 0;
    for (int i = m + 1; i <= N; ++i)
        for (int j = m + 1; j <= N; ++j)
            if (at(i, j) != 0)
                for (int k = 1; k <= m; ++k)
                    for (int l = j + 1; l <= N; ++l) s += (long)at(i, j) * at(k, l);
    return (int)(s & 1);
}

int Mat::sign_hat() const {
    const int N = sh_.size(), m = sh_.m;
    long s = 0;
    for (int i = m + 2; i <= N; ++i)
        for (int k = m + 1; k < i; ++k)
            for (int j = 1; j <= N; ++j)
                for (int l = j + 1; l <= N; ++l) s += (long)at(i, j) * at(k, l);
    return (int)(s & 1);
}

Comp Mat::hooks() const {
    const int N = sh_.size();
    Comp h(N, 0);
    for (int i = 1; i <= N; ++i) {
        h[i - 1] = at(i, i);
        for (int j = i + 1; j <= N; ++j) h[i - 1] += at(i, j) + at(j, i);
    }
    return h;
}

std::string Mat::str() const {
    const int N = sh_.size();
    std::ostringstream out;
    bool first = true;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            if (i == j || at(i, j) == 0) continue;
            if (!first) out << "+";
            first = false;
            if (at(i, j) != 1) out << at(i, j);
            out << "E[" << i << "," << j << "]";
        }
    Comp d = diagonal();
    if (comp_sum(d) != 0) {
        if (!first) out << "+";
        first = false;
        out << "diag(";
        for (int i = 0; i < N; ++i) out << (i ? "," : "") << d[i];
        out << ")";
    }
    if (first) out << "0";
    return out.str();
}

Mat a_lambda(const Mat& A, const Comp& lambda) {
    Comp h = A.hooks();
    if (!comp_leq(h, lambda)) throw std::invalid_argument("hook sums exceed weight");
    Comp d(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) d[i] = lambda[i] - h[i];
    return A.add_diag(d);
}

CornerTables corner_tables(const Mat& A) {
    const int N = A.shape().size();
    CornerTables T;
    T.N = N;
    T.upper.assign(N * N, 0);
    T.lower.assign(N * N, 0);
    for (int s = 1; s <= N; ++s)
        for (int t = 1; t <= N; ++t) {
            long u = 0, l = 0;
            if (s < t)
                for (int i = 1; i <= s; ++i)
                    for (int j = t; j <= N; ++j) u += A.at(i, j);
            if (s > t)
                for (int i = s; i <= N; ++i)
                    for (int j = 1; j <= t; ++j) l += A.at(i, j);
            T.upper[(s - 1) * N + (t - 1)] = u;
            T.lower[(s - 1) * N + (t - 1)] = l;
        }
    return T;
}

bool preceq(const CornerTables& B, const CornerTables& A) {
    const int N = A.N;
    for (int s = 1; s <= N; ++s)
        for (int t = 1; t <= N; ++t) {
            if (s < t && B.up(s, t) > A.up(s, t)) return false;
            if (s > t && B.lo(s, t) > A.lo(s, t)) return false;
        }
    return true;
}

bool preceq(const Mat& B, const Mat& A) {
    if (B.shape() != A.shape()) throw std::invalid_argument("shape mismatch");
    return preceq(corner_tables(B), corner_tables(A));
}

bool prec(const Mat& B, const Mat& A) {
    return preceq(B, A) && !(B.plus_part() == A.plus_part() && B.minus_part() == A.minus_part());
}

bool preceq_rc(const Mat& B, const Mat& A) {
    return B.ro() == A.ro() && B.co() == A.co() && preceq(B, A);
}

int stat_sigma(const Mat& A, int k) {
    int s = 0;
    for (int i = 1; i <= A.shape().m; ++i)
        for (int j = k + 1; j <= A.shape().size(); ++j) s += A.at(i, j);
    return s;
}

int stat_f_cap(const Mat& A, int h, int k) {
    const int N = A.shape().size(), m = A.shape().m;
    int first = 0, second = 0;
    for (int j = k; j <= N; ++j) first += A.at(h, j);
    for (int j = k + 1; j <= N; ++j) second += A.at(h + 1, j);
    return (h == m) ? first + second : first - second;
}

long stat_fh(const Comp& nu, const Mat& A, int h) {
    const int N = A.shape().size();
    long s = 0;
    for (int t = 1; t <= N; ++t) {
        if (nu[t - 1] == 0) continue;
        for (int j = t; j <= N; ++j) s += (long)A.at(h, j) * nu[t - 1];
        for (int j = t + 1; j <= N; ++j) s -= (long)A.at(h + 1, j) * nu[t - 1];
    }
    for (int t = 1; t <= N; ++t)
        for (int tp = t + 1; tp <= N; ++tp) s += (long)nu[t - 1] * nu[tp - 1];
    return s;
}

long stat_gh(const Comp& nu, const Mat& A, int h) {
    const int N = A.shape().size();
    long s = 0;
    for (int t = 1; t <= N; ++t) {
        if (nu[t - 1] == 0) continue;
        for (int j = 1; j <= t; ++j) s += (long)A.at(h + 1, j) * nu[t - 1];
        for (int j = 1; j < t; ++j) s -= (long)A.at(h, j) * nu[t - 1];
    }
    for (int t = 1; t <= N; ++t)
        for (int tp = t + 1; tp <= N; ++tp) s += (long)nu[t - 1] * nu[tp - 1];
    return s;
}

int stat_fm(int k, const Mat& A) {
    const int N = A.shape().size(), m = A.shape().m;
    int s = 0;
    for (int j = k; j <= N; ++j) s += A.at(m, j);
    for (int j = k + 1; j <= N; ++j) s += A.at(m + 1, j);
    return s;
}

int stat_gm(int k, const Mat& A) {
    const int m = A.shape().m;
    int s = 0;
    for (int j = 1; j <= k; ++j) s += A.at(m + 1, j);
    for (int j = 1; j < k; ++j) s += A.at(m, j);
    return s;
}

int upper_mixed_beyond(const Mat& A, int i) {
    const int N = A.shape().size(), m = A.shape().m;
    int s = 0;
    for (int k = 1; k <= m; ++k)
        for (int l = i + 1; l <= N; ++l) s += A.at(k, l);
    return s;
}

std::vector<Comp> enumerate_compositions(int parts, int p, const Comp* bound) {
    std::vector<Comp> out;
    Comp cur(parts, 0);
    std::function<void(int, int)> rec = [&](int idx, int rest) {
        if (idx == parts - 1) {
            if (bound && rest > (*bound)[idx]) return;
            cur[idx] = rest;
            out.push_back(cur);
            return;
        }
        int hi = bound ? std::min(rest, (*bound)[idx]) : rest;
        for (int v = hi; v >= 0; --v) {
            cur[idx] = v;
            rec(idx + 1, rest - v);
        }
    };
    if (parts == 0) {
        if (p == 0) out.push_back({});
        return out;
    }
    rec(0, p);
    return out;
}

namespace {

std::vector<Mat> enumerate_triangular(Shape sh, int entry_max, long norm_max, bool upper) {
    const int N = sh.size();
    std::vector<std::pair<int, int>> pos;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) pos.push_back(upper ? std::make_pair(i, j) : std::make_pair(j, i));
    std::vector<Mat> out;
    Mat cur(sh);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (norm_max >= 0 && cur.norm() > norm_max) return;
        if (k == pos.size()) {
            out.push_back(cur);
            return;
        }
        auto [i, j] = pos[k];
        const bool mixed = (i <= sh.m) != (j <= sh.m);
        const int hi = mixed ? std::min(entry_max, 1) : entry_max;
        for (int v = 0; v <= hi; ++v) {
            cur.at(i, j) = v;
            rec(k + 1);
        }
        cur.at(i, j) = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Mat> enumerate_upper(Shape sh, int entry_max, long norm_max) {
    return enumerate_triangular(sh, entry_max, norm_max, true);
}

std::vector<Mat> enumerate_lower(Shape sh, int entry_max, long norm_max) {
    return enumerate_triangular(sh, entry_max, norm_max, false);
}

std::vector<Mat> enumerate_zero_diag(Shape sh, int size_max) {
    const int N = sh.size();
    std::vector<std::pair<int, int>> pos;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (i != j) pos.push_back({i, j});
    std::vector<Mat> out;
    Mat cur(sh);
    std::function<void(size_t, int)> rec = [&](size_t k, int rest) {
        if (k == pos.size()) {
            out.push_back(cur);
            return;
        }
        auto [i, j] = pos[k];
        const bool mixed = (i <= sh.m) != (j <= sh.m);
        const int hi = mixed ? std::min(rest, 1) : rest;
        for (int v = 0; v <= hi; ++v) {
            cur.at(i, j) = v;
            rec(k + 1, rest - v);
        }
        cur.at(i, j) = 0;
    };
    rec(0, size_max);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mat> enumerate_level(Shape sh, int r) {
    const int N = sh.size();
    std::vector<std::pair<int, int>> pos;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) pos.push_back({i, j});
    std::vector<Mat> out;
    Mat cur(sh);
    std::function<void(size_t, int)> rec = [&](size_t k, int rest) {
        if (k == pos.size()) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        auto [i, j] = pos[k];
        const bool mixed = (i <= sh.m) != (j <= sh.m);
        const int hi = mixed ? std::min(rest, 1) : rest;
        for (int v = 0; v <= hi; ++v) {
            cur.at(i, j) = v;
            rec(k + 1, rest - v);
        }
        cur.at(i, j) = 0;
    };
    rec(0, r);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mat> enumerate_margin_class(Shape sh, const Comp& row_sums, const Comp& col_sums) {
    const int N = sh.size();
    if (comp_sum(row_sums) != comp_sum(col_sums))
        throw std::invalid_argument("margin sums differ");
    std::vector<Mat> out;
    Mat cur(sh);
    Comp col_left = col_sums;
    std::function<void(int)> rec_row = [&](int i) {
        if (i > N) {
            out.push_back(cur);
            return;
        }
        // fill row i with sum row_sums[i-1], bounded by remaining column budget
        std::function<void(int, int)> rec_cell = [&](int j, int rest) {
            if (j == N) {
                const bool mixed = (i <= sh.m) != (j <= sh.m);
                if (rest > col_left[j - 1] || (mixed && rest > 1)) return;
                cur.at(i, j) = rest;
                col_left[j - 1] -= rest;
                rec_row(i + 1);
                col_left[j - 1] += rest;
                cur.at(i, j) = 0;
                return;
            }
            const bool mixed = (i <= sh.m) != (j <= sh.m);
            int hi = std::min(rest, col_left[j - 1]);
            if (mixed) hi = std::min(hi, 1);
            for (int v = 0; v <= hi; ++v) {
                cur.at(i, j) = v;
                col_left[j - 1] -= v;
                rec_cell(j + 1, rest - v);
                col_left[j - 1] += v;
                cur.at(i, j) = 0;
            }
        };
        rec_cell(1, row_sums[i - 1]);
    };
    rec_row(1);
    std::sort(out.begin(), out.end());
    return out;
}

bool topo_before(const Mat& a, const Mat& b) {
    long na = a.norm(), nb = b.norm();
    if (na != nb) return na > nb;
    return a.entries() < b.entries();
}

} // namespace supercb
