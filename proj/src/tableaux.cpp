#include "supercb/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace supercb {

bool is_partition(const Partition& pi) {
    for (size_t i = 0; i < pi.size(); ++i) {
        if (pi[i] <= 0) return false;
        if (i && pi[i] > pi[i - 1]) return false;
    }
    return true;
}

bool partition_in_family(const Partition& pi, Shape sh) {
    if (!is_partition(pi)) return false;
    const int row_after_even = (int)pi.size() > sh.m ? pi[sh.m] : 0;
    return row_after_even <= sh.n;
}

std::vector<Partition> partitions_of(int r) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(r, r);
    return out;
}

std::vector<Partition> partitions_in_family(int r, Shape sh) {
    std::vector<Partition> out;
    for (Partition& pi : partitions_of(r))
        if (partition_in_family(pi, sh)) out.push_back(std::move(pi));
    return out;
}

std::string Tableau::str() const {
    std::ostringstream o;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) o << "/";
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j) o << ",";
            o << rows[i][j];
        }
    }
    return o.str();
}

bool is_semistandard_super(const Tableau& t, Shape sh) {
    const int N = sh.size();
    for (size_t i = 0; i < t.rows.size(); ++i) {
        if ((int)t.rows[i].size() != t.shape[i]) return false;
        for (size_t j = 0; j < t.rows[i].size(); ++j) {
            const int v = t.rows[i][j];
            if (v < 1 || v > N) return false;
            if (j) {
                const int left = t.rows[i][j - 1];
                if (v < left) return false;
                if (v == left && v > sh.m) return false;
            }
            if (i) {
                const int up = t.rows[i - 1][j];
                if (v < up) return false;
                if (v == up && v <= sh.m) return false;
            }
        }
    }
    return true;
}

std::vector<Tableau> enumerate_ssyt(const Partition& pi, const Comp& mu, Shape sh) {
    const int N = sh.size();
    if ((int)mu.size() != N) throw std::invalid_argument("content length mismatch");
    std::vector<Tableau> out;
    Tableau t;
    t.shape = pi;
    t.rows.resize(pi.size());
    for (size_t i = 0; i < pi.size(); ++i) t.rows[i].assign(pi[i], 0);
    Comp left = mu;

    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
        if (i == pi.size()) {
            out.push_back(t);
            return;
        }
        const size_t ni = (j + 1 < (size_t)pi[i]) ? i : i + 1;
        const size_t nj = (j + 1 < (size_t)pi[i]) ? j + 1 : 0;
        int lo = 1;
        if (j) lo = std::max(lo, t.rows[i][j - 1] + (t.rows[i][j - 1] > sh.m ? 1 : 0));
        if (i) {
            const int up = t.rows[i - 1][j];
            lo = std::max(lo, up + (up <= sh.m ? 1 : 0));
        }
        for (int v = lo; v <= N; ++v) {
            if (left[v - 1] == 0) continue;
            t.rows[i][j] = v;
            --left[v - 1];
            rec(ni, nj);
            ++left[v - 1];
            t.rows[i][j] = 0;
        }
    };
    if (comp_sum(mu) != comp_sum(pi)) return out;
    if (!pi.empty()) rec(0, 0);
    else out.push_back(t);
    return out;
}

Comp pi_tilde(const Partition& pi, Shape sh) {
    if (!partition_in_family(pi, sh))
        throw std::invalid_argument("partition outside the shape family");
    Comp out(sh.size(), 0);
    for (int i = 0; i < sh.m && i < (int)pi.size(); ++i) out[i] = pi[i];
    // conjugate of the tail (pi_{m+1}, pi_{m+2}, ...)
    for (int col = 1; col <= sh.n; ++col) {
        int cnt = 0;
        for (size_t row = sh.m; row < pi.size(); ++row)
            if (pi[row] >= col) ++cnt;
        out[sh.m + col - 1] = cnt;
    }
    return out;
}

Tableau t_pi(const Partition& pi, Shape sh) {
    std::vector<Tableau> all = enumerate_ssyt(pi, pi_tilde(pi, sh), sh);
    if (all.size() != 1)
        throw std::logic_error("distinguished tableau is not unique");
    return all.front();
}

bool dominates(const Comp& a, const Comp& b) {
    if (comp_sum(a) != comp_sum(b)) throw std::invalid_argument("sizes differ");
    long sa = 0, sb = 0;
    const size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

TableauCount count_tableaux(const Partition& pi, Shape sh) {
    TableauCount c;
    const int r = comp_sum(pi);
    for (const Comp& mu : enumerate_compositions(sh.size(), r)) {
        long k = (long)enumerate_ssyt(pi, mu, sh).size();
        if (k > 0) {
            c.total += k;
            c.by_content.push_back({mu, k});
        }
    }
    return c;
}

} // namespace supercb
