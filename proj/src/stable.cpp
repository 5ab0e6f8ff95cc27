#include "supercb/stable.hpp"

#include <sstream>
#include <stdexcept>

namespace supercb {

std::vector<StableTerm> stable_E_mult(const Mat& A, int h, const std::vector<int>& j) {
    const Shape sh = A.shape();
    const int N = sh.size(), m = sh.m;
    if (!A.is_valid() || !A.is_zero_diagonal())
        throw std::invalid_argument("stable product needs a valid zero-diagonal matrix");
    if (h < 1 || h >= N) throw std::invalid_argument("generator index out of range");
    const int s = sh.sign_at(h);

    std::vector<StableTerm> out;
    for (int k = 1; k <= N; ++k) {
        if (k != h + 1 && A.at(h + 1, k) < 1) continue;

        Mat B(sh);
        Comp t(N, 0); // diagonal reindex: mu = lambda + t
        if (k == h + 1) {
            B = A.added(h, h + 1, 1);
            t[h] = 1; // e_{h+1}
        } else if (k == h) {
            B = A.added(h + 1, h, -1);
            t[h - 1] = -1; // -e_h
        } else {
            B = A.added(h, k, 1).added(h + 1, k, -1);
        }
        if (!B.is_valid()) continue; // dropped term

        long c0 = 0;
        std::vector<int> alpha(N, 0);
        long parity = 0;

        if (h != m) {
            long phi = 0;
            for (int j2 = k; j2 <= N; ++j2) phi += A.at(h, j2);
            for (int j2 = k + 1; j2 <= N; ++j2) phi -= A.at(h + 1, j2);
            c0 += s * phi;
            if (k <= h) {
                alpha[h - 1] += s;
                alpha[h] -= s;
                c0 += s * (t[h - 1] - t[h]);
            }
        } else {
            long phi = 0;
            for (int j2 = k; j2 <= N; ++j2) phi += A.at(m, j2);
            for (int j2 = k + 1; j2 <= N; ++j2) phi += A.at(m + 1, j2);
            c0 += phi;
            if (k <= m) {
                alpha[m - 1] += 1;
                alpha[m] += 1;
                c0 += t[m - 1] + t[m];
            }
            long sigma0 = 0;
            for (int i = m + 1; i <= N; ++i)
                for (int j2 = 1; j2 < k; ++j2) sigma0 += A.at(i, j2);
            parity += sigma0;
        }

        for (int i = 1; i <= N; ++i) {
            c0 += (long)sh.sign_at(i) * t[i - 1] * j[i - 1];
            alpha[i - 1] += sh.sign_at(i) * j[i - 1];
        }

        parity += A.sign_bar() + B.sign_bar();
        if (k == h + 1 && h + 1 > m) parity += upper_mixed_beyond(A, h + 1);
        if (k == h && h > m) parity += upper_mixed_beyond(A, h);

        for (int i = m + 1; i <= N; ++i) {
            long lin = upper_mixed_beyond(A, i) + upper_mixed_beyond(B, i);
            if (h == m && i < k) lin += 1;
            if (lin % 2 != 0)
                throw std::logic_error("stable product: diagonal parity does not cancel");
        }

        auto push = [&](Laurent num, const std::vector<int>& a, int den_pow) {
            if (parity % 2) num = -num;
            StableTerm st;
            st.B = B;
            st.jprime.assign(N, 0);
            for (int i = 1; i <= N; ++i) st.jprime[i - 1] = sh.sign_at(i) * a[i - 1];
            st.num = std::move(num);
            st.den_pow = den_pow;
            out.push_back(std::move(st));
        };

        if (k != h) {
            Laurent num = Laurent::monomial((int)c0) * gauss_int(A.at(h, k) + 1, sh.step(h)).bar();
            push(std::move(num), alpha, 0);
        } else {
            // bar[[lambda_h]] = (1 - q^{lambda_h}) / (1 - q), q = v^{-2s}
            push(Laurent::monomial((int)c0), alpha, 1);
            std::vector<int> alpha2 = alpha;
            alpha2[h - 1] += -2 * s;
            push(-Laurent::monomial((int)c0), alpha2, 1);
        }
    }
    return out;
}

StabInstanceReport verify_stabilization(UplusContext& up, const Mat& A, int h,
                                        const std::vector<int>& j,
                                        const std::vector<int>& r_list) {
    StabInstanceReport rep;
    rep.A = A;
    rep.h = h;
    rep.j = j;
    rep.r_list = r_list;

    std::vector<StableTerm> data = stable_E_mult(A, h, j);
    rep.family_terms = data.size();

    int dmax = 0;
    for (const StableTerm& t : data) dmax = std::max(dmax, t.den_pow);
    const Laurent q = Laurent::monomial(-2 * A.shape().sign_at(h));
    const Laurent den = Laurent(1) - q;

    rep.pass = true;
    std::ostringstream detail;
    for (int r : r_list) {
        if (r < A.total() + 1) {
            rep.pass = false;
            detail << "r=" << r << " below |A|+1; ";
            continue;
        }
        SchurContext sc(up, r);
        SchurElement lhs = sc.left_mult_E(h, 1, sc.span_element(A, j));
        for (int d = 0; d < dmax; ++d) lhs = lhs.scaled(den);

        SchurElement rhs = sc.zero();
        for (const StableTerm& t : data) {
            Laurent coeff = t.num;
            for (int d = t.den_pow; d < dmax; ++d) coeff *= den;
            rhs += sc.span_element(t.B, t.jprime).scaled(coeff);
        }
        if (lhs != rhs) {
            rep.pass = false;
            detail << "mismatch at r=" << r << "; ";
        }
    }
    rep.detail = detail.str();
    return rep;
}

} // namespace supercb
