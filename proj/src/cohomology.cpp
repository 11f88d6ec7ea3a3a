#include "wps/cohomology.hpp"

#include <algorithm>
#include <functional>

#include "wps/errors.hpp"

namespace wps {

long long binom(long long n, long long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (long long i = 1; i <= r; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - r + i);
        acc /= static_cast<unsigned __int128>(i);
        WPS_ASSERT(acc <= static_cast<unsigned __int128>(__INT64_MAX__), "binom overflow");
    }
    return static_cast<long long>(acc);
}

long long h_line(int m, int q, long long k) {
    if (m < 1) throw input_error("h_line: m must be >= 1");
    if (q < 0) throw input_error("h_line: q must be >= 0");
    if (q == 0) return k >= 0 ? binom(m + k, m) : 0;
    if (q == m) return k <= -m - 1 ? binom(-k - 1, m) : 0;
    return 0;
}

long long h_omega(int m, int p, int q, long long k) {
    if (m < 1) throw input_error("h_omega: m must be >= 1");
    if (p < 0 || p > m) throw input_error("h_omega: need 0 <= p <= m");
    if (q < 0) return 0;
    if (q == 0 && k > p) return binom(k + m - p, k) * binom(k - 1, p);
    if (q == p && k == 0) return 1;
    if (q == m && k < p - m) return binom(p - k, -k) * binom(-k - 1, m - p);
    return 0;
}

long long h_tangent(int m, int q, long long k) {
    if (m < 1) throw input_error("h_tangent: m must be >= 1");
    if (m == 1) return h_line(1, q, k + 2); // T_{P^1} = O(2); Bott's p = 0 case degenerates
    return h_omega(m, m - 1, q, k + m + 1);
}

namespace {

void ascending_subsets(int n, int k, int start, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(cur.size()) == k) {
        emit(cur);
        return;
    }
    for (int i = start; i <= n; ++i) {
        cur.push_back(i);
        ascending_subsets(n, k, i + 1, cur, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<ObstructionSummand> obstruction_decomposition(const std::vector<long long>& b, int k) {
    int n = static_cast<int>(b.size());
    if (k < 2 || k % 2 != 0) throw input_error("obstruction degree must be even and >= 2");
    if (k > n) throw input_error("obstruction degree exceeds the odd dimension");
    std::vector<ObstructionSummand> out;
    std::vector<int> cur;
    ascending_subsets(n, k, 1, cur, [&](const std::vector<int>& idx) {
        ObstructionSummand s;
        s.indices = idx;
        long long sum = 0;
        for (int i : idx) sum += b[i - 1];
        s.twist = -sum;
        out.push_back(std::move(s));
    });
    return out;
}

NormalityCertificate normality_certificate(int m, const std::vector<long long>& b, long long d) {
    if (m < 2) throw input_error("normality_certificate: m must be >= 2");
    if (d < 1) throw input_error("normality_certificate: d must be >= 1");
    NormalityCertificate cert;
    cert.m = m;
    cert.b = b;
    cert.d = d;
    int n = static_cast<int>(b.size());
    for (int k = 2; k <= n; k += 2) {
        for (const ObstructionSummand& s : obstruction_decomposition(b, k)) {
            NormalitySummandRow row;
            row.indices = s.indices;
            row.twist = s.twist;
            row.h0_ambient = h_tangent(m, 0, s.twist);
            row.h1_twisted_ambient = h_tangent(m, 1, s.twist - d);
            row.vanishes = row.h0_ambient == 0 && row.h1_twisted_ambient == 0;
            if (!row.vanishes) cert.overall = NormalityCertificate::NotProvable;
            cert.summands.push_back(std::move(row));
        }
    }
    return cert;
}

long long quadric_normal_h0(int m, const std::vector<long long>& b, long long d) {
    if (d < 1) throw input_error("quadric_normal_h0: d must be >= 1");
    long long total = 0;
    int n = static_cast<int>(b.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) total += h_line(m, 0, d - b[i] - b[j]);
    }
    return total;
}

} // namespace wps
