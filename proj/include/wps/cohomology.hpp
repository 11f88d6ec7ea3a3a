#pragma once
#include <cstdint>
#include <vector>

namespace wps {

// binom(n, r) for n, r >= 0; returns 0 when r < 0, n < 0 or r > n.
long long binom(long long n, long long r);

// dim H^q(P^m, O(k)). Nonzero only for q = 0 (k >= 0) and q = m (k <= -m-1).
long long h_line(int m, int q, long long k);

// dim H^q(P^m, Omega^p(k)) by Bott's closed form.
long long h_omega(int m, int p, int q, long long k);

// dim H^q(P^m, T(k)); uses T = Omega^{m-1}(m+1) for m >= 2 and T_{P^1} = O(2).
long long h_tangent(int m, int q, long long k);

// One summand T(-b_I) of the even obstruction sheaf, indexed by an ascending
// odd index set I.
struct ObstructionSummand {
    std::vector<int> indices; // ascending, 1-based
    long long twist = 0;      // -sum of the odd weights over I
};

// All summands of the degree-k obstruction sheaf piece for odd weights b;
// k even, 2 <= k <= n; binom(n, k) summands in lexicographic index order.
std::vector<ObstructionSummand> obstruction_decomposition(const std::vector<long long>& b, int k);

struct NormalitySummandRow {
    std::vector<int> indices;
    long long twist = 0;             // -b_I
    long long h0_ambient = 0;        // h^0(P^m, T(-b_I))
    long long h1_twisted_ambient = 0; // h^1(P^m, T(-b_I - d))
    bool vanishes = false;
};

// Sufficient vanishing-chain certificate for k-normality of a smooth degree-d
// hypersurface inside the weighted superspace over P^m: every even obstruction
// summand must have vanishing ambient H^0 and twisted H^1. When a summand
// fails the chain, the result is NotProvable (the criterion is one-sided).
struct NormalityCertificate {
    enum Overall { Normal, NotProvable } overall = Normal;
    int m = 0;
    std::vector<long long> b;
    long long d = 0;
    std::vector<NormalitySummandRow> summands;
};

NormalityCertificate normality_certificate(int m, const std::vector<long long>& b, long long d);

// Dimension of the space of global homomorphisms I/I^2 -> wedge^2 T*| for a
// degree-d hypersurface, computed ambiently: sum over pairs i < j of
// h^0(P^m, O(d - b_i - b_j)).
long long quadric_normal_h0(int m, const std::vector<long long>& b, long long d);

} // namespace wps
