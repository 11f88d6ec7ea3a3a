#include "wps/monomial.hpp"

#include "wps/errors.hpp"

namespace wps {

std::vector<int> Monomial::odd_indices() const {
    std::vector<int> idx;
    uint64_t m = odd;
    while (m) {
        idx.push_back(__builtin_ctzll(m) + 1);
        m &= m - 1;
    }
    return idx;
}

int odd_merge_sign(uint64_t left, uint64_t right) {
    if (left & right) return 0;
    int inversions = 0;
    uint64_t r = right;
    while (r) {
        int bit = __builtin_ctzll(r);
        // factors of `left` strictly above this index must be jumped over
        inversions += __builtin_popcountll(left & ~((uint64_t(1) << bit) - 1) & ~(uint64_t(1) << bit));
        r &= r - 1;
    }
    return (inversions & 1) ? -1 : 1;
}

int odd_removal_sign(uint64_t odd, int i) {
    WPS_ASSERT(i >= 1 && i <= kMaxOddVars && (odd >> (i - 1)) & 1, "odd_removal_sign: index not present");
    int below = __builtin_popcountll(odd & ((uint64_t(1) << (i - 1)) - 1));
    return (below & 1) ? -1 : 1;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    int la = a.odd_len(), lb = b.odd_len();
    if (la != lb) return la < lb;
    if (a.odd != b.odd) {
        // lex on ascending index sequences of equal length
        uint64_t x = a.odd, y = b.odd;
        while (x && y) {
            int ix = __builtin_ctzll(x), iy = __builtin_ctzll(y);
            if (ix != iy) return ix < iy;
            x &= x - 1;
            y &= y - 1;
        }
    }
    // reverse-lex on even exponents so that e.g. x1^2 renders before x2^2
    WPS_ASSERT(a.even.size() == b.even.size(), "monomial_less: arity mismatch");
    for (size_t i = 0; i < a.even.size(); ++i) {
        if (a.even[i] != b.even[i]) return a.even[i] > b.even[i];
    }
    return false;
}

} // namespace wps
