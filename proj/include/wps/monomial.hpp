#pragma once
#include <cstdint>
#include <vector>

namespace wps {

// At most this many odd variables per ring; odd parts are stored as bitmasks.
inline constexpr int kMaxOddVars = 64;

// Monomial of C[x_1..x_E | t_1..t_O]: even exponent vector plus a bitmask of odd
// indices. Bit j-1 set means t_j occurs; the canonical representative is the
// ascending product t_{i_1}...t_{i_k}, i_1 < ... < i_k.
struct Monomial {
    std::vector<int32_t> even;
    uint64_t odd = 0;

    int odd_len() const { return __builtin_popcountll(odd); }
    bool operator==(const Monomial& o) const { return odd == o.odd && even == o.even; }
    std::vector<int> odd_indices() const; // ascending 1-based indices
};

// Sign of merging two ascending odd words into one ascending word, counting the
// transpositions that move each factor of `right` past the larger factors of
// `left`. Returns 0 when the words share an index (t_i^2 = 0), else +1/-1.
int odd_merge_sign(uint64_t left, uint64_t right);

// Sign picked up by the left derivation d/dt_i on the ascending word `odd`:
// (-1)^{#(indices in odd below i)}. Requires bit i-1 set.
int odd_removal_sign(uint64_t odd, int i);

// Canonical monomial order used for term storage and rendering: ascending by
// (odd length, odd index word lex, even exponents reverse-lex). Total order.
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(a, b); }
};

} // namespace wps
