#pragma once
#include <map>
#include <optional>

#include "wps/model.hpp"
#include "wps/poly.hpp"

namespace wps {

// The normal obstruction section read off a single even, homogeneous,
// homogeneously non-reduced polynomial f = g + sum_I h^I theta_I + ...:
// the reduced part g, the homogeneous order k, and the coefficient
// polynomials of the length-k theta component, keyed by the odd index word.
struct NormalSection {
    Poly g;
    int k = 0;
    long long d = 0; // weighted degree of f
    std::map<uint64_t, Poly> components;
};

NormalSection extract_normal_section(const Poly& f, const ModelSpec& spec);

// Witnesses h^{I|sigma} expressing every component h^I in the Jacobian graded
// piece spanned by monomial multiples of the partials of g:
//   h^I = sum_sigma h^{I|sigma} dg/dx^sigma,  deg h^{I|sigma} = a^sigma - b_I.
// Some(witnesses) iff every component is solvable; keyed (I, sigma).
using JacobianWitnesses = std::map<uint64_t, std::map<int, Poly>>;

std::optional<JacobianWitnesses> jacobian_membership(const NormalSection& section,
                                                     const ModelSpec& spec);

} // namespace wps
