#pragma once
#include <optional>
#include <string>

#include "wps/job.hpp"

namespace wps {

// Some generator has a nonzero odd partial derivative.
bool is_homogeneously_nonreduced(const VarietyJob& job);

// Minimal odd length >= 2 of any nonzero theta component across the
// generators; nullopt means the generators are theta-free (Reduced).
std::optional<int> homogeneous_order(const VarietyJob& job);

struct QuadricDiagnostics {
    bool quadric = false;             // all theta components have length <= 2
    bool any_pairs = false;           // a length-2 component occurs
    bool pair_degree_constant = false; // every occurring pair has b_i + b_j = d
    long long pair_degree = 0;        // the common pair weight when constant
    std::string detail;
};

// A generator family is quadric when it is determined by its image modulo J^3,
// i.e. no theta component exceeds length 2. Diagnostics additionally check
// that every occurring odd pair has weight equal to the generator degree (the
// smooth-case homogeneity pattern). Single-model jobs get the weight check
// against d; product jobs check pair bidegrees against the bidegree.
QuadricDiagnostics is_quadric(const VarietyJob& job);

enum class Smoothness { Smooth, Singular, Unknown };

struct SmoothnessReport {
    Smoothness result = Smoothness::Unknown;
    std::string detail;
};

// Structured smoothness checker for the reduced part of a hypersurface over
// unit even weights: linear forms, quadratic forms (Gram rank), and diagonal
// forms sum c_i x_i^d are decided exactly; anything else is Unknown.
SmoothnessReport smoothness_check(const Poly& g, const ModelSpec& spec);

enum class Irreducibility { Irreducible, Reducible, Unknown };

struct IrreducibilityReport {
    Irreducibility result = Irreducibility::Unknown;
    std::string detail;
};

// Irreducibility over C of the reduced part: degree-one forms and quadratic
// forms (rank >= 3) are decided exactly; otherwise trial division by a bounded
// family of rational linear forms can certify Reducible, else Unknown.
IrreducibilityReport irreducibility_check(const Poly& g, const ModelSpec& spec);

} // namespace wps
