#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cremona/lattice.hpp"

namespace cremona {

// Per-simple-root sign of the omega-area, entries (root index, sign) with
// sign in {-1, 0, +1}.  Zero entries mark the Lagrangian diagram nodes; a
// reduced class never carries a negative sign.
using SignVector = std::vector<std::pair<int, int>>;

SignVector sign_vector(const Class& omega);

struct ChamberRelation {
    bool forward_surjection = false;   // every tau_1-positive simple root is tau_0-positive
    bool backward_surjection = false;
    bool invariant = false;            // both directions
};

// The simple-root chamber comparison.  Licensed only for reduced symplectic
// classes of type A or D; type E inputs are refused.
ChamberRelation chamber_compare(const Class& tau0, const Class& tau1);

// (1 | (c1-1)t + 1, t c2, ..., t cn): the straight path toward the A vertex.
// Asserts the output is reduced, symplectic, inside the normalized
// c1-positive region, and has the sign vector of the input.
Class a_extremal_path(const Class& omega1, const Rat& t);

// Scales the trailing equal block of m entries by t.  Refused for classes of
// type D_{n-1} or E_n, whose diagram the block would meet.
Class minimal_path(const Class& omega, int m, const Rat& t);

struct DivisorPredicates {
    std::optional<bool> cv;     // a > (n-3)/(n-1), on the omega_a normal form
    std::optional<bool> stein;  // 2 m1 - 1 - sum_{i>=6} m_i > 0, needs n > 5
};

DivisorPredicates divisor_predicates(const Class& omega);

}  // namespace cremona
