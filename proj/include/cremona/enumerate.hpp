#pragma once

#include <vector>

#include "cremona/lattice.hpp"

namespace cremona {

// Covers every classical del Pezzo count (n <= 8) and the D(E, omega) bound.
inline int default_max_degree(int n) { return n - 2 > 3 ? n - 2 : 3; }

// All integral classes with square -1, K-pairing -1, 0 <= degree <= max_degree
// that lie in the Weyl orbit of E_n.  Deterministic order: degree ascending,
// then b lexicographically descending.  Memoized per (n, kind, max_degree).
std::vector<Class> enumerate_exceptional(int n, int max_degree);

// All integral classes with square -2, K-pairing 0, |degree| <= max_degree in
// the K-root system.  Closed under negation.
std::vector<Class> enumerate_roots(int n, int max_degree);

// Breadth-first closure of {seed} under all simple-root reflections, classes
// with |degree| > max_degree discarded.  For n < 3 the walk runs in the rank-3
// stabilization and is sliced back.  This is the oracle the orbit-membership
// tests are validated against.
std::vector<Class> orbit_bfs(const Class& seed, int max_degree);

// The finite obstruction set D(E, omega): roots D with D.E < 0, positive
// omega-area, and 0 <= D.H <= E.H.  Requires E exceptional and omega reduced
// symplectic.
std::vector<Class> d_set(const Class& e, const Class& omega);

}  // namespace cremona
