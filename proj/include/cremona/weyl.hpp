#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cremona/lattice.hpp"

namespace cremona {

// One generator of the Cremona group action: reflection along a simple root
// l_i, or (for the index-2 extension W') the reflection of E_n.
struct WeylGen {
    int index;  // simple-root index, or -1 for the E_n reflection

    static WeylGen simple(int i) { return WeylGen{i}; }
    static WeylGen en_reflection() { return WeylGen{-1}; }
    bool is_en_reflection() const { return index < 0; }
    bool operator==(const WeylGen& o) const { return index == o.index; }
};

// Applied to a class as a left-to-right composition of reflect calls.
using WeylWord = std::vector<WeylGen>;

Class apply_word(const WeylWord& w, const Class& x);

// Reversing a word inverts it: every generator is an involution.
WeylWord inverse_word(const WeylWord& w);

enum class ReduceStatus {
    done,           // sorted with a >= b1+b2+b3 (or n < 3)
    not_reducible,  // descent stalled outside the regime of interest
};

struct ReductionResult {
    Class reduced;    // the terminal class (the last class reached on failure)
    WeylWord word;    // applying word to the input reproduces `reduced`
    int steps = 0;    // count of Gamma_123 applications
    ReduceStatus status = ReduceStatus::done;
};

// Cremona reduction toward the fundamental domain: alternately sort the
// b-coordinates into descending order by transposition reflections l_i
// (i >= 1, stable, ties kept in original order) and reflect along l_0
// whenever a < b1 + b2 + b3.  The a-coefficient strictly decreases at each
// l_0 step.  Non-symplectic inputs that cannot reach the fundamental domain
// come back with status not_reducible, never an exception.
ReductionResult reduce(const Class& d);

// Membership in the Weyl orbit of E_n (the exceptional classes).  Filters on
// square -1 and K-pairing -1, then runs the degree descent.  Integral input
// required.  For n < 3 the class is stabilized into rank 3 so the l_0
// reflection exists; the orbit is blow-up stable, so this is harmless.
bool is_exceptional(const Class& d);

// Membership in the K-root system: square -2, orthogonal to K, and reducible
// to H - E_a - E_b - E_c or E_i - E_j by the same descent.
bool is_root(const Class& d);

// A positive root written as a nonnegative integer combination of simple
// roots, returned as (simple-root index -> multiplicity), all >= 1.
std::map<int, long long> decompose_positive_root(const Class& d);

// A word carrying u to v when both reduce to the same representative.
std::optional<WeylWord> cremona_equivalent(const Class& u, const Class& v);

}  // namespace cremona
