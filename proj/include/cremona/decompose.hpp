#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cremona/lattice.hpp"
#include "cremona/weyl.hpp"

namespace cremona {

struct Decomposition {
    // Positive rational coefficients against exceptional classes; the terms
    // recombine to the input exactly.
    std::vector<std::pair<Rat, Class>> terms;
    int degree_bound_used = 0;
};

struct DecomposeResult {
    std::optional<Decomposition> decomposition;
    int max_degree_tried = 0;
    bool infeasible_at_bound() const { return !decomposition.has_value(); }
};

// Writes a c1-positive symplectic class as a nonnegative rational combination
// of exceptional classes, by exact-rational linear programming over the
// bounded enumeration.  Candidates are added degree by degree, so the
// reported bound is the smallest sufficient one.  The parameterless overload
// starts at max_degree = n and doubles up to 4n before giving up.
DecomposeResult decompose_c1_positive(const Class& d, int max_degree);
DecomposeResult decompose_c1_positive(const Class& d);

struct SphereModel {
    enum class Model { two_h, kh_minus, kh_minus_e2 };
    Model model;
    int k = 0;
    WeylWord word;  // carries the input to the model class exactly

    std::string name() const;
};

// Reduces a positive-square integral class, allowing the E_n sign reflection,
// and matches the result against the three sphere models 2H, kH - (k-1)E_1,
// kH - (k-1)E_1 - E_2.  No match means the class is not represented by an
// embedded sphere of positive square.
std::optional<SphereModel> sphere_model(const Class& d);

struct NegativeAFamily {
    long long m = 0;
    std::vector<int> index_set;  // E_j subtracted, j >= 2
};

// Recognizes -mH + (m+1)E_1 - sum_{j in S} E_j without any Cremona moves,
// the only irreducible shape with negative degree on a reduced form.
std::optional<NegativeAFamily> negative_a_family(const Class& d);

}  // namespace cremona
