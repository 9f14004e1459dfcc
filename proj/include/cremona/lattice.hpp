#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

// A second-homology class of the n-fold blow-up of the plane, written in the
// standard basis {H, E_1, ..., E_n} as  a*H - sum_i b[i]*E_{i+1}.
//
// The symplectic-class notation (nu | m_1, ..., m_n) maps to a = nu and
// b_i = m_i, so that pairing against E_i returns m_i.  Coordinates are exact
// rationals; integrality is a queryable property, never an assumption.
struct Class {
    Rat a;
    std::vector<Rat> b;

    Class() : a(0) {}
    Class(Rat a_, std::vector<Rat> b_) : a(std::move(a_)), b(std::move(b_)) {}

    int n() const { return static_cast<int>(b.size()); }

    bool operator==(const Class& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Class& o) const { return !(*this == o); }
};

// Total order used by sets and deterministic listings: (n, a, b) lexicographic.
bool class_less(const Class& u, const Class& v);

struct ClassLess {
    bool operator()(const Class& u, const Class& v) const { return class_less(u, v); }
};

Class operator+(const Class& u, const Class& v);
Class operator-(const Class& u, const Class& v);
Class operator-(const Class& u);
Class operator*(const Rat& s, const Class& u);

bool is_integral(const Class& d);

// Intersection pairing; the Gram matrix of {H, E_1, ..., E_n} is
// diag(1, -1, ..., -1).  Throws on dimension mismatch.
Rat pairing(const Class& u, const Class& v);

inline Rat square(const Class& d) { return pairing(d, d); }

// Basis classes and the distinguished ones.
Class basis_h(int n);
Class basis_e(int i, int n);              // E_i, 1 <= i <= n
Class canonical_class(int n);             // K = -3H + E_1 + ... + E_n
Class minimal_exceptional(int n);         // E_n, n >= 1

// Simple roots: l_0 = H - E_1 - E_2 - E_3 (needs n >= 3),
// l_i = E_i - E_{i+1} for 1 <= i <= n-1.
bool simple_root_valid(int i, int n);
Class simple_root(int i, int n);

// K-pairing helper: d . K.
Rat k_pairing(const Class& d);

// c_1-pairing: d . (-K).
Rat c1_pairing(const Class& d);

// Reflection along v: x - 2 (x.v)/(v.v) v.  Permitted for v.v in {-1, -2};
// for v.v = -2 this is x + (x.v) v.
Class reflect(const Class& x, const Class& v);

struct DistinguishedClasses {
    Class canonical;
    // (index, root) pairs; index 0 appears only when n >= 3.
    std::vector<std::pair<int, Class>> simple_roots;
    std::optional<Class> minimal_exceptional;  // absent for n = 0
};

DistinguishedClasses distinguished(int n);

}  // namespace cremona
