#pragma once

#include <string>
#include <vector>

#include "cremona/lattice.hpp"

namespace cremona {

// The ordering and Noether-type inequalities cutting out the fundamental
// domain, with the rank-dependent small cases:
//   n = 0:  nu > 0
//   n = 1:  nu >= m1 >= 0
//   n = 2:  nu >= m1 + m2,      m1 >= m2 >= 0
//   n >= 3: nu >= m1 + m2 + m3, m1 >= ... >= mn >= 0
bool is_reduced(const Class& d);

struct ConeReport {
    bool is_reduced = false;
    Rat square;
    Rat c1;                     // d . (-K)
    bool is_symplectic = false; // reduced representative has positive square
    bool is_c1_positive = false;
    bool in_nrn = false;        // normalized c1-positive reduced symplectic
    std::vector<std::string> failing_constraints;
};

// Full predicate vector.  For non-reduced d the symplectic verdict is decided
// on the reduced representative; classes that do not reach the fundamental
// domain are reported non-symplectic.
ConeReport cone_report(const Class& d);

// Vertices of the polytope of normalized c1-positive reduced symplectic
// classes.  G_1 = O = (1|0,...,0), G_2 = A = (1|1,0,...,0),
// G_i = (1 | 1/2 or 1/3 pattern ...) for 3 <= i <= n, G_{n+1} = M = -K/3.
struct VertexTag {
    bool new_on_edge = false;
    int i = 0;      // G_i for plain vertices; the G_i edge endpoint otherwise
    int level = 0;  // for edge vertices, the rank at which the edge was cut
    std::string label() const;
};

struct Vertex {
    Class cls;
    VertexTag tag;
    bool included = false;  // whether the vertex itself lies in the region
};

struct VertexList {
    int n = 0;
    std::vector<Vertex> vertices;
};

// For n <= 9 the G_i themselves; from rank 10 on, the vertices of the
// previous rank re-embedded plus the ten exact intersections of the edges
// [G_{n+1}, G_i], i = 1..10, with the hyperplane d.K = 0.  Every new vertex
// is computed by segment-hyperplane intersection, not read off a table.
VertexList nrn_vertices(int n);

// The standard vertex classes at rank n (1 <= i <= n+1).
Class g_vertex(int i, int n);

// The one-parameter family (1 | a, (1-a)/2, ..., (1-a)/2).
Class omega_a(const Rat& a, int n);

// Least admissible a for omega_a to be a c1-positive reduced symplectic
// class: 1/3 for n <= 9 and (n-7)/(n-3) beyond, always with a < 1 strict.
Rat type_d_threshold(int n);
bool omega_a_admissible(const Rat& a, int n);

}  // namespace cremona
