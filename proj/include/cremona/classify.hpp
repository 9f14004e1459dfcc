#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/lattice.hpp"

namespace cremona {

struct AdeComponent {
    char kind = 'A';  // 'A', 'D' or 'E'
    int rank = 0;
    std::vector<int> nodes;  // simple-root indices, sorted
    std::string label() const { return std::string(1, kind) + std::to_string(rank); }
};

// The subdiagram of simple roots with zero area, with its induced adjacency.
struct RootDiagram {
    int n = 0;
    std::vector<int> nodes;
    std::vector<std::pair<int, int>> edges;  // pairs (i, j), i < j, l_i . l_j = 1
    std::vector<AdeComponent> components;
    bool empty() const { return nodes.empty(); }
};

// Zero-area simple roots of a reduced symplectic class, with components.
RootDiagram lagrangian_simple_roots(const Class& omega);

// Connected components of the induced subgraph on `nodes`, each classified
// by shape: paths are A_k, one degree-3 node with arm profile (1,1,k-3) is
// D_k, profiles (1,2,2)/(1,2,3)/(1,2,4) are E6/E7/E8.  Any other shape
// throws: it cannot arise from a reduced symplectic class.
std::vector<AdeComponent> ade_decomposition(const std::vector<int>& nodes, int n);

struct TypeLabel {
    char kind = 'A';  // 'A', 'D' or 'E'
    int rank = 0;     // k of D_k / E_k; 0 for type A
    RootDiagram diagram;
    // The matched numerical normal form ("D4 with a=1/2", "E6"), when the
    // class fits one exactly.  Mismatches against the computed diagram are
    // surfaced in notes rather than reconciled.
    std::optional<std::string> normal_form;
    std::vector<std::string> notes;
};

TypeLabel form_type(const Class& omega);

struct RootSystem {
    std::vector<Class> roots;
    Int weyl_order = 1;
};

// Closure of the chosen simple roots under their reflections, with the order
// of the generated Weyl group.  `safety_bound` caps the closure size so a
// non-ADE seed set fails loudly instead of diverging.
RootSystem generate_root_system(const std::vector<int>& nodes, int n, int safety_bound = 1000);

struct TorelliAnswer {
    enum class Group { trivial, pure_sphere_braid, out_of_scope_e };
    Group group = Group::trivial;
    int braid_strands = 0;                     // k of PB_k(S^2), type D only
    std::optional<int> base_case_n;            // type E: blow-down target rank
    std::optional<Int> mapping_class_group_order;  // |W(L_omega)| when finite
    std::string generation_note;
    std::vector<std::string> notes;
    TypeLabel type;

    std::string group_name() const;  // "trivial", "PB_k(S^2)", "out_of_scope_E"
};

// The Torelli verdict for a c1-positive reduced symplectic class: trivial for
// type A, the pure sphere braid group PB_k(S^2) for type D_k, and the
// deferred type E answer with its blow-down base case.
TorelliAnswer torelli(const Class& omega);

struct BlowdownStep {
    int n = 0;
    Class cls;
};

struct BlowdownChain {
    std::vector<BlowdownStep> steps;  // first entry is the input
    std::string halt_reason;
};

// Strips maximal trailing blocks of equal minimal entries while the block
// stays strictly below the preceding entry and clear of the D/E diagram.
// Each intermediate class is re-verified reduced, symplectic, c1-positive
// and of unchanged type kind.
BlowdownChain blowdown_reduce(const Class& omega);

struct ToricReport {
    bool c1_positive = false;
    bool type_a = false;
    bool conditions_met = false;
    std::string conclusion;
    std::vector<std::string> notes;
};

// Necessary conditions for a toric form (c1-positive and type A) and the
// trivial-Torelli consequence; toricness itself is not decided.
ToricReport toric_check(const Class& omega);

}  // namespace cremona
