#include "cremona/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "cremona/cone.hpp"
#include "cremona/weyl.hpp"

namespace cremona {

namespace {

void require_reduced_symplectic(const Class& omega, const char* who)
{
    ConeReport rep = cone_report(omega);
    if (!rep.is_reduced)
        throw std::invalid_argument(std::string(who) + ": reduced class required");
    if (!rep.is_symplectic)
        throw std::invalid_argument(std::string(who) + ": symplectic class required");
}

Int factorial(int k)
{
    Int f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

Int component_weyl_order(const AdeComponent& c)
{
    if (c.kind == 'A')
        return factorial(c.rank + 1);
    if (c.kind == 'D') {
        Int f = factorial(c.rank);
        return (Int(1) << (c.rank - 1)) * f;
    }
    if (c.rank == 6)
        return 51840;
    if (c.rank == 7)
        return 2903040;
    return Int(696729600);
}

}  // namespace

std::vector<AdeComponent> ade_decomposition(const std::vector<int>& nodes, int n)
{
    for (int i : nodes)
        if (!simple_root_valid(i, n))
            throw std::invalid_argument("ade_decomposition: node index out of range");

    std::set<int> node_set(nodes.begin(), nodes.end());
    std::map<int, std::vector<int>> adj;
    for (int i : node_set)
        adj[i] = {};
    for (int i : node_set)
        for (int j : node_set)
            if (i < j && pairing(simple_root(i, n), simple_root(j, n)) == 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }

    std::vector<AdeComponent> out;
    std::set<int> visited;
    for (int start : node_set) {
        if (visited.count(start))
            continue;
        std::vector<int> comp;
        std::vector<int> stack{start};
        visited.insert(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj[v])
                if (!visited.count(w)) {
                    visited.insert(w);
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());

        // Shape analysis on the component.
        int edge_count = 0;
        std::vector<int> deg3;
        for (int v : comp) {
            edge_count += static_cast<int>(adj[v].size());
            if (adj[v].size() > 3)
                throw std::domain_error("ade_decomposition: node of degree > 3, not an ADE shape");
            if (adj[v].size() == 3)
                deg3.push_back(v);
        }
        edge_count /= 2;
        if (edge_count != static_cast<int>(comp.size()) - 1)
            throw std::domain_error("ade_decomposition: cycle found, not an ADE shape");
        if (deg3.size() > 1)
            throw std::domain_error("ade_decomposition: two branch nodes, not an ADE shape");

        AdeComponent c;
        c.nodes = comp;
        c.rank = static_cast<int>(comp.size());
        if (deg3.empty()) {
            c.kind = 'A';
        } else {
            // Arm lengths from the unique branch node.
            std::vector<int> arms;
            for (int w : adj[deg3[0]]) {
                int len = 0, prev = deg3[0], cur = w;
                for (;;) {
                    ++len;
                    int next = -1;
                    for (int x : adj[cur])
                        if (x != prev)
                            next = x;
                    if (next < 0)
                        break;
                    prev = cur;
                    cur = next;
                }
                arms.push_back(len);
            }
            std::sort(arms.begin(), arms.end());
            if (arms[0] == 1 && arms[1] == 1)
                c.kind = 'D';
            else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
                c.kind = 'E';
            else
                throw std::domain_error("ade_decomposition: arm profile (" +
                                        std::to_string(arms[0]) + "," + std::to_string(arms[1]) +
                                        "," + std::to_string(arms[2]) + ") is not an ADE shape");
        }
        out.push_back(std::move(c));
    }
    return out;
}

RootDiagram lagrangian_simple_roots(const Class& omega)
{
    require_reduced_symplectic(omega, "lagrangian_simple_roots");
    const int n = omega.n();

    RootDiagram d;
    d.n = n;
    for (int i = 0; i <= n - 1; ++i) {
        if (!simple_root_valid(i, n))
            continue;
        if (pairing(omega, simple_root(i, n)) == 0)
            d.nodes.push_back(i);
    }
    for (size_t p = 0; p < d.nodes.size(); ++p)
        for (size_t q = p + 1; q < d.nodes.size(); ++q)
            if (pairing(simple_root(d.nodes[p], n), simple_root(d.nodes[q], n)) == 1)
                d.edges.emplace_back(d.nodes[p], d.nodes[q]);
    d.components = ade_decomposition(d.nodes, n);
    return d;
}

namespace {

// The concrete numerical normal forms for D and E classes on the normalized
// slice; used for labelling only, the diagram is the source of truth.
std::optional<std::string> match_normal_form(const Class& omega)
{
    const int n = omega.n();
    if (n < 1 || omega.a != 1)
        return std::nullopt;

    // (1 | 1/3 x k, m_{k+1}, ...) with m_{k+1} < 1/3 and k in {6,7,8}.
    {
        int k = 0;
        while (k < n && omega.b[k] == Rat(1, 3))
            ++k;
        if ((k == 6 || k == 7 || k == 8) && (k == n || omega.b[k] < Rat(1, 3)))
            return "E" + std::to_string(k);
    }

    // (1 | a, (1-a)/2 x k, m_{k+2}, ...) with (1-a)/2 > m_{k+2} and either
    // 1/3 < a < 1, k >= 4, or a = 1/3, k = 4.
    {
        const Rat a = omega.b[0];
        const Rat half = (1 - a) / 2;
        int k = 0;
        while (1 + k < n && omega.b[1 + k] == half)
            ++k;
        bool tail_ok = (1 + k == n) || omega.b[1 + k] < half;
        bool a_ok = (a > Rat(1, 3) && a < 1 && k >= 4) || (a == Rat(1, 3) && k == 4);
        if (tail_ok && a_ok && half > 0)
            return "D" + std::to_string(k) + " with a=" + rat_str(a);
    }
    return std::nullopt;
}

}  // namespace

TypeLabel form_type(const Class& omega)
{
    TypeLabel t;
    t.diagram = lagrangian_simple_roots(omega);

    const AdeComponent* major = nullptr;
    for (const auto& c : t.diagram.components) {
        if (c.kind == 'E')
            major = &c;  // E takes precedence over D when both occur
        else if (c.kind == 'D' && (!major || major->kind != 'E'))
            major = &c;
    }
    if (major) {
        t.kind = major->kind;
        t.rank = major->rank;
    }

    t.normal_form = match_normal_form(omega);
    if (t.normal_form) {
        char nf_kind = t.normal_form->front();
        int nf_rank = std::stoi(t.normal_form->substr(1));
        if (nf_kind != t.kind || nf_rank != t.rank)
            t.notes.push_back("computed diagram " + (major ? major->label() : std::string("A")) +
                              " disagrees with the matched normal form '" + *t.normal_form +
                              "'; the diagram is authoritative");
    }
    return t;
}

RootSystem generate_root_system(const std::vector<int>& nodes, int n, int safety_bound)
{
    auto components = ade_decomposition(nodes, n);  // validates the shape

    std::vector<Class> simple;
    simple.reserve(nodes.size());
    for (int i : nodes)
        simple.push_back(simple_root(i, n));

    std::set<Class, ClassLess> closure(simple.begin(), simple.end());
    std::vector<Class> frontier(simple.begin(), simple.end());
    while (!frontier.empty()) {
        std::vector<Class> next;
        for (const auto& x : frontier)
            for (const auto& s : simple) {
                Class y = reflect(x, s);
                if (closure.insert(y).second)
                    next.push_back(std::move(y));
            }
        if (static_cast<int>(closure.size()) > safety_bound)
            throw std::domain_error("generate_root_system: closure exceeded the safety bound; "
                                    "the seed set is not an ADE diagram");
        frontier = std::move(next);
    }

    RootSystem rs;
    rs.roots.assign(closure.begin(), closure.end());
    for (const auto& c : components)
        rs.weyl_order *= component_weyl_order(c);
    return rs;
}

std::string TorelliAnswer::group_name() const
{
    switch (group) {
        case Group::trivial: return "trivial";
        case Group::pure_sphere_braid:
            return "PB_" + std::to_string(braid_strands) + "(S^2)";
        default: return "out_of_scope_E";
    }
}

TorelliAnswer torelli(const Class& omega)
{
    ConeReport rep = cone_report(omega);
    if (!rep.is_reduced || !rep.is_symplectic)
        throw std::invalid_argument("torelli: reduced symplectic class required");
    if (!rep.is_c1_positive)
        throw std::invalid_argument("torelli: outside theorem hypothesis (c1-positive required)");

    TorelliAnswer ans;
    ans.type = form_type(omega);
    ans.generation_note = "the symplectic Torelli group is generated by Lagrangian Dehn twists";
    ans.notes = ans.type.notes;

    if (ans.type.kind == 'A') {
        ans.group = TorelliAnswer::Group::trivial;
        ans.mapping_class_group_order =
            generate_root_system(ans.type.diagram.nodes, omega.n()).weyl_order;
    } else if (ans.type.kind == 'D') {
        ans.group = TorelliAnswer::Group::pure_sphere_braid;
        ans.braid_strands = ans.type.rank;
        if (omega.n() == 5 && omega == Class(1, std::vector<Rat>(5, Rat(1, 3))))
            ans.notes.push_back("monotone five-fold blow-up: the braid answer is known to hold "
                                "only up to a central Z/2 quotient");
    } else {
        ans.group = TorelliAnswer::Group::out_of_scope_e;
        ans.base_case_n = ans.type.rank;  // blow down to the rank-k monotone base case
    }
    return ans;
}

namespace {

// E-indices touched by a simple root: l_0 meets E_1, E_2, E_3; l_i meets
// E_i, E_{i+1}.
bool root_touches_tail(int root_index, int first_stripped)
{
    if (root_index == 0)
        return first_stripped <= 3;
    return root_index + 1 >= first_stripped;
}

}  // namespace

BlowdownChain blowdown_reduce(const Class& omega)
{
    ConeReport rep = cone_report(omega);
    if (!rep.is_reduced || !rep.is_symplectic)
        throw std::invalid_argument("blowdown_reduce: reduced symplectic class required");
    if (!rep.is_c1_positive)
        throw std::invalid_argument("blowdown_reduce: c1-positive class required");

    BlowdownChain chain;
    Class cur = omega;
    chain.steps.push_back({cur.n(), cur});
    char kind0 = form_type(cur).kind;

    for (;;) {
        const int n = cur.n();
        if (n <= 1) {
            chain.halt_reason = "minimal rank reached";
            return chain;
        }
        const Rat c = cur.b[n - 1];
        int m = 1;
        while (m < n && cur.b[n - 1 - m] == c)
            ++m;
        if (m == n) {
            chain.halt_reason = "trailing block is the whole vector";
            return chain;
        }
        if (cur.b[n - 1 - m] <= c) {
            chain.halt_reason = "no strictly smaller trailing block";
            return chain;
        }
        // The stripped block must avoid the D/E part of the diagram.
        TypeLabel t = form_type(cur);
        if (t.kind != 'A') {
            const int first_stripped = n - m + 1;
            for (const auto& comp : t.diagram.components) {
                if (comp.kind == 'A')
                    continue;
                for (int idx : comp.nodes)
                    if (root_touches_tail(idx, first_stripped)) {
                        chain.halt_reason = "trailing block meets the " + comp.label() +
                                            " diagram";
                        return chain;
                    }
            }
        }

        Class next = cur;
        next.b.resize(n - m);
        ConeReport nrep = cone_report(next);
        if (!nrep.is_reduced || !nrep.is_symplectic || !nrep.is_c1_positive)
            throw std::domain_error("blowdown_reduce: stripped class left the cone");
        if (next.n() >= 1 && form_type(next).kind != kind0)
            throw std::domain_error("blowdown_reduce: type kind changed across a blow-down");
        cur = std::move(next);
        chain.steps.push_back({cur.n(), cur});
    }
}

ToricReport toric_check(const Class& omega)
{
    require_reduced_symplectic(omega, "toric_check");
    ToricReport r;
    ConeReport rep = cone_report(omega);
    TypeLabel t = form_type(omega);
    r.c1_positive = rep.is_c1_positive;
    r.type_a = t.kind == 'A';
    r.conditions_met = r.c1_positive && r.type_a;
    if (r.conditions_met) {
        r.conclusion = "necessary conditions hold; if the form is toric its Torelli group "
                       "is trivial and its mapping class group finite";
    } else {
        r.conclusion = "necessary conditions fail; toric conclusion withheld";
        if (!r.type_a)
            r.notes.push_back("type " + std::string(1, t.kind) +
                              ": a circle action can coexist with an infinite Torelli group");
    }
    return r;
}

}  // namespace cremona
