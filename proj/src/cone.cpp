#include "cremona/cone.hpp"

#include <stdexcept>

#include "cremona/weyl.hpp"

namespace cremona {

bool is_reduced(const Class& d)
{
    const int n = d.n();
    if (n == 0)
        return d.a > 0;
    for (int i = 0; i + 1 < n; ++i)
        if (d.b[i] < d.b[i + 1])
            return false;
    if (d.b[n - 1] < 0)
        return false;
    Rat head = 0;
    for (int i = 0; i < std::min(3, n); ++i)
        head += d.b[i];
    return d.a >= head;
}

ConeReport cone_report(const Class& d)
{
    ConeReport rep;
    rep.square = square(d);
    rep.c1 = c1_pairing(d);
    rep.is_reduced = is_reduced(d);
    rep.is_c1_positive = rep.c1 > 0;

    const int n = d.n();
    if (!rep.is_reduced) {
        if (n > 0) {
            for (int i = 0; i + 1 < n; ++i)
                if (d.b[i] < d.b[i + 1])
                    rep.failing_constraints.push_back("ordering(m" + std::to_string(i + 1) +
                                                      "<m" + std::to_string(i + 2) + ")");
            if (d.b[n - 1] < 0)
                rep.failing_constraints.push_back("m" + std::to_string(n) + ">=0");
            Rat head = 0;
            for (int i = 0; i < std::min(3, n); ++i)
                head += d.b[i];
            if (d.a < head)
                rep.failing_constraints.push_back("noether(nu>=m1+..)");
        } else {
            rep.failing_constraints.push_back("nu>0");
        }
    }

    if (rep.is_reduced) {
        rep.is_symplectic = rep.square > 0;
    } else {
        ReductionResult r = reduce(d);
        rep.is_symplectic = r.status == ReduceStatus::done && is_reduced(r.reduced) &&
                            square(r.reduced) > 0;
    }
    if (!rep.is_symplectic)
        rep.failing_constraints.push_back("square>0");

    if (!rep.is_c1_positive)
        rep.failing_constraints.push_back("c1>0");

    bool normalized = d.a == 1;
    bool mn_positive = n > 0 && d.b[n - 1] > 0;
    rep.in_nrn = normalized && rep.is_reduced && rep.is_symplectic && rep.is_c1_positive &&
                 mn_positive;
    if (!rep.in_nrn) {
        if (!normalized)
            rep.failing_constraints.push_back("nu=1");
        if (!mn_positive)
            rep.failing_constraints.push_back("mn>0");
    }
    return rep;
}

std::string VertexTag::label() const
{
    if (!new_on_edge)
        return "G_" + std::to_string(i);
    return "edge(G_" + std::to_string(level + 1) + ",G_" + std::to_string(i) + ")";
}

Class g_vertex(int i, int n)
{
    if (i < 1 || i > n + 1)
        throw std::invalid_argument("g_vertex: index out of range");
    Class v(1, std::vector<Rat>(n, 0));
    if (i == 1)
        return v;  // O
    if (i == 2) {
        v.b[0] = 1;  // A
        return v;
    }
    if (i == 3) {
        v.b[0] = v.b[1] = Rat(1, 2);
        return v;
    }
    // G_i carries i-1 entries of 1/3; G_{n+1} = M = -K/3.
    for (int k = 0; k < i - 1; ++k)
        v.b[k] = Rat(1, 3);
    return v;
}

namespace {

// Exact intersection of the segment [p, q] with the hyperplane d.K = 0.
Class segment_k_hyperplane(const Class& p, const Class& q)
{
    Rat kp = k_pairing(p);
    Rat kq = k_pairing(q);
    if (kp == kq)
        throw std::logic_error("segment parallel to the K-hyperplane");
    Rat t = kp / (kp - kq);  // p + t (q - p) pairs zero with K
    if (t < 0 || t > 1)
        throw std::logic_error("intersection outside the segment");
    return p + t * (q - p);
}

Vertex make_vertex(Class cls, VertexTag tag)
{
    Vertex v;
    v.included = cone_report(cls).in_nrn;
    v.cls = std::move(cls);
    v.tag = tag;
    return v;
}

}  // namespace

VertexList nrn_vertices(int n)
{
    if (n < 3)
        throw std::invalid_argument("nrn_vertices: n >= 3 required");

    VertexList out;
    out.n = n;
    if (n <= 9) {
        for (int i = 1; i <= n + 1; ++i)
            out.vertices.push_back(make_vertex(g_vertex(i, n), VertexTag{false, i, n}));
        return out;
    }

    // Rank n-1 vertices re-embedded with a trailing zero, then ten new ones
    // cut by the -K wall on the edges from M = G_{n+1} toward G_1..G_10.
    VertexList prev = nrn_vertices(n - 1);
    for (auto& v : prev.vertices) {
        v.cls.b.emplace_back(0);
        out.vertices.push_back(make_vertex(v.cls, v.tag));
    }
    Class m = g_vertex(n + 1, n);
    for (int i = 1; i <= 10; ++i) {
        Class cut = segment_k_hyperplane(g_vertex(i, n), m);
        out.vertices.push_back(make_vertex(std::move(cut), VertexTag{true, i, n}));
    }
    return out;
}

Class omega_a(const Rat& a, int n)
{
    if (n < 2)
        throw std::invalid_argument("omega_a: n >= 2 required");
    Class v(1, std::vector<Rat>(n, (1 - a) / 2));
    v.b[0] = a;
    return v;
}

Rat type_d_threshold(int n)
{
    if (n < 5)
        throw std::invalid_argument("type_d_threshold: n >= 5 required");
    if (n <= 9)
        return Rat(1, 3);
    return Rat(n - 7, n - 3);
}

bool omega_a_admissible(const Rat& a, int n)
{
    return a > type_d_threshold(n) && a < 1;
}

}  // namespace cremona
