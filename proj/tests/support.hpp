#pragma once

// Shared helpers for the test suites: deterministic samplers for classes in
// the normalized c1-positive reduced region, built by convex combination of
// the region's vertices so membership is exact by construction.

#include <random>
#include <vector>

#include "cremona/cone.hpp"
#include "cremona/lattice.hpp"

namespace cremona::testing {

inline std::vector<Class> sampling_vertices(int n)
{
    if (n == 2)
        return {g_vertex(1, 2), g_vertex(2, 2), g_vertex(3, 2)};
    std::vector<Class> out;
    for (const auto& v : nrn_vertices(n).vertices)
        out.push_back(v.cls);
    return out;
}

// Every vertex gets a positive weight, so the sample is interior: square,
// c1-pairing and m_n all strictly positive, reducedness inherited.
inline Class sample_nrn(int n, std::mt19937& rng)
{
    auto verts = sampling_vertices(n);
    std::uniform_int_distribution<int> w(1, 24);
    std::vector<long long> weights(verts.size());
    long long total = 0;
    for (auto& x : weights) {
        x = w(rng);
        total += x;
    }
    Class acc(0, std::vector<Rat>(n, 0));
    for (size_t i = 0; i < verts.size(); ++i)
        acc = acc + Rat(weights[i], total) * verts[i];
    return acc;
}

}  // namespace cremona::testing
