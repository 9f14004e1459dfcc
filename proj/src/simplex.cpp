#include "cremona/simplex.hpp"

#include <stdexcept>

namespace cremona {

std::optional<std::vector<Rat>> feasible_nonnegative_combination(
    const std::vector<std::vector<Rat>>& columns, const std::vector<Rat>& rhs)
{
    const int m = static_cast<int>(rhs.size());
    const int n = static_cast<int>(columns.size());
    for (const auto& col : columns)
        if (static_cast<int>(col.size()) != m)
            throw std::invalid_argument("simplex: column height mismatch");

    // Tableau rows: [A | I | b] with rows flipped so b >= 0; artificials are
    // the initial basis.  Objective: minimize the sum of artificials.
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(n + m + 1, Rat(0)));
    for (int i = 0; i < m; ++i) {
        bool flip = rhs[i] < 0;
        for (int j = 0; j < n; ++j)
            t[i][j] = flip ? -columns[j][i] : columns[j][i];
        t[i][n + i] = 1;
        t[i][n + m] = flip ? -rhs[i] : rhs[i];
    }

    // Reduced-cost row z: cost of basic artificials eliminated up front.
    std::vector<Rat> z(n + m + 1, Rat(0));
    for (int j = 0; j <= n + m; ++j) {
        Rat s = 0;
        for (int i = 0; i < m; ++i)
            s += t[i][j];
        z[j] = -s;
    }
    for (int i = 0; i < m; ++i)
        z[n + i] = 0;

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i)
        basis[i] = n + i;

    for (;;) {
        // Bland: entering column is the lowest index with negative reduced
        // cost.  Artificials never re-enter once driven out.
        int enter = -1;
        for (int j = 0; j < n; ++j)
            if (z[j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0)
            break;

        // Ratio test, ties by lowest basis index.
        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= 0)
                continue;
            Rat ratio = t[i][n + m] / t[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0)
            throw std::logic_error("simplex: phase-one objective unbounded");

        // Pivot on (leave, enter).
        Rat piv = t[leave][enter];
        for (auto& v : t[leave])
            v /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0)
                continue;
            Rat f = t[i][enter];
            for (int j = 0; j <= n + m; ++j)
                t[i][j] -= f * t[leave][j];
        }
        if (z[enter] != 0) {
            Rat f = z[enter];
            for (int j = 0; j <= n + m; ++j)
                z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    if (z[n + m] != 0)
        return std::nullopt;  // artificial mass remains: infeasible

    std::vector<Rat> x(n, Rat(0));
    for (int i = 0; i < m; ++i) {
        if (basis[i] < n)
            x[basis[i]] = t[i][n + m];
        else if (t[i][n + m] != 0)
            return std::nullopt;  // should not happen at objective zero
    }
    return x;
}

}  // namespace cremona
