#include "cremona/weyl.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace cremona {

Class apply_word(const WeylWord& w, const Class& x)
{
    Class r = x;
    for (const auto& g : w) {
        if (g.is_en_reflection()) {
            if (r.n() < 1)
                throw std::invalid_argument("apply_word: E_n reflection needs n >= 1");
            r = reflect(r, minimal_exceptional(r.n()));
        } else {
            if (!simple_root_valid(g.index, r.n()))
                throw std::invalid_argument("apply_word: generator index " +
                                            std::to_string(g.index) + " out of range for n=" +
                                            std::to_string(r.n()));
            r = reflect(r, simple_root(g.index, r.n()));
        }
    }
    return r;
}

WeylWord inverse_word(const WeylWord& w)
{
    return WeylWord(w.rbegin(), w.rend());
}

namespace {

// One bubble pass at a time keeps the recorded word canonical: a stable
// descending insertion sort realized by adjacent transpositions l_i, i >= 1.
void sort_descending(Class& d, WeylWord* word)
{
    const int n = d.n();
    for (int i = 1; i < n; ++i) {
        for (int j = i; j >= 1 && d.b[j] > d.b[j - 1]; --j) {
            std::swap(d.b[j], d.b[j - 1]);
            if (word)
                word->push_back(WeylGen::simple(j));
        }
    }
}

Rat top3_sum(const Class& d)
{
    // Assumes b sorted descending; missing entries count as zero.
    Rat s = 0;
    for (int i = 0; i < std::min(3, d.n()); ++i)
        s += d.b[i];
    return s;
}

Class pad_to_rank3(const Class& d)
{
    Class r = d;
    while (r.n() < 3)
        r.b.emplace_back(0);
    return r;
}

}  // namespace

ReductionResult reduce(const Class& d)
{
    ReductionResult res;
    res.reduced = d;
    sort_descending(res.reduced, &res.word);
    if (d.n() < 3)
        return res;

    const Class l0 = simple_root(0, d.n());
    while (res.reduced.a < top3_sum(res.reduced)) {
        if (res.reduced.a <= 0) {
            res.status = ReduceStatus::not_reducible;
            return res;
        }
        res.reduced = reflect(res.reduced, l0);
        res.word.push_back(WeylGen::simple(0));
        ++res.steps;
        sort_descending(res.reduced, &res.word);
    }
    return res;
}

bool is_exceptional(const Class& d)
{
    if (!is_integral(d))
        throw std::invalid_argument("is_exceptional: integral class required");
    if (square(d) != -1 || k_pairing(d) != -1)
        return false;

    Class c = pad_to_rank3(d);
    const Class l0 = simple_root(0, c.n());
    for (;;) {
        sort_descending(c, nullptr);
        if (c.a == 0) {
            // Accept exactly the basis pattern (0 | 0, ..., 0, -1).
            for (int i = 0; i + 1 < c.n(); ++i)
                if (c.b[i] != 0)
                    return false;
            return c.b[c.n() - 1] == -1;
        }
        if (c.a < 0)
            return false;
        // Noether: a genuine (-1)-class of positive degree has a < b1+b2+b3.
        if (c.a >= top3_sum(c))
            return false;
        c = reflect(c, l0);
    }
}

bool is_root(const Class& d)
{
    if (!is_integral(d))
        throw std::invalid_argument("is_root: integral class required");
    if (square(d) != -2 || k_pairing(d) != 0)
        return false;

    Class c = pad_to_rank3(d);
    // Normalize to the positive side: positive degree, or degree zero with
    // the E_i coefficient +1 preceding the -1 (the E_i - E_j shape, i < j).
    if (c.a < 0) {
        c = -c;
    } else if (c.a == 0) {
        for (const auto& x : c.b) {
            if (x == 0)
                continue;
            if (x > 0)
                c = -c;  // first nonzero b-entry positive means E_j - E_i, j > i
            break;
        }
    }

    const Class l0 = simple_root(0, c.n());
    for (;;) {
        sort_descending(c, nullptr);
        if (c.a == 0) {
            // Square -2, K-orthogonal, degree 0 forces the E_i - E_j shape.
            return true;
        }
        if (c.a < 0)
            return false;
        // The model H - E_a - E_b - E_c terminates the descent.
        if (c.a == 1) {
            bool model = true;
            for (int i = 0; i < c.n() && model; ++i)
                model = (i < 3) ? (c.b[i] == 1) : (c.b[i] == 0);
            if (model)
                return true;
        }
        if (c.a >= top3_sum(c))
            return false;
        c = reflect(c, l0);
    }
}

namespace {

void add_telescope(std::map<int, long long>& out, int i, int j, long long mult = 1)
{
    // E_i - E_j = l_i + l_{i+1} + ... + l_{j-1} for i < j.
    for (int k = i; k < j; ++k)
        out[k] += mult;
}

// Positions (1-based) of the three largest b-entries, ties by lowest index.
std::array<int, 3> top3_positions(const Class& d)
{
    std::vector<int> idx(d.n());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int p, int q) { return d.b[p] > d.b[q]; });
    std::array<int, 3> pos{idx[0] + 1, idx[1] + 1, idx[2] + 1};
    std::sort(pos.begin(), pos.end());
    return pos;
}

}  // namespace

std::map<int, long long> decompose_positive_root(const Class& d)
{
    if (!is_root(d))
        throw std::invalid_argument("decompose_positive_root: not a K-root");
    if (d.a < 0)
        throw std::invalid_argument("decompose_positive_root: negative root");

    std::map<int, long long> out;
    Class c = d;
    while (c.a > 0) {
        if (c.n() < 3)
            throw std::logic_error("decompose_positive_root: positive degree needs n >= 3");
        auto pos = top3_positions(c);
        Class r(1, std::vector<Rat>(c.n(), 0));
        r.b[pos[0] - 1] = r.b[pos[1] - 1] = r.b[pos[2] - 1] = 1;
        if (c == r) {
            // The model H - E_i - E_j - E_k splits as l_0 plus telescopes.
            out[0] += 1;
            add_telescope(out, 1, pos[0]);
            add_telescope(out, 2, pos[1]);
            add_telescope(out, 3, pos[2]);
            return out;
        }
        // Split off (b_i + b_j + b_k - a) copies of H - E_i - E_j - E_k.
        Rat m = c.b[pos[0] - 1] + c.b[pos[1] - 1] + c.b[pos[2] - 1] - c.a;
        if (m <= 0 || !is_integer(m))
            throw std::logic_error("decompose_positive_root: descent stalled");
        long long mult = numerator(m).convert_to<long long>();
        out[0] += mult;
        add_telescope(out, 1, pos[0], mult);
        add_telescope(out, 2, pos[1], mult);
        add_telescope(out, 3, pos[2], mult);
        c = c - m * r;
    }

    if (c.a == 0) {
        int i = -1, j = -1;
        for (int k = 0; k < c.n(); ++k) {
            if (c.b[k] == -1) i = k + 1;
            else if (c.b[k] == 1) j = k + 1;
            else if (c.b[k] != 0) throw std::logic_error("decompose_positive_root: bad residue");
        }
        if (i < 0 && j < 0)
            return out;  // fully consumed
        if (i < 0 || j < 0 || i >= j)
            throw std::invalid_argument("decompose_positive_root: not a positive root");
        add_telescope(out, i, j);
    }
    return out;
}

std::optional<WeylWord> cremona_equivalent(const Class& u, const Class& v)
{
    if (u.n() != v.n())
        throw std::invalid_argument("cremona_equivalent: rank mismatch");
    ReductionResult ru = reduce(u);
    ReductionResult rv = reduce(v);
    if (ru.status != ReduceStatus::done || rv.status != ReduceStatus::done)
        return std::nullopt;
    if (ru.reduced != rv.reduced)
        return std::nullopt;
    WeylWord w = ru.word;
    WeylWord back = inverse_word(rv.word);
    w.insert(w.end(), back.begin(), back.end());
    return w;
}

}  // namespace cremona
