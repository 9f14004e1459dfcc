#include "cremona/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "cremona/cone.hpp"
#include "cremona/enumerate.hpp"
#include "cremona/simplex.hpp"

namespace cremona {

namespace {

std::vector<Rat> class_column(const Class& c)
{
    std::vector<Rat> col;
    col.reserve(c.n() + 1);
    col.push_back(c.a);
    col.insert(col.end(), c.b.begin(), c.b.end());
    return col;
}

std::optional<Decomposition> try_bound(const Class& d, int bound)
{
    const auto candidates = enumerate_exceptional(d.n(), bound);
    std::vector<std::vector<Rat>> columns;
    columns.reserve(candidates.size());
    for (const auto& e : candidates)
        columns.push_back(class_column(e));

    auto x = feasible_nonnegative_combination(columns, class_column(d));
    if (!x)
        return std::nullopt;

    Decomposition dec;
    dec.degree_bound_used = bound;
    for (size_t j = 0; j < candidates.size(); ++j)
        if ((*x)[j] > 0)
            dec.terms.emplace_back((*x)[j], candidates[j]);
    return dec;
}

}  // namespace

DecomposeResult decompose_c1_positive(const Class& d, int max_degree)
{
    if (d.n() < 2)
        throw std::invalid_argument(
            "decompose_c1_positive: n >= 2 required (for n = 1 the positive span of E_1 "
            "cannot reach any class of positive degree)");
    if (max_degree < 1)
        throw std::invalid_argument("decompose_c1_positive: max_degree >= 1 required");
    ConeReport rep = cone_report(d);
    if (!rep.is_c1_positive || !rep.is_symplectic)
        throw std::invalid_argument(
            "decompose_c1_positive: c1-positive symplectic class required");

    DecomposeResult res;
    res.max_degree_tried = max_degree;
    for (int bound = 1; bound <= max_degree; ++bound) {
        auto dec = try_bound(d, bound);
        if (dec) {
            res.decomposition = std::move(dec);
            return res;
        }
    }
    return res;
}

DecomposeResult decompose_c1_positive(const Class& d)
{
    const int n = d.n();
    DecomposeResult res;
    for (int cap = n; cap <= 4 * n; cap *= 2) {
        res = decompose_c1_positive(d, cap);
        if (!res.infeasible_at_bound())
            return res;
    }
    return res;
}

std::string SphereModel::name() const
{
    switch (model) {
        case Model::two_h: return "2H";
        case Model::kh_minus: return std::to_string(k) + "H-" + std::to_string(k - 1) + "E1";
        default: return std::to_string(k) + "H-" + std::to_string(k - 1) + "E1-E2";
    }
}

std::optional<SphereModel> sphere_model(const Class& d)
{
    if (!is_integral(d))
        throw std::invalid_argument("sphere_model: integral class required");
    if (square(d) <= 0)
        throw std::invalid_argument("sphere_model: positive square required");

    // W'-reduction: the usual descent plus sign flips of the trailing
    // coordinate, which the E_n reflection realizes after sorting.
    Class c = d;
    WeylWord word;
    const int n = c.n();
    auto resort = [&]() {
        for (int i = 1; i < n; ++i)
            for (int j = i; j >= 1 && c.b[j] > c.b[j - 1]; --j) {
                std::swap(c.b[j], c.b[j - 1]);
                word.push_back(WeylGen::simple(j));
            }
    };
    resort();
    for (;;) {
        if (c.a <= 0)
            return std::nullopt;
        if (n >= 1 && c.b[n - 1] < 0) {
            c.b[n - 1] = -c.b[n - 1];
            word.push_back(WeylGen::en_reflection());
            resort();
            continue;
        }
        Rat head = 0;
        for (int i = 0; i < std::min(3, n); ++i)
            head += c.b[i];
        if (n >= 3 && c.a < head) {
            c = reflect(c, simple_root(0, n));
            word.push_back(WeylGen::simple(0));
            resort();
            continue;
        }
        break;
    }

    SphereModel out;
    out.word = std::move(word);
    // Match against 2H, kH - (k-1)E_1, kH - (k-1)E_1 - E_2.
    if (!is_integer(c.a))
        return std::nullopt;
    long long k = numerator(c.a).convert_to<long long>();
    auto rest_zero = [&](int from) {
        for (int i = from; i < n; ++i)
            if (c.b[i] != 0)
                return false;
        return true;
    };
    if (k == 2 && rest_zero(0)) {
        out.model = SphereModel::Model::two_h;
        out.k = 2;
        return out;
    }
    if (k >= 1 && (n == 0 ? k == 1 : (c.b[0] == k - 1 && rest_zero(1)))) {
        out.model = SphereModel::Model::kh_minus;
        out.k = static_cast<int>(k);
        return out;
    }
    if (k >= 2 && n >= 2 && c.b[0] == k - 1 && c.b[1] == 1 && rest_zero(2)) {
        out.model = SphereModel::Model::kh_minus_e2;
        out.k = static_cast<int>(k);
        return out;
    }
    return std::nullopt;
}

std::optional<NegativeAFamily> negative_a_family(const Class& d)
{
    if (!is_integral(d))
        throw std::invalid_argument("negative_a_family: integral class required");
    if (d.a >= 0)
        throw std::invalid_argument("negative_a_family: negative degree required");

    // -mH + (m+1)E_1 - sum_{j in S} E_j reads b_1 = -(m+1), b_j in {0, 1}.
    NegativeAFamily fam;
    fam.m = -numerator(Rat(d.a)).convert_to<long long>();
    if (d.n() < 1 || d.b[0] != d.a - 1)
        return std::nullopt;
    for (int j = 1; j < d.n(); ++j) {
        if (d.b[j] == 1)
            fam.index_set.push_back(j + 1);
        else if (d.b[j] != 0)
            return std::nullopt;
    }
    return fam;
}

}  // namespace cremona
