#include "cremona/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "cremona/io.hpp"
#include "cremona/cone.hpp"
#include "cremona/weyl.hpp"

namespace cremona {

namespace {

long long isqrt_ll(long long x)
{
    long long r = 0;
    while ((r + 1) * (r + 1) <= x)
        ++r;
    return r;
}

// Descending integer vectors with fixed sum and sum of squares.  The two
// constraints prune hard, so plain recursion is enough.
void descending_solutions(int slots, long long sum, long long sqsum, long long hi,
                          std::vector<long long>& acc,
                          std::vector<std::vector<long long>>& out)
{
    if (slots == 0) {
        if (sum == 0 && sqsum == 0)
            out.push_back(acc);
        return;
    }
    long long root = isqrt_ll(sqsum);
    for (long long v = std::min(hi, root); v >= -root; --v) {
        long long rem_sum = sum - v;
        long long rem_sq = sqsum - v * v;
        if (rem_sum > (slots - 1) * v)
            continue;  // later entries are all <= v
        if (rem_sum * rem_sum > (slots - 1) * rem_sq)
            continue;  // Cauchy-Schwarz
        acc.push_back(v);
        descending_solutions(slots - 1, rem_sum, rem_sq, v, acc, out);
        acc.pop_back();
    }
}

std::vector<std::vector<long long>> canonical_vectors(int n, long long sum, long long sqsum)
{
    std::vector<std::vector<long long>> out;
    if (sqsum < 0)
        return out;
    std::vector<long long> acc;
    descending_solutions(n, sum, sqsum, isqrt_ll(sqsum), acc, out);
    return out;
}

Class make_class(long long a, const std::vector<long long>& b)
{
    Class c(a, {});
    c.b.reserve(b.size());
    for (long long x : b)
        c.b.emplace_back(x);
    return c;
}

// b lexicographically descending within a fixed degree.
bool enum_order(const Class& u, const Class& v)
{
    if (u.a != v.a)
        return u.a < v.a;
    return u.b > v.b;
}

enum class Kind { exceptional, root };

std::vector<Class> enumerate_uncached(int n, int max_degree, Kind kind)
{
    std::vector<Class> out;
    long long lo = (kind == Kind::exceptional) ? 0 : -max_degree;
    for (long long a = lo; a <= max_degree; ++a) {
        // Square -1 classes satisfy sum b = 3a - 1, sum b^2 = a^2 + 1;
        // square -2 K-orthogonal classes satisfy sum b = 3a, sum b^2 = a^2 + 2.
        long long sum = (kind == Kind::exceptional) ? 3 * a - 1 : 3 * a;
        long long sqsum = (kind == Kind::exceptional) ? a * a + 1 : a * a + 2;
        std::vector<Class> level;
        for (const auto& canon : canonical_vectors(n, sum, sqsum)) {
            std::vector<long long> perm = canon;
            std::sort(perm.begin(), perm.end());
            do {
                Class c = make_class(a, perm);
                bool ok = (kind == Kind::exceptional) ? is_exceptional(c) : is_root(c);
                if (ok)
                    level.push_back(std::move(c));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        std::sort(level.begin(), level.end(), enum_order);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

// Memo, append-only: concurrent reads, exclusive insertion.
using MemoKey = std::tuple<int, int, int>;  // (n, kind, max_degree)
std::map<MemoKey, std::shared_ptr<const std::vector<Class>>> g_memo;
std::shared_mutex g_memo_mutex;

std::filesystem::path cache_file(int n, int max_degree, Kind kind)
{
    const char* dir = std::getenv("CREMONA_CACHE_DIR");
    if (!dir || !*dir)
        return {};
    std::string name = std::string(kind == Kind::exceptional ? "exceptional" : "root") +
                       "_n" + std::to_string(n) + "_d" + std::to_string(max_degree) + ".json";
    return std::filesystem::path(dir) / name;
}

std::shared_ptr<const std::vector<Class>> load_cache(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        return nullptr;
    std::vector<Class> classes;
    std::string line;
    // Plain JSON array of class literals, one per line between brackets.
    while (std::getline(in, line)) {
        auto first = line.find('"');
        if (first == std::string::npos)
            continue;
        auto last = line.rfind('"');
        if (last <= first)
            return nullptr;
        try {
            classes.push_back(parse_class(line.substr(first + 1, last - first - 1)));
        } catch (const std::exception&) {
            return nullptr;
        }
    }
    return std::make_shared<const std::vector<Class>>(std::move(classes));
}

void store_cache(const std::filesystem::path& path, const std::vector<Class>& classes)
{
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path);
    if (!out)
        return;
    out << "[\n";
    for (size_t i = 0; i < classes.size(); ++i)
        out << "  \"" << format_class_lattice(classes[i]) << (i + 1 < classes.size() ? "\",\n" : "\"\n");
    out << "]\n";
}

std::vector<Class> enumerate_memoized(int n, int max_degree, Kind kind)
{
    MemoKey key{n, static_cast<int>(kind), max_degree};
    {
        std::shared_lock lock(g_memo_mutex);
        auto it = g_memo.find(key);
        if (it != g_memo.end())
            return *it->second;
    }
    std::shared_ptr<const std::vector<Class>> computed;
    auto path = cache_file(n, max_degree, kind);
    if (!path.empty())
        computed = load_cache(path);
    if (!computed) {
        computed = std::make_shared<const std::vector<Class>>(
            enumerate_uncached(n, max_degree, kind));
        if (!path.empty())
            store_cache(path, *computed);
    }
    {
        std::unique_lock lock(g_memo_mutex);
        g_memo.emplace(key, computed);
    }
    return *computed;
}

}  // namespace

std::vector<Class> enumerate_exceptional(int n, int max_degree)
{
    if (n < 1)
        throw std::invalid_argument("enumerate_exceptional: n >= 1 required");
    if (max_degree < 1)
        throw std::invalid_argument("enumerate_exceptional: max_degree >= 1 required");
    return enumerate_memoized(n, max_degree, Kind::exceptional);
}

std::vector<Class> enumerate_roots(int n, int max_degree)
{
    if (n < 2)
        throw std::invalid_argument("enumerate_roots: n >= 2 required");
    if (max_degree < 1)
        throw std::invalid_argument("enumerate_roots: max_degree >= 1 required");
    return enumerate_memoized(n, max_degree, Kind::root);
}

std::vector<Class> orbit_bfs(const Class& seed, int max_degree)
{
    if (!is_integral(seed))
        throw std::invalid_argument("orbit_bfs: integral seed required");

    const int n0 = seed.n();
    Class start = seed;
    while (start.n() < 3)
        start.b.emplace_back(0);
    const int n = start.n();

    std::vector<Class> roots;
    if (n >= 3)
        roots.push_back(simple_root(0, n));
    for (int i = 1; i <= n - 1; ++i)
        roots.push_back(simple_root(i, n));

    auto degree_ok = [&](const Class& c) {
        return c.a >= -max_degree && c.a <= max_degree;
    };

    std::set<Class, ClassLess> seen;
    std::deque<Class> queue;
    if (degree_ok(start)) {
        seen.insert(start);
        queue.push_back(start);
    }
    while (!queue.empty()) {
        Class cur = queue.front();
        queue.pop_front();
        for (const auto& r : roots) {
            Class img = reflect(cur, r);
            if (!degree_ok(img) || seen.count(img))
                continue;
            seen.insert(img);
            queue.push_back(std::move(img));
        }
    }

    std::vector<Class> out;
    for (const auto& c : seen) {
        if (n0 < n) {
            bool in_slice = true;
            for (int i = n0; i < n && in_slice; ++i)
                in_slice = (c.b[i] == 0);
            if (!in_slice)
                continue;
            Class cut = c;
            cut.b.resize(n0);
            out.push_back(std::move(cut));
        } else {
            out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end(), ClassLess{});
    return out;
}

std::vector<Class> d_set(const Class& e, const Class& omega)
{
    if (e.n() != omega.n())
        throw std::invalid_argument("d_set: rank mismatch");
    if (!is_exceptional(e))
        throw std::invalid_argument("d_set: E must be an exceptional class");
    ConeReport rep = cone_report(omega);
    if (!rep.is_reduced || !rep.is_symplectic)
        throw std::invalid_argument("d_set: omega must be a reduced symplectic class");

    Rat degree_cap = e.a;  // D.H <= E.H keeps the set finite
    int bound = 1;
    if (degree_cap > 1)
        bound = numerator(degree_cap).convert_to<int>();

    std::vector<Class> out;
    for (const auto& d : enumerate_roots(omega.n(), bound)) {
        if (d.a < 0 || d.a > degree_cap)
            continue;
        if (pairing(d, e) >= 0)
            continue;
        if (pairing(d, omega) <= 0)
            continue;
        out.push_back(d);
    }
    return out;
}

}  // namespace cremona
