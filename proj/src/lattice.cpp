#include "cremona/lattice.hpp"

#include <stdexcept>

namespace cremona {

bool class_less(const Class& u, const Class& v)
{
    if (u.n() != v.n())
        return u.n() < v.n();
    if (u.a != v.a)
        return u.a < v.a;
    return u.b < v.b;
}

static void check_same_rank(const Class& u, const Class& v, const char* op)
{
    if (u.n() != v.n())
        throw std::invalid_argument(std::string(op) + ": rank mismatch (n=" +
                                    std::to_string(u.n()) + " vs n=" + std::to_string(v.n()) + ")");
}

Class operator+(const Class& u, const Class& v)
{
    check_same_rank(u, v, "Class::operator+");
    Class r = u;
    r.a += v.a;
    for (int i = 0; i < r.n(); ++i)
        r.b[i] += v.b[i];
    return r;
}

Class operator-(const Class& u, const Class& v)
{
    check_same_rank(u, v, "Class::operator-");
    Class r = u;
    r.a -= v.a;
    for (int i = 0; i < r.n(); ++i)
        r.b[i] -= v.b[i];
    return r;
}

Class operator-(const Class& u)
{
    Class r = u;
    r.a = -r.a;
    for (auto& x : r.b)
        x = -x;
    return r;
}

Class operator*(const Rat& s, const Class& u)
{
    Class r = u;
    r.a *= s;
    for (auto& x : r.b)
        x *= s;
    return r;
}

bool is_integral(const Class& d)
{
    if (!is_integer(d.a))
        return false;
    for (const auto& x : d.b)
        if (!is_integer(x))
            return false;
    return true;
}

Rat pairing(const Class& u, const Class& v)
{
    check_same_rank(u, v, "pairing");
    Rat s = u.a * v.a;
    for (int i = 0; i < u.n(); ++i)
        s -= u.b[i] * v.b[i];
    return s;
}

Class basis_h(int n)
{
    return Class(1, std::vector<Rat>(n, 0));
}

Class basis_e(int i, int n)
{
    if (i < 1 || i > n)
        throw std::invalid_argument("basis_e: index out of range");
    Class r(0, std::vector<Rat>(n, 0));
    r.b[i - 1] = -1;
    return r;
}

Class canonical_class(int n)
{
    if (n < 0)
        throw std::invalid_argument("canonical_class: n must be nonnegative");
    return Class(-3, std::vector<Rat>(n, -1));
}

Class minimal_exceptional(int n)
{
    if (n < 1)
        throw std::invalid_argument("minimal_exceptional: n >= 1 required");
    return basis_e(n, n);
}

bool simple_root_valid(int i, int n)
{
    if (i == 0)
        return n >= 3;
    return i >= 1 && i <= n - 1;
}

Class simple_root(int i, int n)
{
    if (!simple_root_valid(i, n))
        throw std::invalid_argument("simple_root: l_" + std::to_string(i) +
                                    " undefined for n=" + std::to_string(n));
    Class r(0, std::vector<Rat>(n, 0));
    if (i == 0) {
        r.a = 1;
        r.b[0] = r.b[1] = r.b[2] = 1;
    } else {
        r.b[i - 1] = -1;
        r.b[i] = 1;
    }
    return r;
}

Rat k_pairing(const Class& d)
{
    // d.K with K = -3H + E_1 + ... + E_n, i.e. -3a + sum b_i.
    Rat s = -3 * d.a;
    for (const auto& x : d.b)
        s += x;
    return s;
}

Rat c1_pairing(const Class& d)
{
    return -k_pairing(d);
}

Class reflect(const Class& x, const Class& v)
{
    Rat vv = pairing(v, v);
    if (vv != -1 && vv != -2)
        throw std::invalid_argument("reflect: mirror class must have square -1 or -2, got " +
                                    rat_str(vv));
    Rat c = -2 * pairing(x, v) / vv;
    return x + c * v;
}

DistinguishedClasses distinguished(int n)
{
    if (n < 0)
        throw std::invalid_argument("distinguished: n must be nonnegative");
    DistinguishedClasses d;
    d.canonical = canonical_class(n);
    if (n >= 3)
        d.simple_roots.emplace_back(0, simple_root(0, n));
    for (int i = 1; i <= n - 1; ++i)
        d.simple_roots.emplace_back(i, simple_root(i, n));
    if (n >= 1)
        d.minimal_exceptional = minimal_exceptional(n);
    return d;
}

}  // namespace cremona
