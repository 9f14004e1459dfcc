#include "cremona/deform.hpp"

#include <stdexcept>

#include "cremona/classify.hpp"
#include "cremona/cone.hpp"

namespace cremona {

SignVector sign_vector(const Class& omega)
{
    if (!is_reduced(omega))
        throw std::invalid_argument("sign_vector: reduced class required");
    SignVector sv;
    const int n = omega.n();
    for (int i = 0; i <= n - 1; ++i) {
        if (!simple_root_valid(i, n))
            continue;
        sv.emplace_back(i, sign_of(pairing(omega, simple_root(i, n))));
    }
    return sv;
}

namespace {

char checked_type_kind(const Class& omega, const char* who)
{
    TypeLabel t = form_type(omega);  // enforces reduced symplectic
    if (t.kind == 'E')
        throw std::invalid_argument(std::string(who) +
                                    ": type E input, simple-root criterion not licensed");
    return t.kind;
}

}  // namespace

ChamberRelation chamber_compare(const Class& tau0, const Class& tau1)
{
    if (tau0.n() != tau1.n())
        throw std::invalid_argument("chamber_compare: rank mismatch");
    checked_type_kind(tau0, "chamber_compare");
    checked_type_kind(tau1, "chamber_compare");

    SignVector s0 = sign_vector(tau0);
    SignVector s1 = sign_vector(tau1);
    ChamberRelation rel;
    rel.forward_surjection = true;
    rel.backward_surjection = true;
    for (size_t k = 0; k < s0.size(); ++k) {
        if (s1[k].second > 0 && s0[k].second <= 0)
            rel.forward_surjection = false;
        if (s0[k].second > 0 && s1[k].second <= 0)
            rel.backward_surjection = false;
    }
    rel.invariant = rel.forward_surjection && rel.backward_surjection;
    return rel;
}

Class a_extremal_path(const Class& omega1, const Rat& t)
{
    if (t <= 0 || t > 1)
        throw std::invalid_argument("a_extremal_path: t must lie in (0, 1]");
    if (omega1.n() < 1 || omega1.a != 1)
        throw std::invalid_argument("a_extremal_path: normalized class (nu = 1) required");
    checked_type_kind(omega1, "a_extremal_path");

    Class out = omega1;
    out.b[0] = (omega1.b[0] - 1) * t + 1;
    for (int i = 1; i < out.n(); ++i)
        out.b[i] = t * omega1.b[i];

    ConeReport rep = cone_report(out);
    if (!rep.is_reduced || !rep.is_symplectic || !rep.in_nrn)
        throw std::domain_error("a_extremal_path: path left the normalized c1-positive region");
    if (sign_vector(out) != sign_vector(omega1))
        throw std::domain_error("a_extremal_path: sign vector changed along the path");
    return out;
}

Class minimal_path(const Class& omega, int m, const Rat& t)
{
    const int n = omega.n();
    if (t <= 0 || t > 1)
        throw std::invalid_argument("minimal_path: t must lie in (0, 1]");
    if (m < 1 || m > n)
        throw std::invalid_argument("minimal_path: block size out of range");

    const Rat eta = omega.b[n - 1];
    for (int i = n - m; i < n; ++i)
        if (omega.b[i] != eta)
            throw std::invalid_argument("minimal_path: trailing block entries must be equal");
    if (n - m >= 1 && omega.b[n - m - 1] == eta)
        throw std::invalid_argument("minimal_path: block is not the maximal trailing block");

    TypeLabel type = form_type(omega);  // enforces reduced symplectic
    if (type.kind == 'D' && type.rank >= n - 1)
        throw std::invalid_argument("minimal_path: type D_{n-1} input excluded");
    if (type.kind == 'E' && type.rank == n)
        throw std::invalid_argument("minimal_path: type E_n input excluded");

    Class out = omega;
    for (int i = n - m; i < n; ++i)
        out.b[i] = t * eta;

    ConeReport rep = cone_report(out);
    if (!rep.in_nrn)
        throw std::domain_error("minimal_path: path left the normalized c1-positive region");
    SignVector before = sign_vector(omega);
    SignVector after = sign_vector(out);
    for (size_t k = 0; k < before.size(); ++k) {
        int idx = before[k].first;
        bool touched = (idx == 0) ? (n - m + 1 <= 3) : (idx + 1 >= n - m + 1);
        if (!touched && before[k].second != after[k].second)
            throw std::domain_error("minimal_path: sign changed on a root away from the block");
    }
    if (form_type(out).kind != type.kind)
        throw std::domain_error("minimal_path: type kind changed along the path");
    return out;
}

DivisorPredicates divisor_predicates(const Class& omega)
{
    ConeReport rep = cone_report(omega);
    if (!rep.is_reduced || !rep.is_symplectic)
        throw std::invalid_argument("divisor_predicates: reduced symplectic class required");

    DivisorPredicates out;
    const int n = omega.n();

    if (n >= 2 && omega.a == 1) {
        // The D-form parameter a = m_1 when all later entries equal (1-a)/2.
        const Rat a = omega.b[0];
        bool matches = true;
        for (int i = 1; i < n && matches; ++i)
            matches = omega.b[i] == (1 - a) / 2;
        if (matches)
            out.cv = a > Rat(n - 3, n - 1);
    }

    if (n > 5) {
        Rat tail = 0;
        for (int i = 5; i < n; ++i)
            tail += omega.b[i];
        out.stein = 2 * omega.b[0] - 1 - tail > 0;
    }
    return out;
}

}  // namespace cremona
