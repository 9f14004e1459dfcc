#include <doctest.h>

#include <random>

#include "cremona/cone.hpp"
#include "cremona/decompose.hpp"
#include "cremona/enumerate.hpp"
#include "cremona/io.hpp"
#include "cremona/simplex.hpp"
#include "support.hpp"

using namespace cremona;
using cremona::testing::sample_nrn;

namespace {

Class recombine(const Decomposition& dec, int n)
{
    Class sum(0, std::vector<Rat>(n, 0));
    for (const auto& [coef, cls] : dec.terms)
        sum = sum + coef * cls;
    return sum;
}

void check_certificate(const Class& d, const Decomposition& dec)
{
    CHECK(recombine(dec, d.n()) == d);
    CHECK(dec.terms.size() <= static_cast<size_t>(d.n()) + 1);
    for (const auto& [coef, cls] : dec.terms) {
        CHECK(coef > 0);
        CHECK(is_exceptional(cls));
    }
}

}  // namespace

TEST_CASE("simplex feasibility on small systems")
{
    SUBCASE("unique solution")
    {
        auto x = feasible_nonnegative_combination({{1, 0}, {0, 1}}, {3, 4});
        REQUIRE(x.has_value());
        CHECK((*x)[0] == 3);
        CHECK((*x)[1] == 4);
    }
    SUBCASE("negativity forced: infeasible")
    {
        CHECK(!feasible_nonnegative_combination({{1, 0}, {0, 1}}, {-1, 2}).has_value());
    }
    SUBCASE("negative right-hand side reachable by sign flips")
    {
        auto x = feasible_nonnegative_combination({{-1, 1}}, {-2, 2});
        REQUIRE(x.has_value());
        CHECK((*x)[0] == 2);
    }
}

TEST_CASE("decompose_c1_positive worked examples")
{
    SUBCASE("H on the two-fold blow-up")
    {
        auto res = decompose_c1_positive(parse_class("1;0,0"));
        REQUIRE(!res.infeasible_at_bound());
        check_certificate(parse_class("1;0,0"), *res.decomposition);
        // Three candidates, full rank: the certificate is forced.
        std::map<std::string, Rat> got;
        for (const auto& [c, e] : res.decomposition->terms)
            got[format_class_lattice(e)] = c;
        CHECK(got == std::map<std::string, Rat>{
                         {"0;-1,0", 1}, {"0;0,-1", 1}, {"1;1,1", 1}});
    }
    SUBCASE("2H - E1 on the two-fold blow-up")
    {
        Class d = parse_class("2;1,0");
        auto res = decompose_c1_positive(d);
        REQUIRE(!res.infeasible_at_bound());
        check_certificate(d, *res.decomposition);
        std::map<std::string, Rat> got;
        for (const auto& [c, e] : res.decomposition->terms)
            got[format_class_lattice(e)] = c;
        CHECK(got == std::map<std::string, Rat>{
                         {"0;-1,0", 1}, {"0;0,-1", 2}, {"1;1,1", 2}});
    }
    SUBCASE("the monotone three-fold blow-up")
    {
        Class d = parse_class("(1|1/3,1/3,1/3)");
        auto res = decompose_c1_positive(d);
        REQUIRE(!res.infeasible_at_bound());
        check_certificate(d, *res.decomposition);

        // The symmetric combination is also a valid certificate.
        Class sum(0, std::vector<Rat>(3, 0));
        for (const auto& e : enumerate_exceptional(3, 1))
            sum = sum + Rat(1, 3) * e;
        CHECK(sum == d);
    }
}

TEST_CASE("decompose_c1_positive rejections")
{
    CHECK_THROWS_AS(decompose_c1_positive(parse_class("(1|1/2)")), std::invalid_argument);
    // Reduced and symplectic but on the -K wall: not c1-positive.
    Class wall(1, std::vector<Rat>(10, Rat(3, 10)));
    CHECK_THROWS_AS(decompose_c1_positive(wall), std::invalid_argument);
}

TEST_CASE("random interior classes decompose at low degree")
{
    std::mt19937 rng(89);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 6;
        Class d = sample_nrn(n, rng);
        auto res = decompose_c1_positive(d);
        REQUIRE(!res.infeasible_at_bound());
        check_certificate(d, *res.decomposition);
    }
}

TEST_CASE("non-reduced cone classes decompose too")
{
    std::mt19937 rng(91);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 4 + trial % 3;
        Class d = reflect(sample_nrn(n, rng), simple_root(0, n));
        auto res = decompose_c1_positive(d);
        REQUIRE(!res.infeasible_at_bound());
        Class sum(0, std::vector<Rat>(n, 0));
        for (const auto& [coef, cls] : res.decomposition->terms) {
            CHECK(coef > 0);
            CHECK(is_exceptional(cls));
            sum = sum + coef * cls;
        }
        CHECK(sum == d);
    }
}

TEST_CASE("the line class and its rank-zero model")
{
    auto m = sphere_model(Class(1, {}));
    REQUIRE(m.has_value());
    CHECK(m->model == SphereModel::Model::kh_minus);
    CHECK(m->k == 1);

    auto h3 = sphere_model(parse_class("3;2,0"));
    REQUIRE(h3.has_value());
    CHECK(h3->model == SphereModel::Model::kh_minus);
    CHECK(h3->k == 3);
}

TEST_CASE("sphere_model")
{
    SUBCASE("2H is its own model")
    {
        auto m = sphere_model(parse_class("2;0,0"));
        REQUIRE(m.has_value());
        CHECK(m->model == SphereModel::Model::two_h);
        CHECK(m->word.empty());
    }
    SUBCASE("3H - 2E1 - E2")
    {
        auto m = sphere_model(parse_class("3;2,1,0"));
        REQUIRE(m.has_value());
        CHECK(m->model == SphereModel::Model::kh_minus_e2);
        CHECK(m->k == 3);
    }
    SUBCASE("2H - E1 - E2 is the k = 2 instance")
    {
        auto m = sphere_model(parse_class("2;1,1"));
        REQUIRE(m.has_value());
        CHECK(m->model == SphereModel::Model::kh_minus_e2);
        CHECK(m->k == 2);
    }
    SUBCASE("the word reproduces the model exactly")
    {
        Class d = parse_class("2;-1,1");  // needs the E_n sign reflection
        auto m = sphere_model(d);
        REQUIRE(m.has_value());
        CHECK(m->model == SphereModel::Model::kh_minus_e2);
        Class image = apply_word(m->word, d);
        CHECK(image == parse_class("2;1,1"));
    }
    SUBCASE("scattered positive-square sphere classes come back to a model")
    {
        std::mt19937 rng(97);
        for (int trial = 0; trial < 60; ++trial) {
            int n = 3 + trial % 5;
            Class model = (trial % 2) ? Class(parse_class("2;1,1")) : Class(parse_class("3;2,1"));
            while (model.n() < n)
                model.b.emplace_back(0);
            WeylWord w;
            std::uniform_int_distribution<int> pick(0, n - 1);
            for (int i = 0; i < 10; ++i)
                w.push_back(WeylGen::simple(pick(rng)));
            auto m = sphere_model(apply_word(w, model));
            REQUIRE(m.has_value());
            CHECK(m->k == (trial % 2 ? 2 : 3));
        }
    }
    SUBCASE("no model for non-sphere classes")
    {
        CHECK(!sphere_model(parse_class("3;1,1,1,1,1,1,1,1")).has_value());
        CHECK_THROWS_AS(sphere_model(parse_class("0;0,-1")), std::invalid_argument);
    }
}

TEST_CASE("negative_a_family")
{
    SUBCASE("worked examples")
    {
        auto f = negative_a_family(parse_class("-1;-2,1"));
        REQUIRE(f.has_value());
        CHECK(f->m == 1);
        CHECK(f->index_set == std::vector<int>{2});

        auto g = negative_a_family(parse_class("-2;-3,1,1"));
        REQUIRE(g.has_value());
        CHECK(g->m == 2);
        CHECK(g->index_set == std::vector<int>{2, 3});

        auto h = negative_a_family(parse_class("-1;-2"));
        REQUIRE(h.has_value());
        CHECK(h->m == 1);
        CHECK(h->index_set.empty());
    }
    SUBCASE("rejections and non-matches")
    {
        CHECK_THROWS_AS(negative_a_family(parse_class("1;1,1")), std::invalid_argument);
        CHECK(!negative_a_family(parse_class("-1;-3,1")).has_value());
        CHECK(!negative_a_family(parse_class("-1;-2,2")).has_value());
    }
    SUBCASE("instances square at most -2")
    {
        for (long long m = 1; m <= 4; ++m)
            for (int n = 2; n <= 6; ++n) {
                Class s(Rat(-m), std::vector<Rat>(n, 0));
                s.b[0] = Rat(-(m + 1));
                for (int j = 1; j < n; ++j)
                    s.b[j] = 1;
                REQUIRE(negative_a_family(s).has_value());
                CHECK(square(s) <= -2);
            }
    }
}
