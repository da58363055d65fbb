#include "doctest.h"

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace cellci;
using cellci::testing::cc;
using cellci::testing::mu_matrix_rank;

TEST_CASE("monomial arithmetic") {
    const Monomial x = Monomial::variable({0, 0});
    const Monomial y = Monomial::variable({1, 0});
    const Monomial xy = x * y;
    CHECK(xy.degree() == 2);
    CHECK(xy.exponent({0, 0}) == 1);
    CHECK((x * x).exponent({0, 0}) == 2);
    CHECK(x.divides(xy));
    CHECK(!xy.divides(x));
    CHECK(xy.quotient_by(x) == y);
    CHECK(lcm(x * x, xy) == x * x * y);
    CHECK(gcd(x * x, xy) == x);
    CHECK(coprime(x, y));
    CHECK(!coprime(xy, y));
    CHECK(Monomial{}.is_one());
    CHECK((x * y).str() == "x_0_0*x_1_0");
    CHECK((x * x).str() == "x_0_0^2");
    CHECK(Monomial{}.str() == "1");
}

TEST_CASE("inner_minor of proper intervals") {
    const Binomial unit = inner_minor(Interval{{0, 0}, {1, 1}});
    CHECK(unit.plus == Monomial::product({{{0, 0}, 1}, {{1, 1}, 1}}));
    CHECK(unit.minus == Monomial::product({{{0, 1}, 1}, {{1, 0}, 1}}));

    const Binomial wide = inner_minor(Interval{{0, 0}, {2, 1}});
    CHECK(wide.plus == Monomial::product({{{0, 0}, 1}, {{2, 1}, 1}}));
    CHECK(wide.minus == Monomial::product({{{0, 1}, 1}, {{2, 0}, 1}}));

    const Binomial square = inner_minor(Interval{{0, 0}, {2, 2}});
    CHECK(square.plus == Monomial::product({{{0, 0}, 1}, {{2, 2}, 1}}));
    CHECK(square.minus == Monomial::product({{{0, 2}, 1}, {{2, 0}, 1}}));

    CHECK_THROWS_AS(inner_minor(Interval{{0, 0}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("generators counts and ambient") {
    CHECK(generators(cc({{0, 0}})).generators.size() == 1);
    CHECK(generators(cc({{0, 0}, {1, 0}})).generators.size() == 3);
    CHECK(generators(cc({{0, 0}, {1, 1}})).generators.size() == 2);

    const IdealPresentation pres = generators(cc({{0, 0}, {1, 0}}));
    CHECK(pres.ambient.size() == 6);
    for (const Binomial& f : pres.generators)
        for (const Monomial& m : {f.plus, f.minus})
            for (const Point& v : m.support())
                CHECK(std::binary_search(pres.ambient.begin(), pres.ambient.end(), v));
}

TEST_CASE("generators are translated to the canonical frame") {
    const IdealPresentation far = generators(cc({{5, 7}}));
    const IdealPresentation origin = generators(cc({{0, 0}}));
    CHECK(far.generators == origin.generators);
    CHECK(far.ambient == origin.ambient);
    CHECK(far.offset == Point{5, 7});
    CHECK(origin.offset == Point{0, 0});
}

TEST_CASE("adjacent_minors") {
    const CellCollection single = cc({{0, 0}});
    CHECK(adjacent_minors(single).generators == generators(single).generators);

    const CellCollection domino = cc({{0, 0}, {1, 0}});
    CHECK(adjacent_minors(domino).generators.size() == 2);

    for (const CellCollection& c : enumerate_connected(4)) {
        const auto adj = adjacent_minors(c).generators;
        const auto gen = generators(c).generators;
        const std::set<Binomial> gen_set(gen.begin(), gen.end());
        for (const Binomial& f : adj) CHECK(gen_set.count(f));
        CHECK((adj.size() == gen.size()) == is_chessboard(c));
    }
}

TEST_CASE("mu on the named shapes") {
    CHECK(mu(cc({{0, 0}})) == 1);
    CHECK(mu(cc({{0, 0}, {1, 0}})) == 3);
    CHECK(mu(cc({{0, 0}, {1, 0}, {1, 1}})) == 5);
    CHECK(mu(CellCollection{}) == 0);
}

TEST_CASE("mu equals the coefficient-matrix rank") {
    for (const CellCollection& c : enumerate_connected(3)) CHECK(mu(c) == mu_matrix_rank(c));
}

TEST_CASE("plus monomials are diagonal products and pairwise distinct") {
    for (const CellCollection& c : enumerate_connected(3)) {
        const auto gens = generators(c).generators;
        std::set<Monomial> plus_set, minus_set;
        for (const Binomial& f : gens) {
            CHECK(f.plus.degree() == 2);
            CHECK(f.minus.degree() == 2);
            CHECK(coprime(f.plus, f.minus));
            plus_set.insert(f.plus);
            minus_set.insert(f.minus);
        }
        CHECK(plus_set.size() == gens.size());
        for (const Monomial& m : plus_set) CHECK(!minus_set.count(m));
    }
}

TEST_CASE("generators split over weakly connected components") {
    const CellCollection c = cc({{0, 0}, {1, 1}, {5, 0}, {6, 0}});
    std::set<Binomial> whole;
    const Point offset = canonical_offset(c);
    for (const Binomial& f : generators(c.translated(Point{0, 0} - offset)).generators)
        whole.insert(f);

    size_t total = 0;
    for (const CellCollection& comp : weakly_connected_components(c)) {
        // component generators, expressed in the frame of the whole collection
        const CellCollection comp_in_frame = comp.translated(Point{0, 0} - offset);
        for (const Interval& iv : inner_intervals(comp_in_frame)) {
            CHECK(whole.count(inner_minor(iv)));
            ++total;
        }
    }
    CHECK(total == whole.size());
}
