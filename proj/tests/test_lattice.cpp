#include "doctest.h"

#include <random>

#include "support.hpp"

using namespace cellci;
using cellci::testing::cc;

TEST_CASE("matrix rank via fraction-free elimination") {
    using linalg::Matrix;
    CHECK(linalg::rank(Matrix{}) == 0);
    CHECK(linalg::rank(Matrix{{0, 0}, {0, 0}}) == 0);
    CHECK(linalg::rank(Matrix{{1, 0}, {0, 1}}) == 2);
    CHECK(linalg::rank(Matrix{{1, 2}, {2, 4}}) == 1);
    CHECK(linalg::rank(Matrix{{2, 3, 5}, {4, 6, 10}, {1, 1, 1}}) == 2);
}

TEST_CASE("hermite form solves row-lattice membership") {
    using linalg::Matrix;
    using linalg::Row;
    const auto hf = linalg::hermite_form(Matrix{{2, 0, 1}, {0, 3, 1}});
    // 1*(2,0,1) + 2*(0,3,1) = (2,6,3)
    const auto coeffs = linalg::solve_in_row_lattice(hf, Row{2, 6, 3});
    REQUIRE(coeffs.has_value());
    CHECK((*coeffs)[0] == 1);
    CHECK((*coeffs)[1] == 2);
    CHECK(!linalg::solve_in_row_lattice(hf, Row{1, 0, 0}).has_value());
    CHECK(linalg::solve_in_row_lattice(hf, Row{0, 0, 0}).has_value());
    CHECK_THROWS_AS(linalg::solve_in_row_lattice(hf, Row{1, 0}), std::invalid_argument);
}

TEST_CASE("cell_vector pattern") {
    const CellCollection single = cc({{0, 0}});
    const VertexOrder ambient = snake_vertex_order(single);
    const IntegerVector v = cell_vector(Cell{{0, 0}}, ambient);
    CHECK(v.entry_sum() == 0);
    CHECK(v.entries[ambient.rank({0, 0})] == 1);
    CHECK(v.entries[ambient.rank({1, 1})] == 1);
    CHECK(v.entries[ambient.rank({0, 1})] == -1);
    CHECK(v.entries[ambient.rank({1, 0})] == -1);

    // definitional alignment with the inner minor
    CHECK(v == binomial_exponent_vector(inner_minor(Cell{{0, 0}}.interval()), ambient));

    CHECK_THROWS_AS(cell_vector(Cell{{5, 5}}, ambient), std::invalid_argument);
}

TEST_CASE("positive and negative parts decompose") {
    const CellCollection single = cc({{0, 0}});
    const VertexOrder ambient = snake_vertex_order(single);
    const IntegerVector v = cell_vector(Cell{{0, 0}}, ambient);
    const IntegerVector plus = v.positive_part(), minus = v.negative_part();
    for (size_t k = 0; k < v.entries.size(); ++k) {
        CHECK(v.entries[k] == plus.entries[k] - minus.entries[k]);
        CHECK(!(plus.entries[k] != 0 && minus.entries[k] != 0));
    }
}

TEST_CASE("lattice rank equals the number of cells") {
    CHECK(lattice_rank(cc({{0, 0}})) == 1);
    CHECK(lattice_rank(cc({{0, 0}, {1, 0}})) == 2);
    CHECK(lattice_rank(CellCollection{}) == 0);
    for (const CellCollection& c : enumerate_connected(3))
        CHECK(lattice_rank(c) == c.rank());
}

TEST_CASE("lattice membership") {
    const CellCollection domino = cc({{0, 0}, {1, 0}});
    const LatticeBasis basis = lattice_basis(domino);

    CHECK(lattice_contains(basis, IntegerVector{std::vector<long long>(basis.ambient.size(), 0)}));
    for (const IntegerVector& v : basis.vectors) CHECK(lattice_contains(basis, v));

    // the wide inner minor is the sum of the two cell vectors
    const IntegerVector wide =
        binomial_exponent_vector(inner_minor(Interval{{0, 0}, {2, 1}}), basis.ambient);
    CHECK(lattice_contains(basis, wide));
    CHECK(wide == basis.vectors[0] + basis.vectors[1]);

    // a single variable is never in the lattice (entry sums are 0)
    IntegerVector unit{std::vector<long long>(basis.ambient.size(), 0)};
    unit.entries[0] = 1;
    CHECK(!lattice_contains(basis, unit));

    CHECK_THROWS_AS(lattice_contains(basis, IntegerVector{{1, 0}}), std::invalid_argument);
}

TEST_CASE("integer combinations conserve the entry sum") {
    const LatticeBasis basis = lattice_basis(cc({{0, 0}, {1, 0}, {1, 1}}));
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        IntegerVector sum{std::vector<long long>(basis.ambient.size(), 0)};
        for (const IntegerVector& v : basis.vectors) {
            const int c = coeff(rng);
            for (size_t k = 0; k < sum.entries.size(); ++k)
                sum.entries[k] += c * v.entries[k];
        }
        CHECK(sum.entry_sum() == 0);
        CHECK(lattice_contains(basis, sum));
    }
}

TEST_CASE("interval_vector_decomposition") {
    const CellCollection domino = cc({{0, 0}, {1, 0}});

    const auto single = interval_vector_decomposition(domino, Interval{{0, 0}, {1, 1}});
    REQUIRE(single.size() == 1);
    CHECK(single[0].first == Cell{{0, 0}});
    CHECK(single[0].second == 1);

    const auto wide = interval_vector_decomposition(domino, Interval{{0, 0}, {2, 1}});
    REQUIRE(wide.size() == 2);
    CHECK(wide[0] == std::pair<Cell, long long>{Cell{{0, 0}}, 1});
    CHECK(wide[1] == std::pair<Cell, long long>{Cell{{1, 0}}, 1});

    const CellCollection block = cc({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    const auto square = interval_vector_decomposition(block, Interval{{0, 0}, {2, 2}});
    CHECK(square.size() == 4);
    for (const auto& [cell, k] : square) CHECK(k == 1);

    CHECK_THROWS_WITH_AS(interval_vector_decomposition(domino, Interval{{0, 0}, {2, 2}}),
                         "not an inner interval", std::invalid_argument);
}

TEST_CASE("decomposition works away from the origin") {
    const CellCollection far = cc({{5, 5}, {6, 5}});
    const auto wide = interval_vector_decomposition(far, Interval{{5, 5}, {7, 6}});
    REQUIRE(wide.size() == 2);
    CHECK(wide[0].first == Cell{{5, 5}});
    CHECK(wide[1].first == Cell{{6, 5}});
}

TEST_CASE("every inner minor vector lies in the lattice") {
    for (const CellCollection& c : enumerate_connected(3)) {
        const LatticeBasis basis = lattice_basis(c);
        const Point offset = basis.ambient.offset();
        for (const Interval& iv : inner_intervals(c)) {
            const Interval shifted{iv.a - offset, iv.b - offset};
            CHECK(lattice_contains(
                basis, binomial_exponent_vector(inner_minor(shifted), basis.ambient)));
        }
    }
}

TEST_CASE("matrix dump shape") {
    const LatticeBasis basis = lattice_basis(cc({{0, 0}}));
    const std::string dump = dump_matrix(basis);
    CHECK(dump == "# x_0_0 x_1_0 x_1_1 x_0_1\n1 -1 1 -1\n");
}
