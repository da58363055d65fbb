#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cellci/linalg.hpp"
#include "cellci/order.hpp"

namespace cellci {

// A dense integer vector over an ambient vertex set; entry k belongs to the
// vertex of rank k in the ambient order.
struct IntegerVector {
    std::vector<long long> entries;

    friend auto operator<=>(const IntegerVector&, const IntegerVector&) = default;
    IntegerVector operator+(const IntegerVector& o) const;
    // e = e+ - e- with disjoint supports.
    IntegerVector positive_part() const;
    IntegerVector negative_part() const;
    long long entry_sum() const;
};

// +1 at the diagonal corners of the cell, -1 at the anti-diagonal ones.
// Throws std::invalid_argument when a corner is missing from the ambient.
IntegerVector cell_vector(const Cell& cell, const VertexOrder& ambient);

// Exponent-difference vector plus - minus of a binomial over the ambient.
IntegerVector binomial_exponent_vector(const Binomial& f, const VertexOrder& ambient);

// The cell vectors of C over the snake-ranked translated vertex set; their
// integer span is the lattice attached to C.
struct LatticeBasis {
    VertexOrder ambient;               // translated frame, snake ranks
    std::vector<Cell> cells;           // translated, canonical order
    std::vector<IntegerVector> vectors;  // one per cell
};

LatticeBasis lattice_basis(const CellCollection& c);

// Rank over Q of the basis vectors (fraction-free elimination, exact).
int lattice_rank(const LatticeBasis& basis);
int lattice_rank(const CellCollection& c);

// True iff e is an integer combination of the basis vectors.
// Throws std::invalid_argument on ambient dimension mismatch.
bool lattice_contains(const LatticeBasis& basis, const IntegerVector& e);

// Integer coefficients expressing the exponent-difference vector of
// inner_minor(iv) in terms of cell vectors. For inner intervals the all-ones
// decomposition over the cells of the rectangle is returned when it checks
// out by direct addition; otherwise a general integer solve provides the
// coefficients. Cells are reported in the caller's coordinate frame.
// Throws std::invalid_argument when iv is not an inner interval of C.
std::vector<std::pair<Cell, long long>> interval_vector_decomposition(
    const CellCollection& c, const Interval& iv);

// Plain text dump: rows = cells, columns = vertices in ambient rank order.
std::string dump_matrix(const LatticeBasis& basis);

}  // namespace cellci
