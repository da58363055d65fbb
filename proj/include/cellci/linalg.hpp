#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace cellci::linalg {

using Row = std::vector<mpz_class>;
using Matrix = std::vector<Row>;

// Rank over Q via fraction-free (Bareiss) elimination. Exact.
int rank(Matrix m);

// Row-style Hermite-like echelon form: u * a = h, with u unimodular, h in
// row echelon form with positive pivots. pivot_cols[r] is the pivot column
// of row r of h, strictly increasing; rows of h beyond `rank` are zero.
struct Hermite {
    Matrix h;
    Matrix u;
    std::vector<int> pivot_cols;
    int rank = 0;
};

Hermite hermite_form(Matrix a);

// Integer membership of e in the row lattice of the matrix that produced hf.
// Returns the coefficient vector x (over the ORIGINAL rows, x * a = e) when
// e is an integer combination, std::nullopt otherwise.
std::optional<Row> solve_in_row_lattice(const Hermite& hf, Row e);

}  // namespace cellci::linalg
