#include "cellci/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace cellci {

IntegerVector IntegerVector::operator+(const IntegerVector& o) const {
    if (entries.size() != o.entries.size())
        throw std::invalid_argument("dimension mismatch");
    IntegerVector out = *this;
    for (size_t k = 0; k < entries.size(); ++k) out.entries[k] += o.entries[k];
    return out;
}

IntegerVector IntegerVector::positive_part() const {
    IntegerVector out = *this;
    for (auto& v : out.entries) v = std::max(v, 0LL);
    return out;
}

IntegerVector IntegerVector::negative_part() const {
    IntegerVector out = *this;
    for (auto& v : out.entries) v = v < 0 ? -v : 0;
    return out;
}

long long IntegerVector::entry_sum() const {
    long long s = 0;
    for (long long v : entries) s += v;
    return s;
}

IntegerVector cell_vector(const Cell& cell, const VertexOrder& ambient) {
    const Interval iv = cell.interval();
    for (const Point& p : cell.vertices())
        if (!ambient.knows(p))
            throw std::invalid_argument("cell corner " + to_string(p) + " missing from ambient");
    IntegerVector v{std::vector<long long>(ambient.size(), 0)};
    v.entries[ambient.rank(iv.a)] += 1;
    v.entries[ambient.rank(iv.b)] += 1;
    v.entries[ambient.rank(iv.c())] -= 1;
    v.entries[ambient.rank(iv.d())] -= 1;
    return v;
}

IntegerVector binomial_exponent_vector(const Binomial& f, const VertexOrder& ambient) {
    IntegerVector v{std::vector<long long>(ambient.size(), 0)};
    for (const auto& [p, e] : f.plus.factors()) v.entries[ambient.rank(p)] += e;
    for (const auto& [p, e] : f.minus.factors()) v.entries[ambient.rank(p)] -= e;
    return v;
}

LatticeBasis lattice_basis(const CellCollection& c) {
    LatticeBasis basis;
    if (c.empty()) {
        basis.ambient = VertexOrder({}, {0, 0}, "snake");
        return basis;
    }
    basis.ambient = snake_vertex_order(c);
    const CellCollection shifted = c.translated(Point{0, 0} - basis.ambient.offset());
    basis.cells = shifted.cells();
    basis.vectors.reserve(basis.cells.size());
    for (const Cell& cell : basis.cells)
        basis.vectors.push_back(cell_vector(cell, basis.ambient));
    return basis;
}

namespace {

linalg::Matrix to_matrix(const std::vector<IntegerVector>& vectors, int cols) {
    linalg::Matrix m;
    m.reserve(vectors.size());
    for (const IntegerVector& v : vectors) {
        linalg::Row row;
        row.reserve(cols);
        for (long long x : v.entries) row.emplace_back(static_cast<long>(x));
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

int lattice_rank(const LatticeBasis& basis) {
    return linalg::rank(to_matrix(basis.vectors, basis.ambient.size()));
}

int lattice_rank(const CellCollection& c) { return lattice_rank(lattice_basis(c)); }

bool lattice_contains(const LatticeBasis& basis, const IntegerVector& e) {
    if (static_cast<int>(e.entries.size()) != basis.ambient.size())
        throw std::invalid_argument("dimension mismatch");
    if (basis.vectors.empty()) {
        for (long long v : e.entries)
            if (v != 0) return false;
        return true;
    }
    const auto hf = linalg::hermite_form(to_matrix(basis.vectors, basis.ambient.size()));
    linalg::Row target;
    target.reserve(e.entries.size());
    for (long long v : e.entries) target.emplace_back(static_cast<long>(v));
    return linalg::solve_in_row_lattice(hf, std::move(target)).has_value();
}

std::vector<std::pair<Cell, long long>> interval_vector_decomposition(
    const CellCollection& c, const Interval& iv) {
    if (!is_inner_interval(c, iv)) throw std::invalid_argument("not an inner interval");

    const LatticeBasis basis = lattice_basis(c);
    const Point offset = basis.ambient.offset();
    const Interval shifted{iv.a - offset, iv.b - offset};
    const IntegerVector target = binomial_exponent_vector(inner_minor(shifted), basis.ambient);

    // All-ones decomposition over the rectangle; inner intervals telescope,
    // but verify by direct addition rather than assume.
    const std::vector<Cell> rect = cells_in_rectangle(
        Cell{shifted.a}, Cell{shifted.b - Point{1, 1}});
    IntegerVector sum{std::vector<long long>(basis.ambient.size(), 0)};
    for (const Cell& cell : rect) sum = sum + cell_vector(cell, basis.ambient);
    if (sum == target) {
        std::vector<std::pair<Cell, long long>> out;
        out.reserve(rect.size());
        for (const Cell& cell : rect) out.emplace_back(Cell{cell.lower_left + offset}, 1);
        return out;
    }

    // Fallback: general integer solve against the full basis.
    const auto hf = linalg::hermite_form(to_matrix(basis.vectors, basis.ambient.size()));
    linalg::Row t;
    for (long long v : target.entries) t.emplace_back(static_cast<long>(v));
    const auto coeffs = linalg::solve_in_row_lattice(hf, std::move(t));
    if (!coeffs)
        throw std::logic_error("inner minor vector not in cell-vector lattice");
    std::vector<std::pair<Cell, long long>> out;
    for (size_t k = 0; k < basis.cells.size(); ++k) {
        if ((*coeffs)[k] == 0) continue;
        out.emplace_back(Cell{basis.cells[k].lower_left + offset},
                         static_cast<long long>((*coeffs)[k].get_si()));
    }
    return out;
}

std::string dump_matrix(const LatticeBasis& basis) {
    std::string out = "#";
    for (const Point& p : basis.ambient.ascending())
        out += " x_" + std::to_string(p.i) + "_" + std::to_string(p.j);
    out += "\n";
    for (size_t r = 0; r < basis.vectors.size(); ++r) {
        std::string line;
        for (long long v : basis.vectors[r].entries) {
            if (!line.empty()) line += " ";
            line += std::to_string(v);
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace cellci
