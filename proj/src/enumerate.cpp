#include "cellci/enumerate.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace cellci {

CellCollection canonical_form(const CellCollection& c) {
    if (c.empty()) throw std::invalid_argument("empty collection");
    return c.translated(Point{0, 0} - canonical_offset(c));
}

namespace {

using PointMap = Point (*)(const Point&);

// The eight symmetries of the square acting on vertices.
constexpr std::array<PointMap, 8> kSymmetries = {
    +[](const Point& p) { return Point{p.i, p.j}; },
    +[](const Point& p) { return Point{-p.j, p.i}; },
    +[](const Point& p) { return Point{-p.i, -p.j}; },
    +[](const Point& p) { return Point{p.j, -p.i}; },
    +[](const Point& p) { return Point{-p.i, p.j}; },
    +[](const Point& p) { return Point{p.j, p.i}; },
    +[](const Point& p) { return Point{p.i, -p.j}; },
    +[](const Point& p) { return Point{-p.j, -p.i}; },
};

CellCollection transform(const CellCollection& c, PointMap f) {
    std::vector<Cell> cells;
    cells.reserve(c.cells().size());
    for (const Cell& cell : c.cells()) {
        // Map all four corners; the image square's lower-left is their min.
        Point lo = f(cell.vertices()[0]);
        for (const Point& v : cell.vertices()) {
            const Point q = f(v);
            lo.i = std::min(lo.i, q.i);
            lo.j = std::min(lo.j, q.j);
        }
        cells.push_back(Cell{lo});
    }
    return CellCollection(std::move(cells));
}

}  // namespace

CellCollection d4_canonical_form(const CellCollection& c) {
    CellCollection best = canonical_form(c);
    for (PointMap f : kSymmetries) {
        CellCollection image = canonical_form(transform(c, f));
        if (image < best) best = image;
    }
    return best;
}

std::vector<CellCollection> enumerate_connected(int max_rank) {
    std::vector<CellCollection> out;
    if (max_rank < 1) return out;

    std::vector<CellCollection> level = {CellCollection::from_corners({{0, 0}})};
    out.push_back(level.front());

    for (int rank = 2; rank <= max_rank; ++rank) {
        std::set<CellCollection> next;
        for (const CellCollection& c : level) {
            for (const Cell& cell : c.cells()) {
                for (int di = -1; di <= 1; ++di)
                    for (int dj = -1; dj <= 1; ++dj) {
                        if (di == 0 && dj == 0) continue;
                        const Cell grown{cell.lower_left + Point{di, dj}};
                        if (c.contains(grown)) continue;
                        std::vector<Cell> cells = c.cells();
                        cells.push_back(grown);
                        next.insert(canonical_form(CellCollection(std::move(cells))));
                    }
            }
        }
        level.assign(next.begin(), next.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::map<int, long long> connected_counts(int max_rank, bool d4_reduce) {
    std::map<int, long long> counts;
    if (!d4_reduce) {
        for (const CellCollection& c : enumerate_connected(max_rank)) ++counts[c.rank()];
        return counts;
    }
    std::set<CellCollection> seen;
    for (const CellCollection& c : enumerate_connected(max_rank))
        if (seen.insert(d4_canonical_form(c)).second) ++counts[c.rank()];
    return counts;
}

}  // namespace cellci
