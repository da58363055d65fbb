#include "cellci/grid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cellci {

std::string to_string(const Point& p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

std::string to_string(const Interval& iv) {
    return "[" + to_string(iv.a) + "," + to_string(iv.b) + "]";
}

CellCollection::CellCollection(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

CellCollection CellCollection::from_corners(const std::vector<Point>& lower_lefts) {
    std::vector<Cell> cells;
    cells.reserve(lower_lefts.size());
    for (const Point& p : lower_lefts) cells.push_back(Cell{p});
    return CellCollection(std::move(cells));
}

bool CellCollection::contains(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

std::vector<Point> CellCollection::vertices() const {
    std::set<Point> vs;
    for (const Cell& c : cells_)
        for (const Point& p : c.vertices()) vs.insert(p);
    return {vs.begin(), vs.end()};
}

std::vector<Edge> CellCollection::edges() const {
    std::set<Edge> es;
    for (const Cell& c : cells_)
        for (const Edge& e : c.edges()) es.insert(e);
    return {es.begin(), es.end()};
}

CellCollection CellCollection::translated(const Point& delta) const {
    std::vector<Cell> moved;
    moved.reserve(cells_.size());
    for (const Cell& c : cells_) moved.push_back(Cell{c.lower_left + delta});
    return CellCollection(std::move(moved));
}

std::vector<Cell> cells_in_rectangle(const Cell& a, const Cell& b) {
    if (!componentwise_leq(a.lower_left, b.lower_left))
        throw std::invalid_argument("not a rectangle");
    std::vector<Cell> out;
    for (int r = a.lower_left.i; r <= b.lower_left.i; ++r)
        for (int s = a.lower_left.j; s <= b.lower_left.j; ++s)
            out.push_back(Cell{{r, s}});
    return out;
}

bool is_inner_interval(const CellCollection& c, const Interval& iv) {
    if (!iv.proper()) return false;
    for (int r = iv.a.i; r < iv.b.i; ++r)
        for (int s = iv.a.j; s < iv.b.j; ++s)
            if (!c.contains(Cell{{r, s}})) return false;
    return true;
}

std::vector<Interval> inner_intervals(const CellCollection& c) {
    const std::vector<Point> vs = c.vertices();
    std::vector<Interval> out;
    for (const Point& a : vs)
        for (const Point& b : vs) {
            if (a.i >= b.i || a.j >= b.j) continue;
            const Interval iv{a, b};
            if (is_inner_interval(c, iv)) out.push_back(iv);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CellCollection> weakly_connected_components(const CellCollection& c) {
    const auto& cells = c.cells();
    const int n = c.rank();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

    std::map<Point, int> first_seen;
    for (int k = 0; k < n; ++k)
        for (const Point& v : cells[k].vertices()) {
            auto [it, fresh] = first_seen.emplace(v, k);
            if (!fresh) unite(k, it->second);
        }

    std::map<int, std::vector<Cell>> groups;
    for (int k = 0; k < n; ++k) groups[find(k)].push_back(cells[k]);
    std::vector<CellCollection> out;
    out.reserve(groups.size());
    for (auto& [root, group] : groups) out.emplace_back(std::move(group));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_chessboard(const CellCollection& c) {
    // Two distinct cells share >= 2 vertices exactly when they share an edge,
    // i.e. when they are orthogonal neighbors.
    for (const Cell& cell : c.cells()) {
        if (c.contains(Cell{cell.lower_left + Point{1, 0}})) return false;
        if (c.contains(Cell{cell.lower_left + Point{0, 1}})) return false;
    }
    return true;
}

Interval minimal_bounding_rectangle(const CellCollection& c) {
    if (c.empty()) throw std::invalid_argument("empty collection");
    const std::vector<Point> vs = c.vertices();
    Point lo = vs.front(), hi = vs.front();
    for (const Point& v : vs) {
        lo.i = std::min(lo.i, v.i);
        lo.j = std::min(lo.j, v.j);
        hi.i = std::max(hi.i, v.i);
        hi.j = std::max(hi.j, v.j);
    }
    return {lo, hi};
}

Point canonical_offset(const CellCollection& c) {
    if (c.empty()) return {0, 0};
    return minimal_bounding_rectangle(c).a;
}

}  // namespace cellci
