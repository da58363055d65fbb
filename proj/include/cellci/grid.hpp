#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace cellci {

// A lattice point (i, j) in Z^2. operator<=> gives the canonical storage
// order (lexicographic by i, then j) used for containers and deterministic
// output; it is unrelated to the monomial orders in order.hpp.
struct Point {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
    Point operator+(const Point& o) const { return {i + o.i, j + o.j}; }
    Point operator-(const Point& o) const { return {i - o.i, j - o.j}; }
};

// Componentwise partial order on Z^2.
inline bool componentwise_leq(const Point& a, const Point& b) {
    return a.i <= b.i && a.j <= b.j;
}

std::string to_string(const Point& p);

// Axis-aligned interval [a, b] with a <= b componentwise. a and b are the
// diagonal corners; c (upper-left) and d (lower-right) the anti-diagonal ones.
struct Interval {
    Point a;
    Point b;

    Point c() const { return {a.i, b.j}; }
    Point d() const { return {b.i, a.j}; }
    bool proper() const { return a.i < b.i && a.j < b.j; }

    friend auto operator<=>(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& iv);

// An undirected unit edge, normalized so u < v.
struct Edge {
    Point u;
    Point v;

    Edge() = default;
    Edge(const Point& p, const Point& q) : u(p < q ? p : q), v(p < q ? q : p) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A unit cell, identified by its lower-left corner.
struct Cell {
    Point lower_left;

    Interval interval() const { return {lower_left, lower_left + Point{1, 1}}; }

    // The four corners in storage order: a, c, d, b.
    std::array<Point, 4> vertices() const {
        const Point a = lower_left;
        return {a, a + Point{0, 1}, a + Point{1, 0}, a + Point{1, 1}};
    }

    std::array<Edge, 4> edges() const {
        const auto [a, c, d, b] = vertices();
        return {Edge{a, c}, Edge{a, d}, Edge{c, b}, Edge{d, b}};
    }

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A finite set of cells. The constructor sorts and deduplicates, so equal
// collections compare equal and all derived output is deterministic.
class CellCollection {
public:
    CellCollection() = default;
    explicit CellCollection(std::vector<Cell> cells);
    static CellCollection from_corners(const std::vector<Point>& lower_lefts);

    bool empty() const { return cells_.empty(); }
    int rank() const { return static_cast<int>(cells_.size()); }
    const std::vector<Cell>& cells() const { return cells_; }
    bool contains(const Cell& c) const;

    // V(C) and E(C): unions over member cells, sorted and deduplicated.
    std::vector<Point> vertices() const;
    std::vector<Edge> edges() const;

    CellCollection translated(const Point& delta) const;

    friend auto operator<=>(const CellCollection&, const CellCollection&) = default;

private:
    std::vector<Cell> cells_;
};

// All cells whose lower-left corner lies in the box spanned by the corners
// of A and B. Throws std::invalid_argument("not a rectangle") unless
// A.lower_left <= B.lower_left componentwise.
std::vector<Cell> cells_in_rectangle(const Cell& a, const Cell& b);

// True iff I is proper and every cell of the rectangle it spans belongs to
// C. Non-proper intervals yield false so enumeration loops stay total.
bool is_inner_interval(const CellCollection& c, const Interval& iv);

// All inner intervals of C with corners in V(C), sorted by (a, b).
std::vector<Interval> inner_intervals(const CellCollection& c);

// Partition into maximal classes under the transitive closure of
// vertex-sharing. Components are canonically ordered by their first cell.
std::vector<CellCollection> weakly_connected_components(const CellCollection& c);

// True iff every pair of distinct cells shares at most one vertex,
// equivalently no two cells share an edge. Vacuously true when empty.
bool is_chessboard(const CellCollection& c);

// Smallest interval containing V(C). Throws std::invalid_argument("empty
// collection") when C is empty.
Interval minimal_bounding_rectangle(const CellCollection& c);

// Lower-left corner of the minimal bounding rectangle; (0,0) for the empty
// collection. Subtracting it normalizes C so the bounding rectangle starts
// at the origin.
Point canonical_offset(const CellCollection& c);

}  // namespace cellci
