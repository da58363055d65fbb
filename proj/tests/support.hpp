#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cellci/decide.hpp"
#include "cellci/enumerate.hpp"
#include "cellci/groebner.hpp"
#include "cellci/io.hpp"
#include "cellci/lattice.hpp"

// Test-side oracles and instance families. Everything here is independent of
// the implementation paths it checks: inner intervals are re-derived by a
// plain scan over the bounding box, and mu is re-derived as a matrix rank.
namespace cellci::testing {

inline CellCollection cc(std::initializer_list<std::pair<int, int>> corners) {
    std::vector<Point> pts;
    for (const auto& [i, j] : corners) pts.push_back({i, j});
    return CellCollection::from_corners(pts);
}

// Brute-force oracle: every proper interval with corners anywhere in the
// bounding box whose rectangle lies inside C. Does not presuppose that the
// corners belong to V(C).
inline std::vector<Interval> brute_force_inner_intervals(const CellCollection& c) {
    std::vector<Interval> out;
    if (c.empty()) return out;
    const Interval box = minimal_bounding_rectangle(c);
    for (int ai = box.a.i; ai <= box.b.i; ++ai)
        for (int aj = box.a.j; aj <= box.b.j; ++aj)
            for (int bi = ai + 1; bi <= box.b.i; ++bi)
                for (int bj = aj + 1; bj <= box.b.j; ++bj) {
                    bool inner = true;
                    for (int r = ai; r < bi && inner; ++r)
                        for (int s = aj; s < bj && inner; ++s)
                            if (!c.contains(Cell{{r, s}})) inner = false;
                    if (inner) out.push_back(Interval{{ai, aj}, {bi, bj}});
                }
    return out;
}

// Rank of the coefficient matrix of the generators in the degree-2 monomial
// basis: +1 at the plus monomial, -1 at the minus monomial.
inline int mu_matrix_rank(const CellCollection& c) {
    const IdealPresentation pres = generators(c);
    std::map<Monomial, int> column;
    for (const Binomial& f : pres.generators) {
        column.emplace(f.plus, 0);
        column.emplace(f.minus, 0);
    }
    int next = 0;
    for (auto& [monomial, idx] : column) idx = next++;
    linalg::Matrix m;
    for (const Binomial& f : pres.generators) {
        linalg::Row row(column.size(), 0);
        row[column.at(f.plus)] += 1;
        row[column.at(f.minus)] -= 1;
        m.push_back(std::move(row));
    }
    return linalg::rank(std::move(m));
}

// Disconnected unions of two connected pieces of rank <= 2 with disjoint
// vertex sets, second piece offset within [-window, window]^2, deduplicated
// by canonical form.
inline std::vector<CellCollection> disconnected_pairs(int window = 4) {
    const std::vector<CellCollection> pieces = enumerate_connected(2);
    std::set<CellCollection> out;
    for (const CellCollection& p : pieces) {
        const std::vector<Point> pv = p.vertices();
        const std::set<Point> pset(pv.begin(), pv.end());
        for (const CellCollection& q : pieces)
            for (int dx = -window; dx <= window; ++dx)
                for (int dy = -window; dy <= window; ++dy) {
                    const CellCollection moved = q.translated({dx, dy});
                    bool disjoint = true;
                    for (const Point& v : moved.vertices())
                        if (pset.count(v)) {
                            disjoint = false;
                            break;
                        }
                    if (!disjoint) continue;
                    std::vector<Cell> cells = p.cells();
                    const auto& extra = moved.cells();
                    cells.insert(cells.end(), extra.begin(), extra.end());
                    out.insert(canonical_form(CellCollection(std::move(cells))));
                }
    }
    return {out.begin(), out.end()};
}

// The acceptance-criterion instance family: every canonical weakly connected
// collection of rank <= 4 plus the bounded disconnected pairs.
inline std::vector<CellCollection> theorem_family() {
    std::vector<CellCollection> family = enumerate_connected(4);
    const std::vector<CellCollection> pairs = disconnected_pairs();
    family.insert(family.end(), pairs.begin(), pairs.end());
    return family;
}

// Every chessboard of 1..max_rank cells with lower-left corners inside the
// box [0, box_cells)^2, with no translation reduction. Backtracking over
// conflict-free (no shared edge) subsets in index order.
inline std::vector<CellCollection> chessboards_in_box(int box_cells, int max_rank) {
    std::vector<Point> all;
    for (int i = 0; i < box_cells; ++i)
        for (int j = 0; j < box_cells; ++j) all.push_back({i, j});

    auto conflicts = [](const Point& a, const Point& b) {
        const int di = a.i - b.i, dj = a.j - b.j;
        return (di == 0 && (dj == 1 || dj == -1)) || (dj == 0 && (di == 1 || di == -1));
    };

    std::vector<CellCollection> out;
    std::vector<Point> chosen;
    auto rec = [&](auto&& self, size_t start) -> void {
        if (!chosen.empty()) out.push_back(CellCollection::from_corners(chosen));
        if (static_cast<int>(chosen.size()) == max_rank) return;
        for (size_t k = start; k < all.size(); ++k) {
            bool ok = true;
            for (const Point& p : chosen)
                if (conflicts(p, all[k])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(all[k]);
            self(self, k + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace cellci::testing
