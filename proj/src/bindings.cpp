#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cellci/enumerate.hpp"
#include "cellci/errors.hpp"
#include "cellci/io.hpp"

namespace py = pybind11;

namespace {

using CornerList = std::vector<std::pair<int, int>>;

cellci::CellCollection to_collection(const CornerList& corners) {
    std::vector<cellci::Point> pts;
    pts.reserve(corners.size());
    for (const auto& [i, j] : corners) pts.push_back({i, j});
    return cellci::CellCollection::from_corners(pts);
}

CornerList from_collection(const cellci::CellCollection& c) {
    CornerList out;
    out.reserve(c.cells().size());
    for (const cellci::Cell& cell : c.cells())
        out.emplace_back(cell.lower_left.i, cell.lower_left.j);
    return out;
}

cellci::OrderKind order_kind(const std::string& name) {
    if (name == "snake") return cellci::OrderKind::snake;
    if (name == "rowmajor") return cellci::OrderKind::rowmajor;
    throw std::invalid_argument("unknown order '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "complete-intersection decision for inner 2-minor ideals of collections of cells";

    py::register_exception<cellci::BudgetExhausted>(m, "BudgetExhausted");
    py::register_exception<cellci::TheoremViolation>(m, "TheoremViolation");

    m.def(
        "is_chessboard",
        [](const CornerList& cells) { return cellci::is_chessboard(to_collection(cells)); },
        py::arg("cells"), "True iff no two distinct cells share more than one vertex.");

    m.def(
        "decide",
        [](const CornerList& cells) {
            return cellci::is_complete_intersection(to_collection(cells)).verdict;
        },
        py::arg("cells"), "True iff the inner 2-minor ideal is a complete intersection.");

    m.def(
        "mu", [](const CornerList& cells) { return cellci::mu(to_collection(cells)); },
        py::arg("cells"), "Minimal number of generators: the number of inner intervals.");

    m.def(
        "height",
        [](const CornerList& cells, const std::string& order, long long budget) {
            return cellci::compute_height(to_collection(cells), order_kind(order), {budget})
                .height;
        },
        py::arg("cells"), py::arg("order") = "snake",
        py::arg("budget") = cellci::BuchbergerOptions{}.budget,
        "ht(I_C) via the initial ideal of the reduced Groebner basis.");

    m.def(
        "lattice_rank",
        [](const CornerList& cells) { return cellci::lattice_rank(to_collection(cells)); },
        py::arg("cells"), "Rank of the lattice spanned by the cell vectors.");

    m.def(
        "inner_intervals",
        [](const CornerList& cells) {
            std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
            for (const cellci::Interval& iv : cellci::inner_intervals(to_collection(cells)))
                out.push_back({{iv.a.i, iv.a.j}, {iv.b.i, iv.b.j}});
            return out;
        },
        py::arg("cells"), "Inner intervals as ((a_i, a_j), (b_i, b_j)) corner pairs.");

    m.def(
        "generators",
        [](const CornerList& cells) {
            std::vector<std::string> out;
            for (const cellci::Binomial& f : cellci::generators(to_collection(cells)).generators)
                out.push_back(f.str());
            return out;
        },
        py::arg("cells"), "Inner 2-minor generators in the translated frame, one string each.");

    m.def(
        "groebner",
        [](const CornerList& cells, const std::string& order, long long budget) {
            const cellci::CellCollection c = to_collection(cells);
            std::vector<std::string> out;
            if (c.empty()) return out;
            const cellci::GroebnerBasis gb = cellci::buchberger(
                cellci::generators(c), cellci::monomial_order_for(c, order_kind(order)),
                {budget});
            for (const cellci::Polynomial& g : gb.elements) out.push_back(g.str());
            return out;
        },
        py::arg("cells"), py::arg("order") = "snake",
        py::arg("budget") = cellci::BuchbergerOptions{}.budget,
        "Reduced Groebner basis, one polynomial string per element.");

    m.def(
        "analyze_json",
        [](const CornerList& cells, long long budget) {
            return cellci::report_json(cellci::verify_algebraically(to_collection(cells),
                                                                    {budget}));
        },
        py::arg("cells"), py::arg("budget") = cellci::BuchbergerOptions{}.budget,
        "Full analysis report as a JSON string.");

    m.def(
        "enumerate_connected",
        [](int max_rank) {
            std::vector<CornerList> out;
            for (const cellci::CellCollection& c : cellci::enumerate_connected(max_rank))
                out.push_back(from_collection(c));
            return out;
        },
        py::arg("max_rank"),
        "Canonical weakly connected collections of rank 1..max_rank.");

    m.def(
        "check_theorem_json",
        [](int max_rank) {
            return cellci::theorem_summary_json(cellci::check_theorem_exhaustive(max_rank),
                                                max_rank);
        },
        py::arg("max_rank"),
        "Exhaustive is_chessboard == (mu == height) check; JSON summary.");

    m.def(
        "render",
        [](const CornerList& cells, bool ascii) {
            return cellci::render_ascii(to_collection(cells), ascii);
        },
        py::arg("cells"), py::arg("ascii") = false, "Character-grid drawing.");

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
