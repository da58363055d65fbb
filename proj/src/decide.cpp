#include "cellci/decide.hpp"

#include <chrono>

#include "cellci/enumerate.hpp"
#include "cellci/errors.hpp"
#include "cellci/io.hpp"

namespace cellci {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Lexicographically first edge-sharing pair. Cells are scanned in canonical
// order; the top neighbor precedes the right neighbor in storage order.
std::pair<Cell, Cell> first_edge_pair(const CellCollection& c) {
    for (const Cell& cell : c.cells()) {
        const Cell top{cell.lower_left + Point{0, 1}};
        if (c.contains(top)) return {cell, top};
        const Cell right{cell.lower_left + Point{1, 0}};
        if (c.contains(right)) return {cell, right};
    }
    throw std::logic_error("no edge-sharing pair in a non-chessboard");
}

}  // namespace

CiCertificate is_complete_intersection(const CellCollection& c) {
    CiCertificate cert;
    cert.rank = c.rank();

    if (c.empty()) {
        cert.verdict = true;
        cert.branch = CiCertificate::Branch::chessboard_positive;
        cert.order = VertexOrder({}, {0, 0}, "snake");
        cert.note = "empty collection: mu = ht = 0";
        return cert;
    }

    if (is_chessboard(c)) {
        cert.verdict = true;
        cert.branch = CiCertificate::Branch::chessboard_positive;
        cert.order = snake_vertex_order(c);
        const MonomialOrder ord{cert.order};
        for (const Binomial& f : generators(c).generators)
            cert.leading_terms.push_back(leading_term(ord, f).monomial);
        for (size_t i = 0; i < cert.leading_terms.size(); ++i)
            for (size_t j = i + 1; j < cert.leading_terms.size(); ++j)
                if (!coprime(cert.leading_terms[i], cert.leading_terms[j]))
                    throw TheoremViolation(
                        "chessboard leading terms not coprime: " +
                        cert.leading_terms[i].str() + " vs " + cert.leading_terms[j].str());
        return cert;
    }

    cert.verdict = false;
    cert.branch = CiCertificate::Branch::edge_negative;
    cert.witness = first_edge_pair(c);
    cert.mu = mu(c);
    if (cert.mu <= cert.rank)
        throw TheoremViolation("edge-sharing pair found but mu <= rank");
    return cert;
}

AnalysisReport verify_algebraically(const CellCollection& c, const BuchbergerOptions& options) {
    AnalysisReport report;
    report.rank = c.rank();
    report.vertices = static_cast<int>(c.vertices().size());
    report.engine.budget = options.budget;
    report.engine.translation = canonical_offset(c);

    auto t0 = std::chrono::steady_clock::now();
    report.certificate = is_complete_intersection(c);
    report.is_chessboard = report.certificate.verdict;
    report.timings_ms["decide"] = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    report.mu = mu(c);
    report.timings_ms["mu"] = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    report.lattice_rank = lattice_rank(c);
    report.timings_ms["lattice"] = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    bool initial_ci = false;
    try {
        const HeightComputation hc = compute_height(c, OrderKind::snake, options);
        report.height = hc.height;
        report.engine.spairs_processed = hc.basis.spairs_processed;
        initial_ci = is_monomial_ci(hc.initial);
    } catch (const BudgetExhausted&) {
        report.engine.verified = false;
    }
    report.timings_ms["groebner"] = ms_since(t0);

    report.is_ci = report.certificate.verdict;
    if (report.engine.verified) {
        const bool numeric_ci = report.mu == *report.height;
        if (numeric_ci != report.is_chessboard || initial_ci != report.is_chessboard)
            throw TheoremViolation(
                "pipeline disagreement on " + serialize_cells_line(c) + ": chessboard=" +
                (report.is_chessboard ? "true" : "false") + ", mu=" + std::to_string(report.mu) +
                ", ht=" + std::to_string(*report.height) +
                ", initial_ci=" + (initial_ci ? "true" : "false"));
    }
    return report;
}

TheoremCheckSummary check_theorem_exhaustive(int max_rank, std::optional<Interval> box,
                                             const BuchbergerOptions& options) {
    TheoremCheckSummary summary;
    for (const CellCollection& c : enumerate_connected(max_rank)) {
        if (box) {
            bool inside = true;
            for (const Cell& cell : c.cells())
                if (!componentwise_leq(box->a, cell.lower_left) ||
                    !componentwise_leq(cell.lower_left + Point{1, 1}, box->b)) {
                    inside = false;
                    break;
                }
            if (!inside) continue;
        }
        const bool chess = is_chessboard(c);
        const int generators = mu(c);
        const int ht = compute_height(c, OrderKind::snake, options).height;
        if (chess != (generators == ht))
            throw TheoremViolation("theorem violated by " + serialize_cells_line(c) +
                                   ": chessboard=" + (chess ? "true" : "false") +
                                   ", mu=" + std::to_string(generators) +
                                   ", ht=" + std::to_string(ht));
        ++summary.instances;
        ++summary.collections_per_rank[c.rank()];
        if (chess) ++summary.chessboards_per_rank[c.rank()];
        if (ht == c.rank()) ++summary.height_equals_rank_per_rank[c.rank()];
    }
    return summary;
}

}  // namespace cellci
