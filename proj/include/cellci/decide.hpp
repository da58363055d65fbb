#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cellci/groebner.hpp"
#include "cellci/lattice.hpp"

namespace cellci {

// Machine-checkable witness for the complete-intersection decision.
// Positive branch: the snake vertex order plus one leading term per
// generator, pairwise coprime. Negative branch: an edge-sharing pair of
// cells (user frame) together with mu > rank >= ht.
struct CiCertificate {
    enum class Branch { chessboard_positive, edge_negative };

    bool verdict = false;
    Branch branch = Branch::chessboard_positive;

    // positive payload
    VertexOrder order;
    std::vector<Monomial> leading_terms;
    std::string note;

    // negative payload
    std::optional<std::pair<Cell, Cell>> witness;
    int mu = 0;
    int rank = 0;
};

struct EngineInfo {
    std::string order_name = "snake";
    long long spairs_processed = 0;
    long long budget = 0;
    Point translation{0, 0};
    bool verified = true;
};

struct AnalysisReport {
    int rank = 0;
    int vertices = 0;
    int mu = 0;
    std::optional<int> height;  // empty when the Groebner budget ran out
    int lattice_rank = 0;
    bool is_chessboard = false;
    bool is_ci = false;
    CiCertificate certificate;
    EngineInfo engine;
    std::map<std::string, double> timings_ms;  // in-memory only, never serialized
};

// The combinatorial decision with certificate; the chessboard predicate is
// authoritative. Throws TheoremViolation if a certificate invariant fails.
CiCertificate is_complete_intersection(const CellCollection& c);

// Full pipeline: mu, height and lattice rank computed independently, then
// cross-checked against the combinatorial verdict. Budget exhaustion leaves
// the report unverified (height empty) rather than failing.
AnalysisReport verify_algebraically(const CellCollection& c,
                                    const BuchbergerOptions& options = {});

struct TheoremCheckSummary {
    std::map<int, long long> collections_per_rank;
    std::map<int, long long> chessboards_per_rank;
    std::map<int, long long> height_equals_rank_per_rank;  // conjecture tally
    long long instances = 0;
    long long violations = 0;  // always 0 on return; violations throw
};

// For every canonical weakly connected collection of rank <= max_rank
// (optionally restricted to a cell box), asserts
// is_chessboard(C) == (mu(C) == height(C)). A violation throws
// TheoremViolation with the offending collection serialized.
TheoremCheckSummary check_theorem_exhaustive(int max_rank,
                                             std::optional<Interval> box = std::nullopt,
                                             const BuchbergerOptions& options = {});

}  // namespace cellci
