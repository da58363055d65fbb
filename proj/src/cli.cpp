#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cellci/enumerate.hpp"
#include "cellci/errors.hpp"
#include "cellci/io.hpp"

namespace cellci {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

OrderKind parse_order(const std::string& name) {
    if (name == "snake") return OrderKind::snake;
    if (name == "rowmajor") return OrderKind::rowmajor;
    throw CLI::ValidationError("--order", "expected 'snake' or 'rowmajor'");
}

void print_human_report(const AnalysisReport& report, std::ostream& out) {
    out << "rank:         " << report.rank << "\n";
    out << "vertices:     " << report.vertices << "\n";
    out << "mu:           " << report.mu << "\n";
    if (report.height)
        out << "height:       " << *report.height << "\n";
    else
        out << "height:       unverified (budget exhausted)\n";
    out << "lattice rank: " << report.lattice_rank << "\n";
    out << "chessboard:   " << (report.is_chessboard ? "yes" : "no") << "\n";
    if (report.is_ci) {
        out << "verdict: complete intersection\n";
        if (!report.certificate.note.empty())
            out << "note: " << report.certificate.note << "\n";
        else
            out << "certificate: snake order yields pairwise coprime leading terms ("
                << report.certificate.leading_terms.size() << " generators)\n";
    } else {
        const auto& [first, second] = *report.certificate.witness;
        out << "verdict: NOT a complete intersection\n";
        out << "witness: cells " << to_string(first.lower_left) << " and "
            << to_string(second.lower_left) << " share an edge; mu = " << report.certificate.mu
            << " > " << report.certificate.rank << " = rank >= height\n";
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"complete-intersection decision for inner 2-minor ideals of collections of cells"};
    app.require_subcommand(1);

    std::string path;
    std::string order_name = "snake";
    long long budget = BuchbergerOptions{}.budget;
    bool as_json = false;
    bool ascii = false;
    bool initial = false;
    bool check_theorem = false;
    bool counts_only = false;
    bool d4 = false;
    int max_rank = 0;

    auto* decide_cmd = app.add_subcommand("decide", "decide the complete-intersection property");
    decide_cmd->add_option("file", path, "cells file")->required();
    decide_cmd->add_flag("--json", as_json, "emit the analysis report as JSON");
    decide_cmd->add_option("--budget", budget, "S-pair budget for the Groebner engine");

    auto* gens_cmd = app.add_subcommand("generators", "print the inner 2-minor generators");
    gens_cmd->add_option("file", path, "cells file")->required();

    auto* gb_cmd = app.add_subcommand("groebner", "print the reduced Groebner basis");
    gb_cmd->add_option("file", path, "cells file")->required();
    gb_cmd->add_option("--order", order_name, "vertex order: snake|rowmajor")
        ->default_str("snake");
    gb_cmd->add_flag("--initial", initial, "also print the initial ideal");
    gb_cmd->add_option("--budget", budget, "S-pair budget");

    auto* height_cmd = app.add_subcommand("height", "print ht(I_C)");
    height_cmd->add_option("file", path, "cells file")->required();
    height_cmd->add_option("--order", order_name, "vertex order: snake|rowmajor")
        ->default_str("snake");
    height_cmd->add_option("--budget", budget, "S-pair budget");
    height_cmd->add_flag("--json", as_json, "emit the full analysis report as JSON");

    auto* mu_cmd = app.add_subcommand("mu", "print mu(I_C), the number of inner intervals");
    mu_cmd->add_option("file", path, "cells file")->required();
    mu_cmd->add_flag("--json", as_json, "emit the full analysis report as JSON");

    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate connected collections");
    enum_cmd->add_option("--max-rank", max_rank, "largest rank to enumerate")->required();
    enum_cmd->add_flag("--check-theorem", check_theorem,
                       "verify is_chessboard == (mu == height) on every collection");
    enum_cmd->add_flag("--counts", counts_only, "print per-rank counts only");
    enum_cmd->add_flag("--d4", d4, "reduce counts by the symmetry group of the square");
    enum_cmd->add_flag("--json", as_json, "JSON summary (with --check-theorem)");

    auto* render_cmd = app.add_subcommand("render", "draw the collection as a character grid");
    render_cmd->add_option("file", path, "cells file")->required();
    render_cmd->add_flag("--ascii", ascii, "use '#' instead of a block glyph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const BuchbergerOptions options{budget};

        if (*decide_cmd) {
            const AnalysisReport report = verify_algebraically(load_cells_file(path), options);
            if (as_json)
                std::cout << report_json(report);
            else
                print_human_report(report, std::cout);
            return kExitOk;
        }
        if (*gens_cmd) {
            std::cout << generators_dump(generators(load_cells_file(path)));
            return kExitOk;
        }
        if (*gb_cmd) {
            const CellCollection c = load_cells_file(path);
            if (c.empty()) return kExitOk;
            const GroebnerBasis gb =
                buchberger(generators(c), monomial_order_for(c, parse_order(order_name)), options);
            std::cout << groebner_dump(gb);
            if (initial) std::cout << "# initial ideal\n" << monomial_ideal_dump(initial_ideal(gb));
            return kExitOk;
        }
        if (*height_cmd) {
            const CellCollection c = load_cells_file(path);
            if (as_json) {
                std::cout << report_json(verify_algebraically(c, options));
            } else {
                std::cout << compute_height(c, parse_order(order_name), options).height << "\n";
            }
            return kExitOk;
        }
        if (*mu_cmd) {
            const CellCollection c = load_cells_file(path);
            if (as_json)
                std::cout << report_json(verify_algebraically(c, options));
            else
                std::cout << mu(c) << "\n";
            return kExitOk;
        }
        if (*enum_cmd) {
            if (max_rank < 1) throw ParseError(0, "--max-rank must be at least 1");
            if (check_theorem) {
                const TheoremCheckSummary summary = check_theorem_exhaustive(max_rank);
                if (as_json) {
                    std::cout << theorem_summary_json(summary, max_rank);
                } else {
                    auto get = [](const std::map<int, long long>& m, int k) {
                        auto it = m.find(k);
                        return it == m.end() ? 0LL : it->second;
                    };
                    std::cout << "checked " << summary.instances
                              << " collections up to rank " << max_rank << ": "
                              << summary.violations << " violations\n";
                    for (const auto& [rank, count] : summary.collections_per_rank)
                        std::cout << "rank " << rank << ": " << count << " collections, "
                                  << get(summary.chessboards_per_rank, rank) << " chessboards, "
                                  << "height==rank on "
                                  << get(summary.height_equals_rank_per_rank, rank) << "\n";
                }
            } else if (counts_only) {
                for (const auto& [rank, count] : connected_counts(max_rank, d4))
                    std::cout << "rank " << rank << ": " << count << "\n";
            } else {
                for (const CellCollection& c : enumerate_connected(max_rank))
                    std::cout << serialize_cells_line(c) << "\n";
            }
            return kExitOk;
        }
        if (*render_cmd) {
            std::cout << render_ascii(load_cells_file(path), ascii);
            return kExitOk;
        }
        return kExitUsage;
    } catch (const TheoremViolation& e) {
        std::cerr << "theorem check failed: " << e.what() << "\n";
        return kExitViolation;
    } catch (const BudgetExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace cellci
