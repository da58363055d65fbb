#include "cellci/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cellci/errors.hpp"

namespace cellci {

using ordered_json = nlohmann::ordered_json;

CellCollection parse_cells(const std::string& text) {
    std::vector<Point> corners;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;       // blank line
        if (first[0] == '#') continue;      // comment line
        long long i = 0, j = 0;
        std::istringstream pair(line);
        std::string trailing;
        if (!(pair >> i >> j))
            throw ParseError(lineno, "expected two integer coordinates, got \"" + line + "\"");
        if (pair >> trailing) {
            if (trailing[0] != '#')
                throw ParseError(lineno, "unexpected trailing input \"" + trailing + "\"");
        }
        corners.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
    return CellCollection::from_corners(corners);
}

CellCollection load_cells_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cells(buf.str());
}

std::string serialize_cells(const CellCollection& c) {
    std::string out;
    for (const Cell& cell : c.cells())
        out += std::to_string(cell.lower_left.i) + " " + std::to_string(cell.lower_left.j) + "\n";
    return out;
}

std::string serialize_cells_line(const CellCollection& c) {
    std::string out;
    for (const Cell& cell : c.cells()) {
        if (!out.empty()) out += "  ";
        out += std::to_string(cell.lower_left.i) + " " + std::to_string(cell.lower_left.j);
    }
    return out;
}

std::string render_ascii(const CellCollection& c, bool pure_ascii) {
    if (c.empty()) return "";
    const Interval box = minimal_bounding_rectangle(c);
    const char* filled = pure_ascii ? "#" : "■";
    std::string out;
    for (int j = box.b.j - 1; j >= box.a.j; --j) {
        for (int i = box.a.i; i < box.b.i; ++i)
            out += c.contains(Cell{{i, j}}) ? filled : ".";
        out += "\n";
    }
    return out;
}

std::string generators_dump(const IdealPresentation& pres) {
    std::string out;
    for (const Binomial& f : pres.generators) out += f.str() + "\n";
    return out;
}

namespace {

ordered_json point_json(const Point& p) { return ordered_json::array({p.i, p.j}); }

ordered_json certificate_json(const CiCertificate& cert) {
    ordered_json j;
    j["verdict"] = cert.verdict;
    if (cert.branch == CiCertificate::Branch::chessboard_positive) {
        j["branch"] = "chessboard-positive";
        ordered_json order = ordered_json::array();
        for (const Point& p : cert.order.ascending())
            order.push_back(point_json(p + cert.order.offset()));
        j["vertex_order"] = std::move(order);
        ordered_json lts = ordered_json::array();
        for (const Monomial& m : cert.leading_terms) lts.push_back(m.str());
        j["leading_terms"] = std::move(lts);
        if (!cert.note.empty()) j["note"] = cert.note;
    } else {
        j["branch"] = "edge-negative";
        j["witness_cells"] = ordered_json::array(
            {point_json(cert.witness->first.lower_left),
             point_json(cert.witness->second.lower_left)});
        j["mu"] = cert.mu;
        j["height_upper_bound"] = cert.rank;
    }
    return j;
}

}  // namespace

std::string report_json(const AnalysisReport& report) {
    ordered_json j;
    j["rank"] = report.rank;
    j["vertices"] = report.vertices;
    j["mu"] = report.mu;
    if (report.height)
        j["height"] = *report.height;
    else
        j["height"] = nullptr;
    j["lattice_rank"] = report.lattice_rank;
    j["is_chessboard"] = report.is_chessboard;
    j["is_ci"] = report.is_ci;
    j["certificate"] = certificate_json(report.certificate);
    j["engine"] = {{"order", report.engine.order_name},
                   {"spairs_processed", report.engine.spairs_processed},
                   {"budget", report.engine.budget},
                   {"translation", point_json(report.engine.translation)},
                   {"verified", report.engine.verified}};
    return j.dump(2) + "\n";
}

std::string theorem_summary_json(const TheoremCheckSummary& summary, int max_rank) {
    ordered_json j;
    j["max_rank"] = max_rank;
    j["instances"] = summary.instances;
    j["violations"] = summary.violations;
    ordered_json per_rank = ordered_json::array();
    for (const auto& [rank, count] : summary.collections_per_rank) {
        ordered_json row;
        row["rank"] = rank;
        row["collections"] = count;
        auto chess = summary.chessboards_per_rank.find(rank);
        row["chessboards"] = chess == summary.chessboards_per_rank.end() ? 0 : chess->second;
        auto eq = summary.height_equals_rank_per_rank.find(rank);
        row["height_equals_rank"] =
            eq == summary.height_equals_rank_per_rank.end() ? 0 : eq->second;
        per_rank.push_back(std::move(row));
    }
    j["per_rank"] = std::move(per_rank);
    return j.dump(2) + "\n";
}

}  // namespace cellci
