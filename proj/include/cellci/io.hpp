#pragma once

#include <string>

#include "cellci/decide.hpp"

namespace cellci {

// Cells file format: one "i j" lower-left corner per line, '#' comment
// lines and blank lines ignored. Repeated cells are merged.
// Throws ParseError with the offending 1-based line number.
CellCollection parse_cells(const std::string& text);
CellCollection load_cells_file(const std::string& path);

// One cell per line, sorted; parse(serialize(C)) == C for canonical C.
std::string serialize_cells(const CellCollection& c);
// Single-line form "i j  i j  ...", used in diagnostics and enumeration output.
std::string serialize_cells_line(const CellCollection& c);

// Bounding-box character grid, rows printed top to bottom. Filled cells are
// drawn with a block glyph, or '#' in pure-ASCII mode.
std::string render_ascii(const CellCollection& c, bool pure_ascii = false);

// One binomial per line, in canonical generator order.
std::string generators_dump(const IdealPresentation& pres);

// Deterministic JSON serializations (byte-identical across runs).
std::string report_json(const AnalysisReport& report);
std::string theorem_summary_json(const TheoremCheckSummary& summary, int max_rank);

// CLI entry point; tools/main.cpp forwards here. Exit codes: 0 success,
// 1 theorem-check failure, 2 usage/parse error, 3 budget exhaustion.
int run_cli(int argc, const char* const* argv);

}  // namespace cellci
