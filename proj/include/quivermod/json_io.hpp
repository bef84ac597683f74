#ifndef QUIVERMOD_JSON_IO_HPP
#define QUIVERMOD_JSON_IO_HPP

#include <iosfwd>

#include "quivermod/core.hpp"
#include "quivermod/reductions.hpp"
#include "quivermod/search.hpp"
#include "quivermod/stability.hpp"

namespace quivermod {

struct ParsedInput {
  QuiverPair pair;
  std::optional<Weight> theta;
};

/// Quiver-pair file format:
///   { "vertices": [...], "arrows": [{"id","source","target"}, ...],
///     "alpha": {vertex: n, ...}, "theta": {vertex: z, ...} }
/// theta is optional; unknown fields are rejected.
ParsedInput parse_pair_json(const std::string& text);
ParsedInput load_pair_file(const std::string& path);

std::string render_pair_json(const QuiverPair& pair,
                             const std::optional<Weight>& theta = std::nullopt);

/// Reports emitted by the CLI; tests replay them byte-for-byte.
std::string classify_report_json(const QuiverPair& pair);
std::string stability_report_json(const QuiverPair& pair, const Weight& theta,
                                  const StabilityOptions& opts = {});
std::string reduction_result_json(const ReductionResult& result);
std::string search_report_json(const SearchReport& report);

std::string step_kind_label(ReductionStep::Kind kind);

/// Graphviz DOT; vertex label "name:alpha[/theta]", parallel arrows as
/// separate edges.
std::string emit_dot(const QuiverPair& pair, const std::optional<Weight>& theta = std::nullopt);

std::string base64_encode(const std::string& data);
std::string base64_decode(const std::string& text);

/// CSV table of enumeration rows (RFC 4180 quoting, canonical_key in base64):
/// canonical_key, vertices, arrows, alpha, d, minimal_verdict.
void write_rows_csv(std::ostream& out, const std::vector<ClassificationRow>& rows);
std::vector<ClassificationRow> read_rows_csv(std::istream& in);

}  // namespace quivermod

#endif
