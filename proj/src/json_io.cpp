#include "quivermod/json_io.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "quivermod/classify.hpp"
#include "quivermod/forms.hpp"

namespace quivermod {

using json = nlohmann::ordered_json;

namespace {

Int require_integer(const json& value, const std::string& where) {
  if (!value.is_number_integer())
    throw DomainError("parse error: " + where + " must be an integer");
  return value.get<Int>();
}

json weight_object(const Quiver& q, const Weight& w) {
  json out = json::object();
  for (int v = 0; v < q.vertex_count(); ++v) out[q.vertex_name(v)] = w[v];
  return out;
}

json dimvector_object(const Quiver& q, const DimVector& a) {
  json out = json::object();
  for (int v = 0; v < q.vertex_count(); ++v) out[q.vertex_name(v)] = a[v];
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

ParsedInput parse_pair_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) throw DomainError("parse error: top level must be an object");
  for (const auto& [key, value] : doc.items())
    if (key != "vertices" && key != "arrows" && key != "alpha" && key != "theta")
      throw DomainError("parse error: unknown field \"" + key + "\"");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw DomainError("parse error: \"vertices\" must be an array of names");
  if (!doc.contains("arrows") || !doc["arrows"].is_array())
    throw DomainError("parse error: \"arrows\" must be an array");
  if (!doc.contains("alpha") || !doc["alpha"].is_object())
    throw DomainError("parse error: \"alpha\" must be an object keyed by vertex");

  std::vector<std::string> vertices;
  for (const json& v : doc["vertices"]) {
    if (!v.is_string()) throw DomainError("parse error: vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Quiver::ArrowSpec> arrows;
  for (const json& a : doc["arrows"]) {
    if (!a.is_object()) throw DomainError("parse error: each arrow must be an object");
    for (const auto& [key, value] : a.items())
      if (key != "id" && key != "source" && key != "target")
        throw DomainError("parse error: unknown arrow field \"" + key + "\"");
    for (const char* field : {"id", "source", "target"})
      if (!a.contains(field) || !a[field].is_string())
        throw DomainError(std::string("parse error: arrow field \"") + field +
                          "\" must be a string");
    arrows.push_back({a["id"].get<std::string>(), a["source"].get<std::string>(),
                      a["target"].get<std::string>()});
  }
  Quiver quiver(std::move(vertices), arrows);

  auto read_vector = [&](const json& obj, const std::string& name) {
    std::vector<Int> values(static_cast<std::size_t>(quiver.vertex_count()), 0);
    std::vector<char> seen(static_cast<std::size_t>(quiver.vertex_count()), 0);
    for (const auto& [key, value] : obj.items()) {
      auto v = quiver.find_vertex(key);
      if (!v) throw DomainError("parse error: \"" + name + "\" names unknown vertex \"" + key + "\"");
      values[static_cast<std::size_t>(*v)] = require_integer(value, name + "[" + key + "]");
      seen[static_cast<std::size_t>(*v)] = 1;
    }
    for (int v = 0; v < quiver.vertex_count(); ++v)
      if (!seen[static_cast<std::size_t>(v)])
        throw DomainError("parse error: \"" + name + "\" is missing vertex \"" +
                          quiver.vertex_name(v) + "\"");
    return values;
  };

  auto alpha_values = read_vector(doc["alpha"], "alpha");
  for (std::size_t i = 0; i < alpha_values.size(); ++i)
    if (alpha_values[i] < 0)
      throw DomainError("parse error: alpha[" + quiver.vertex_name(static_cast<int>(i)) +
                        "] must be nonnegative");
  std::optional<Weight> theta;
  if (doc.contains("theta")) {
    if (!doc["theta"].is_object())
      throw DomainError("parse error: \"theta\" must be an object keyed by vertex");
    theta = Weight(read_vector(doc["theta"], "theta"));
  }
  return {QuiverPair(std::move(quiver), DimVector(std::move(alpha_values))), std::move(theta)};
}

ParsedInput load_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_pair_json(buffer.str());
}

std::string render_pair_json(const QuiverPair& pair, const std::optional<Weight>& theta) {
  const Quiver& q = pair.quiver;
  json out;
  out["vertices"] = json::array();
  for (int v = 0; v < q.vertex_count(); ++v) out["vertices"].push_back(q.vertex_name(v));
  out["arrows"] = json::array();
  for (const Quiver::Arrow& a : q.arrows())
    out["arrows"].push_back({{"id", a.id},
                             {"source", q.vertex_name(a.source)},
                             {"target", q.vertex_name(a.target)}});
  out["alpha"] = dimvector_object(q, pair.alpha);
  if (theta) out["theta"] = weight_object(q, *theta);
  return dump(out);
}

std::string classify_report_json(const QuiverPair& pair) {
  json out;
  out["graph_class"] = classify_graph(pair.quiver).label();
  out["in_fundamental_set"] = in_fundamental_set(pair);
  try {
    const FundamentalAnalysis a = analyze_fundamental(pair);
    const Quiver& q = pair.quiver;
    auto names = [&](const std::vector<int>& vs) {
      json arr = json::array();
      for (int v : vs) arr.push_back(q.vertex_name(v));
      return arr;
    };
    json analysis;
    analysis["q_minus"] = names(a.q_minus);
    analysis["q_plus_components"] = json::array();
    for (const auto& comp : a.q_plus_components)
      analysis["q_plus_components"].push_back(
          {{"vertices", names(comp.vertices)}, {"class", comp.cls.label()}});
    analysis["tied"] = names(a.tied_vertices);
    analysis["free"] = names(a.free_vertices);
    analysis["delta_subgraphs"] = json::array();
    for (const auto& piece : a.delta_subgraphs) analysis["delta_subgraphs"].push_back(names(piece));
    analysis["kappa"] = a.kappa;
    analysis["mu"] = a.mu ? json(*a.mu) : json(nullptr);
    analysis["mu_per_subgraph"] = json::array();
    for (const auto& mu : a.mu_per_subgraph)
      analysis["mu_per_subgraph"].push_back(mu ? json(*mu) : json(nullptr));
    out["analysis"] = std::move(analysis);
  } catch (const PreconditionError& e) {
    out["analysis"] = nullptr;
    out["analysis_skipped"] = e.what();
  }
  return dump(out);
}

std::string stability_report_json(const QuiverPair& pair, const Weight& theta,
                                  const StabilityOptions& opts) {
  const StabilityVerdict verdict = stability_verdict(pair, theta, opts);
  json out;
  out["verdict"] = verdict_label(verdict.tag);
  if (verdict.witness) out["witness"] = dimvector_object(pair.quiver, *verdict.witness);
  if (verdict.tag == StabilityVerdict::Tag::Stable)
    out["moduli_dimension"] = checked_sub(1, tits_form(pair.quiver, pair.alpha));
  return dump(out);
}

std::string step_kind_label(ReductionStep::Kind kind) {
  switch (kind) {
    case ReductionStep::Kind::TauLarge: return "tau";
    case ReductionStep::Kind::SigmaSource: return "sigma_source";
    case ReductionStep::Kind::SigmaSink: return "sigma_sink";
  }
  return "tau";
}

std::string reduction_result_json(const ReductionResult& result) {
  json out;
  out["pair"] = json::parse(render_pair_json(result.pair, result.weight));
  json step;
  step["kind"] = step_kind_label(result.step.kind);
  step["vertex"] = result.step.vertex;
  if (result.step.tau_case) step["tau_case"] = std::string(1, *result.step.tau_case);
  out["step"] = std::move(step);
  out["degenerate_weight"] = result.degenerate_weight;
  return dump(out);
}

std::string search_report_json(const SearchReport& report) {
  json out;
  out["verdict"] =
      report.verdict == SearchReport::Verdict::NotMinimal ? "NotMinimal" : "MinimalUpToBound";
  if (report.verdict == SearchReport::Verdict::NotMinimal) {
    out["witness"] = json::array();
    for (const ReductionStep& step : report.witness)
      out["witness"].push_back({{"kind", step_kind_label(step.kind)}, {"vertex", step.vertex}});
  }
  out["explored"] = report.explored;
  out["max_depth"] = report.max_depth;
  out["max_total_dim"] = report.max_total_dim;
  return dump(out);
}

namespace {

bool plain_dot_id(const std::string& s) {
  if (s.empty() || (std::isdigit(static_cast<unsigned char>(s[0])) != 0)) return false;
  for (char c : s)
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_') return false;
  return true;
}

std::string dot_id(const std::string& s) {
  if (plain_dot_id(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string emit_dot(const QuiverPair& pair, const std::optional<Weight>& theta) {
  const Quiver& q = pair.quiver;
  std::ostringstream out;
  out << "digraph {\n";
  for (int v = 0; v < q.vertex_count(); ++v) {
    out << "  " << dot_id(q.vertex_name(v)) << " [label=\"" << q.vertex_name(v) << ':'
        << pair.alpha[v];
    if (theta) out << '/' << (*theta)[v];
    out << "\"];\n";
  }
  for (const Quiver::Arrow& a : q.arrows())
    out << "  " << dot_id(q.vertex_name(a.source)) << " -> " << dot_id(q.vertex_name(a.target))
        << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

constexpr char kBase64Alphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

}  // namespace

std::string base64_encode(const std::string& data) {
  std::string out;
  out.reserve((data.size() + 2) / 3 * 4);
  unsigned int buffer = 0;
  int bits = 0;
  for (unsigned char c : data) {
    buffer = (buffer << 8) | c;
    bits += 8;
    while (bits >= 6) {
      bits -= 6;
      out.push_back(kBase64Alphabet[(buffer >> bits) & 0x3f]);
    }
  }
  if (bits > 0) out.push_back(kBase64Alphabet[(buffer << (6 - bits)) & 0x3f]);
  while (out.size() % 4 != 0) out.push_back('=');
  return out;
}

std::string base64_decode(const std::string& text) {
  std::array<int, 256> table;
  table.fill(-1);
  for (int i = 0; i < 64; ++i) table[static_cast<unsigned char>(kBase64Alphabet[i])] = i;
  std::string out;
  unsigned int buffer = 0;
  int bits = 0;
  for (char c : text) {
    if (c == '=') break;
    int value = table[static_cast<unsigned char>(c)];
    if (value < 0) throw DomainError("base64: invalid character");
    buffer = (buffer << 6) | static_cast<unsigned int>(value);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<char>((buffer >> bits) & 0xff));
    }
  }
  return out;
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string verdict_field(const std::optional<SearchReport>& report) {
  if (!report) return "";
  if (report->verdict == SearchReport::Verdict::MinimalUpToBound) return "MinimalUpToBound";
  std::string out = "NotMinimal[";
  for (std::size_t i = 0; i < report->witness.size(); ++i) {
    if (i) out.push_back(' ');
    const ReductionStep& step = report->witness[i];
    out += (step.kind == ReductionStep::Kind::TauLarge ? "tau:" : "sigma:") + step.vertex;
  }
  out.push_back(']');
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

}  // namespace

void write_rows_csv(std::ostream& out, const std::vector<ClassificationRow>& rows) {
  out << "canonical_key,vertices,arrows,alpha,d,minimal_verdict\r\n";
  for (const ClassificationRow& row : rows) {
    std::string alpha;
    for (int v = 0; v < row.pair.quiver.vertex_count(); ++v) {
      if (v) alpha.push_back(' ');
      alpha += std::to_string(row.pair.alpha[v]);
    }
    out << csv_quote(base64_encode(row.key.bytes)) << ',' << row.pair.quiver.vertex_count() << ','
        << row.pair.quiver.arrow_count() << ',' << csv_quote(alpha) << ',' << row.d << ','
        << csv_quote(verdict_field(row.minimal_verdict)) << "\r\n";
  }
}

std::vector<ClassificationRow> read_rows_csv(std::istream& in) {
  std::vector<ClassificationRow> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto fields = split_csv_line(line);
    if (fields.size() != 6) throw DomainError("csv: expected 6 fields per row");
    CanonicalKey key{base64_decode(fields[0])};
    QuiverPair pair = pair_from_key(key);
    Int vertices = 0, arrows = 0, d = 0;
    try {
      vertices = std::stoll(fields[1]);
      arrows = std::stoll(fields[2]);
      d = std::stoll(fields[4]);
    } catch (const std::exception&) {
      throw DomainError("csv: bad numeric field");
    }
    if (vertices != pair.quiver.vertex_count() || arrows != pair.quiver.arrow_count())
      throw DomainError("csv: vertex/arrow counts disagree with the canonical key");
    std::optional<SearchReport> verdict;
    if (!fields[5].empty()) {
      SearchReport report;
      report.verdict = fields[5].rfind("MinimalUpToBound", 0) == 0
                           ? SearchReport::Verdict::MinimalUpToBound
                           : SearchReport::Verdict::NotMinimal;
      verdict = std::move(report);
    }
    rows.push_back({std::move(key), std::move(pair), d, std::move(verdict), std::nullopt});
  }
  return rows;
}

}  // namespace quivermod
