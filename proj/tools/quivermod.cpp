// quivermod: exact-arithmetic toolkit for quiver-dimension vector pairs.
// Subcommands: classify, stable, reduce, minimal, enumerate, verify-bounds.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "quivermod/forms.hpp"
#include "quivermod/graph_ops.hpp"
#include "quivermod/json_io.hpp"

namespace qm = quivermod;

namespace {

// Flatten a JSON report into indented "key: value" lines.
void print_text(std::ostream& out, const nlohmann::ordered_json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (value.is_object()) {
    for (const auto& [key, item] : value.items()) {
      if (item.is_object() || item.is_array()) {
        out << pad << key << ":\n";
        print_text(out, item, indent + 1);
      } else {
        out << pad << key << ": " << item.dump() << "\n";
      }
    }
  } else if (value.is_array()) {
    for (const auto& item : value) {
      if (item.is_object() || item.is_array()) {
        out << pad << "-\n";
        print_text(out, item, indent + 1);
      } else {
        out << pad << "- " << item.dump() << "\n";
      }
    }
  } else {
    out << pad << value.dump() << "\n";
  }
}

void emit_report(const std::string& json_text, const std::string& format) {
  if (format == "text")
    print_text(std::cout, nlohmann::ordered_json::parse(json_text), 0);
  else
    std::cout << json_text;
}

bool force_from_env() {
  const char* value = std::getenv("QUIVERMOD_FORCE");
  return value != nullptr && std::string(value) == "1";
}

qm::Weight parse_theta_flag(const qm::Quiver& q, const std::string& text) {
  std::vector<qm::Int> values(static_cast<std::size_t>(q.vertex_count()), 0);
  std::vector<char> seen(static_cast<std::size_t>(q.vertex_count()), 0);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? text.size() : comma + 1;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw qm::DomainError("--theta expects name=value pairs separated by commas");
    int v = q.index_of(item.substr(0, eq));
    try {
      values[static_cast<std::size_t>(v)] = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw qm::DomainError("--theta: bad integer in \"" + item + "\"");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (int v = 0; v < q.vertex_count(); ++v)
    if (!seen[static_cast<std::size_t>(v)])
      throw qm::DomainError("--theta is missing vertex \"" + q.vertex_name(v) + "\"");
  return qm::Weight(std::move(values));
}

qm::ClassPredicate parse_class(const std::string& text) {
  if (text == "all") return qm::ClassPredicate::all_sincere();
  if (text == "fundamental") return qm::ClassPredicate::fundamental();
  if (text == "dim2") return qm::ClassPredicate::dim2();
  if (text == "affine") return qm::ClassPredicate::affine();
  if (text.rfind("constant:", 0) == 0) {
    try {
      return qm::ClassPredicate::constant(std::stoll(text.substr(9)));
    } catch (const std::exception&) {
      throw qm::DomainError("--class constant:<n> expects an integer");
    }
  }
  throw qm::DomainError("unknown class \"" + text + "\" (use fundamental|all|dim2|constant:<n>|affine)");
}

struct ReduceOp {
  bool tau = false;
  std::string vertex;
};

ReduceOp parse_op(const std::string& text) {
  if (text.rfind("tau:", 0) == 0) return {true, text.substr(4)};
  if (text.rfind("sigma:", 0) == 0) return {false, text.substr(6)};
  throw qm::DomainError("--op expects tau:<vertex> or sigma:<vertex>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact reduction calculus for quiver-dimension vector pairs"};
  app.require_subcommand(1);

  std::string input_path, theta_flag, op_flag, out_path, class_flag = "all", format = "json";
  qm::Int depth = 8, total_dim = 0, dims = 2, search_depth = 4, search_total_dim = 0;
  qm::EnumerateLimits limits;
  int jobs = 1;
  bool force = force_from_env(), emit_dot_flag = false, affine = false;

  const auto format_check = CLI::IsMember({"json", "text"});

  CLI::App* classify = app.add_subcommand("classify", "graph type, fundamental-set membership, structure");
  classify->add_option("file", input_path)->required();
  classify->add_option("--format", format)->check(format_check);

  CLI::App* stable = app.add_subcommand("stable", "theta-(semi)stability of the dimension vector");
  stable->add_option("file", input_path)->required();
  stable->add_option("--theta", theta_flag, "override: v1=-2,v2=1,...");
  stable->add_flag("--force", force, "bypass the candidate-count guard");
  stable->add_option("--format", format)->check(format_check);

  CLI::App* reduce = app.add_subcommand("reduce", "apply one tau/sigma move, transporting theta");
  reduce->add_option("file", input_path)->required();
  reduce->add_option("--op", op_flag, "tau:<vertex> or sigma:<vertex>")->required();
  std::string emit_value;
  reduce->add_option("--emit", emit_value, "also print the result quiver (dot)")
      ->check(CLI::IsMember({"dot"}));
  reduce->add_flag("--emit-dot", emit_dot_flag, "shorthand for --emit dot");
  reduce->add_option("--format", format)->check(format_check);

  CLI::App* minimal = app.add_subcommand("minimal", "bounded minimality search");
  minimal->add_option("file", input_path)->required();
  minimal->add_option("--class", class_flag, "fundamental|all|dim2|constant:<n>|affine");
  minimal->add_option("--max-depth", depth);
  minimal->add_option("--max-total-dim", total_dim);
  minimal->add_option("--format", format)->check(format_check);

  CLI::App* enumerate = app.add_subcommand("enumerate", "isomorphism classes at fixed moduli dimension");
  enumerate->add_option("--d", dims)->required();
  enumerate->add_option("--max-vertices", limits.max_vertices);
  enumerate->add_option("--max-arrows", limits.max_arrows);
  enumerate->add_option("--max-entry", limits.max_entry);
  enumerate->add_flag("--affine", affine, "enumerate the affine-quotient class instead");
  enumerate->add_option("--out", out_path, "write CSV here instead of stdout");
  enumerate->add_option("--jobs", jobs);
  enumerate->add_flag("--force", force, "bypass the window complexity guard");
  enumerate->add_option("--search-depth", search_depth, "minimality search depth per row");
  enumerate->add_option("--search-total-dim", search_total_dim,
                        "minimality search dimension cap per row");

  CLI::App* verify = app.add_subcommand("verify-bounds", "re-check the bound suite on a CSV table");
  verify->add_option("file", input_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) {
      auto [pair, theta] = qm::load_pair_file(input_path);
      emit_report(qm::classify_report_json(pair), format);
      return 0;
    }
    if (stable->parsed()) {
      auto [pair, theta] = qm::load_pair_file(input_path);
      if (!theta_flag.empty()) theta = parse_theta_flag(pair.quiver, theta_flag);
      if (!theta) throw qm::DomainError("stable: theta required (in the file or via --theta)");
      qm::StabilityOptions opts;
      opts.force = force;
      emit_report(qm::stability_report_json(pair, *theta, opts), format);
      return 0;
    }
    if (reduce->parsed()) {
      auto [pair, theta] = qm::load_pair_file(input_path);
      ReduceOp op = parse_op(op_flag);
      int u = pair.quiver.index_of(op.vertex);
      qm::ReductionResult result =
          op.tau ? qm::apply_tau(pair, u, theta) : qm::apply_sigma(pair, u, theta);
      emit_report(qm::reduction_result_json(result), format);
      if (emit_dot_flag || emit_value == "dot") std::cout << qm::emit_dot(result.pair, result.weight);
      return 0;
    }
    if (minimal->parsed()) {
      auto [pair, theta] = qm::load_pair_file(input_path);
      qm::SearchOptions opts;
      opts.max_depth = depth;
      opts.max_total_dim = total_dim;
      emit_report(qm::search_report_json(qm::is_tau_sigma_minimal(pair, parse_class(class_flag), opts)),
                  format);
      return 0;
    }
    if (enumerate->parsed()) {
      qm::EnumerateOptions opts;
      opts.jobs = jobs;
      opts.force = force;
      opts.search.max_depth = search_depth;
      opts.search.max_total_dim = search_total_dim;
      auto rows = affine ? qm::enumerate_affine(dims, limits, opts)
                         : qm::enumerate_fundamental(dims, limits, opts);
      if (out_path.empty()) {
        qm::write_rows_csv(std::cout, rows);
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw qm::DomainError("cannot open output file: " + out_path);
        qm::write_rows_csv(out, rows);
      }
      return 0;
    }
    if (verify->parsed()) {
      std::ifstream in(input_path);
      if (!in) throw qm::DomainError("cannot open file: " + input_path);
      auto rows = qm::read_rows_csv(in);
      qm::BoundsReport report = qm::verify_bounds(rows);
      std::cout << "rows: " << report.rows_seen << "  minimal: " << report.minimal_rows << "\n";
      for (const auto& violation : report.violations)
        std::cout << "VIOLATION " << violation.check << " (" << violation.detail
                  << ") on " << qm::base64_encode(violation.key.bytes) << "\n";
      std::cout << (report.pass() ? "PASS" : "FAIL") << "\n";
      return report.pass() ? 0 : 1;
    }
  } catch (const qm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
