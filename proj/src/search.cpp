#include "quivermod/search.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <thread>

#include "quivermod/forms.hpp"
#include "quivermod/graph_ops.hpp"

namespace quivermod {

namespace {

bool is_one_loop_quiver(const Quiver& q) {
  return q.vertex_count() == 1 && q.arrow_count() == 1 && q.loop_count(0) == 1;
}

}  // namespace

bool ClassPredicate::contains(const QuiverPair& pair) const {
  if (!pair.sincere()) return false;
  switch (tag) {
    case Tag::AllSincere:
      return true;
    case Tag::FundamentalWildSincere:
      return is_connected(pair.quiver) && classify_graph(pair.quiver).wild() &&
             in_fundamental_set(pair);
    case Tag::Dim2Bounded:
      for (int v = 0; v < pair.quiver.vertex_count(); ++v)
        if (pair.alpha[v] > 2) return false;
      return true;
    case Tag::ConstantN:
      for (int v = 0; v < pair.quiver.vertex_count(); ++v)
        if (pair.alpha[v] != n) return false;
      return true;
    case Tag::AffineIrreducible: {
      if (is_one_loop_quiver(pair.quiver)) return false;
      if (!is_strongly_connected(pair.quiver)) return false;
      for (int v = 0; v < pair.quiver.vertex_count(); ++v) {
        if (ringel_with_unit_right(pair.quiver, pair.alpha.values(), v) >= 0) return false;
        if (ringel_with_unit_left(pair.quiver, v, pair.alpha.values()) >= 0) return false;
      }
      return true;
    }
    case Tag::Custom:
      return custom && custom(pair);
  }
  return false;
}

std::string ClassPredicate::label() const {
  switch (tag) {
    case Tag::AllSincere: return "all";
    case Tag::FundamentalWildSincere: return "fundamental";
    case Tag::Dim2Bounded: return "dim2";
    case Tag::ConstantN: return "constant:" + std::to_string(n);
    case Tag::AffineIrreducible: return "affine";
    case Tag::Custom: return "custom";
  }
  return "custom";
}

SearchReport is_tau_sigma_minimal(const QuiverPair& start, const ClassPredicate& cls,
                                  const SearchOptions& opts) {
  if (!start.sincere()) throw DomainError("is_tau_sigma_minimal: pair is not sincere");
  if (opts.max_depth <= 0)
    throw PreconditionError("is_tau_sigma_minimal: max_depth must be positive");
  const Int cap = opts.max_total_dim > 0 ? opts.max_total_dim
                                         : checked_mul(8, start.alpha.total());
  if (cap <= 0) throw PreconditionError("is_tau_sigma_minimal: max_total_dim must be positive");

  struct Node {
    QuiverPair pair;
    Int depth;
    int parent;
    ReductionStep step;
  };
  std::vector<Node> nodes;
  nodes.push_back({start, 0, -1, {}});
  std::set<std::string> visited{canonical_key(start).bytes};
  if (opts.observer) opts.observer(start, 0);

  const int start_vertices = start.quiver.vertex_count();
  const Int start_total = start.alpha.total();

  auto make_report = [&](SearchReport::Verdict v, std::vector<ReductionStep> w) {
    SearchReport r;
    r.verdict = v;
    r.witness = std::move(w);
    r.explored = static_cast<Int>(visited.size());
    r.max_depth = opts.max_depth;
    r.max_total_dim = cap;
    return r;
  };

  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int idx = queue.front();
    queue.pop_front();
    const Int depth = nodes[static_cast<std::size_t>(idx)].depth;
    if (depth == opts.max_depth) continue;
    const int n = nodes[static_cast<std::size_t>(idx)].pair.quiver.vertex_count();

    for (int u = 0; u < n; ++u) {
      const QuiverPair& current = nodes[static_cast<std::size_t>(idx)].pair;
      std::optional<ReductionResult> child;
      if (is_large(current, u))
        child = apply_tau(current, u);
      else if (is_small_source(current, u) || is_small_sink(current, u))
        child = apply_sigma(current, u);
      if (!child) continue;
      if (child->pair.alpha.total() > cap) continue;
      if (!visited.insert(canonical_key(child->pair).bytes).second) continue;
      if (opts.observer) opts.observer(child->pair, depth + 1);

      const bool smaller =
          child->pair.quiver.vertex_count() < start_vertices ||
          (child->pair.quiver.vertex_count() == start_vertices &&
           child->pair.alpha.total() < start_total);
      if (smaller && cls.contains(child->pair)) {
        std::vector<ReductionStep> witness{child->step};
        for (int at = idx; at > 0; at = nodes[static_cast<std::size_t>(at)].parent)
          witness.push_back(nodes[static_cast<std::size_t>(at)].step);
        std::reverse(witness.begin(), witness.end());
        return make_report(SearchReport::Verdict::NotMinimal, std::move(witness));
      }
      nodes.push_back({std::move(child->pair), depth + 1, idx, std::move(child->step)});
      queue.push_back(static_cast<int>(nodes.size()) - 1);
    }
  }
  return make_report(SearchReport::Verdict::MinimalUpToBound, {});
}

QuiverPair replay(const QuiverPair& start, const std::vector<ReductionStep>& witness) {
  QuiverPair current = start;
  for (const ReductionStep& step : witness) {
    const int u = current.quiver.index_of(step.vertex);
    ReductionResult r = step.kind == ReductionStep::Kind::TauLarge ? apply_tau(current, u)
                                                                   : apply_sigma(current, u);
    current = std::move(r.pair);
  }
  return current;
}

namespace {

// Enumeration kernel: all n x n multiplicity matrices with a bounded arrow
// total, walked cell by cell; the visitor sees each completed matrix.
template <typename Visit>
void walk_matrices(Int max_arrows, std::vector<Int>& cells, std::size_t at, Int used,
                   Visit&& visit) {
  if (at == cells.size()) {
    visit(cells);
    return;
  }
  for (Int v = 0; used + v <= max_arrows; ++v) {
    cells[at] = v;
    walk_matrices(max_arrows, cells, at + 1, used + v, visit);
  }
  cells[at] = 0;
}

bool matrix_connected(int n, const std::vector<Int>& cells) {
  if (n == 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
  std::function<int(int)> find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cells[static_cast<std::size_t>(i * n + j)] > 0) {
        int a = find(i), b = find(j);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
  int root = find(0);
  for (int v = 1; v < n; ++v)
    if (find(v) != root) return false;
  return true;
}

QuiverPair pair_from_matrix(int n, const std::vector<Int>& cells, const std::vector<Int>& alpha) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Quiver::Arrow> arrows;
  int counter = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (Int k = 0; k < cells[static_cast<std::size_t>(i * n + j)]; ++k)
        arrows.push_back({"a" + std::to_string(++counter), i, j});
  return QuiverPair(Quiver(std::move(names), std::move(arrows)), DimVector(alpha));
}

// Cartan pairing with the unit vector at v, straight off the matrix.
Int matrix_cartan_unit(int n, const std::vector<Int>& cells, const std::vector<Int>& alpha, int v) {
  Int s = 2 * alpha[static_cast<std::size_t>(v)];
  for (int w = 0; w < n; ++w)
    s -= (cells[static_cast<std::size_t>(v * n + w)] + cells[static_cast<std::size_t>(w * n + v)]) *
         alpha[static_cast<std::size_t>(w)];
  return s;
}

Int matrix_tits(int n, const std::vector<Int>& cells, const std::vector<Int>& alpha) {
  Int s = 0;
  for (int v = 0; v < n; ++v)
    s += alpha[static_cast<std::size_t>(v)] * alpha[static_cast<std::size_t>(v)];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s -= cells[static_cast<std::size_t>(i * n + j)] * alpha[static_cast<std::size_t>(i)] *
           alpha[static_cast<std::size_t>(j)];
  return s;
}

double window_candidate_count(const EnumerateLimits& limits) {
  double total = 0;
  for (Int n = 1; n <= limits.max_vertices; ++n) {
    double matrices = 1;  // C(n^2 + A, A)
    for (Int i = 1; i <= limits.max_arrows; ++i)
      matrices = matrices * (static_cast<double>(n) * static_cast<double>(n) + static_cast<double>(i)) / static_cast<double>(i);
    double alphas = 1;
    for (Int i = 0; i < n; ++i) alphas *= static_cast<double>(limits.max_entry);
    total += matrices * alphas;
  }
  return total;
}

struct UniqueRows {
  // canonical key -> (generation index, pair); the smallest index wins so the
  // result does not depend on the worker layout
  std::map<std::string, std::pair<long long, QuiverPair>> rows;

  void add(const std::string& key, long long index, const QuiverPair& pair) {
    auto it = rows.find(key);
    if (it == rows.end())
      rows.emplace(key, std::make_pair(index, pair));
    else if (index < it->second.first)
      it->second = std::make_pair(index, pair);
  }
  void merge(UniqueRows&& other) {
    for (auto& [key, value] : other.rows) {
      auto it = rows.find(key);
      if (it == rows.end())
        rows.emplace(key, std::move(value));
      else if (value.first < it->second.first)
        it->second = std::move(value);
    }
  }
};

// Candidates are partitioned over the workers by matrix; each worker keeps a
// local dedup table and the merge prefers the smallest generation index, so
// the result does not depend on the job count. `admit` runs once per matrix,
// `filter` once per (matrix, alpha).
template <typename Admit, typename Filter>
UniqueRows enumerate_window(const EnumerateLimits& limits, const EnumerateOptions& opts,
                            Int entry_total_cap, Admit&& admit, Filter&& filter) {
  UniqueRows unique;
  for (int n = 1; n <= static_cast<int>(limits.max_vertices); ++n) {
    std::vector<std::vector<Int>> matrices;
    std::vector<Int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    walk_matrices(limits.max_arrows, cells, 0, 0, [&](const std::vector<Int>& m) {
      if (matrix_connected(n, m)) matrices.push_back(m);
    });

    const int jobs = std::max(1, opts.jobs);
    std::vector<UniqueRows> partial(static_cast<std::size_t>(jobs));
    auto run = [&](int worker) {
      for (std::size_t mi = static_cast<std::size_t>(worker); mi < matrices.size();
           mi += static_cast<std::size_t>(jobs)) {
        const std::vector<Int>& m = matrices[mi];
        if (!admit(n, m)) continue;
        std::vector<Int> alpha(static_cast<std::size_t>(n), 1);
        long long alpha_index = 0;
        for (;;) {
          ++alpha_index;
          Int total = 0;
          for (Int x : alpha) total += x;
          if ((entry_total_cap == 0 || total <= entry_total_cap) && filter(n, m, alpha)) {
            QuiverPair pair = pair_from_matrix(n, m, alpha);
            long long index = (static_cast<long long>(n) << 52) +
                              (static_cast<long long>(mi) << 24) + alpha_index;
            partial[static_cast<std::size_t>(worker)].add(canonical_key(pair).bytes, index, pair);
          }
          int at = 0;
          while (at < n && alpha[static_cast<std::size_t>(at)] == limits.max_entry) {
            alpha[static_cast<std::size_t>(at)] = 1;
            ++at;
          }
          if (at == n) break;
          ++alpha[static_cast<std::size_t>(at)];
        }
      }
    };
    if (jobs == 1) {
      run(0);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < jobs; ++w) threads.emplace_back(run, w);
      for (auto& t : threads) t.join();
    }
    for (auto& p : partial) unique.merge(std::move(p));
  }
  return unique;
}

}  // namespace

std::vector<ClassificationRow> enumerate_fundamental(Int d, const EnumerateLimits& limits,
                                                     const EnumerateOptions& opts) {
  if (d < 2) throw PreconditionError("enumerate_fundamental: d must be at least 2");
  if (limits.max_vertices <= 0 || limits.max_arrows < 0 || limits.max_entry <= 0)
    throw PreconditionError("enumerate_fundamental: limits must be positive");
  if (window_candidate_count(limits) > 2e8 && !opts.force)
    throw PreconditionError(
        "enumerate_fundamental: window exceeds the complexity guard (over 2e8 candidates); "
        "shrink the limits or pass force");

  // Wildness depends only on the matrix and gates it up front.
  auto admit = [](int n, const std::vector<Int>& m) {
    std::vector<Int> ones(static_cast<std::size_t>(n), 1);
    return classify_graph(pair_from_matrix(n, m, ones).quiver).wild();
  };
  auto filter = [&](int n, const std::vector<Int>& m, const std::vector<Int>& alpha) {
    for (int v = 0; v < n; ++v)
      if (matrix_cartan_unit(n, m, alpha, v) > 0) return false;
    return checked_sub(1, matrix_tits(n, m, alpha)) == d;
  };
  UniqueRows unique = enumerate_window(limits, opts, 0, admit, filter);

  std::vector<ClassificationRow> rows;
  for (auto& [key, value] : unique.rows) {
    ClassificationRow row{CanonicalKey{key}, value.second, d, std::nullopt, std::nullopt};
    row.minimal_verdict = is_tau_sigma_minimal(row.pair, ClassPredicate::fundamental(), opts.search);
    row.analysis = analyze_fundamental(row.pair);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ClassificationRow> enumerate_affine(Int d, const EnumerateLimits& limits,
                                                const EnumerateOptions& opts) {
  if (d < 1) throw PreconditionError("enumerate_affine: d must be at least 1");
  EnumerateLimits window{std::min(limits.max_vertices, d - 1),
                         std::min(limits.max_arrows, 2 * (d - 1)),
                         std::min(limits.max_entry, d - 1)};
  if (window.max_vertices <= 0 || window.max_entry <= 0) return {};

  auto admit = [](int n, const std::vector<Int>& m) {
    std::vector<Int> ones(static_cast<std::size_t>(n), 1);
    QuiverPair probe = pair_from_matrix(n, m, ones);
    if (is_one_loop_quiver(probe.quiver)) return false;
    return is_strongly_connected(probe.quiver);
  };
  auto filter = [&](int n, const std::vector<Int>& m, const std::vector<Int>& alpha) {
    if (checked_sub(1, matrix_tits(n, m, alpha)) != d) return false;
    for (int v = 0; v < n; ++v) {
      Int into = alpha[static_cast<std::size_t>(v)];
      Int from = alpha[static_cast<std::size_t>(v)];
      for (int w = 0; w < n; ++w) {
        into -= m[static_cast<std::size_t>(w * n + v)] * alpha[static_cast<std::size_t>(w)];
        from -= m[static_cast<std::size_t>(v * n + w)] * alpha[static_cast<std::size_t>(w)];
      }
      // <alpha, e_v> = into, <e_v, alpha> = from
      if (into >= 0 || from >= 0) return false;
    }
    return true;
  };
  UniqueRows unique = enumerate_window(window, opts, d - 1, admit, filter);

  std::vector<ClassificationRow> rows;
  for (auto& [key, value] : unique.rows)
    rows.push_back({CanonicalKey{key}, value.second, d, std::nullopt, std::nullopt});
  return rows;
}

DimensionBounds minimal_pair_bounds(Int d) {
  const Int vertices = checked_add(checked_mul(2, d - 1),
                                   checked_mul(checked_mul(36, checked_mul(d - 1, d - 1)),
                                               checked_sub(checked_mul(12, d), 11)));
  return {vertices, checked_add(vertices, checked_mul(12, checked_mul(d - 1, d - 1))),
          checked_mul(18, d - 1)};
}

BoundsReport verify_bounds(const std::vector<ClassificationRow>& rows) {
  BoundsReport report;
  for (const ClassificationRow& row : rows) {
    ++report.rows_seen;
    if (!row.minimal_verdict ||
        row.minimal_verdict->verdict != SearchReport::Verdict::MinimalUpToBound)
      continue;
    ++report.minimal_rows;

    auto violate = [&](const std::string& check, const std::string& detail) {
      report.violations.push_back({row.key, check, detail});
    };
    const Quiver& q = row.pair.quiver;
    const DimensionBounds bounds = minimal_pair_bounds(row.d);
    Int max_entry = 0;
    for (int v = 0; v < q.vertex_count(); ++v) max_entry = std::max(max_entry, row.pair.alpha[v]);
    if (q.vertex_count() > bounds.vertices)
      violate("vertex-bound", std::to_string(q.vertex_count()) + " > " + std::to_string(bounds.vertices));
    if (q.arrow_count() > bounds.arrows)
      violate("arrow-bound", std::to_string(q.arrow_count()) + " > " + std::to_string(bounds.arrows));
    if (max_entry > bounds.max_entry)
      violate("entry-bound", std::to_string(max_entry) + " > " + std::to_string(bounds.max_entry));

    FundamentalAnalysis analysis;
    try {
      analysis = row.analysis ? *row.analysis : analyze_fundamental(row.pair);
    } catch (const Error& e) {
      violate("analysis-precondition", e.what());
      continue;
    }
    const Int tq = tits_form(q, row.pair.alpha);  // negative on these rows
    const Int minus2q = -2 * tq, minus6q = -6 * tq, q2_12 = 12 * tq * tq;
    if (static_cast<Int>(analysis.q_minus.size()) > minus2q)
      violate("negative-part-size", std::to_string(analysis.q_minus.size()) + " > " + std::to_string(minus2q));
    for (int v : analysis.q_minus) {
      if (row.pair.alpha[v] > minus2q)
        violate("negative-part-entry", q.vertex_name(v) + ": " + std::to_string(row.pair.alpha[v]));
      if (degree(q, v) > minus6q)
        violate("negative-part-degree", q.vertex_name(v) + ": " + std::to_string(degree(q, v)));
    }
    if (static_cast<Int>(analysis.tied_vertices.size()) > q2_12)
      violate("tied-count", std::to_string(analysis.tied_vertices.size()) + " > " + std::to_string(q2_12));
    for (int w : analysis.tied_vertices)
      if (row.pair.alpha[w] > minus6q)
        violate("tied-entry", q.vertex_name(w) + ": " + std::to_string(row.pair.alpha[w]));

    std::vector<char> in_plus(static_cast<std::size_t>(q.vertex_count()), 0);
    for (const auto& comp : analysis.q_plus_components)
      for (int v : comp.vertices) in_plus[static_cast<std::size_t>(v)] = 1;
    Int plus_vertices = 0, plus_edges = 0;
    for (char c : in_plus) plus_vertices += c;
    for (const Quiver::Arrow& a : q.arrows()) {
      if (in_plus[static_cast<std::size_t>(a.source)] && in_plus[static_cast<std::size_t>(a.target)])
        ++plus_edges;
      for (int side = 0; side < 2; ++side) {
        const int v = side == 0 ? a.source : a.target;
        const int w = side == 0 ? a.target : a.source;
        if (in_plus[static_cast<std::size_t>(v)] && row.pair.alpha[w] > 2 * row.pair.alpha[v])
          violate("zero-part-neighbor", q.vertex_name(w) + " vs " + q.vertex_name(v));
      }
    }
    if (q.vertex_count() > plus_vertices + minus2q)
      violate("vertex-split-bound", std::to_string(q.vertex_count()));
    if (q.arrow_count() > plus_edges + minus6q * static_cast<Int>(analysis.q_minus.size()))
      violate("arrow-split-bound", std::to_string(q.arrow_count()));
    if (q.arrow_count() > plus_edges + q2_12) violate("arrow-split-bound-2", std::to_string(q.arrow_count()));
  }
  return report;
}

bool is_simple_dimvector(const QuiverPair& pair) {
  if (pair.alpha.is_zero()) return false;
  auto [supp, ignored] = support_restrict(pair);
  const Quiver& q = supp.quiver;
  if (!is_strongly_connected(q)) return false;
  if (q.vertex_count() == 1 && q.arrow_count() == 0) return supp.alpha[0] == 1;
  bool cycle = true;
  for (int v = 0; v < q.vertex_count(); ++v)
    if (q.in_arrow_count(v) != 1 || q.out_arrow_count(v) != 1) cycle = false;
  if (cycle) {
    for (int v = 0; v < q.vertex_count(); ++v)
      if (supp.alpha[v] != 1) return false;
    return true;
  }
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (ringel_with_unit_right(q, supp.alpha.values(), v) > 0) return false;
    if (ringel_with_unit_left(q, v, supp.alpha.values()) > 0) return false;
  }
  return true;
}

bool affine_reduction_applicable(const QuiverPair& pair, int v) {
  return ringel_with_unit_right(pair.quiver, pair.alpha.values(), v) >= 0 ||
         ringel_with_unit_left(pair.quiver, v, pair.alpha.values()) >= 0;
}

}  // namespace quivermod
