#include "quivermod/classify.hpp"

#include <algorithm>
#include <array>

#include "quivermod/forms.hpp"
#include "quivermod/graph_ops.hpp"

namespace quivermod {

std::string GraphClass::label() const {
  switch (family) {
    case Family::DynkinA: return "A" + std::to_string(rank);
    case Family::DynkinD: return "D" + std::to_string(rank);
    case Family::DynkinE: return "E" + std::to_string(rank);
    case Family::AffineA: return "~A" + std::to_string(rank);
    case Family::AffineD: return "~D" + std::to_string(rank);
    case Family::AffineE: return "~E" + std::to_string(rank);
    case Family::Wild: return "Wild";
  }
  return "Wild";
}

namespace {

constexpr GraphClass wild{GraphClass::Family::Wild, 0};

// Undirected simple adjacency built from the multiplicity matrix; the caller
// has already ruled out loops and parallel edges.
struct SimpleGraph {
  int n;
  std::vector<std::vector<int>> adj;
};

// Walk from a degree<=2 vertex `from` into `next` until a leaf or a branch
// vertex; returns the number of edges traversed.
int branch_length(const SimpleGraph& g, int from, int next) {
  int len = 1;
  int prev = from, cur = next;
  while (g.adj[static_cast<std::size_t>(cur)].size() == 2) {
    int nxt = g.adj[static_cast<std::size_t>(cur)][0] == prev ? g.adj[static_cast<std::size_t>(cur)][1]
                                                              : g.adj[static_cast<std::size_t>(cur)][0];
    prev = cur;
    cur = nxt;
    ++len;
  }
  return len;
}

GraphClass classify_tree(const SimpleGraph& g) {
  const int n = g.n;
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = static_cast<int>(g.adj[static_cast<std::size_t>(v)].size());
  const int maxdeg = *std::max_element(deg.begin(), deg.end());

  if (maxdeg <= 2) return {GraphClass::Family::DynkinA, n};

  if (maxdeg == 4) {
    // Only the 4-leaf star qualifies.
    int hub = -1, count4 = 0;
    for (int v = 0; v < n; ++v)
      if (deg[static_cast<std::size_t>(v)] == 4) {
        hub = v;
        ++count4;
      }
    if (count4 == 1 && n == 5) {
      bool star = true;
      for (int w : g.adj[static_cast<std::size_t>(hub)])
        if (deg[static_cast<std::size_t>(w)] != 1) star = false;
      if (star) return {GraphClass::Family::AffineD, 4};
    }
    return wild;
  }
  if (maxdeg > 4) return wild;

  // maxdeg == 3
  std::vector<int> hubs;
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<std::size_t>(v)] == 3) hubs.push_back(v);

  if (hubs.size() == 1) {
    int hub = hubs[0];
    std::array<int, 3> len{};
    for (int i = 0; i < 3; ++i)
      len[static_cast<std::size_t>(i)] = branch_length(g, hub, g.adj[static_cast<std::size_t>(hub)][static_cast<std::size_t>(i)]);
    std::sort(len.begin(), len.end());
    const int a = len[0], b = len[1], c = len[2];
    if (a == 1 && b == 1) return {GraphClass::Family::DynkinD, c + 3};
    if (a == 1 && b == 2 && c == 2) return {GraphClass::Family::DynkinE, 6};
    if (a == 1 && b == 2 && c == 3) return {GraphClass::Family::DynkinE, 7};
    if (a == 1 && b == 2 && c == 4) return {GraphClass::Family::DynkinE, 8};
    if (a == 2 && b == 2 && c == 2) return {GraphClass::Family::AffineE, 6};
    if (a == 1 && b == 3 && c == 3) return {GraphClass::Family::AffineE, 7};
    if (a == 1 && b == 2 && c == 5) return {GraphClass::Family::AffineE, 8};
    return wild;
  }
  if (hubs.size() == 2) {
    // ~D_m: two branch vertices, each carrying two pendant leaves, joined by
    // a path of degree-2 vertices.
    for (int h : hubs) {
      int leaves = 0;
      for (int w : g.adj[static_cast<std::size_t>(h)])
        if (deg[static_cast<std::size_t>(w)] == 1) ++leaves;
      if (leaves != 2) return wild;
    }
    return {GraphClass::Family::AffineD, n - 1};
  }
  return wild;
}

}  // namespace

GraphClass classify_graph(const Quiver& q) {
  if (!is_connected(q)) throw DomainError("classify_graph: quiver is not connected");
  const int n = q.vertex_count();
  const auto m = q.multiplicity_matrix();

  Int loops = 0;
  for (int v = 0; v < n; ++v) loops += m[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)];
  if (n == 1) {
    if (loops == 0) return {GraphClass::Family::DynkinA, 1};
    if (loops == 1) return {GraphClass::Family::AffineA, 0};
    return wild;
  }
  if (loops > 0) return wild;

  bool multi = false;
  Int edges = 0;
  SimpleGraph g{n, std::vector<std::vector<int>>(static_cast<std::size_t>(n))};
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) {
      Int k = m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] + m[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)];
      if (k == 0) continue;
      if (k > 1) multi = true;
      edges += k;
      g.adj[static_cast<std::size_t>(v)].push_back(w);
      g.adj[static_cast<std::size_t>(w)].push_back(v);
    }
  if (multi) {
    if (n == 2 && edges == 2) return {GraphClass::Family::AffineA, 1};
    return wild;
  }
  if (edges == static_cast<Int>(n) - 1) return classify_tree(g);
  if (edges == static_cast<Int>(n)) {
    bool cycle = true;
    for (int v = 0; v < n; ++v)
      if (g.adj[static_cast<std::size_t>(v)].size() != 2) cycle = false;
    if (cycle) return {GraphClass::Family::AffineA, n - 1};
  }
  return wild;
}

bool in_fundamental_set(const QuiverPair& pair) {
  if (pair.alpha.is_zero()) return false;
  for (int v = 0; v < pair.quiver.vertex_count(); ++v)
    if (cartan_with_unit(pair.quiver, pair.alpha.values(), v) > 0) return false;
  auto [supp, ignored] = support_restrict(pair);
  return is_connected(supp.quiver);
}

FundamentalAnalysis analyze_fundamental(const QuiverPair& pair) {
  const Quiver& q = pair.quiver;
  if (!is_connected(q)) throw PreconditionError("analyze_fundamental: quiver is not connected");
  const GraphClass cls = classify_graph(q);
  if (!cls.wild())
    throw PreconditionError("analyze_fundamental: quiver is not wild (classified " + cls.label() + ")");
  if (!pair.sincere()) throw PreconditionError("analyze_fundamental: alpha is not sincere");
  if (!in_fundamental_set(pair))
    throw PreconditionError("analyze_fundamental: alpha is not in the fundamental set");

  const int n = q.vertex_count();
  FundamentalAnalysis out;
  std::vector<char> minus(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (cartan_with_unit(q, pair.alpha.values(), v) < 0) {
      minus[static_cast<std::size_t>(v)] = 1;
      out.q_minus.push_back(v);
    }
  }

  std::vector<int> plus;
  for (int v = 0; v < n; ++v)
    if (!minus[static_cast<std::size_t>(v)]) plus.push_back(v);

  // Tied: zero-part vertices with an edge into the negative part.
  std::vector<char> tied(static_cast<std::size_t>(n), 0);
  for (const Quiver::Arrow& a : q.arrows()) {
    if (minus[static_cast<std::size_t>(a.source)] != minus[static_cast<std::size_t>(a.target)]) {
      int plus_end = minus[static_cast<std::size_t>(a.source)] ? a.target : a.source;
      tied[static_cast<std::size_t>(plus_end)] = 1;
    }
  }
  for (int v : plus)
    (tied[static_cast<std::size_t>(v)] ? out.tied_vertices : out.free_vertices).push_back(v);

  std::optional<Int> mu;
  for (int v : out.tied_vertices) mu = std::max(mu.value_or(pair.alpha[v]), pair.alpha[v]);
  out.mu = mu;

  if (plus.empty()) return out;

  // Components of the full subgraph on the zero part.
  QuiverPair plus_pair = induced_subpair(pair, plus);
  const auto labels = undirected_component_labels(plus_pair.quiver);
  const int count = *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<int>> comp(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < plus.size(); ++i)
    comp[static_cast<std::size_t>(labels[i])].push_back(plus[static_cast<std::size_t>(i)]);

  for (const auto& members : comp) {
    QuiverPair sub = induced_subpair(pair, members);
    out.q_plus_components.push_back({members, classify_graph(sub.quiver)});

    // Split the component into pieces at its tied vertices: edges sharing a
    // free endpoint stay together; each piece keeps its bounding tied
    // vertices. A tied vertex of degree d inside the component lies in all d
    // incident pieces. An isolated vertex is a piece of its own.
    std::vector<std::pair<int, int>> edges;
    for (const Quiver::Arrow& a : plus_pair.quiver.arrows()) {
      int s = plus[static_cast<std::size_t>(a.source)], t = plus[static_cast<std::size_t>(a.target)];
      if (std::find(members.begin(), members.end(), s) == members.end()) continue;
      edges.push_back({s, t});
    }
    if (edges.empty()) {
      out.delta_subgraphs.push_back(members);
      continue;
    }
    std::vector<int> group(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) group[i] = static_cast<int>(i);
    auto find = [&](int e) {
      while (group[static_cast<std::size_t>(e)] != e) {
        group[static_cast<std::size_t>(e)] = group[static_cast<std::size_t>(group[static_cast<std::size_t>(e)])];
        e = group[static_cast<std::size_t>(e)];
      }
      return e;
    };
    auto join = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) group[static_cast<std::size_t>(a)] = b;
    };
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        auto shares_free = [&](int v) {
          return !tied[static_cast<std::size_t>(v)] &&
                 (edges[j].first == v || edges[j].second == v);
        };
        if (shares_free(edges[i].first) || shares_free(edges[i].second))
          join(static_cast<int>(i), static_cast<int>(j));
      }
    std::vector<std::vector<int>> piece_vertices(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto& pv = piece_vertices[static_cast<std::size_t>(find(static_cast<int>(i)))];
      pv.push_back(edges[i].first);
      pv.push_back(edges[i].second);
    }
    for (auto& pv : piece_vertices) {
      if (pv.empty()) continue;
      std::sort(pv.begin(), pv.end());
      pv.erase(std::unique(pv.begin(), pv.end()), pv.end());
      out.delta_subgraphs.push_back(pv);
    }
  }

  out.kappa = static_cast<Int>(out.delta_subgraphs.size());
  for (const auto& piece : out.delta_subgraphs) {
    std::optional<Int> local;
    for (int v : piece)
      if (tied[static_cast<std::size_t>(v)]) local = std::max(local.value_or(pair.alpha[v]), pair.alpha[v]);
    out.mu_per_subgraph.push_back(local);
  }
  return out;
}

std::optional<std::array<int, 4>> find_constant_a4(const QuiverPair& pair) {
  const Quiver& q = pair.quiver;
  const int n = q.vertex_count();
  const auto m = q.multiplicity_matrix();
  auto und = [&](int v, int w) {
    return m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] +
           m[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)];
  };
  auto loop = [&](int v) { return m[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)]; };

  for (int v2 = 0; v2 < n; ++v2) {
    if (degree(q, v2) != 2 || loop(v2) > 0) continue;
    for (int v3 = 0; v3 < n; ++v3) {
      if (v3 == v2 || degree(q, v3) != 2 || loop(v3) > 0) continue;
      if (und(v2, v3) != 1) continue;
      for (int v1 = 0; v1 < n; ++v1) {
        if (v1 == v2 || v1 == v3 || loop(v1) > 0) continue;
        if (und(v1, v2) != 1 || und(v1, v3) != 0) continue;
        for (int v4 = 0; v4 < n; ++v4) {
          if (v4 == v1 || v4 == v2 || v4 == v3 || loop(v4) > 0) continue;
          if (und(v3, v4) != 1 || und(v2, v4) != 0 || und(v1, v4) != 0) continue;
          if (pair.alpha[v1] == pair.alpha[v2] && pair.alpha[v2] == pair.alpha[v3] &&
              pair.alpha[v3] == pair.alpha[v4])
            return std::array<int, 4>{v1, v2, v3, v4};
        }
      }
    }
  }
  return std::nullopt;
}

RootType root_type(const QuiverPair& pair) {
  const Int t = tits_form(pair.quiver, pair.alpha);
  if (t == 1) return RootType::RealCandidate;
  if (t == 0) return RootType::Isotropic;
  if (t < 0) return RootType::Nonisotropic;
  return RootType::None;
}

std::string root_type_label(RootType t) {
  switch (t) {
    case RootType::RealCandidate: return "real-candidate";
    case RootType::Isotropic: return "isotropic";
    case RootType::Nonisotropic: return "nonisotropic";
    case RootType::None: return "none";
  }
  return "none";
}

}  // namespace quivermod
