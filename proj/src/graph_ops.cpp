#include "quivermod/graph_ops.hpp"

#include <algorithm>
#include <map>

namespace quivermod {

namespace {

QuiverPair restrict_to(const QuiverPair& pair, const std::vector<int>& keep) {
  const Quiver& q = pair.quiver;
  std::vector<int> pos(static_cast<std::size_t>(q.vertex_count()), -1);
  std::vector<std::string> names;
  std::vector<Int> alpha;
  names.reserve(keep.size());
  for (int v : keep) {
    pos[static_cast<std::size_t>(v)] = static_cast<int>(names.size());
    names.push_back(q.vertex_name(v));
    alpha.push_back(pair.alpha[v]);
  }
  std::vector<Quiver::Arrow> arrows;
  for (const Quiver::Arrow& a : q.arrows()) {
    int s = pos[static_cast<std::size_t>(a.source)];
    int t = pos[static_cast<std::size_t>(a.target)];
    if (s >= 0 && t >= 0) arrows.push_back({a.id, s, t});
  }
  return QuiverPair(Quiver(std::move(names), std::move(arrows)), DimVector(std::move(alpha)));
}

std::optional<Weight> restrict_weight(const std::optional<Weight>& theta,
                                      const std::vector<int>& keep) {
  if (!theta) return std::nullopt;
  std::vector<Int> w;
  w.reserve(keep.size());
  for (int v : keep) w.push_back((*theta)[v]);
  return Weight(std::move(w));
}

}  // namespace

std::pair<QuiverPair, std::optional<Weight>> support_restrict(
    const QuiverPair& pair, const std::optional<Weight>& theta) {
  if (theta && theta->size() != pair.quiver.vertex_count())
    throw DomainError("support_restrict: weight is not defined on exactly the vertex set");
  std::vector<int> keep;
  for (int v = 0; v < pair.quiver.vertex_count(); ++v)
    if (pair.alpha[v] > 0) keep.push_back(v);
  if (keep.empty()) throw DomainError("support_restrict: dimension vector has empty support");
  return {restrict_to(pair, keep), restrict_weight(theta, keep)};
}

std::vector<int> undirected_component_labels(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const Quiver::Arrow& a : q.arrows()) {
    int rs = find(a.source), rt = find(a.target);
    if (rs != rt) parent[static_cast<std::size_t>(rs)] = rt;
  }
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (label[static_cast<std::size_t>(r)] < 0) label[static_cast<std::size_t>(r)] = next++;
    label[static_cast<std::size_t>(v)] = label[static_cast<std::size_t>(r)];
  }
  return label;
}

bool is_connected(const Quiver& q) {
  const auto labels = undirected_component_labels(q);
  return std::all_of(labels.begin(), labels.end(), [](int l) { return l == 0; });
}

bool is_strongly_connected(const Quiver& q) {
  const int n = q.vertex_count();
  auto reach = [&](bool forward) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Quiver::Arrow& a : q.arrows()) {
        int from = forward ? a.source : a.target;
        int to = forward ? a.target : a.source;
        if (from == v && !seen[static_cast<std::size_t>(to)]) {
          seen[static_cast<std::size_t>(to)] = 1;
          stack.push_back(to);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  };
  return reach(true) && reach(false);
}

std::vector<ComponentPair> connected_components(const QuiverPair& pair,
                                                const std::optional<Weight>& theta) {
  if (theta && theta->size() != pair.quiver.vertex_count())
    throw DomainError("connected_components: weight is not defined on exactly the vertex set");
  const auto labels = undirected_component_labels(pair.quiver);
  const int count = *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<int>> members(static_cast<std::size_t>(count));
  for (int v = 0; v < pair.quiver.vertex_count(); ++v)
    members[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)])].push_back(v);
  std::vector<ComponentPair> out;
  out.reserve(static_cast<std::size_t>(count));
  for (auto& keep : members)
    out.push_back({restrict_to(pair, keep), restrict_weight(theta, keep), keep});
  return out;
}

QuiverPair induced_subpair(const QuiverPair& pair, const std::vector<int>& vertices) {
  return restrict_to(pair, vertices);
}

}  // namespace quivermod
