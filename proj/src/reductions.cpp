#include "quivermod/reductions.hpp"

#include <algorithm>
#include <unordered_set>

namespace quivermod {

namespace {

void check_vertex(const QuiverPair& pair, int u, const char* what) {
  if (u < 0 || u >= pair.quiver.vertex_count())
    throw DomainError(std::string(what) + ": unknown vertex index");
}

bool is_source(const Quiver& q, int u) { return q.in_arrow_count(u) == 0 && q.out_arrow_count(u) > 0; }
bool is_sink(const Quiver& q, int u) { return q.out_arrow_count(u) == 0 && q.in_arrow_count(u) > 0; }

std::string fresh_arrow_id(std::string base, const std::unordered_set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (int k = 2;; ++k) {
    std::string candidate = base + "#" + std::to_string(k);
    if (!taken.count(candidate)) return candidate;
  }
}

}  // namespace

Int incoming_dimension_sum(const QuiverPair& pair, int u) {
  check_vertex(pair, u, "incoming_dimension_sum");
  Int s = 0;
  for (const Quiver::Arrow& a : pair.quiver.arrows())
    if (a.target == u) s = checked_add(s, pair.alpha[a.source]);
  return s;
}

Int outgoing_dimension_sum(const QuiverPair& pair, int u) {
  check_vertex(pair, u, "outgoing_dimension_sum");
  Int s = 0;
  for (const Quiver::Arrow& a : pair.quiver.arrows())
    if (a.source == u) s = checked_add(s, pair.alpha[a.target]);
  return s;
}

bool is_large(const QuiverPair& pair, int u) {
  check_vertex(pair, u, "is_large");
  const Quiver& q = pair.quiver;
  if (q.has_loop_at(u)) return false;
  if (q.in_arrow_count(u) + q.out_arrow_count(u) == 0) return false;
  return pair.alpha[u] >= std::max(incoming_dimension_sum(pair, u), outgoing_dimension_sum(pair, u));
}

bool is_small_source(const QuiverPair& pair, int u) {
  check_vertex(pair, u, "is_small_source");
  return is_source(pair.quiver, u) && outgoing_dimension_sum(pair, u) > pair.alpha[u];
}

bool is_small_sink(const QuiverPair& pair, int u) {
  check_vertex(pair, u, "is_small_sink");
  return is_sink(pair.quiver, u) && incoming_dimension_sum(pair, u) > pair.alpha[u];
}

ReductionResult apply_tau(const QuiverPair& pair, int u, const std::optional<Weight>& theta) {
  check_vertex(pair, u, "apply_tau");
  if (theta && theta->size() != pair.quiver.vertex_count())
    throw DomainError("apply_tau: weight is not defined on exactly the vertex set");
  if (!is_large(pair, u))
    throw PreconditionError("apply_tau: vertex " + pair.quiver.vertex_name(u) + " is not large");

  const Quiver& q = pair.quiver;
  const Int in_sum = incoming_dimension_sum(pair, u);
  const Int out_sum = outgoing_dimension_sum(pair, u);

  std::optional<char> tau_case;
  if (theta) {
    const Int tu = (*theta)[u];
    if (tu > 0) {
      if (pair.alpha[u] != in_sum)
        throw PreconditionError("apply_tau: weight incompatible with large vertex " +
                                q.vertex_name(u));
      tau_case = 'a';
    } else if (tu < 0) {
      if (pair.alpha[u] != out_sum)
        throw PreconditionError("apply_tau: weight incompatible with large vertex " +
                                q.vertex_name(u));
      tau_case = 'b';
    } else {
      tau_case = 'c';
    }
  }

  std::vector<const Quiver::Arrow*> incoming, outgoing;
  std::vector<Quiver::Arrow> kept;
  for (const Quiver::Arrow& a : q.arrows()) {
    if (a.target == u)
      incoming.push_back(&a);
    else if (a.source == u)
      outgoing.push_back(&a);
    else
      kept.push_back(a);
  }
  auto by_id = [](const Quiver::Arrow* x, const Quiver::Arrow* y) { return x->id < y->id; };
  std::sort(incoming.begin(), incoming.end(), by_id);
  std::sort(outgoing.begin(), outgoing.end(), by_id);

  // The reduced quiver drops u; remaining vertices keep their order.
  std::vector<int> pos(static_cast<std::size_t>(q.vertex_count()), -1);
  std::vector<std::string> names;
  std::vector<Int> alpha;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (v == u) continue;
    pos[static_cast<std::size_t>(v)] = static_cast<int>(names.size());
    names.push_back(q.vertex_name(v));
    alpha.push_back(pair.alpha[v]);
  }
  std::unordered_set<std::string> ids;
  std::vector<Quiver::Arrow> arrows;
  for (Quiver::Arrow& a : kept) {
    ids.insert(a.id);
    arrows.push_back({a.id, pos[static_cast<std::size_t>(a.source)], pos[static_cast<std::size_t>(a.target)]});
  }
  for (const Quiver::Arrow* b : incoming)
    for (const Quiver::Arrow* c : outgoing) {
      std::string id = fresh_arrow_id("d(" + b->id + "," + c->id + ")", ids);
      ids.insert(id);
      arrows.push_back({id, pos[static_cast<std::size_t>(b->source)], pos[static_cast<std::size_t>(c->target)]});
    }

  QuiverPair reduced(Quiver(std::move(names), std::move(arrows)), DimVector(std::move(alpha)));

  std::optional<Weight> transported;
  bool degenerate = false;
  if (theta) {
    const Int tu = (*theta)[u];
    std::vector<Int> w;
    w.reserve(static_cast<std::size_t>(q.vertex_count() - 1));
    for (int v = 0; v < q.vertex_count(); ++v) {
      if (v == u) continue;
      Int value = (*theta)[v];
      if (*tau_case == 'a') {
        Int mult = 0;
        for (const Quiver::Arrow* b : incoming)
          if (b->source == v) ++mult;
        value = checked_add(value, checked_mul(mult, tu));
      } else if (*tau_case == 'b') {
        Int mult = 0;
        for (const Quiver::Arrow* c : outgoing)
          if (c->target == v) ++mult;
        value = checked_add(value, checked_mul(mult, tu));
      }
      w.push_back(value);
    }
    transported = Weight(std::move(w));
    degenerate = transported->is_zero() && !theta->is_zero();
  }

  return {std::move(reduced), std::move(transported),
          ReductionStep{ReductionStep::Kind::TauLarge, q.vertex_name(u), tau_case}, degenerate};
}

ReductionResult apply_sigma(const QuiverPair& pair, int u, const std::optional<Weight>& theta) {
  check_vertex(pair, u, "apply_sigma");
  if (theta && theta->size() != pair.quiver.vertex_count())
    throw DomainError("apply_sigma: weight is not defined on exactly the vertex set");
  const bool source = is_small_source(pair, u);
  const bool sink = !source && is_small_sink(pair, u);
  if (!source && !sink)
    throw PreconditionError("apply_sigma: vertex " + pair.quiver.vertex_name(u) +
                            " is neither a small source nor a small sink");

  const Quiver& q = pair.quiver;
  const Int adjacent_sum =
      source ? outgoing_dimension_sum(pair, u) : incoming_dimension_sum(pair, u);

  std::vector<Quiver::Arrow> arrows;
  arrows.reserve(q.arrows().size());
  for (const Quiver::Arrow& a : q.arrows()) {
    if (a.source == u || a.target == u)
      arrows.push_back({a.id, a.target, a.source});
    else
      arrows.push_back(a);
  }
  std::vector<Int> alpha = pair.alpha.values();
  alpha[static_cast<std::size_t>(u)] = checked_sub(adjacent_sum, pair.alpha[u]);
  QuiverPair reduced(Quiver(q.vertex_names(), std::move(arrows)), DimVector(std::move(alpha)));

  std::optional<Weight> transported;
  bool degenerate = false;
  if (theta) {
    const Int tu = (*theta)[u];
    std::vector<Int> w(theta->values());
    w[static_cast<std::size_t>(u)] = checked_sub(0, tu);
    for (const Quiver::Arrow& a : q.arrows()) {
      // Arrows at a small source leave u, at a small sink they enter it; the
      // neighbor endpoint absorbs theta(u) once per arrow.
      if (source && a.source == u)
        w[static_cast<std::size_t>(a.target)] = checked_add(w[static_cast<std::size_t>(a.target)], tu);
      else if (sink && a.target == u)
        w[static_cast<std::size_t>(a.source)] = checked_add(w[static_cast<std::size_t>(a.source)], tu);
    }
    transported = Weight(std::move(w));
    degenerate = transported->is_zero() && !theta->is_zero();
  }

  return {std::move(reduced), std::move(transported),
          ReductionStep{source ? ReductionStep::Kind::SigmaSource : ReductionStep::Kind::SigmaSink,
                        q.vertex_name(u), std::nullopt},
          degenerate};
}

}  // namespace quivermod
