#include "quivermod/stability.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

#include "quivermod/canonical.hpp"
#include "quivermod/forms.hpp"

namespace quivermod {

std::optional<bool> EmbedCache::lookup(const std::string& qkey, const std::vector<Int>& beta,
                                       const std::vector<Int>& gamma) const {
  std::shared_lock lock(mutex_);
  auto it = memo_.find(std::tie(qkey, beta, gamma));
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void EmbedCache::store(const std::string& qkey, const std::vector<Int>& beta,
                       const std::vector<Int>& gamma, bool value) {
  std::unique_lock lock(mutex_);
  memo_.emplace(std::make_tuple(qkey, beta, gamma), value);
}

std::size_t EmbedCache::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

namespace {

struct EmbedContext {
  std::vector<std::vector<Int>> mult;  // canonical coordinates
  std::string qkey;
  EmbedCache* cache = nullptr;
  std::map<std::pair<std::vector<Int>, std::vector<Int>>, bool> local;

  Int ringel(const std::vector<Int>& x, const std::vector<Int>& y) const {
    const int n = static_cast<int>(x.size());
    Int s = 0;
    for (int v = 0; v < n; ++v)
      s = checked_add(s, checked_mul(x[static_cast<std::size_t>(v)], y[static_cast<std::size_t>(v)]));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int k = mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (k != 0)
          s = checked_sub(s, checked_mul(k, checked_mul(x[static_cast<std::size_t>(i)],
                                                        y[static_cast<std::size_t>(j)])));
      }
    return s;
  }

  static bool all_zero(const std::vector<Int>& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
  }

  bool embeds(const std::vector<Int>& beta, const std::vector<Int>& gamma) {
    if (all_zero(beta) || all_zero(gamma)) return true;
    if (cache) {
      if (auto hit = cache->lookup(qkey, beta, gamma)) return *hit;
    } else {
      auto it = local.find(std::make_pair(beta, gamma));
      if (it != local.end()) return it->second;
    }

    // Well-founded: for beta' == beta the recursion bottoms out (zero
    // complement), otherwise |beta'| strictly drops.
    bool result = true;
    const int n = static_cast<int>(beta.size());
    std::vector<Int> sub(static_cast<std::size_t>(n), 0);
    for (;;) {
      int i = 0;
      while (i < n && sub[static_cast<std::size_t>(i)] == beta[static_cast<std::size_t>(i)]) {
        sub[static_cast<std::size_t>(i)] = 0;
        ++i;
      }
      if (i == n) break;
      ++sub[static_cast<std::size_t>(i)];

      if (ringel(sub, gamma) < 0) {
        std::vector<Int> rest(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
          rest[static_cast<std::size_t>(v)] = beta[static_cast<std::size_t>(v)] - sub[static_cast<std::size_t>(v)];
        if (embeds(sub, rest)) {
          result = false;
          break;
        }
      }
    }

    if (cache)
      cache->store(qkey, beta, gamma, result);
    else
      local.emplace(std::make_pair(beta, gamma), result);
    return result;
  }
};

EmbedContext make_context(const Quiver& q, EmbedCache* cache,
                          std::vector<int>* order_out = nullptr) {
  EmbedContext ctx;
  ctx.cache = cache;
  const auto order = canonical_vertex_order(q);
  const auto m = q.multiplicity_matrix();
  const int n = q.vertex_count();
  ctx.mult.assign(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      ctx.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          m[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]
           [static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
  std::ostringstream key;
  key << n << ':';
  for (const auto& row : ctx.mult)
    for (Int x : row) key << x << ',';
  ctx.qkey = key.str();
  if (order_out) *order_out = order;
  return ctx;
}

std::vector<Int> permuted(const std::vector<Int>& values, const std::vector<int>& order) {
  std::vector<Int> out(values.size());
  for (std::size_t p = 0; p < order.size(); ++p)
    out[p] = values[static_cast<std::size_t>(order[p])];
  return out;
}

}  // namespace

bool generically_embeds(const Quiver& q, const DimVector& beta, const DimVector& alpha,
                        EmbedCache* cache) {
  if (beta.size() != q.vertex_count() || alpha.size() != q.vertex_count())
    throw DomainError("generically_embeds: vectors are not defined on exactly the vertex set");
  for (int v = 0; v < q.vertex_count(); ++v)
    if (beta[v] > alpha[v])
      throw DomainError("generically_embeds: beta exceeds alpha at vertex " + q.vertex_name(v));

  std::vector<int> order;
  EmbedContext ctx = make_context(q, cache, &order);
  std::vector<Int> gamma(static_cast<std::size_t>(q.vertex_count()));
  for (int v = 0; v < q.vertex_count(); ++v) gamma[static_cast<std::size_t>(v)] = alpha[v] - beta[v];
  return ctx.embeds(permuted(beta.values(), order), permuted(gamma, order));
}

Int subvector_count(const DimVector& alpha) {
  Int p = 1;
  for (Int x : alpha.values()) {
    if (p > kStabilityGuard / (x + 1) + 1) return kStabilityGuard + 1;
    p *= x + 1;
    if (p > kStabilityGuard) return kStabilityGuard + 1;
  }
  return p;
}

StabilityVerdict stability_verdict(const QuiverPair& pair, const Weight& theta,
                                   const StabilityOptions& opts) {
  const Quiver& q = pair.quiver;
  if (theta.size() != q.vertex_count())
    throw DomainError("stability_verdict: weight is not defined on exactly the vertex set");
  if (subvector_count(pair.alpha) > kStabilityGuard && !opts.force)
    throw PreconditionError(
        "stability_verdict: more than 10^7 candidate subvectors; pass force to proceed");

  if (pairing(theta, pair.alpha) != 0) return {StabilityVerdict::Tag::NotSemistable, std::nullopt};

  std::vector<int> order;
  EmbedContext ctx = make_context(q, opts.cache, &order);
  const int n = q.vertex_count();

  auto embeds = [&](const std::vector<Int>& beta) {
    std::vector<Int> gamma(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      gamma[static_cast<std::size_t>(v)] = pair.alpha[v] - beta[static_cast<std::size_t>(v)];
    return ctx.embeds(permuted(beta, order), permuted(gamma, order));
  };

  std::optional<DimVector> zero_witness;

  // Graded lexicographic scan over proper nonzero subvectors; the embedding
  // test only runs where the pairing could violate.
  std::vector<Int> beta(static_cast<std::size_t>(n), 0);
  const Int total = pair.alpha.total();
  std::function<bool(int, Int)> walk = [&](int v, Int remaining) -> bool {
    if (v == n) {
      if (remaining != 0) return false;
      bool proper = false;
      bool nonzero = false;
      for (int i = 0; i < n; ++i) {
        if (beta[static_cast<std::size_t>(i)] != 0) nonzero = true;
        if (beta[static_cast<std::size_t>(i)] != pair.alpha[i]) proper = true;
      }
      if (!nonzero || !proper) return false;
      Int value = 0;
      for (int i = 0; i < n; ++i)
        value = checked_add(value, checked_mul(theta[i], beta[static_cast<std::size_t>(i)]));
      if (value > 0) return false;
      if (value < 0) {
        if (embeds(beta)) return true;  // first negative violator ends the scan
        return false;
      }
      if (!zero_witness && embeds(beta)) zero_witness = DimVector(beta);
      return false;
    }
    for (Int x = 0; x <= std::min(pair.alpha[v], remaining); ++x) {
      beta[static_cast<std::size_t>(v)] = x;
      if (walk(v + 1, remaining - x)) return true;
    }
    beta[static_cast<std::size_t>(v)] = 0;
    return false;
  };
  for (Int t = 1; t < total + 1; ++t) {
    if (walk(0, t)) return {StabilityVerdict::Tag::NotSemistable, DimVector(beta)};
  }
  if (zero_witness) return {StabilityVerdict::Tag::SemistableNotStable, std::move(zero_witness)};
  return {StabilityVerdict::Tag::Stable, std::nullopt};
}

Int moduli_dimension(const QuiverPair& pair, const Weight& theta, const StabilityOptions& opts) {
  if (stability_verdict(pair, theta, opts).tag != StabilityVerdict::Tag::Stable)
    throw PreconditionError("moduli_dimension: alpha is not theta-stable");
  return checked_sub(1, tits_form(pair.quiver, pair.alpha));
}

std::string verdict_label(StabilityVerdict::Tag tag) {
  switch (tag) {
    case StabilityVerdict::Tag::NotSemistable: return "NotSemistable";
    case StabilityVerdict::Tag::SemistableNotStable: return "SemistableNotStable";
    case StabilityVerdict::Tag::Stable: return "Stable";
  }
  return "Stable";
}

}  // namespace quivermod
