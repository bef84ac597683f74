#include "quivermod/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace quivermod {

namespace {

// Iterative partition refinement on (alpha, loop count, adjacent color
// multisets), then backtracking over refinement-compatible orderings that
// picks the lexicographically smallest adjacency-multiplicity encoding.
// Adequate at desk scale; no external canonicalizer.

using Mult = std::vector<std::vector<Int>>;

std::vector<int> refine_colors(const Mult& m, const std::vector<Int>& alpha) {
  const int n = static_cast<int>(alpha.size());
  using Sig = std::vector<Int>;
  std::vector<int> color(static_cast<std::size_t>(n), 0);

  auto assign = [&](std::vector<Sig>& sigs) {
    std::vector<Sig> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), sigs[static_cast<std::size_t>(v)]);
      color[static_cast<std::size_t>(v)] = static_cast<int>(it - sorted.begin());
    }
    return static_cast<int>(sorted.size());
  };

  std::vector<Sig> sigs(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    Sig s{alpha[static_cast<std::size_t>(v)], m[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)]};
    std::vector<Int> outs, ins;
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      outs.push_back(m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]);
      ins.push_back(m[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)]);
    }
    std::sort(outs.begin(), outs.end());
    std::sort(ins.begin(), ins.end());
    s.insert(s.end(), outs.begin(), outs.end());
    s.insert(s.end(), ins.begin(), ins.end());
    sigs[static_cast<std::size_t>(v)] = std::move(s);
  }
  int classes = assign(sigs);

  for (;;) {
    for (int v = 0; v < n; ++v) {
      Sig s{color[static_cast<std::size_t>(v)]};
      std::vector<std::array<Int, 3>> adj;
      for (int w = 0; w < n; ++w) {
        if (w == v) continue;
        Int out = m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
        Int in = m[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)];
        if (out + in > 0) adj.push_back({static_cast<Int>(color[static_cast<std::size_t>(w)]), out, in});
      }
      std::sort(adj.begin(), adj.end());
      for (const auto& t : adj) s.insert(s.end(), t.begin(), t.end());
      sigs[static_cast<std::size_t>(v)] = std::move(s);
    }
    int next = assign(sigs);
    if (next == classes) break;
    classes = next;
  }
  return color;
}

struct Minimizer {
  const Mult& m;
  int n;
  std::vector<std::vector<int>> cells;  // vertices grouped by color rank
  std::vector<int> pos_cell;            // cell index owning each position

  std::vector<int> perm;        // perm[p] = vertex placed at position p
  std::vector<char> used;
  std::vector<Int> code;        // staircase encoding of the placed prefix
  std::vector<Int> best_code;
  std::vector<int> best_perm;
  bool have_best = false;
  long long nodes = 0;

  explicit Minimizer(const Mult& mult, const std::vector<int>& color) : m(mult) {
    n = static_cast<int>(color.size());
    int classes = *std::max_element(color.begin(), color.end()) + 1;
    cells.resize(static_cast<std::size_t>(classes));
    for (int v = 0; v < n; ++v) cells[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
    for (int c = 0; c < classes; ++c)
      for (std::size_t i = 0; i < cells[static_cast<std::size_t>(c)].size(); ++i) pos_cell.push_back(c);
    used.assign(static_cast<std::size_t>(n), 0);
    code.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  }

  // Interchangeable vertices: same loop count, mutual multiplicities, and
  // identical rows/columns against every other vertex. Swapping two twins is
  // an automorphism, so at any position only one of them needs to be tried.
  bool twins(int u, int v) const {
    if (m[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)] !=
        m[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)])
      return false;
    if (m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] !=
        m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
      return false;
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (m[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] !=
              m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] ||
          m[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)] !=
              m[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)])
        return false;
    }
    return true;
  }

  // rel: 0 = prefix equal to best so far, -1 = strictly smaller
  void search(int p, int rel) {
    if (++nodes > 20'000'000)
      throw Error("canonicalization: symmetry search exceeded the node budget");
    if (p == n) {
      if (!have_best || rel < 0) {
        best_code = code;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    const std::size_t seg_start = code.size();
    std::vector<int> tried;
    for (int v : cells[static_cast<std::size_t>(pos_cell[static_cast<std::size_t>(p)])]) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool redundant = false;
      for (int u : tried)
        if (twins(u, v)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      tried.push_back(v);
      perm.push_back(v);
      used[static_cast<std::size_t>(v)] = 1;
      for (int q = 0; q <= p; ++q)
        code.push_back(m[static_cast<std::size_t>(v)][static_cast<std::size_t>(perm[static_cast<std::size_t>(q)])]);
      for (int q = 0; q < p; ++q)
        code.push_back(m[static_cast<std::size_t>(perm[static_cast<std::size_t>(q)])][static_cast<std::size_t>(v)]);

      int next_rel = rel;
      bool prune = false;
      if (have_best && rel == 0) {
        for (std::size_t i = seg_start; i < code.size(); ++i) {
          if (code[i] < best_code[i]) {
            next_rel = -1;
            break;
          }
          if (code[i] > best_code[i]) {
            prune = true;
            break;
          }
        }
      }
      if (!prune) search(p + 1, next_rel);

      code.resize(seg_start);
      used[static_cast<std::size_t>(v)] = 0;
      perm.pop_back();
    }
  }
};

std::vector<int> minimal_order(const Mult& m, const std::vector<Int>& alpha) {
  auto color = refine_colors(m, alpha);
  Minimizer mini(m, color);
  mini.search(0, 0);
  return mini.best_perm;
}

}  // namespace

Canonicalized canonicalize(const QuiverPair& pair) {
  const Mult m = pair.quiver.multiplicity_matrix();
  const std::vector<int> order = minimal_order(m, pair.alpha.values());
  const int n = pair.quiver.vertex_count();
  std::ostringstream out;
  out << "QP1;n=" << n << ";a=";
  for (int p = 0; p < n; ++p) {
    if (p) out << ',';
    out << pair.alpha[order[static_cast<std::size_t>(p)]];
  }
  out << ";m=";
  for (int i = 0; i < n; ++i) {
    if (i) out << '|';
    for (int j = 0; j < n; ++j) {
      if (j) out << ',';
      out << m[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]
              [static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
    }
  }
  return {CanonicalKey{out.str()}, order};
}

CanonicalKey canonical_key(const QuiverPair& pair) { return canonicalize(pair).key; }

std::vector<int> canonical_vertex_order(const Quiver& q) {
  const Mult m = q.multiplicity_matrix();
  const std::vector<Int> zeros(static_cast<std::size_t>(q.vertex_count()), 0);
  return minimal_order(m, zeros);
}

QuiverPair pair_from_key(const CanonicalKey& key) {
  const std::string& s = key.bytes;
  auto fail = [&](const std::string& why) -> void {
    throw DomainError("pair_from_key: malformed key (" + why + ")");
  };
  if (s.rfind("QP1;n=", 0) != 0) fail("missing header");
  std::size_t pos = 6;
  auto read_int = [&](char stop) {
    std::size_t end = s.find(stop, pos);
    if (end == std::string::npos) fail(std::string("expected '") + stop + "'");
    Int value = 0;
    try {
      value = std::stoll(s.substr(pos, end - pos));
    } catch (const std::exception&) {
      fail("bad integer");
    }
    pos = end + 1;
    return value;
  };
  const Int n = read_int(';');
  if (n <= 0 || n > 4096) fail("vertex count out of range");
  if (s.compare(pos, 2, "a=") != 0) fail("missing alpha");
  pos += 2;
  std::vector<Int> alpha;
  for (Int i = 0; i < n; ++i) alpha.push_back(read_int(i + 1 < n ? ',' : ';'));
  if (s.compare(pos, 2, "m=") != 0) fail("missing matrix");
  pos += 2;
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(n));
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) {
      char stop = (j + 1 < n) ? ',' : (i + 1 < n ? '|' : '\0');
      Int v;
      if (stop == '\0') {
        try {
          v = std::stoll(s.substr(pos));
        } catch (const std::exception&) {
          fail("bad integer");
          v = 0;
        }
        pos = s.size();
      } else {
        v = read_int(stop);
      }
      if (v < 0) fail("negative multiplicity");
      m[static_cast<std::size_t>(i)].push_back(v);
    }

  std::vector<std::string> names;
  for (Int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Quiver::Arrow> arrows;
  int counter = 0;
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j)
      for (Int k = 0; k < m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; ++k)
        arrows.push_back({"a" + std::to_string(++counter), static_cast<int>(i), static_cast<int>(j)});
  return QuiverPair(Quiver(std::move(names), std::move(arrows)), DimVector(std::move(alpha)));
}

}  // namespace quivermod
