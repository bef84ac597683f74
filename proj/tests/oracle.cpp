#include "oracle.hpp"

#include <random>
#include <vector>

namespace qmtest {

namespace {

using quivermod::DimVector;
using quivermod::Int;
using quivermod::Quiver;

constexpr long long kPrime = 1000003;

long long pow_mod(long long base, long long exp, long long mod) {
  long long result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

int rank_mod_p(std::vector<std::vector<long long>>& m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
    const long long inv =
        pow_mod(m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], kPrime - 2, kPrime);
    for (int c = col; c < cols; ++c)
      m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)] =
          m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)] * inv % kPrime;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const long long factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int c = col; c < cols; ++c)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            ((m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
              factor * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)]) %
                 kPrime +
             kPrime) %
            kPrime;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool brute_force_embeds(const Quiver& q, const DimVector& beta, const DimVector& alpha,
                        std::uint64_t seed) {
  using quivermod::DomainError;
  using quivermod::PreconditionError;
  const int n = q.vertex_count();
  if (beta.size() != n || alpha.size() != n)
    throw DomainError("brute_force_embeds: vectors are not defined on exactly the vertex set");
  for (int v = 0; v < n; ++v)
    if (beta[v] > alpha[v]) throw DomainError("brute_force_embeds: beta exceeds alpha");
  if (alpha.total() > 6) throw PreconditionError("brute_force_embeds: threshold exceeded (|alpha| > 6)");

  std::vector<Int> gamma(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) gamma[static_cast<std::size_t>(v)] = alpha[v] - beta[v];

  // Column layout: one block per vertex, gamma(v) x beta(v) unknowns.
  std::vector<int> col_offset(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v)
    col_offset[static_cast<std::size_t>(v) + 1] =
        col_offset[static_cast<std::size_t>(v)] +
        static_cast<int>(gamma[static_cast<std::size_t>(v)] * beta[v]);
  const int cols = col_offset[static_cast<std::size_t>(n)];

  int rows = 0;
  for (const Quiver::Arrow& a : q.arrows())
    rows += static_cast<int>(beta[a.source] * gamma[static_cast<std::size_t>(a.target)]);
  if (rows == 0) return true;
  if (cols < rows) return false;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> field(0, kPrime - 1);
  const int samples = 9;
  int full = 0;
  for (int trial = 0; trial < samples; ++trial) {
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(rows),
                                          std::vector<long long>(static_cast<std::size_t>(cols), 0));
    int row_base = 0;
    for (const Quiver::Arrow& a : q.arrows()) {
      const int bs = static_cast<int>(beta[a.source]);
      const int bt = static_cast<int>(beta[a.target]);
      const int gs = static_cast<int>(gamma[static_cast<std::size_t>(a.source)]);
      const int gt = static_cast<int>(gamma[static_cast<std::size_t>(a.target)]);
      // Random top-left and bottom-right blocks of the arrow map.
      std::vector<long long> B(static_cast<std::size_t>(bt) * static_cast<std::size_t>(bs));
      std::vector<long long> C(static_cast<std::size_t>(gt) * static_cast<std::size_t>(gs));
      for (auto& x : B) x = field(rng);
      for (auto& x : C) x = field(rng);
      // Equation block (r, s) for r < gt, s < bs:
      //   sum_k sigma_t[r][k] B[k][s]  -  sum_k C[r][k] sigma_s[k][s]
      for (int r = 0; r < gt; ++r)
        for (int s = 0; s < bs; ++s) {
          auto& row = m[static_cast<std::size_t>(row_base + r * bs + s)];
          for (int k = 0; k < bt; ++k) {
            const int col = col_offset[static_cast<std::size_t>(a.target)] + r * bt + k;
            row[static_cast<std::size_t>(col)] =
                (row[static_cast<std::size_t>(col)] + B[static_cast<std::size_t>(k * bs + s)]) % kPrime;
          }
          for (int k = 0; k < gs; ++k) {
            const int col = col_offset[static_cast<std::size_t>(a.source)] + k * bs + s;
            row[static_cast<std::size_t>(col)] =
                ((row[static_cast<std::size_t>(col)] - C[static_cast<std::size_t>(r * gs + k)]) % kPrime +
                 kPrime) %
                kPrime;
          }
        }
      row_base += gt * bs;
    }
    if (rank_mod_p(m) == rows) ++full;
  }
  return 2 * full > samples;
}

}  // namespace qmtest
