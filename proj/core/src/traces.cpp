#include "gpk/traces.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <map>

#include "gpk/error.hpp"
#include "gpk/ffield.hpp"

namespace gpk {

InvolutionType InvolutionType::make(int a, int b) {
  if (a < 0 || b < 0) throw InputError("involution type entries must be nonnegative");
  return a >= b ? InvolutionType{a, b} : InvolutionType{b, a};
}

std::string InvolutionType::to_string() const { return "{" + std::to_string(p) + "," + std::to_string(q) + "}"; }

InvolutionType wedge2_type(InvolutionType t) {
  // ∧² of ±1 eigenvectors: (+,+) and (-,-) pairs give +1, mixed pairs give -1.
  return InvolutionType::make(t.p * (t.p - 1) / 2 + t.q * (t.q - 1) / 2, t.p * t.q);
}

int ad_fixed_mult(InvolutionType t) { return t.p * t.p + t.q * t.q; }

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

std::vector<int> pair_sum_counts(const EigenExponents& x) {
  std::vector<int> counts(x.m, 0);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) ++counts[mod(x.e[i] + x.e[j], x.m)];
  return counts;
}

}  // namespace

int eigen_multiset_mult1(const EigenExponents& lambda, const EigenExponents& mu) {
  if (lambda.m != mu.m || lambda.m < 1) throw InputError("eigen exponents need one common modulus m >= 1");
  const int m = lambda.m;
  const auto cl = pair_sum_counts(lambda);
  const auto cm = pair_sum_counts(mu);
  bool related = false;
  for (int shift = 0; shift < m && !related; ++shift) {
    related = true;
    for (int x = 0; x < m; ++x) related = related && cm[mod(x + shift, m)] == cl[x];
  }
  if (!related) throw InputError("pair-product multisets of λ and μ differ (even up to a scalar)");

  int count = 1;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = 0; k < 5; ++k)
        for (int l = k + 1; l < 5; ++l) count += mod(mu.e[i] + mu.e[j] - mu.e[k] - mu.e[l], m) == 0;
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k) {
      count -= mod(lambda.e[i] - lambda.e[k], m) == 0;
      count -= mod(mu.e[i] - mu.e[k], m) == 0;
    }
  return count;
}

TraceReport trace_type1(InvolutionType a0, InvolutionType b0) {
  for (const auto& t : {a0, b0}) {
    if (t.dim() != 5 || t.q == 0) throw InputError("type-I inputs are nontrivial involutions of a 5-dimensional space");
  }
  // b = ∧²b0 acts on gl(10) with mult_1 = p² + q² for its {p,q} type on ∧²V.
  const int mult = 1 + ad_fixed_mult(wedge2_type(b0)) - ad_fixed_mult(a0) - ad_fixed_mult(b0);
  return {mult, 2 * mult - kTangentDim, 1, {a0, b0}};
}

TraceReport trace_type2(InvolutionType a) {
  if (a.dim() != 10) throw InputError("type-II involutions act on the 10-dimensional space");
  const int mult = 76 - ad_fixed_mult(a);
  if (mult < 0) throw DomainError("type " + a.to_string() + " would give mult_1 = " + std::to_string(mult) + "; it cannot occur");
  const int trace = 101 - 2 * ad_fixed_mult(a);
  if (trace != 2 * mult - kTangentDim) throw InvariantError("type-II trace formula mismatch");
  return {mult, trace, 2, {a}};
}

std::set<int> allowed_involution_traces() {
  std::set<int> out{kTangentDim};
  const InvolutionType t41{4, 1}, t32{3, 2};
  for (const auto& a : {t41, t32})
    for (const auto& b : {t41, t32}) out.insert(trace_type1(a, b).trace);
  for (int q = 1; q <= 5; ++q) {
    try {
      out.insert(trace_type2(InvolutionType::make(10 - q, q)).trace);
    } catch (const DomainError&) {
    }
  }
  return out;
}

int pgl_transpose_trace(int n) {
  // On gl(n), R -> -R^T sends E_ij to -E_ji: only the n diagonal units
  // contribute, each with -1. The scalars form an eigenline with eigenvalue
  // -1, which pgl(n) = gl(n)/scalars drops.
  int trace = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) trace -= i == j;
  return trace - (-1);
}

int trace_dtau() {
  const int g = pgl_transpose_trace(10);
  const int h = pgl_transpose_trace(5);
  const int quotient = g - h;
  return 2 * quotient - g;
}

namespace {

using RationalRow = std::vector<mpq_class>;

// Rank over Q by Gaussian elimination; rows are consumed.
std::size_t rational_rank(std::vector<RationalRow> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const RationalRow& p = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      const mpq_class f = rows[r][c] / p[c];
      for (std::size_t k = c; k < cols; ++k) {
        if (sgn(p[k]) != 0) rows[r][k] -= f * p[k];
      }
    }
    ++rank;
  }
  return rank;
}

std::array<int, 10> wedge2_diagonal(const std::array<int, 5>& d) {
  std::array<int, 10> out{};
  std::size_t k = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) out[k++] = d[i] * d[j];
  return out;
}

int pair_slot(int i, int j) {
  int k = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b, ++k)
      if (a == i && b == j) return k;
  return -1;
}

// ∧²-derivative of the 5x5 unit E_kl: R -> R∧1 + 1∧R on the lex basis e_a∧e_b.
std::array<std::array<int, 10>, 10> wedge2_derivative_unit(int k, int l) {
  std::array<std::array<int, 10>, 10> m{};
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      const int col = pair_slot(a, b);
      // E_kl e_a ∧ e_b + e_a ∧ E_kl e_b; E_kl e_x = [x == l] e_k.
      auto put = [&](int x, int y, int sign) {
        if (x == y) return;
        if (x < y) m[pair_slot(x, y)][col] += sign;
        else m[pair_slot(y, x)][col] -= sign;
      };
      if (a == l) put(k, b, 1);
      if (b == l) put(a, k, 1);
    }
  return m;
}

struct StableTrace {
  std::size_t dim = 0;
  long trace = 0;
};

// Trace of a diagonal ±1 action on the span of `rows`. A stable span splits
// into its ±1 parts, which are the projections onto the ±1 coordinates.
StableTrace stable_trace(const std::vector<RationalRow>& rows, const std::array<int, 200>& act) {
  std::vector<RationalRow> plus = rows, minus = rows;
  for (auto& v : plus)
    for (std::size_t c = 0; c < v.size(); ++c)
      if (act[c] != 1) v[c] = 0;
  for (auto& v : minus)
    for (std::size_t c = 0; c < v.size(); ++c)
      if (act[c] != -1) v[c] = 0;
  const std::size_t rank = rational_rank(rows);
  const std::size_t rp = rational_rank(std::move(plus));
  const std::size_t rm = rational_rank(std::move(minus));
  if (rp + rm != rank) throw InvariantError("subspace is not stable under the action");
  return {rank, static_cast<long>(rp) - static_cast<long>(rm)};
}

}  // namespace

OracleResult oracle_trace_type1(const std::array<int, 5>& a0, const std::array<int, 5>& b0, std::uint64_t seed,
                                int max_attempts) {
  for (const auto& d : {a0, b0})
    for (int x : d)
      if (x != 1 && x != -1) throw InputError("oracle inputs must be ±1 diagonals");

  const auto a = wedge2_diagonal(a0);
  auto b = wedge2_diagonal(b0);
  // ∧²a0 and ∧²b0 are conjugate up to sign; fix the sign of the lift.
  if (std::count(a.begin(), a.end(), 1) != std::count(b.begin(), b.end(), 1)) {
    for (int& x : b) x = -x;
  }
  if (std::count(a.begin(), a.end(), 1) != std::count(b.begin(), b.end(), 1)) {
    throw InputError("∧²a0 and ∧²b0 are not conjugate up to a scalar");
  }

  // Ad_a ⊕ Ad_b on gl(10) ⊕ gl(10) is diagonal in the unit basis.
  std::array<int, 200> act{};
  long trace_u = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      act[i * 10 + j] = a[i] * a[j];
      act[100 + i * 10 + j] = b[i] * b[j];
      trace_u += act[i * 10 + j] + act[100 + i * 10 + j];
    }

  RandomState rng(seed);
  OracleResult out;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    out.attempts = attempt;
    // a g = g b forces g_ij = 0 unless a_i = b_j; other entries small nonzero.
    std::array<std::array<long, 10>, 10> g{};
    std::vector<RationalRow> gm;
    for (int i = 0; i < 10; ++i) {
      RationalRow row(10);
      for (int j = 0; j < 10; ++j) {
        if (a[i] == b[j]) {
          const long v = static_cast<long>(rng.uniform(6));
          g[i][j] = v < 3 ? v - 3 : v - 2;
        }
        row[j] = g[i][j];
      }
      gm.push_back(std::move(row));
    }
    if (rational_rank(gm) != 10) continue;

    // h~ ⊕ h~ (the ∧²-derivatives of gl(5) in each summand) and the copy of
    // gl(10) embedded as Y -> (gY, Yg), inside gl(10) ⊕ gl(10).
    std::vector<RationalRow> hh, emb;
    for (int k = 0; k < 5; ++k)
      for (int l = 0; l < 5; ++l) {
        const auto d = wedge2_derivative_unit(k, l);
        for (int s = 0; s < 2; ++s) {
          RationalRow v(200);
          for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) v[s * 100 + i * 10 + j] = d[i][j];
          hh.push_back(std::move(v));
        }
      }
    for (int y0 = 0; y0 < 10; ++y0)
      for (int y1 = 0; y1 < 10; ++y1) {
        RationalRow v(200);
        for (int i = 0; i < 10; ++i) v[i * 10 + y1] = g[i][y0];        // g E_{y0 y1}
        for (int j = 0; j < 10; ++j) v[100 + y0 * 10 + j] = g[y1][j];  // E_{y0 y1} g
        emb.push_back(std::move(v));
      }

    const StableTrace th = stable_trace(hh, act);
    const StableTrace te = stable_trace(emb, act);
    if (th.dim != 50 || te.dim != 100) throw InvariantError("presentation pieces have the wrong dimension");
    std::vector<RationalRow> all = hh;
    all.insert(all.end(), emb.begin(), emb.end());
    out.presentation_rank = rational_rank(std::move(all));
    // T = (gl ⊕ gl)/(h~ ⊕ h~) minus pgl(10); the scalar line (1, 1) of the
    // embedded copy is fixed by the action, hence the +1.
    out.trace = trace_u - th.trace - te.trace + 1;
    return out;
  }
  throw ResourceError("oracle_trace_type1: no invertible conjugator in " + std::to_string(max_attempts) + " attempts");
}

}  // namespace gpk
