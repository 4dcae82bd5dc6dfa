#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace gpk {

// Eigenvalue multiplicities {p, q} of a diagonalizable involution (+1 with
// multiplicity p, -1 with multiplicity q), stored with p >= q.
struct InvolutionType {
  int p = 0;
  int q = 0;

  static InvolutionType make(int a, int b);
  int dim() const { return p + q; }
  std::string to_string() const;
  friend bool operator==(const InvolutionType&, const InvolutionType&) = default;
};

// Type of ∧²ψ for an involution ψ of type {p, q}.
InvolutionType wedge2_type(InvolutionType t);

// mult_1 of R -> ψRψ^{-1} on gl(L): p² + q².
int ad_fixed_mult(InvolutionType t);

// Eigenvalues as exponents of a primitive m-th root of unity.
struct EigenExponents {
  int m = 1;
  std::array<int, 5> e{};
};

// Signed multiplicity of the eigenvalue 1 in
//   {1} + {μ_iμ_j / μ_kμ_l} - {λ_i/λ_k} - {μ_i/μ_k}.
// Requires {λ_iλ_j} and {μ_iμ_j} to agree up to a common scalar factor
// (the lifts to GL are only defined up to scalars); InputError otherwise.
int eigen_multiset_mult1(const EigenExponents& lambda, const EigenExponents& mu);

struct TraceReport {
  int mult1 = 0;
  int trace = 0;  // 2 * mult1 - 51
  int kind = 1;  // 1: preserves both Grassmannians, 2: swaps them
  std::vector<InvolutionType> inputs;
};

inline constexpr int kTangentDim = 51;

// Automorphism preserving both Grassmannians; a0, b0 of types {4,1} or {3,2}.
TraceReport trace_type1(InvolutionType a0, InvolutionType b0);
// Automorphism swapping the Grassmannians; type of a in GL(10), p + q = 10.
// DomainError for {9,1}, where the multiplicity would be negative.
TraceReport trace_type2(InvolutionType a);

std::set<int> allowed_involution_traces();

// Trace of R -> -R^T on pgl(n).
int pgl_transpose_trace(int n);
int trace_dtau();

struct OracleResult {
  long trace = 0;
  int attempts = 0;
  // Rank of (h~ ⊕ h~) + gl(10) inside gl(10) ⊕ gl(10). It is 149 when the
  // presentation is exact; 148 when the stabilizer has positive dimension,
  // which happens for a0 and b0 both of type {4,1}.
  std::size_t presentation_rank = 0;
};

// Exact-rational construction of the type-I action on the presentation
//   0 -> pgl(10) -> gl(10)/h~ ⊕ gl(10)/h~ -> T -> 0,
// returning the alternating trace over its terms. a0, b0 are ±1 diagonals;
// the conjugator g is drawn from `seed` among small integer matrices with
// a g = g b, a = ∧²a0, b = ±∧²b0.
OracleResult oracle_trace_type1(const std::array<int, 5>& a0, const std::array<int, 5>& b0, std::uint64_t seed,
                                int max_attempts = 20);

}  // namespace gpk
