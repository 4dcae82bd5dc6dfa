#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gpk {

using Weight = std::vector<int>;

bool is_dominant(const Weight& w);
std::string format_weight(const Weight& w);
// Reversed negation: Σ^ν V∨ ≅ Σ^{dual(ν)} V.
Weight dual_weight(const Weight& w);

// Σ^α U∨ ⊗ Σ^β Q∨ on Gr(r, n), U the rank-r tautological subbundle.
// Line bundle twists are folded into α via det U∨ = O(1).
struct BundleSpec {
  int n = 5;
  int r = 2;
  Weight alpha;
  Weight beta;
  std::string label;

  static BundleSpec make(int n, int r, Weight alpha, Weight beta, std::string label = {});
  static BundleSpec line(int n, int r, int t);             // O(t)
  static BundleSpec q_twist(int t);                        // Q(-t) on Gr(2,5)
  static BundleSpec wedge2q_twist(int t);                  // ∧²Q(-t) on Gr(2,5)
  static BundleSpec normal_twist(int t);                   // N(-t) = Q∨(2-t) on Gr(2,5)

  // Tensor with O(t).
  BundleSpec twisted(int t) const;
};

struct CohomologyAnswer {
  bool zero = true;
  int degree = 0;     // the unique nonzero cohomological degree
  Weight nu;          // result is Σ^nu V∨ in that degree
  std::uint64_t dim = 0;

  std::string describe() const;
};

// Throws InputError for non-dominant α or β, or mismatched lengths.
CohomologyAnswer bott_cohomology(const BundleSpec& spec);

// prod_{i<j} (λ_i - λ_j + j - i) / (j - i). Throws InputError unless dominant,
// ResourceError if the value does not fit in 64 bits.
std::uint64_t weyl_dimension(const Weight& lambda);

// RΓ(P^n, O(d)) computed as Gr(1, n+1) through bott_cohomology.
CohomologyAnswer pn_line_cohomology(int n, int d);
// Closed form: (degree, dim), or nullopt when it vanishes.
std::optional<std::pair<int, std::uint64_t>> pn_line_cohomology_closed(int n, int d);

// RΓ(P^n, T_P(-t)) from 0 -> O(-t) -> W ⊗ O(1-t) -> T_P(-t) -> 0, dim W = n+1.
struct EulerTwistResult {
  bool vanishes = false;
  bool inconclusive = false;
  std::vector<std::pair<int, std::uint64_t>> nonzero;  // (degree, dim)
};
EulerTwistResult euler_sequence_tp_twist(int n, int t);

// Bounded complex of sums of irreducible bundles on one Grassmannian,
// quasi-isomorphic to the sheaf of interest; positions are cohomological
// degrees (<= 0 for resolutions).
struct ComplexTerm {
  BundleSpec bundle;
  std::uint64_t multiplicity = 1;
  int position = 0;
  std::string label;
};
using ComplexSpec = std::vector<ComplexTerm>;

struct E1Term {
  std::string label;
  int position = 0;
  CohomologyAnswer answer;
  int total_degree() const { return position + answer.degree; }
};

struct VanishingVerdict {
  bool vanishes = false;
  std::vector<E1Term> nonzero;  // offending E1 terms (empty iff vanishes)
};

// VANISHES when no nonzero E1^{p,q} has p + q in target_degrees; an empty
// target set means every degree.
VanishingVerdict resolution_vanishing(const ComplexSpec& cx, const std::set<int>& target_degrees = {});

// The resolution 0 -> O(-5) -> V∨⊗O(-3) -> V⊗O(-2) of an ideal sheaf, tensored
// with `bundle` (Gr(2,5), O twists applied to the bundle).
ComplexSpec pfaffian_resolution_tensor(const BundleSpec& bundle);

// Q|_X(-t) (or ∧²Q|_X(-t)) resolved on Gr by Q(-t), V⊗Q(-t-2), V∨⊗Q(-t-3), Q(-t-5).
ComplexSpec restricted_twist_complex(bool wedge2, int t);

struct ClaimCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

std::vector<ClaimCheck> verify_cohomology_tables();
std::vector<ClaimCheck> verify_vanishing_claims();
std::vector<ClaimCheck> verify_cohomology_claims();

}  // namespace gpk
