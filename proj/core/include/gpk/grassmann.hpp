#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpk/ffield.hpp"
#include "gpk/groebner.hpp"
#include "gpk/multipoly.hpp"

namespace gpk {

// Plücker coordinates x_ij, 0 <= i < j <= 4, in the order
// x01,x02,x03,x04,x12,x13,x14,x23,x24,x34 (pair_index order for n = 5).
inline constexpr std::size_t kPlueckerDim = 10;
using PlueckerPair = std::pair<std::size_t, std::size_t>;

std::vector<std::string> pluecker_names();
RingPtr pluecker_ring(const PrimeField& field, MonomialOrder order = MonomialOrder::DegRevLex);
std::string coordinate_name(std::size_t i, std::size_t j);
PlueckerPair pair_of_coordinate(std::size_t index);

// The five 4x4 Pfaffians of the generic skew matrix, generator m omitting
// index m. They cut out Gr(2,5) in P^9.
std::vector<Polynomial> pfaffian_ideal(const RingPtr& pluecker);

// Affine chart x_ij = 1 of Gr(2,5). The chart ring has the six coordinates
// with exactly one index in {i, j}; the three coordinates disjoint from
// {i, j} are solved from the Pfaffian on {i, j, k, l}.
struct PatchChart {
  PlueckerPair pivot;
  RingPtr ring;                       // six free coordinates
  std::vector<std::size_t> free;      // Plücker indices of the chart variables
  std::vector<std::size_t> dependent; // Plücker indices solved quadratically
  std::vector<Polynomial> images;     // image of every Plücker coordinate

  std::string name() const { return coordinate_name(pivot.first, pivot.second); }
};

// Throws InvariantError if some Pfaffian does not vanish on the chart.
PatchChart patch_parametrization(const RingPtr& pluecker, std::size_t i, std::size_t j);
std::vector<PatchChart> all_patch_charts(const RingPtr& pluecker);

// X_{g1,g2} = g1 Gr ∩ g2 Gr.
struct GPK3Instance {
  MatrixFF g1;
  MatrixFF g2;
  std::string label;

  static GPK3Instance standard(const MatrixFF& g) { return {MatrixFF::identity(g.field(), g.rows()), g, {}}; }
  // Equivalent instance with g1 = 1 (the pair (1, g1^{-1} g2)).
  GPK3Instance normalized() const;
};

// Pulls the Pfaffians back along the row-vector substitution V -> V*g2 and
// restricts to the chart. Requires g1 = 1; use normalized() otherwise.
std::vector<Polynomial> gpk3_patch_ideal(const GPK3Instance& inst, const PatchChart& chart);

// cy together with all 3x3 minors of its Jacobian.
std::vector<Polynomial> singular_scheme_ideal(const std::vector<Polynomial>& cy);

enum class PatchOutcome { UnitIdeal, NotUnit, BudgetExceeded, Skipped };
std::string to_string(PatchOutcome outcome);

struct PatchVerdict {
  PlueckerPair pivot;
  std::string name;
  PatchOutcome outcome = PatchOutcome::Skipped;
  GroebnerStats stats;
  double millis = 0;
  std::string note;

  bool unit_ideal() const { return outcome == PatchOutcome::UnitIdeal; }
};

struct SmoothnessCertificate {
  std::uint32_t prime = 0;
  std::string matrix_sha;
  std::vector<PatchVerdict> patches;
  bool smooth = false;
  // Some patch ran out of budget, so "not smooth" is not a definite answer.
  bool inconclusive = false;
};

struct CertifyOptions {
  GroebnerOptions groebner{};
  unsigned jobs = 1;
  // Leave the remaining patches Skipped once one patch fails.
  bool stop_at_first_failure = false;
};

PatchVerdict certify_patch(const GPK3Instance& inst, const PatchChart& chart, const GroebnerOptions& opts);
SmoothnessCertificate certify_smooth_gpk3(const GPK3Instance& inst, const CertifyOptions& opts = {});

struct SearchAttempt {
  std::size_t attempt = 0;
  std::string failed_patch;  // empty on success
  std::string reason;
};

struct SearchResult {
  MatrixFF matrix;
  SmoothnessCertificate certificate;
  std::vector<SearchAttempt> attempts;
};

class SearchExhausted : public ResourceError {
 public:
  SearchExhausted(const std::string& what, std::vector<SearchAttempt> attempts)
      : ResourceError(what), attempts_(std::move(attempts)) {}
  const std::vector<SearchAttempt>& attempts() const { return attempts_; }

 private:
  std::vector<SearchAttempt> attempts_;
};

// Samples orthogonal matrices by Gram-Schmidt until one gives a smooth X_{1,T}.
SearchResult search_orthogonal_smooth(const PrimeField& field, std::uint64_t seed, std::size_t max_attempts,
                                      const CertifyOptions& opts = {});

// --- skew forms ------------------------------------------------------------

// 5x5 skew matrix with entry (i,j) = coords[pair_index(i,j,5)] for i < j.
MatrixFF skew_form(const PrimeField& field, std::span<const FieldElement> coords);

struct SkewRank {
  std::size_t rank = 0;
  std::vector<std::vector<FieldElement>> kernel;  // basis of the null space
};
SkewRank skew_rank(const MatrixFF& form);

// (g1^{-T}, g2^{-T}); transpose in the standard Plücker basis.
GPK3Instance double_mirror(const GPK3Instance& inst);

// --- point counts ----------------------------------------------------------

enum class Side { X, Y };

struct EnumerationOptions {
  std::uint32_t max_prime = 7;
};

using PlueckerPoint = std::array<std::uint32_t, kPlueckerDim>;

// Visits the normalized representatives (first nonzero coordinate 1) of
// P^9(F_q). ResourceError when q exceeds the cap.
void for_each_projective_point(const PrimeField& field, const EnumerationOptions& opts,
                               const std::function<void(const PlueckerPoint&)>& fn);

// Nonzero with all five Pfaffians zero, i.e. rank 2 as a skew form.
bool is_rank2(const PlueckerPoint& x, std::uint32_t p);
PlueckerPoint apply_to_point(const MatrixFF& h, const PlueckerPoint& x);

// Gr(2,5)(F_q) as the rank-2 points of P^9(F_q).
std::vector<PlueckerPoint> grassmannian_points(const PrimeField& field, const EnumerationOptions& opts = {});
// Points x of P^9(F_q) with rank(h x) = 2.
std::vector<PlueckerPoint> rank2_points_after(const PrimeField& field, const MatrixFF& h,
                                              const EnumerationOptions& opts = {});

// Side X: #{x : rk x = 2, rk(g^{-1} x) = 2}. Side Y: #{y : rk y = 2, rk(g^T y) = 2}.
std::uint64_t enumerate_rank2_points(const PrimeField& field, const MatrixFF& g, Side side,
                                     const EnumerationOptions& opts = {});

// Gr(2,5)(F_q) by enumerating 2x5 matrices in reduced row echelon form;
// sorted normalized Plücker vectors.
std::vector<PlueckerPoint> grassmannian_points_rref(const PrimeField& field);
std::uint64_t count_grassmannian_rref(const PrimeField& field);

// Plücker vector of the row space of a 2x5 matrix (rows u, v): x_ij = u_i v_j - u_j v_i.
PlueckerPoint pluecker_of_rows(const PrimeField& field, std::span<const FieldElement> u,
                                                         std::span<const FieldElement> v);

}  // namespace gpk
