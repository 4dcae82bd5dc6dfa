#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gpk/multipoly.hpp"

namespace gpk {

struct GroebnerBudget {
  std::uint32_t max_degree = 60;
  std::size_t max_basis_size = 200'000;
  std::uint64_t max_pair_reductions = 5'000'000;
  // Size cap of the dense monomial index used by the reducer.
  std::size_t max_monomials = std::size_t{1} << 25;
};

// Pair selection: "normal" takes the smallest lcm degree first, "sugar"
// the smallest sugar degree (ties broken by lcm degree).
enum class PairStrategy { Normal, Sugar };

struct GroebnerOptions {
  GroebnerBudget budget{};
  PairStrategy strategy = PairStrategy::Normal;
  // Return {1} as soon as a nonzero constant shows up.
  bool stop_on_unit = true;
};

struct GroebnerStats {
  std::uint64_t pairs_processed = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t pairs_pruned = 0;
  std::uint32_t max_degree = 0;
  std::size_t basis_size = 0;
  std::size_t peak_basis_size = 0;
};

class BudgetExceeded : public ResourceError {
 public:
  BudgetExceeded(const std::string& what, GroebnerStats stats) : ResourceError(what), stats_(stats) {}
  const GroebnerStats& stats() const { return stats_; }

 private:
  GroebnerStats stats_;
};

// Reduced Groebner basis: monic elements, sorted by increasing leading
// monomial, no leading monomial divisible by another's.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> gens, GroebnerStats stats)
      : ring_(std::move(ring)), gens_(std::move(gens)), stats_(stats) {}

  const RingPtr& ring() const { return ring_; }
  MonomialOrder order() const { return ring_->order(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const GroebnerStats& stats() const { return stats_; }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_nonzero_constant(); }
  bool is_zero_ideal() const { return gens_.empty(); }

  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  GroebnerStats stats_;
};

// Multivariate division remainder: no term of the result is divisible by a
// leading monomial of `basis` (taken in `order`).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, MonomialOrder order);

// Buchberger with Gebauer-Moeller pair pruning. Inputs are inter-reduced
// first. All generators must share one ring; the result is expressed in that
// ring re-ordered by `order`.
GroebnerBasis groebner_basis(std::span<const Polynomial> gens, MonomialOrder order = MonomialOrder::DegRevLex,
                             const GroebnerOptions& opts = {});

bool is_unit_ideal(std::span<const Polynomial> gens, MonomialOrder order = MonomialOrder::DegRevLex,
                   const GroebnerOptions& opts = {});

// Krull dimension of the affine quotient ring; -1 for the unit ideal.
int ideal_dimension(std::span<const Polynomial> gens, MonomialOrder order = MonomialOrder::DegRevLex,
                    const GroebnerOptions& opts = {});

// Largest set S of variables such that no leading monomial is a product of
// variables from S only. -1 when some leading monomial is 1.
int dimension_from_leading_monomials(std::span<const Monomial> leads, std::size_t nvars);

}  // namespace gpk
