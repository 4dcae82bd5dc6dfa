#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gpk/ffield.hpp"

namespace gpk {

inline constexpr std::size_t kMaxVars = 16;

// Exponent vector for up to kMaxVars variables, one byte per variable,
// packed into two words so that divisibility, products and comparisons are
// a handful of word operations. Exponents above 255 are rejected.
class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(std::span<const unsigned> exps);
  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned exponent(std::size_t i) const {
    return static_cast<unsigned>((words_[i >> 3] >> ((i & 7) * 8)) & 0xFF);
  }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
    if (degree_ > other.degree_) return false;
    if (((words_[0] | words_[1] | other.words_[0] | other.words_[1]) & kHigh) == 0) {
      return ((((other.words_[0] | kHigh) - words_[0]) & kHigh) == kHigh) &&
             ((((other.words_[1] | kHigh) - words_[1]) & kHigh) == kHigh);
    }
    return divides_slow(other);
  }

  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& rhs) const {
    constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
    if (((words_[0] | words_[1] | rhs.words_[0] | rhs.words_[1]) & kHigh) == 0) {
      Monomial out;
      out.words_ = {words_[0] + rhs.words_[0], words_[1] + rhs.words_[1]};
      out.degree_ = degree_ + rhs.degree_;
      return out;
    }
    return multiply_slow(rhs);
  }
  // Exact quotient; the caller guarantees rhs.divides(*this).
  Monomial operator/(const Monomial& rhs) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.words_ == b.words_; }

  std::uint64_t hash() const {
    std::uint64_t h = words_[0] * 0x9E3779B97F4A7C15ULL;
    h ^= (words_[1] + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
    return h ^ (h >> 29);
  }

  const std::array<std::uint64_t, 2>& words() const { return words_; }

 private:
  bool divides_slow(const Monomial& other) const;
  Monomial multiply_slow(const Monomial& rhs) const;

  std::array<std::uint64_t, 2> words_{0, 0};
  std::uint32_t degree_ = 0;
};

enum class MonomialOrder { DegRevLex, Lex };

std::string to_string(MonomialOrder order);

// Three-way comparison: negative if a < b in the order, zero if equal.
inline int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  const auto& wa = a.words();
  const auto& wb = b.words();
  if (order == MonomialOrder::DegRevLex) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    // Last variable that differs decides; the smaller exponent wins.
    for (int w = 1; w >= 0; --w) {
      const std::uint64_t diff = wa[w] ^ wb[w];
      if (diff == 0) continue;
      const int shift = (63 - std::countl_zero(diff)) & ~7;
      const unsigned ea = (wa[w] >> shift) & 0xFF;
      const unsigned eb = (wb[w] >> shift) & 0xFF;
      return ea < eb ? 1 : -1;
    }
    return 0;
  }
  for (int w = 0; w < 2; ++w) {
    const std::uint64_t diff = wa[w] ^ wb[w];
    if (diff == 0) continue;
    const int shift = std::countr_zero(diff) & ~7;
    const unsigned ea = (wa[w] >> shift) & 0xFF;
    const unsigned eb = (wb[w] >> shift) & 0xFF;
    return ea > eb ? 1 : -1;
  }
  return 0;
}

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Polynomial ring F_p[x_1..x_n] with named variables and an active term order.
class PolyRing {
 public:
  static RingPtr make(const PrimeField& field, std::vector<std::string> names,
                      MonomialOrder order = MonomialOrder::DegRevLex);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  // Throws InputError for an unknown name.
  std::size_t index_of(const std::string& name) const;
  MonomialOrder order() const { return order_; }

  // Same field and variables, different order.
  RingPtr with_order(MonomialOrder order) const;
  bool same_shape(const PolyRing& other) const { return field_ == other.field_ && names_ == other.names_; }

  PolyRing(const PrimeField& field, std::vector<std::string> names, MonomialOrder order);

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

struct Term {
  Monomial mono;
  std::uint32_t coeff;
};

// Sparse polynomial: terms strictly decreasing in the ring's order, no zero
// coefficients. Immutable through the public interface.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, const std::string& name);
  // Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  // Trusts the caller: terms already canonical.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_nonzero_constant() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }
  const Term& leading_term() const { return terms_.front(); }
  std::uint32_t total_degree() const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scale(FieldElement c) const;
  Polynomial mul_term(const Monomial& m, FieldElement c) const;
  Polynomial pow(unsigned e) const;
  // Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  Polynomial derivative(std::size_t var) const;
  FieldElement evaluate(std::span<const FieldElement> point) const;
  // Ring homomorphism x_i -> images[i]; the result lives in the images' ring.
  Polynomial substitute(std::span<const Polynomial> images) const;
  // Re-sorts into another ring of the same shape (e.g. a different order).
  Polynomial in_ring(RingPtr target) const;

  // "3*x01^2*x02+x03+102" style; variables by ring name.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void require_same_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

// Row-major matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> data_;
};

// Entry (i, j) = d gens[j] / d x_i.
PolyMatrix jacobian(std::span<const Polynomial> gens);

// All k x k minors, row subsets outermost, both in lexicographic order.
// Sub-determinants are shared through a memo keyed by (row set, column set).
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k);

Polynomial determinant(const PolyMatrix& m);

// Skew-symmetric matrix given by its strictly upper triangle.
class SkewMatrixSymbolic {
 public:
  SkewMatrixSymbolic(RingPtr ring, std::size_t n);

  // Generic n x n skew matrix whose (i, j) entry, i < j, is the ring variable
  // with index pair_index(i, j, n); the ring must have n(n-1)/2 variables.
  static SkewMatrixSymbolic generic(RingPtr ring, std::size_t n);

  std::size_t size() const { return n_; }
  const RingPtr& ring() const { return ring_; }
  Polynomial entry(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Polynomial value);

  PolyMatrix to_matrix() const;

 private:
  std::size_t upper_index(std::size_t i, std::size_t j) const;

  RingPtr ring_;
  std::size_t n_;
  std::vector<Polynomial> upper_;
};

// Index of the pair (i, j), i < j, in the lexicographic list of pairs of
// {0..n-1}: (0,1), (0,2), ..., (n-2, n-1).
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);

// Pfaffian of the principal submatrix on `indices` (sorted, even size),
// expanded along its first row.
Polynomial pfaffian(const SkewMatrixSymbolic& m, std::span<const std::size_t> indices);

}  // namespace gpk
