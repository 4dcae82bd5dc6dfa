#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gpk/error.hpp"

namespace gpk {

// Canonical residue in [0, p).
struct FieldElement {
  std::uint32_t value = 0;

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

// Arithmetic in F_p for a prime p < 2^31 (p = 2 is accepted for point counts). Products go through 64-bit
// intermediates; no bignum support is needed for the moduli used here.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint32_t p() const { return p_; }
  // (p - 1) / 2, the Euler-criterion exponent.
  std::uint32_t half_order() const { return (p_ - 1) / 2; }
  // (p + 1) / 4; only meaningful when p = 3 mod 4.
  std::uint32_t sqrt_exponent() const;
  bool is_3_mod_4() const { return p_ % 4 == 3; }

  FieldElement from_int(std::int64_t x) const;
  // Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(FieldElement x) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    std::uint32_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  FieldElement neg(FieldElement a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return {static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_)};
  }
  // Throws DomainError on zero.
  FieldElement inv(FieldElement a) const;

  FieldElement pow_mod(FieldElement x, std::uint64_t e) const;
  // Euler criterion: x^((p-1)/2) == 1. Zero is reported as a non-square.
  bool is_square(FieldElement x) const;
  // x^((p+1)/4). Requires p = 3 mod 4 and is_square(x).
  FieldElement sqrt_3mod4(FieldElement x) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

// xorshift64* generator seeded through splitmix64. The stream is a pure
// function of the seed on every platform.
class RandomState {
 public:
  explicit RandomState(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64();
  // Uniform in [0, bound) by rejection sampling.
  std::uint64_t uniform(std::uint64_t bound);
  FieldElement element(const PrimeField& field) { return {static_cast<std::uint32_t>(uniform(field.p()))}; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

// Dense row-major matrix over F_p.
class MatrixFF {
 public:
  MatrixFF(const PrimeField& field, std::size_t rows, std::size_t cols);

  static MatrixFF identity(const PrimeField& field, std::size_t n);
  static MatrixFF random(const PrimeField& field, std::size_t rows, std::size_t cols, RandomState& rng);
  static MatrixFF from_ints(const PrimeField& field, std::size_t rows, std::size_t cols,
                            std::span<const std::int64_t> entries);
  // Redraws until the matrix is invertible.
  static MatrixFF random_invertible(const PrimeField& field, std::size_t n, RandomState& rng);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> data() const { return data_; }

  MatrixFF transpose() const;
  MatrixFF operator*(const MatrixFF& rhs) const;
  std::vector<FieldElement> apply(std::span<const FieldElement> column) const;
  bool is_identity() const;

  friend bool operator==(const MatrixFF& a, const MatrixFF& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

// Gauss-Jordan elimination. Throws DomainError if singular.
MatrixFF mat_inverse(const MatrixFF& m);
std::size_t mat_rank(const MatrixFF& m);
FieldElement mat_determinant(const MatrixFF& m);

struct GramSchmidtOptions {
  std::size_t max_retries_per_vector = 10'000;
};

// Random orthogonal matrix (T^T T = I) built by Gram-Schmidt on random
// vectors, rejecting any vector whose self-dot-product is not a nonzero
// square, then normalising. Column i of the result is the i-th vector.
MatrixFF gram_schmidt_orthogonal(const PrimeField& field, std::size_t dim, RandomState& rng,
                                 GramSchmidtOptions opts = {});

// Text format: "rows cols" on the first line, then row-major integers.
// Integers are reduced mod p, negatives allowed.
MatrixFF read_matrix(std::istream& in, const PrimeField& field);
MatrixFF read_matrix_file(const std::string& path, const PrimeField& field);
// Writes entries as symmetric representatives in (-p/2, p/2].
void write_matrix(std::ostream& out, const MatrixFF& m);
std::string format_matrix(const MatrixFF& m);
// SHA-256 (hex) of format_matrix(m) prefixed with the modulus.
std::string matrix_sha256(const MatrixFF& m);

}  // namespace gpk
