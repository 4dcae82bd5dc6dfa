#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpk/ffield.hpp"
#include "gpk/grassmann.hpp"

namespace gpk {

// Integer polynomial in L = [A^1]. Coefficient k multiplies L^k; no trailing zeros.
class LPolynomial {
 public:
  LPolynomial() = default;
  LPolynomial(std::int64_t constant);  // NOLINT: integers are classes
  explicit LPolynomial(std::vector<std::int64_t> coeffs);

  static LPolynomial L(unsigned power = 1);

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  std::int64_t coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  // Throws ResourceError on 64-bit overflow.
  std::int64_t eval(std::int64_t q) const;
  std::string to_string() const;

  friend LPolynomial operator+(const LPolynomial& a, const LPolynomial& b);
  friend LPolynomial operator-(const LPolynomial& a, const LPolynomial& b);
  friend LPolynomial operator*(const LPolynomial& a, const LPolynomial& b);
  LPolynomial operator-() const;
  friend bool operator==(const LPolynomial&, const LPolynomial&) = default;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

// c0 + cx [X] + cy [Y] with coefficients in Z[L]. Products of [X] and [Y]
// have no representation.
struct MotivicClass {
  LPolynomial constant;
  LPolynomial x;
  LPolynomial y;

  static MotivicClass of_x() { return {0, 1, 0}; }
  static MotivicClass of_y() { return {0, 0, 1}; }

  friend MotivicClass operator+(const MotivicClass& a, const MotivicClass& b) {
    return {a.constant + b.constant, a.x + b.x, a.y + b.y};
  }
  friend MotivicClass operator-(const MotivicClass& a, const MotivicClass& b) {
    return {a.constant - b.constant, a.x - b.x, a.y - b.y};
  }
  friend MotivicClass operator*(const LPolynomial& s, const MotivicClass& m) {
    return {s * m.constant, s * m.x, s * m.y};
  }
  friend bool operator==(const MotivicClass&, const MotivicClass&) = default;

  // Substitutes point counts for [X], [Y] and q for L.
  std::int64_t eval(std::int64_t q, std::int64_t x_count, std::int64_t y_count) const;
  // [X] = [Y] substituted.
  MotivicClass identify_x_y() const { return {constant, x + y, 0}; }
  std::string to_string() const;
};

LPolynomial class_pn(int n);
// (1 + L + L^2 + L^3 + L^4)(1 + L^2).
LPolynomial class_grassmannian_25();
// Hyperplane section of Gr(2,5) by a skew form of rank 2 or 4, assembled
// from its closed stratum and the fibration over it. InputError otherwise.
LPolynomial class_section(int rank);

struct IncidenceDerivation {
  MotivicClass via_first;   // [X] L^4 + [Gr] S4
  MotivicClass via_second;  // [Y] L^4 + [Gr] S4
  MotivicClass difference;  // ([X] - [Y]) L^4
  std::vector<std::string> steps;
};

// Both expansions of the incidence divisor class. Throws InvariantError if
// S2 - S4 != L^4 or the unsimplified and simplified forms disagree.
IncidenceDerivation incidence_identity();

// Standard skew forms in dual Plücker coordinates: e0∧e1 (rank 2) and
// e0∧e1 + e2∧e3 (rank 4).
PlueckerPoint standard_skew_form(const PrimeField& field, int rank);

// #{A in Gr(2,5)(F_q) : omega(A) = 0}, enumerated over RREF representatives.
std::uint64_t count_hyperplane_section(const PrimeField& field, const PlueckerPoint& omega);

struct CountReport {
  std::uint32_t q = 0;
  std::uint64_t n_gr = 0;
  std::uint64_t n_x = 0;
  std::uint64_t n_y = 0;
  std::optional<std::uint64_t> n_q;  // incidence pairs, when enumerated
  std::int64_t predicted_from_x = 0;  // n_X q^4 + n_Gr S4(q)
  std::int64_t predicted_from_y = 0;

  bool counts_agree() const { return n_x == n_y; }
  bool incidence_holds() const {
    return !n_q || (static_cast<std::int64_t>(*n_q) == predicted_from_x &&
                    static_cast<std::int64_t>(*n_q) == predicted_from_y);
  }
  bool verified() const { return counts_agree() && incidence_holds(); }
};

// X = {x : rk x = 2, rk(g^{-1} x) = 2}; Y = {y : rk y = 2, rk(g^T y) = 2};
// the incidence pairs are (x, y) with rk x = 2, rk(g^T y) = 2 and y.x = 0.
// Requires q <= opts.max_prime and g invertible.
CountReport count_and_compare(const PrimeField& field, const MatrixFF& g, bool with_incidence,
                              const EnumerationOptions& opts = {});

}  // namespace gpk
