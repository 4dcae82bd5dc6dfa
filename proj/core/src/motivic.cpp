#include "gpk/motivic.hpp"

#include <limits>

#include "gpk/error.hpp"

namespace gpk {

LPolynomial::LPolynomial(std::int64_t constant) : c_{constant} { trim(); }

LPolynomial::LPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

LPolynomial LPolynomial::L(unsigned power) {
  std::vector<std::int64_t> c(power + 1, 0);
  c[power] = 1;
  return LPolynomial(std::move(c));
}

void LPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t LPolynomial::eval(std::int64_t q) const {
  std::int64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (__builtin_mul_overflow(acc, q, &acc) || __builtin_add_overflow(acc, *it, &acc))
      throw ResourceError("LPolynomial::eval overflows 64 bits");
  }
  return acc;
}

std::string LPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const std::int64_t c = c_[k];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (s.empty()) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    if (k == 0 || mag != 1) s += std::to_string(mag);
    if (k >= 1) s += "L";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

LPolynomial operator+(const LPolynomial& a, const LPolynomial& b) {
  std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return LPolynomial(std::move(c));
}

LPolynomial LPolynomial::operator-() const {
  LPolynomial out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

LPolynomial operator-(const LPolynomial& a, const LPolynomial& b) { return a + (-b); }

LPolynomial operator*(const LPolynomial& a, const LPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return LPolynomial(std::move(c));
}

std::int64_t MotivicClass::eval(std::int64_t q, std::int64_t x_count, std::int64_t y_count) const {
  return constant.eval(q) + x.eval(q) * x_count + y.eval(q) * y_count;
}

std::string MotivicClass::to_string() const {
  std::string s;
  auto term = [&s](const LPolynomial& c, const std::string& basis) {
    if (c.is_zero()) return;
    if (!s.empty()) s += " + ";
    if (basis.empty()) s += c.to_string();
    else if (c == LPolynomial(1)) s += basis;
    else s += "(" + c.to_string() + ")" + basis;
  };
  term(constant, "");
  term(x, "[X]");
  term(y, "[Y]");
  return s.empty() ? "0" : s;
}

LPolynomial class_pn(int n) {
  if (n < 0) throw InputError("class_pn: n must be nonnegative");
  return LPolynomial(std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 1));
}

LPolynomial class_grassmannian_25() { return class_pn(4) * LPolynomial({1, 0, 1}); }

LPolynomial class_section(int rank) {
  switch (rank) {
    case 2:
      // A ⊂ K gives P^2; dim(A ∩ K) = 1 fibres over P(K) with fibre P^3 \ P^1.
      return class_pn(2) + class_pn(2) * (class_pn(3) - class_pn(1));
    case 4:
      // A ⊂ V4 gives a smooth quadric in P^4, of class [P^3]; the rest fibres
      // over P(V4) with fibre P^2 \ P^1.
      return class_pn(3) + class_pn(3) * (class_pn(2) - class_pn(1));
    default:
      throw InputError("skew forms on a 5-dimensional space have rank 2 or 4, got " + std::to_string(rank));
  }
}

IncidenceDerivation incidence_identity() {
  const LPolynomial s2 = class_section(2), s4 = class_section(4), gr = class_grassmannian_25();
  const LPolynomial l4 = LPolynomial::L(4);
  if (s2 != LPolynomial({1, 1, 2, 2, 2, 1}) || s4 != LPolynomial({1, 1, 2, 2, 1, 1}))
    throw InvariantError("section classes do not match their closed forms");
  if (s2 - s4 != l4) throw InvariantError("S2 - S4 = " + (s2 - s4).to_string() + ", expected L^4");

  IncidenceDerivation d;
  const MotivicClass grc{gr, 0, 0};
  auto expand = [&](const MotivicClass& base) {
    const MotivicClass raw = s2 * base + s4 * (grc - base);
    const MotivicClass simplified = l4 * base + s4 * grc;
    if (raw != simplified) throw InvariantError("incidence expansion does not simplify");
    return raw;
  };
  d.via_first = expand(MotivicClass::of_x());
  d.via_second = expand(MotivicClass::of_y());
  d.difference = d.via_first - d.via_second;
  if (d.difference != l4 * (MotivicClass::of_x() - MotivicClass::of_y()))
    throw InvariantError("difference is not ([X] - [Y]) L^4");

  d.steps = {
      "S2 = [P^2] + [P^2]([P^3] - [P^1]) = " + s2.to_string(),
      "S4 = [P^3] + [P^3]([P^2] - [P^1]) = " + s4.to_string(),
      "S2 - S4 = " + (s2 - s4).to_string(),
      "[Gr] = " + gr.to_string(),
      "p1: [X] S2 + ([Gr] - [X]) S4 = " + d.via_first.to_string(),
      "p2: [Y] S2 + ([Gr] - [Y]) S4 = " + d.via_second.to_string(),
      "difference = " + d.difference.to_string(),
  };
  return d;
}

PlueckerPoint standard_skew_form(const PrimeField& field, int rank) {
  (void)field;
  PlueckerPoint w{};
  if (rank != 2 && rank != 4) throw InputError("skew forms on a 5-dimensional space have rank 2 or 4");
  w[pair_index(0, 1, 5)] = 1;
  if (rank == 4) w[pair_index(2, 3, 5)] = 1;
  return w;
}

namespace {

std::uint32_t pairing(const PlueckerPoint& y, const PlueckerPoint& x, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < kPlueckerDim; ++k) acc += std::uint64_t{y[k]} * x[k];
  return static_cast<std::uint32_t>(acc % p);
}

}  // namespace

std::uint64_t count_hyperplane_section(const PrimeField& field, const PlueckerPoint& omega) {
  std::uint64_t n = 0;
  for (const auto& a : grassmannian_points_rref(field)) n += pairing(omega, a, field.p()) == 0;
  return n;
}

CountReport count_and_compare(const PrimeField& field, const MatrixFF& g, bool with_incidence,
                              const EnumerationOptions& opts) {
  if (g.rows() != kPlueckerDim || g.cols() != kPlueckerDim) throw InputError("g must be 10x10");
  if (field.p() > opts.max_prime)
    throw ResourceError("point enumeration is capped at q <= " + std::to_string(opts.max_prime));
  const std::uint32_t p = field.p();
  const MatrixFF g_inv = mat_inverse(g);

  CountReport r;
  r.q = p;
  const auto gr1 = grassmannian_points(field, opts);
  const auto gr2_dual = rank2_points_after(field, g.transpose(), opts);
  r.n_gr = gr1.size();
  if (gr2_dual.size() != r.n_gr) throw InvariantError("translated Grassmannian has a different point count");
  for (const auto& x : gr1) r.n_x += is_rank2(apply_to_point(g_inv, x), p);
  for (const auto& y : gr2_dual) r.n_y += is_rank2(y, p);

  const std::int64_t q = p;
  const std::int64_t s4 = class_section(4).eval(q);
  r.predicted_from_x = static_cast<std::int64_t>(r.n_x) * q * q * q * q + static_cast<std::int64_t>(r.n_gr) * s4;
  r.predicted_from_y = static_cast<std::int64_t>(r.n_y) * q * q * q * q + static_cast<std::int64_t>(r.n_gr) * s4;

  if (with_incidence) {
    std::uint64_t pairs = 0;
    for (const auto& x : gr1)
      for (const auto& y : gr2_dual) pairs += pairing(y, x, p) == 0;
    r.n_q = pairs;
  }
  return r;
}

}  // namespace gpk
