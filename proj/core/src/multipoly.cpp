#include "gpk/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace gpk {

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
  if (exps.size() > kMaxVars) throw InputError("at most " + std::to_string(kMaxVars) + " variables supported");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > 255) throw InputError("exponent above 255");
    m.words_[i >> 3] |= std::uint64_t{exps[i]} << ((i & 7) * 8);
    m.degree_ += exps[i];
  }
  return m;
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVars) throw InputError("variable index out of range");
  if (power > 255) throw InputError("exponent above 255");
  Monomial m;
  m.words_[index >> 3] = std::uint64_t{power} << ((index & 7) * 8);
  m.degree_ = power;
  return m;
}

bool Monomial::divides_slow(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exponent(i) > other.exponent(i)) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exponent(i) != 0 && other.exponent(i) != 0) return false;
  return true;
}

Monomial Monomial::multiply_slow(const Monomial& rhs) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = exponent(i) + rhs.exponent(i);
    if (e > 255) throw InputError("monomial exponent overflow (above 255)");
    out.words_[i >> 3] |= std::uint64_t{e} << ((i & 7) * 8);
  }
  out.degree_ = degree_ + rhs.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
  // No byte of rhs exceeds the matching byte here, so plain subtraction
  // never borrows across bytes.
  Monomial out;
  out.words_ = {words_[0] - rhs.words_[0], words_[1] - rhs.words_[1]};
  out.degree_ = degree_ - rhs.degree_;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = std::max(a.exponent(i), b.exponent(i));
    out.words_[i >> 3] |= std::uint64_t{e} << ((i & 7) * 8);
    out.degree_ += e;
  }
  return out;
}

std::string to_string(MonomialOrder order) { return order == MonomialOrder::DegRevLex ? "degrevlex" : "lex"; }

// ---------------------------------------------------------------------------

PolyRing::PolyRing(const PrimeField& field, std::vector<std::string> names, MonomialOrder order)
    : field_(field), names_(std::move(names)), order_(order) {
  if (names_.size() > kMaxVars) throw InputError("at most " + std::to_string(kMaxVars) + " variables supported");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw InputError("duplicate variable name '" + names_[i] + "'");
}

RingPtr PolyRing::make(const PrimeField& field, std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const PolyRing>(field, std::move(names), order);
}

std::size_t PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw InputError("unknown variable '" + name + "'");
}

RingPtr PolyRing::with_order(MonomialOrder order) const { return make(field_, names_, order); }

// ---------------------------------------------------------------------------

namespace {

// Sorts descending in `order` and merges equal monomials.
void canonicalize(std::vector<Term>& terms, const PrimeField& F, MonomialOrder order) {
  std::sort(terms.begin(), terms.end(),
            [order](const Term& a, const Term& b) { return compare(a.mono, b.mono, order) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = terms[i];
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].mono == acc.mono) {
      acc.coeff = F.add({acc.coeff}, {terms[j].coeff}).value;
      ++j;
    }
    if (acc.coeff != 0) terms[out++] = acc;
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Polynomial p(ring);
  const FieldElement v = ring->field().from_int(c);
  if (v.value != 0) p.terms_.push_back({Monomial{}, v.value});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw InputError("variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back({Monomial::variable(index), 1});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  const std::size_t i = ring->index_of(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (auto& t : terms) t.coeff %= ring->field().p();
  canonicalize(terms, ring->field(), ring->order());
  return from_sorted_terms(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(ring_->same_shape(*other.ring_) && ring_->order() == other.ring_->order())) {
    throw InputError("polynomials live in different rings");
  }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  require_same_ring(rhs);
  const PrimeField& F = ring_->field();
  const MonomialOrder order = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    const int c = compare(terms_[i].mono, rhs.terms_[j].mono, order);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(rhs.terms_[j++]);
    } else {
      const std::uint32_t s = F.add({terms_[i].coeff}, {rhs.terms_[j].coeff}).value;
      if (s != 0) out.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  out.insert(out.end(), rhs.terms_.begin() + static_cast<std::ptrdiff_t>(j), rhs.terms_.end());
  return from_sorted_terms(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  const PrimeField& F = ring_->field();
  for (auto& t : out.terms_) t.coeff = F.neg({t.coeff}).value;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  require_same_ring(rhs);
  if (is_zero() || rhs.is_zero()) return Polynomial(ring_);
  const PrimeField& F = ring_->field();
  std::vector<Term> prods;
  prods.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : rhs.terms_) prods.push_back({a.mono * b.mono, F.mul({a.coeff}, {b.coeff}).value});
  canonicalize(prods, F, ring_->order());
  return from_sorted_terms(ring_, std::move(prods));
}

Polynomial Polynomial::scale(FieldElement c) const {
  if (c.value == 0) return Polynomial(ring_);
  Polynomial out = *this;
  const PrimeField& F = ring_->field();
  for (auto& t : out.terms_) t.coeff = F.mul({t.coeff}, c).value;
  return out;
}

Polynomial Polynomial::mul_term(const Monomial& m, FieldElement c) const {
  if (c.value == 0) return Polynomial(ring_);
  Polynomial out = *this;
  const PrimeField& F = ring_->field();
  // Multiplying by a monomial preserves the order of terms.
  for (auto& t : out.terms_) {
    t.mono = t.mono * m;
    t.coeff = F.mul({t.coeff}, c).value;
  }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(ring_->field().inv({terms_.front().coeff}));
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->nvars()) throw InputError("derivative variable out of range");
  const PrimeField& F = ring_->field();
  std::vector<Term> out;
  const Monomial x = Monomial::variable(var);
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exponent(var);
    if (e == 0) continue;
    const std::uint32_t c = F.mul({t.coeff}, F.from_int(e)).value;
    if (c == 0) continue;
    out.push_back({t.mono / x, c});
  }
  // Dividing every surviving term by x keeps them distinct and in order.
  return from_sorted_terms(ring_, std::move(out));
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != ring_->nvars()) throw InputError("evaluation point has wrong length");
  const PrimeField& F = ring_->field();
  FieldElement acc{0};
  for (const auto& t : terms_) {
    FieldElement v{t.coeff};
    for (std::size_t i = 0; i < point.size(); ++i) {
      const unsigned e = t.mono.exponent(i);
      if (e) v = F.mul(v, F.pow_mod(point[i], e));
    }
    acc = F.add(acc, v);
  }
  return acc;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != ring_->nvars()) throw InputError("substitution needs one image per variable");
  if (images.empty()) throw InputError("substitution into a ring with no variables needs a target ring");
  const RingPtr& target = images.front().ring();
  for (const auto& img : images) {
    if (!(img.ring()->same_shape(*target))) throw InputError("substitution images live in different rings");
    if (!(img.ring()->field() == ring_->field())) throw InputError("substitution changes the coefficient field");
  }
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i].in_ring(target));
    return cache[e];
  };
  std::vector<Term> acc;
  const PrimeField& F = ring_->field();
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, 1).scale({t.coeff});
    for (std::size_t i = 0; i < images.size(); ++i) {
      const unsigned e = t.mono.exponent(i);
      if (e) prod = prod * power(i, e);
    }
    acc.insert(acc.end(), prod.terms_.begin(), prod.terms_.end());
  }
  canonicalize(acc, F, target->order());
  return from_sorted_terms(target, std::move(acc));
}

Polynomial Polynomial::in_ring(RingPtr target) const {
  if (target == ring_) return *this;
  if (!target->same_shape(*ring_)) throw InputError("target ring has a different shape");
  std::vector<Term> t = terms_;
  canonicalize(t, target->field(), target->order());
  return from_sorted_terms(std::move(target), std::move(t));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << '+';
    first = false;
    bool wrote = false;
    if (t.coeff != 1 || t.mono.is_one()) {
      os << t.coeff;
      wrote = true;
    }
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      const unsigned e = t.mono.exponent(i);
      if (!e) continue;
      if (wrote) os << '*';
      os << ring_->name(i);
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.ring_->same_shape(*b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

// ---------------------------------------------------------------------------

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring)) {}

PolyMatrix jacobian(std::span<const Polynomial> gens) {
  if (gens.empty()) throw InputError("jacobian of an empty list");
  const RingPtr& ring = gens.front().ring();
  PolyMatrix jac(ring, ring->nvars(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < ring->nvars(); ++i) jac(i, j) = gens[j].derivative(i);
  return jac;
}

namespace {

class MinorMemo {
 public:
  explicit MinorMemo(const PolyMatrix& m) : m_(m) {}

  // Determinant of the submatrix on the given row/column bitmasks
  // (equal popcounts), expanded along the first selected row.
  const Polynomial& det(std::uint32_t rows, std::uint32_t cols) {
    const std::uint64_t key = (std::uint64_t{rows} << 32) | cols;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Polynomial result(m_.ring());
    if (std::popcount(rows) == 1) {
      result = m_(static_cast<std::size_t>(std::countr_zero(rows)), static_cast<std::size_t>(std::countr_zero(cols)));
    } else {
      const std::size_t r0 = static_cast<std::size_t>(std::countr_zero(rows));
      const std::uint32_t rest_rows = rows & (rows - 1);
      bool negative = false;
      for (std::uint32_t cm = cols; cm; cm &= cm - 1) {
        const std::size_t c = static_cast<std::size_t>(std::countr_zero(cm));
        const Polynomial& entry = m_(r0, c);
        if (!entry.is_zero()) {
          const Polynomial& sub = det(rest_rows, cols & ~(1u << c));
          if (!sub.is_zero()) result = negative ? result - entry * sub : result + entry * sub;
        }
        negative = !negative;
      }
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  const PolyMatrix& m_;
  std::unordered_map<std::uint64_t, Polynomial> memo_;
};

void subsets(std::size_t n, std::size_t k, std::size_t start, std::uint32_t mask, std::vector<std::uint32_t>& out) {
  if (k == 0) {
    out.push_back(mask);
    return;
  }
  for (std::size_t i = start; i + k <= n; ++i) subsets(n, k - 1, i + 1, mask | (1u << i), out);
}

}  // namespace

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k) {
  if (k == 0 || k > std::min(m.rows(), m.cols())) throw InputError("minor size out of range");
  if (m.rows() > 32 || m.cols() > 32) throw InputError("minors supports at most 32 rows and columns");
  std::vector<std::uint32_t> row_sets, col_sets;
  subsets(m.rows(), k, 0, 0, row_sets);
  subsets(m.cols(), k, 0, 0, col_sets);
  MinorMemo memo(m);
  std::vector<Polynomial> out;
  out.reserve(row_sets.size() * col_sets.size());
  for (auto rs : row_sets)
    for (auto cs : col_sets) out.push_back(memo.det(rs, cs));
  return out;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  return minors(m, m.rows()).front();
}

// ---------------------------------------------------------------------------

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (!(i < j && j < n)) throw InputError("pair_index needs i < j < n");
  // Pairs starting with a < i come first: sum_{a<i} (n-1-a).
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

SkewMatrixSymbolic::SkewMatrixSymbolic(RingPtr ring, std::size_t n)
    : ring_(ring), n_(n), upper_(n * (n - 1) / 2, Polynomial(ring)) {}

SkewMatrixSymbolic SkewMatrixSymbolic::generic(RingPtr ring, std::size_t n) {
  if (ring->nvars() != n * (n - 1) / 2) throw InputError("generic skew matrix needs n(n-1)/2 variables");
  SkewMatrixSymbolic m(ring, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, Polynomial::variable(ring, pair_index(i, j, n)));
  return m;
}

std::size_t SkewMatrixSymbolic::upper_index(std::size_t i, std::size_t j) const { return pair_index(i, j, n_); }

Polynomial SkewMatrixSymbolic::entry(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw InputError("skew matrix index out of range");
  if (i == j) return Polynomial(ring_);
  if (i < j) return upper_[upper_index(i, j)];
  return -upper_[upper_index(j, i)];
}

void SkewMatrixSymbolic::set(std::size_t i, std::size_t j, Polynomial value) {
  if (!(i < j && j < n_)) throw InputError("set() takes an upper-triangular position");
  upper_[upper_index(i, j)] = std::move(value);
}

PolyMatrix SkewMatrixSymbolic::to_matrix() const {
  PolyMatrix out(ring_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = entry(i, j);
  return out;
}

Polynomial pfaffian(const SkewMatrixSymbolic& m, std::span<const std::size_t> indices) {
  if (indices.size() % 2 != 0) throw InputError("Pfaffian needs an even number of indices");
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= m.size()) throw InputError("Pfaffian index out of range");
    if (k && indices[k] <= indices[k - 1]) throw InputError("Pfaffian indices must be strictly increasing");
  }
  if (indices.empty()) return Polynomial::constant(m.ring(), 1);
  Polynomial acc(m.ring());
  std::vector<std::size_t> rest;
  for (std::size_t j = 1; j < indices.size(); ++j) {
    rest.clear();
    for (std::size_t k = 1; k < indices.size(); ++k)
      if (k != j) rest.push_back(indices[k]);
    const Polynomial term = m.entry(indices[0], indices[j]) * pfaffian(m, rest);
    acc = (j % 2 == 1) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace gpk
