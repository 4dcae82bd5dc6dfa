#include "gpk/ffield.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace gpk {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) throw InputError("modulus must be below 2^31");
  if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
  p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t PrimeField::sqrt_exponent() const {
  if (!is_3_mod_4()) throw DomainError("square roots need p = 3 mod 4, got p = " + std::to_string(p_));
  return (p_ + 1) / 4;
}

FieldElement PrimeField::from_int(std::int64_t x) const {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

std::int64_t PrimeField::to_signed(FieldElement x) const {
  return x.value > p_ / 2 ? static_cast<std::int64_t>(x.value) - p_ : x.value;
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.value == 0) throw DomainError("inverse of zero");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.value;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  return from_int(t);
}

FieldElement PrimeField::pow_mod(FieldElement x, std::uint64_t e) const {
  std::uint64_t base = x.value % p_;
  std::uint64_t acc = 1 % p_;
  while (e != 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return {static_cast<std::uint32_t>(acc)};
}

bool PrimeField::is_square(FieldElement x) const {
  if (p_ == 2) return x.value == 1;
  return pow_mod(x, half_order()).value == 1;
}

FieldElement PrimeField::sqrt_3mod4(FieldElement x) const {
  const std::uint32_t e = sqrt_exponent();
  if (!is_square(x)) throw DomainError(std::to_string(x.value) + " is not a nonzero square mod " + std::to_string(p_));
  return pow_mod(x, e);
}

// ---------------------------------------------------------------------------

namespace {
std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace

RandomState::RandomState(std::uint64_t seed) : seed_(seed) {
  std::uint64_t s = seed;
  state_ = splitmix64(s);
  if (state_ == 0) state_ = 0x2545F4914F6CDD1DULL;
}

std::uint64_t RandomState::next_u64() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t RandomState::uniform(std::uint64_t bound) {
  if (bound == 0) throw InputError("uniform(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

// ---------------------------------------------------------------------------

MatrixFF::MatrixFF(const PrimeField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
}

MatrixFF MatrixFF::identity(const PrimeField& field, std::size_t n) {
  MatrixFF m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = {1};
  return m;
}

MatrixFF MatrixFF::random(const PrimeField& field, std::size_t rows, std::size_t cols, RandomState& rng) {
  MatrixFF m(field, rows, cols);
  for (auto& x : m.data_) x = rng.element(field);
  return m;
}

MatrixFF MatrixFF::random_invertible(const PrimeField& field, std::size_t n, RandomState& rng) {
  while (true) {
    MatrixFF m = random(field, n, n, rng);
    if (mat_rank(m) == n) return m;
  }
}

MatrixFF MatrixFF::from_ints(const PrimeField& field, std::size_t rows, std::size_t cols,
                             std::span<const std::int64_t> entries) {
  if (entries.size() != rows * cols) throw InputError("entry count does not match matrix shape");
  MatrixFF m(field, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = field.from_int(entries[i]);
  return m;
}

MatrixFF MatrixFF::transpose() const {
  MatrixFF t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

MatrixFF MatrixFF::operator*(const MatrixFF& rhs) const {
  if (cols_ != rhs.rows_ || !(field_ == rhs.field_)) throw InputError("matrix product shape or field mismatch");
  MatrixFF out(field_, rows_, rhs.cols_);
  const std::uint64_t p = field_.p();
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        acc = (acc + std::uint64_t{(*this)(r, k).value} * rhs(k, c).value) % p;
      }
      out(r, c) = {static_cast<std::uint32_t>(acc)};
    }
  }
  return out;
}

std::vector<FieldElement> MatrixFF::apply(std::span<const FieldElement> column) const {
  if (column.size() != cols_) throw InputError("vector length does not match matrix");
  std::vector<FieldElement> out(rows_);
  const std::uint64_t p = field_.p();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) acc = (acc + std::uint64_t{(*this)(r, k).value} * column[k].value) % p;
    out[r] = {static_cast<std::uint32_t>(acc)};
  }
  return out;
}

bool MatrixFF::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c).value != (r == c ? 1u : 0u)) return false;
  return true;
}

namespace {

// Row-reduces `m` in place, mirroring every row operation on `aug` when
// given. Returns the pivot columns.
std::vector<std::size_t> row_reduce(MatrixFF& m, MatrixFF* aug) {
  const PrimeField& F = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).value == 0) ++piv;
    if (piv == m.rows()) continue;
    auto swap_rows = [&](MatrixFF& a) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(piv, c));
    };
    if (piv != row) {
      swap_rows(m);
      if (aug) swap_rows(*aug);
    }
    const FieldElement inv = F.inv(m(row, col));
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = F.mul(m(row, c), inv);
    if (aug)
      for (std::size_t c = 0; c < aug->cols(); ++c) (*aug)(row, c) = F.mul((*aug)(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).value == 0) continue;
      const FieldElement f = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = F.sub(m(r, c), F.mul(f, m(row, c)));
      if (aug)
        for (std::size_t c = 0; c < aug->cols(); ++c) (*aug)(r, c) = F.sub((*aug)(r, c), F.mul(f, (*aug)(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

MatrixFF mat_inverse(const MatrixFF& m) {
  if (!m.is_square()) throw InputError("inverse of a non-square matrix");
  MatrixFF work = m;
  MatrixFF inv = MatrixFF::identity(m.field(), m.rows());
  if (row_reduce(work, &inv).size() != m.rows()) throw DomainError("matrix is singular");
  return inv;
}

std::size_t mat_rank(const MatrixFF& m) {
  MatrixFF work = m;
  return row_reduce(work, nullptr).size();
}

FieldElement mat_determinant(const MatrixFF& m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  const PrimeField& F = m.field();
  MatrixFF a = m;
  const std::size_t n = m.rows();
  FieldElement det{1};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).value == 0) ++piv;
    if (piv == n) return {0};
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(piv, c));
      det = F.neg(det);
    }
    det = F.mul(det, a(col, col));
    const FieldElement inv = F.inv(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).value == 0) continue;
      const FieldElement f = F.mul(a(r, col), inv);
      for (std::size_t c = col; c < n; ++c) a(r, c) = F.sub(a(r, c), F.mul(f, a(col, c)));
    }
  }
  return det;
}

// ---------------------------------------------------------------------------

MatrixFF gram_schmidt_orthogonal(const PrimeField& field, std::size_t dim, RandomState& rng, GramSchmidtOptions opts) {
  field.sqrt_exponent();  // throws unless p = 3 mod 4
  if (dim == 0) throw InputError("dimension must be positive");
  const PrimeField& F = field;
  using Vec = std::vector<FieldElement>;
  auto dot = [&](const Vec& a, const Vec& b) {
    FieldElement acc{0};
    for (std::size_t i = 0; i < a.size(); ++i) acc = F.add(acc, F.mul(a[i], b[i]));
    return acc;
  };

  std::vector<Vec> basis;
  std::vector<FieldElement> norms;
  for (std::size_t i = 0; i < dim; ++i) {
    bool accepted = false;
    for (std::size_t attempt = 0; attempt < opts.max_retries_per_vector; ++attempt) {
      Vec v(dim);
      for (auto& x : v) x = rng.element(F);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        // v <- v - (v.u / u.u) u
        const FieldElement coeff = F.mul(dot(v, basis[j]), F.inv(norms[j]));
        for (std::size_t k = 0; k < dim; ++k) v[k] = F.sub(v[k], F.mul(coeff, basis[j][k]));
      }
      const FieldElement n = dot(v, v);
      if (!F.is_square(n)) continue;
      basis.push_back(std::move(v));
      norms.push_back(n);
      accepted = true;
      break;
    }
    if (!accepted) {
      throw ResourceError("Gram-Schmidt: no vector with square norm after " +
                          std::to_string(opts.max_retries_per_vector) + " tries (vector " + std::to_string(i + 1) + ")");
    }
  }

  MatrixFF t(F, dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const FieldElement scale = F.inv(F.sqrt_3mod4(norms[c]));
    for (std::size_t r = 0; r < dim; ++r) t(r, c) = F.mul(scale, basis[c][r]);
  }
  return t;
}

// ---------------------------------------------------------------------------

MatrixFF read_matrix(std::istream& in, const PrimeField& field) {
  long long rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows <= 0 || cols <= 0) throw InputError("matrix header must be two positive integers");
  std::vector<std::int64_t> entries;
  entries.reserve(static_cast<std::size_t>(rows * cols));
  for (long long i = 0; i < rows * cols; ++i) {
    long long x;
    if (!(in >> x)) throw InputError("matrix body ended after " + std::to_string(i) + " entries");
    entries.push_back(x);
  }
  std::string extra;
  if (in >> extra) throw InputError("trailing data after matrix body: '" + extra + "'");
  return MatrixFF::from_ints(field, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), entries);
}

MatrixFF read_matrix_file(const std::string& path, const PrimeField& field) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file '" + path + "'");
  return read_matrix(in, field);
}

void write_matrix(std::ostream& out, const MatrixFF& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m.field().to_signed(m(r, c));
    }
    out << '\n';
  }
}

std::string format_matrix(const MatrixFF& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

std::string matrix_sha256(const MatrixFF& m) {
  const std::string text = "p=" + std::to_string(m.field().p()) + "\n" + format_matrix(m);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

}  // namespace gpk
