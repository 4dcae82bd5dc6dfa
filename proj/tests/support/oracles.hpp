#pragma once

// Brute-force reference computations for the tests. Everything here works on
// plain integers mod p and shares no code with the library's algorithms.

#include <array>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using Pluecker = std::array<std::int64_t, 10>;

std::int64_t mod(std::int64_t x, std::int64_t p);
std::int64_t inverse_mod(std::int64_t x, std::int64_t p);

// {y^2 mod p : y != 0}.
std::set<std::int64_t> nonzero_squares(std::int64_t p);

// Leibniz expansion over all permutations.
std::int64_t det_mod(const IntMatrix& m, std::int64_t p);
std::size_t rank_mod(IntMatrix m, std::int64_t p);
IntMatrix inverse_mod(const IntMatrix& m, std::int64_t p);
IntMatrix transpose(const IntMatrix& m);

// 5x5 skew matrix from lexicographically ordered pair coordinates.
IntMatrix skew_from_pairs(const Pluecker& x, std::int64_t p);
Pluecker wedge(const std::array<std::int64_t, 5>& u, const std::array<std::int64_t, 5>& v, std::int64_t p);
Pluecker apply(const IntMatrix& h, const Pluecker& x, std::int64_t p);
// Scaled so that the first nonzero entry is 1.
Pluecker normalize(Pluecker x, std::int64_t p);

// The distinct points of Gr(2,5)(F_q), from all ordered independent pairs.
std::set<Pluecker> grassmannian_by_pairs(std::int64_t q);

// |{A in Gr(2,5)(F_q) : omega(A) = 0}| by ordered pairs (u, v), divided by |GL_2(F_q)|.
std::uint64_t section_count_by_pairs(std::int64_t q, const IntMatrix& omega);

// #{decomposable x : h x decomposable}.
std::uint64_t rank2_count_by_pairs(std::int64_t q, const IntMatrix& h);

// Incidence pairs (x, y): x decomposable, g^T y decomposable, y.x = 0, with y
// produced as g^{-T} z over decomposable z.
std::uint64_t incidence_count_by_pairs(std::int64_t q, const IntMatrix& g);

// Number of semistandard Young tableaux of shape lambda (nonnegative,
// nonincreasing) with entries in 1..n.
std::uint64_t ssyt_count(const std::vector<int>& lambda, int n);

}  // namespace oracle
