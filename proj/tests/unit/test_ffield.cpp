#include <doctest.h>

#include <sstream>

#include "gpk/ffield.hpp"
#include "oracles.hpp"

using namespace gpk;

TEST_CASE("pow_mod") {
  const PrimeField F(103);
  CHECK(F.pow_mod({1}, 1'000'000'000).value == 1);
  CHECK(F.pow_mod({2}, 51).value == 1);
  CHECK(PrimeField(5).pow_mod({2}, 2).value == 4);
  CHECK(F.pow_mod({0}, 0).value == 1);
}

TEST_CASE("is_square matches the table of squares") {
  const PrimeField F7(7);
  for (std::uint32_t x : {1u, 2u, 4u}) CHECK(F7.is_square({x}));
  for (std::uint32_t x : {0u, 3u, 5u, 6u}) CHECK_FALSE(F7.is_square({x}));

  for (std::int64_t p : {3, 7, 11, 19, 23, 31, 103}) {
    const PrimeField F(p);
    const auto squares = oracle::nonzero_squares(p);
    for (std::int64_t x = 0; x < p; ++x) {
      CAPTURE(p);
      CAPTURE(x);
      CHECK(F.is_square(F.from_int(x)) == squares.contains(x));
    }
  }
  CHECK_FALSE(PrimeField(103).is_square({0}));
}

TEST_CASE("sqrt_3mod4") {
  const PrimeField F(103);
  CHECK(F.sqrt_3mod4({4}).value == 2);
  CHECK(F.sqrt_3mod4({1}).value == 1);
  CHECK(PrimeField(7).sqrt_3mod4({2}).value == 4);
  for (std::uint32_t x = 1; x < 103; ++x) {
    if (!F.is_square({x})) {
      CHECK_THROWS_AS(F.sqrt_3mod4({x}), DomainError);
      continue;
    }
    const FieldElement y = F.sqrt_3mod4({x});
    CHECK(F.mul(y, y).value == x);
  }
  CHECK_THROWS_AS(PrimeField(13).sqrt_3mod4({4}), DomainError);
}

TEST_CASE("field construction and representatives") {
  CHECK_THROWS_AS(PrimeField(1), InputError);
  CHECK_THROWS_AS(PrimeField(91), InputError);
  CHECK_THROWS_AS(PrimeField(std::uint64_t{1} << 31), InputError);
  CHECK(PrimeField(2).p() == 2);
  const PrimeField F(103);
  CHECK(F.from_int(-1).value == 102);
  CHECK(F.to_signed({102}) == -1);
  CHECK(F.to_signed({51}) == 51);
  CHECK(F.to_signed({52}) == -51);
  for (std::uint32_t x = 1; x < 103; ++x) CHECK(F.mul({x}, F.inv({x})).value == 1);
  CHECK_THROWS_AS(F.inv({0}), DomainError);
}

TEST_CASE("RandomState is a function of the seed") {
  RandomState a(42), b(42), c(43);
  std::vector<std::uint64_t> sa, sb, sc;
  for (int i = 0; i < 64; ++i) {
    sa.push_back(a.next_u64());
    sb.push_back(b.next_u64());
    sc.push_back(c.next_u64());
  }
  CHECK(sa == sb);
  CHECK(sa != sc);
  RandomState r(7);
  for (int i = 0; i < 1000; ++i) CHECK(r.uniform(103) < 103);
}

TEST_CASE("mat_inverse") {
  const PrimeField F7(7);
  CHECK(mat_inverse(MatrixFF::identity(F7, 4)).is_identity());
  const std::int64_t d[] = {2, 0, 0, 4};
  const std::int64_t e[] = {4, 0, 0, 2};
  CHECK(mat_inverse(MatrixFF::from_ints(F7, 2, 2, d)) == MatrixFF::from_ints(F7, 2, 2, e));

  const PrimeField F(103);
  RandomState rng(11);
  for (int i = 0; i < 20; ++i) {
    const MatrixFF m = MatrixFF::random_invertible(F, 6, rng);
    CHECK((m * mat_inverse(m)).is_identity());
    CHECK((mat_inverse(m) * m).is_identity());
  }
  const std::int64_t s[] = {1, 2, 2, 4};
  CHECK_THROWS_AS(mat_inverse(MatrixFF::from_ints(F, 2, 2, s)), DomainError);
}

TEST_CASE("rank and determinant against brute force") {
  const PrimeField F(7);
  RandomState rng(3);
  for (int i = 0; i < 30; ++i) {
    const MatrixFF m = MatrixFF::random(F, 4, 4, rng);
    oracle::IntMatrix im(4, std::vector<std::int64_t>(4));
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) im[r][c] = m(r, c).value;
    CHECK(mat_determinant(m).value == oracle::det_mod(im, 7));
    CHECK(mat_rank(m) == oracle::rank_mod(im, 7));
  }
}

TEST_CASE("gram_schmidt_orthogonal") {
  const PrimeField F(103);
  for (std::uint64_t seed : {1u, 2u, 42u}) {
    RandomState rng(seed);
    const MatrixFF t = gram_schmidt_orthogonal(F, 10, rng);
    CHECK((t.transpose() * t).is_identity());
  }
  RandomState one(5);
  const MatrixFF s = gram_schmidt_orthogonal(F, 1, one);
  CHECK((s(0, 0).value == 1 || s(0, 0).value == 102));

  RandomState a(42), b(42);
  CHECK(gram_schmidt_orthogonal(F, 10, a) == gram_schmidt_orthogonal(F, 10, b));
  RandomState c(1);
  CHECK_THROWS_AS(gram_schmidt_orthogonal(PrimeField(13), 3, c), DomainError);
}

TEST_CASE("matrix text format") {
  const PrimeField F(103);
  std::istringstream in("2 3\n-1 0 104\n 5 -52 7\n");
  const MatrixFF m = read_matrix(in, F);
  CHECK(m.rows() == 2);
  CHECK(m(0, 0).value == 102);
  CHECK(m(0, 2).value == 1);
  CHECK(m(1, 1).value == 51);
  std::ostringstream out;
  write_matrix(out, m);
  std::istringstream back(out.str());
  CHECK(read_matrix(back, F) == m);
  CHECK(matrix_sha256(m).size() == 64);

  std::istringstream short_input("2 2\n1 2 3\n");
  CHECK_THROWS_AS(read_matrix(short_input, F), InputError);
  std::istringstream junk("2 2\n1 x 3 4\n");
  CHECK_THROWS_AS(read_matrix(junk, F), InputError);
}

TEST_CASE("shipped orthogonal fixture") {
  const PrimeField F(103);
  const MatrixFF t = read_matrix_file(std::string(GPK_FIXTURE_DIR) + "/appendixB.txt", F);
  CHECK(t.rows() == 10);
  CHECK((t.transpose() * t).is_identity());
}
