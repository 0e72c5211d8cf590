#include "zerocyc/snf.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace zerocyc;
using namespace zerocyc::exactalg;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim = 8) {
  std::uniform_int_distribution<int> dim(1, static_cast<int>(max_dim));
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
  return m;
}

void check_decomposition(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  CHECK(s.u * a * s.v == s.d);
  Int du = determinant(s.u);
  Int dv = determinant(s.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) {
    CHECK(s.invariant_factors[i] > 0);
    if (i > 0)
      CHECK(s.invariant_factors[i] % s.invariant_factors[i - 1] == 0);
  }
  // D diagonal, nonzero exactly on the invariant factors
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j) {
      if (i == j && i < s.invariant_factors.size())
        CHECK(s.d(i, j) == s.invariant_factors[i]);
      else
        CHECK(s.d(i, j) == 0);
    }
  CHECK(s.invariant_factors.size() == testsupport::elimination_rank(a));
}

}  // namespace

TEST_CASE("smith normal form of the identity") {
  SmithDecomposition s = smith_normal_form(IntMatrix::identity(3));
  CHECK(s.d == IntMatrix::identity(3));
  CHECK(s.invariant_factors == std::vector<Int>{1, 1, 1});
}

TEST_CASE("smith normal form of diag(2,3)") {
  SmithDecomposition s =
      smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(s.invariant_factors == std::vector<Int>{1, 6});
}

TEST_CASE("rank basics") {
  CHECK(rank(IntMatrix(4, 4)) == 0);
  CHECK(rank(IntMatrix::identity(5)) == 5);
  CHECK(rank(IntMatrix(0, 3)) == 0);
  CHECK(rank(IntMatrix(3, 0)) == 0);
}

TEST_CASE("rank of 50 random 6x8 matrices matches the elimination oracle") {
  std::mt19937_64 rng(20061u);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int t = 0; t < 50; ++t) {
    IntMatrix m(6, 8);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 8; ++j) m(i, j) = entry(rng);
    CHECK(rank(m) == testsupport::elimination_rank(m));
  }
}

TEST_CASE("decomposition properties on random matrices") {
  std::mt19937_64 rng(8471u);
  for (int t = 0; t < 300; ++t) check_decomposition(random_matrix(rng));
}

TEST_CASE("determinism") {
  std::mt19937_64 rng(99u);
  IntMatrix m = random_matrix(rng);
  SmithDecomposition s1 = smith_normal_form(m);
  SmithDecomposition s2 = smith_normal_form(m);
  CHECK(s1.u == s2.u);
  CHECK(s1.d == s2.d);
  CHECK(s1.v == s2.v);
  CHECK(s1.invariant_factors == s2.invariant_factors);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(IntMatrix::identity(4)).cols() == 0);

  IntMatrix row = IntMatrix::from_rows({{1, -1}});
  IntMatrix k = kernel_basis(row);
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == k(1, 0));
  CHECK((k(0, 0) == 1 || k(0, 0) == -1));

  std::mt19937_64 rng(314u);
  for (int t = 0; t < 200; ++t) {
    IntMatrix m = random_matrix(rng);
    IntMatrix basis = kernel_basis(m);
    CHECK(basis.cols() == m.cols() - rank(m));
    CHECK((m * basis).is_zero());
    if (basis.cols() > 0) {
      // Saturated: the basis columns generate a direct summand.
      SmithDecomposition s = smith_normal_form(basis);
      REQUIRE(s.invariant_factors.size() == basis.cols());
      for (const Int& f : s.invariant_factors) CHECK(f == 1);
    }
  }
}

TEST_CASE("cokernel shapes") {
  CokernelShape zero_map = cokernel_shape(IntMatrix(3, 2));
  CHECK(zero_map.free_rank == 3);
  CHECK(zero_map.torsion.empty());

  CokernelShape two = cokernel_shape(IntMatrix::from_rows({{2}}));
  CHECK(two.free_rank == 0);
  CHECK(two.torsion == std::vector<Int>{2});
}

TEST_CASE("spans_full_lattice") {
  CHECK(spans_full_lattice(IntMatrix::identity(3)));
  CHECK_FALSE(spans_full_lattice(IntMatrix::from_rows({{2, 0}, {0, 1}})));
  CHECK(spans_full_lattice(IntMatrix(0, 0)));  // empty codomain

  std::mt19937_64 rng(2718u);
  for (int t = 0; t < 200; ++t) {
    IntMatrix m = random_matrix(rng);
    CokernelShape c = cokernel_shape(m);
    CHECK(spans_full_lattice(m) == (c.free_rank == 0 && c.torsion.empty()));
  }
}

TEST_CASE("determinant cross-check") {
  CHECK(determinant(IntMatrix::identity(4)) == 1);
  CHECK(determinant(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(IntMatrix::from_rows({{2, 0}, {0, 3}})) == 6);
  CHECK(determinant(IntMatrix(3, 3)) == 0);
}
