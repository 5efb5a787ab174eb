#include <doctest.h>

#include "grass/linalg.hpp"
#include "helpers.hpp"

using namespace grass;
using testutil::mat;

TEST_CASE("rref basics") {
  const Field f(2);
  const Matrix id = Matrix::Identity(3, 3);
  const Echelon e = rref(f, id);
  CHECK(e.reduced == id);
  CHECK(e.pivots == std::vector<int>{0, 1, 2});

  // E(U) of the worked example: already reduced, pivots 1,3,4 (1-based)
  const Matrix eu = mat({{1, 0, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 0}});
  const Echelon r = rref(f, eu);
  CHECK(r.reduced == eu);
  CHECK(r.pivots == std::vector<int>{0, 2, 3});
  CHECK(is_rref(f, eu));
}

TEST_CASE("rrief") {
  const Field f(2);
  const Matrix eu = mat({{1, 0, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 0}});
  const Matrix ehat = mat({{1, 0, 0, 0, 1}, {0, 0, 0, 1, 0}, {1, 0, 1, 0, 0}});
  const Echelon r = rrief(f, eu);
  CHECK(r.reduced == ehat);
  CHECK(r.pivots == std::vector<int>{4, 3, 2});
  const Echelon s = rrief(f, ehat);
  CHECK(s.reduced == ehat);

  const Echelon i = rrief(f, Matrix::Identity(3, 3));
  CHECK(i.pivots == std::vector<int>{2, 1, 0});
  CHECK(i.reduced == mat({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST_CASE("rrief spans the rref row space") {
  std::mt19937_64 rng(11);
  for (int q : {2, 3, 4}) {
    const Field f(q);
    for (int t = 0; t < 100; ++t) {
      const Matrix m = testutil::random_matrix(rng, q, 3, 5);
      CHECK(Subspace::span(f, rrief(f, m).reduced) == Subspace::span(f, m));
    }
  }
}

TEST_CASE("rank") {
  const Field f(2);
  CHECK(rank(f, Matrix::Zero(3, 4)) == 0);
  CHECK(rank(f, Matrix::Identity(4, 4)) == 4);
  CHECK(rank(f, mat({{1, 1, 0}, {0, 0, 0}, {1, 0, 1}, {0, 0, 1}})) == 3);
  std::mt19937_64 rng(3);
  for (int q : {2, 3, 5}) {
    const Field fq(q);
    for (int t = 0; t < 50; ++t) {
      const Matrix m = testutil::random_matrix(rng, q, 3, 4);
      CHECK(rank(fq, m) == testutil::span_log(fq, m));
    }
  }
}

TEST_CASE("subspace distance") {
  const Field f(2);
  const auto e = [](std::initializer_list<int> ones) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(ones.size()), 4);
    int r = 0;
    for (int c : ones) m(r++, c) = 1;
    return m;
  };
  const Subspace u = Subspace::span(f, e({0, 1}));
  CHECK(subspace_distance(f, u, u) == 0);
  CHECK(subspace_distance(f, u, Subspace::span(f, e({2, 3}))) == 4);
  CHECK(subspace_distance(f, u, Subspace::span(f, e({0, 2}))) == 2);
}

TEST_CASE("subspace canonical form") {
  const Field f(3);
  const Matrix a = mat({{1, 2, 0}, {0, 1, 1}});
  const Matrix b = mat({{1, 0, 1}, {2, 1, 0}});  // same span
  CHECK(Subspace::span(f, a) == Subspace::span(f, b));
  CHECK(Subspace::span(f, a).k() == 2);
  try {
    Subspace::from_rref(f, a);
    FAIL("accepted a non-RREF generator");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NotRref);
  }
}

TEST_CASE("gaussian binomials against enumeration") {
  CHECK(gaussian_binomial(5, 0, 2) == 1);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(3, 2, 2) == 7);
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      const Field f(2);
      CHECK(BigCount(enumerate_grassmannian(f, n, k).size()) == gaussian_binomial(n, k, 2));
    }
  CHECK(BigCount(enumerate_grassmannian(Field(3), 4, 2).size()) == gaussian_binomial(4, 2, 3));
}

TEST_CASE("field matrix helpers") {
  const Field f(3);
  const Matrix a = mat({{1, 2}, {0, 1}}), b = mat({{2, 2}, {1, 0}});
  CHECK(add(f, a, b) == mat({{0, 1}, {1, 1}}));
  CHECK(sub(f, add(f, a, b), b) == a);
  CHECK(mul(f, a, b) == mat({{1, 2}, {1, 0}}));
  CHECK(scale(f, 2, a) == mat({{2, 1}, {0, 2}}));
  const Matrix ns = nullspace(f, mat({{1, 1, 1}}));
  CHECK(ns.rows() == 2);
  CHECK(mul(f, mat({{1, 1, 1}}), ns.transpose()) == Matrix::Zero(1, 2));
}
