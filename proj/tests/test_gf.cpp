#include <doctest.h>

#include <set>

#include "grass/gf.hpp"
#include "grass/linalg.hpp"
#include "helpers.hpp"

using namespace grass;

TEST_CASE("supported orders") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) CHECK(supported_order(q));
  for (int q : {0, 1, 6, 10, 11, 16}) CHECK_FALSE(supported_order(q));
  try {
    Field f(6);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedOrder);
  }
}

TEST_CASE("field axioms exhaustively") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const Field f(q);
    for (int a = 0; a < q; ++a) {
      const Elem x = static_cast<Elem>(a);
      CHECK(f.add(x, 0) == x);
      CHECK(f.mul(x, 1) == x);
      CHECK(f.add(x, f.neg(x)) == 0);
      if (a) CHECK(f.mul(x, f.inv(x)) == 1);
      for (int b = 0; b < q; ++b) {
        const Elem y = static_cast<Elem>(b);
        CHECK(f.add(x, y) == f.add(y, x));
        CHECK(f.mul(x, y) == f.mul(y, x));
        CHECK(f.sub(f.add(x, y), y) == x);
        for (int c = 0; c < q; ++c) {
          const Elem z = static_cast<Elem>(c);
          CHECK(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
          CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
          CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
        }
      }
    }
  }
}

TEST_CASE("small field facts") {
  const Field f2(2);
  CHECK(f2.add(1, 1) == 0);
  // GF(4) with t^2 + t + 1: element 2 is t, 3 is t + 1
  const Field f4(4);
  CHECK(f4.mul(2, 2) == 3);
  for (int q : {3, 4, 5, 7, 8, 9}) {
    const Field f(q);
    std::set<int> seen;
    for (int i = 0; i < q - 1; ++i) seen.insert(f.exp(i));
    CHECK(static_cast<int>(seen.size()) == q - 1);
    for (int a = 1; a < q; ++a) CHECK(f.exp(f.log(static_cast<Elem>(a))) == a);
  }
}

TEST_CASE("extension fields") {
  const Field f2(2);
  const ExtField g8(f2, 3);
  CHECK(g8.order() == 8);
  CHECK(is_irreducible(f2, std::vector<Elem>(g8.modulus().begin(), g8.modulus().end())));
  // x generates GF(8)^*: order 7
  ExtElem p = g8.one();
  int order = 0;
  do {
    p = g8.mul(p, g8.x());
    ++order;
  } while (!(p == g8.one()));
  CHECK(order == 7);

  const ExtField g9(Field(3), 2);
  for (std::uint64_t i = 1; i < g9.order(); ++i) CHECK(g9.pow(g9.from_index(i), 8) == g9.one());

  const ExtField g2(f2, 1);
  CHECK(g2.order() == 2);
  CHECK(g2.mul(g2.one(), g2.one()) == g2.one());
}

TEST_CASE("frobenius") {
  const Field f2(2);
  const ExtField g4(f2, 2), g8(f2, 3);
  const ExtElem x = g4.x();
  CHECK(frobenius(g4, x, 1) == g4.mul(x, x));
  for (std::uint64_t i = 0; i < g8.order(); ++i) {
    const ExtElem a = g8.from_index(i);
    CHECK(frobenius(g8, a, 0) == a);
    CHECK(frobenius(g8, a, 3) == a);
  }
  // x -> x^q composed m times is the identity
  for (auto [q, m] : {std::pair{2, 4}, std::pair{3, 3}, std::pair{4, 2}, std::pair{5, 2}}) {
    const ExtField g(Field(q), m);
    for (std::uint64_t i = 0; i < g.order(); ++i) {
      ExtElem a = g.from_index(i), b = a;
      for (int s = 0; s < m; ++s) b = frobenius(g, b, 1);
      CHECK(b == a);
    }
  }
}

TEST_CASE("expand_rows") {
  const Field f3(3);
  const ExtField g(f3, 3);
  CHECK(expand_rows(g, {g.zero(), g.zero()}) == Matrix::Zero(3, 2));
  const Matrix e = expand_rows(g, {g.basis(0)});
  CHECK(e == testutil::mat({{1}, {0}, {0}}));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(0, g.order() - 1);
  for (int t = 0; t < 100; ++t) {
    const ExtElem u = g.from_index(pick(rng)), v = g.from_index(pick(rng));
    CHECK(expand_rows(g, {g.add(u, v)}) == add(f3, expand_rows(g, {u}), expand_rows(g, {v})));
  }
  std::vector<ExtElem> basis;
  for (int l = 0; l < 3; ++l) basis.push_back(g.basis(l));
  CHECK(rank(f3, expand_rows(g, basis)) == 3);
}
