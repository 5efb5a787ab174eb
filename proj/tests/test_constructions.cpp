#include <doctest.h>

#include "grass/constructions.hpp"
#include "grass/theorems.hpp"
#include "helpers.hpp"

using namespace grass;
using testutil::mat;

namespace {

int min_pairwise(const Field& f, const Cdc& c) {
  int best = 1 << 20;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      best = std::min(best, subspace_distance(f, c.members()[i], c.members()[j]));
  return best;
}

int cross_min(const Field& f, const Cdc& a, const Cdc& b) {
  int best = 1 << 20;
  for (const auto& u : a.members())
    for (const auto& v : b.members()) best = std::min(best, subspace_distance(f, u, v));
  return best;
}

Cdc lifted_mrd(const Field& f, int k, int n, int delta) { return lift(f, gabidulin(f, k, n - k, delta)); }

void check_profile(const SizeProfile& p, const std::vector<std::pair<BigCount, BigCount>>& expect) {
  const SizeProfile s = p.sorted();
  REQUIRE(s.runs.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(s.runs[i].size == expect[i].first);
    CHECK(s.runs[i].count == expect[i].second);
  }
}

}  // namespace

TEST_CASE("identifying vectors of the worked example") {
  const Field f(2);
  const Subspace u = Subspace::span(f, mat({{1, 0, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 0}}));
  CHECK(identifying_vector(f, u).str() == "10110");
  CHECK(inverse_identifying_vector(f, u).str() == "00111");
  CHECK(inverse_identifying_vector(f, u).kind == VecKind::Inverse);
  const Subspace lifted = Subspace::span(f, mat({{1, 0, 0, 1}, {0, 1, 1, 1}}));
  CHECK(identifying_vector(f, lifted).str() == "1100");
}

TEST_CASE("echelon Ferrers forms") {
  const EchelonLayout v = ferrers_of(IdVec::parse("10110"));
  CHECK(v.diagram.cols() == std::vector<int>{1, 3});
  CHECK(v.pivots == std::vector<int>{0, 2, 3});
  const EchelonLayout h = ferrers_of(IdVec::parse("00111", VecKind::Inverse));
  CHECK(h.diagram.rows() == 3);
  CHECK(h.diagram.columns() == 2);
  CHECK(h.diagram.is_full());
  CHECK(ferrers_of(IdVec::parse("0011")).diagram.dots() == 0);
}

TEST_CASE("lifting on a vector") {
  const Field f(2);
  const Cdc c = lift_on_vector(f, IdVec::parse("1100"), as_set(f, gabidulin(f, 2, 2, 2)));
  CHECK(c.size() == 4);
  CHECK(min_pairwise(f, c) == 4);
  for (const auto& m : c.members()) CHECK(identifying_vector(f, m).str() == "1100");

  const MatrixSet none{2, 2, 0, 1, {Matrix::Zero(2, 0)}};
  const Cdc e = lift_on_vector(f, IdVec::parse("0011"), none);
  REQUIRE(e.size() == 1);
  CHECK(identifying_vector(f, e.members()[0]).str() == "0011");

  const EchelonLayout l = ferrers_of(IdVec::parse("10110"));
  const MatrixSet zero{2, l.diagram.rows(), l.diagram.columns(), 1, {Matrix::Zero(l.diagram.rows(), l.diagram.columns())}};
  const Cdc z = lift_on_vector(f, IdVec::parse("10110"), zero);
  CHECK(z.members()[0].gen() == mat({{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}}));
}

TEST_CASE("multilevel construction") {
  const Field f(2);
  std::vector<std::pair<IdVec, FdrmCode>> entries;
  const IdVec a = IdVec::parse("1100"), b = IdVec::parse("0011");
  entries.emplace_back(a, optimal_fdrmc(f, ferrers_of(a).diagram, 2));
  const FerrersDiagram eb = ferrers_of(b).diagram;
  entries.emplace_back(b, FdrmCode{eb, zero_code(f, eb.rows(), eb.columns(), 2), true});
  const Cdc c = multilevel(f, entries, 2);
  CHECK(c.size() == 5);
  CHECK(min_pairwise(f, c) == 4);

  // one vector with an MRD code is the lifted MRD code
  const IdVec v = IdVec::parse("111000");
  std::vector<std::pair<IdVec, FdrmCode>> one;
  one.emplace_back(v, optimal_fdrmc(f, ferrers_of(v).diagram, 2));
  const Cdc m = multilevel(f, one, 2);
  const Cdc l = lifted_mrd(f, 3, 6, 2);
  CHECK(m.size() == l.size());
  for (const auto& s : m.members()) CHECK(l.contains(s));

  try {
    make_cwc({IdVec::parse("1100"), IdVec::parse("1010")}, 4);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotACwc);
  }
}

TEST_CASE("hamming guard") {
  CHECK(hamming_guard(IdVec::parse("10110"), IdVec::parse("10110")) == 0);
  CHECK(hamming_guard(IdVec::parse("1100"), IdVec::parse("0011")) == 4);
  try {
    hamming_guard(IdVec::parse("110"), IdVec::parse("0011"));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LengthMismatch);
  }
}

TEST_CASE("phi embedding") {
  const Field f(2);
  const Matrix b = mat({{1, 1, 0, 0, 1, 0}, {0, 1, 0, 1, 1, 1}, {0, 0, 0, 0, 1, 1}});
  const Matrix fm = mat({{1, 1, 0}, {0, 0, 0}, {1, 0, 1}, {0, 0, 1}});
  const Matrix expect = mat({{0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 1}, {0, 0, 0, 0, 0, 1}});
  CHECK(phi_embed(f, b, fm) == expect);
  CHECK(phi_embed(f, rref(f, b).reduced, fm) == expect);

  const Matrix ix = mat({{1, 0, 1, 1}, {0, 1, 0, 1}});
  const Matrix g = mat({{1, 0}, {1, 1}, {0, 1}});
  Matrix want = Matrix::Zero(3, 4);
  want.rightCols(2) = g;
  CHECK(phi_embed(f, ix, g) == want);
  CHECK(phi_embed(f, ix, Matrix::Zero(2, 2)) == Matrix::Zero(2, 4));
  try {
    phi_embed(f, mat({{0, 1, 0}, {1, 0, 0}}), Matrix::Zero(1, 1));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotRref);
  }
}

TEST_CASE("coset construction, tiny instance") {
  const Field f(2);
  CdcList a, b;
  a.lists = {lifted_mrd(f, 2, 4, 2)};
  b.lists = {lifted_mrd(f, 2, 4, 2)};
  a.intra_d = b.intra_d = 4;
  a.inter_d = b.inter_d = 2;
  const MatrixSet h = as_set(f, gabidulin(f, 2, 2, 2));
  const CosetResult r = coset_construction(f, a, b, h);
  CHECK(r.code.size() == h.size() * a.lists[0].size() * b.lists[0].size());
  CHECK(r.code.n() == 8);
  CHECK(r.code.k() == 4);
  CHECK(min_pairwise(f, r.code) >= 4);

  const MatrixSet zero{2, 2, 2, 2, {Matrix::Zero(2, 2)}};
  const CosetResult z = coset_construction(f, a, b, zero);
  CHECK(z.code.size() == 16);
  for (const auto& s : z.code.members()) {
    CHECK(s.gen().topRightCorner(2, 4) == Matrix::Zero(2, 4));
    CHECK(s.gen().bottomLeftCorner(2, 4) == Matrix::Zero(2, 4));
  }
}

TEST_CASE("coset construction truncates to the shorter list") {
  const Field f(2);
  CdcList a, b;
  a.lists = {lifted_mrd(f, 2, 4, 2), lift_on_vector(f, IdVec::parse("0011"), MatrixSet{2, 2, 0, 1, {Matrix::Zero(2, 0)}})};
  b.lists = {lifted_mrd(f, 2, 4, 2)};
  a.intra_d = b.intra_d = 4;
  const CosetResult r = coset_construction(f, a, b, MatrixSet{2, 2, 2, 2, {Matrix::Zero(2, 2)}});
  CHECK(r.used == 1);
  CHECK(r.truncated_a == 1);
  CHECK(r.truncated_b == 0);
}

TEST_CASE("parallel linkage, tiny instance") {
  const Field f(2);
  const Cdc u = lifted_mrd(f, 2, 4, 2);
  const MatrixSet m1 = as_set(f, gabidulin(f, 2, 4, 2));
  const MatrixSet m2{2, 2, 4, 2, {Matrix::Zero(2, 4)}};
  const Cdc c = parallel_linkage(f, u, u, m1, m2);
  CHECK(c.size() == u.size() * m1.size() + u.size());
  CHECK(min_pairwise(f, c) >= 4);
  // the {0} branch is U2 embedded on the right
  int right = 0;
  for (const auto& s : c.members())
    if (s.gen().leftCols(4) == Matrix::Zero(2, 4)) ++right;
  CHECK(right == static_cast<int>(u.size()));
}

TEST_CASE("reorder pairing") {
  const std::vector<BigCount> a{5, 1, 3}, b{2, 7};
  const IndexPairing p = reorder_pairing(a, b);
  CHECK(p.total == 5 * 7 + 3 * 2);
  REQUIRE(p.pairs.size() == 2);
  CHECK(p.pairs[0] == std::pair<std::size_t, std::size_t>{0, 1});

  const std::vector<BigCount> same{4, 4, 4};
  CHECK(reorder_pairing(same, same).total == 48);

  // the A list of the (17,6,8) example against its B list, at several q
  for (int q : {2, 3, 5, 7}) {
    const InsertRecipe r = example5_recipe();
    const RunPairing rp = reorder_pairing(list_profile(q, r.a), list_profile(q, r.b));
    const Polynomial recomputed{{1, 16}, {1, 13}, {1, 10}, {3, 9}, {1, 8}, {2, 7}, {3, 6}, {2, 5}, {1, 4}, {1, 0}};
    CHECK(rp.total == evaluate(recomputed, q));
  }
}

TEST_CASE("coset profiles reproduce the list tables") {
  for (int q : {2, 3, 4}) {
    const Field f(q);
    const BigCount q5 = ipow(q, 5), q10 = ipow(q, 10);
    const CwcSet x1 = parse_cwc({"111110000", "000011111"}, 8);
    check_profile(coset_profile(f, {x1}, 4, 2), {{q5 + 1, 1}, {q5, q10 - 1}});
    const CwcSet xh = parse_cwc({"000011111", "111110000"}, 8, VecKind::Inverse);
    check_profile(coset_profile(f, {xh}, 4, 2), {{q5 + 1, 1}, {q5, q10 - 1}});
    const CwcSet single = parse_cwc({"000001111"}, 8, VecKind::Inverse);
    check_profile(coset_profile(f, {single}, 4, 2, 0), {{1, 1}});
  }
}

TEST_CASE("vector cosets") {
  const Field f(2);
  const VectorCosets v = vector_cosets(f, IdVec::parse("111110000"), 4, 2);
  CHECK(v.d_v == 32);
  CHECK(v.s_v == 1024);
  const VectorCosets e = vector_cosets(f, IdVec::parse("000011111"), 4, 2);
  CHECK(e.d_v == 1);
  CHECK(e.s_v == 1);
}

TEST_CASE("count mode equals build mode") {
  for (int q : {2, 3}) {
    const Field f(q);
    const ParallelRecipe r = tiny_parallel_recipe();
    for (const ListRecipe* l : {&r.a, &r.b, &r.ahat, &r.bhat}) {
      const CdcList built = list_build(f, *l);
      const SizeProfile counted = list_profile(q, *l).sorted(), seen = profile_of(built).sorted();
      REQUIRE(counted.runs.size() == seen.runs.size());
      for (std::size_t i = 0; i < seen.runs.size(); ++i) {
        CHECK(counted.runs[i].size == seen.runs[i].size);
        CHECK(counted.runs[i].count == seen.runs[i].count);
      }
    }
  }
}

TEST_CASE("built lists have their fixed distances") {
  const Field f(2);
  const ParallelRecipe r = tiny_parallel_recipe();
  const CdcList b = list_build(f, r.b);
  CHECK(b.intra_d == 4);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.lists[i].size() > 1) CHECK(min_pairwise(f, b.lists[i]) >= b.intra_d);
    for (std::size_t j = i + 1; j < b.size(); ++j) CHECK(cross_min(f, b.lists[i], b.lists[j]) >= b.inter_d);
  }
  const CdcList ah = list_build(f, r.ahat);
  for (const auto& c : ah.lists)
    for (const auto& s : c.members()) CHECK(inverse_identifying_vector(f, s).str() == "0011");
}
