#include <doctest.h>

#include "grass/theorems.hpp"
#include "helpers.hpp"

using namespace grass;

namespace {

Polynomial P(std::initializer_list<std::pair<long long, int>> t) {
  Polynomial p;
  for (auto [c, e] : t) p.push_back({c, e});
  return normalize(p);
}

long long coeff_sum(const Polynomial& p) {
  long long s = 0;
  for (const auto& t : p) s += t.coeff;
  return s;
}

template <class F>
Errc error_of(F f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::BadArguments;
}

}  // namespace

TEST_CASE("polynomials") {
  const Polynomial p = normalize({{1, 2}, {2, 5}, {1, 2}, {0, 7}, {1, 0}});
  CHECK(to_string(p) == "2q^5 + 2q^2 + 1");
  CHECK(evaluate(p, 3) == 2 * 243 + 2 * 9 + 1);
  CHECK(to_string(P({{1, 1}})) == "q");
  CHECK(to_string(P({{1, 3}}) + P({{1, 3}})) == "2q^3");
  CHECK(to_string(Polynomial{}) == "0");
}

TEST_CASE("identifying-vector family") {
  const CwcSet a = th41_cwc(19, 9, 4);
  CHECK(a.vectors.size() == 4);
  CHECK(a.min_hd >= 8);
  const CwcSet b = th41_cwc(15, 6, 3);
  CHECK(b.vectors.size() == 6);
  for (std::size_t i = 0; i < b.vectors.size(); ++i)
    for (std::size_t j = i + 1; j < b.vectors.size(); ++j) CHECK(hamming_guard(b.vectors[i], b.vectors[j]) >= 6);
  // (12,6,3) leaves no room for the last S3 vector
  CHECK(error_of([] { th41_cwc(12, 6, 3); }) == Errc::BadArguments);
  CHECK(error_of([] { th41_cwc(30, 12, 5); }) == Errc::OddDeltaUnsupported);
  CHECK(error_of([] { th41_cwc(10, 4, 1); }) == Errc::BadArguments);
  CHECK(error_of([] { th41_cwc(10, 6, 2); }) == Errc::BadArguments);
}

TEST_CASE("identifying-vector bound") {
  CHECK(th41_polynomial(19, 9, 4) == P({{1, 60}, {1, 44}, {1, 36}, {1, 28}}));
  CHECK(th41_bound(3, 19, 4, 9).value == BigCount("42391159260137223209995120164"));
  CHECK(th41_polynomial(16, 7, 3) == P({{1, 45}, {1, 36}, {2, 31}, {1, 26}, {1, 21}}));
  CHECK(coeff_sum(th41_polynomial(16, 7, 3)) == 6);
  CHECK(coeff_sum(th41_polynomial(19, 9, 4)) == 4);
  CHECK(coeff_sum(th41_polynomial(30, 15, 6)) == 4);
  CHECK(error_of([] { th41_polynomial(24, 12, 6); }) == Errc::BadArguments);
}

TEST_CASE("polynomial equals the structural diagram sum") {
  for (auto [n, k, delta] : {std::tuple{15, 6, 3}, std::tuple{16, 7, 3}, std::tuple{19, 8, 3}, std::tuple{19, 9, 4},
                             std::tuple{18, 9, 4}, std::tuple{30, 15, 6}, std::tuple{17, 7, 3}})
    for (int q : {2, 3, 5}) {
      CAPTURE(n);
      CAPTURE(k);
      CAPTURE(q);
      CHECK(th41_structural(q, n, k, delta) == evaluate(th41_polynomial(n, k, delta), q));
    }
}

TEST_CASE("extra vector") {
  for (auto [n, k] : {std::pair{15, 6}, std::pair{16, 7}, std::pair{19, 8}, std::pair{18, 7}}) {
    const IdVec v = th44_vector(n, k);
    CHECK(v.n() == n);
    CHECK(v.weight() == k);
    CHECK(ferrers_of(v).diagram == th43_diagram(n, k));
  }
  CHECK(th44_bound(3, 16, 3, 6).value == BigCount("12158308561614895971"));
  CHECK(th44_bound(3, 17, 3, 7).value == BigCount("717934761497715615667197"));
  CHECK(error_of([] { th44_bound(3, 15, 3, 7); }) == Errc::BadArguments);
  // the generic expansion at (15,6,6) has q^22 + q^17 where the printed one has 2q^22
  CHECK(th44_polynomial(15, 6, 3) == P({{1, 36}, {1, 27}, {1, 24}, {1, 22}, {1, 17}, {1, 12}, {1, 2}}));
}

TEST_CASE("parallel cosets count, the (18,8,9) recipe") {
  for (int q : {2, 3, 4}) {
    const ParallelCount c = thm31_count(q, example3_recipe());
    CHECK(c.c3 == ipow(q, 20) + ipow(q, 5));
    CHECK(c.c4 == ipow(q, 5) + 1);
  }
  const BoundResult b = thm32_bound(2, example3_recipe());
  CHECK(b.value == BigCount("18015215399116937"));
  for (int q : {3, 5, 7}) {
    const BigCount generic = ipow(q, 54) + rank_distribution(q, 9, 9, 4, 4) + rank_distribution(q, 9, 9, 4, 5) + 1 +
                             ipow(q, 20) + 2 * ipow(q, 5) + 1;
    CHECK(thm32_bound(q, example3_recipe()).value == generic);
  }
}

TEST_CASE("parallel cosets guard") {
  ParallelRecipe r = example3_recipe();
  r.ahat.groups = {{"111100000"}};
  CHECK(error_of([&] { thm32_guard(r); }) == Errc::GuardFailed);
  ParallelRecipe s = example3_recipe();
  s.ahat.r.reset();
  CHECK(error_of([&] { thm32_guard(s); }) == Errc::BadArguments);
}

TEST_CASE("tiny combined build matches its count") {
  const Field f(2);
  const Thm32Build b = thm32_build(f, tiny_parallel_recipe());
  CHECK(BigCount(b.code.size()) == b.predicted);
  CHECK(b.code.size() == 4695);
  CHECK(b.c1 == 4096);
  CHECK(b.c2 == 526);
  CHECK(b.c3 == 68);
  CHECK(b.c4 == 5);
}

TEST_CASE("inverse list rank restriction is enforced") {
  const Field f(2);
  const ParallelRecipe r = tiny_parallel_recipe();
  CdcList ah = list_build(f, r.ahat);
  ah.restricted_rank = 0;
  // replace the list by an unrestricted one: its members have rank 2 parts
  ListRecipe loose = r.ahat;
  loose.r.reset();
  CdcList wide = list_build(f, loose);
  wide.restricted_rank = 0;
  CHECK(error_of([&] { thm31_build(f, list_build(f, r.a), list_build(f, r.b), wide, list_build(f, r.bhat), 4); }) ==
        Errc::RankRestrictionViolated);
  CHECK(thm31_build(f, list_build(f, r.a), list_build(f, r.b), ah, list_build(f, r.bhat), 4).size() == 73);
}

TEST_CASE("coset insertion, the (17,6,8) recipe") {
  const InsertRecipe r = example5_recipe();
  th42_guard(r);
  const Polynomial printed = P({{1, 25}, {1, 22}, {1, 19}, {3, 18}, {1, 17}, {2, 16}, {3, 15}, {2, 14}, {1, 13}, {1, 12}});
  const Polynomial recomputed = P({{1, 25}, {1, 22}, {1, 19}, {3, 18}, {1, 17}, {2, 16}, {3, 15}, {2, 14}, {1, 13}, {1, 9}});
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const InsertCount c = insert_count(q, r);
    CHECK(c.h_size == ipow(q, 9));
    CHECK(c.addend == evaluate(recomputed, q));
    CHECK(evaluate(printed, q) - c.addend == ipow(q, 12) - ipow(q, 9));
  }
  // the printed total needs the printed addend
  CHECK(th42_insert(3, r).value + ipow(3, 12) - ipow(3, 9) == BigCount("58152704874502104749268072"));

  InsertRecipe bad = r;
  bad.k1 = 4, bad.k2 = 4;
  CHECK(error_of([&] { th42_guard(bad); }) == Errc::GuardFailed);
}

TEST_CASE("coset insertion, the (19,6,8) recipe") {
  const InsertRecipe r = example8_recipe();
  th45_guard(r);
  const Polynomial big = P({{1, 26}, {1, 21}, {1, 20}, {1, 18}, {1, 17}, {1, 16}, {1, 15}, {1, 13}, {1, 12}, {1, 11}});
  for (int q : {3, 4, 5, 7, 8, 9}) CHECK(insert_count(q, r).addend == evaluate(big, q));
  const Polynomial two = P({{1, 26}, {1, 21}, {1, 20}, {1, 18}, {1, 17}, {1, 16}, {1, 15}, {1, 13}, {1, 12}});
  CHECK(insert_count(2, r).addend == evaluate(two, 2));
  CHECK(th45_insert(3, r).value == BigCount("30904731631209804712703574912729"));

  InsertRecipe bad = r;
  bad.b.groups[0][0] = "1111000001";
  CHECK(error_of([&] { th45_guard(bad); }) == Errc::GuardFailed);
}

TEST_CASE("registry") {
  const auto& rows = builtin_registry();
  CHECK(rows.size() >= 65);
  for (const auto& r : rows) {
    const BoundResult b = table11_bound(r.q, r.n, r.d, r.k);
    CAPTURE(r.line);
    CHECK(b.value == r.printed);
    if (r.old_bound) CHECK(r.printed > *r.old_bound);
  }
  CHECK(table11_bound(2, 18, 8, 9).old_bound == BigCount("18015215398101558"));
  CHECK(table11_bound(3, 18, 6, 7).value == BigCount("174458147043944894607122337"));
  CHECK(error_of([] { table11_bound(2, 17, 6, 8); }) == Errc::NotInRegistry);
}

TEST_CASE("registry parsing") {
  const auto rows = parse_registry("# comment\n3 19 8 9 42391159260137223209995120164 1\n\n2 18 8 9 5\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].line == 2);
  CHECK(rows[1].line == 4);
  CHECK_FALSE(rows[1].old_bound);
  try {
    parse_registry("3 19 8 9 1 1\n3 19 x 9 1 1\n");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK(error_of([] { parse_registry("6 19 8 9 1\n"); }) == Errc::ParseError);
  CHECK(error_of([] { parse_registry("3 19 8\n"); }) == Errc::ParseError);
}

TEST_CASE("consistency report") {
  int disagree = 0;
  for (const auto& c : consistency_report()) {
    if (c.agree) continue;
    ++disagree;
    const bool known = (c.n == 15 && c.d == 6 && c.k == 6) || (c.n == 17 && c.d == 6 && c.k == 8);
    CHECK(known);
  }
  CHECK(disagree == 12);
}

TEST_CASE("bound sources") {
  CHECK(bound_by_source("table11", 2, 18, 8, 9).value == BigCount("18015215399116937"));
  CHECK(bound_by_source("example:4", 3, 19, 8, 9).value == BigCount("42391159260137223209995120164"));
  CHECK(bound_by_source("example:3", 2, 18, 8, 9).value == BigCount("18015215399116937"));
  CHECK(bound_by_source("example:6", 3, 15, 6, 6).value == BigCount("150102606086671257"));
  CHECK(bound_by_source("th44", 3, 15, 6, 6).value != BigCount("150102606086671257"));
  CHECK(bound_by_source("auto", 3, 19, 8, 9).source == "table11");
  CHECK(bound_by_source("auto", 2, 20, 6, 8).source == "th44");
  CHECK(bound_by_source("auto", 2, 17, 6, 8).source == "th41");
  CHECK(error_of([] { bound_by_source("example:4", 3, 18, 8, 9); }) == Errc::ParameterMismatch);
  CHECK(error_of([] { bound_by_source("nope", 3, 18, 8, 9); }) == Errc::BadArguments);
  CHECK(error_of([] { bound_by_source("th41", 3, 18, 7, 9); }) == Errc::BadArguments);
}

namespace {

FdrmCode code_on(const Field& f, const IdVec& v, int delta) {
  const FerrersDiagram d = ferrers_of(v).diagram;
  if (d.dots() == 0) return FdrmCode{d, zero_code(f, d.rows(), d.columns(), delta), true};
  return optimal_fdrmc(f, d, delta);
}

// A random member of the code lifted on v, without materializing the code.
Subspace random_member(const Field& f, const IdVec& v, const FdrmCode& c, std::mt19937_64& rng) {
  const EchelonLayout l = ferrers_of(v);
  Matrix m = Matrix::Zero(l.diagram.rows(), l.diagram.columns());
  std::uniform_int_distribution<int> coef(0, f.q() - 1);
  for (const auto& b : c.code.basis) axpy(f, static_cast<Elem>(coef(rng)), b, m);
  return Subspace::span(f, place_on_layout(l, m));
}

int exhaustive_min(const Field& f, const Cdc& c) {
  int best = 1 << 20;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      best = std::min(best, subspace_distance(f, c.members()[i], c.members()[j]));
  return best;
}

// Inserted code against the family: every vector pair by Hamming distance,
// then sampled members of each lifted code against every inserted member.
void cross_check(const Field& f, const CosetResult& ins, const std::vector<IdVec>& family,
                 const std::vector<FdrmCode>& codes, int d) {
  std::vector<IdVec> inserted;
  for (const auto& s : ins.code.members()) {
    const IdVec v = identifying_vector(f, s);
    if (std::find(inserted.begin(), inserted.end(), v) == inserted.end()) inserted.push_back(v);
  }
  for (const auto& u : inserted)
    for (const auto& v : family) CHECK(hamming_guard(u, v) >= d);
  std::mt19937_64 rng(99);
  int worst = 1 << 20;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (int t = 0; t < 200; ++t) {
      const Subspace m = random_member(f, family[i], codes[i], rng);
      for (const auto& s : ins.code.members()) worst = std::min(worst, subspace_distance(f, m, s));
    }
  CHECK(worst >= d);
}

}  // namespace

TEST_CASE("tiny coset insertion into the identifying-vector family") {
  const Field f(2);
  InsertRecipe r;
  r.name = "tiny insertion";
  r.n = 10, r.k = 5, r.delta = 2, r.n1 = 6, r.n2 = 4, r.k1 = 2, r.k2 = 3;
  r.a = {{{"110000", "001100", "000011"}}, VecKind::Forward, 2, 1, std::nullopt};
  r.b = {{{"1110"}}, VecKind::Forward, 2, 1, std::nullopt};
  r.h_m = 2, r.h_n = 1, r.h_delta = 2;
  th42_guard(r);
  const CosetResult ins = insert_build(f, r);
  CHECK(BigCount(ins.code.size()) == insert_count(2, r).addend);
  CHECK(ins.code.size() == 145);
  CHECK(exhaustive_min(f, ins.code) >= 4);

  const CwcSet s = th41_cwc(10, 5, 2);
  std::vector<FdrmCode> codes;
  for (const auto& v : s.vectors) codes.push_back(code_on(f, v, 2));
  cross_check(f, ins, s.vectors, codes, 4);
  CHECK(th42_insert(2, r).value == th41_bound(2, 10, 2, 5).value + 145);
}

TEST_CASE("tiny coset insertion with the extra vector") {
  const Field f(2);
  InsertRecipe r;
  r.name = "tiny insertion with v'";
  r.n = 12, r.k = 5, r.delta = 2, r.n1 = 6, r.n2 = 6, r.k1 = 2, r.k2 = 3;
  r.a = {{{"011000", "000110"}}, VecKind::Forward, 2, 1, std::nullopt};
  r.b = {{{"110001", "001101"}}, VecKind::Forward, 2, 1, std::nullopt};
  r.h_m = 2, r.h_n = 3, r.h_delta = 2;
  th45_guard(r);
  const CosetResult ins = insert_build(f, r);
  CHECK(BigCount(ins.code.size()) == insert_count(2, r).addend);
  CHECK(exhaustive_min(f, ins.code) >= 4);

  CwcSet s = th41_cwc(12, 5, 2);
  std::vector<FdrmCode> codes;
  for (const auto& v : s.vectors) codes.push_back(code_on(f, v, 2));
  s.vectors.push_back(th44_vector(12, 5));
  codes.push_back(th43_optimal_fdrmc(f, 12, 5));
  cross_check(f, ins, s.vectors, codes, 4);
}
