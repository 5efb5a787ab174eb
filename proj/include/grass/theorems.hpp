#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grass/constructions.hpp"

namespace grass {

/// Polynomial in q with integer coefficients, highest exponent first.
struct Term {
  long long coeff = 0;
  int exp = 0;

  friend bool operator==(const Term&, const Term&) = default;
};
using Polynomial = std::vector<Term>;

/// Merges equal exponents, drops zero terms, sorts descending.
Polynomial normalize(Polynomial p);
BigCount evaluate(const Polynomial& p, int q);
std::string to_string(const Polynomial& p);
Polynomial operator+(Polynomial a, const Polynomial& b);

struct BoundResult {
  int q = 0, n = 0, d = 0, k = 0;
  BigCount value;
  std::optional<Polynomial> polynomial;
  std::string source;
  std::optional<BigCount> printed;  // transcribed new bound
  std::optional<BigCount> old_bound;
  std::vector<std::string> notes;
};

// ---- identifying-vector family and its bound ----

/// The explicit CWC S = S1 u S2 u S3 (6 vectors for delta 3, 4 for even delta).
CwcSet th41_cwc(int n, int k, int delta);
Polynomial th41_polynomial(int n, int k, int delta);
BoundResult th41_bound(int q, int n, int delta, int k);
/// Sum over th41_cwc of the optimal code sizes on each diagram.
BigCount th41_structural(int q, int n, int k, int delta);

/// v' = (1, 0^{n-k-2}, 1^c, 0, 1^c, 0, 1^e), c = floor((k-1)/2).
IdVec th44_vector(int n, int k);
Polynomial th44_polynomial(int n, int k, int delta);
BoundResult th44_bound(int q, int n, int delta, int k);

// ---- list recipes ----

/// Groups of vectors feeding one list of CDCs (groups concatenated in order).
struct ListRecipe {
  std::vector<std::vector<std::string>> groups;
  VecKind kind = VecKind::Forward;
  int delta1 = 0, delta2 = 0;
  std::optional<int> r;

  std::vector<CwcSet> cwcs() const;
  std::vector<IdVec> vectors() const;
};

SizeProfile list_profile(int q, const ListRecipe& l);
CdcList list_build(const Field& f, const ListRecipe& l);

/// Parallel cosets (A,B forward, Ahat restricted inverse, Bhat inverse).
struct ParallelRecipe {
  std::string name;
  int n1 = 0, n2 = 0, k1 = 0, k2 = 0, d = 0;
  ListRecipe a, b, ahat, bhat;

  int n() const { return n1 + n2; }
  int k() const { return k1 + k2; }
};

struct ParallelCount {
  BigCount c3, c4;
  RunPairing pair3, pair4;
};

ParallelCount thm31_count(int q, const ParallelRecipe& r);

/// Known A_q(n,d,k) values plugged into the combined bound.
using KnownBounds = std::function<BigCount(int q, int n, int d, int k)>;
/// Lifted MRD size, the default provider.
BigCount lifted_mrd_bound(int q, int n, int d, int k);

/// Raises GuardFailed unless d_H(u1, u2hat) >= 2(r + d/2) for every pair.
void thm32_guard(const ParallelRecipe& r);
BoundResult thm32_bound(int q, const ParallelRecipe& r, const KnownBounds& known = lifted_mrd_bound);

/// Union C3 u C4 from materialized lists; Ahat members must have rank <= r.
Cdc thm31_build(const Field& f, const CdcList& a, const CdcList& b, const CdcList& ahat, const CdcList& bhat,
                int d);

struct Thm32Build {
  Cdc code;
  BigCount predicted;
  std::size_t c1 = 0, c2 = 0, c3 = 0, c4 = 0;
};

/// C1 u C2 u C3 u C4 with U1 = U2 = the whole ambient space (k = n1 = n2).
Thm32Build thm32_build(const Field& f, const ParallelRecipe& r);

/// Coset insertion into the identifying-vector family.
struct InsertRecipe {
  std::string name;
  int n = 0, k = 0, delta = 0, n1 = 0, n2 = 0, k1 = 0, k2 = 0;
  ListRecipe a, b;
  int h_m = 0, h_n = 0, h_delta = 0;
  std::vector<std::string> notes;
};

struct InsertCount {
  BigCount h_size;
  RunPairing pairing;
  BigCount addend;  // |H| * sum |A_i||B_i|
};

InsertCount insert_count(int q, const InsertRecipe& r);
BoundResult th42_insert(int q, const InsertRecipe& r);
BoundResult th45_insert(int q, const InsertRecipe& r);

/// Checks |k - delta + 1 - k1| >= delta and the shape hypotheses.
void th42_guard(const InsertRecipe& r);
/// Adds the identifying-vector tail pattern check over all (vA | vB).
void th45_guard(const InsertRecipe& r);

/// Inserted code built from the recipe lists with a Gabidulin filler.
CosetResult insert_build(const Field& f, const InsertRecipe& r);

ParallelRecipe example3_recipe();
InsertRecipe example5_recipe();
InsertRecipe example8_recipe();
/// n=8, d=4, k=4 analog of example3_recipe().
ParallelRecipe tiny_parallel_recipe();

/// Named example bound: "3", "4", "5", "6", "8".
BoundResult example_bound(std::string_view name, int q, int n, int d, int k);

// ---- registry of printed bounds ----

struct RegistryRow {
  int q = 0, n = 0, d = 0, k = 0;
  BigCount printed;
  std::optional<BigCount> old_bound;
  int line = 0;
};

/// Rows `q n d k new [old]`; '#' starts a comment. Errors name the line.
std::vector<RegistryRow> parse_registry(std::string_view text);
const std::vector<RegistryRow>& builtin_registry();

/// Evaluates the per-row formula transcribed from the producing example.
BoundResult table11_bound(int q, int n, int d, int k,
                          const std::vector<RegistryRow>& rows = builtin_registry());

struct ConsistencyRow {
  int q = 0, n = 0, d = 0, k = 0;
  BigCount registry_value, generic_value;
  std::string generic_source;
  bool agree = false;
};

/// Generic theorem evaluation against the registry formula, row by row.
std::vector<ConsistencyRow> consistency_report(const std::vector<RegistryRow>& rows = builtin_registry());

/// auto | th41 | th44 | table11 | example:<name>
BoundResult bound_by_source(std::string_view source, int q, int n, int d, int k);

}  // namespace grass
