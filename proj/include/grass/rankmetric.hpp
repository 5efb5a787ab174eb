#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "grass/code.hpp"
#include "grass/linalg.hpp"

namespace grass {

/// Codes with more than this many codewords are not enumerated.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 20;

/// A GF(q)-linear space of m x n matrices given by a basis.
struct LinearMatrixCode {
  int q = 2, m = 0, n = 0;
  int delta = 1;
  std::vector<Matrix> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  BigCount size() const { return ipow(q, dim()); }
};

/// An explicit, possibly non-linear, set of m x n matrices.
struct MatrixSet {
  int q = 2, m = 0, n = 0;
  int delta = 1;
  std::vector<Matrix> members;

  std::size_t size() const { return members.size(); }
};

/// Checks shapes and linear independence of the basis.
LinearMatrixCode make_linear_code(const Field& f, int m, int n, int delta, std::vector<Matrix> basis);

LinearMatrixCode zero_code(const Field& f, int m, int n, int delta);

/// Gabidulin MRD code of shape m x n, minimum rank distance delta.
LinearMatrixCode gabidulin(const Field& f, int m, int n, int delta);

LinearMatrixCode transpose(const LinearMatrixCode& c);

/// sum_i coeffs[i] * basis[i]
Matrix combine(const Field& f, const std::vector<Matrix>& basis, const std::vector<Elem>& coeffs, int m,
               int n);

/// Visits all codewords in lexicographic order of coefficient vectors
/// (first basis matrix most significant).
void for_each_codeword(const Field& f, const LinearMatrixCode& c,
                       const std::function<void(const Matrix&)>& visit);
std::vector<Matrix> codewords(const Field& f, const LinearMatrixCode& c);
MatrixSet as_set(const Field& f, const LinearMatrixCode& c);

/// Minimum rank over nonzero codewords (exhaustive); 0 for the zero code.
int min_rank(const Field& f, const LinearMatrixCode& c);
/// Minimum pairwise rank distance (exhaustive); 0 when fewer than two members.
int min_rank_distance(const Field& f, const MatrixSet& s);

BigCount rank_distribution(int q, int m, int n, int delta, int r);

/// q^{max(m,n)(min(m,n)-delta+1)}; 1 when delta exceeds min(m,n).
BigCount mrd_size(int q, int m, int n, int delta);

struct GrmcBound {
  BigCount value;
  int branch = 0;         // 1: t2 >= delta, 2: the maximization branch, 0: trivial
  std::optional<int> a;   // maximizing a in branch 2
};

GrmcBound grmc_lower_bound(int q, int m, int n, int delta, int t1, int t2);

/// Codewords of rank at most t2.
MatrixSet restrict_ranks(const Field& f, const LinearMatrixCode& c, int t2);

enum class Side { Left, Right };

/// {rs(I_k | M)} for Left, {rs(M | I_k)} for Right.
Cdc lift(const Field& f, const MatrixSet& s, Side side = Side::Left);
Cdc lift(const Field& f, const LinearMatrixCode& c, Side side = Side::Left);

}  // namespace grass
