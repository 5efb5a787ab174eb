#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grass/rankmetric.hpp"

namespace grass {

enum class Orientation {
  Standard,  // columns ascending, rows right-aligned
  Inverse,   // columns descending, rows left-aligned (the mirror image)
};

/// Ferrers diagram given by its dot count per column, left to right.
///
/// Dots are top-aligned in both orientations, so cell (r, c) carries a dot
/// iff r < cols[c].
class FerrersDiagram {
 public:
  FerrersDiagram() = default;
  explicit FerrersDiagram(std::vector<int> cols, Orientation o = Orientation::Standard);
  static FerrersDiagram full(int m, int n);
  /// "F=[1,2,4]" or "[1,2,4]"; empty brackets give the empty diagram.
  static FerrersDiagram parse(std::string_view text);

  const std::vector<int>& cols() const { return cols_; }
  Orientation orientation() const { return orientation_; }
  int rows() const;
  int columns() const { return static_cast<int>(cols_.size()); }
  int dots() const;
  bool empty() const { return cols_.empty(); }
  bool is_full() const;
  bool has_dot(int r, int c) const { return r < cols_[c]; }
  /// Dots per row, top to bottom.
  std::vector<int> row_counts() const;

  /// [rho_m, ..., rho_1]; the matrix map is the anti-transpose.
  FerrersDiagram transpose() const;
  /// Column order reversed; flips the orientation.
  FerrersDiagram inverse() const;
  /// The standard-orientation diagram with the same shape up to mirroring.
  FerrersDiagram standard() const;

  std::string str() const;

  friend bool operator==(const FerrersDiagram& a, const FerrersDiagram& b) {
    return a.cols_ == b.cols_ && a.orientation_ == b.orientation_;
  }

 private:
  std::vector<int> cols_;
  Orientation orientation_ = Orientation::Standard;
};

/// Dots left after deleting the first i rows and the rightmost delta-1-i
/// columns (computed on the standard orientation).
int nu(const FerrersDiagram& f, int delta, int i);
int singleton_bound(const FerrersDiagram& f, int delta);

/// Matrix maps matching FerrersDiagram::transpose / inverse.
Matrix anti_transpose(const Matrix& m);
Matrix mirror_columns(const Matrix& m);

bool support_ok(const FerrersDiagram& f, const Matrix& m);

/// A linear rank-metric code supported on a Ferrers diagram.
struct FdrmCode {
  FerrersDiagram diagram;
  LinearMatrixCode code;
  bool optimal = false;

  int delta() const { return code.delta; }
  int dim() const { return code.dim(); }
};

/// Optimal [F, delta] code: Gabidulin codes intersected with the support of
/// F (tried on F and on its transpose); the dimension must reach the
/// singleton bound or ConditionNotMet is raised.
FdrmCode optimal_fdrmc(const Field& f, const FerrersDiagram& d, int delta);

/// Whether the rightmost delta-1 columns are each full (m >= n assumed by
/// the caller); the sufficient condition the construction relies on.
bool full_tail_condition(const FerrersDiagram& d, int delta);

FdrmCode transpose(const FdrmCode& c);
FdrmCode inverse(const FdrmCode& c);

/// Block composition (F1 D; 0 F2) with D full m3 x n3.
FdrmCode compose_fdrmc(const Field& f, const FdrmCode& c1, const FdrmCode& c2, int m3, int n3);

/// Diagram of the optimal distance-3 code on [1^{n-k-2}, 1+c, 1+2c],
/// c = floor((k-1)/2).
FerrersDiagram th43_diagram(int n, int k);
FdrmCode th43_optimal_fdrmc(const Field& f, int n, int k);

/// c1 inside c2 on the same diagram, both optimal.
struct NestedPair {
  FdrmCode c1, c2;
  /// Matrices completing c1's basis to a basis of c2.
  std::vector<Matrix> complement;

  int quotient_dim() const { return static_cast<int>(complement.size()); }
};

NestedPair nested_pair(const Field& f, const FerrersDiagram& d, int delta1, int delta2);

/// The q^{dim c2 - dim c1} cosets of c1 in c2 in lexicographic order of
/// quotient coefficients; coset 0 is c1 itself.
std::vector<MatrixSet> coset_list(const Field& f, const NestedPair& p);

struct RestrictedCosets {
  std::vector<MatrixSet> cosets;
  std::vector<std::size_t> dropped;  // indices of cosets emptied by the rank filter
};

/// Cosets for an inverse diagram; with r, members of rank > r are removed.
/// Without drop_empty an emptied coset raises EmptyAfterRestriction.
RestrictedCosets coset_list_inverse(const Field& f, const NestedPair& p, std::optional<int> r,
                                    bool drop_empty = false);

struct GfrmcBound {
  BigCount value;
  int column = 0;  // 1-based i attaining the maximum
};

GfrmcBound gfrmc_lower_bound(const FerrersDiagram& d, int delta, int r, int q);

}  // namespace grass
