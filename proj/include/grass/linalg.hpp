#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "grass/gf.hpp"

namespace grass {

using BigCount = boost::multiprecision::cpp_int;

BigCount ipow(long long base, long long e);

struct Echelon {
  Matrix reduced;           // same shape as the input, zero rows at the bottom
  std::vector<int> pivots;  // one column index per nonzero row
};

/// Reduced row echelon form (Gauss-Jordan).
Echelon rref(const Field& f, const Eigen::Ref<const Matrix>& m);

/// Reduced row inverse echelon form: the pivot of a row is its last nonzero
/// entry and pivots move strictly left going down.
Echelon rrief(const Field& f, const Eigen::Ref<const Matrix>& m);

int rank(const Field& f, const Eigen::Ref<const Matrix>& m);

bool is_rref(const Field& f, const Eigen::Ref<const Matrix>& m);

Matrix add(const Field& f, const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b);
Matrix sub(const Field& f, const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b);
Matrix scale(const Field& f, Elem c, const Eigen::Ref<const Matrix>& a);
/// acc += c * a
void axpy(const Field& f, Elem c, const Eigen::Ref<const Matrix>& a, Matrix& acc);
Matrix mul(const Field& f, const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b);

/// Rows form a basis of {x : m x^T = 0}, read off the RREF.
Matrix nullspace(const Field& f, const Eigen::Ref<const Matrix>& m);

/// Rows of m packed as bit masks (q = 2, cols <= 64).
std::vector<std::uint64_t> pack_rows(const Eigen::Ref<const Matrix>& m);
int rank_packed(std::vector<std::uint64_t> rows);

/// A k-dimensional subspace of GF(q)^n, stored by its RREF generator.
class Subspace {
 public:
  Subspace() = default;

  /// Row space of an arbitrary generator.
  static Subspace span(const Field& f, const Eigen::Ref<const Matrix>& gen);
  /// Wraps a generator that must already be RREF with full row rank.
  static Subspace from_rref(const Field& f, Matrix gen);

  int n() const { return static_cast<int>(gen_.cols()); }
  int k() const { return static_cast<int>(gen_.rows()); }
  const Matrix& gen() const { return gen_; }
  std::string key() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.gen_.rows() == b.gen_.rows() && a.gen_.cols() == b.gen_.cols() && a.gen_ == b.gen_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.key() < b.key(); }

 private:
  explicit Subspace(Matrix g) : gen_(std::move(g)) {}
  Matrix gen_;
};

/// dim U + dim V - 2 dim(U cap V).
int subspace_distance(const Field& f, const Subspace& u, const Subspace& v);

BigCount gaussian_binomial(int n, int k, int q);

/// Every k-dim subspace of GF(q)^n in a fixed order (pivot sets lexicographic,
/// then free entries).
std::vector<Subspace> enumerate_grassmannian(const Field& f, int n, int k);

}  // namespace grass
