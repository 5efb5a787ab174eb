#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "grass/errors.hpp"

namespace grass {

using Elem = std::uint8_t;

template <class Scalar>
using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = Dense<Elem>;
using Vector = DenseVector<Elem>;

/// GF(q) for q in {2,3,4,5,7,8,9}.
///
/// Elements are the integers 0..q-1; the base-p digits of an element are the
/// coefficients of its polynomial representative (constant term first).
class Field {
 public:
  explicit Field(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int e() const { return e_; }
  /// Modulus over GF(p), coefficients c_0..c_e (monic).
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * 16 + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * 16 + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * 16 + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  /// Multiplicative inverse; a must be nonzero.
  Elem inv(Elem a) const { return inv_[a]; }
  Elem div(Elem a, Elem b) const { return mul(a, inv_[b]); }
  /// alpha^i for a fixed primitive element alpha.
  Elem exp(int i) const { return exp_[((i % (q_ - 1)) + (q_ - 1)) % (q_ - 1)]; }
  /// Discrete log of a nonzero element.
  int log(Elem a) const { return log_[a]; }
  Elem primitive() const { return exp_[q_ > 2 ? 1 : 0]; }

  friend bool operator==(const Field& a, const Field& b) { return a.q_ == b.q_; }

 private:
  int q_, p_, e_;
  std::vector<int> modulus_;
  std::array<Elem, 256> add_{}, mul_{};
  std::array<Elem, 16> neg_{}, inv_{}, exp_{};
  std::array<int, 16> log_{};
};

/// Orders accepted by Field.
bool supported_order(int q);

using ExtElem = Vector;

/// GF(q^m) as polynomials over GF(q) modulo a fixed monic irreducible.
///
/// The modulus is the smallest monic irreducible of degree m when the low
/// coefficients are read as a base-q number. The basis is 1, x, ..., x^{m-1}.
class ExtField {
 public:
  ExtField(const Field& base, int m);

  const Field& base() const { return base_; }
  int m() const { return m_; }
  /// Monic modulus, coefficients c_0..c_m.
  const std::vector<Elem>& modulus() const { return modulus_; }
  std::uint64_t order() const { return order_; }

  ExtElem zero() const { return ExtElem::Zero(m_); }
  ExtElem one() const;
  /// The class of x, a root of the modulus.
  ExtElem x() const;
  /// The l-th basis element x^l.
  ExtElem basis(int l) const;

  ExtElem add(const ExtElem& a, const ExtElem& b) const;
  ExtElem sub(const ExtElem& a, const ExtElem& b) const;
  ExtElem scale(Elem c, const ExtElem& a) const;
  ExtElem mul(const ExtElem& a, const ExtElem& b) const;
  ExtElem pow(const ExtElem& a, std::uint64_t e) const;
  bool is_zero(const ExtElem& a) const { return (a.array() == 0).all(); }

  std::uint64_t index(const ExtElem& a) const;
  ExtElem from_index(std::uint64_t i) const;

 private:
  Field base_;
  int m_;
  std::vector<Elem> modulus_;
  std::uint64_t order_;
};

/// x^{q^i}.
ExtElem frobenius(const ExtField& ctx, const ExtElem& x, int i);

/// m x n matrix over GF(q) whose column j holds the coordinates of v[j].
Matrix expand_rows(const ExtField& ctx, const std::vector<ExtElem>& v);

/// Monic irreducibility test over GF(q) (Rabin). Coefficients c_0..c_d.
bool is_irreducible(const Field& f, const std::vector<Elem>& poly);

}  // namespace grass
