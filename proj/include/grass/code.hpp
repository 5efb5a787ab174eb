#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "grass/linalg.hpp"

namespace grass {

/// A constant-dimension code: distinct k-dim subspaces of GF(q)^n.
///
/// Duplicates are an error, never merged silently.
class Cdc {
 public:
  Cdc() = default;
  Cdc(int q, int n, int k, int d, std::string provenance = {})
      : q_(q), n_(n), k_(k), d_(d), provenance_(std::move(provenance)) {}

  int q() const { return q_; }
  int n() const { return n_; }
  int k() const { return k_; }
  /// Declared minimum distance.
  int d() const { return d_; }
  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }
  void set_d(int d) { d_ = d; }

  std::size_t size() const { return members_.size(); }
  const std::vector<Subspace>& members() const { return members_; }
  bool contains(const Subspace& s) const { return keys_.count(s.key()) != 0; }

  void insert(Subspace s);
  /// Union; a subspace present in both raises DuplicateCodeword.
  void merge(const Cdc& other);

 private:
  int q_ = 2, n_ = 0, k_ = 0, d_ = 0;
  std::string provenance_;
  std::vector<Subspace> members_;
  std::unordered_set<std::string> keys_;
};

}  // namespace grass
