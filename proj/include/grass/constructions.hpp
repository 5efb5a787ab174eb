#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grass/code.hpp"
#include "grass/ferrers.hpp"

namespace grass {

enum class VecKind { Forward, Inverse };

/// Binary pivot-position vector of a subspace (RREF pivots for Forward,
/// RRIEF pivots for Inverse).
struct IdVec {
  std::vector<std::uint8_t> bits;
  VecKind kind = VecKind::Forward;

  static IdVec parse(std::string_view s, VecKind kind = VecKind::Forward);
  int n() const { return static_cast<int>(bits.size()); }
  int weight() const;
  std::string str() const;

  friend bool operator==(const IdVec& a, const IdVec& b) { return a.bits == b.bits && a.kind == b.kind; }
};

/// Constant-weight binary code with a guaranteed Hamming distance.
struct CwcSet {
  std::vector<IdVec> vectors;
  int n = 0, weight = 0, min_hd = 0;
};

/// Validates equal length and weight and pairwise distance >= min_hd.
CwcSet make_cwc(std::vector<IdVec> vectors, int min_hd);
CwcSet parse_cwc(const std::vector<std::string>& bits, int min_hd, VecKind kind = VecKind::Forward);

int hamming_guard(const IdVec& u, const IdVec& v);

IdVec identifying_vector(const Field& f, const Subspace& u);
IdVec inverse_identifying_vector(const Field& f, const Subspace& u);

/// Echelon Ferrers form of a vector: diagram plus the cell placement.
struct EchelonLayout {
  IdVec v;
  FerrersDiagram diagram;
  std::vector<int> pivots;     // generator row r has its pivot in column pivots[r]
  std::vector<int> column_of;  // diagram column j sits in generator column column_of[j]
};

EchelonLayout ferrers_of(const IdVec& v);

/// Generator with the matrix written into the dots of EF(v) (or its inverse).
Matrix place_on_layout(const EchelonLayout& layout, const Matrix& m);

Cdc lift_on_vector(const Field& f, const IdVec& v, const MatrixSet& s);
Cdc lift_on_vector(const Field& f, const IdVec& v, const FdrmCode& c);

/// Union of lifted codes over a CWC with minimum Hamming distance 2*delta.
Cdc multilevel(const Field& f, const std::vector<std::pair<IdVec, FdrmCode>>& entries, int delta);

/// Writes F (y x (n-k)) into the non-pivot columns of B (k x n, full-rank
/// echelon form); pivot columns stay zero.
Matrix phi_embed(const Field& f, const Matrix& b, const Matrix& fm);

/// Ordered list of CDCs with fixed distance.
struct CdcList {
  std::vector<Cdc> lists;
  int intra_d = 0, inter_d = 0;
  std::optional<int> restricted_rank;

  std::size_t size() const { return lists.size(); }
};

struct CosetResult {
  Cdc code;
  std::size_t used = 0;        // s = min(len A, len B)
  std::size_t truncated_a = 0;  // list entries dropped from A
  std::size_t truncated_b = 0;
};

/// Coset construction: rs([A_i phi_{B_i}(H); 0 B_i]) over i < s, H in h.
CosetResult coset_construction(const Field& f, const CdcList& a, const CdcList& b, const MatrixSet& h);

/// Parallel linkage: {rs(U1 | M1)} and {rs(M2 | U2)}.
Cdc parallel_linkage(const Field& f, const Cdc& u1, const Cdc& u2, const MatrixSet& m1, const MatrixSet& m2);

/// Runs of equal list-entry sizes; the count-mode form of a CdcList.
struct SizeRun {
  BigCount size;
  BigCount count;
};

struct SizeProfile {
  std::vector<SizeRun> runs;

  BigCount length() const;
  BigCount total() const;
  /// Descending by size, equal sizes merged, zero counts removed.
  SizeProfile sorted() const;
};

SizeProfile profile_of(const CdcList& l);

struct PairedRun {
  BigCount size_a, size_b, count;
};

struct RunPairing {
  std::vector<PairedRun> runs;
  BigCount total;
  BigCount used;          // number of paired entries
  BigCount truncated_a;   // entries of a left unpaired
  BigCount truncated_b;
};

/// Reordering: i-th largest with i-th largest.
RunPairing reorder_pairing(const SizeProfile& a, const SizeProfile& b);

struct IndexPairing {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  BigCount total;
};

IndexPairing reorder_pairing(const std::vector<BigCount>& a, const std::vector<BigCount>& b);

/// Per-vector nested-pair data.
struct VectorCosets {
  IdVec v;
  int dim1 = 0, dim2 = 0;  // dim c1, dim c2
  BigCount d_v, s_v;       // q^dim1, q^(dim2-dim1)
};

VectorCosets vector_cosets(const Field& f, const IdVec& v, int delta1, int delta2);

/// Count mode of the coset lists (groups concatenated in order). With r, the
/// lists are r-restricted inverse lists and emptied entries are dropped.
SizeProfile coset_profile(const Field& f, const std::vector<CwcSet>& groups, int delta1, int delta2,
                          std::optional<int> r = std::nullopt);

/// Build mode of the same lists.
CdcList build_coset_cdc_lists(const Field& f, const std::vector<CwcSet>& groups, int delta1, int delta2,
                              std::optional<int> r = std::nullopt);

}  // namespace grass
