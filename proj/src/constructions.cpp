#include "grass/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace grass {

IdVec IdVec::parse(std::string_view s, VecKind kind) {
  IdVec v;
  v.kind = kind;
  for (char c : s) {
    if (c != '0' && c != '1') throw Error(Errc::ParseError, "identifying vector must be 0/1 digits: " + std::string(s));
    v.bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  if (v.bits.empty()) throw Error(Errc::ParseError, "empty identifying vector");
  return v;
}

int IdVec::weight() const { return static_cast<int>(std::count(bits.begin(), bits.end(), 1)); }

std::string IdVec::str() const {
  std::string s;
  for (auto b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

int hamming_guard(const IdVec& u, const IdVec& v) {
  if (u.n() != v.n()) throw Error(Errc::LengthMismatch, "vectors of length " + std::to_string(u.n()) + " and " +
                                                            std::to_string(v.n()));
  int d = 0;
  for (int i = 0; i < u.n(); ++i) d += u.bits[i] != v.bits[i];
  return d;
}

CwcSet make_cwc(std::vector<IdVec> vectors, int min_hd) {
  if (vectors.empty()) throw Error(Errc::NotACwc, "empty vector set");
  CwcSet c{std::move(vectors), 0, 0, min_hd};
  c.n = c.vectors[0].n();
  c.weight = c.vectors[0].weight();
  for (std::size_t i = 0; i < c.vectors.size(); ++i) {
    const IdVec& v = c.vectors[i];
    if (v.n() != c.n || v.weight() != c.weight || v.kind != c.vectors[0].kind)
      throw Error(Errc::NotACwc, v.str() + " differs in length, weight or kind");
    for (std::size_t j = 0; j < i; ++j)
      if (hamming_guard(c.vectors[j], v) < min_hd)
        throw Error(Errc::NotACwc, c.vectors[j].str() + " and " + v.str() + " are closer than " +
                                       std::to_string(min_hd));
  }
  return c;
}

CwcSet parse_cwc(const std::vector<std::string>& bits, int min_hd, VecKind kind) {
  std::vector<IdVec> v;
  for (const auto& b : bits) v.push_back(IdVec::parse(b, kind));
  return make_cwc(std::move(v), min_hd);
}

namespace {

IdVec from_pivots(int n, const std::vector<int>& pivots, VecKind kind) {
  IdVec v;
  v.kind = kind;
  v.bits.assign(n, 0);
  for (int p : pivots) v.bits[p] = 1;
  return v;
}

}  // namespace

IdVec identifying_vector(const Field& f, const Subspace& u) {
  return from_pivots(u.n(), rref(f, u.gen()).pivots, VecKind::Forward);
}

IdVec inverse_identifying_vector(const Field& f, const Subspace& u) {
  return from_pivots(u.n(), rrief(f, u.gen()).pivots, VecKind::Inverse);
}

EchelonLayout ferrers_of(const IdVec& v) {
  EchelonLayout out;
  out.v = v;
  std::vector<int> counts;
  for (int j = 0; j < v.n(); ++j)
    if (v.bits[j]) out.pivots.push_back(j);
  if (v.kind == VecKind::Inverse) std::reverse(out.pivots.begin(), out.pivots.end());
  for (int j = 0; j < v.n(); ++j) {
    if (v.bits[j]) continue;
    // free entries sit in the rows whose pivot lies past j
    int c = 0;
    for (int p : out.pivots) c += v.kind == VecKind::Forward ? p < j : p > j;
    if (c == 0) continue;
    counts.push_back(c);
    out.column_of.push_back(j);
  }
  out.diagram = FerrersDiagram(counts, v.kind == VecKind::Forward ? Orientation::Standard : Orientation::Inverse);
  return out;
}

Matrix place_on_layout(const EchelonLayout& layout, const Matrix& m) {
  const FerrersDiagram& d = layout.diagram;
  const int k = static_cast<int>(layout.pivots.size());
  const bool trivial = d.empty() && m.size() == 0;
  if (!trivial && (m.rows() != d.rows() || m.cols() != d.columns() || !support_ok(d, m)))
    throw Error(Errc::DiagramMismatch, "matrix does not fit EF(" + layout.v.str() + ") = " + d.str());
  Matrix g = Matrix::Zero(k, layout.v.n());
  for (int r = 0; r < k; ++r) g(r, layout.pivots[r]) = 1;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index j = 0; j < m.cols(); ++j) g(r, layout.column_of[j]) = m(r, j);
  return g;
}

Cdc lift_on_vector(const Field& f, const IdVec& v, const MatrixSet& s) {
  const EchelonLayout layout = ferrers_of(v);
  Cdc out(f.q(), v.n(), v.weight(), 2 * s.delta, "lifted on " + v.str());
  for (const auto& m : s.members) out.insert(Subspace::span(f, place_on_layout(layout, m)));
  return out;
}

Cdc lift_on_vector(const Field& f, const IdVec& v, const FdrmCode& c) {
  const EchelonLayout layout = ferrers_of(v);
  if (!(layout.diagram == c.diagram) && !(layout.diagram.empty() && c.diagram.empty()))
    throw Error(Errc::DiagramMismatch, "code on " + c.diagram.str() + " but EF(" + v.str() + ") = " +
                                           layout.diagram.str());
  return lift_on_vector(f, v, as_set(f, c.code));
}

Cdc multilevel(const Field& f, const std::vector<std::pair<IdVec, FdrmCode>>& entries, int delta) {
  if (entries.empty()) throw Error(Errc::BadArguments, "multilevel needs at least one vector");
  const IdVec& v0 = entries[0].first;
  Cdc out(f.q(), v0.n(), v0.weight(), 2 * delta, "multilevel");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [v, c] = entries[i];
    if (c.delta() < delta && c.dim() > 0)
      throw Error(Errc::BadArguments, "code on " + v.str() + " has delta " + std::to_string(c.delta()));
    for (std::size_t j = 0; j < i; ++j)
      if (hamming_guard(entries[j].first, v) < 2 * delta)
        throw Error(Errc::NotACwc, entries[j].first.str() + " and " + v.str() + " are closer than " +
                                       std::to_string(2 * delta));
    out.merge(lift_on_vector(f, v, c));
  }
  return out;
}

Matrix phi_embed(const Field& f, const Matrix& b, const Matrix& fm) {
  (void)f;
  // only the pivot positions matter, so any full-rank echelon form will do
  const Eigen::Index k = b.rows(), n = b.cols();
  std::vector<int> piv;
  for (Eigen::Index r = 0; r < k; ++r) {
    Eigen::Index c = 0;
    while (c < n && b(r, c) == 0) ++c;
    if (c == n || (!piv.empty() && c <= piv.back()))
      throw Error(Errc::NotRref, "phi_embed needs a full-rank matrix in row echelon form");
    piv.push_back(static_cast<int>(c));
  }
  if (fm.cols() != n - k) throw Error(Errc::BadShape, "phi_embed filler must have n-k columns");
  Matrix out = Matrix::Zero(fm.rows(), n);
  Eigen::Index next = 0;
  for (Eigen::Index c = 0; c < n; ++c)
    if (std::find(piv.begin(), piv.end(), static_cast<int>(c)) == piv.end()) out.col(c) = fm.col(next++);
  return out;
}

CosetResult coset_construction(const Field& f, const CdcList& a, const CdcList& b, const MatrixSet& h) {
  if (a.lists.empty() || b.lists.empty()) throw Error(Errc::BadArguments, "coset construction needs two non-empty lists");
  const int n1 = a.lists[0].n(), k1 = a.lists[0].k(), n2 = b.lists[0].n(), k2 = b.lists[0].k();
  if (h.m != k1 || h.n != n2 - k2)
    throw Error(Errc::BadShape, "filler must be " + std::to_string(k1) + "x" + std::to_string(n2 - k2));
  const std::size_t s = std::min(a.size(), b.size());
  const int d = std::min({a.intra_d, b.intra_d, 2 * h.delta});
  CosetResult res{Cdc(f.q(), n1 + n2, k1 + k2, d, "coset construction"), s, a.size() - s, b.size() - s};
  Matrix g = Matrix::Zero(k1 + k2, n1 + n2);
  for (std::size_t i = 0; i < s; ++i)
    for (const auto& u : a.lists[i].members())
      for (const auto& v : b.lists[i].members())
        for (const auto& hm : h.members) {
          g.topLeftCorner(k1, n1) = u.gen();
          g.topRightCorner(k1, n2) = phi_embed(f, v.gen(), hm);
          g.bottomRightCorner(k2, n2) = v.gen();
          res.code.insert(Subspace::span(f, g));
        }
  return res;
}

Cdc parallel_linkage(const Field& f, const Cdc& u1, const Cdc& u2, const MatrixSet& m1, const MatrixSet& m2) {
  const int k = u1.k(), n1 = u1.n(), n2 = u2.n();
  if (u2.k() != k || m1.m != k || m1.n != n2 || m2.m != k || m2.n != n1)
    throw Error(Errc::BadShape, "parallel linkage shapes do not line up");
  const int d = std::min({u1.d(), u2.d(), 2 * m1.delta, 2 * m2.delta});
  Cdc out(f.q(), n1 + n2, k, d, "parallel linkage");
  Matrix g(k, n1 + n2);
  for (const auto& u : u1.members())
    for (const auto& m : m1.members) {
      g << u.gen(), m;
      out.insert(Subspace::span(f, g));
    }
  for (const auto& u : u2.members())
    for (const auto& m : m2.members) {
      g << m, u.gen();
      out.insert(Subspace::span(f, g));
    }
  return out;
}

BigCount SizeProfile::length() const {
  BigCount t = 0;
  for (const auto& r : runs) t += r.count;
  return t;
}

BigCount SizeProfile::total() const {
  BigCount t = 0;
  for (const auto& r : runs) t += r.size * r.count;
  return t;
}

SizeProfile SizeProfile::sorted() const {
  std::vector<SizeRun> v;
  for (const auto& r : runs)
    if (r.count > 0) v.push_back(r);
  std::stable_sort(v.begin(), v.end(), [](const SizeRun& x, const SizeRun& y) { return x.size > y.size; });
  SizeProfile out;
  for (const auto& r : v) {
    if (!out.runs.empty() && out.runs.back().size == r.size) out.runs.back().count += r.count;
    else out.runs.push_back(r);
  }
  return out;
}

SizeProfile profile_of(const CdcList& l) {
  SizeProfile p;
  for (const auto& c : l.lists) {
    if (!p.runs.empty() && p.runs.back().size == c.size()) p.runs.back().count += 1;
    else p.runs.push_back({BigCount(c.size()), 1});
  }
  return p;
}

RunPairing reorder_pairing(const SizeProfile& a, const SizeProfile& b) {
  const SizeProfile sa = a.sorted(), sb = b.sorted();
  RunPairing out{{}, 0, 0, 0, 0};
  std::size_t i = 0, j = 0;
  BigCount left_a = sa.runs.empty() ? BigCount(0) : sa.runs[0].count;
  BigCount left_b = sb.runs.empty() ? BigCount(0) : sb.runs[0].count;
  while (i < sa.runs.size() && j < sb.runs.size()) {
    const BigCount c = std::min(left_a, left_b);
    out.runs.push_back({sa.runs[i].size, sb.runs[j].size, c});
    out.total += sa.runs[i].size * sb.runs[j].size * c;
    out.used += c;
    left_a -= c;
    left_b -= c;
    if (left_a == 0 && ++i < sa.runs.size()) left_a = sa.runs[i].count;
    if (left_b == 0 && ++j < sb.runs.size()) left_b = sb.runs[j].count;
  }
  out.truncated_a = sa.length() - out.used;
  out.truncated_b = sb.length() - out.used;
  return out;
}

IndexPairing reorder_pairing(const std::vector<BigCount>& a, const std::vector<BigCount>& b) {
  auto order = [](const std::vector<BigCount>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return v[x] > v[y]; });
    return idx;
  };
  const auto ia = order(a), ib = order(b);
  IndexPairing out{{}, 0};
  for (std::size_t t = 0; t < std::min(ia.size(), ib.size()); ++t) {
    out.pairs.emplace_back(ia[t], ib[t]);
    out.total += a[ia[t]] * b[ib[t]];
  }
  return out;
}

VectorCosets vector_cosets(const Field& f, const IdVec& v, int delta1, int delta2) {
  if (!(delta1 > delta2 && delta2 > 0)) throw Error(Errc::BadArguments, "need delta1 > delta2 > 0");
  VectorCosets c;
  c.v = v;
  const FerrersDiagram d = ferrers_of(v).diagram;
  c.dim1 = d.empty() ? 0 : singleton_bound(d, delta1);
  c.dim2 = d.empty() ? 0 : singleton_bound(d, delta2);
  c.d_v = ipow(f.q(), c.dim1);
  c.s_v = ipow(f.q(), c.dim2 - c.dim1);
  return c;
}

namespace {

void check_group(const CwcSet& g, int delta1) {
  if (g.min_hd < 2 * delta1)
    throw Error(Errc::NotACwc, "group needs minimum Hamming distance " + std::to_string(2 * delta1));
}

}  // namespace

SizeProfile coset_profile(const Field& f, const std::vector<CwcSet>& groups, int delta1, int delta2,
                          std::optional<int> r) {
  if (r && *r > 0) return profile_of(build_coset_cdc_lists(f, groups, delta1, delta2, r));
  SizeProfile out;
  for (const auto& g : groups) {
    check_group(g, delta1);
    if (r) {
      // only the zero matrix of coset 0 survives, one per vector
      out.runs.push_back({BigCount(g.vectors.size()), 1});
      continue;
    }
    std::vector<VectorCosets> vc;
    for (const auto& v : g.vectors) vc.push_back(vector_cosets(f, v, delta1, delta2));
    std::stable_sort(vc.begin(), vc.end(), [](const VectorCosets& x, const VectorCosets& y) { return x.s_v > y.s_v; });
    BigCount cum = 0;
    for (std::size_t i = 0; i < vc.size(); ++i) {
      cum += vc[i].d_v;
      const BigCount next = i + 1 < vc.size() ? vc[i + 1].s_v : BigCount(0);
      if (vc[i].s_v > next) out.runs.push_back({cum, vc[i].s_v - next});
    }
  }
  return out;
}

CdcList build_coset_cdc_lists(const Field& f, const std::vector<CwcSet>& groups, int delta1, int delta2,
                              std::optional<int> r) {
  CdcList out;
  out.intra_d = 2 * delta1;
  out.inter_d = 2 * delta2;
  out.restricted_rank = r;
  for (const auto& g : groups) {
    check_group(g, delta1);
    struct PerVector {
      IdVec v;
      std::vector<MatrixSet> cosets;
    };
    std::vector<PerVector> pv;
    for (const auto& v : g.vectors) {
      const NestedPair p = nested_pair(f, ferrers_of(v).diagram, delta1, delta2);
      if (v.kind == VecKind::Inverse) pv.push_back({v, coset_list_inverse(f, p, r, true).cosets});
      else if (r) throw Error(Errc::BadArguments, "rank restriction needs inverse vectors");
      else pv.push_back({v, coset_list(f, p)});
    }
    std::stable_sort(pv.begin(), pv.end(),
                     [](const PerVector& x, const PerVector& y) { return x.cosets.size() > y.cosets.size(); });
    const std::size_t len = pv.empty() ? 0 : pv[0].cosets.size();
    for (std::size_t i = 0; i < len; ++i) {
      Cdc entry(f.q(), g.n, g.weight, 2 * delta1, "coset list entry " + std::to_string(out.lists.size() + 1));
      for (const auto& e : pv)
        if (i < e.cosets.size()) entry.merge(lift_on_vector(f, e.v, e.cosets[i]));
      out.lists.push_back(std::move(entry));
    }
  }
  return out;
}

}  // namespace grass
