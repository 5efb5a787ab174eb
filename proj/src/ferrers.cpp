#include "grass/ferrers.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>

namespace grass {

FerrersDiagram::FerrersDiagram(std::vector<int> cols, Orientation o) : cols_(std::move(cols)), orientation_(o) {
  for (std::size_t i = 0; i < cols_.size(); ++i) {
    if (cols_[i] < 1) throw Error(Errc::BadArguments, "Ferrers column without dots: " + str());
    if (i > 0) {
      const bool ok = o == Orientation::Standard ? cols_[i - 1] <= cols_[i] : cols_[i - 1] >= cols_[i];
      if (!ok) throw Error(Errc::BadArguments, "column profile not monotone: " + str());
    }
  }
}

FerrersDiagram FerrersDiagram::full(int m, int n) {
  if (m < 0 || n < 0) throw Error(Errc::BadArguments, "negative shape");
  if (m == 0 || n == 0) return FerrersDiagram();
  return FerrersDiagram(std::vector<int>(n, m));
}

FerrersDiagram FerrersDiagram::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.rfind("F=", 0) == 0) s = s.substr(2);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error(Errc::ParseError, "diagram literal must look like F=[1,2,4]");
  s = s.substr(1, s.size() - 2);
  std::vector<int> cols;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(Errc::ParseError, "bad column count '" + item + "'");
    cols.push_back(std::stoi(item));
  }
  return FerrersDiagram(std::move(cols));
}

int FerrersDiagram::rows() const { return cols_.empty() ? 0 : *std::max_element(cols_.begin(), cols_.end()); }

int FerrersDiagram::dots() const { return std::accumulate(cols_.begin(), cols_.end(), 0); }

bool FerrersDiagram::is_full() const {
  return std::all_of(cols_.begin(), cols_.end(), [&](int c) { return c == rows(); });
}

std::vector<int> FerrersDiagram::row_counts() const {
  std::vector<int> rho(rows(), 0);
  for (int c : cols_)
    for (int r = 0; r < c; ++r) ++rho[r];
  return rho;
}

FerrersDiagram FerrersDiagram::transpose() const {
  if (orientation_ == Orientation::Inverse) return standard().transpose().inverse();
  std::vector<int> rho = row_counts();
  std::reverse(rho.begin(), rho.end());
  return FerrersDiagram(std::move(rho));
}

FerrersDiagram FerrersDiagram::inverse() const {
  std::vector<int> rev(cols_.rbegin(), cols_.rend());
  return FerrersDiagram(std::move(rev), orientation_ == Orientation::Standard ? Orientation::Inverse
                                                                               : Orientation::Standard);
}

FerrersDiagram FerrersDiagram::standard() const {
  return orientation_ == Orientation::Standard ? *this : inverse();
}

std::string FerrersDiagram::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < cols_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cols_[i]);
  }
  return s + "]";
}

int nu(const FerrersDiagram& f, int delta, int i) {
  if (delta < 1 || i < 0 || i > delta - 1) throw Error(Errc::BadArguments, "nu needs 0 <= i <= delta-1");
  const FerrersDiagram s = f.standard();
  const int keep = s.columns() - (delta - 1 - i);
  int total = 0;
  for (int c = 0; c < keep; ++c) total += std::max(0, s.cols()[c] - i);
  return total;
}

int singleton_bound(const FerrersDiagram& f, int delta) {
  int best = nu(f, delta, 0);
  for (int i = 1; i < delta; ++i) best = std::min(best, nu(f, delta, i));
  return best;
}

Matrix anti_transpose(const Matrix& m) { return m.transpose().reverse(); }

Matrix mirror_columns(const Matrix& m) { return m.rowwise().reverse(); }

bool support_ok(const FerrersDiagram& f, const Matrix& m) {
  if (m.rows() != f.rows() || m.cols() != f.columns()) return false;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (m(r, c) && !f.has_dot(static_cast<int>(r), static_cast<int>(c))) return false;
  return true;
}

bool full_tail_condition(const FerrersDiagram& d, int delta) {
  const FerrersDiagram s = d.standard();
  const int n = s.columns(), m = s.rows();
  if (delta - 1 > n) return false;
  for (int c = n - (delta - 1); c < n; ++c)
    if (s.cols()[c] != m) return false;
  return true;
}

namespace {

Matrix flatten(const std::vector<Matrix>& mats, int m, int n) {
  Matrix out(static_cast<Eigen::Index>(mats.size()), m * n);
  for (std::size_t i = 0; i < mats.size(); ++i)
    out.row(static_cast<Eigen::Index>(i)) = mats[i].reshaped<Eigen::RowMajor>().transpose();
  return out;
}

std::vector<Matrix> unflatten(const Matrix& rows, int m, int n) {
  std::vector<Matrix> out;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    Matrix mm(m, n);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c) mm(r, c) = rows(i, r * n + c);
    out.push_back(mm);
  }
  return out;
}

// Basis in RREF of the flattened coordinates, so equal spans give equal bases.
std::vector<Matrix> canonical_basis(const Field& f, const std::vector<Matrix>& mats, int m, int n) {
  if (mats.empty()) return {};
  Echelon e = rref(f, flatten(mats, m, n));
  return unflatten(e.reduced.topRows(static_cast<Eigen::Index>(e.pivots.size())), m, n);
}

std::vector<Matrix> unit_basis(const FerrersDiagram& d) {
  std::vector<Matrix> out;
  for (int r = 0; r < d.rows(); ++r)
    for (int c = 0; c < d.columns(); ++c)
      if (d.has_dot(r, c)) {
        Matrix u = Matrix::Zero(d.rows(), d.columns());
        u(r, c) = 1;
        out.push_back(u);
      }
  return out;
}

// Equivalent Gabidulin codes P G Q tried in turn; the identity comes first.
// Other evaluation points and extension bases are exactly such transforms.
constexpr int kTransformTries = 64;
// Random subspaces tried by the fallback search.
constexpr int kSearchTries = 4000;

struct Transform {
  Matrix p, q;
};

Matrix random_invertible(const Field& f, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, f.q() - 1);
  while (true) {
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = static_cast<Elem>(pick(rng));
    if (rank(f, m) == n) return m;
  }
}

Transform transform_at(const Field& f, int m, int n, int attempt, std::mt19937_64& rng) {
  if (attempt == 0) return {Matrix::Identity(m, m), Matrix::Identity(n, n)};
  Matrix p = random_invertible(f, m, rng);
  return {p, random_invertible(f, n, rng)};
}

std::vector<Matrix> transformed(const Field& f, const std::vector<Matrix>& basis, const Transform& t) {
  std::vector<Matrix> out;
  for (const auto& b : basis) out.push_back(mul(f, mul(f, t.p, b), t.q));
  return out;
}

// Subspace of span(basis) supported on the diagram.
LinearMatrixCode restrict_to_support(const Field& f, const FerrersDiagram& d, int delta,
                                     const std::vector<Matrix>& basis) {
  const int m = d.rows(), n = d.columns();
  std::vector<std::pair<int, int>> holes;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c)
      if (!d.has_dot(r, c)) holes.emplace_back(r, c);
  const int dim = static_cast<int>(basis.size());
  if (holes.empty()) return LinearMatrixCode{f.q(), m, n, delta, canonical_basis(f, basis, m, n)};
  Matrix a(static_cast<Eigen::Index>(holes.size()), dim);
  for (std::size_t h = 0; h < holes.size(); ++h)
    for (int i = 0; i < dim; ++i) a(h, i) = basis[i](holes[h].first, holes[h].second);
  Matrix null = nullspace(f, a);
  std::vector<Matrix> out;
  for (Eigen::Index t = 0; t < null.rows(); ++t) {
    std::vector<Elem> coeffs(null.row(t).data(), null.row(t).data() + dim);
    out.push_back(combine(f, basis, coeffs, m, n));
  }
  return LinearMatrixCode{f.q(), m, n, delta, canonical_basis(f, out, m, n)};
}

std::uint64_t seed_for(const FerrersDiagram& d, int q) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(q);
  for (int c : d.cols()) h = h * 1000003ULL + static_cast<std::uint64_t>(c);
  return h;
}

// Every nonzero codeword has rank >= delta (projective points only).
bool reaches_rank(const Field& f, const std::vector<Matrix>& basis, int delta, int m, int n) {
  const int k = static_cast<int>(basis.size());
  std::vector<Elem> co(k, 0);
  for (int lead = 0; lead < k; ++lead) {
    std::fill(co.begin(), co.end(), 0);
    co[lead] = 1;
    // odometer over the coordinates after lead
    while (true) {
      if (rank(f, combine(f, basis, co, m, n)) < delta) return false;
      int i = k - 1;
      while (i > lead && co[i] == f.q() - 1) co[i--] = 0;
      if (i == lead) break;
      ++co[i];
    }
  }
  return true;
}

// Seeded search for a dim-`bound` subcode of `ambient` with minimum rank delta.
std::optional<LinearMatrixCode> search_subcode(const Field& f, const FerrersDiagram& d, int delta, int bound,
                                               const std::vector<Matrix>& ambient) {
  const int m = d.rows(), n = d.columns(), a = static_cast<int>(ambient.size());
  if (bound > a || ipow(f.q(), bound) > kEnumerationLimit) return std::nullopt;
  std::mt19937_64 rng(seed_for(d, f.q()) ^ static_cast<std::uint64_t>(delta));
  std::uniform_int_distribution<int> pick(0, f.q() - 1);
  for (int attempt = 0; attempt < kSearchTries; ++attempt) {
    Matrix coeffs(bound, a);
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) coeffs.data()[i] = static_cast<Elem>(pick(rng));
    if (rank(f, coeffs) < bound) continue;
    std::vector<Matrix> basis;
    for (int r = 0; r < bound; ++r) {
      std::vector<Elem> co(coeffs.row(r).data(), coeffs.row(r).data() + a);
      basis.push_back(combine(f, ambient, co, m, n));
    }
    if (reaches_rank(f, basis, delta, m, n))
      return LinearMatrixCode{f.q(), m, n, delta, canonical_basis(f, basis, m, n)};
  }
  return std::nullopt;
}

// Optimal code on d at delta, or nullopt when no tried transform reaches the bound.
std::optional<LinearMatrixCode> gab_on_support(const Field& f, const FerrersDiagram& d, int delta, int bound) {
  const int m = d.rows(), n = d.columns();
  if (delta == 1) return make_linear_code(f, m, n, 1, unit_basis(d));
  if (bound == 0) return zero_code(f, m, n, delta);
  if (delta > std::min(m, n)) return std::nullopt;
  const LinearMatrixCode g = gabidulin(f, m, n, delta);
  std::mt19937_64 rng(seed_for(d, f.q()));
  for (int attempt = 0; attempt < kTransformTries; ++attempt) {
    LinearMatrixCode c = restrict_to_support(f, d, delta, transformed(f, g.basis, transform_at(f, m, n, attempt, rng)));
    if (c.dim() == bound) return c;
  }
  return std::nullopt;
}

LinearMatrixCode map_code(const LinearMatrixCode& c, Matrix (*fn)(const Matrix&)) {
  LinearMatrixCode out{c.q, 0, 0, c.delta, {}};
  if (c.basis.empty()) {
    Matrix probe = fn(Matrix::Zero(c.m, c.n));
    out.m = static_cast<int>(probe.rows());
    out.n = static_cast<int>(probe.cols());
    return out;
  }
  for (const auto& b : c.basis) out.basis.push_back(fn(b));
  out.m = static_cast<int>(out.basis[0].rows());
  out.n = static_cast<int>(out.basis[0].cols());
  return out;
}

std::vector<FerrersDiagram> candidate_orientations(const FerrersDiagram& d) {
  if (d.rows() >= d.columns()) return {d, d.transpose()};
  return {d.transpose(), d};
}

// Completes c1's basis to one of c2; nullopt when c1 is not inside c2.
std::optional<NestedPair> complete(const Field& f, const FerrersDiagram& d, const LinearMatrixCode& c1,
                                   const LinearMatrixCode& c2) {
  std::vector<Matrix> acc = c1.basis, comp;
  int r = static_cast<int>(acc.size());
  for (const auto& b : c2.basis) {
    acc.push_back(b);
    const int r2 = rank(f, flatten(acc, d.rows(), d.columns()));
    if (r2 > r) {
      comp.push_back(b);
      r = r2;
    } else {
      acc.pop_back();
    }
  }
  if (r != c2.dim()) return std::nullopt;
  return NestedPair{FdrmCode{d, c1, true}, FdrmCode{d, c2, true}, comp};
}

}  // namespace

FdrmCode transpose(const FdrmCode& c) {
  if (c.diagram.orientation() == Orientation::Inverse) return inverse(transpose(inverse(c)));
  return FdrmCode{c.diagram.transpose(), map_code(c.code, &anti_transpose), c.optimal};
}

FdrmCode inverse(const FdrmCode& c) {
  return FdrmCode{c.diagram.inverse(), map_code(c.code, &mirror_columns), c.optimal};
}

FdrmCode optimal_fdrmc(const Field& f, const FerrersDiagram& d, int delta) {
  if (delta < 1) throw Error(Errc::BadArguments, "delta must be positive");
  if (d.orientation() == Orientation::Inverse) return inverse(optimal_fdrmc(f, d.standard(), delta));
  const int bound = singleton_bound(d, delta);
  if (bound == 0) return FdrmCode{d, zero_code(f, d.rows(), d.columns(), delta), true};
  if (delta == 1) return FdrmCode{d, *gab_on_support(f, d, 1, bound), true};
  for (const auto& cand : candidate_orientations(d)) {
    std::optional<LinearMatrixCode> c = gab_on_support(f, cand, delta, bound);
    if (!c) continue;
    FdrmCode out{cand, *c, true};
    return cand == d ? out : transpose(out);
  }
  if (auto c = search_subcode(f, d, delta, bound, unit_basis(d))) return FdrmCode{d, *c, true};
  throw Error(Errc::ConditionNotMet, "no constructive optimal code for F=" + d.str() + ", delta=" +
                                         std::to_string(delta) + " (full-tail condition " +
                                         (full_tail_condition(d, delta) ? "holds" : "fails") + ")");
}

FdrmCode compose_fdrmc(const Field& f, const FdrmCode& c1, const FdrmCode& c2, int m3, int n3) {
  if (c1.dim() != c2.dim())
    throw Error(Errc::DimensionMismatch, "compose needs equal dimensions, got " + std::to_string(c1.dim()) +
                                             " and " + std::to_string(c2.dim()));
  const FerrersDiagram& f1 = c1.diagram;
  const FerrersDiagram& f2 = c2.diagram;
  const int m1 = f1.rows(), n1 = f1.columns(), m2 = f2.rows(), n2 = f2.columns();
  if (m3 < m1 || n3 < n2) throw Error(Errc::BadArguments, "compose needs m3 >= m1 and n3 >= n2");
  const int m = m2 + m3, n = n1 + n3;
  std::vector<int> cols;
  for (int c = 0; c < n1; ++c) cols.push_back(f1.cols()[c]);
  for (int c = 0; c < n3; ++c) {
    const int c2idx = c - (n3 - n2);
    cols.push_back(m3 + (c2idx >= 0 ? f2.cols()[c2idx] : 0));
  }
  FerrersDiagram d(cols);
  LinearMatrixCode code{f.q(), m, n, c1.delta() + c2.delta(), {}};
  for (int i = 0; i < c1.dim(); ++i) {
    Matrix b = Matrix::Zero(m, n);
    b.block(0, 0, m1, n1) = c1.code.basis[i];
    b.block(m3, n - n2, m2, n2) = c2.code.basis[i];
    code.basis.push_back(b);
  }
  code = make_linear_code(f, m, n, code.delta, std::move(code.basis));
  return FdrmCode{d, code, code.dim() == singleton_bound(d, code.delta)};
}

FerrersDiagram th43_diagram(int n, int k) {
  if (!(n >= 2 * k && 2 * k >= 4)) throw Error(Errc::BadArguments, "th43 needs n >= 2k >= 4");
  const int c = (k - 1) / 2;
  std::vector<int> cols(n - k - 2, 1);
  cols.push_back(1 + c);
  cols.push_back(1 + 2 * c);
  return FerrersDiagram(cols);
}

FdrmCode th43_optimal_fdrmc(const Field& f, int n, int k) {
  FerrersDiagram target = th43_diagram(n, k);
  const int c = (k - 1) / 2;
  if (c == 0) return FdrmCode{target, zero_code(f, target.rows(), target.columns(), 3), true};
  std::vector<int> cols1(n - k - 2, 1);
  cols1.push_back(1 + c);
  FdrmCode c1 = optimal_fdrmc(f, FerrersDiagram(cols1), 2);
  FdrmCode c2 = optimal_fdrmc(f, FerrersDiagram({c}), 1);
  FdrmCode out = compose_fdrmc(f, c1, c2, 1 + c, 1);
  if (!(out.diagram == target) || out.dim() != c || singleton_bound(target, 3) != c)
    throw Error(Errc::ConditionNotMet, "composition did not give the expected optimal code");
  out.optimal = true;
  return out;
}

NestedPair nested_pair(const Field& f, const FerrersDiagram& d, int delta1, int delta2) {
  if (!(delta1 > delta2 && delta2 > 0)) throw Error(Errc::BadArguments, "nested_pair needs delta1 > delta2 > 0");
  if (d.orientation() == Orientation::Inverse) {
    NestedPair p = nested_pair(f, d.standard(), delta1, delta2);
    NestedPair out{inverse(p.c1), inverse(p.c2), {}};
    for (const auto& m : p.complement) out.complement.push_back(mirror_columns(m));
    return out;
  }
  const int b1 = singleton_bound(d, delta1), b2 = singleton_bound(d, delta2);
  for (const auto& cand : candidate_orientations(d)) {
    const int m = cand.rows(), n = cand.columns();
    std::optional<NestedPair> found;
    if (delta2 == 1 || b1 == 0) {
      // one side is trivial, no shared transform needed
      auto c2 = gab_on_support(f, cand, delta2, b2);
      auto c1 = gab_on_support(f, cand, delta1, b1);
      if (c1 && c2) found = complete(f, cand, *c1, *c2);
    } else if (delta2 <= std::min(m, n)) {
      // same transform for both, so containment is inherited from the Gabidulin prefix
      const LinearMatrixCode g2 = gabidulin(f, m, n, delta2);
      const LinearMatrixCode g1 = delta1 <= std::min(m, n) ? gabidulin(f, m, n, delta1) : zero_code(f, m, n, delta1);
      std::mt19937_64 rng(seed_for(cand, f.q()));
      for (int attempt = 0; attempt < kTransformTries && !found; ++attempt) {
        const Transform t = transform_at(f, m, n, attempt, rng);
        LinearMatrixCode c2 = restrict_to_support(f, cand, delta2, transformed(f, g2.basis, t));
        if (c2.dim() != b2) continue;
        LinearMatrixCode c1 = restrict_to_support(f, cand, delta1, transformed(f, g1.basis, t));
        if (c1.dim() != b1) continue;
        found = complete(f, cand, c1, c2);
      }
    }
    if (!found) continue;
    if (cand == d) return *found;
    NestedPair out{transpose(found->c1), transpose(found->c2), {}};
    for (const auto& mm : found->complement) out.complement.push_back(anti_transpose(mm));
    return out;
  }
  // fallback: search c1 inside an optimal c2
  if (delta2 > 1 || b2 > 0) {
    FdrmCode c2 = optimal_fdrmc(f, d, delta2);
    if (auto c1 = search_subcode(f, d, delta1, b1, c2.code.basis))
      if (auto p = complete(f, d, *c1, c2.code)) return *p;
  }
  throw Error(Errc::ConditionNotMet, "no constructive nested pair for F=" + d.str() + ", (" +
                                         std::to_string(delta1) + "," + std::to_string(delta2) + ")");
}

std::vector<MatrixSet> coset_list(const Field& f, const NestedPair& p) {
  const LinearMatrixCode& c1 = p.c1.code;
  const int t = p.quotient_dim();
  if (ipow(f.q(), c1.dim() + t) > kEnumerationLimit)
    throw Error(Errc::TooLargeToEnumerate, "coset list of " + ipow(f.q(), c1.dim() + t).str() + " matrices");
  const std::vector<Matrix> inner = codewords(f, c1);
  LinearMatrixCode quotient{f.q(), c1.m, c1.n, p.c2.delta(), p.complement};
  std::vector<MatrixSet> out;
  for_each_codeword(f, quotient, [&](const Matrix& rep) {
    MatrixSet s{f.q(), c1.m, c1.n, c1.delta, {}};
    s.members.reserve(inner.size());
    for (const auto& w : inner) s.members.push_back(add(f, rep, w));
    out.push_back(std::move(s));
  });
  return out;
}

RestrictedCosets coset_list_inverse(const Field& f, const NestedPair& p, std::optional<int> r, bool drop_empty) {
  if (p.c1.diagram.orientation() != Orientation::Inverse)
    throw Error(Errc::ConditionNotMet, "coset_list_inverse needs an inverse diagram");
  RestrictedCosets out;
  std::vector<MatrixSet> all = coset_list(f, p);
  for (std::size_t i = 0; i < all.size(); ++i) {
    MatrixSet s = std::move(all[i]);
    if (r) {
      std::vector<Matrix> kept;
      for (auto& m : s.members)
        if (rank(f, m) <= *r) kept.push_back(std::move(m));
      s.members = std::move(kept);
    }
    if (s.members.empty()) {
      if (!drop_empty)
        throw Error(Errc::EmptyAfterRestriction, "coset " + std::to_string(i + 1) + " has no member of rank <= " +
                                                     std::to_string(*r));
      out.dropped.push_back(i);
      continue;
    }
    out.cosets.push_back(std::move(s));
  }
  return out;
}

GfrmcBound gfrmc_lower_bound(const FerrersDiagram& d, int delta, int r, int q) {
  const FerrersDiagram s = d.standard();
  const int n = s.columns();
  if (r < 0 || n < r || delta < 1) throw Error(Errc::BadArguments, "gfrmc_lower_bound needs n >= r >= 0");
  GfrmcBound best{1, 1};
  if (r == 0) return best;
  for (int i = 1; i <= n; ++i) {
    const int rows = s.cols()[i - 1], cols = n - i;
    const int hi = std::max(rows, cols), lo = std::min(rows, cols);
    BigCount v = 1;
    if (lo >= 1 && delta <= lo) v = grmc_lower_bound(q, hi, lo, delta, 0, std::min(r, lo)).value;
    if (v > best.value) best = GfrmcBound{v, i};
  }
  return best;
}

}  // namespace grass
