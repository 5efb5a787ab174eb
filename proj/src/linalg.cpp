#include "grass/linalg.hpp"


namespace grass {

BigCount ipow(long long base, long long e) {
  if (e < 0) throw Error(Errc::BadArguments, "negative exponent");
  BigCount r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

namespace {

void eliminate(const Field& f, Matrix& a, std::vector<int>& pivots) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  pivots.clear();
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const Elem s = f.inv(a(r, c));
    if (s != 1)
      for (Eigen::Index j = c; j < cols; ++j) a(r, j) = f.mul(s, a(r, j));
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || !a(i, c)) continue;
      const Elem t = f.neg(a(i, c));
      for (Eigen::Index j = c; j < cols; ++j)
        if (a(r, j)) a(i, j) = f.add(a(i, j), f.mul(t, a(r, j)));
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
}

}  // namespace

Echelon rref(const Field& f, const Eigen::Ref<const Matrix>& m) {
  Echelon e{Matrix(m), {}};
  eliminate(f, e.reduced, e.pivots);
  return e;
}

Echelon rrief(const Field& f, const Eigen::Ref<const Matrix>& m) {
  Matrix rev = m.rowwise().reverse();
  Echelon e = rref(f, rev);
  const int n = static_cast<int>(m.cols());
  Matrix back = e.reduced.rowwise().reverse();
  e.reduced = back;
  for (int& p : e.pivots) p = n - 1 - p;
  return e;
}

int rank(const Field& f, const Eigen::Ref<const Matrix>& m) {
  if (f.q() == 2 && m.cols() <= 64) return rank_packed(pack_rows(m));
  return static_cast<int>(rref(f, m).pivots.size());
}

bool is_rref(const Field& f, const Eigen::Ref<const Matrix>& m) {
  Echelon e = rref(f, m);
  return e.reduced == Matrix(m);
}

Matrix add(const Field& f, const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::BadShape, "add");
  Matrix r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = f.add(a(i, j), b(i, j));
  return r;
}

Matrix sub(const Field& f, const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::BadShape, "sub");
  Matrix r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = f.sub(a(i, j), b(i, j));
  return r;
}

Matrix scale(const Field& f, Elem c, const Eigen::Ref<const Matrix>& a) {
  Matrix r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = f.mul(c, a(i, j));
  return r;
}

void axpy(const Field& f, Elem c, const Eigen::Ref<const Matrix>& a, Matrix& acc) {
  if (!c) return;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j)) acc(i, j) = f.add(acc(i, j), f.mul(c, a(i, j)));
}

Matrix mul(const Field& f, const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b) {
  if (a.cols() != b.rows()) throw Error(Errc::BadShape, "mul");
  Matrix r = Matrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index l = 0; l < a.cols(); ++l) {
      const Elem x = a(i, l);
      if (!x) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) r(i, j) = f.add(r(i, j), f.mul(x, b(l, j)));
    }
  return r;
}

Matrix nullspace(const Field& f, const Eigen::Ref<const Matrix>& m) {
  Echelon e = rref(f, m);
  const int n = static_cast<int>(m.cols());
  std::vector<char> is_pivot(n, 0);
  for (int p : e.pivots) is_pivot[p] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(free_cols.size()), n);
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    const int fc = free_cols[t];
    out(t, fc) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      out(t, e.pivots[i]) = f.neg(e.reduced(i, fc));
  }
  return out;
}

std::vector<std::uint64_t> pack_rows(const Eigen::Ref<const Matrix>& m) {
  std::vector<std::uint64_t> rows(m.rows(), 0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j)) rows[i] |= std::uint64_t{1} << j;
  return rows;
}

int rank_packed(std::vector<std::uint64_t> rows) {
  int r = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i]) continue;
    const std::uint64_t low = rows[i] & (~rows[i] + 1);
    ++r;
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j] & low) rows[j] ^= rows[i];
  }
  return r;
}

Subspace Subspace::span(const Field& f, const Eigen::Ref<const Matrix>& gen) {
  Echelon e = rref(f, gen);
  const auto k = static_cast<Eigen::Index>(e.pivots.size());
  return Subspace(e.reduced.topRows(k));
}

Subspace Subspace::from_rref(const Field& f, Matrix gen) {
  Echelon e = rref(f, gen);
  if (static_cast<Eigen::Index>(e.pivots.size()) != gen.rows() || !(e.reduced == gen))
    throw Error(Errc::NotRref, "generator is not a full-rank RREF matrix");
  return Subspace(std::move(gen));
}

std::string Subspace::key() const {
  std::string s;
  s.reserve(2 + gen_.size());
  s.push_back(static_cast<char>(gen_.rows()));
  s.push_back(static_cast<char>(gen_.cols()));
  s.append(reinterpret_cast<const char*>(gen_.data()), static_cast<std::size_t>(gen_.size()));
  return s;
}

int subspace_distance(const Field& f, const Subspace& u, const Subspace& v) {
  if (u.n() != v.n()) throw Error(Errc::AmbientMismatch, "subspace_distance");
  Matrix stack(u.k() + v.k(), u.n());
  stack << u.gen(), v.gen();
  return 2 * rank(f, stack) - u.k() - v.k();
}

BigCount gaussian_binomial(int n, int k, int q) {
  if (k < 0 || n < 0 || k > n) throw Error(Errc::BadArguments, "gaussian_binomial k > n");
  BigCount num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow(q, n - i) - 1;
    den *= ipow(q, k - i) - 1;
  }
  return num / den;
}

std::vector<Subspace> enumerate_grassmannian(const Field& f, int n, int k) {
  std::vector<Subspace> out;
  if (k < 0 || k > n) throw Error(Errc::BadArguments, "enumerate_grassmannian");
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<char> is_piv(n, 0);
    for (int p : piv) is_piv[p] = 1;
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < k; ++i)
      for (int j = piv[i] + 1; j < n; ++j)
        if (!is_piv[j]) free_pos.emplace_back(i, j);
    Matrix g = Matrix::Zero(k, n);
    for (int i = 0; i < k; ++i) g(i, piv[i]) = 1;
    std::vector<int> digit(free_pos.size(), 0);
    for (bool done = false; !done;) {
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        g(free_pos[t].first, free_pos[t].second) = static_cast<Elem>(digit[t]);
      out.push_back(Subspace::from_rref(f, g));
      std::size_t t = 0;
      for (; t < free_pos.size(); ++t) {
        if (++digit[t] < f.q()) break;
        digit[t] = 0;
      }
      done = t == free_pos.size();
    }
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

}  // namespace grass
