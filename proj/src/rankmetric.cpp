#include "grass/rankmetric.hpp"

#include <algorithm>
#include <string>

namespace grass {

namespace {

Matrix flatten(const std::vector<Matrix>& basis, int m, int n) {
  Matrix out(static_cast<Eigen::Index>(basis.size()), m * n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    out.row(static_cast<Eigen::Index>(i)) = basis[i].reshaped<Eigen::RowMajor>().transpose();
  return out;
}

void check_enumerable(const BigCount& size) {
  if (size > kEnumerationLimit)
    throw Error(Errc::TooLargeToEnumerate, "code has " + size.str() + " codewords");
}

}  // namespace

LinearMatrixCode make_linear_code(const Field& f, int m, int n, int delta, std::vector<Matrix> basis) {
  for (const auto& b : basis)
    if (b.rows() != m || b.cols() != n) throw Error(Errc::BadShape, "basis matrix shape");
  if (!basis.empty() && rank(f, flatten(basis, m, n)) != static_cast<int>(basis.size()))
    throw Error(Errc::BadArguments, "basis matrices are linearly dependent");
  return LinearMatrixCode{f.q(), m, n, delta, std::move(basis)};
}

LinearMatrixCode zero_code(const Field& f, int m, int n, int delta) {
  return LinearMatrixCode{f.q(), m, n, delta, {}};
}

LinearMatrixCode gabidulin(const Field& f, int m, int n, int delta) {
  if (m < 1 || n < 1 || delta < 1 || delta > std::min(m, n))
    throw Error(Errc::BadShape, "gabidulin(" + std::to_string(m) + "x" + std::to_string(n) +
                                    ", delta=" + std::to_string(delta) + ")");
  if (m < n) return transpose(gabidulin(f, n, m, delta));

  ExtField ext(f, m);
  std::vector<ExtElem> points;
  for (int j = 0; j < n; ++j) points.push_back(ext.basis(j));

  std::vector<Matrix> basis;
  for (int i = 0; i <= n - delta; ++i) {
    std::vector<ExtElem> twisted;
    for (const auto& g : points) twisted.push_back(frobenius(ext, g, i));
    for (int l = 0; l < m; ++l) {
      std::vector<ExtElem> word;
      for (const auto& t : twisted) word.push_back(ext.mul(ext.basis(l), t));
      basis.push_back(expand_rows(ext, word));
    }
  }
  return make_linear_code(f, m, n, delta, std::move(basis));
}

LinearMatrixCode transpose(const LinearMatrixCode& c) {
  LinearMatrixCode t{c.q, c.n, c.m, c.delta, {}};
  for (const auto& b : c.basis) t.basis.push_back(b.transpose());
  return t;
}

Matrix combine(const Field& f, const std::vector<Matrix>& basis, const std::vector<Elem>& coeffs, int m,
               int n) {
  Matrix acc = Matrix::Zero(m, n);
  for (std::size_t i = 0; i < basis.size(); ++i) axpy(f, coeffs[i], basis[i], acc);
  return acc;
}

void for_each_codeword(const Field& f, const LinearMatrixCode& c,
                       const std::function<void(const Matrix&)>& visit) {
  check_enumerable(c.size());
  const int dim = c.dim();
  std::vector<Matrix> partial(dim + 1, Matrix::Zero(c.m, c.n));
  std::vector<int> digit(dim, 0);
  // depth-first over digits, level 0 outermost
  int level = 0;
  while (true) {
    if (level == dim) {
      visit(partial[dim]);
      --level;
      while (level >= 0 && digit[level] == f.q() - 1) {
        digit[level] = 0;
        --level;
      }
      if (level < 0) return;
      ++digit[level];
      partial[level + 1] = partial[level];
      axpy(f, static_cast<Elem>(digit[level]), c.basis[level], partial[level + 1]);
      ++level;
      continue;
    }
    partial[level + 1] = partial[level];
    axpy(f, static_cast<Elem>(digit[level]), c.basis[level], partial[level + 1]);
    ++level;
  }
}

std::vector<Matrix> codewords(const Field& f, const LinearMatrixCode& c) {
  std::vector<Matrix> out;
  for_each_codeword(f, c, [&](const Matrix& w) { out.push_back(w); });
  return out;
}

MatrixSet as_set(const Field& f, const LinearMatrixCode& c) {
  return MatrixSet{c.q, c.m, c.n, c.delta, codewords(f, c)};
}

int min_rank(const Field& f, const LinearMatrixCode& c) {
  int best = 0;
  bool seen = false;
  for_each_codeword(f, c, [&](const Matrix& w) {
    const int r = rank(f, w);
    if (r > 0 && (!seen || r < best)) {
      best = r;
      seen = true;
    }
  });
  return best;
}

int min_rank_distance(const Field& f, const MatrixSet& s) {
  int best = 0;
  bool seen = false;
  for (std::size_t i = 0; i < s.members.size(); ++i)
    for (std::size_t j = i + 1; j < s.members.size(); ++j) {
      const int r = rank(f, sub(f, s.members[i], s.members[j]));
      if (!seen || r < best) {
        best = r;
        seen = true;
      }
    }
  return best;
}

BigCount rank_distribution(int q, int m, int n, int delta, int r) {
  const int lo = std::min(m, n), hi = std::max(m, n);
  if (r < 0 || r > lo || delta < 1) throw Error(Errc::BadArguments, "rank_distribution r out of range");
  if (r == 0) return 1;
  if (r < delta) return 0;
  BigCount sum = 0;
  for (int i = 0; i <= r - delta; ++i) {
    BigCount term = ipow(q, i * (i - 1) / 2) * gaussian_binomial(r, i, q) *
                    (ipow(q, static_cast<long long>(hi) * (r - i - delta + 1)) - 1);
    if (i % 2) sum -= term;
    else sum += term;
  }
  return gaussian_binomial(lo, r, q) * sum;
}

BigCount mrd_size(int q, int m, int n, int delta) {
  const int lo = std::min(m, n), hi = std::max(m, n);
  if (delta > lo) return 1;
  return ipow(q, static_cast<long long>(hi) * (lo - delta + 1));
}

GrmcBound grmc_lower_bound(int q, int m, int n, int delta, int t1, int t2) {
  if (!(delta >= 1 && delta <= n && n <= m && t1 >= 0 && t1 <= t2 && t2 <= n))
    throw Error(Errc::BadArguments, "grmc_lower_bound needs delta <= n <= m, 0 <= t1 <= t2 <= n");
  if (t2 == 0) return GrmcBound{1, 0, std::nullopt};
  if (t2 >= delta) {
    BigCount s = 0;
    for (int i = t1; i <= t2; ++i) s += rank_distribution(q, m, n, delta, i);
    return GrmcBound{s, 1, std::nullopt};
  }
  GrmcBound best{0, 2, std::nullopt};
  const int lo = std::max(1, t1);
  for (int a = lo; a < delta; ++a) {
    BigCount num = 0;
    for (int i = lo; i <= t2; ++i) num += rank_distribution(q, m, n, a, i);
    const BigCount den = ipow(q, static_cast<long long>(m) * (delta - a)) - 1;
    const BigCount v = (num + den - 1) / den;
    if (!best.a || v > best.value) {
      best.value = v;
      best.a = a;
    }
  }
  return best;
}

MatrixSet restrict_ranks(const Field& f, const LinearMatrixCode& c, int t2) {
  MatrixSet s{c.q, c.m, c.n, c.delta, {}};
  for_each_codeword(f, c, [&](const Matrix& w) {
    if (rank(f, w) <= t2) s.members.push_back(w);
  });
  return s;
}

Cdc lift(const Field& f, const MatrixSet& s, Side side) {
  const int k = s.m, n = s.m + s.n;
  Cdc out(f.q(), n, k, 2 * s.delta, side == Side::Left ? "lifted (left)" : "lifted (right)");
  const Matrix id = Matrix::Identity(k, k);
  for (const auto& mtx : s.members) {
    Matrix g(k, n);
    if (side == Side::Left) g << id, mtx;
    else g << mtx, id;
    out.insert(Subspace::span(f, g));
  }
  return out;
}

Cdc lift(const Field& f, const LinearMatrixCode& c, Side side) { return lift(f, as_set(f, c), side); }

}  // namespace grass
