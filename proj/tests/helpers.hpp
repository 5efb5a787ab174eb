#pragma once

#include <doctest.h>

#include <initializer_list>
#include <random>

#include "grass/linalg.hpp"

namespace testutil {

inline grass::Matrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  grass::Matrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (int v : row) m(i, j++) = static_cast<grass::Elem>(v);
    ++i;
  }
  return m;
}

inline grass::Matrix random_matrix(std::mt19937_64& rng, int q, int r, int c) {
  std::uniform_int_distribution<int> d(0, q - 1);
  grass::Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = static_cast<grass::Elem>(d(rng));
  return m;
}

// Independent rank oracle: count the distinct vectors in the row span.
inline int span_log(const grass::Field& f, const grass::Matrix& m) {
  std::vector<grass::Matrix> span{grass::Matrix::Zero(1, m.cols())};
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    std::vector<grass::Matrix> next;
    for (const auto& s : span)
      for (int c = 0; c < f.q(); ++c) {
        grass::Matrix v = s;
        for (Eigen::Index j = 0; j < m.cols(); ++j)
          v(0, j) = f.add(v(0, j), f.mul(static_cast<grass::Elem>(c), m(r, j)));
        if (std::find(next.begin(), next.end(), v) == next.end()) next.push_back(v);
      }
    span = std::move(next);
  }
  int k = 0;
  for (std::size_t s = span.size(); s > 1; s /= static_cast<std::size_t>(f.q())) ++k;
  return k;
}

}  // namespace testutil
