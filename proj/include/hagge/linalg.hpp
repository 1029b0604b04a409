#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hagge/field.hpp"

namespace hagge {

template <Field F>
using Vec3 = std::array<F, 3>;

template <Field F>
bool is_zero_vec(const Vec3<F>& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

template <Field F>
Vec3<F> cross(const Vec3<F>& a, const Vec3<F>& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

template <Field F>
F dot(const Vec3<F>& a, const Vec3<F>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <Field F>
Vec3<F> scale(const Vec3<F>& v, const F& s) {
  return {v[0] * s, v[1] * s, v[2] * s};
}

template <Field F>
Vec3<F> add(const Vec3<F>& a, const Vec3<F>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

template <Field F>
Vec3<F> sub(const Vec3<F>& a, const Vec3<F>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

template <Field F>
F det3(const Vec3<F>& a, const Vec3<F>& b, const Vec3<F>& c) {
  return dot(a, cross(b, c));
}

/// Row-major 3x3 matrix over an exact field.
template <Field F>
struct Mat3 {
  std::array<F, 9> a;

  const F& at(int i, int j) const { return a[3 * i + j]; }
  F& at(int i, int j) { return a[3 * i + j]; }

  static Mat3 from_rows(const Vec3<F>& r0, const Vec3<F>& r1, const Vec3<F>& r2) {
    return Mat3{{r0[0], r0[1], r0[2], r1[0], r1[1], r1[2], r2[0], r2[1], r2[2]}};
  }
  static Mat3 diagonal(const F& d0, const F& d1, const F& d2) {
    const F z = d0.zero();
    return Mat3{{d0, z, z, z, d1, z, z, z, d2}};
  }

  Vec3<F> row(int i) const { return {at(i, 0), at(i, 1), at(i, 2)}; }
  Vec3<F> col(int j) const { return {at(0, j), at(1, j), at(2, j)}; }

  bool operator==(const Mat3&) const = default;
};

template <Field F>
Vec3<F> mul(const Mat3<F>& m, const Vec3<F>& v) {
  return {dot(m.row(0), v), dot(m.row(1), v), dot(m.row(2), v)};
}

template <Field F>
Mat3<F> mul(const Mat3<F>& x, const Mat3<F>& y) {
  Mat3<F> r = x;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.at(i, j) = x.at(i, 0) * y.at(0, j) + x.at(i, 1) * y.at(1, j) + x.at(i, 2) * y.at(2, j);
  return r;
}

template <Field F>
Mat3<F> transpose(const Mat3<F>& m) {
  return Mat3<F>::from_rows(m.col(0), m.col(1), m.col(2));
}

template <Field F>
F det(const Mat3<F>& m) {
  return det3(m.row(0), m.row(1), m.row(2));
}

// adj(M) * M = det(M) * I; exact and division-free.
template <Field F>
Mat3<F> adjugate(const Mat3<F>& m) {
  Mat3<F> r = m;
  auto minor2 = [&](int i0, int i1, int j0, int j1) {
    return m.at(i0, j0) * m.at(i1, j1) - m.at(i0, j1) * m.at(i1, j0);
  };
  r.at(0, 0) = minor2(1, 2, 1, 2);
  r.at(0, 1) = -minor2(0, 2, 1, 2);
  r.at(0, 2) = minor2(0, 1, 1, 2);
  r.at(1, 0) = -minor2(1, 2, 0, 2);
  r.at(1, 1) = minor2(0, 2, 0, 2);
  r.at(1, 2) = -minor2(0, 1, 0, 2);
  r.at(2, 0) = minor2(1, 2, 0, 1);
  r.at(2, 1) = -minor2(0, 2, 0, 1);
  r.at(2, 2) = minor2(0, 1, 0, 1);
  return r;
}

template <Field F>
Mat3<F> scale(const Mat3<F>& m, const F& s) {
  Mat3<F> r = m;
  for (auto& e : r.a) e = e * s;
  return r;
}

template <Field F>
Mat3<F> add(const Mat3<F>& x, const Mat3<F>& y) {
  Mat3<F> r = x;
  for (std::size_t i = 0; i < 9; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

template <Field F>
Mat3<F> sub(const Mat3<F>& x, const Mat3<F>& y) {
  Mat3<F> r = x;
  for (std::size_t i = 0; i < 9; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

using DenseShape = std::pair<std::size_t, std::size_t>;

/// Row echelon with exact pivots (first nonzero entry; magnitude has no
/// meaning here). Returns the rank; `rows` is left in reduced form.
template <Field F>
std::size_t reduce_in_place(std::vector<std::vector<F>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const F inv = rows[rank][col].one() / rows[rank][col];
    for (auto& e : rows[rank]) e = e * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const F f = rows[r][col];
      for (std::size_t c = 0; c < ncols; ++c) rows[r][c] = rows[r][c] - f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

template <Field F>
std::size_t rank_of(std::vector<std::vector<F>> rows) {
  return reduce_in_place(rows);
}

/// Basis of the right kernel of the (possibly non-square) matrix given by
/// `rows`; every returned vector has its leading free coordinate equal to 1.
template <Field F>
std::vector<std::vector<F>> kernel_basis(std::vector<std::vector<F>> rows) {
  if (rows.empty()) return {};
  const std::size_t ncols = rows[0].size();
  const F zero = rows[0][0].zero();
  const F one = rows[0][0].one();
  reduce_in_place(rows);

  // locate pivot column of each reduced row
  std::vector<long> pivot_col_of_row;
  std::vector<bool> is_pivot(ncols, false);
  for (const auto& r : rows) {
    long pc = -1;
    for (std::size_t c = 0; c < ncols; ++c)
      if (!r[c].is_zero()) { pc = static_cast<long>(c); break; }
    pivot_col_of_row.push_back(pc);
    if (pc >= 0) is_pivot[static_cast<std::size_t>(pc)] = true;
  }

  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(ncols, zero);
    v[free] = one;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const long pc = pivot_col_of_row[r];
      if (pc < 0) continue;
      v[static_cast<std::size_t>(pc)] = -rows[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Field F>
std::size_t rank(const Mat3<F>& m) {
  std::vector<std::vector<F>> rows = {
      {m.at(0, 0), m.at(0, 1), m.at(0, 2)},
      {m.at(1, 0), m.at(1, 1), m.at(1, 2)},
      {m.at(2, 0), m.at(2, 1), m.at(2, 2)}};
  return rank_of(std::move(rows));
}

}  // namespace hagge
