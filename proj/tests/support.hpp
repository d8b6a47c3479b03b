#pragma once

#include <initializer_list>

#include "codomin/error.hpp"
#include "codomin/linalg.hpp"
#include "doctest.h"

namespace testing {

using namespace codomin;

inline Vector vec(Field f, std::initializer_list<int> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (int x : xs) v(i++) = Scalar(f, x);
  return v;
}

inline Matrix mat(Field f, Index rows, Index cols, std::initializer_list<int> xs) {
  Matrix m(rows, cols);
  auto it = xs.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Scalar(f, *it++);
  return m;
}

inline Subspace span_of(Field f, std::initializer_list<Vector> vs) {
  const Index n = vs.begin()->size();
  Matrix rows(static_cast<Index>(vs.size()), n);
  Index i = 0;
  for (const auto& v : vs) rows.row(i++) = v.transpose();
  return Subspace::span(f, n, rows);
}

template <class Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::Unsupported;
}

}  // namespace testing
