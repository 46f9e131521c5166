#pragma once

#include <Eigen/Core>

#include "passhom/error.hpp"
#include "passhom/surface.hpp"

namespace passhom {

// Overflow-checked 64-bit arithmetic.  Every evaluation path that is fed by
// user-controlled magnitudes (matrix entries, word exponents, class
// coefficients) goes through these instead of raw operators.

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(ErrorCode::EntryOverflow, "addition overflows 64-bit range");
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out))
    throw Error(ErrorCode::EntryOverflow, "subtraction overflows 64-bit range");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorCode::EntryOverflow, "multiplication overflows 64-bit range");
  return out;
}

// x^T V x with checked arithmetic.  Zero factors short-circuit so sparse
// classes never trip the overflow check on irrelevant entries.
template <typename DerivedV, typename DerivedX>
Int quadratic_value(const Eigen::MatrixBase<DerivedV>& V_, const Eigen::MatrixBase<DerivedX>& x_) {
  const auto& V = V_.derived();
  const auto& x = x_.derived();
  if (V.rows() != V.cols() || x.size() != V.rows())
    throw Error(ErrorCode::DimensionMismatch, "quadratic evaluation requires |x| = n for an n x n matrix");
  Int acc = 0;
  for (Index i = 0; i < x.size(); ++i) {
    const Int xi = x(i);
    if (xi == 0) continue;
    for (Index j = 0; j < x.size(); ++j) {
      const Int xj = x(j);
      if (xj == 0 || V(i, j) == 0) continue;
      acc = checked_add(acc, checked_mul(checked_mul(xi, V(i, j)), xj));
    }
  }
  return acc;
}

// x^T A y with checked arithmetic.
template <typename DerivedA, typename DerivedX, typename DerivedY>
Int bilinear_value(const Eigen::MatrixBase<DerivedA>& A_, const Eigen::MatrixBase<DerivedX>& x_,
                   const Eigen::MatrixBase<DerivedY>& y_) {
  const auto& A = A_.derived();
  const auto& x = x_.derived();
  const auto& y = y_.derived();
  if (x.size() != A.rows() || y.size() != A.cols())
    throw Error(ErrorCode::DimensionMismatch, "bilinear evaluation dimension mismatch");
  Int acc = 0;
  for (Index i = 0; i < x.size(); ++i) {
    const Int xi = x(i);
    if (xi == 0) continue;
    for (Index j = 0; j < y.size(); ++j) {
      const Int yj = y(j);
      if (yj == 0 || A(i, j) == 0) continue;
      acc = checked_add(acc, checked_mul(checked_mul(xi, A(i, j)), yj));
    }
  }
  return acc;
}

template <typename DerivedA, typename DerivedB>
IntMatrix checked_product(const Eigen::MatrixBase<DerivedA>& A_, const Eigen::MatrixBase<DerivedB>& B_) {
  const auto& A = A_.derived();
  const auto& B = B_.derived();
  if (A.cols() != B.rows())
    throw Error(ErrorCode::DimensionMismatch, "matrix product dimension mismatch");
  IntMatrix out(A.rows(), B.cols());
  for (Index i = 0; i < A.rows(); ++i) {
    for (Index j = 0; j < B.cols(); ++j) {
      Int acc = 0;
      for (Index k = 0; k < A.cols(); ++k) {
        if (A(i, k) == 0 || B(k, j) == 0) continue;
        acc = checked_add(acc, checked_mul(A(i, k), B(k, j)));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

template <typename DerivedM, typename DerivedX>
IntVector checked_apply(const Eigen::MatrixBase<DerivedM>& M_, const Eigen::MatrixBase<DerivedX>& x_) {
  const auto& M = M_.derived();
  const auto& x = x_.derived();
  if (M.cols() != x.size())
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector product dimension mismatch");
  IntVector out(M.rows());
  for (Index i = 0; i < M.rows(); ++i) {
    Int acc = 0;
    for (Index k = 0; k < M.cols(); ++k) {
      if (M(i, k) == 0 || x(k) == 0) continue;
      acc = checked_add(acc, checked_mul(M(i, k), x(k)));
    }
    out(i) = acc;
  }
  return out;
}

template <typename DerivedA, typename DerivedB>
bool exactly_equal(const Eigen::MatrixBase<DerivedA>& A, const Eigen::MatrixBase<DerivedB>& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
  return (A.derived().array() == B.derived().array()).all();
}

inline Int mod2(Int v) noexcept { return v & 1; }

}  // namespace passhom
