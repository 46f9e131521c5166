#include "passhom/forms.hpp"

#include "passhom/error.hpp"

namespace passhom {

IntersectionForm intersection_form(const SurfaceSignature& sig) {
  validate_signature(sig);
  const Index n = sig.rank();
  IntMatrix J = IntMatrix::Zero(n, n);
  for (Int i = 0; i < sig.genus; ++i) {
    J(2 * i, 2 * i + 1) = 1;
    J(2 * i + 1, 2 * i) = -1;
  }
  return IntersectionForm{sig, std::move(J)};
}

SeifertForm validate_seifert(IntMatrix V, const SurfaceSignature& sig) {
  validate_signature(sig);
  const Index n = sig.rank();
  if (V.rows() != n || V.cols() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "Seifert matrix is " + std::to_string(V.rows()) + "x" + std::to_string(V.cols()) +
                    " but the signature has rank " + std::to_string(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (V(i, j) > kEntryBound || V(i, j) < -kEntryBound)
        throw Error(ErrorCode::EntryOverflow, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                  ") = " + std::to_string(V(i, j)) + " exceeds bound " +
                                                  std::to_string(kEntryBound));
  const IntMatrix J = intersection_form(sig).matrix;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (V(i, j) - V(j, i) != J(i, j))
        throw Error(ErrorCode::NotSeifert, "V - V^T differs from the intersection form at (" +
                                               std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  return SeifertForm(sig, std::move(V));
}

Int Mod2QuadraticForm::value(const Eigen::Ref<const IntVector>& x) const {
  const Index n = diag.size();
  if (x.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "class has length " + std::to_string(x.size()) +
                                                  " but the form has rank " + std::to_string(n));
  Int acc = 0;
  for (Index i = 0; i < n; ++i) {
    if (mod2(x(i)) == 0) continue;
    acc ^= diag(i);
    for (Index j = i + 1; j < n; ++j)
      if (mod2(x(j)) != 0) acc ^= bilinear(i, j);
  }
  return acc;
}

Mod2QuadraticForm mod2_form(const SeifertForm& S) {
  const Index n = S.rank();
  Mod2QuadraticForm q;
  q.diag = IntVector(n);
  for (Index i = 0; i < n; ++i) q.diag(i) = mod2(S.matrix()(i, i));
  const IntMatrix J = intersection_form(S.signature()).matrix;
  q.bilinear = J.unaryExpr([](Int v) { return mod2(v); });
  return q;
}

Int self_linking_mod2(const SeifertForm& S, const Eigen::Ref<const HomologyClass>& x) {
  if (x.size() != S.rank())
    throw Error(ErrorCode::DimensionMismatch, "class has length " + std::to_string(x.size()) +
                                                  " but the form has rank " + std::to_string(S.rank()));
  // Reduce first: the value only depends on x mod 2, and reduced entries can
  // never overflow (n^2 terms bounded by kEntryBound).
  const IntVector reduced = x.unaryExpr([](Int v) { return mod2(v); });
  Int acc = 0;
  for (Index i = 0; i < x.size(); ++i) {
    if (reduced(i) == 0) continue;
    for (Index j = 0; j < x.size(); ++j)
      if (reduced(j) != 0) acc += S.matrix()(i, j);
  }
  return mod2(acc);
}

Int self_linking(const SeifertForm& S, const Eigen::Ref<const HomologyClass>& x) {
  if (x.size() != S.rank())
    throw Error(ErrorCode::DimensionMismatch, "class has length " + std::to_string(x.size()) +
                                                  " but the form has rank " + std::to_string(S.rank()));
  return quadratic_value(S.matrix(), x);
}

Int intersection_number(const IntersectionForm& J, const Eigen::Ref<const HomologyClass>& x,
                        const Eigen::Ref<const HomologyClass>& y) {
  if (x.size() != J.matrix.rows() || y.size() != J.matrix.rows())
    throw Error(ErrorCode::DimensionMismatch, "class length does not match the intersection form");
  return bilinear_value(J.matrix, x, y);
}

HomologyClass basis_sum(const SurfaceSignature& sig) {
  validate_signature(sig);
  return HomologyClass::Ones(sig.rank());
}

}  // namespace passhom
