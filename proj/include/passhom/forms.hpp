#pragma once

// Linking data of a surface embedded in the 3-sphere, in exact integers.
//
// Conventions fixed here and used everywhere else:
//  * spine basis order a_1, b_1, ..., a_g, b_g, c_1, ..., c_{k-1};
//  * intersection form J with J(a_i, b_i) = +1, J(b_i, a_i) = -1, zero
//    elsewhere; the c-classes span the radical;
//  * a Seifert matrix V holds lk(curve_i, curve_j^+) and satisfies
//    V - V^T = J, entries bounded by kEntryBound so that all quadratic
//    evaluations fit checked 64-bit arithmetic.
//
// The mod-2 quadratic form x -> x^T V x (mod 2) and its integer lift
// x -> x^T V x are the complete regular-homotopy invariants this library
// computes with.

#include "passhom/checked.hpp"
#include "passhom/error.hpp"
#include "passhom/surface.hpp"

namespace passhom {

inline constexpr Int kEntryBound = Int{1} << 20;

struct IntersectionForm {
  SurfaceSignature signature;
  IntMatrix matrix;  // antisymmetric, entries in {-1, 0, +1}
};

IntersectionForm intersection_form(const SurfaceSignature& sig);

// An n x n Seifert matrix validated against its signature.  Construction
// only through validate_seifert keeps the invariant V - V^T = J true by
// fiat everywhere downstream.
class SeifertForm {
 public:
  const SurfaceSignature& signature() const noexcept { return signature_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  Index rank() const noexcept { return matrix_.rows(); }

  friend SeifertForm validate_seifert(IntMatrix V, const SurfaceSignature& sig);
  friend bool operator==(const SeifertForm& a, const SeifertForm& b) {
    return a.signature_ == b.signature_ && exactly_equal(a.matrix_, b.matrix_);
  }

 private:
  SeifertForm(SurfaceSignature sig, IntMatrix V) : signature_(sig), matrix_(std::move(V)) {}

  SurfaceSignature signature_;
  IntMatrix matrix_;
};

SeifertForm validate_seifert(IntMatrix V, const SurfaceSignature& sig);

// The mod-2 quadratic form of a Seifert matrix: values on the basis are the
// diagonal mod 2, the polarization is the intersection form mod 2.
struct Mod2QuadraticForm {
  IntVector diag;      // entries in {0, 1}
  IntMatrix bilinear;  // J mod 2, symmetric

  // q(x) computed from x mod 2; well defined on H_1(F; Z_2).
  Int value(const Eigen::Ref<const IntVector>& x) const;
};

Mod2QuadraticForm mod2_form(const SeifertForm& S);

// q(x) = x^T V x (mod 2).  Depends only on x mod 2.
Int self_linking_mod2(const SeifertForm& S, const Eigen::Ref<const HomologyClass>& x);

// The integer lift x^T V x, evaluated with checked arithmetic.
Int self_linking(const SeifertForm& S, const Eigen::Ref<const HomologyClass>& x);

// Algebraic intersection number <x, y> = x^T J y.
Int intersection_number(const IntersectionForm& J, const Eigen::Ref<const HomologyClass>& x,
                        const Eigen::Ref<const HomologyClass>& y);

// The sum of all spine basis classes (the all-ones vector).
HomologyClass basis_sum(const SurfaceSignature& sig);

}  // namespace passhom
