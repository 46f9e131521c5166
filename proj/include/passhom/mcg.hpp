#pragma once

// Homology actions of Dehn-twist words and the realizability test.
//
// A right-handed Dehn twist about a simple closed curve of class a acts on
// H_1 by the transvection x -> x + <x, a> a, i.e. by the matrix
// I + a (J a)^T in the column-vector convention x -> M x.  A mapping class
// is realized by a regular homotopy of the embedding exactly when its
// action preserves the mod-2 self-linking form; since the action always
// preserves the polarization, checking the basis classes suffices.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "passhom/forms.hpp"

namespace passhom {

struct TwistLetter {
  HomologyClass curve;  // nonzero, primitive
  Int exponent = 1;     // nonzero

  friend bool operator==(const TwistLetter& a, const TwistLetter& b) {
    return a.exponent == b.exponent && exactly_equal(a.curve, b.curve);
  }
};

struct TwistWord {
  std::vector<TwistLetter> letters;  // leftmost letter is applied last

  friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

struct HomologyAutomorphism {
  SurfaceSignature signature;
  IntMatrix matrix;  // preserves the intersection form, det = +-1
};

// Throws ZeroClass / NotPrimitive / DimensionMismatch.
void validate_curve_class(const HomologyClass& a, const SurfaceSignature& sig);

HomologyAutomorphism transvection_matrix(const HomologyClass& a, const SurfaceSignature& sig);

// Closed form for T_a^m: I + m a (J a)^T, exact for every integer m.
HomologyAutomorphism transvection_power(const HomologyClass& a, Int exponent, const SurfaceSignature& sig);

HomologyAutomorphism compile_word(const TwistWord& word, const SurfaceSignature& sig);

TwistWord inverse_word(const TwistWord& word);

// M^T J M = J, exactly.
bool preserves_intersection_form(const HomologyAutomorphism& phi);

// Fraction-free (Bareiss) determinant, checked arithmetic throughout.
Int determinant_exact(IntMatrix A);

// Throws NotFormPreserving unless M preserves J and is unimodular.
void validate_automorphism(const HomologyAutomorphism& phi);

// Seifert matrix of the composed embedding: M^T V M, revalidated.
SeifertForm pushforward_form(const SeifertForm& S, const HomologyAutomorphism& phi);

// First basis index where q(M e_i) != q(e_i), if any.  Empty means the word
// is realizable.  Validates phi (NotFormPreserving on failure).
std::optional<Index> membership_witness(const SeifertForm& S, const HomologyAutomorphism& phi);

// True iff the mod-2 form is preserved, decided on the basis classes.
bool is_realizable(const SeifertForm& S, const HomologyAutomorphism& phi);

// Brute force over all 2^n classes; rank capped at 16.
bool is_realizable_exhaustive(const SeifertForm& S, const HomologyAutomorphism& phi);

// Fast path for a single twist: realizable iff q(a) = 1 or a lies in the
// radical of J mod 2.  Agrees with is_realizable(transvection_matrix(a)).
bool twist_is_realizable(const SeifertForm& S, const HomologyClass& a);

struct DistinguishingTwist {
  HomologyClass witness;
  // The twist about a radical class acts trivially on homology, so the two
  // membership answers coincide even though the forms differ on the class.
  bool radical = false;
};

// A class where the two mod-2 forms disagree, or nullopt when they are equal.
std::optional<DistinguishingTwist> distinguishing_twist(const SeifertForm& S, const SeifertForm& Sprime);

// Twist-word text: term*, term = "T[" curve "]" ("^" int)?, curve a band
// name or a comma-separated integer vector, e.g.  T[a1] T[1,0]^-2.
TwistWord parse_twist_word(std::string_view text, const SurfaceSignature& sig);
std::string format_twist_word(const TwistWord& word, const SurfaceSignature& sig);

}  // namespace passhom
