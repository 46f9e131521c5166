#pragma once

// Seeded randomized property suite, exposed both to the CLI selftest
// command and to the test binaries.  Generators are shared; the checks
// here restate the algebraic identities the library is built on.

#include <string>
#include <vector>

#include "passhom/dsl.hpp"
#include "passhom/forms.hpp"
#include "passhom/mcg.hpp"
#include "passhom/pass.hpp"
#include "passhom/rng.hpp"

namespace passhom {

struct PropertyResult {
  std::string name;
  bool passed = true;
  long cases = 0;
  std::string detail;  // first failure, empty when passed
};

// Runs every property with case counts scaled by `size` (also the rank
// cap).  size = 0 runs nothing and passes vacuously.
std::vector<PropertyResult> run_selftest(std::uint64_t seed, int size);

// --- shared generators ---

// A signature with rank in [min_rank, max_rank] (uniform over the stored
// table of small signatures).
SurfaceSignature random_signature(SplitMix64& rng, Index min_rank, Index max_rank);

// A valid Seifert form: flat base + random symmetric crossings + twists.
SeifertForm random_seifert(SplitMix64& rng, const SurfaceSignature& sig, Int max_entry);

HomologyClass random_class(SplitMix64& rng, const SurfaceSignature& sig, Int max_coeff);
HomologyClass random_primitive_class(SplitMix64& rng, const SurfaceSignature& sig, Int max_coeff);

TwistWord random_word(SplitMix64& rng, const SurfaceSignature& sig, int max_letters, Int max_coeff);

// A word whose compiled action is guaranteed realizable for S: letters are
// single twists about classes with odd self-linking, or squared twists.
TwistWord random_realizable_word(SplitMix64& rng, const SeifertForm& S, int max_letters, Int max_coeff);

PassSequence random_pass_sequence(SplitMix64& rng, Index rank, int max_moves);

BandPresentation random_presentation(SplitMix64& rng, const SurfaceSignature& sig, Int max_entry);

SurfaceDocument random_document(SplitMix64& rng, Index max_rank, Int max_entry);

}  // namespace passhom
