#pragma once

// Pass moves on Seifert matrices and the signed-count calculus.
//
// A pass move exchanges two parallel sheets of bands.  On the linking
// matrix a + move between distinct bands i and j adds +1 to both V(i,j)
// and V(j,i); a + move of a band with itself adds +2 to V(i,i).  Either
// way the antisymmetric part V - V^T is untouched and the total shift of
// sum_{i,j} V(i,j) is +2, which is what makes the signed count
//   (+ moves) - (- moves) = ( sigma^T V' sigma - sigma^T V sigma ) / 2
// path independent (sigma the sum of all basis classes).

#include <string>
#include <string_view>
#include <vector>

#include "passhom/forms.hpp"
#include "passhom/mcg.hpp"

namespace passhom {

struct PassMove {
  Index i = 1;   // 1-based band index
  Index j = 1;   // 1-based band index; i == j is a self pass move
  Int sign = 1;  // +1 or -1

  friend bool operator==(const PassMove&, const PassMove&) = default;
};

using PassSequence = std::vector<PassMove>;

SeifertForm apply_pass_move(const SeifertForm& S, const PassMove& move);
SeifertForm apply_pass_sequence(const SeifertForm& S, const PassSequence& seq);

Int net_signed_count(const PassSequence& seq);

// Signed pass count of a realizable mapping class:
// ( q~(M sigma) - q~(sigma) ) / 2 with sigma = basis_sum.
// Throws NotFormPreserving if M does not preserve J, and OddParity if the
// word is not realizable (the count only exists on realizable classes).
Int signed_pass_count(const SeifertForm& S, const HomologyAutomorphism& phi);

// Same difference quotient evaluated at an arbitrary reference class.
// Only the evenness of the difference is checked here.
Int signed_pass_count_in_basis(const SeifertForm& S, const HomologyAutomorphism& phi,
                               const Eigen::Ref<const HomologyClass>& sigma);

// Two embeddings of the same surface are regular homotopic exactly when
// their mod-2 self-linking forms agree, i.e. when the diagonals agree mod 2.
bool regularly_homotopic(const SeifertForm& S, const SeifertForm& Sprime);

// A concrete pass sequence from S to S': off-diagonal moves first, then
// diagonal moves, indices ascending.  Throws NotEquivalent when the forms
// are not regular homotopic.
PassSequence find_pass_sequence(const SeifertForm& S, const SeifertForm& Sprime);

// Replays seq from S and compares with S'.
bool verify_sequence(const SeifertForm& S, const PassSequence& seq, const SeifertForm& Sprime);

// One move per line: "pass <i> <j> <+|->", 1-based indices.
std::string serialize_sequence(const PassSequence& seq);
PassSequence parse_sequence(std::string_view text);

}  // namespace passhom
