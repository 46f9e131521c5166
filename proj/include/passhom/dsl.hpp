#pragma once

// Text format for disk-band surface presentations.
//
//   document   := surface-line (twist-line | cross-line | word-line)*
//               | seifert-block word-line*
//   surface-line := "surface" "genus=" INT "boundary=" INT
//   twist-line := "twist" BAND SIGNEDINT
//   cross-line := "cross" BAND "over" BAND SIGN
//   word-line  := "word" IDENT twist-term*
//   seifert-block := "seifert" "genus=" INT "boundary=" INT
//                    followed by n rows of n signed integers
//   BAND := ("a"|"b"|"c") INT      SIGN := "+" | "-" | "+1" | "-1"
//
// '#' starts a comment, blank lines are ignored, one declaration per line.
// Conventional file extension: .srf (never required).

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "passhom/forms.hpp"
#include "passhom/mcg.hpp"

namespace passhom {

struct Crossing {
  Index over = 0;   // 0-based band index
  Index under = 0;  // 0-based band index, always != over
  Int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Bands with signed full twists and signed inter-band crossings.  Bands are
// thin neighborhoods of the spine curves; the flat base embedding is fixed,
// so twists and crossings determine the Seifert matrix completely.
struct BandPresentation {
  SurfaceSignature signature;
  std::map<Index, Int> twists;      // band index -> signed full twists
  std::vector<Crossing> crossings;  // declaration order preserved

  friend bool operator==(const BandPresentation&, const BandPresentation&) = default;
};

struct MatrixBlock {
  SurfaceSignature signature;
  IntMatrix entries;

  friend bool operator==(const MatrixBlock& a, const MatrixBlock& b) {
    return a.signature == b.signature && exactly_equal(a.entries, b.entries);
  }
};

struct NamedWord {
  std::string name;
  TwistWord word;

  friend bool operator==(const NamedWord&, const NamedWord&) = default;
};

struct SurfaceDocument {
  std::variant<BandPresentation, MatrixBlock> surface;
  std::vector<NamedWord> words;

  const SurfaceSignature& signature() const;
  const TwistWord* find_word(std::string_view name) const;

  friend bool operator==(const SurfaceDocument&, const SurfaceDocument&) = default;
};

// Total on arbitrary bytes: either returns a document or throws Error with
// a 1-based line/column.
SurfaceDocument parse_document(std::string_view text);

// V = V_flat + C + T: base linking of the flat embedding (the strictly
// lower triangle of J), the symmetric crossing-count matrix, and the
// diagonal twist matrix.  Always yields a valid Seifert form.
SeifertForm elaborate_seifert(const BandPresentation& presentation);

// Seifert form of whichever surface description the document holds.
SeifertForm document_form(const SurfaceDocument& doc);

// Canonical text; parse_document(serialize(d)) is structurally equal to d.
std::string serialize(const SurfaceDocument& doc);

}  // namespace passhom
