#include "passhom/mcg.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

namespace passhom {

namespace {

Int abs_gcd(const HomologyClass& a) {
  Int g = 0;
  for (Index i = 0; i < a.size(); ++i) g = std::gcd(g, std::abs(a(i)));
  return g;
}

}  // namespace

void validate_curve_class(const HomologyClass& a, const SurfaceSignature& sig) {
  validate_signature(sig);
  if (a.size() != sig.rank())
    throw Error(ErrorCode::DimensionMismatch, "curve class has length " + std::to_string(a.size()) +
                                                  " but the surface has rank " + std::to_string(sig.rank()));
  const Int g = abs_gcd(a);
  if (g == 0) throw Error(ErrorCode::ZeroClass, "curve class is zero");
  if (g != 1)
    throw Error(ErrorCode::NotPrimitive, "curve class has content " + std::to_string(g) +
                                             "; only primitive classes represent simple closed curves");
}

HomologyAutomorphism transvection_power(const HomologyClass& a, Int exponent, const SurfaceSignature& sig) {
  validate_curve_class(a, sig);
  const Index n = sig.rank();
  const IntMatrix J = intersection_form(sig).matrix;
  const IntVector Ja = checked_apply(J, a);
  IntMatrix M = IntMatrix::Identity(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (a(i) != 0 && Ja(j) != 0)
        M(i, j) = checked_add(M(i, j), checked_mul(exponent, checked_mul(a(i), Ja(j))));
  return HomologyAutomorphism{sig, std::move(M)};
}

HomologyAutomorphism transvection_matrix(const HomologyClass& a, const SurfaceSignature& sig) {
  return transvection_power(a, 1, sig);
}

HomologyAutomorphism compile_word(const TwistWord& word, const SurfaceSignature& sig) {
  validate_signature(sig);
  IntMatrix M = IntMatrix::Identity(sig.rank(), sig.rank());
  for (const TwistLetter& letter : word.letters) {
    if (letter.exponent == 0) continue;
    M = checked_product(M, transvection_power(letter.curve, letter.exponent, sig).matrix);
  }
  return HomologyAutomorphism{sig, std::move(M)};
}

TwistWord inverse_word(const TwistWord& word) {
  TwistWord out;
  out.letters.reserve(word.letters.size());
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    out.letters.push_back(TwistLetter{it->curve, -it->exponent});
  return out;
}

bool preserves_intersection_form(const HomologyAutomorphism& phi) {
  const IntMatrix J = intersection_form(phi.signature).matrix;
  if (phi.matrix.rows() != J.rows() || phi.matrix.cols() != J.cols()) return false;
  const IntMatrix JM = checked_product(J, phi.matrix);
  const IntMatrix MtJM = checked_product(phi.matrix.transpose(), JM);
  return exactly_equal(MtJM, J);
}

Int determinant_exact(IntMatrix A) {
  if (A.rows() != A.cols())
    throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const Index n = A.rows();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      Index pivot = -1;
      for (Index r = k + 1; r < n; ++r)
        if (A(r, k) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      A.row(k).swap(A.row(pivot));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        // Bareiss update; the division is exact.
        A(i, j) = checked_sub(checked_mul(A(i, j), A(k, k)), checked_mul(A(i, k), A(k, j))) / prev;
    prev = A(k, k);
  }
  return checked_mul(sign, A(n - 1, n - 1));
}

void validate_automorphism(const HomologyAutomorphism& phi) {
  validate_signature(phi.signature);
  const Index n = phi.signature.rank();
  if (phi.matrix.rows() != n || phi.matrix.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "automorphism matrix is " + std::to_string(phi.matrix.rows()) +
                                                  "x" + std::to_string(phi.matrix.cols()) +
                                                  " but the surface has rank " + std::to_string(n));
  if (!preserves_intersection_form(phi))
    throw Error(ErrorCode::NotFormPreserving, "matrix does not preserve the intersection form");
  const Int det = determinant_exact(phi.matrix);
  if (det != 1 && det != -1)
    throw Error(ErrorCode::NotFormPreserving, "matrix has determinant " + std::to_string(det) +
                                                  "; not invertible over the integers");
}

SeifertForm pushforward_form(const SeifertForm& S, const HomologyAutomorphism& phi) {
  if (phi.matrix.rows() != S.rank() || phi.matrix.cols() != S.rank() || !(phi.signature == S.signature()))
    throw Error(ErrorCode::DimensionMismatch, "automorphism does not match the form's surface");
  const IntMatrix VM = checked_product(S.matrix(), phi.matrix);
  IntMatrix MtVM = checked_product(phi.matrix.transpose(), VM);
  return validate_seifert(std::move(MtVM), S.signature());
}

std::optional<Index> membership_witness(const SeifertForm& S, const HomologyAutomorphism& phi) {
  if (!(phi.signature == S.signature()))
    throw Error(ErrorCode::DimensionMismatch, "automorphism does not match the form's surface");
  validate_automorphism(phi);
  const Mod2QuadraticForm q = mod2_form(S);
  for (Index i = 0; i < S.rank(); ++i)
    if (q.value(phi.matrix.col(i)) != q.diag(i)) return i;
  return std::nullopt;
}

bool is_realizable(const SeifertForm& S, const HomologyAutomorphism& phi) {
  return !membership_witness(S, phi).has_value();
}

bool is_realizable_exhaustive(const SeifertForm& S, const HomologyAutomorphism& phi) {
  if (!(phi.signature == S.signature()))
    throw Error(ErrorCode::DimensionMismatch, "automorphism does not match the form's surface");
  validate_automorphism(phi);
  const Index n = S.rank();
  if (n > 16)
    throw Error(ErrorCode::DimensionMismatch, "exhaustive membership check supports rank <= 16");
  const Mod2QuadraticForm q = mod2_form(S);
  IntVector x(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (Index i = 0; i < n; ++i) x(i) = static_cast<Int>((bits >> i) & 1);
    if (q.value(checked_apply(phi.matrix, x)) != q.value(x)) return false;
  }
  return true;
}

bool twist_is_realizable(const SeifertForm& S, const HomologyClass& a) {
  validate_curve_class(a, S.signature());
  if (self_linking_mod2(S, a) == 1) return true;
  const IntMatrix J = intersection_form(S.signature()).matrix;
  const IntVector Ja = checked_apply(J, a);
  for (Index i = 0; i < Ja.size(); ++i)
    if (mod2(Ja(i)) != 0) return false;  // not radical mod 2
  return true;
}

std::optional<DistinguishingTwist> distinguishing_twist(const SeifertForm& S, const SeifertForm& Sprime) {
  if (!(S.signature() == Sprime.signature()))
    throw Error(ErrorCode::DimensionMismatch, "forms live on different surfaces");
  const Index n = S.rank();
  // Both forms polarize to the same intersection form, so they are equal
  // exactly when they agree on the basis classes, i.e. on the diagonals.
  for (Index i = 0; i < n; ++i) {
    if (mod2(S.matrix()(i, i)) == mod2(Sprime.matrix()(i, i))) continue;
    DistinguishingTwist out;
    out.witness = HomologyClass::Zero(n);
    out.witness(i) = 1;
    const IntMatrix J = intersection_form(S.signature()).matrix;
    out.radical = true;
    for (Index r = 0; r < n; ++r)
      if (mod2(J(r, i)) != 0) out.radical = false;
    return out;
  }
  return std::nullopt;
}

namespace {

// --- twist-word text ---

[[noreturn]] void word_error(std::string_view what, std::size_t pos) {
  throw Error(ErrorCode::SyntaxError, std::string(what), 1, static_cast<int>(pos) + 1);
}

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' || text[pos] == '\n'))
    ++pos;
}

Int parse_int_at(std::string_view text, std::size_t& pos, std::string_view what) {
  skip_space(text, pos);
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  std::size_t digits = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == digits) word_error(std::string("expected ") + std::string(what), start);
  Int value = 0;
  const char* first = text.data() + (text[start] == '+' ? start + 1 : start);
  const auto result = std::from_chars(first, text.data() + pos, value);
  if (result.ec != std::errc{}) word_error("integer out of range", start);
  return value;
}

}  // namespace

TwistWord parse_twist_word(std::string_view text, const SurfaceSignature& sig) {
  validate_signature(sig);
  TwistWord word;
  std::size_t pos = 0;
  skip_space(text, pos);
  while (pos < text.size()) {
    if (text[pos] != 'T') word_error("expected 'T[' to start a twist term", pos);
    ++pos;
    if (pos >= text.size() || text[pos] != '[') word_error("expected '[' after 'T'", pos);
    ++pos;
    const std::size_t body_start = pos;
    const std::size_t close = text.find(']', pos);
    if (close == std::string_view::npos) word_error("unterminated twist term, missing ']'", body_start);

    std::string_view body = text.substr(body_start, close - body_start);
    // Trim the body; decide between band name and integer vector.
    std::size_t lead = 0;
    while (lead < body.size() && (body[lead] == ' ' || body[lead] == '\t')) ++lead;
    std::size_t trail = body.size();
    while (trail > lead && (body[trail - 1] == ' ' || body[trail - 1] == '\t')) --trail;
    const std::string_view core = body.substr(lead, trail - lead);
    if (core.empty()) word_error("empty twist curve", body_start);

    HomologyClass curve;
    if (looks_like_band_name(core)) {
      const Index idx = band_index(sig, core);  // throws UnknownBandName
      curve = HomologyClass::Zero(sig.rank());
      curve(idx) = 1;
    } else {
      std::vector<Int> coords;
      std::size_t p = 0;
      while (true) {
        coords.push_back(parse_int_at(core, p, "integer coordinate"));
        skip_space(core, p);
        if (p >= core.size()) break;
        if (core[p] != ',') word_error("expected ',' between coordinates", body_start + p);
        ++p;
      }
      if (static_cast<Index>(coords.size()) != sig.rank())
        throw Error(ErrorCode::DimensionMismatch,
                    "curve vector has " + std::to_string(coords.size()) + " coordinates but the surface has rank " +
                        std::to_string(sig.rank()));
      curve = HomologyClass(sig.rank());
      for (Index i = 0; i < sig.rank(); ++i) curve(i) = coords[static_cast<std::size_t>(i)];
    }

    pos = close + 1;
    Int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = parse_int_at(text, pos, "exponent");
      if (exponent == 0) word_error("twist exponent must be nonzero", pos);
    }
    validate_curve_class(curve, sig);
    word.letters.push_back(TwistLetter{std::move(curve), exponent});
    skip_space(text, pos);
  }
  return word;
}

std::string format_twist_word(const TwistWord& word, const SurfaceSignature& sig) {
  std::string out;
  for (const TwistLetter& letter : word.letters) {
    if (!out.empty()) out += ' ';
    out += "T[";
    // Basis vectors print as band names, everything else as coordinates.
    Index basis = -1;
    int nonzero = 0;
    for (Index i = 0; i < letter.curve.size(); ++i) {
      if (letter.curve(i) == 0) continue;
      ++nonzero;
      basis = i;
    }
    if (nonzero == 1 && letter.curve(basis) == 1) {
      out += band_name(sig, basis);
    } else {
      for (Index i = 0; i < letter.curve.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(letter.curve(i));
      }
    }
    out += ']';
    if (letter.exponent != 1) {
      out += '^';
      out += std::to_string(letter.exponent);
    }
  }
  return out;
}

}  // namespace passhom
