#include "passhom/pass.hpp"

#include <charconv>
#include <cstdlib>

namespace passhom {

namespace {

void check_move(const SeifertForm& S, const PassMove& move) {
  const Index n = S.rank();
  if (move.i < 1 || move.i > n || move.j < 1 || move.j > n)
    throw Error(ErrorCode::IndexOutOfRange, "pass move (" + std::to_string(move.i) + "," + std::to_string(move.j) +
                                                ") on a surface of rank " + std::to_string(n));
  if (move.sign != 1 && move.sign != -1)
    throw Error(ErrorCode::IndexOutOfRange, "pass move sign must be +1 or -1");
}

}  // namespace

SeifertForm apply_pass_move(const SeifertForm& S, const PassMove& move) {
  check_move(S, move);
  IntMatrix V = S.matrix();
  const Index i = move.i - 1;
  const Index j = move.j - 1;
  if (i == j) {
    V(i, i) = checked_add(V(i, i), 2 * move.sign);
  } else {
    V(i, j) = checked_add(V(i, j), move.sign);
    V(j, i) = checked_add(V(j, i), move.sign);
  }
  return validate_seifert(std::move(V), S.signature());
}

SeifertForm apply_pass_sequence(const SeifertForm& S, const PassSequence& seq) {
  SeifertForm out = S;
  for (const PassMove& move : seq) out = apply_pass_move(out, move);
  return out;
}

Int net_signed_count(const PassSequence& seq) {
  Int total = 0;
  for (const PassMove& move : seq) total = checked_add(total, move.sign);
  return total;
}

Int signed_pass_count(const SeifertForm& S, const HomologyAutomorphism& phi) {
  // membership_witness validates phi, throwing NotFormPreserving when the
  // matrix is not a mapping-class action at all.
  if (membership_witness(S, phi).has_value())
    throw Error(ErrorCode::OddParity,
                "mapping class is not realizable by regular homotopy (mod-2 form not preserved); "
                "the signed pass count is undefined");
  const HomologyClass sigma = basis_sum(S.signature());
  const Int after = self_linking(S, checked_apply(phi.matrix, sigma));
  const Int before = self_linking(S, sigma);
  const Int diff = checked_sub(after, before);
  if (mod2(diff) != 0)
    throw Error(ErrorCode::OddParity, "self-linking difference is odd; not realizable");
  return diff / 2;
}

Int signed_pass_count_in_basis(const SeifertForm& S, const HomologyAutomorphism& phi,
                               const Eigen::Ref<const HomologyClass>& sigma) {
  if (!(phi.signature == S.signature()) || phi.matrix.rows() != S.rank() || phi.matrix.cols() != S.rank())
    throw Error(ErrorCode::DimensionMismatch, "automorphism does not match the form's surface");
  const Int after = self_linking(S, checked_apply(phi.matrix, sigma));
  const Int before = self_linking(S, sigma);
  const Int diff = checked_sub(after, before);
  if (mod2(diff) != 0)
    throw Error(ErrorCode::OddParity, "self-linking difference is odd at the given reference class");
  return diff / 2;
}

bool regularly_homotopic(const SeifertForm& S, const SeifertForm& Sprime) {
  if (!(S.signature() == Sprime.signature()))
    throw Error(ErrorCode::DimensionMismatch, "forms live on different surfaces");
  for (Index i = 0; i < S.rank(); ++i)
    if (mod2(S.matrix()(i, i)) != mod2(Sprime.matrix()(i, i))) return false;
  return true;
}

PassSequence find_pass_sequence(const SeifertForm& S, const SeifertForm& Sprime) {
  if (!regularly_homotopic(S, Sprime))
    throw Error(ErrorCode::NotEquivalent, "forms are not regular homotopic; no pass sequence exists");
  const Index n = S.rank();
  const IntMatrix D = Sprime.matrix() - S.matrix();  // symmetric, even diagonal

  Int total = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) total = checked_add(total, std::abs(D(i, j)));
    total = checked_add(total, std::abs(D(i, i)) / 2);
  }
  if (total > (Int{1} << 26))
    throw Error(ErrorCode::EntryOverflow, "pass sequence of " + std::to_string(total) + " moves is too long");

  PassSequence seq;
  seq.reserve(static_cast<std::size_t>(total));
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const Int sign = D(i, j) > 0 ? 1 : -1;
      for (Int c = 0; c < std::abs(D(i, j)); ++c) seq.push_back(PassMove{i + 1, j + 1, sign});
    }
  for (Index i = 0; i < n; ++i) {
    const Int sign = D(i, i) > 0 ? 1 : -1;
    for (Int c = 0; c < std::abs(D(i, i)) / 2; ++c) seq.push_back(PassMove{i + 1, i + 1, sign});
  }
  return seq;
}

bool verify_sequence(const SeifertForm& S, const PassSequence& seq, const SeifertForm& Sprime) {
  if (!(S.signature() == Sprime.signature()))
    throw Error(ErrorCode::DimensionMismatch, "forms live on different surfaces");
  return apply_pass_sequence(S, seq) == Sprime;
}

std::string serialize_sequence(const PassSequence& seq) {
  std::string out;
  for (const PassMove& move : seq) {
    out += "pass ";
    out += std::to_string(move.i);
    out += ' ';
    out += std::to_string(move.j);
    out += ' ';
    out += move.sign >= 0 ? '+' : '-';
    out += '\n';
  }
  return out;
}

PassSequence parse_sequence(std::string_view text) {
  PassSequence seq;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty()) continue;

    // "pass <i> <j> <+|->"
    std::vector<std::string_view> tokens;
    std::size_t t = 0;
    while (t < line.size()) {
      while (t < line.size() && (line[t] == ' ' || line[t] == '\t')) ++t;
      if (t >= line.size()) break;
      std::size_t start = t;
      while (t < line.size() && line[t] != ' ' && line[t] != '\t') ++t;
      tokens.push_back(line.substr(start, t - start));
    }
    if (tokens.size() != 4 || tokens[0] != "pass")
      throw Error(ErrorCode::SyntaxError, "expected 'pass <i> <j> <+|->'", line_no, 1);
    PassMove move;
    for (int field = 1; field <= 2; ++field) {
      Int value = 0;
      const auto tok = tokens[static_cast<std::size_t>(field)];
      const auto result = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (result.ec != std::errc{} || result.ptr != tok.data() + tok.size())
        throw Error(ErrorCode::SyntaxError, "expected a band index", line_no, 1);
      (field == 1 ? move.i : move.j) = static_cast<Index>(value);
    }
    if (tokens[3] == "+" || tokens[3] == "+1")
      move.sign = 1;
    else if (tokens[3] == "-" || tokens[3] == "-1")
      move.sign = -1;
    else
      throw Error(ErrorCode::SyntaxError, "expected '+' or '-'", line_no, 1);
    seq.push_back(move);
  }
  return seq;
}

}  // namespace passhom
