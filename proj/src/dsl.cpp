#include "passhom/dsl.hpp"

#include <cctype>
#include <charconv>

namespace passhom {

namespace {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

struct Line {
  int number = 0;  // 1-based
  std::vector<Token> tokens;
};

// Split into lines, strip comments, tokenize on blanks.  Keeps only lines
// that still hold tokens.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++number;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t t = 0;
    while (t < raw.size()) {
      while (t < raw.size() && (raw[t] == ' ' || raw[t] == '\t' || raw[t] == '\r')) ++t;
      if (t >= raw.size()) break;
      const std::size_t start = t;
      while (t < raw.size() && raw[t] != ' ' && raw[t] != '\t' && raw[t] != '\r') ++t;
      line.tokens.push_back(Token{raw.substr(start, t - start), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void syntax_error(const Line& line, int column, const std::string& expected) {
  throw Error(ErrorCode::SyntaxError, expected, line.number, column);
}

Int parse_integer(const Line& line, const Token& token, Int min_value, Int max_value,
                  const std::string& what) {
  std::string_view text = token.text;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  Int value = 0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || result.ec != std::errc{} || result.ptr != text.data() + text.size())
    syntax_error(line, token.column, "expected " + what);
  if (value < min_value || value > max_value)
    syntax_error(line, token.column, what + " out of range");
  return value;
}

// "genus=<int>" / "boundary=<int>"
Int parse_keyed_integer(const Line& line, const Token& token, std::string_view key) {
  const std::string expected = std::string(key) + "=<integer>";
  const auto eq = token.text.find('=');
  if (eq == std::string_view::npos || token.text.substr(0, eq) != key)
    syntax_error(line, token.column, "expected " + expected);
  const Token value{token.text.substr(eq + 1), token.column + static_cast<int>(eq) + 1};
  return parse_integer(line, value, 0, kMaxRank, expected);
}

SurfaceSignature parse_header(const Line& line) {
  if (line.tokens.size() != 3)
    syntax_error(line, line.tokens[0].column, "expected '" + std::string(line.tokens[0].text) +
                                                  " genus=<g> boundary=<k>'");
  const Int genus = parse_keyed_integer(line, line.tokens[1], "genus");
  const Int boundary = parse_keyed_integer(line, line.tokens[2], "boundary");
  if (boundary < 1) syntax_error(line, line.tokens[2].column, "boundary must be at least 1");
  SurfaceSignature sig{genus, boundary};
  validate_signature(sig);
  return sig;
}

Index parse_band(const Line& line, const Token& token, const SurfaceSignature& sig) {
  try {
    return band_index(sig, token.text);
  } catch (const Error& e) {
    throw Error(e.code(), std::string(e.what()), line.number, token.column);
  }
}

Int parse_sign(const Line& line, const Token& token) {
  if (token.text == "+" || token.text == "+1") return 1;
  if (token.text == "-" || token.text == "-1") return -1;
  syntax_error(line, token.column, "expected sign '+' or '-'");
}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(text[0])) || text[0] == '_')) return false;
  for (char c : text)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

void parse_word_line(const Line& line, const SurfaceSignature& sig, std::vector<NamedWord>& words) {
  if (line.tokens.size() < 2)
    syntax_error(line, line.tokens[0].column, "expected 'word <name> <twist terms>'");
  const Token& name = line.tokens[1];
  if (!is_identifier(name.text)) syntax_error(line, name.column, "expected a word name");
  for (const NamedWord& existing : words)
    if (existing.name == name.text)
      syntax_error(line, name.column, "duplicate word definition '" + std::string(name.text) + "'");

  std::string source;
  for (std::size_t t = 2; t < line.tokens.size(); ++t) {
    if (!source.empty()) source += ' ';
    source += line.tokens[t].text;
  }
  const int source_column = line.tokens.size() > 2 ? line.tokens[2].column : name.column;
  try {
    words.push_back(NamedWord{std::string(name.text), parse_twist_word(source, sig)});
  } catch (const Error& e) {
    const int column = e.line() > 0 ? source_column + e.column() - 1 : source_column;
    throw Error(e.code(), std::string(e.what()), line.number, column);
  }
}

}  // namespace

const SurfaceSignature& SurfaceDocument::signature() const {
  if (const auto* bands = std::get_if<BandPresentation>(&surface)) return bands->signature;
  return std::get<MatrixBlock>(surface).signature;
}

const TwistWord* SurfaceDocument::find_word(std::string_view name) const {
  for (const NamedWord& w : words)
    if (w.name == name) return &w.word;
  return nullptr;
}

SurfaceDocument parse_document(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty())
    throw Error(ErrorCode::MissingSurfaceHeader, "document is empty; expected 'surface' or 'seifert' header", 1, 1);

  const Line& header = lines.front();
  SurfaceDocument doc;

  if (header.tokens[0].text == "surface") {
    BandPresentation bands;
    bands.signature = parse_header(header);
    for (std::size_t l = 1; l < lines.size(); ++l) {
      const Line& line = lines[l];
      const Token& keyword = line.tokens[0];
      if (keyword.text == "twist") {
        if (line.tokens.size() != 3)
          syntax_error(line, keyword.column, "expected 'twist <band> <integer>'");
        const Index band = parse_band(line, line.tokens[1], bands.signature);
        const Int amount = parse_integer(line, line.tokens[2], -kEntryBound, kEntryBound, "twist count");
        if (bands.twists.contains(band))
          throw Error(ErrorCode::DuplicateTwistDeclaration,
                      "band '" + std::string(line.tokens[1].text) + "' already has a twist declaration",
                      line.number, line.tokens[1].column);
        bands.twists.emplace(band, amount);
      } else if (keyword.text == "cross") {
        if (line.tokens.size() != 5 || line.tokens[2].text != "over")
          syntax_error(line, keyword.column, "expected 'cross <band> over <band> <sign>'");
        Crossing crossing;
        crossing.over = parse_band(line, line.tokens[1], bands.signature);
        crossing.under = parse_band(line, line.tokens[3], bands.signature);
        if (crossing.over == crossing.under)
          throw Error(ErrorCode::SelfCrossing,
                      "band '" + std::string(line.tokens[1].text) +
                          "' cannot cross itself; use 'twist' for self-linking",
                      line.number, line.tokens[3].column);
        crossing.sign = parse_sign(line, line.tokens[4]);
        bands.crossings.push_back(crossing);
      } else if (keyword.text == "word") {
        parse_word_line(line, bands.signature, doc.words);
      } else {
        syntax_error(line, keyword.column, "expected 'twist', 'cross' or 'word'");
      }
    }
    doc.surface = std::move(bands);
    return doc;
  }

  if (header.tokens[0].text == "seifert") {
    MatrixBlock block;
    block.signature = parse_header(header);
    const Index n = block.signature.rank();
    block.entries = IntMatrix::Zero(n, n);
    std::size_t l = 1;
    for (Index row = 0; row < n; ++row, ++l) {
      if (l >= lines.size())
        throw Error(ErrorCode::SyntaxError,
                    "expected " + std::to_string(n) + " matrix rows, found " + std::to_string(row),
                    header.number, header.tokens[0].column);
      const Line& line = lines[l];
      if (static_cast<Index>(line.tokens.size()) != n)
        syntax_error(line, line.tokens[0].column,
                     "expected " + std::to_string(n) + " entries in matrix row " + std::to_string(row + 1));
      for (Index col = 0; col < n; ++col)
        block.entries(row, col) = parse_integer(line, line.tokens[static_cast<std::size_t>(col)],
                                                -kEntryBound, kEntryBound, "matrix entry");
    }
    for (; l < lines.size(); ++l) {
      const Line& line = lines[l];
      if (line.tokens[0].text != "word")
        syntax_error(line, line.tokens[0].column, "only 'word' lines may follow a seifert block");
      parse_word_line(line, block.signature, doc.words);
    }
    doc.surface = std::move(block);
    return doc;
  }

  throw Error(ErrorCode::MissingSurfaceHeader, "expected 'surface' or 'seifert' header", header.number,
              header.tokens[0].column);
}

SeifertForm elaborate_seifert(const BandPresentation& presentation) {
  validate_signature(presentation.signature);
  const Index n = presentation.signature.rank();
  const IntMatrix J = intersection_form(presentation.signature).matrix;

  // Base linking of the flat disk-band embedding: strictly lower triangle
  // of J, which makes V - V^T = J before any twists or crossings.
  IntMatrix V = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < i; ++j) V(i, j) = J(i, j);

  for (const auto& [band, amount] : presentation.twists) {
    if (band < 0 || band >= n)
      throw Error(ErrorCode::IndexOutOfRange, "twist band index " + std::to_string(band) + " out of range");
    V(band, band) = checked_add(V(band, band), amount);
  }
  for (const Crossing& crossing : presentation.crossings) {
    if (crossing.over < 0 || crossing.over >= n || crossing.under < 0 || crossing.under >= n)
      throw Error(ErrorCode::IndexOutOfRange, "crossing band index out of range");
    if (crossing.over == crossing.under)
      throw Error(ErrorCode::SelfCrossing, "crossing of a band with itself");
    // A band-over-band crossing moves both symmetric linking numbers.
    V(crossing.over, crossing.under) = checked_add(V(crossing.over, crossing.under), crossing.sign);
    V(crossing.under, crossing.over) = checked_add(V(crossing.under, crossing.over), crossing.sign);
  }
  return validate_seifert(std::move(V), presentation.signature);
}

SeifertForm document_form(const SurfaceDocument& doc) {
  if (const auto* bands = std::get_if<BandPresentation>(&doc.surface)) return elaborate_seifert(*bands);
  const auto& block = std::get<MatrixBlock>(doc.surface);
  return validate_seifert(block.entries, block.signature);
}

std::string serialize(const SurfaceDocument& doc) {
  std::string out;
  const SurfaceSignature& sig = doc.signature();
  if (const auto* bands = std::get_if<BandPresentation>(&doc.surface)) {
    out += "surface genus=" + std::to_string(sig.genus) + " boundary=" + std::to_string(sig.boundary_count) + "\n";
    for (const auto& [band, amount] : bands->twists)
      out += "twist " + band_name(sig, band) + " " + std::to_string(amount) + "\n";
    for (const Crossing& crossing : bands->crossings)
      out += "cross " + band_name(sig, crossing.over) + " over " + band_name(sig, crossing.under) + " " +
             (crossing.sign > 0 ? "+" : "-") + "\n";
  } else {
    const auto& block = std::get<MatrixBlock>(doc.surface);
    out += "seifert genus=" + std::to_string(sig.genus) + " boundary=" + std::to_string(sig.boundary_count) + "\n";
    for (Index i = 0; i < block.entries.rows(); ++i) {
      for (Index j = 0; j < block.entries.cols(); ++j) {
        if (j > 0) out += ' ';
        out += std::to_string(block.entries(i, j));
      }
      out += '\n';
    }
  }
  for (const NamedWord& w : doc.words) out += "word " + w.name + " " + format_twist_word(w.word, sig) + "\n";
  return out;
}

}  // namespace passhom
