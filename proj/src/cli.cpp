#include "passhom/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "passhom/dsl.hpp"
#include "passhom/forms.hpp"
#include "passhom/mcg.hpp"
#include "passhom/pass.hpp"
#include "passhom/selftest.hpp"

namespace passhom {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNegative = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SurfaceDocument load_document(const std::string& path) { return parse_document(read_file(path)); }

// Inline twist-word syntax wins; a bare identifier falls back to the
// document's named words.
TwistWord resolve_word(const SurfaceDocument& doc, const std::string& text) {
  const SurfaceSignature& sig = doc.signature();
  try {
    return parse_twist_word(text, sig);
  } catch (const Error&) {
    if (const TwistWord* named = doc.find_word(text)) return *named;
    throw;
  }
}

std::string format_class(const HomologyClass& x) {
  std::string out;
  for (Index i = 0; i < x.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(x(i));
  }
  return out;
}

void print_matrix_block(std::ostream& out, const SeifertForm& S) {
  const SurfaceSignature& sig = S.signature();
  out << "seifert genus=" << sig.genus << " boundary=" << sig.boundary_count << "\n";
  for (Index i = 0; i < S.rank(); ++i) {
    for (Index j = 0; j < S.rank(); ++j) {
      if (j > 0) out << ' ';
      out << S.matrix()(i, j);
    }
    out << "\n";
  }
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const SurfaceDocument doc = load_document(path);
  const SeifertForm S = document_form(doc);
  out << "valid: true\n";
  out << "genus: " << S.signature().genus << "\n";
  out << "boundary: " << S.signature().boundary_count << "\n";
  out << "rank: " << S.rank() << "\n";
  print_matrix_block(out, S);
  return kExitOk;
}

int cmd_member(const std::string& path, const std::string& word_text, bool want_witness, std::ostream& out) {
  const SurfaceDocument doc = load_document(path);
  const SeifertForm S = document_form(doc);
  const TwistWord word = resolve_word(doc, word_text);
  const HomologyAutomorphism phi = compile_word(word, S.signature());
  const auto witness = membership_witness(S, phi);
  out << "member: " << (witness.has_value() ? "false" : "true") << "\n";
  if (witness.has_value() && want_witness) {
    HomologyClass basis = HomologyClass::Zero(S.rank());
    basis(*witness) = 1;
    out << "witness: " << format_class(basis) << "\n";
  }
  return kExitOk;
}

int cmd_passcount(const std::string& path, const std::string& word_text, std::ostream& out) {
  const SurfaceDocument doc = load_document(path);
  const SeifertForm S = document_form(doc);
  const TwistWord word = resolve_word(doc, word_text);
  const HomologyAutomorphism phi = compile_word(word, S.signature());
  const Int count = signed_pass_count(S, phi);
  out << "signed_pass_count: " << count << "\n";
  return kExitOk;
}

int cmd_sequence(const std::string& path_a, const std::string& path_b, std::ostream& out) {
  const SeifertForm A = document_form(load_document(path_a));
  const SeifertForm B = document_form(load_document(path_b));
  if (!regularly_homotopic(A, B)) {
    out << "result: not regularly homotopic\n";
    if (const auto twist = distinguishing_twist(A, B)) {
      out << "witness: " << format_class(twist->witness) << "\n";
      out << "witness_radical: " << (twist->radical ? "true" : "false") << "\n";
    }
    return kExitNegative;
  }
  const PassSequence seq = find_pass_sequence(A, B);
  out << serialize_sequence(seq);
  out << "net: " << net_signed_count(seq) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& path_a, const std::string& seq_path, const std::string& path_b,
               std::ostream& out) {
  const SeifertForm A = document_form(load_document(path_a));
  const SeifertForm B = document_form(load_document(path_b));
  const PassSequence seq = parse_sequence(read_file(seq_path));
  const bool ok = verify_sequence(A, seq, B);
  out << "verified: " << (ok ? "true" : "false") << "\n";
  return ok ? kExitOk : kExitNegative;
}

int cmd_selftest(std::uint64_t seed, int size, std::ostream& out) {
  out << "seed: " << seed << "\n";
  out << "size: " << size << "\n";
  const std::vector<PropertyResult> results = run_selftest(seed, size);
  int failures = 0;
  for (const PropertyResult& r : results) {
    out << "property " << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.cases << " cases)";
    if (!r.passed) {
      out << " " << r.detail;
      ++failures;
    }
    out << "\n";
  }
  out << "properties: " << results.size() << "\n";
  out << "failures: " << failures << "\n";
  return failures == 0 ? kExitOk : kExitInternal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regular-homotopy calculator for surfaces embedded in the 3-sphere"};
  app.require_subcommand(1);

  std::string file_a, file_b, seq_file;
  std::string word_text;
  bool want_witness = false;
  std::uint64_t seed = 1;
  int size = 6;

  auto* validate = app.add_subcommand("validate", "parse a surface file and print its Seifert matrix");
  validate->add_option("file", file_a, "surface file")->required();

  auto* member = app.add_subcommand("member", "decide whether a twist word is realizable by regular homotopy");
  member->add_option("file", file_a, "surface file")->required();
  member->add_option("--word", word_text, "twist word, inline or a name from the file");
  member->add_flag("--witness", want_witness, "print a separating basis class when not realizable");

  auto* passcount = app.add_subcommand("passcount", "signed number of pass moves needed to realize a twist word");
  passcount->add_option("file", file_a, "surface file")->required();
  passcount->add_option("--word", word_text, "twist word, inline or a name from the file");

  auto* sequence = app.add_subcommand("sequence", "pass sequence turning one embedding into another");
  sequence->add_option("fileA", file_a, "source surface file")->required();
  sequence->add_option("fileB", file_b, "target surface file")->required();

  auto* verify = app.add_subcommand("verify", "replay a pass sequence and compare with a target");
  verify->add_option("fileA", file_a, "source surface file")->required();
  verify->add_option("sequence", seq_file, "pass sequence file")->required();
  verify->add_option("fileB", file_b, "target surface file")->required();

  auto* selftest = app.add_subcommand("selftest", "run the seeded property suite");
  selftest->add_option("--seed", seed, "random seed");
  selftest->add_option("--size", size, "size cap (0 runs nothing)")->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv;
  argv.push_back("passhom");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(file_a, out);
    if (app.got_subcommand(member)) return cmd_member(file_a, word_text, want_witness, out);
    if (app.got_subcommand(passcount)) return cmd_passcount(file_a, word_text, out);
    if (app.got_subcommand(sequence)) return cmd_sequence(file_a, file_b, out);
    if (app.got_subcommand(verify)) return cmd_verify(file_a, seq_file, file_b, out);
    if (app.got_subcommand(selftest)) return cmd_selftest(seed, size, out);
    err << "error: no subcommand\n";
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace passhom
