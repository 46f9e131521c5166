#include "passhom/selftest.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace passhom {

namespace {

std::string case_tag(long index) { return " (case " + std::to_string(index) + ")"; }

template <typename Body>
void run_property(std::vector<PropertyResult>& out, SplitMix64& rng, const std::string& name, long cases,
                  Body&& body) {
  PropertyResult result{name, true, 0, ""};
  try {
    for (long c = 0; c < cases; ++c) {
      const std::string detail = body(rng);
      ++result.cases;
      if (!detail.empty()) {
        result.passed = false;
        result.detail = detail + case_tag(c);
        break;
      }
    }
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("unexpected exception: ") + e.what() + case_tag(result.cases);
  }
  out.push_back(std::move(result));
}

IntMatrix even_diagonal_perturbation(SplitMix64& rng, Index n, Int max_entry) {
  IntMatrix A(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) A(i, j) = rng.range(-max_entry, max_entry);
  return A + IntMatrix(A.transpose());
}

}  // namespace

SurfaceSignature random_signature(SplitMix64& rng, Index min_rank, Index max_rank) {
  std::vector<SurfaceSignature> table;
  for (Int g = 0; g <= 5; ++g)
    for (Int k = 1; k <= 10; ++k) {
      const SurfaceSignature sig{g, k};
      if (sig.rank() >= min_rank && sig.rank() <= max_rank) table.push_back(sig);
    }
  if (table.empty()) return SurfaceSignature{0, 1};
  return table[rng.below(table.size())];
}

SeifertForm random_seifert(SplitMix64& rng, const SurfaceSignature& sig, Int max_entry) {
  const Index n = sig.rank();
  const IntMatrix J = intersection_form(sig).matrix;
  IntMatrix V = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    V(i, i) = rng.range(-max_entry, max_entry);
    for (Index j = 0; j < i; ++j) {
      const Int symmetric = rng.range(-max_entry, max_entry);
      V(i, j) = symmetric + J(i, j);
      V(j, i) = symmetric;
    }
  }
  return validate_seifert(std::move(V), sig);
}

HomologyClass random_class(SplitMix64& rng, const SurfaceSignature& sig, Int max_coeff) {
  HomologyClass x(sig.rank());
  for (Index i = 0; i < x.size(); ++i) x(i) = rng.range(-max_coeff, max_coeff);
  return x;
}

HomologyClass random_primitive_class(SplitMix64& rng, const SurfaceSignature& sig, Int max_coeff) {
  for (;;) {
    HomologyClass x = random_class(rng, sig, max_coeff);
    Int g = 0;
    for (Index i = 0; i < x.size(); ++i) g = std::gcd(g, std::abs(x(i)));
    if (g == 0) continue;
    if (g > 1)
      for (Index i = 0; i < x.size(); ++i) x(i) /= g;
    return x;
  }
}

TwistWord random_word(SplitMix64& rng, const SurfaceSignature& sig, int max_letters, Int max_coeff) {
  TwistWord word;
  if (sig.rank() == 0) return word;
  const int letters = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_letters) + 1));
  for (int l = 0; l < letters; ++l) {
    Int exponent = rng.range(-2, 2);
    if (exponent == 0) exponent = 1;
    word.letters.push_back(TwistLetter{random_primitive_class(rng, sig, max_coeff), exponent});
  }
  return word;
}

TwistWord random_realizable_word(SplitMix64& rng, const SeifertForm& S, int max_letters, Int max_coeff) {
  TwistWord word;
  if (S.rank() == 0) return word;
  const int letters = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_letters) + 1));
  for (int l = 0; l < letters; ++l) {
    const HomologyClass a = random_primitive_class(rng, S.signature(), max_coeff);
    Int exponent;
    if (self_linking_mod2(S, a) == 1) {
      exponent = rng.range(-2, 2);
      if (exponent == 0) exponent = 1;
    } else {
      exponent = rng.coin() ? 2 : -2;  // squared twists are always realizable
    }
    word.letters.push_back(TwistLetter{a, exponent});
  }
  return word;
}

PassSequence random_pass_sequence(SplitMix64& rng, Index rank, int max_moves) {
  PassSequence seq;
  if (rank == 0) return seq;
  const int moves = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_moves) + 1));
  for (int m = 0; m < moves; ++m) {
    PassMove move;
    move.i = static_cast<Index>(rng.below(static_cast<std::uint64_t>(rank))) + 1;
    move.j = static_cast<Index>(rng.below(static_cast<std::uint64_t>(rank))) + 1;
    move.sign = rng.coin() ? 1 : -1;
    seq.push_back(move);
  }
  return seq;
}

BandPresentation random_presentation(SplitMix64& rng, const SurfaceSignature& sig, Int max_entry) {
  BandPresentation bands;
  bands.signature = sig;
  const Index n = sig.rank();
  for (Index i = 0; i < n; ++i)
    if (rng.coin()) bands.twists.emplace(i, rng.range(-max_entry, max_entry));
  if (n >= 2) {
    const int crossings = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * n) + 1));
    for (int c = 0; c < crossings; ++c) {
      Crossing crossing;
      crossing.over = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
      do {
        crossing.under = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
      } while (crossing.under == crossing.over);
      crossing.sign = rng.coin() ? 1 : -1;
      bands.crossings.push_back(crossing);
    }
  }
  return bands;
}

SurfaceDocument random_document(SplitMix64& rng, Index max_rank, Int max_entry) {
  SurfaceDocument doc;
  const SurfaceSignature sig = random_signature(rng, 0, max_rank);
  if (rng.coin()) {
    doc.surface = random_presentation(rng, sig, max_entry);
  } else {
    doc.surface = MatrixBlock{sig, random_seifert(rng, sig, max_entry).matrix()};
  }
  if (sig.rank() > 0) {
    const int words = static_cast<int>(rng.below(3));
    for (int w = 0; w < words; ++w)
      doc.words.push_back(NamedWord{"w" + std::to_string(w), random_word(rng, sig, 3, 2)});
  }
  return doc;
}

std::vector<PropertyResult> run_selftest(std::uint64_t seed, int size) {
  std::vector<PropertyResult> results;
  SplitMix64 rng(seed);
  const long base = 40L * size;
  const Index cap = std::max<Index>(size, 0);
  const Index class_cap = std::max<Index>(std::min<Index>(cap, 8), size > 0 ? 1 : 0);

  run_property(results, rng, "forms.mod2_descent", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 1, class_cap);
    const SeifertForm S = random_seifert(r, sig, 8);
    const HomologyClass x = random_class(r, sig, 6);
    const HomologyClass y = random_class(r, sig, 6);
    if (self_linking_mod2(S, x + 2 * y) != self_linking_mod2(S, x)) return "q mod 2 not invariant under x + 2y";
    return "";
  });

  run_property(results, rng, "forms.mod2_polarization", size > 0 ? 2L * size : 0L,
               [&](SplitMix64& r) -> std::string {
                 const Index n = std::min<Index>(class_cap, 6);
                 const SurfaceSignature sig = random_signature(r, n, n);
                 const SeifertForm S = random_seifert(r, sig, 8);
                 const IntersectionForm J = intersection_form(sig);
                 IntVector x(n), y(n);
                 for (std::uint64_t xb = 0; xb < (std::uint64_t{1} << n); ++xb)
                   for (std::uint64_t yb = 0; yb < (std::uint64_t{1} << n); ++yb) {
                     for (Index i = 0; i < n; ++i) {
                       x(i) = static_cast<Int>((xb >> i) & 1);
                       y(i) = static_cast<Int>((yb >> i) & 1);
                     }
                     const Int lhs = self_linking_mod2(S, x + y);
                     const Int rhs =
                         mod2(self_linking_mod2(S, x) + self_linking_mod2(S, y) + intersection_number(J, x, y));
                     if (lhs != rhs) return "polarization identity failed";
                   }
                 return "";
               });

  run_property(results, rng, "forms.quadratic_even", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 1, class_cap);
    const SeifertForm S = random_seifert(r, sig, 8);
    const HomologyClass x = random_class(r, sig, 6);
    if (self_linking(S, x) != self_linking(S, -x)) return "x^T V x != (-x)^T V (-x)";
    return "";
  });

  run_property(results, rng, "forms.symmetric_part_only", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 1, class_cap);
    const SeifertForm S = random_seifert(r, sig, 8);
    const HomologyClass x = random_class(r, sig, 6);
    if (quadratic_value(S.matrix(), x) != quadratic_value(S.matrix().transpose(), x))
      return "quadratic value depends on the antisymmetric part";
    if (intersection_number(intersection_form(sig), x, x) != 0) return "x^T J x != 0";
    return "";
  });

  run_property(results, rng, "dsl.roundtrip", base, [&](SplitMix64& r) -> std::string {
    const SurfaceDocument doc = random_document(r, class_cap, 8);
    const SurfaceDocument reparsed = parse_document(serialize(doc));
    if (!(reparsed == doc)) return "parse(serialize(doc)) != doc";
    if (serialize(reparsed) != serialize(doc)) return "serialization not canonical";
    return "";
  });

  run_property(results, rng, "dsl.elaboration_valid", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 0, class_cap);
    const SeifertForm S = elaborate_seifert(random_presentation(r, sig, 8));
    const IntMatrix J = intersection_form(sig).matrix;
    if (!exactly_equal(IntMatrix(S.matrix() - S.matrix().transpose()), J)) return "V - V^T != J";
    return "";
  });

  run_property(results, rng, "dsl.crossing_order_invariance", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 2, std::max<Index>(class_cap, 2));
    BandPresentation bands = random_presentation(r, sig, 6);
    const SeifertForm before = elaborate_seifert(bands);
    for (std::size_t i = bands.crossings.size(); i > 1; --i)
      std::swap(bands.crossings[i - 1], bands.crossings[r.below(i)]);
    if (!(elaborate_seifert(bands) == before)) return "crossing order changed the matrix";
    return "";
  });

  run_property(results, rng, "dsl.canceling_pair", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 2, std::max<Index>(class_cap, 2));
    BandPresentation bands = random_presentation(r, sig, 6);
    const SeifertForm before = elaborate_seifert(bands);
    Crossing extra;
    extra.over = static_cast<Index>(r.below(static_cast<std::uint64_t>(sig.rank())));
    do {
      extra.under = static_cast<Index>(r.below(static_cast<std::uint64_t>(sig.rank())));
    } while (extra.under == extra.over);
    extra.sign = 1;
    bands.crossings.push_back(extra);
    extra.sign = -1;
    bands.crossings.push_back(extra);
    if (!(elaborate_seifert(bands) == before)) return "canceling crossings changed the matrix";
    return "";
  });

  run_property(results, rng, "dsl.elaboration_surjective", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 0, class_cap);
    const SeifertForm target = random_seifert(r, sig, 8);
    // Rebuild a presentation from the matrix: twists from the diagonal,
    // one crossing per unit of the upper-triangle entries.
    BandPresentation bands;
    bands.signature = sig;
    for (Index i = 0; i < sig.rank(); ++i) {
      if (target.matrix()(i, i) != 0) bands.twists.emplace(i, target.matrix()(i, i));
      for (Index j = i + 1; j < sig.rank(); ++j) {
        const Int count = target.matrix()(i, j);
        for (Int c = 0; c < std::abs(count); ++c)
          bands.crossings.push_back(Crossing{i, j, count > 0 ? 1 : -1});
      }
    }
    if (!(elaborate_seifert(bands) == target)) return "presentation does not elaborate back to V";
    return "";
  });

  run_property(results, rng, "mcg.word_action_preserves_form", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 1, class_cap);
    const HomologyAutomorphism phi = compile_word(random_word(r, sig, 4, 2), sig);
    if (!preserves_intersection_form(phi)) return "M^T J M != J";
    const Int det = determinant_exact(phi.matrix);
    if (det != 1 && det != -1) return "det != +-1";
    return "";
  });

  run_property(results, rng, "mcg.membership_basis_vs_exhaustive", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 1, std::min<Index>(cap, 10));
    const SeifertForm S = random_seifert(r, sig, 8);
    const HomologyAutomorphism phi = compile_word(random_word(r, sig, 4, 2), sig);
    if (is_realizable(S, phi) != is_realizable_exhaustive(S, phi)) return "basis check disagrees with brute force";
    return "";
  });

  run_property(results, rng, "mcg.membership_subgroup", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 1, class_cap);
    const SeifertForm S = random_seifert(r, sig, 8);
    const TwistWord u = random_realizable_word(r, S, 3, 2);
    const TwistWord v = random_realizable_word(r, S, 3, 2);
    if (!is_realizable(S, compile_word(u, sig))) return "generated word not realizable";
    TwistWord uv = u;
    uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
    if (!is_realizable(S, compile_word(uv, sig))) return "composition left the stabilizer";
    if (!is_realizable(S, compile_word(inverse_word(u), sig))) return "inverse left the stabilizer";
    return "";
  });

  run_property(results, rng, "mcg.twist_fast_path", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 1, class_cap);
    const SeifertForm S = random_seifert(r, sig, 8);
    const HomologyClass a = random_primitive_class(r, sig, 3);
    if (twist_is_realizable(S, a) != is_realizable(S, transvection_matrix(a, sig)))
      return "fast path disagrees with the transvection membership test";
    return "";
  });

  run_property(results, rng, "mcg.membership_diag_mod2_only", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 1, class_cap);
    const SeifertForm S = random_seifert(r, sig, 8);
    const IntMatrix P = even_diagonal_perturbation(r, sig.rank(), 3);
    const SeifertForm S2 = validate_seifert(S.matrix() + P, sig);
    const HomologyAutomorphism phi = compile_word(random_word(r, sig, 3, 2), sig);
    if (is_realizable(S, phi) != is_realizable(S2, phi))
      return "membership changed under an even-diagonal symmetric perturbation";
    return "";
  });

  run_property(results, rng, "mcg.pushforward_diagonal_iff_member", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 1, std::min<Index>(class_cap, 6));
    const SeifertForm S = random_seifert(r, sig, 6);
    const HomologyAutomorphism phi = compile_word(random_word(r, sig, 2, 1), sig);
    const SeifertForm pushed = pushforward_form(S, phi);
    bool diag_equal = true;
    for (Index i = 0; i < sig.rank(); ++i)
      if (mod2(pushed.matrix()(i, i)) != mod2(S.matrix()(i, i))) diag_equal = false;
    if (diag_equal != is_realizable(S, phi)) return "diagonal criterion disagrees with membership";
    return "";
  });

  run_property(results, rng, "mcg.distinguishing_witness", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 1, class_cap);
    const SeifertForm S = random_seifert(r, sig, 8);
    const SeifertForm S2 = validate_seifert(S.matrix() + even_diagonal_perturbation(r, sig.rank(), 2) +
                                                [&] {
                                                  IntMatrix odd = IntMatrix::Zero(sig.rank(), sig.rank());
                                                  if (r.coin()) {
                                                    const Index i =
                                                        static_cast<Index>(r.below(static_cast<std::uint64_t>(sig.rank())));
                                                    odd(i, i) = 1;
                                                  }
                                                  return odd;
                                                }(),
                                            sig);
    const auto witness = distinguishing_twist(S, S2);
    if (!witness.has_value()) {
      if (!regularly_homotopic(S, S2)) return "no witness for distinct forms";
      return "";
    }
    if (self_linking_mod2(S, witness->witness) == self_linking_mod2(S2, witness->witness))
      return "witness does not separate the forms";
    if (!witness->radical &&
        twist_is_realizable(S, witness->witness) == twist_is_realizable(S2, witness->witness))
      return "non-radical witness twist does not separate memberships";
    return "";
  });

  run_property(results, rng, "pass.mod2_invariance", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 1, class_cap);
    const SeifertForm S = random_seifert(r, sig, 8);
    PassMove move;
    move.i = static_cast<Index>(r.below(static_cast<std::uint64_t>(sig.rank()))) + 1;
    move.j = static_cast<Index>(r.below(static_cast<std::uint64_t>(sig.rank()))) + 1;
    move.sign = r.coin() ? 1 : -1;
    const SeifertForm moved = apply_pass_move(S, move);
    const HomologyClass x = random_class(r, sig, 4);
    if (self_linking_mod2(S, x) != self_linking_mod2(moved, x)) return "pass move changed the mod-2 form";
    return "";
  });

  run_property(results, rng, "pass.conservation", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 1, class_cap);
    const SeifertForm S = random_seifert(r, sig, 8);
    const PassSequence seq = random_pass_sequence(r, sig.rank(), 30);
    const SeifertForm after = apply_pass_sequence(S, seq);
    const HomologyClass sigma = basis_sum(sig);
    const Int diff = self_linking(after, sigma) - self_linking(S, sigma);
    if (net_signed_count(seq) * 2 != diff) return "net signed count != half the self-linking shift";
    return "";
  });

  run_property(results, rng, "pass.path_independence", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 1, class_cap);
    const SeifertForm S = random_seifert(r, sig, 8);
    const PassSequence seq = random_pass_sequence(r, sig.rank(), 20);
    const SeifertForm after = apply_pass_sequence(S, seq);
    const PassSequence direct = find_pass_sequence(S, after);
    if (net_signed_count(direct) != net_signed_count(seq)) return "two routes disagree on the net count";
    if (!verify_sequence(S, direct, after)) return "constructed sequence does not replay";
    return "";
  });

  run_property(results, rng, "pass.cocycle", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 1, std::min<Index>(class_cap, 6));
    const SeifertForm S = random_seifert(r, sig, 8);
    const TwistWord wu = random_realizable_word(r, S, 3, 2);
    const TwistWord wv = random_realizable_word(r, S, 3, 2);
    const HomologyAutomorphism phi = compile_word(wu, sig);
    const HomologyAutomorphism psi = compile_word(wv, sig);
    TwistWord wuv = wu;
    wuv.letters.insert(wuv.letters.end(), wv.letters.begin(), wv.letters.end());
    const HomologyAutomorphism comp = compile_word(wuv, sig);
    const HomologyClass sigma = basis_sum(sig);
    const Int lhs = signed_pass_count_in_basis(S, comp, sigma);
    const Int rhs = signed_pass_count_in_basis(S, phi, checked_apply(psi.matrix, sigma)) +
                    signed_pass_count_in_basis(S, psi, sigma);
    if (lhs != rhs) return "cocycle identity failed";
    return "";
  });

  run_property(results, rng, "pass.parity_exact_on_members", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 1, class_cap);
    const SeifertForm S = random_seifert(r, sig, 8);
    const HomologyAutomorphism phi = compile_word(random_word(r, sig, 4, 2), sig);
    bool threw = false;
    try {
      (void)signed_pass_count(S, phi);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OddParity) throw;
      threw = true;
    }
    if (threw == is_realizable(S, phi)) return "OddParity raised iff the word is realizable was violated";
    return "";
  });

  run_property(results, rng, "pass.sequence_roundtrip", base, [&](SplitMix64& r) -> std::string {
    const SurfaceSignature sig = random_signature(r, 1, class_cap);
    const SeifertForm S = random_seifert(r, sig, 8);
    const SeifertForm S2 = validate_seifert(S.matrix() + even_diagonal_perturbation(r, sig.rank(), 3), sig);
    if (!regularly_homotopic(S, S2)) return "even perturbation should stay regular homotopic";
    const PassSequence seq = find_pass_sequence(S, S2);
    if (!verify_sequence(S, seq, S2)) return "sequence does not replay to the target";
    const HomologyClass sigma = basis_sum(sig);
    const Int expected = (self_linking(S2, sigma) - self_linking(S, sigma)) / 2;
    if (net_signed_count(seq) != expected) return "net count disagrees with the half-difference";
    return "";
  });

  return results;
}

}  // namespace passhom
