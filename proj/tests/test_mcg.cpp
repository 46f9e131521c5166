#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "passhom/mcg.hpp"
#include "passhom/rng.hpp"
#include "passhom/selftest.hpp"

using namespace passhom;

namespace {

IntMatrix mat2(Int a, Int b, Int c, Int d) {
  IntMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

HomologyClass vec2(Int a, Int b) {
  HomologyClass x(2);
  x << a, b;
  return x;
}

const SurfaceSignature kTorus{1, 1};

// Independent oracle: q evaluated by raw expansion, membership by brute
// force over all 2^n classes.
int raw_mod2(const IntMatrix& V, const IntVector& x) {
  long long acc = 0;
  for (Index i = 0; i < V.rows(); ++i)
    for (Index j = 0; j < V.cols(); ++j) acc += static_cast<long long>(x(i)) * V(i, j) * x(j);
  return static_cast<int>(((acc % 2) + 2) % 2);
}

bool brute_force_member(const IntMatrix& V, const IntMatrix& M) {
  const Index n = V.rows();
  IntVector x(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (Index i = 0; i < n; ++i) x(i) = static_cast<Int>((bits >> i) & 1);
    const IntVector mx = M * x;
    if (raw_mod2(V, mx) != raw_mod2(V, x)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("transvection matrices") {
  SUBCASE("about a1 on the one-holed torus") {
    const auto phi = transvection_matrix(vec2(1, 0), kTorus);
    CHECK(exactly_equal(phi.matrix, mat2(1, -1, 0, 1)));
  }
  SUBCASE("about b1 on the one-holed torus") {
    const auto phi = transvection_matrix(vec2(0, 1), kTorus);
    CHECK(exactly_equal(phi.matrix, mat2(1, 0, 1, 1)));
    CHECK(preserves_intersection_form(phi));
  }
  SUBCASE("radical classes act trivially") {
    const SurfaceSignature sig{0, 3};
    HomologyClass c1 = HomologyClass::Zero(2);
    c1(0) = 1;
    const auto phi = transvection_matrix(c1, sig);
    CHECK(exactly_equal(phi.matrix, IntMatrix(IntMatrix::Identity(2, 2))));
  }
  SUBCASE("defining identity M x = x + <x,a> a") {
    SplitMix64 rng(3);
    for (int c = 0; c < 300; ++c) {
      const SurfaceSignature sig = random_signature(rng, 1, 7);
      const HomologyClass a = random_primitive_class(rng, sig, 3);
      const auto phi = transvection_matrix(a, sig);
      const HomologyClass x = random_class(rng, sig, 4);
      const Int pairing = intersection_number(intersection_form(sig), x, a);
      CHECK(exactly_equal(checked_apply(phi.matrix, x), IntVector(x + pairing * a)));
      CHECK(preserves_intersection_form(phi));
      CHECK(determinant_exact(phi.matrix) == 1);
    }
  }
  SUBCASE("rejects invalid classes") {
    try {
      (void)transvection_matrix(vec2(0, 0), kTorus);
      FAIL("expected ZeroClass");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ZeroClass);
    }
    try {
      (void)transvection_matrix(vec2(2, 4), kTorus);
      FAIL("expected NotPrimitive");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPrimitive);
    }
  }
}

TEST_CASE("word compilation") {
  SUBCASE("empty word is the identity") {
    const auto phi = compile_word(TwistWord{}, kTorus);
    CHECK(exactly_equal(phi.matrix, IntMatrix(IntMatrix::Identity(2, 2))));
  }
  SUBCASE("squared twist") {
    const auto phi = compile_word(parse_twist_word("T[a1]^2", kTorus), kTorus);
    CHECK(exactly_equal(phi.matrix, mat2(1, -2, 0, 1)));
  }
  SUBCASE("inverse cancels") {
    const auto phi = compile_word(parse_twist_word("T[a1] T[a1]^-1", kTorus), kTorus);
    CHECK(exactly_equal(phi.matrix, IntMatrix(IntMatrix::Identity(2, 2))));
  }
  SUBCASE("closed form matches repeated multiplication") {
    SplitMix64 rng(5);
    for (int c = 0; c < 200; ++c) {
      const SurfaceSignature sig = random_signature(rng, 1, 6);
      const HomologyClass a = random_primitive_class(rng, sig, 2);
      const Int m = rng.range(1, 5);
      IntMatrix repeated = IntMatrix::Identity(sig.rank(), sig.rank());
      const IntMatrix single = transvection_matrix(a, sig).matrix;
      for (Int step = 0; step < m; ++step) repeated = checked_product(repeated, single);
      CHECK(exactly_equal(transvection_power(a, m, sig).matrix, repeated));
    }
  }
  SUBCASE("leftmost letter is applied last") {
    const SurfaceSignature sig{1, 1};
    const auto word = parse_twist_word("T[a1] T[b1]", sig);
    const IntMatrix expected =
        checked_product(transvection_matrix(vec2(1, 0), sig).matrix, transvection_matrix(vec2(0, 1), sig).matrix);
    CHECK(exactly_equal(compile_word(word, sig).matrix, expected));
  }
}

TEST_CASE("twist-word text syntax") {
  const SurfaceSignature sig{1, 2};
  SUBCASE("band names and vectors") {
    const TwistWord word = parse_twist_word("T[a1] T[1,0,0]^3 T[c1]^-1", sig);
    REQUIRE(word.letters.size() == 3);
    CHECK(exactly_equal(word.letters[0].curve, word.letters[1].curve));
    CHECK(word.letters[1].exponent == 3);
    CHECK(word.letters[2].exponent == -1);
  }
  SUBCASE("whitespace tolerance") {
    CHECK(parse_twist_word("  T[ a1 ]  T[ 1 , 0 , 0 ]^2 ", sig).letters.size() == 2);
    CHECK(parse_twist_word("", sig).letters.empty());
  }
  SUBCASE("format round-trips through parse") {
    SplitMix64 rng(9);
    for (int c = 0; c < 200; ++c) {
      const SurfaceSignature s = random_signature(rng, 1, 6);
      const TwistWord word = random_word(rng, s, 4, 3);
      CHECK(parse_twist_word(format_twist_word(word, s), s) == word);
    }
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS((void)parse_twist_word("T[a1", sig), Error);
    CHECK_THROWS_AS((void)parse_twist_word("T[]", sig), Error);
    CHECK_THROWS_AS((void)parse_twist_word("T[a9]", sig), Error);
    CHECK_THROWS_AS((void)parse_twist_word("T[1,0]", sig), Error);       // wrong length
    CHECK_THROWS_AS((void)parse_twist_word("T[0,0,0]", sig), Error);     // zero class
    CHECK_THROWS_AS((void)parse_twist_word("T[2,0,0]", sig), Error);     // not primitive
    CHECK_THROWS_AS((void)parse_twist_word("T[a1]^0", sig), Error);      // zero exponent
    CHECK_THROWS_AS((void)parse_twist_word("S[a1]", sig), Error);
  }
}

TEST_CASE("pushforward of the form") {
  const SeifertForm flat = validate_seifert(mat2(0, 0, -1, 0), kTorus);
  SUBCASE("identity preserves the form") {
    const HomologyAutomorphism id{kTorus, IntMatrix::Identity(2, 2)};
    CHECK(pushforward_form(flat, id) == flat);
  }
  SUBCASE("squared twist moves a diagonal entry by two") {
    const HomologyAutomorphism phi{kTorus, mat2(1, -2, 0, 1)};
    CHECK(exactly_equal(pushforward_form(flat, phi).matrix(), mat2(0, 0, -1, 2)));
  }
  SUBCASE("result is always a valid form") {
    SplitMix64 rng(15);
    for (int c = 0; c < 200; ++c) {
      const SurfaceSignature sig = random_signature(rng, 1, 6);
      const SeifertForm S = random_seifert(rng, sig, 6);
      const HomologyAutomorphism phi = compile_word(random_word(rng, sig, 2, 1), sig);
      const SeifertForm pushed = pushforward_form(S, phi);  // validates internally
      const IntMatrix J = intersection_form(sig).matrix;
      CHECK(exactly_equal(IntMatrix(pushed.matrix() - pushed.matrix().transpose()), J));
    }
  }
}

TEST_CASE("realizability of twist words") {
  const SeifertForm flat = validate_seifert(mat2(0, 0, -1, 0), kTorus);
  const SeifertForm trefoil = validate_seifert(mat2(-1, 1, 0, -1), kTorus);
  const HomologyAutomorphism twist_a = transvection_matrix(vec2(1, 0), kTorus);

  SUBCASE("identity is always realizable") {
    const HomologyAutomorphism id{kTorus, IntMatrix::Identity(2, 2)};
    CHECK(is_realizable(flat, id));
    CHECK(is_realizable(trefoil, id));
  }
  SUBCASE("single twist separates flat from trefoil") {
    CHECK_FALSE(is_realizable(flat, twist_a));
    CHECK(is_realizable(trefoil, twist_a));
    CHECK(brute_force_member(flat.matrix(), twist_a.matrix) == false);
    CHECK(brute_force_member(trefoil.matrix(), twist_a.matrix) == true);
  }
  SUBCASE("squared twists are always realizable") {
    SplitMix64 rng(21);
    for (int c = 0; c < 300; ++c) {
      const SurfaceSignature sig = random_signature(rng, 1, 7);
      const SeifertForm S = random_seifert(rng, sig, 8);
      const HomologyClass a = random_primitive_class(rng, sig, 3);
      CHECK(is_realizable(S, transvection_power(a, 2, sig)));
    }
  }
  SUBCASE("non-form-preserving matrices are rejected") {
    HomologyAutomorphism bad{kTorus, mat2(1, 0, 0, -1)};  // det -1 flips J
    try {
      (void)is_realizable(flat, bad);
      FAIL("expected NotFormPreserving");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotFormPreserving);
    }
  }
  SUBCASE("non-unimodular radical scalings are rejected") {
    const SurfaceSignature pants{0, 3};
    IntMatrix M = IntMatrix::Identity(2, 2);
    M(0, 0) = 2;  // preserves J = 0 but is not invertible over Z
    const SeifertForm S = validate_seifert(IntMatrix::Zero(2, 2), pants);
    try {
      (void)is_realizable(S, HomologyAutomorphism{pants, M});
      FAIL("expected NotFormPreserving");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotFormPreserving);
    }
  }
  SUBCASE("basis check agrees with the brute-force oracle") {
    SplitMix64 rng(23);
    for (int c = 0; c < 1000; ++c) {
      const SurfaceSignature sig = random_signature(rng, 1, 6);
      const SeifertForm S = random_seifert(rng, sig, 8);
      const HomologyAutomorphism phi = compile_word(random_word(rng, sig, 4, 2), sig);
      CHECK(is_realizable(S, phi) == brute_force_member(S.matrix(), phi.matrix));
    }
  }
  SUBCASE("agreement holds up to rank 12") {
    SplitMix64 rng(24);
    const SurfaceSignature sig{3, 7};  // rank 12
    REQUIRE(sig.rank() == 12);
    for (int c = 0; c < 20; ++c) {
      const SeifertForm S = random_seifert(rng, sig, 8);
      const HomologyAutomorphism phi = compile_word(random_word(rng, sig, 3, 1), sig);
      const bool fast = is_realizable(S, phi);
      CHECK(fast == is_realizable_exhaustive(S, phi));
      CHECK(fast == brute_force_member(S.matrix(), phi.matrix));
    }
  }
}

TEST_CASE("fast path for single twists") {
  const SeifertForm flat = validate_seifert(mat2(0, 0, -1, 0), kTorus);
  const SeifertForm trefoil = validate_seifert(mat2(-1, 1, 0, -1), kTorus);
  CHECK(twist_is_realizable(trefoil, vec2(1, 0)));
  CHECK_FALSE(twist_is_realizable(flat, vec2(1, 0)));

  SUBCASE("radical classes are always realizable") {
    SplitMix64 rng(25);
    for (int c = 0; c < 100; ++c) {
      const SurfaceSignature sig{1, 3};
      const SeifertForm S = random_seifert(rng, sig, 8);
      HomologyClass c1 = HomologyClass::Zero(4);
      c1(2) = 1;
      CHECK(twist_is_realizable(S, c1));
    }
  }
  SUBCASE("agrees with the membership test on random classes") {
    SplitMix64 rng(27);
    for (int c = 0; c < 10000; ++c) {
      const SurfaceSignature sig = random_signature(rng, 1, 8);
      const SeifertForm S = random_seifert(rng, sig, 8);
      const HomologyClass a = random_primitive_class(rng, sig, 3);
      CHECK(twist_is_realizable(S, a) == is_realizable(S, transvection_matrix(a, sig)));
    }
  }
}

TEST_CASE("membership is a subgroup condition") {
  SplitMix64 rng(29);
  for (int c = 0; c < 300; ++c) {
    const SurfaceSignature sig = random_signature(rng, 1, 6);
    const SeifertForm S = random_seifert(rng, sig, 8);
    const TwistWord u = random_realizable_word(rng, S, 3, 2);
    const TwistWord v = random_realizable_word(rng, S, 3, 2);
    REQUIRE(is_realizable(S, compile_word(u, sig)));
    REQUIRE(is_realizable(S, compile_word(v, sig)));
    TwistWord uv = u;
    uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
    CHECK(is_realizable(S, compile_word(uv, sig)));
    CHECK(is_realizable(S, compile_word(inverse_word(u), sig)));
  }
}

TEST_CASE("realizability depends only on the diagonal mod 2") {
  SplitMix64 rng(33);
  for (int c = 0; c < 300; ++c) {
    const SurfaceSignature sig = random_signature(rng, 1, 6);
    const SeifertForm S = random_seifert(rng, sig, 6);
    IntMatrix A(sig.rank(), sig.rank());
    for (Index i = 0; i < sig.rank(); ++i)
      for (Index j = 0; j < sig.rank(); ++j) A(i, j) = rng.range(-3, 3);
    const SeifertForm S2 = validate_seifert(S.matrix() + A + IntMatrix(A.transpose()), sig);
    const HomologyAutomorphism phi = compile_word(random_word(rng, sig, 3, 2), sig);
    CHECK(is_realizable(S, phi) == is_realizable(S2, phi));
  }
}

TEST_CASE("distinguishing twists") {
  const SeifertForm flat = validate_seifert(mat2(0, 0, -1, 0), kTorus);
  const SeifertForm trefoil = validate_seifert(mat2(-1, 1, 0, -1), kTorus);
  const SeifertForm once = validate_seifert(mat2(1, 0, -1, 0), kTorus);

  SUBCASE("equal forms have no witness") {
    CHECK_FALSE(distinguishing_twist(flat, flat).has_value());
    CHECK_FALSE(distinguishing_twist(trefoil, validate_seifert(mat2(1, 1, 0, 1), kTorus)).has_value());
  }
  SUBCASE("first differing diagonal wins") {
    const auto w1 = distinguishing_twist(flat, once);
    REQUIRE(w1.has_value());
    CHECK(exactly_equal(w1->witness, vec2(1, 0)));
    CHECK_FALSE(w1->radical);
    CHECK(twist_is_realizable(once, w1->witness));
    CHECK_FALSE(twist_is_realizable(flat, w1->witness));

    const auto w2 = distinguishing_twist(flat, trefoil);
    REQUIRE(w2.has_value());
    CHECK(exactly_equal(w2->witness, vec2(1, 0)));
  }
  SUBCASE("radical witnesses are flagged") {
    const SurfaceSignature pants{0, 3};
    const SeifertForm zero = validate_seifert(IntMatrix::Zero(2, 2), pants);
    IntMatrix one = IntMatrix::Zero(2, 2);
    one(0, 0) = 1;
    const auto w = distinguishing_twist(zero, validate_seifert(one, pants));
    REQUIRE(w.has_value());
    CHECK(w->radical);
    // The twist itself acts trivially on homology, so membership cannot
    // separate the embeddings; the form inequality is the evidence.
    CHECK(twist_is_realizable(zero, w->witness));
    CHECK(twist_is_realizable(validate_seifert(one, pants), w->witness));
  }
  SUBCASE("witness always separates the forms") {
    SplitMix64 rng(37);
    for (int c = 0; c < 500; ++c) {
      const SurfaceSignature sig = random_signature(rng, 1, 7);
      const SeifertForm S = random_seifert(rng, sig, 8);
      const SeifertForm S2 = random_seifert(rng, sig, 8);
      const auto w = distinguishing_twist(S, S2);
      bool diag_equal = true;
      for (Index i = 0; i < sig.rank(); ++i)
        if (mod2(S.matrix()(i, i)) != mod2(S2.matrix()(i, i))) diag_equal = false;
      CHECK(w.has_value() == !diag_equal);
      if (w.has_value()) {
        CHECK(self_linking_mod2(S, w->witness) != self_linking_mod2(S2, w->witness));
        if (!w->radical)
          CHECK(twist_is_realizable(S, w->witness) != twist_is_realizable(S2, w->witness));
      }
    }
  }
}

TEST_CASE("determinant via Bareiss elimination") {
  CHECK(determinant_exact(IntMatrix::Identity(4, 4)) == 1);
  CHECK(determinant_exact(mat2(2, 0, 0, 3)) == 6);
  CHECK(determinant_exact(mat2(0, 1, 1, 0)) == -1);
  CHECK(determinant_exact(IntMatrix::Zero(3, 3)) == 0);
  CHECK(determinant_exact(IntMatrix(0, 0)) == 1);

  IntMatrix m(3, 3);
  m << 2, -3, 1, 2, 0, -1, 1, 4, 5;
  CHECK(determinant_exact(m) == 49);
}
