#include <doctest.h>

#include "slopeforge/error.hpp"
#include "support.hpp"

using namespace slopeforge;
using sftest::vec;

namespace {

std::vector<std::int64_t> as_int64(const HomologyVector& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

}  // namespace

TEST_SUITE("symplectic") {
  TEST_CASE("transvections match the dense reference") {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
      int g = 1 + trial % 4;
      auto v = sftest::random_primitive(rng, g);
      for (int e : {1, -1, 2}) CHECK(sftest::same_matrix(transvection(g, v, e), sftest::naive_transvection(as_int64(v), e)));
    }
  }

  TEST_CASE("twist about a1 on the torus") {
    SurfaceContext s(1);
    auto t = transvection(Curve::from_class("a1", s.a(1)));
    CHECK(t * s.b(1) == vec({-1, 1}));
    CHECK(t * s.a(1) == s.a(1));
    auto tb = transvection(Curve::from_class("b1", s.b(1)));
    CHECK(tb * s.a(1) == vec({1, 1}));
    CHECK(transvection(Curve::from_class("s", vec({0, 0}))).is_identity());
    CHECK_THROWS_AS(transvection(2, vec({1, 0}), 1), GenusMismatch);
  }

  TEST_CASE("evaluated matrices are symplectic") {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 60; ++trial) {
      int g = 1 + trial % 4;
      auto m = evaluate(sftest::random_word(rng, g, 1 + trial % 20));
      CHECK(m.is_symplectic());
      CHECK((m * m.inverse()).is_identity());
      CHECK((m.inverse() * m).is_identity());
    }
    auto cat = CurveCatalog::builtin(2, 4);
    for (int g = 2; g <= 4; ++g)
      for (auto kind : {RelatorKind::chain_odd, RelatorKind::chain_even, RelatorKind::hyperelliptic,
                        RelatorKind::matsumoto})
        CHECK(evaluate(build_relator(kind, g, cat).word).is_identity());
    CHECK_FALSE(SymplecticMatrix(1, {Integer(2), Integer(0), Integer(0), Integer(1)}).is_symplectic());
    CHECK_THROWS_AS(SymplecticMatrix(1, {Integer(1)}), RangeError);
  }

  TEST_CASE("evaluate agrees with the dense product") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      int g = 1 + trial % 3;
      auto w = sftest::random_word(rng, g, 6);
      auto ref = sftest::naive_transvection(as_int64(w[0].curve.hclass), w[0].exponent);
      for (std::size_t i = 1; i < w.size(); ++i)
        ref = sftest::naive_product(ref, sftest::naive_transvection(as_int64(w[i].curve.hclass), w[i].exponent));
      CHECK(sftest::same_matrix(evaluate(w), ref));
    }
  }

  TEST_CASE("evaluate is a homomorphism") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
      int g = 1 + trial % 4;
      auto x = sftest::random_word(rng, g, 7);
      auto y = sftest::random_word(rng, g, 5);
      CHECK(evaluate(x * y) == evaluate(x) * evaluate(y));
      CHECK(evaluate(x.inverse()) == evaluate(x).inverse());
      CHECK(evaluate(TwistWord(g)).is_identity());
    }
  }

  TEST_CASE("hurwitz moves preserve the product") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      int g = 1 + trial % 4;
      std::uniform_int_distribution<std::size_t> len(2, 30);
      auto w = sftest::random_word(rng, g, len(rng));
      auto m = evaluate(w);
      std::uniform_int_distribution<std::size_t> at(0, w.size() - 2);
      for (int k = 0; k < 10; ++k) {
        w = (k % 3 ? hurwitz_move(w, at(rng)) : hurwitz_move_inverse(w, at(rng)));
        CHECK(evaluate(w) == m);
      }
    }
  }

  TEST_CASE("transporters") {
    SurfaceContext s(2);
    CHECK(symplectic_transporter(2, s.a(1), s.a(1)).empty());
    CHECK(symplectic_transporter(2, s.a(1), -s.a(1)).empty());
    auto two = symplectic_transporter(2, s.a(1), s.b(1));
    CHECK(two.size() == 2);
    CHECK(equal_up_to_sign(evaluate(two) * s.a(1), s.b(1)));
    auto four = symplectic_transporter(2, s.a(1), s.a(2));
    CHECK(four.size() == 4);
    CHECK(equal_up_to_sign(evaluate(four) * s.a(1), s.a(2)));
    CHECK(four[0].curve.name == "t1");

    std::mt19937 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
      int g = 1 + trial % 4;
      auto v = sftest::random_primitive(rng, g);
      auto w = sftest::random_primitive(rng, g);
      auto phi = symplectic_transporter(g, v, w, "x");
      CHECK(phi.size() <= 8);
      CHECK(phi.all_positive());
      CHECK(equal_up_to_sign(evaluate(phi) * v, w));
    }
    CHECK_THROWS_AS(symplectic_transporter(2, s.a(1), HomologyVector(4, 0)), RangeError);
    CHECK_THROWS_AS(symplectic_transporter(2, s.a(1), vec({1, 0})), GenusMismatch);
  }
}
