#include <doctest.h>

#include "slopeforge/error.hpp"
#include "support.hpp"

using namespace slopeforge;
using sftest::vec;

TEST_SUITE("surface") {
  TEST_CASE("form is the standard block form") {
    for (int g = 1; g <= 4; ++g) {
      SurfaceContext s(g);
      CHECK(s.basis().size() == static_cast<std::size_t>(2 * g));
      // J antisymmetric and J^2 = -I.
      for (int r = 0; r < 2 * g; ++r)
        for (int c = 0; c < 2 * g; ++c) {
          CHECK(s.form(r, c) == -s.form(c, r));
          int sq = 0;
          for (int k = 0; k < 2 * g; ++k) sq += s.form(r, k) * s.form(k, c);
          CHECK(sq == (r == c ? -1 : 0));
        }
    }
    CHECK(SurfaceContext(2).basis() == std::vector<std::string>{"a1", "b1", "a2", "b2"});
    CHECK_THROWS_AS(SurfaceContext(0), RangeError);
  }

  TEST_CASE("basis pairings") {
    SurfaceContext s(2);
    CHECK(symplectic_pairing(s.a(1), s.b(1)) == 1);
    CHECK(symplectic_pairing(s.b(1), s.a(1)) == -1);
    CHECK(symplectic_pairing(s.a(1), s.a(2)) == 0);
    CHECK(symplectic_pairing(s.a(1), s.b(2)) == 0);
    auto a1 = Curve::from_class("a1", s.a(1));
    auto b1 = Curve::from_class("b1", s.b(1));
    CHECK(intersection_number(a1, b1) == 1);
    CHECK_THROWS_AS(intersection_number(a1, Curve::from_class("x", SurfaceContext(3).a(1))), GenusMismatch);
  }

  TEST_CASE("standard chain classes") {
    auto c1 = standard_chain_classes(1);
    REQUIRE(c1.size() == 3);
    CHECK(c1[0].hclass == vec({0, 1}));
    CHECK(c1[1].hclass == vec({1, 0}));
    CHECK(c1[2].hclass == vec({0, 1}));

    auto c2 = standard_chain_classes(2);
    CHECK(c2[3].hclass == vec({0, 0, 1, 0}));
    CHECK(c2[2].hclass == vec({0, 1, 0, 1}));
    CHECK(c2[1].name == "c2");

    for (int g = 1; g <= 7; ++g) {
      auto cs = standard_chain_classes(g);
      REQUIRE(cs.size() == static_cast<std::size_t>(2 * g + 1));
      for (std::size_t i = 0; i < cs.size(); ++i) {
        CHECK_FALSE(cs[i].separating);
        CHECK(is_primitive(cs[i].hclass));
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
          Integer p = intersection_number(cs[i], cs[j]);
          if (j == i + 1)
            CHECK(abs(p) == 1);
          else
            CHECK(p == 0);
        }
      }
    }
  }

  TEST_CASE("curve invariants") {
    auto z = Curve::from_class("sep", HomologyVector(4, 0));
    CHECK(z.separating);
    CHECK_FALSE(Curve::from_class("x", vec({1, 0, 0, 0})).separating);
    CHECK(Curve{"c1@", 1, vec({1, 0}), false}.root_name() == "c1");
    CHECK(is_primitive(vec({2, 3})));
    CHECK_FALSE(is_primitive(vec({2, 4})));
    CHECK_FALSE(is_primitive(vec({0, 0})));
    CHECK(equal_up_to_sign(vec({1, -2}), vec({-1, 2})));
    CHECK_FALSE(equal_up_to_sign(vec({1, -2}), vec({1, 2})));
  }

  TEST_CASE("apply_twist is x + e <x,v> v") {
    SurfaceContext s(1);
    CHECK(apply_twist(s.a(1), 1, s.b(1)) == vec({-1, 1}));  // <b,a> = -1
    CHECK(apply_twist(s.a(1), -1, s.b(1)) == vec({1, 1}));
    CHECK(apply_twist(s.a(1), 1, s.a(1)) == s.a(1));
  }

  TEST_CASE("family membership") {
    CHECK(family_curve_names({FamilyKind::chain, 2}).size() == 5);
    CHECK(family_curve_names({FamilyKind::hyperelliptic, 3}).back() == "d2");
    CHECK(family_curve_names({FamilyKind::matsumoto, 2}) ==
          std::vector<std::string>{"b0", "b1", "b2", "c"});
    CHECK(family_curve_names({FamilyKind::matsumoto, 3}) ==
          std::vector<std::string>{"b0", "b1", "b2", "b3", "a", "b"});
    CHECK(family_curve_names({FamilyKind::star, 5, 2}) ==
          std::vector<std::string>{"c1", "c2", "c3", "c4", "c5", "cp5", "d3", "c7", "e4"});

    auto cat = CurveCatalog::builtin(1, 6);
    int stars = 0;
    for (const auto& k : cat.families())
      if (k.kind == FamilyKind::star) ++stars;
    CHECK(stars == 1 + 2 + 3 + 4);  // g = 3..6, h = 1..g-2
    CHECK(cat.family({FamilyKind::matsumoto, 4}).back().separating);
    CHECK_FALSE(cat.family({FamilyKind::matsumoto, 5}).back().separating);
  }

  TEST_CASE("star curves bound the subsurface filled by the chain") {
    auto cat = CurveCatalog::builtin(3, 7);
    for (int g = 3; g <= 7; ++g)
      for (int h = 1; h <= g - 2; ++h) {
        auto curves = cat.family({FamilyKind::star, g, h});
        const std::size_t chain = 2 * h + 1;
        const Curve& cp = curves[chain];
        for (std::size_t i = 0; i < chain; ++i)
          CHECK(abs(intersection_number(cp, curves[i])) == (i + 2 == chain ? 1 : 0));
        // d, c_{2h+3}, e are disjoint from c_1..c_{2h+1}, c'_{2h+1} and each other.
        for (std::size_t b = chain + 1; b < curves.size(); ++b)
          for (std::size_t i = 0; i < curves.size(); ++i) CHECK(intersection_number(curves[b], curves[i]) == 0);
        CHECK(curves[chain + 2].hclass == standard_chain_classes(g)[2 * h + 2].hclass);
        CHECK_FALSE(curves[chain + 1].separating);
      }
  }

  TEST_CASE("catalog text format") {
    auto cat = CurveCatalog::parse(
        "# two curves\n"
        "curve x g=1 class=1,0\n"
        "curve y g=1 class=0,1   # trailing comment\n"
        "\n"
        "curve s g=2 class=0,0,0,0\n");
    CHECK(cat.at(1, "x").hclass == vec({1, 0}));
    CHECK(cat.at(2, "s").separating);
    CHECK(cat.find(1, "s") == nullptr);
    CHECK_THROWS_AS(cat.at(1, "z"), ParseError);

    auto round = CurveCatalog::parse(cat.serialize());
    CHECK(round.serialize() == cat.serialize());

    auto builtin = CurveCatalog::builtin(1, 5);
    auto reparsed = CurveCatalog::parse(builtin.serialize());
    CHECK(reparsed.serialize() == builtin.serialize());
    CHECK(reparsed.families() == builtin.families());

    CHECK_THROWS_AS(CurveCatalog::parse("curv x g=1 class=1,0"), ParseError);
    CHECK_THROWS_AS(CurveCatalog::parse("curve x g=1 class=1,0,0"), ParseError);
    CHECK_THROWS_AS(CurveCatalog::parse("curve x g=0 class="), ParseError);
    CHECK_THROWS_AS(CurveCatalog::parse("curve x g=1 class=1,a"), ParseError);
    CHECK_THROWS_AS(CurveCatalog::parse("curve x g=1"), ParseError);
    CHECK_THROWS_AS(CurveCatalog::parse("curve x^2 g=1 class=1,0"), ParseError);
    CHECK_THROWS_AS(CurveCatalog::load("/nonexistent/catalog.txt"), ParseError);
  }

  TEST_CASE("default catalog validates") {
    auto rep = validate_catalog(CurveCatalog::builtin(1, 8));
    CHECK(rep.passed());
    CHECK(rep.families.size() > 20);
  }

  TEST_CASE("zeroed nonseparating curve is reported") {
    auto cat = CurveCatalog::builtin(2);
    cat.add(Curve{"c1", 2, HomologyVector(4, 0), false});
    auto rep = validate_catalog(cat);
    CHECK_FALSE(rep.passed());
    CHECK_FALSE(rep.curve_violations.empty());
  }

  TEST_CASE("perturbed Matsumoto classes are reported") {
    for (int g : {2, 3, 4}) {
      auto cat = CurveCatalog::builtin(g);
      HomologyVector v = cat.at(g, "b1").hclass;
      v[0] += 1;
      if (!is_primitive(v)) v[1] += 1;
      cat.add(Curve::from_class("b1", v));
      auto rep = validate_catalog(cat);
      CHECK_FALSE(rep.passed());
      bool flagged = false;
      for (const auto& f : rep.families)
        if (f.key.kind == FamilyKind::matsumoto) flagged = !f.passed();
      CHECK(flagged);
    }
  }

  TEST_CASE("non-primitive class is reported") {
    auto cat = CurveCatalog::builtin(1);
    cat.add(Curve::from_class("fat", vec({2, 0})));
    CHECK_FALSE(validate_catalog(cat).passed());
  }
}
