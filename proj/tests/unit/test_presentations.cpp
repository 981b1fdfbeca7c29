#include <hilbert/errors.hpp>
#include <hilbert/presentations.hpp>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace hilbert;

namespace {

ConstructionSpec spec_of(Variant v, unsigned d, unsigned p, const char* base, unsigned q = 0) {
  return ConstructionSpec{v, d, p, q, parse_series_spec(base)};
}

std::vector<Word> words_of(const Alphabet& ab, std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (const char* t : texts) out.push_back(parse_word(t, ab));
  return out;
}

}  // namespace

TEST_SUITE("presentations") {
  TEST_CASE("variant names") {
    for (Variant v : {Variant::kTheorem1, Variant::kCorollary12, Variant::kRemark13, Variant::kTheorem14}) {
      CHECK(parse_variant(to_string(v)) == v);
    }
    CHECK_THROWS_AS(parse_variant("theorem2"), InvalidSpecError);
  }

  TEST_CASE("spec validation") {
    CHECK_NOTHROW(validate(spec_of(Variant::kCorollary12, 2, 1, "zero", 1)));
    CHECK_THROWS_AS(validate(spec_of(Variant::kCorollary12, 2, 2, "zero", 1)), InvalidSpecError);
    CHECK_THROWS_AS(validate(spec_of(Variant::kTheorem1, 2, 3, "zero")), InvalidSpecError);
    CHECK_THROWS_AS(validate(spec_of(Variant::kTheorem1, 2, 1, "zero", 1)), InvalidSpecError);
    CHECK_THROWS_AS(validate(spec_of(Variant::kTheorem1, 0, 1, "zero")), InvalidSpecError);
  }

  TEST_CASE("side layout consumes sides left to right") {
    using P = std::pair<Side, Side>;
    CHECK(side_layout(spec_of(Variant::kTheorem1, 2, 2, "zero")) == P{Side::kFree, Side::kFree});
    CHECK(side_layout(spec_of(Variant::kTheorem1, 2, 1, "zero")) == P{Side::kKilled, Side::kFree});
    CHECK(side_layout(spec_of(Variant::kTheorem1, 2, 0, "zero")) == P{Side::kKilled, Side::kKilled});
    CHECK(side_layout(spec_of(Variant::kCorollary12, 2, 1, "zero", 1)) == P{Side::kSymmetrized, Side::kFree});
    CHECK(side_layout(spec_of(Variant::kCorollary12, 2, 0, "zero", 1)) == P{Side::kKilled, Side::kSymmetrized});
    CHECK(side_layout(spec_of(Variant::kTheorem14, 2, 1, "zero")) == P{Side::kKilled, Side::kSymmetrized});
  }

  TEST_CASE("construction slices on small sets") {
    const Alphabet ab{2, true};
    // A_0 = {1}, A_1 = {}: yy has the member 1 between its y's
    const auto with_one = realize_A(IntSeries{1, 0, 0}, 2, false);
    CHECK(construction_forbidden(spec_of(Variant::kTheorem1, 2, 2, "zero"), with_one, 2).empty());
    // A_1 = {x1}
    const auto only_x1 = realize_A(IntSeries{0, 1, 0}, 2, false);
    CHECK(construction_forbidden(spec_of(Variant::kTheorem1, 2, 2, "zero"), only_x1, 3) ==
          words_of(ab, {"y x2 y"}));
    const auto p0 = spec_of(Variant::kTheorem1, 2, 0, "zero");
    CHECK(construction_forbidden(p0, with_one, 2).empty());
    CHECK(construction_forbidden(p0, with_one, 3) ==
          words_of(ab, {"x1 y y", "x2 y y", "y x1 y", "y x2 y", "y y x1", "y y x2", "y y y"}));
    const auto p1 = spec_of(Variant::kTheorem1, 2, 1, "zero");
    CHECK(construction_forbidden(p1, with_one, 3) == words_of(ab, {"x1 y y", "x2 y y", "y x1 y", "y x2 y", "y y y"}));
    CHECK(construction_forbidden(spec_of(Variant::kTheorem1, 2, 2, "zero"), with_one, 3) ==
          words_of(ab, {"y x1 y", "y x2 y", "y y y"}));
    const auto remark = spec_of(Variant::kRemark13, 2, 2, "zero");
    CHECK(construction_forbidden(remark, with_one, 3) ==
          words_of(ab, {"x1 y x1", "x1 y x2", "x1 y y", "x2 y x1", "x2 y x2", "x2 y y", "y x1 y", "y x2 y",
                        "y y x1", "y y x2", "y y y"}));
    CHECK_THROWS_AS(construction_forbidden(spec_of(Variant::kTheorem14, 2, 2, "zero"), with_one, 3),
                    UnsupportedVariantError);
  }

  TEST_CASE("p = 2 slice cardinality") {
    const IntSeries a = generate(series::Partition{}, 8);
    const auto spec = spec_of(Variant::kTheorem1, 2, 2, "partition");
    const Presentation pres = make_presentation(spec, 8);
    for (std::size_t n = 3; n <= 10; ++n) {
      Integer expected = pow_integer(2, n - 2) - a[n - 2];
      for (std::size_t i = 0; i + 3 <= n; ++i) expected += a[i] * a[n - 3 - i];
      CHECK(Integer(static_cast<unsigned long>(pres.forbidden(n).size())) == expected);
    }
  }

  TEST_CASE("construction slices are reduced") {
    for (const char* base : {"zero", "partition", "lacunary-powers:2", "rational:1/1-t"}) {
      for (unsigned p = 0; p <= 2; ++p) {
        for (Variant v : {Variant::kTheorem1, Variant::kRemark13}) {
          if (v == Variant::kRemark13 && p != 2) continue;
          const auto spec = spec_of(v, 2, p, base);
          CAPTURE(describe(spec));
          const Presentation pres = make_presentation(spec, 6);
          const auto all = pres.forbidden_up_to(8);
          for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = 0; j < all.size(); ++j) {
              if (i != j) CHECK_FALSE(contains_factor(all[i], all[j]));
            }
          }
        }
      }
    }
  }

  TEST_CASE("reduced families span the same ideal as the full relation set") {
    for (const char* base : {"zero", "partition", "lacunary-powers:2"}) {
      for (unsigned d : {1U, 2U}) {
        for (unsigned p = 0; p <= 2; ++p) {
          for (Variant v : {Variant::kTheorem1, Variant::kRemark13}) {
            if (v == Variant::kRemark13 && p != 2) continue;
            const auto spec = spec_of(v, d, p, base);
            CAPTURE(describe(spec));
            const IntSeries a = generate(spec.base, 7);
            if (d == 1 && a[2] > 1) continue;
            const Presentation pres = make_presentation(spec, 5);
            const auto avoided = oracle::count_avoiding(d + 1, pres.forbidden_up_to(7), 7);
            CHECK(avoided == oracle::basis_classes(spec, a.coeffs(), 7));
          }
        }
      }
    }
  }

  TEST_CASE("presentation files") {
    const Presentation fib = parse_presentation("alphabet d=1 y=1\n# comment\ny y\n");
    CHECK(fib.alphabet() == Alphabet{1, true});
    CHECK(fib.words() == words_of(Alphabet{1, true}, {"y y"}));
    const Presentation reduced = parse_presentation("alphabet d=1 y=1\ny y\nx1 y y\n");
    CHECK(reduced.words().size() == 1);
    CHECK(reduced.redundant().size() == 1);
    const Presentation free = parse_presentation("alphabet d=3 y=0\n");
    CHECK(free.words().empty());
    CHECK(free.forbidden(4).empty());

    const Presentation round = parse_presentation(format_presentation(parse_presentation(
        "alphabet d=2 y=1\nx1 x2\n\ny x1 y   # trailing\n")));
    CHECK(round.words() == words_of(Alphabet{2, true}, {"x1 x2", "y x1 y"}));
    CHECK(round.forbidden(2) == words_of(Alphabet{2, true}, {"x1 x2"}));
    CHECK(round.forbidden(3) == words_of(Alphabet{2, true}, {"y x1 y"}));

    const auto line_of = [](const char* text) -> std::size_t {
      try {
        parse_presentation(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(line_of("alphabet d=1 y=1\ny y\nx2 y\n") == 3);
    CHECK(line_of("# only comments\nalphabet d=x y=1\n") == 2);
    CHECK(line_of("y y\n") == 1);
    CHECK_THROWS_AS(load_presentation("/nonexistent/file.pres"), ParseError);
  }

  TEST_CASE("structured presentations know their reach") {
    const Presentation pres = make_presentation(spec_of(Variant::kTheorem1, 2, 2, "partition"), 6);
    REQUIRE(pres.max_degree().has_value());
    CHECK(*pres.max_degree() == 8);
    CHECK_THROWS(pres.forbidden(9));
    CHECK(pres.construction() != nullptr);
    CHECK_THROWS_AS(pres.words(), UnsupportedVariantError);
  }
}
