#include <doctest.h>

#include <sstream>

#include "sgm/presentation_io.hpp"
#include "sgm/presentations.hpp"

using namespace sgm;

TEST_CASE("presentations reduce relators and reject empty ones") {
  Presentation p({"a", "b"}, {"a b b^-1 a"});
  CHECK(print_word(p.relator(0)) == "a^2");
  CHECK_THROWS_AS(Presentation({"a"}, {"a a^-1"}), std::invalid_argument);
  CHECK(Presentation({"a", "b"}, {}).is_free());
}

TEST_CASE("direct product of two free groups") {
  auto p = direct_product({Presentation({"a", "b"}, {}), Presentation({"c", "d"}, {})});
  auto const& c = *p.combined();
  CHECK(c.num_generators() == 4);
  CHECK(c.relators().size() == 4);
  CHECK(print_word(c.relator(0)) == "a^-1 c^-1 a c");
  CHECK(print_word(c.relator(3)) == "b^-1 d^-1 b d");
}

TEST_CASE("direct product with relators and a single factor") {
  auto p = direct_product({Presentation({"a"}, {"a^3"}), Presentation({"b"}, {"b^2"})});
  auto const& c = *p.combined();
  REQUIRE(c.relators().size() == 3);
  CHECK(print_word(c.relator(0)) == "a^3");
  CHECK(print_word(c.relator(1)) == "b^2");
  CHECK(print_word(c.relator(2)) == "a^-1 b^-1 a b");

  Presentation single({"a"}, {"a^3"});
  auto q = direct_product({single});
  CHECK(*q.combined() == single);
}

TEST_CASE("colliding generator names get the factor index appended") {
  Presentation f({"a", "b"}, {});
  auto p = direct_product({f, f});
  CHECK(p.combined()->alphabet()->names() ==
        std::vector<std::string>{"a", "b", "a_2", "b_2"});
  CHECK(p.factor_of(2) == 1);
  CHECK(print_word(p.include(1, f.word("a b^-1"))) == "a_2 b_2^-1");
}

TEST_CASE("projection onto factors") {
  auto p = direct_product({Presentation({"a", "b"}, {}), Presentation({"c", "d"}, {})});
  auto w = p.combined()->word("a c");
  CHECK(print_word(project(p, {0}, w)) == "a");
  CHECK(print_word(project(p, {1}, w)) == "c");
  auto v = p.combined()->word("a c a^-1 d");
  CHECK(project(p, {0, 1}, v) == free_reduce(v));
  CHECK(print_word(p.restrict_to(1, v)) == "c d");
}

TEST_CASE("fibre product subgroup over BS(2,3)") {
  Presentation free({"a", "b"}, {});
  Presentation bs({"a", "b"}, {"a^-1 b^2 a b^-3"});
  ProductPresentation product = direct_product({free});
  auto h = fiber_product_subgroup(free, bs, &product);
  REQUIRE(h.size() == 3);
  CHECK(print_word(h.generator(0)) == "a a_2");
  CHECK(print_word(h.generator(1)) == "b b_2");
  CHECK(print_word(h.generator(2)) == "a^-1 b^2 a b^-3");
  CHECK(product.num_factors() == 2);
  CHECK(h.presentation() == product.combined());
}

TEST_CASE("fibre product over a free or trivial target") {
  Presentation free({"a"}, {});
  auto h = fiber_product_subgroup(free, Presentation({"a"}, {}));
  CHECK(h.size() == 1);
  auto t = fiber_product_subgroup(free, Presentation({"a"}, {"a"}));
  REQUIRE(t.size() == 2);
  CHECK(print_word(t.generator(1)) == "a");
  CHECK_THROWS(fiber_product_subgroup(Presentation({"a"}, {"a^2"}), free));
  CHECK_THROWS(fiber_product_subgroup(free, Presentation({"b"}, {})));
}

TEST_CASE("diagonal subgroups") {
  auto one = direct_product({Presentation({"a"}, {}), Presentation({"a"}, {})});
  CHECK(diagonal_subgroup(one).size() == 1);
  Presentation bs({"a", "b"}, {"a^-1 b^2 a b^-3"});
  auto two = direct_product({bs, bs});
  auto d = diagonal_subgroup(two);
  REQUIRE(d.size() == 2);
  CHECK(print_word(d.generator(1)) == "b b_2");
  CHECK(d.presentation()->relators().size() == 2 + 4);
  CHECK_THROWS(diagonal_subgroup(
      direct_product({Presentation({"a"}, {}), Presentation({"b"}, {})})));
}

TEST_CASE("presentation files") {
  std::istringstream in("# comment\n\ngens a b\nrel a^-1 b^2 a b^-3   # trailing\r\n");
  auto p = read_presentation(in, "bs.pres");
  CHECK(p.num_generators() == 2);
  CHECK(print_word(p.relator(0)) == "a^-1 b^2 a b^-3");
  std::istringstream again(format_presentation(p));
  CHECK(read_presentation(again) == p);
}

TEST_CASE("presentation file errors carry line and column") {
  std::istringstream missing("rel a\n");
  CHECK_THROWS_AS(read_presentation(missing, "x"), InputError);
  std::istringstream bad("gens a b\nrel a c\n");
  try {
    read_presentation(bad, "bad.pres");
    FAIL("expected an input error");
  } catch (InputError const& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);
    CHECK(std::string(e.what()).rfind("bad.pres:2:7:", 0) == 0);
  }
  std::istringstream twice("gens a\ngens b\n");
  CHECK_THROWS_AS(read_presentation(twice), InputError);
  std::istringstream unknown("gens a\nrelator a\n");
  CHECK_THROWS_AS(read_presentation(unknown), InputError);
}

TEST_CASE("generating set files") {
  auto p = std::make_shared<Presentation const>(Presentation({"a", "b"}, {}));
  std::istringstream in("gen a^2\ngen b\n");
  auto s = read_generating_set(in, p);
  CHECK(s.size() == 2);
  std::istringstream empty("# nothing\n");
  CHECK(read_generating_set(empty, p).size() == 0);
  std::istringstream again(format_generating_set(s));
  CHECK(read_generating_set(again, p).generators() == s.generators());
  std::istringstream bad("gen x\n");
  CHECK_THROWS_AS(read_generating_set(bad, p), InputError);
}
