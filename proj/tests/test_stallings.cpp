#include <doctest.h>

#include "sgm/stallings.hpp"
#include "stallings_oracle.hpp"
#include "support.hpp"

using namespace sgm;

namespace {

auto const kAB = make_alphabet({"a", "b"});

Word w(std::string const& text) { return parse_word(text, kAB); }

SubgroupGraph graph_of(std::vector<std::string> const& gens) {
  std::vector<Word> words;
  for (auto const& g : gens) {
    words.push_back(w(g));
  }
  return build_graph(words);
}

std::vector<Letters> random_generators(std::size_t count, std::size_t max_length) {
  std::vector<Letters> gens;
  while (gens.size() < count) {
    auto g = test::random_reduced(2, test::uniform(1, max_length));
    gens.push_back(g);
  }
  return gens;
}

}  // namespace

TEST_CASE("graph of <a^2, b>") {
  auto g = graph_of({"a^2", "b"});
  CHECK(g.num_vertices() == 2);
  CHECK(g.dump() ==
        "basepoint 0\n"
        "0 --a--> 1\n"
        "1 --a--> 0\n"
        "0 --b--> 0\n");
  CHECK(g.is_folded());
  CHECK(g.is_core());
  CHECK(g.is_connected());
  CHECK_FALSE(g.letter_is_total(1));
  CHECK(graph_member(g, w("b a^2 b")));
  CHECK_FALSE(graph_member(g, w("a")));
  CHECK(graph_member(g, Word(kAB)));
  CHECK_FALSE(graph_index(g).has_value());
  CHECK(graph_rank(g) == 2);
}

TEST_CASE("trivial subgroup and whole group") {
  auto trivial = build_graph(std::vector<Letters>{}, kAB);
  CHECK(trivial.num_vertices() == 1);
  CHECK(trivial.num_edges() == 0);
  CHECK(graph_rank(trivial) == 0);
  auto whole = graph_of({"a", "b"});
  CHECK(whole.num_vertices() == 1);
  CHECK(whole.num_edges() == 2);
  CHECK(graph_index(whole) == 1);
}

TEST_CASE("index of <a^2, b, a b a^-1> is two") {
  auto g = graph_of({"a^2", "b", "a b a^-1"});
  CHECK(graph_index(g) == 2);
  CHECK(graph_rank(g) == 3);
}

TEST_CASE("folding removes redundant generators and hanging trees") {
  auto g = graph_of({"a b a^-1", "a b^2 a^-1", "b a b^-1 a^-1 a"});
  CHECK(g.is_folded());
  CHECK(g.is_core());
  CHECK(graph_member(g, w("a b^3 a^-1")));
  // Isomorphic subgroups given differently give identical graphs.
  CHECK(graph_of({"a^2", "b"}) == graph_of({"b", "a^-2", "b^-1 a^2 b"}));
}

TEST_CASE("membership agrees with brute-force closure") {
  for (int trial = 0; trial < 30; ++trial) {
    auto gens = random_generators(test::uniform(1, 3), 3);
    auto g = build_graph(gens, kAB);
    auto products = test::closure_within(gens, 8);
    for (auto const& p : test::products_up_to(gens, 3)) {
      CHECK(graph_member(g, Word(kAB, p)));
    }
    for (int q = 0; q < 30; ++q) {
      auto v = test::random_reduced(2, test::uniform(0, 4));
      CHECK(graph_member(g, Word(kAB, v)) == (products.count(v) > 0));
    }
  }
}

TEST_CASE("graph basis generates the subgroup") {
  for (int trial = 0; trial < 40; ++trial) {
    auto gens = random_generators(test::uniform(1, 3), 4);
    auto g = build_graph(gens, kAB);
    auto basis = graph_basis(g, bfs_tree(g));
    CHECK(basis.size() == graph_rank(g));
    auto h = build_graph(basis, kAB);
    CHECK(h == g);
  }
}

TEST_CASE("Hall completion of <a^2, b>") {
  auto core = graph_of({"a^2", "b"});
  auto v = hall_completion(core);
  CHECK(v.index() == 2);
  CHECK(v.rank() == 3);
  CHECK(v.completed().dump() ==
        "basepoint 0\n"
        "0 --a--> 1\n"
        "1 --a--> 0\n"
        "0 --b--> 0\n"
        "1 --b--> 1\n");
  REQUIRE(v.complement_basis().size() == 1);
  Word c(kAB, v.complement_basis()[0]);
  CHECK(print_word(c) == "a b a^-1");
  CHECK(virtual_retraction(core, c).empty());
  CHECK(print_word(virtual_retraction(core, concat(concat(w("a^2"), c), w("b")))) == "a^2 b");
  CHECK_THROWS_AS(v.retract(w("a")), NotInSubgroup);
}

TEST_CASE("finite index subgroups complete to themselves") {
  auto core = graph_of({"a^2", "b", "a b a^-1"});
  auto v = hall_completion(core);
  CHECK(v.completed() == core);
  CHECK(v.complement_basis().empty());
}

TEST_CASE("Hall completion of <a b a^-1>") {
  auto core = graph_of({"a b a^-1"});
  CHECK(core.num_vertices() == 2);
  auto v = hall_completion(core);
  CHECK(v.index() == 2);
}

TEST_CASE("Hall completion properties on random subgroups") {
  for (int trial = 0; trial < 60; ++trial) {
    auto gens = random_generators(test::uniform(1, 3), 5);
    auto core = build_graph(gens, kAB);
    auto v = hall_completion(core);
    for (std::size_t x = 0; x < 2; ++x) {
      CHECK(v.completed().letter_is_total(x));
    }
    CHECK(v.rank() - 1 == v.index() * (2 - 1));
    CHECK(v.index() == core.num_vertices());
    auto basis = v.basis();
    auto completed = v.completed();
    CHECK(build_graph(basis, kAB) == build_graph(graph_basis(completed, bfs_tree(completed)), kAB));
    for (auto const& h : gens) {
      CHECK(v.in_completion(Word(kAB, h)));
      CHECK(virtual_retraction(core, Word(kAB, h)) == free_reduce(Word(kAB, h)));
    }
    for (auto const& c : v.complement_basis()) {
      CHECK(virtual_retraction(core, Word(kAB, c)).empty());
    }
    // The retraction is a homomorphism onto H.
    auto x = Word(kAB, basis[test::uniform(0, basis.size() - 1)]);
    auto y = Word(kAB, basis[test::uniform(0, basis.size() - 1)]);
    auto rx = virtual_retraction(core, x);
    auto ry = virtual_retraction(core, y);
    CHECK(virtual_retraction(core, concat(x, y)) == concat(rx, ry));
    CHECK(graph_member(core, rx));
  }
}

TEST_CASE("complete_partial_injections matches free ends in order") {
  std::vector<std::vector<int>> maps{{1, kNoVertex, kNoVertex}, {kNoVertex, kNoVertex, kNoVertex}};
  complete_partial_injections(maps);
  CHECK(maps[0] == std::vector<int>{1, 0, 2});
  CHECK(maps[1] == std::vector<int>{0, 1, 2});
}
