#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "sgm/perm_group.hpp"
#include "sgm/presentations.hpp"
#include "sgm/quotients.hpp"
#include "support.hpp"

using namespace sgm;

namespace {

std::shared_ptr<Presentation const> pres(std::vector<std::string> gens,
                                         std::vector<std::string> rels) {
  return std::make_shared<Presentation const>(Presentation(std::move(gens), rels));
}

// Every tuple of permutations, filtered by the relators.
std::vector<std::vector<Permutation>> brute_force_quotients(Presentation const& p,
                                                            std::size_t degree) {
  std::vector<Permutation> all;
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  do {
    all.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  std::vector<std::vector<Permutation>> out;
  std::size_t k = p.num_generators();
  std::vector<std::size_t> digits(k, 0);
  while (true) {
    std::vector<Permutation> tuple;
    for (auto d : digits) {
      tuple.push_back(all[d]);
    }
    bool ok = true;
    for (auto const& r : p.relators()) {
      Permutation v(degree);
      for (auto x : r) {
        v = v * (x.is_inverse() ? tuple[x.index()].inverse() : tuple[x.index()]);
      }
      ok = ok && v.is_identity();
    }
    if (ok) {
      out.push_back(tuple);
    }
    std::size_t i = k;
    while (i > 0 && ++digits[i - 1] == all.size()) {
      digits[--i] = 0;
    }
    if (i == 0) {
      break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("permutation basics") {
  auto p = Permutation::from_cycles(3, {{0, 1, 2}});
  CHECK(p.images() == std::vector<Point>{1, 2, 0});
  CHECK(p.to_cycles() == "(1 2 3)");
  CHECK(p.to_one_line() == "[1, 2, 0]");
  CHECK(Permutation(4).to_cycles() == "()");
  CHECK((p * p * p).is_identity());
  CHECK(p * p.inverse() == Permutation(3));
  auto t = Permutation::from_cycles(3, {{0, 1}});
  // p applied first: 0 -> 1 -> 0.
  CHECK((p * t)[0] == 0);
  CHECK((t * p)[0] == 2);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 2}), std::invalid_argument);
}

TEST_CASE("Schreier-Sims examples") {
  auto s3 = schreier_sims(3, {Permutation::from_cycles(3, {{0, 1, 2}}),
                              Permutation::from_cycles(3, {{0, 1}})});
  CHECK(s3.order() == 6);
  CHECK(perm_member(s3, Permutation::from_cycles(3, {{0, 2}})));
  CHECK(schreier_sims(4, {}).order() == 1);
  CHECK(schreier_sims(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}})}).order() == 2);
  auto c3 = schreier_sims(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  CHECK(c3.order() == 3);
  CHECK_FALSE(perm_member(c3, Permutation::from_cycles(3, {{0, 1}})));
  CHECK(perm_member(c3, Permutation(3)));
  CHECK_THROWS(perm_member(c3, Permutation(4)));
}

TEST_CASE("Schreier-Sims agrees with closure on random groups") {
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t degree = test::uniform(1, 6);
    std::vector<Permutation> gens;
    for (std::size_t i = test::uniform(0, 3); i > 0; --i) {
      gens.push_back(test::random_permutation(degree));
    }
    auto group = schreier_sims(degree, gens);
    auto closure = test::naive_closure(degree, gens);
    CHECK(group.order() == closure.size());
    for (int q = 0; q < 10; ++q) {
      auto p = test::random_permutation(degree);
      CHECK(perm_member(group, p) == (closure.count(p.images()) > 0));
    }
    // The base and strong generators describe the same group.
    CHECK(schreier_sims(degree, group.strong_generators()).order() == group.order());
  }
}

TEST_CASE("large symmetric and alternating groups") {
  std::size_t n = 12;
  std::vector<Point> cycle(n);
  for (Point i = 0; i < n; ++i) {
    cycle[i] = (i + 1) % static_cast<Point>(n);
  }
  auto sym = schreier_sims(n, {Permutation(cycle), Permutation::from_cycles(n, {{0, 1}})});
  CHECK(sym.order() == boost::multiprecision::cpp_int("479001600"));
  std::vector<Permutation> threes;
  for (Point i = 0; i + 2 < n; ++i) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    img[i] = i + 1;
    img[i + 1] = i + 2;
    img[i + 2] = i;
    threes.emplace_back(img);
  }
  auto alt = schreier_sims(n, threes);
  CHECK(alt.order() == boost::multiprecision::cpp_int("239500800"));
  CHECK_FALSE(perm_member(alt, Permutation::from_cycles(n, {{0, 1}})));
}

TEST_CASE("evaluate representations") {
  auto c3 = pres({"a"}, {"a^3"});
  PermRep rep(c3, 3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  CHECK(rep.evaluate(c3->word("a^3")).is_identity());
  CHECK(rep.evaluate(Word(c3->alphabet())).is_identity());
  CHECK(rep.evaluate(c3->word("a^-1")) == Permutation::from_cycles(3, {{0, 2, 1}}));
  CHECK_THROWS_AS(PermRep(c3, 2, {Permutation::from_cycles(2, {{0, 1}})}),
                  InvalidRepresentation);

  auto bs = pres({"a", "b"}, {"a^-1 b^2 a b^-3"});
  PermRep r2(bs, 2, {Permutation::from_cycles(2, {{0, 1}}), Permutation(2)});
  CHECK(r2.evaluate(bs->relator(0)).is_identity());
}

TEST_CASE("enumerate_quotients examples") {
  CHECK(all_quotients(pres({"a"}, {"a^3"}), 3).size() == 3);
  for (std::size_t d = 1; d <= 4; ++d) {
    CHECK(all_quotients(pres({"a"}, {"a"}), d).size() == 1);
  }
  CHECK(all_quotients(pres({"a"}, {}), 2).size() == 2);
  std::size_t factorial = 1;
  for (std::size_t d = 1; d <= 4; ++d) {
    factorial *= d;
    CHECK(all_quotients(pres({"a"}, {}), d).size() == factorial);
  }
}

TEST_CASE("enumerate_quotients agrees with brute force in the same order") {
  std::vector<std::shared_ptr<Presentation const>> cases = {
      pres({"a", "b"}, {"a^2", "b^3", "a b a b a b"}),
      pres({"a", "b"}, {"a^-1 b^2 a b^-3"}),
      pres({"a", "b"}, {"a^-1 b^-1 a b"}),
      pres({"x", "y", "z"}, {"x y z", "x^2"}),
      pres({"a", "b"}, {"a^4", "a^2 b^-2", "b^-1 a b a"}),
  };
  for (auto const& p : cases) {
    for (std::size_t d = 1; d <= 4; ++d) {
      auto brute = brute_force_quotients(*p, d);
      auto reps = all_quotients(p, d);
      REQUIRE(reps.size() == brute.size());
      for (std::size_t i = 0; i < reps.size(); ++i) {
        CHECK(reps[i].images() == brute[i]);
      }
    }
  }
}

TEST_CASE("parallel enumeration reproduces the serial order") {
  auto p = pres({"a", "b"}, {"a^3", "b^2", "a b a b a b"});
  for (std::size_t d = 1; d <= 5; ++d) {
    CHECK(all_quotients_parallel(p, d) == all_quotients(p, d));
  }
  auto free = pres({"a", "b"}, {});
  CHECK(all_quotients_parallel(free, 3) == all_quotients(free, 3));
}

TEST_CASE("resumable enumeration counts its work") {
  QuotientEnumerator e(pres({"a"}, {"a^3"}), 3);
  std::size_t found = 0;
  std::uint64_t calls = 0;
  while (true) {
    ++calls;
    auto s = e.step();
    if (s == QuotientEnumerator::Status::exhausted) {
      break;
    }
    found += s == QuotientEnumerator::Status::found;
  }
  CHECK(found == 3);
  CHECK(e.units() > 0);
  CHECK(e.units() <= calls);
  CHECK(e.step() == QuotientEnumerator::Status::exhausted);
}

TEST_CASE("quotient scan, serial and parallel") {
  auto c6 = pres({"a"}, {"a^6"});
  std::vector<Letters> s{c6->word("a^2").letters()};
  auto g = c6->word("a").letters();
  auto serial = scan_quotients(c6, s, g, 4);
  auto parallel = scan_quotients_parallel(c6, s, g, 4);
  CHECK(serial.representations == parallel.representations);
  CHECK(serial.separating == parallel.separating);
  CHECK(serial.first_separating == parallel.first_separating);
  CHECK(serial.separating > 0);
  // a^2 generates a subgroup of index 2: a 2-cycle for a separates.
  auto h = scan_quotients(c6, s, c6->word("a^4").letters(), 4);
  CHECK(h.separating == 0);
}
