#include <set>

#include "doctest.h"
#include "nuengine/perm_group.hpp"

using namespace nuengine;

namespace {

// Naive closure under multiplication; only for tiny groups.
std::set<std::vector<Point>> closure(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<std::vector<Point>> seen;
  std::vector<Permutation> todo{Permutation(degree)};
  seen.insert(std::vector<Point>(todo[0].images().begin(), todo[0].images().end()));
  for (std::size_t i = 0; i < todo.size(); ++i)
    for (const auto& g : gens) {
      Permutation x = todo[i] * g;
      std::vector<Point> im(x.images().begin(), x.images().end());
      if (seen.insert(im).second) todo.push_back(x);
    }
  return seen;
}

Permutation cyc(std::size_t n, std::initializer_list<std::initializer_list<Point>> c) {
  return Permutation::from_cycles(n, c);
}

}  // namespace

TEST_CASE("right action conventions") {
  Permutation x = cyc(3, {{0, 1}});
  Permutation y = cyc(3, {{1, 2}});
  // x applied first: 0 -> 1 -> 2
  CHECK((x * y)[0] == 2);
  CHECK(conjugate(x, y) == y.inverse() * x * y);
  CHECK(commutator(x, y) == x.inverse() * y.inverse() * x * y);
  CHECK(x.pow(2).is_identity());
  CHECK(cyc(5, {{0, 1, 2, 3, 4}}).pow(-1) == cyc(5, {{0, 1, 2, 3, 4}}).inverse());
  CHECK(Permutation(4).first_moved() == 4);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), GroupError);
}

TEST_CASE("orders agree with brute-force closure") {
  const std::vector<std::pair<std::size_t, std::vector<Permutation>>> cases = {
      {6, {cyc(6, {{0, 1}}), cyc(6, {{0, 1, 2, 3, 4, 5}})}},
      {5, {cyc(5, {{0, 1, 2}}), cyc(5, {{2, 3, 4}})}},
      {8, {cyc(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}), cyc(8, {{0, 4}, {1, 7}, {2, 6}, {3, 5}})}},
      {7, {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{1, 2, 4}, {3, 6, 5}})}},
  };
  for (const auto& [deg, gens] : cases) {
    const auto brute = closure(gens, deg);
    PermGroup g(deg, gens);
    CHECK(g.order() == brute.size());
    PermGroup b(deg, gens, BuildOptions{brute.size(), {}});
    CHECK(b.order() == brute.size());
    CHECK(g.same_group(b));
    std::size_t members = 0;
    for (const auto& k : g.element_keys()) {
      const Permutation x = g.element_from_key(k);
      members += brute.count(std::vector<Point>(x.images().begin(), x.images().end()));
    }
    CHECK(members == brute.size());
  }
}

TEST_CASE("overstated order bound still yields the exact order") {
  PermGroup g(5, {cyc(5, {{0, 1, 2}}), cyc(5, {{2, 3, 4}})}, BuildOptions{120, {}});
  CHECK(g.order() == 60);
}

TEST_CASE("membership and sifting") {
  PermGroup a5(5, {cyc(5, {{0, 1, 2}}), cyc(5, {{2, 3, 4}})});
  CHECK(a5.contains(cyc(5, {{0, 1}, {2, 3}})));
  CHECK_FALSE(a5.contains(cyc(5, {{0, 1}})));
  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) CHECK(a5.contains(a5.random_element(rng)));
}

TEST_CASE("base prefix is honoured") {
  PermGroup g(6, {cyc(6, {{0, 1, 2, 3, 4, 5}})}, BuildOptions{std::nullopt, {3, 0}});
  REQUIRE(!g.base().empty());
  CHECK(g.base()[0] == 3);
}

TEST_CASE("centralizer, normal closure, derived subgroup") {
  PermGroup s4(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})});
  CHECK(s4.order() == 24);
  CHECK(derived_subgroup(s4).order() == 12);
  CHECK(derived_subgroup(derived_subgroup(s4)).order() == 4);
  std::vector<Permutation> t{cyc(4, {{0, 1}})};
  // brute force: elements of S4 commuting with (0 1)
  std::size_t commuting = 0;
  for (const auto& x : s4.elements()) commuting += (x * t[0] == t[0] * x);
  CHECK(centralizer(s4, t).order() == commuting);
  CHECK(normal_closure(s4, t).order() == 24);
  CHECK(conjugacy_class_size(s4, t[0]) == 6);
  PermGroup v4(4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  CHECK(is_normal(s4, v4));
  CHECK(commutator_subgroup(s4, s4, v4).order() == 4);
}

TEST_CASE("homomorphism kernel and image") {
  // S4 -> S3 through the action on the three pairings of {0,1,2,3}
  PermGroup s4(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})});
  PermGroup s3(3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})});
  Homomorphism h(s4, s3, {cyc(3, {{1, 2}}), cyc(3, {{0, 1}})});
  CHECK_THROWS(kernel(h));
  h.mark_verified();
  CHECK(kernel(h).order() == 4);
  CHECK(image(h).order() == 6);
  CHECK(h.map(cyc(4, {{0, 1}})) == cyc(3, {{1, 2}}));
}

TEST_CASE("abelian invariants via Smith normal form") {
  PermGroup c6(6, {cyc(6, {{0, 1, 2, 3, 4, 5}})});
  CHECK(abelian_invariants(c6) == std::vector<Order>{6});
  PermGroup c2c4(6, {cyc(6, {{0, 1}}), cyc(6, {{2, 3, 4, 5}})});
  CHECK(abelian_invariants(c2c4) == std::vector<Order>{2, 4});
  PermGroup s4(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})});
  CHECK(abelian_invariants(s4) == std::vector<Order>{2});
  CHECK(smith_diagonal({{2, 4}, {6, 8}}) == std::vector<long long>{2, 4});
}

TEST_CASE("bounded draws are reproducible") {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    auto x = bounded_draw(a, 7);
    CHECK(x < 7);
    CHECK(x == bounded_draw(b, 7));
  }
}
