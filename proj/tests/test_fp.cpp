#include "doctest.h"
#include "nuengine/fp.hpp"

using namespace nuengine;
using namespace nuengine::fp;

TEST_CASE("words stay freely reduced") {
  Word a = Word::generator(0), b = Word::generator(1);
  CHECK((a * a.inverse()).empty());
  CHECK((a * b * b.inverse() * a).letters() == std::vector<Letter>{{0, 2}});
  CHECK(commutator(a, b).length() == 4);
  CHECK(conjugate(a, b) == b.inverse() * a * b);
  CHECK(a.pow(-3).letters() == std::vector<Letter>{{0, -3}});
  CHECK(a.pow(0).empty());
}

TEST_CASE("grammar") {
  auto ps = parse_presentations(R"(
    # two groups
    group S3 { gens: a, b; rels: a^3, b^2, (a*b)^2; }
    group K4 { gens: x, y; rels: x^2, y^2, [x,y]; }  # Klein
  )");
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].name == "S3");
  CHECK(ps[1].relators.size() == 3);

  auto q = parse_presentation("group Q8 { gens: a, b; rels: a^4, a^2 = b^2, a^b = a^-1; }");
  const Word a = Word::generator(0), b = Word::generator(1);
  CHECK(q.relators[1] == a.pow(2) * b.pow(-2));
  CHECK(q.relators[2] == conjugate(a, b) * a);

  auto c = parse_presentation("group T { gens: a, b, c; rels: [a,b,c], a b; }");
  const Word cc = Word::generator(2);
  CHECK(c.relators[0] == commutator(commutator(a, b), cc));
  CHECK(c.relators[1] == a * b);

  auto empty = parse_presentation("group trivial { gens: ; rels: ; }");
  CHECK(empty.generators.empty());
  CHECK(parse_presentations("").empty());
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_presentation("group G {\n  gens: a;\n  rels: b^2; }");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 9);
  }
  CHECK_THROWS_AS(parse_presentation("group G { gens: a, a; rels: a; }"), ParseError);
  CHECK_THROWS_AS(parse_presentation("group G { gens: a; rels: a^; }"), ParseError);
  CHECK_THROWS_AS(parse_presentation("group G { gens: a rels: a; }"), ParseError);
  CHECK_THROWS_AS(parse_presentation("group G { gens: a; rels: a; } group H { gens: ; rels: ; }"),
                  ParseError);
}

TEST_CASE("serialize round-trips") {
  auto p = parse_presentation("group Q8 { gens: a, b; rels: a^4, a^2 = b^2, a^b = a^-1; }");
  CHECK(parse_presentation(serialize(p)) == p);
}

TEST_CASE("coset enumeration") {
  auto s3 = parse_presentation("group S3 { gens: a, b; rels: a^3, b^2, (a*b)^2; }");
  auto k4 = parse_presentation("group K4 { gens: a, b; rels: a^2, b^2, [a,b]; }");
  auto c5 = parse_presentation("group C5 { gens: a; rels: a^5; }");
  auto triv = parse_presentation("group trivial { gens: ; rels: ; }");
  for (auto strategy : {Strategy::kHlt, Strategy::kFelsch}) {
    EnumerationOptions o;
    o.strategy = strategy;
    CHECK(presented_order(s3, o) == 6);
    CHECK(presented_order(k4, o) == 4);
    CHECK(presented_order(c5, o) == 5);
    CHECK(presented_order(triv, o) == 1);
    std::vector<Word> sub{Word::generator(1)};
    CHECK(todd_coxeter(s3, sub, o).num_cosets() == 3);
  }
  // a^2, b^3, (ab)^5 presents A5
  auto a5 = parse_presentation("group A5 { gens: a, b; rels: a^2, b^3, (a*b)^5; }");
  CHECK(presented_order(a5) == 60);
}

TEST_CASE("numbering is standard and deterministic") {
  auto s3 = parse_presentation("group S3 { gens: a, b; rels: a^3, b^2, (a*b)^2; }");
  CosetTable t1 = todd_coxeter(s3, {});
  CosetTable t2 = todd_coxeter(s3, {});
  for (std::size_t c = 0; c < t1.num_cosets(); ++c)
    for (std::size_t col = 0; col < t1.num_columns(); ++col) CHECK(t1.at(c, col) == t2.at(c, col));
  // every coset word leads back to its coset
  auto r = table_to_permgroup(t1);
  for (std::size_t c = 0; c < t1.num_cosets(); ++c)
    CHECK(evaluate(t1.coset_word(c), r.images, t1.num_cosets())[0] == c);
}

TEST_CASE("overflow is reported") {
  auto z = parse_presentation("group Z { gens: a; rels: ; }");
  EnumerationOptions o;
  o.cap = 100;
  CHECK(todd_coxeter(z, {}, o).status() == EnumerationStatus::kOverflow);
  CHECK_THROWS_AS(presented_order(z, o), EnumerationOverflow);
}

TEST_CASE("von Dyck and quotient checks") {
  auto s3 = parse_presentation("group S3 { gens: a, b; rels: a^3, b^2, (a*b)^2; }");
  auto r = table_to_permgroup(todd_coxeter(s3, {}), 6);
  CHECK(r.group.order() == 6);
  CHECK(von_dyck_check(s3, r.images, r.group));
  std::vector<Permutation> swapped{r.images[1], r.images[0]};
  CHECK_FALSE(von_dyck_check(s3, swapped, r.group));

  // S3 / A3 = C2
  auto c2 = parse_presentation("group C2 { gens: x; rels: x^2; }");
  PermGroup a3 = subgroup(r.group, std::vector<Permutation>{r.images[0]});
  std::vector<Permutation> cand{r.images[1]};
  CHECK(check_quotient_isomorphic(r.group, a3, c2, cand));
  auto c3 = parse_presentation("group C3 { gens: x; rels: x^3; }");
  CHECK_FALSE(check_quotient_isomorphic(r.group, a3, c3, cand));
  PermGroup b = subgroup(r.group, std::vector<Permutation>{r.images[1]});
  CHECK_THROWS(check_quotient_isomorphic(r.group, b, c3, cand));
}
