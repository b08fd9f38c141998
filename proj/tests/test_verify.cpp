#include <numeric>
#include <set>

#include "doctest.h"
#include "nuengine/verify.hpp"

using namespace nuengine;
using namespace nuengine::verify;

namespace {

fp::Presentation P(const char* text) { return fp::parse_presentation(text); }

const char* kC2 = "group C2 { gens: a; rels: a^2; }";
const char* kS3 = "group S3 { gens: a, b; rels: a^3, b^2, (a*b)^2; }";
const char* kD4 = "group D4 { gens: a, b; rels: a^4, b^2, (a*b)^2; }";
const char* kQ8 = "group Q8 { gens: a, b; rels: a^4, a^2 = b^2, a^b = a^-1; }";

using Key = std::vector<Point>;
Key key(const Permutation& x) { return Key(x.images().begin(), x.images().end()); }

// Conjugacy class size by direct conjugation over a full element list.
std::size_t brute_class(const std::vector<Permutation>& all, const Permutation& x) {
  std::set<Key> seen;
  for (const auto& g : all) seen.insert(key(g.inverse() * x * g));
  return seen.size();
}

std::size_t brute_max_tensor_class(const nu::NuGroup& n) {
  const auto all = n.nu().elements();
  std::size_t best = 0;
  for (std::size_t a = 0; a < n.order_g(); ++a)
    for (std::size_t b = 0; b < n.order_g(); ++b)
      best = std::max(best, brute_class(all, n.tensor(a, b)));
  return best;
}

// Closure of a set under multiplication.
std::size_t brute_closure(std::vector<Permutation> gens, std::size_t degree) {
  std::set<Key> seen{key(Permutation(degree))};
  std::vector<Permutation> todo{Permutation(degree)};
  for (std::size_t i = 0; i < todo.size(); ++i)
    for (const auto& g : gens) {
      Permutation x = todo[i] * g;
      if (seen.insert(key(x)).second) todo.push_back(x);
    }
  return seen.size();
}

std::vector<Permutation> all_commutators(const std::vector<Permutation>& xs) {
  std::set<Key> seen;
  std::vector<Permutation> out;
  for (const auto& x : xs)
    for (const auto& y : xs) {
      Permutation c = commutator(x, y);
      if (seen.insert(key(c)).second) out.push_back(c);
    }
  return out;
}

// D_m as pairs (r, s) meaning a^r b^s with b a b = a^-1.
struct Dih {
  long long m;
  std::pair<long long, int> mul(std::pair<long long, int> x, std::pair<long long, int> y) const {
    const long long r = x.second ? x.first - y.first : x.first + y.first;
    return {((r % m) + m) % m, x.second ^ y.second};
  }
  std::pair<long long, int> inv(std::pair<long long, int> x) const {
    if (x.second) return x;
    return {(m - x.first) % m, 0};
  }
  std::vector<std::pair<long long, int>> all() const {
    std::vector<std::pair<long long, int>> v;
    for (int s = 0; s < 2; ++s)
      for (long long r = 0; r < m; ++r) v.push_back({r, s});
    return v;
  }
  std::pair<std::size_t, std::size_t> derived_and_max_class() const {
    std::set<std::pair<long long, int>> comms;
    for (auto x : all())
      for (auto y : all()) comms.insert(mul(mul(inv(x), inv(y)), mul(x, y)));
    std::size_t best = 0;
    for (auto c : comms) {
      std::set<std::pair<long long, int>> cls;
      for (auto g : all()) cls.insert(mul(mul(inv(g), c), g));
      best = std::max(best, cls.size());
    }
    // in a dihedral group the commutators already form a subgroup
    return {comms.size(), best};
  }
};

}  // namespace

TEST_CASE("scope policy") {
  CHECK(Scope::for_space(kExhaustiveLimit, 1) == Scope::exhaustive());
  const Scope s = Scope::for_space(kExhaustiveLimit + 1, 9);
  CHECK(s.kind == Scope::Kind::kSampled);
  CHECK(s.count == kSampleCount);
  CHECK(s.seed == 9);
}

TEST_CASE("C2 tuple counts") {
  const nu::NuGroup n = nu::realize_nu(P(kC2));
  const CheckReport id = check_basic_identities(n, Scope::exhaustive());
  CHECK(id.passed);
  CHECK(id.tested == 16);
  const CheckReport rho = check_rho_decomposition(n, Scope::exhaustive());
  CHECK(rho.passed);
  // 64 pairs (alpha,beta) then 2*2*8 triples (x,y,alpha)
  CHECK(rho.tested == 64 + 32);
}

TEST_CASE("identities and rho on small groups") {
  for (const char* text : {kS3, kD4, kQ8}) {
    const nu::NuGroup n = nu::realize_nu(P(text));
    CHECK(check_basic_identities(n, Scope::exhaustive()).passed);
    CHECK(check_rho_decomposition(n, Scope::sampled(2000, 42)).passed);
    CHECK(check_theta_centralizes(n).passed);
    CHECK(check_theta_quotient(n).passed);
  }
}

TEST_CASE("sampling is reproducible") {
  const nu::NuGroup n = nu::realize_nu(P(kD4));
  const CheckReport a = check_basic_identities(n, Scope::sampled(300, 42));
  const CheckReport b = check_basic_identities(n, Scope::sampled(300, 42));
  CHECK(a == b);
  CHECK(a.tested == 300);
}

TEST_CASE("coset length with C = H") {
  const nu::NuGroup n = nu::realize_nu(P(kS3));
  const nu::TensorSet t = nu::tensor_set(n);
  const CheckReport r = check_coset_length(n, t, n.h());
  CHECK(r.passed);
}

TEST_CASE("coset length over every index-2 subgroup of H for D4") {
  const nu::NuGroup n = nu::realize_nu(P(kD4));
  const nu::TensorSet t = nu::tensor_set(n);
  const auto hs = n.h().elements();
  std::vector<Permutation> base;
  for (const auto& x : hs) base.push_back(x * x);
  for (const auto& c : all_commutators(hs)) base.push_back(c);
  // subgroups between the square-and-commutator subgroup and H, grown one element at a time
  std::vector<std::vector<Permutation>> layer{base};
  std::vector<PermGroup> found;
  std::vector<PermGroup> index2;
  while (!layer.empty()) {
    std::vector<std::vector<Permutation>> next;
    for (const auto& gens : layer)
      for (const auto& x : hs) {
        auto g2 = gens;
        g2.push_back(x);
        PermGroup s = subgroup(n.nu(), g2);
        if (s.order() * 2 > n.h().order()) continue;
        bool seen = false;
        for (const auto& f : found) seen = seen || f.same_group(s);
        if (seen) continue;
        found.push_back(s);
        next.push_back(g2);
        if (s.order() * 2 == n.h().order()) index2.push_back(s);
      }
    layer = std::move(next);
  }
  REQUIRE(!index2.empty());
  for (const auto& c : index2) CHECK(check_coset_length(n, t, c).passed);
}

TEST_CASE("max tensor class matches a brute-force sweep") {
  for (const char* text : {kS3, kD4, kQ8}) {
    const nu::NuGroup n = nu::realize_nu(P(text));
    CHECK(max_tensor_class(n, nu::tensor_set(n)) == brute_max_tensor_class(n));
  }
}

TEST_CASE("theorem A rows") {
  const nu::NuGroup s3 = nu::realize_nu(P(kS3));
  const TheoremARow r = theorem_a_row("S3", s3, nu::tensor_set(s3));
  CHECK(r.complete);
  CHECK(r.formula_ok);
  CHECK(r.order_g == 6);
  CHECK(r.order_nu == 216);
  CHECK(r.n == brute_max_tensor_class(s3));
  const auto nu1 = all_commutators(s3.nu().elements());
  std::vector<Permutation> nu1_elems;
  {
    PermGroup d = subgroup(s3.nu(), nu1);
    nu1_elems = d.elements();
  }
  CHECK(r.order_nu2 == brute_closure(all_commutators(nu1_elems), s3.nu().degree()));
  CHECK(r.order_g2 == 1);

  const TheoremARow d4 = theorem_a_row("D4", P(kD4));
  CHECK(d4.complete);
  CHECK(d4.formula_ok);
  CHECK(d4.order_nu == d4.order_g * d4.order_g * d4.order_h);

  const TheoremARow c4 = theorem_a_row("C4", P("group C4 { gens: a; rels: a^4; }"));
  CHECK(c4.n == 1);
  CHECK(c4.order_nu2 == 1);

  nu::Caps tight;
  tight.order_cap = 4;
  const TheoremARow capped = theorem_a_row("S3", P(kS3), tight);
  CHECK_FALSE(capped.complete);
  CHECK_FALSE(capped.error.empty());
}

TEST_CASE("commutator classes bounded by tensor classes") {
  for (const char* text : {kS3, kD4, kQ8}) {
    const nu::NuGroup n = nu::realize_nu(P(text));
    CHECK(check_commutator_vs_tensor_class(n, nu::tensor_set(n), Scope::exhaustive()).passed);
  }
}

TEST_CASE("hypothesis witness and the U checks") {
  for (const char* text : {kS3, kD4, kQ8}) {
    const nu::NuGroup n = nu::realize_nu(P(text));
    const nu::TensorSet t = nu::tensor_set(n);
    const HypothesisWitness w = build_hypothesis_witness(n, t);
    CHECK(w.b.size() == w.m);
    CHECK(w.b_lengths.size() == w.m);
    for (const auto& x : w.b) CHECK(n.h().contains(x));
    CHECK(w.m == brute_class(n.h().elements(), t.tensors[w.a]));
    CHECK(check_hypothesis(n, t, w).passed);
    CHECK(w.theta_in_u);
    CHECK(check_utheta_lemma(w, n, t, 42).passed);
    CHECK(check_proposition_u1(w, n, t).passed);
    const CheckReport f = check_comm_finiteness(n, t);
    CHECK(f.passed);
    REQUIRE(f.value);
    CHECK(*f.value <= n.h().order());
  }
}

TEST_CASE("dihedral family against an arithmetic model") {
  const auto rows = family_dihedral(3, 15);
  REQUIRE(rows.size() == 13);
  for (const auto& r : rows) {
    CHECK(r.complete);
    const auto [derived, cls] = Dih{static_cast<long long>(r.parameter)}.derived_and_max_class();
    CHECK(r.order_g == 2 * r.parameter);
    CHECK(r.order_g_derived == derived);
    CHECK(r.max_commutator_class == cls);
    CHECK(r.max_commutator_class <= 2);
  }
  CHECK(rows.front().name == "D3");
}

TEST_CASE("Prufer truncations") {
  const auto rows = family_prufer_truncation(3, 1, 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].order_g_derived == 3);
  CHECK(rows[1].order_g_derived == 9);
  for (const auto& r : rows) {
    REQUIRE(r.max_tensor_class);
    const nu::NuGroup n = nu::realize_nu(prufer_truncation_presentation(3, r.parameter));
    CHECK(*r.max_tensor_class == brute_max_tensor_class(n));
    CHECK(*r.max_tensor_class <= 4);
  }
  const auto five = family_prufer_truncation(5, 1, 1);
  REQUIRE(five.size() == 1);
  CHECK(five[0].order_g == 10);
  const auto [derived, cls] = Dih{5}.derived_and_max_class();
  CHECK(five[0].order_g_derived == derived);
  CHECK(five[0].max_commutator_class == cls);
}

TEST_CASE("max commutator class on Q8") {
  const nu::FiniteGroup g = nu::enumerate_group(P(kQ8), 1000);
  // Q8' = {1, -1} is central
  CHECK(max_commutator_class(g) == 1);
}
