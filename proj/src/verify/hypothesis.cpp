#include <random>
#include <unordered_set>

#include "nuengine/verify.hpp"

namespace nuengine::verify {

namespace {

CheckReport start(const std::string& check, const nu::NuGroup& n) {
  CheckReport r;
  r.check = check;
  r.group = n.base_group().presentation().name;
  return r;
}

std::vector<Permutation> h_elements(const nu::NuGroup& n, const nu::TensorSet& t) {
  std::vector<Permutation> out;
  for (const auto& k : t.h_elements) out.push_back(n.nu().element_from_key(k));
  return out;
}

// Smallest subgroup containing `seed` and closed under conjugation by `by`.
PermGroup conjugation_closure(std::size_t degree, std::vector<Permutation> seed,
                              const std::vector<Permutation>& by) {
  PermGroup out(degree, {});
  out.add_generators(seed);
  for (std::size_t i = 0; i < out.generators().size(); ++i)
    for (const auto& t : by) {
      Permutation c = conjugate(out.generators()[i], t);
      if (!out.contains(c)) out.add_generators(std::span<const Permutation>(&c, 1));
    }
  return out;
}

// <[h,x] : h in H>
PermGroup h_commutators(const nu::NuGroup& n, const std::vector<Permutation>& hs,
                        const Permutation& x) {
  std::vector<Permutation> gens;
  for (const auto& h : hs) {
    Permutation c = commutator(h, x);
    if (!c.is_identity()) gens.push_back(std::move(c));
  }
  return PermGroup(n.nu().degree(), std::move(gens));
}

PermGroup intersect_conjugates(const PermGroup& u, const Permutation& x, const Permutation& y) {
  // elements z of u with x z x^-1 in u and y z y^-1 in u
  const Permutation xi = x.inverse(), yi = y.inverse();
  PermGroup out(u.degree(), {});
  for (const auto& k : u.element_keys()) {
    Permutation z = u.element_from_key(k);
    if (out.contains(z)) continue;
    if (u.contains(x * z * xi) && u.contains(y * z * yi))
      out.add_generators(std::span<const Permutation>(&z, 1));
  }
  return out;
}

std::string key_string(const ElementKey& k) {
  std::string s = "key[";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + "]";
}

}  // namespace

HypothesisWitness build_hypothesis_witness(const nu::NuGroup& n, const nu::TensorSet& t) {
  HypothesisWitness w;
  std::size_t best = 0;
  for (std::size_t i = 0; i < t.tensors.size(); ++i) {
    const std::size_t m = conjugacy_class_size(n.h(), t.tensors[i]);
    if (m > best) {
      best = m;
      w.a = i;
    }
  }
  w.m = best;
  std::tie(w.d, w.e) = t.witness[w.a];
  const Permutation& a = t.tensors[w.a];
  const PermGroup& nu = n.nu();

  std::unordered_set<ElementKey, ElementKeyHash> conj;
  for (const auto& k : t.h_elements) {
    Permutation h = nu.element_from_key(k);
    if (conj.insert(nu.key_of(conjugate(a, h))).second) {
      w.b.push_back(std::move(h));
      w.b_lengths.push_back(t.lengths.at(k));
      if (w.b.size() == w.m) break;
    }
  }
  w.u = centralizer(nu, w.b);
  w.theta_in_u = n.theta().is_subgroup_of(w.u);
  // U1 = U cap U^(d^-1) cap U^(d^-1 e^-1), with U^x = x^-1 U x
  const Permutation& d = n.elem_g(w.d);
  const Permutation& e = n.elem_phi(w.e);
  w.u1 = intersect_conjugates(w.u, d.inverse(), (e * d).inverse());
  return w;
}

CheckReport check_hypothesis(const nu::NuGroup& n, const nu::TensorSet& t,
                             const HypothesisWitness& w) {
  CheckReport rep = start("hypothesis", n);
  const Permutation& a = t.tensors[w.a];
  PermGroup c = centralizer(n.h(), std::vector<Permutation>{a});
  const Order index = n.h().order() / c.order();
  std::unordered_set<ElementKey, ElementKeyHash> conj;
  for (const auto& b : w.b) conj.insert(n.nu().key_of(conjugate(a, b)));
  std::vector<std::string> bad;
  if (index != w.m) bad.push_back("index=" + std::to_string(index));
  if (conj.size() != w.m || conjugacy_class_size(n.h(), a) != w.m)
    bad.push_back("conjugates=" + std::to_string(conj.size()));
  for (std::size_t i = 0; i < w.b.size(); ++i)
    if (w.b_lengths[i] + 1 > w.m) bad.push_back("b" + std::to_string(i) + "-length");
  for (const auto& other : t.tensors)
    if (conjugacy_class_size(n.h(), other) > w.m) bad.push_back("m-not-maximal");
  if (!w.theta_in_u) bad.push_back("theta-not-in-U");
  rep.tested = 1;
  rep.value = w.m;
  rep.passed = bad.empty();
  if (!rep.passed) rep.counterexample = bad;
  return rep;
}

CheckReport check_utheta_lemma(const HypothesisWitness& w, const nu::NuGroup& n,
                               const nu::TensorSet& t, std::uint64_t seed) {
  CheckReport rep = start("utheta-lemma", n);
  rep.note = "containment tested on generators of H";
  const Permutation& a = t.tensors[w.a];
  const PermGroup& nu = n.nu();
  const std::vector<Permutation> hs = h_elements(n, t);
  const PermGroup target = h_commutators(n, hs, a);
  const auto& hgens = n.h().generators();

  auto visit = [&](const Permutation& u) {
    if (!t.by_key.count(nu.key_of(u * a))) return true;
    ++rep.tested;
    for (const auto& h : hgens)
      if (!target.contains(commutator(h, u))) {
        rep.passed = false;
        rep.counterexample = std::vector<std::string>{"u=" + key_string(nu.key_of(u))};
        return false;
      }
    return true;
  };

  if (w.u.order() <= kSampleCount) {
    rep.scope = Scope::exhaustive();
    for (const auto& k : w.u.element_keys())
      if (!visit(w.u.element_from_key(k))) break;
  } else {
    rep.scope = Scope::sampled(kSampleCount, seed);
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < kSampleCount; ++s)
      if (!visit(w.u.random_element(rng))) break;
  }
  return rep;
}

CheckReport check_proposition_u1(const HypothesisWitness& w, const nu::NuGroup& n,
                                 const nu::TensorSet& t) {
  CheckReport rep = start("proposition-u1", n);
  const Permutation& a = t.tensors[w.a];
  const Permutation& d = n.elem_g(w.d);
  const Permutation di = d.inverse();
  const std::vector<Permutation> hs = h_elements(n, t);
  const PermGroup ha = h_commutators(n, hs, a);

  // [H, U1'] <= [H,a]^(d^-1)
  const PermGroup u1d = derived_subgroup(w.u1);
  const PermGroup lhs1 = commutator_subgroup(n.nu(), n.h(), u1d);
  bool first = true;
  for (const auto& z : lhs1.generators())
    if (!ha.contains(di * z * d)) first = false;

  // [H, [U1,d]] <= [H,a]
  std::vector<Permutation> seed;
  for (const auto& u : w.u1.generators()) seed.push_back(commutator(u, d));
  const PermGroup u1_d = conjugation_closure(n.nu().degree(), seed, w.u1.generators());
  const PermGroup lhs2 = commutator_subgroup(n.nu(), n.h(), u1_d);
  bool second = true;
  for (const auto& z : lhs2.generators())
    if (!ha.contains(z)) second = false;

  rep.tested = 2;
  rep.value = w.u1.order();
  rep.passed = first && second;
  if (!rep.passed) {
    std::vector<std::string> bad;
    if (!first) bad.push_back("derived-containment");
    if (!second) bad.push_back("commutator-containment");
    rep.counterexample = bad;
  }
  return rep;
}

}  // namespace nuengine::verify
