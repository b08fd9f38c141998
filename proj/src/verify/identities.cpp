#include <algorithm>
#include <random>
#include <unordered_set>

#include "nuengine/verify.hpp"

namespace nuengine::verify {

Scope Scope::for_space(std::uint64_t tuples, std::uint64_t seed) {
  if (tuples <= kExhaustiveLimit) return exhaustive();
  return sampled(kSampleCount, seed);
}

std::string to_string(const Scope& s) {
  if (s.kind == Scope::Kind::kExhaustive) return "exhaustive";
  return "sampled(" + std::to_string(s.count) + "," + std::to_string(s.seed) + ")";
}

std::string element_name(const nu::FiniteGroup& g, std::size_t i) {
  const fp::Word& w = g.word(i);
  return w.empty() ? "1" : g.presentation().word_to_string(w);
}

namespace {

// Evaluates products of nu(G) elements on the base points only.
class KeyEval {
 public:
  explicit KeyEval(const nu::NuGroup& n) : n_(n), base_(n.nu().base()) {
    const std::size_t m = n.order_g();
    tinv_.reserve(m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) tinv_.push_back(n.tensor(a, b).inverse());
  }

  const Permutation& t(std::size_t a, std::size_t b) const { return n_.tensor(a, b); }
  const Permutation& ti(std::size_t a, std::size_t b) const {
    return tinv_[a * n_.order_g() + b];
  }
  const Permutation& g(std::size_t i) const { return n_.elem_g(i); }
  const Permutation& gi(std::size_t i) const { return n_.elem_g(n_.base_group().inverse(i)); }
  const Permutation& f(std::size_t i) const { return n_.elem_phi(i); }
  const Permutation& fi(std::size_t i) const { return n_.elem_phi(n_.base_group().inverse(i)); }

  ElementKey key(std::initializer_list<const Permutation*> factors) const {
    ElementKey out(base_.begin(), base_.end());
    for (auto& p : out)
      for (const Permutation* f : factors) p = (*f)[p];
    return out;
  }

 private:
  const nu::NuGroup& n_;
  const std::vector<Point>& base_;
  std::vector<Permutation> tinv_;
};

std::string key_name(const std::string& label, const ElementKey& k) {
  std::string s = label + "=key[";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(k[i]);
  }
  return s + "]";
}

template <typename Visit>
void for_tuples(std::size_t arity, std::uint64_t range, const Scope& scope, Visit&& visit) {
  std::vector<std::uint64_t> tup(arity, 0);
  if (scope.kind == Scope::Kind::kExhaustive) {
    if (range == 0) return;
    while (true) {
      if (!visit(tup)) return;
      std::size_t i = arity;
      while (i > 0) {
        --i;
        if (++tup[i] < range) break;
        tup[i] = 0;
        if (i == 0) return;
      }
    }
  }
  std::mt19937_64 rng(scope.seed);
  for (std::uint64_t s = 0; s < scope.count; ++s) {
    for (auto& x : tup) x = bounded_draw(rng, range);
    if (!visit(tup)) return;
  }
}

CheckReport start(const std::string& check, const nu::NuGroup& n, const Scope& scope) {
  CheckReport r;
  r.check = check;
  r.group = n.base_group().presentation().name;
  r.scope = scope;
  return r;
}

}  // namespace

CheckReport check_basic_identities(const nu::NuGroup& n, const Scope& scope) {
  CheckReport rep = start("basic-identities", n, scope);
  const nu::FiniteGroup& G = n.base_group();
  KeyEval e(n);
  for_tuples(4, G.order(), scope, [&](const std::vector<std::uint64_t>& t) {
    const std::size_t g = t[0], h = t[1], x = t[2], y = t[3];
    ++rep.tested;
    const std::size_t gh = G.commutator(g, h), xy = G.commutator(x, y);
    // (a)
    bool ok = e.key({&e.ti(x, y), &e.t(g, h), &e.t(x, y)}) ==
              e.key({&e.gi(xy), &e.t(g, h), &e.g(xy)});
    // (b)
    if (ok) {
      const ElementKey k1 = e.key({&e.ti(g, h), &e.fi(x), &e.t(g, h), &e.f(x)});
      const ElementKey k2 = e.key({&e.t(gh, x)});
      const ElementKey k3 = e.key({&e.ti(g, h), &e.gi(x), &e.t(g, h), &e.g(x)});
      const ElementKey k4 = e.key({&e.t(h, g), &e.fi(x), &e.ti(h, g), &e.f(x)});
      const ElementKey k5 = e.key({&e.ti(x, gh)});
      const ElementKey k6 = e.key({&e.t(h, g), &e.gi(x), &e.ti(h, g), &e.g(x)});
      ok = k1 == k2 && k2 == k3 && k3 == k4 && k4 == k5 && k5 == k6;
    }
    // (c)
    if (ok)
      ok = e.key({&e.ti(g, h), &e.ti(x, y), &e.t(g, h), &e.t(x, y)}) == e.key({&e.t(gh, xy)});
    if (!ok) {
      rep.passed = false;
      rep.counterexample = std::vector<std::string>{
          "g=" + element_name(G, g), "h=" + element_name(G, h), "x=" + element_name(G, x),
          "y=" + element_name(G, y)};
    }
    return ok;
  });
  return rep;
}

CheckReport check_rho_decomposition(const nu::NuGroup& n, const Scope& scope) {
  CheckReport rep = start("rho-decomposition", n, scope);
  rep.note = "conjugation identity [x,y^phi]^alpha = [x,y^phi]^rho(alpha)";
  const nu::FiniteGroup& G = n.base_group();
  const PermGroup& nu = n.nu();
  KeyEval e(n);

  std::unordered_set<ElementKey, ElementKeyHash> theta_keys;
  for (const auto& k : n.theta().element_keys())
    theta_keys.insert(nu.key_of(n.theta().element_from_key(k)));

  struct Elt {
    Permutation p, inv;
    std::size_t rho;
  };
  auto make = [&](Permutation p) {
    Elt x{std::move(p), {}, 0};
    x.inv = x.p.inverse();
    x.rho = n.rho_index(x.p);
    return x;
  };
  std::vector<Elt> all;
  if (scope.kind == Scope::Kind::kExhaustive)
    for (auto& p : nu.elements()) all.push_back(make(std::move(p)));
  std::mt19937_64 rng(scope.seed);
  const std::uint64_t range = scope.kind == Scope::Kind::kExhaustive ? all.size() : nu.order();

  Elt sa, sb;
  auto pick = [&](std::uint64_t idx, Elt& slot) -> const Elt& {
    if (scope.kind == Scope::Kind::kExhaustive) return all[idx];
    slot = make(nu.random_element(rng));
    return slot;
  };

  for_tuples(2, range, scope, [&](const std::vector<std::uint64_t>& t) {
    const Elt& a = pick(t[0], sa);
    const Elt& b = pick(t[1], sb);
    ++rep.tested;
    ElementKey k = e.key({&a.inv, &b.inv, &a.p, &b.p, &e.ti(a.rho, b.rho)});
    if (!theta_keys.count(k)) {
      rep.passed = false;
      rep.counterexample = std::vector<std::string>{key_name("alpha", nu.key_of(a.p)),
                                                    key_name("beta", nu.key_of(b.p))};
      return false;
    }
    return true;
  });
  if (!rep.passed) return rep;

  const std::size_t m = G.order();
  auto second = [&](std::size_t x, std::size_t y, const Elt& a) {
    ++rep.tested;
    const ElementKey k0 = e.key({&a.inv, &e.t(x, y), &a.p});
    const bool ok = k0 == e.key({&e.gi(a.rho), &e.t(x, y), &e.g(a.rho)}) &&
                    k0 == e.key({&e.fi(a.rho), &e.t(x, y), &e.f(a.rho)});
    if (!ok) {
      rep.passed = false;
      rep.counterexample = std::vector<std::string>{
          "x=" + element_name(G, x), "y=" + element_name(G, y), key_name("alpha", nu.key_of(a.p))};
    }
    return ok;
  };
  if (scope.kind == Scope::Kind::kExhaustive) {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        for (const auto& a : all)
          if (!second(x, y, a)) return rep;
  } else {
    for (std::uint64_t s = 0; s < scope.count; ++s) {
      const std::size_t x = bounded_draw(rng, m), y = bounded_draw(rng, m);
      if (!second(x, y, pick(0, sa))) return rep;
    }
  }
  return rep;
}

CheckReport check_theta_centralizes(const nu::NuGroup& n) {
  CheckReport rep = start("theta-centralizes-h", n, Scope::exhaustive());
  rep.note = "generating sets";
  for (const auto& th : n.theta().generators())
    for (const auto& h : n.h().generators()) {
      ++rep.tested;
      if (th * h != h * th) {
        rep.passed = false;
        rep.counterexample = std::vector<std::string>{key_name("theta", n.nu().key_of(th)),
                                                      key_name("h", n.nu().key_of(h))};
        return rep;
      }
    }
  return rep;
}

CheckReport check_theta_quotient(const nu::NuGroup& n) {
  CheckReport rep = start("theta-quotient", n, Scope::exhaustive());
  rep.tested = 1;
  PermGroup im_g = subgroup(n.nu(), n.emb_g());
  rep.passed = fp::check_quotient_isomorphic(n.nu(), n.theta(), n.base_group().presentation(),
                                             n.emb_g()) &&
               im_g.order() == n.order_g();
  if (!rep.passed) rep.counterexample = std::vector<std::string>{"quotient"};
  return rep;
}

CheckReport check_coset_length(const nu::NuGroup& n, const nu::TensorSet& t, const PermGroup& c) {
  CheckReport rep = start("coset-length", n, Scope::exhaustive());
  if (!c.is_subgroup_of(n.h())) throw GroupError("coset-length: subgroup is not contained in H");
  const Order m = n.h().order() / c.order();
  std::vector<Permutation> reps_inv;
  std::vector<unsigned> lens;
  for (const auto& k : t.h_elements) {
    Permutation h = n.nu().element_from_key(k);
    bool seen = false;
    for (const auto& ri : reps_inv)
      if (c.contains(h * ri)) {
        seen = true;
        break;
      }
    if (seen) continue;
    reps_inv.push_back(h.inverse());
    lens.push_back(t.lengths.at(k));
    if (lens.back() + 1 > m && rep.passed) {
      rep.passed = false;
      rep.counterexample = std::vector<std::string>{key_name("coset-rep", k),
                                                    "length=" + std::to_string(lens.back())};
    }
    if (reps_inv.size() == m) break;
  }
  rep.tested = reps_inv.size();
  rep.value = lens.empty() ? 0 : *std::max_element(lens.begin(), lens.end());
  if (reps_inv.size() != m) {
    rep.passed = false;
    rep.counterexample = std::vector<std::string>{"cosets=" + std::to_string(reps_inv.size())};
  }
  return rep;
}

std::uint64_t max_tensor_class(const nu::NuGroup& n, const nu::TensorSet& t) {
  std::uint64_t best = 1;
  for (const auto& x : t.tensors) best = std::max<std::uint64_t>(best, conjugacy_class_size(n.nu(), x));
  return best;
}

CheckReport check_commutator_vs_tensor_class(const nu::NuGroup& n, const nu::TensorSet& t,
                                             const Scope& scope) {
  CheckReport rep = start("commutator-vs-tensor-class", n, scope);
  const nu::FiniteGroup& G = n.base_group();
  const std::size_t m = G.order();
  std::vector<std::size_t> gclass(m, 0);
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<bool> hit(m, false);
    for (std::size_t z = 0; z < m; ++z) hit[G.conjugate(c, z)] = true;
    gclass[c] = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));
  }
  std::vector<std::uint64_t> tclass(t.tensors.size(), 0);
  for_tuples(2, m, scope, [&](const std::vector<std::uint64_t>& p) {
    const std::size_t a = p[0], b = p[1];
    ++rep.tested;
    const std::size_t ti = t.tensor_of_pair[a * m + b];
    if (!tclass[ti]) tclass[ti] = conjugacy_class_size(n.nu(), t.tensors[ti]);
    if (gclass[G.commutator(a, b)] > tclass[ti]) {
      rep.passed = false;
      rep.counterexample =
          std::vector<std::string>{"a=" + element_name(G, a), "b=" + element_name(G, b)};
      return false;
    }
    return true;
  });
  return rep;
}

CheckReport check_comm_finiteness(const nu::NuGroup& n, const nu::TensorSet& t) {
  CheckReport rep = start("comm-finiteness", n, Scope::exhaustive());
  std::vector<Permutation> hs;
  for (const auto& k : t.h_elements) hs.push_back(n.nu().element_from_key(k));
  std::uint64_t best = 1;
  for (const auto& x : t.tensors) {
    std::vector<Permutation> gens;
    std::unordered_set<Permutation, PermutationHash> seen;
    for (const auto& h : hs) {
      Permutation c = commutator(h, x);
      if (!c.is_identity() && seen.insert(c).second) gens.push_back(std::move(c));
    }
    best = std::max<std::uint64_t>(best, PermGroup(n.nu().degree(), std::move(gens)).order());
    ++rep.tested;
  }
  rep.value = best;
  return rep;
}

}  // namespace nuengine::verify
