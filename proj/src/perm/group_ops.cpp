#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "nuengine/perm_group.hpp"

namespace nuengine {

Order order(const PermGroup& g) { return g.order(); }

std::vector<Permutation> conjugacy_class(const PermGroup& g, const Permutation& x) {
  if (!g.contains(x)) throw GroupError("conjugacy_class: element is not in the group");
  std::vector<Permutation> orbit{x};
  std::unordered_set<Permutation, PermutationHash> seen{x};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& s : g.generators()) {
      Permutation y = conjugate(orbit[i], s);
      if (seen.insert(y).second) orbit.push_back(std::move(y));
    }
  }
  return orbit;
}

std::size_t conjugacy_class_size(const PermGroup& g, const Permutation& x) {
  return conjugacy_class(g, x).size();
}

namespace {

// Stabilizer of x under conjugation, by Schreier's lemma over the orbit. The
// stabilizer order is |g| / |orbit|, which certifies the chain.
PermGroup element_centralizer(const PermGroup& g, const Permutation& x) {
  std::vector<Permutation> orbit{x};
  std::vector<Permutation> transversal{g.identity()};
  std::unordered_map<Permutation, std::size_t, PermutationHash> index{{x, 0}};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& s : g.generators()) {
      Permutation y = conjugate(orbit[i], s);
      if (index.emplace(y, orbit.size()).second) {
        orbit.push_back(std::move(y));
        transversal.push_back(transversal[i] * s);
      }
    }
  }
  if (orbit.size() == 1) return g;

  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> inverses;
  inverses.reserve(transversal.size());
  for (const auto& t : transversal) inverses.push_back(t.inverse());
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& s : g.generators()) {
      const std::size_t j = index.at(conjugate(orbit[i], s));
      Permutation sg = transversal[i] * s * inverses[j];
      if (!sg.is_identity() && seen.insert(sg).second) gens.push_back(std::move(sg));
    }
  }
  BuildOptions opts;
  opts.order_bound = g.order() / orbit.size();
  return PermGroup(g.degree(), std::move(gens), opts);
}

}  // namespace

PermGroup centralizer(const PermGroup& g, std::span<const Permutation> s) {
  for (const auto& x : s)
    if (!g.contains(x)) throw GroupError("centralizer: element is not in the group");
  PermGroup c = g;
  for (const auto& x : s) {
    bool central = true;
    for (const auto& t : c.generators())
      if (t * x != x * t) {
        central = false;
        break;
      }
    if (!central) c = element_centralizer(c, x);
  }
  return c;
}

PermGroup subgroup(const PermGroup& ambient, std::span<const Permutation> gens) {
  for (const auto& x : gens)
    if (!ambient.contains(x)) throw GroupError("subgroup: generator is not in the group");
  return PermGroup(ambient.degree(), std::vector<Permutation>(gens.begin(), gens.end()));
}

PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> s) {
  for (const auto& x : s)
    if (!g.contains(x)) throw GroupError("normal_closure: element is not in the group");
  PermGroup n(g.degree(), {});
  n.add_generators(s);
  for (std::size_t i = 0; i < n.generators().size(); ++i) {
    for (const auto& t : g.generators()) {
      Permutation c = conjugate(n.generators()[i], t);
      if (!n.contains(c)) n.add_generators(std::span<const Permutation>(&c, 1));
    }
  }
  return n;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, comms);
}

PermGroup commutator_subgroup(const PermGroup& ambient, const PermGroup& a,
                              const PermGroup& b) {
  std::vector<Permutation> joint = a.generators();
  joint.insert(joint.end(), b.generators().begin(), b.generators().end());
  PermGroup j = subgroup(ambient, joint);
  std::vector<Permutation> comms;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) {
      Permutation c = commutator(x, y);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(j, comms);
}

bool is_normal(const PermGroup& g, const PermGroup& n) {
  for (const auto& x : n.generators())
    for (const auto& t : g.generators())
      if (!n.contains(conjugate(x, t))) return false;
  return true;
}

std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m) {
  std::vector<long long> diag;
  if (m.empty()) return diag;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Bring a nonzero entry of minimal absolute value to (r, c) and clear its
    // row and column; repeat until everything else in them vanishes.
    while (true) {
      std::size_t br = rows, bc = cols;
      long long best = 0;
      for (std::size_t i = r; i < rows; ++i)
        for (std::size_t j = c; j < cols; ++j)
          if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
            best = std::llabs(m[i][j]);
            br = i;
            bc = j;
          }
      if (best == 0) return diag;
      std::swap(m[r], m[br]);
      for (auto& row : m) std::swap(row[c], row[bc]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        long long q = m[i][c] / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) clean = false;
      }
      for (std::size_t j = c + 1; j < cols; ++j) {
        long long q = m[r][j] / m[r][c];
        for (std::size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][c];
        if (m[r][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any entry not divisible by the pivot into row r.
      bool divisible = true;
      for (std::size_t i = r + 1; i < rows && divisible; ++i)
        for (std::size_t j = c + 1; j < cols; ++j)
          if (m[i][j] % m[r][c] != 0) {
            for (std::size_t k = c; k < cols; ++k) m[r][k] += m[i][k];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    diag.push_back(std::llabs(m[r][c]));
    ++r;
  }
  return diag;
}

std::vector<Order> abelian_invariants(const PermGroup& g) {
  const PermGroup d = derived_subgroup(g);
  const auto& gens = g.generators();
  const std::size_t k = gens.size();
  // Coset representatives of g' reached by exponent vectors; every collision
  // contributes a relation of the abelianization.
  std::vector<Permutation> reps{g.identity()};
  std::vector<std::vector<long long>> exps{std::vector<long long>(k, 0)};
  std::vector<std::vector<long long>> relations;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      Permutation c = reps[r] * gens[i];
      std::vector<long long> e = exps[r];
      e[i] += 1;
      std::size_t hit = reps.size();
      for (std::size_t j = 0; j < reps.size(); ++j)
        if (d.contains(c * reps[j].inverse())) {
          hit = j;
          break;
        }
      if (hit == reps.size()) {
        reps.push_back(std::move(c));
        exps.push_back(std::move(e));
      } else {
        for (std::size_t t = 0; t < k; ++t) e[t] -= exps[hit][t];
        if (std::any_of(e.begin(), e.end(), [](long long v) { return v != 0; }))
          relations.push_back(std::move(e));
      }
    }
  }
  std::vector<Order> out;
  for (long long v : smith_diagonal(std::move(relations)))
    if (v > 1) out.push_back(static_cast<Order>(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nuengine
