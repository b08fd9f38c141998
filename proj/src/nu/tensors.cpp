#include <deque>

#include "nuengine/nu.hpp"

namespace nuengine::nu {

std::optional<std::size_t> TensorSet::find(const PermGroup& nu, const Permutation& x) const {
  auto it = by_key.find(nu.key_of(x));
  if (it == by_key.end()) return std::nullopt;
  return it->second;
}

TensorSet tensor_set(const NuGroup& n) {
  TensorSet out;
  const std::size_t m = n.order_g();
  const PermGroup& nu = n.nu();
  out.tensor_of_pair.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Permutation& t = n.tensor(a, b);
      auto [it, fresh] = out.by_key.emplace(nu.key_of(t), out.tensors.size());
      if (fresh) {
        out.tensors.push_back(t);
        out.witness.emplace_back(a, b);
      }
      out.tensor_of_pair[a * m + b] = it->second;
    }

  std::vector<const Permutation*> gens;
  for (const auto& t : out.tensors)
    if (!t.is_identity()) gens.push_back(&t);
  ElementKey start = nu.key_of(nu.identity());
  out.lengths.emplace(start, 0);
  out.h_elements.push_back(start);
  std::deque<ElementKey> queue{start};
  while (!queue.empty()) {
    ElementKey cur = std::move(queue.front());
    queue.pop_front();
    const unsigned d = out.lengths.at(cur);
    for (const auto* t : gens) {
      ElementKey next = nu.key_times(cur, *t);
      if (out.lengths.emplace(next, d + 1).second) {
        out.diameter = std::max(out.diameter, d + 1);
        out.h_elements.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  if (out.lengths.size() != n.h().order())
    throw ConstructionError("tensor words do not cover H");
  return out;
}

unsigned tensor_length(const NuGroup& n, const TensorSet& t, const Permutation& x) {
  auto it = t.lengths.find(n.nu().key_of(x));
  if (it == t.lengths.end()) throw GroupError("element is not in H");
  return it->second;
}

}  // namespace nuengine::nu
