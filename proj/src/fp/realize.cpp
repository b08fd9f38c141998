#include "nuengine/fp.hpp"

namespace nuengine::fp {

const Permutation& Realization::image(std::string_view name,
                                      const std::vector<GeneratorSymbol>& gens) const {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return images.at(i);
  throw GroupError("no generator named '" + std::string(name) + "'");
}

Permutation evaluate(const Word& w, std::span<const Permutation> images, std::size_t degree) {
  Permutation out(degree);
  for (const auto& l : w.letters()) out *= images[l.gen].pow(l.exp);
  return out;
}

Realization table_to_permgroup(const CosetTable& table, std::optional<Order> order_bound) {
  if (!table.complete()) throw GroupError("coset table is incomplete");
  const std::size_t n = table.num_cosets();
  std::vector<Permutation> images;
  for (std::size_t g = 0; g < table.generators().size(); ++g) {
    std::vector<Point> img(n);
    for (std::size_t c = 0; c < n; ++c) img[c] = static_cast<Point>(table.at(c, 2 * g));
    images.emplace_back(std::move(img));
  }
  for (const auto& r : table.relators())
    if (!evaluate(r, images, n).is_identity())
      throw GroupError("coset table does not satisfy a relator");
  BuildOptions opts;
  opts.order_bound = order_bound;
  PermGroup group(n, images, opts);
  return {std::move(group), std::move(images)};
}

bool von_dyck_check(const Presentation& p, std::span<const Permutation> images,
                    const PermGroup& target) {
  if (images.size() != p.generators.size()) return false;
  for (const auto& img : images)
    if (!target.contains(img)) return false;
  for (const auto& r : p.relators)
    if (!evaluate(r, images, target.degree()).is_identity()) return false;
  return true;
}

Order presented_order(const Presentation& p, const EnumerationOptions& options) {
  CosetTable t = todd_coxeter(p, {}, options);
  if (!t.complete()) throw EnumerationOverflow("enumeration of " + p.name + " exceeded the coset cap");
  return t.num_cosets();
}

bool check_quotient_isomorphic(const PermGroup& g, const PermGroup& n,
                               const Presentation& h_pres,
                               std::span<const Permutation> candidates,
                               const EnumerationOptions& options) {
  if (!n.is_subgroup_of(g) || !is_normal(g, n))
    throw GroupError("quotient check: subgroup is not normal");
  if (candidates.size() != h_pres.generators.size()) return false;
  for (const auto& c : candidates)
    if (!g.contains(c)) return false;
  if (g.order() / n.order() != presented_order(h_pres, options)) return false;
  for (const auto& r : h_pres.relators)
    if (!n.contains(evaluate(r, candidates, g.degree()))) return false;
  PermGroup joint = n;
  joint.add_generators(candidates);
  return joint.order() == g.order();
}

bool check_quotient_isomorphic(const PermGroup& g, const PermGroup& n,
                               const Presentation& h_pres,
                               const EnumerationOptions& options) {
  const std::size_t k = h_pres.generators.size();
  if (g.generators().size() < k) return false;
  std::span<const Permutation> cands(g.generators().data(), k);
  return check_quotient_isomorphic(g, n, h_pres, cands, options);
}

}  // namespace nuengine::fp
