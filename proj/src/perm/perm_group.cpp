#include "nuengine/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace nuengine {

namespace {

// Explicit inverse transversals are kept while orbit length * degree stays
// under this many points; beyond it the Schreier tree is walked instead.
constexpr std::size_t kExplicitBudget = std::size_t{1} << 23;

constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

constexpr std::uint64_t kProductReplacementSeed = 0x5eed0f5c4e1e5ull;

}  // namespace

std::size_t ElementKeyHash::operator()(const ElementKey& k) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : k) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw GroupError("bounded_draw: empty range");
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     BuildOptions options)
    : degree_(degree) {
  if (degree > kMaxDegree) throw GroupError("degree exceeds engine cap");
  for (const auto& g : generators)
    if (g.degree() != degree) throw GroupError("generator degree mismatch");
  generators_ = std::move(generators);
  build(options);
}

void PermGroup::build(const BuildOptions& options) {
  for (Point b : options.base_prefix) {
    if (b >= degree_) throw GroupError("base point exceeds degree");
    Level lv;
    lv.pos.assign(degree_, -1);
    base_.push_back(b);
    levels_.push_back(std::move(lv));
    push_orbit_point(levels_.back(), b, b, kNoEdge);
  }
  if (!options.order_bound) {
    // Sifting against the completed chain skips redundant generators.
    for (const auto& g : generators_) {
      if (g.is_identity()) continue;
      auto [res, j] = sift(g);
      if (res.is_identity()) continue;
      add_strong(std::move(res), j);
      schreier_sims(std::nullopt);
    }
    return;
  }
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    std::size_t j = 0;
    while (j < base_.size() && g[base_[j]] == base_[j]) ++j;
    add_strong(g, j);
  }
  random_phase(*options.order_bound);
  schreier_sims(options.order_bound);
}

void PermGroup::push_orbit_point(Level& lv, Point y, Point parent, std::size_t edge) {
  lv.pos[y] = static_cast<std::int32_t>(lv.orbit.size());
  lv.orbit.push_back(y);
  lv.parent.push_back(parent);
  lv.edge.push_back(edge);
  if (!lv.explicit_transversal) return;
  if (lv.orbit.size() * degree_ > kExplicitBudget) {
    lv.explicit_transversal = false;
    lv.u_inv.clear();
    lv.u_inv.shrink_to_fit();
    return;
  }
  if (edge == kNoEdge) {
    lv.u_inv.emplace_back(degree_);
  } else {
    // u_y = u_parent * s, so u_y^-1 = s^-1 * u_parent^-1
    lv.u_inv.push_back(strong_inv_[edge] * lv.u_inv[static_cast<std::size_t>(lv.pos[parent])]);
  }
}

void PermGroup::add_strong(Permutation h, std::size_t level) {
  if (level == levels_.size()) {
    Point b = h.first_moved();
    Level lv;
    lv.pos.assign(degree_, -1);
    base_.push_back(b);
    levels_.push_back(std::move(lv));
    push_orbit_point(levels_.back(), b, b, kNoEdge);
  }
  const std::size_t idx = strong_.size();
  strong_inv_.push_back(h.inverse());
  strong_.push_back(std::move(h));
  for (std::size_t l = 0; l <= level; ++l) {
    levels_[l].gens.push_back(idx);
    levels_[l].done.push_back(0);
    extend_orbit(l, idx);
  }
}

void PermGroup::extend_orbit(std::size_t level, std::size_t new_gen) {
  Level& lv = levels_[level];
  const std::size_t old = lv.orbit.size();
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    const Point x = lv.orbit[k];
    if (k < old) {
      Point y = strong_[new_gen][x];
      if (lv.pos[y] < 0) push_orbit_point(lv, y, x, new_gen);
    } else {
      for (std::size_t gi : lv.gens) {
        Point y = strong_[gi][x];
        if (lv.pos[y] < 0) push_orbit_point(lv, y, x, gi);
      }
    }
  }
}

Permutation PermGroup::transversal_inverse(std::size_t level, std::size_t idx) const {
  const Level& lv = levels_[level];
  if (lv.explicit_transversal) return lv.u_inv[idx];
  Permutation result(degree_);
  std::size_t k = idx;
  while (lv.edge[k] != kNoEdge) {
    result *= strong_inv_[lv.edge[k]];
    k = static_cast<std::size_t>(lv.pos[lv.parent[k]]);
  }
  return result;
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t from) const {
  if (g.degree() != degree_) throw GroupError("sift: degree mismatch");
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const Point b = base_[l];
    Point x = g[b];
    std::int32_t k = lv.pos[x];
    if (k < 0) return {std::move(g), l};
    if (lv.explicit_transversal) {
      g *= lv.u_inv[static_cast<std::size_t>(k)];
    } else {
      while (x != b) {
        const std::size_t e = lv.edge[static_cast<std::size_t>(lv.pos[x])];
        g *= strong_inv_[e];
        x = g[b];
      }
    }
  }
  return {std::move(g), levels_.size()};
}

Order PermGroup::chain_order() const {
  Order total = 1;
  for (const auto& lv : levels_) {
    Order next;
    if (__builtin_mul_overflow(total, static_cast<Order>(lv.orbit.size()), &next))
      throw GroupError("group order overflows 64 bits");
    total = next;
  }
  return total;
}

void PermGroup::random_phase(Order bound) {
  if (strong_.empty() || chain_order() >= bound) return;
  std::mt19937_64 rng(kProductReplacementSeed);
  std::vector<Permutation> state;
  const std::size_t slots = std::max<std::size_t>(10, strong_.size());
  for (std::size_t i = 0; i < slots; ++i) state.push_back(strong_[i % strong_.size()]);
  Permutation acc(degree_);
  auto step = [&]() {
    std::size_t i = bounded_draw(rng, slots);
    std::size_t j = bounded_draw(rng, slots - 1);
    if (j >= i) ++j;
    if (rng() & 1)
      state[i] *= state[j];
    else
      state[i] = state[j] * state[i];
    acc *= state[i];
  };
  for (int w = 0; w < 50; ++w) step();

  int misses = 0;
  while (misses < 48 && chain_order() < bound) {
    step();
    auto [res, j] = sift(acc);
    if (res.is_identity()) {
      ++misses;
      continue;
    }
    misses = 0;
    add_strong(std::move(res), j);
  }
}

void PermGroup::schreier_sims(std::optional<Order> order_bound) {
  auto certified = [&]() { return order_bound && chain_order() == *order_bound; };
  if (levels_.empty()) return;
  if (certified()) {
    for (auto& lv : levels_)
      for (auto& d : lv.done) d = lv.orbit.size();
    return;
  }
  std::size_t i = levels_.size() - 1;
  while (true) {
    bool added = false;
    for (std::size_t gi = 0; gi < levels_[i].gens.size() && !added; ++gi) {
      while (levels_[i].done[gi] < levels_[i].orbit.size()) {
        const Level& lv = levels_[i];
        const std::size_t k = lv.done[gi];
        const std::size_t s = lv.gens[gi];
        const Point x = lv.orbit[k];
        const Point y = strong_[s][x];
        const auto ky = static_cast<std::size_t>(lv.pos[y]);
        if (lv.edge[ky] == s && lv.parent[ky] == x) {
          ++levels_[i].done[gi];
          continue;
        }
        Permutation g = transversal_inverse(i, k).inverse();
        g *= strong_[s];
        g *= transversal_inverse(i, ky);
        auto [res, j] = sift(std::move(g), i + 1);
        ++levels_[i].done[gi];
        if (!res.is_identity()) {
          add_strong(std::move(res), j);
          if (certified()) {
            for (auto& l : levels_)
              for (auto& d : l.done) d = l.orbit.size();
            return;
          }
          i = j;
          added = true;
          break;
        }
      }
    }
    if (added) continue;
    if (i == 0) break;
    --i;
  }
}

void PermGroup::add_generators(std::span<const Permutation> gens) {
  bool any = false;
  for (const auto& g : gens) {
    if (g.degree() != degree_) throw GroupError("generator degree mismatch");
    auto [res, j] = sift(g);
    if (res.is_identity()) continue;
    generators_.push_back(g);
    add_strong(std::move(res), j);
    any = true;
  }
  if (any) schreier_sims(std::nullopt);
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& lv : levels_) sizes.push_back(lv.orbit.size());
  return sizes;
}

std::vector<Permutation> PermGroup::stabilizer_generators(std::size_t level) const {
  std::vector<Permutation> out;
  if (level >= levels_.size()) return out;
  for (std::size_t gi : levels_[level].gens) out.push_back(strong_[gi]);
  return out;
}

Order PermGroup::order() const { return chain_order(); }

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).first.is_identity();
}

ElementKey PermGroup::key_of(const Permutation& g) const {
  ElementKey k(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) k[i] = g[base_[i]];
  return k;
}

ElementKey PermGroup::key_times(const ElementKey& g, const Permutation& h) const {
  ElementKey k(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) k[i] = h[g[i]];
  return k;
}

Permutation PermGroup::element_from_key(const ElementKey& key) const {
  if (key.size() != base_.size()) throw GroupError("key length does not match base");
  ElementKey rest = key;
  std::vector<Permutation> factors;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    std::int32_t k = levels_[l].pos[rest[l]];
    if (k < 0) throw GroupError("key is not an element of the group");
    Permutation u_inv = transversal_inverse(l, static_cast<std::size_t>(k));
    for (std::size_t m = l + 1; m < rest.size(); ++m) rest[m] = u_inv[rest[m]];
    factors.push_back(u_inv.inverse());
  }
  Permutation g(degree_);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) g *= *it;
  if (key_of(g) != key) throw GroupError("key is not an element of the group");
  return g;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::size_t idx = bounded_draw(rng, levels_[l].orbit.size());
    g *= transversal_inverse(l, idx).inverse();
  }
  return g;
}

std::vector<ElementKey> PermGroup::element_keys() const {
  std::vector<ElementKey> keys;
  std::unordered_set<ElementKey, ElementKeyHash> seen;
  ElementKey id(base_.begin(), base_.end());
  keys.push_back(id);
  seen.insert(std::move(id));
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (const auto& g : generators_) {
      ElementKey k = key_times(keys[i], g);
      if (seen.insert(k).second) keys.push_back(std::move(k));
    }
  }
  return keys;
}

std::vector<Permutation> PermGroup::elements() const {
  std::vector<Permutation> out;
  std::unordered_set<Permutation, PermutationHash> seen;
  out.emplace_back(degree_);
  seen.insert(out.back());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators_) {
      Permutation h = out[i] * g;
      if (seen.insert(h).second) out.push_back(std::move(h));
    }
  }
  return out;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (other.degree() != degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool PermGroup::same_group(const PermGroup& other) const {
  return order() == other.order() && is_subgroup_of(other);
}

// ---- homomorphisms --------------------------------------------------------

Homomorphism::Homomorphism(PermGroup source, PermGroup target,
                           std::vector<Permutation> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.generators().size())
    throw GroupError("homomorphism needs one image per source generator");
  for (const auto& img : images_)
    if (img.degree() != target_.degree()) throw GroupError("image degree mismatch");
}

Permutation Homomorphism::graph_pair(const Permutation& s, const Permutation& t) const {
  const std::size_t ns = source_.degree();
  std::vector<Point> img(ns + target_.degree());
  for (std::size_t p = 0; p < ns; ++p) img[p] = s[static_cast<Point>(p)];
  for (std::size_t p = 0; p < target_.degree(); ++p)
    img[ns + p] = static_cast<Point>(ns + t[static_cast<Point>(p)]);
  return Permutation(std::move(img));
}

const PermGroup& Homomorphism::graph_by_source() const {
  if (!verified_) throw GroupError("homomorphism has not been verified");
  if (!graph_by_source_) {
    std::vector<Permutation> pairs;
    for (std::size_t i = 0; i < images_.size(); ++i)
      pairs.push_back(graph_pair(source_.generators()[i], images_[i]));
    BuildOptions opts;
    opts.order_bound = source_.order();
    opts.base_prefix = source_.base();
    graph_by_source_.emplace(source_.degree() + target_.degree(), std::move(pairs), opts);
  }
  return *graph_by_source_;
}

Permutation Homomorphism::map(const Permutation& x) const {
  const PermGroup& graph = graph_by_source();
  if (!source_.contains(x)) throw GroupError("element is not in the source group");
  ElementKey key(graph.base().size());
  for (std::size_t i = 0; i < key.size(); ++i) key[i] = x[graph.base()[i]];
  Permutation pair = graph.element_from_key(key);
  const std::size_t ns = source_.degree();
  std::vector<Point> img(target_.degree());
  for (std::size_t p = 0; p < img.size(); ++p)
    img[p] = static_cast<Point>(pair[static_cast<Point>(ns + p)] - ns);
  return Permutation(std::move(img));
}

PermGroup image(const Homomorphism& h) {
  return PermGroup(h.target().degree(), h.images());
}

PermGroup kernel(const Homomorphism& h) {
  if (!h.verified()) throw GroupError("kernel of an unverified homomorphism");
  const std::size_t ns = h.source().degree();
  const PermGroup img = image(h);
  std::vector<Permutation> pairs;
  for (std::size_t i = 0; i < h.images().size(); ++i)
    pairs.push_back(h.graph_pair(h.source().generators()[i], h.images()[i]));
  BuildOptions opts;
  opts.order_bound = h.source().order();
  for (Point b : img.base()) opts.base_prefix.push_back(static_cast<Point>(ns + b));
  PermGroup graph(ns + h.target().degree(), std::move(pairs), opts);
  // Elements fixing the target base points have trivial image.
  std::vector<Permutation> gens;
  for (const auto& g : graph.stabilizer_generators(img.base().size())) {
    std::vector<Point> restricted(g.images().begin(), g.images().begin() + static_cast<std::ptrdiff_t>(ns));
    gens.emplace_back(std::move(restricted));
  }
  BuildOptions kopts;
  kopts.order_bound = h.source().order() / img.order();
  return PermGroup(ns, std::move(gens), kopts);
}

}  // namespace nuengine
