#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "nuengine/permutation.hpp"

namespace nuengine {

using Order = std::uint64_t;

/// Largest degree accepted by the permutation engine.
inline constexpr std::size_t kMaxDegree = 50000;

/// Base images of an element relative to a group's base. Two elements of the
/// same group are equal iff their keys are equal.
using ElementKey = std::vector<Point>;

struct ElementKeyHash {
  std::size_t operator()(const ElementKey& k) const noexcept;
};

struct BuildOptions {
  std::optional<Order> order_bound;
  /// Points forced to the front of the base, in order.
  std::vector<Point> base_prefix;
};

/// Permutation group stored with a base and strong generating set.
///
/// Construction runs a deterministic Schreier-Sims. When an upper bound on the
/// order is known (for instance from coset enumeration), pass it as
/// `order_bound`: sifting a fixed-seed sequence of product-replacement
/// elements is tried first, and the chain is accepted as soon as the product
/// of basic orbit lengths reaches the bound. Reaching the bound certifies
/// completeness because that product never exceeds the true order. Otherwise
/// the deterministic pass finishes the job, so the result is always exact.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            BuildOptions options = {});

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Point>& base() const { return base_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  std::vector<std::size_t> basic_orbit_sizes() const;
  /// Strong generators fixing the first `level` base points.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;

  Order order() const;
  bool contains(const Permutation& g) const;
  bool is_trivial() const { return base_.empty(); }
  Permutation identity() const { return Permutation(degree_); }

  /// Adds generators, extending the chain incrementally. Non-members only.
  void add_generators(std::span<const Permutation> gens);

  ElementKey key_of(const Permutation& g) const;
  /// Key of g * h given the key of g and the full permutation h.
  ElementKey key_times(const ElementKey& g, const Permutation& h) const;
  Permutation element_from_key(const ElementKey& key) const;

  /// Uniformly distributed element drawn from the stabilizer chain.
  Permutation random_element(std::mt19937_64& rng) const;

  /// Keys of every element in breadth-first order over the generators.
  std::vector<ElementKey> element_keys() const;
  /// Every element as a permutation; meant for small groups.
  std::vector<Permutation> elements() const;

  bool is_subgroup_of(const PermGroup& other) const;
  bool same_group(const PermGroup& other) const;

  /// Residue of g after sifting through levels [from, levels); second is the
  /// level at which sifting stopped (number of levels when it got through).
  std::pair<Permutation, std::size_t> sift(Permutation g,
                                           std::size_t from = 0) const;

 private:
  struct Level {
    std::vector<std::size_t> gens;   // indices into strong_
    std::vector<std::size_t> done;   // Schreier generators checked per gen
    std::vector<Point> orbit;
    std::vector<std::int32_t> pos;   // orbit index of a point, -1 if absent
    std::vector<Point> parent;       // Schreier tree
    std::vector<std::size_t> edge;   // strong generator labelling the edge
    std::vector<Permutation> u_inv;  // explicit inverse transversal (optional)
    bool explicit_transversal = true;
  };

  void build(const BuildOptions& options);
  void random_phase(Order bound);
  void schreier_sims(std::optional<Order> order_bound);
  void add_strong(Permutation h, std::size_t level);
  void extend_orbit(std::size_t level, std::size_t new_gen);
  void push_orbit_point(Level& lv, Point y, Point parent, std::size_t edge);
  Permutation transversal_inverse(std::size_t level, std::size_t idx) const;
  Order chain_order() const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Point> base_;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inv_;
  std::vector<Level> levels_;
};

/// Group homomorphism given by images of the source generators.
///
/// The map is realized through its graph: the subgroup of Sym(source points
/// + target points) generated by the pairs (s, image(s)). Nothing is checked
/// at construction; callers certify the map (see `von_dyck_check`) and then
/// call `mark_verified`. `kernel` rejects unverified maps.
class Homomorphism {
 public:
  Homomorphism(PermGroup source, PermGroup target, std::vector<Permutation> images);

  const PermGroup& source() const { return source_; }
  const PermGroup& target() const { return target_; }
  const std::vector<Permutation>& images() const { return images_; }
  bool verified() const { return verified_; }
  void mark_verified() { verified_ = true; }

  /// Image of an arbitrary source element.
  Permutation map(const Permutation& x) const;

 private:
  friend PermGroup kernel(const Homomorphism& h);
  Permutation graph_pair(const Permutation& s, const Permutation& t) const;
  const PermGroup& graph_by_source() const;

  PermGroup source_;
  PermGroup target_;
  std::vector<Permutation> images_;
  bool verified_ = false;
  mutable std::optional<PermGroup> graph_by_source_;
};

// ---- group operations -----------------------------------------------------

Order order(const PermGroup& g);

/// Full conjugacy class of x in g; throws if x is not a member.
std::vector<Permutation> conjugacy_class(const PermGroup& g, const Permutation& x);
std::size_t conjugacy_class_size(const PermGroup& g, const Permutation& x);

/// Elements of g commuting with every element of s.
PermGroup centralizer(const PermGroup& g, std::span<const Permutation> s);

PermGroup subgroup(const PermGroup& ambient, std::span<const Permutation> gens);
PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> s);
PermGroup derived_subgroup(const PermGroup& g);
/// [A,B] for subgroups A, B of g (normal closure in <A,B> of generator commutators).
PermGroup commutator_subgroup(const PermGroup& ambient, const PermGroup& a,
                              const PermGroup& b);
bool is_normal(const PermGroup& g, const PermGroup& n);

/// Kernel of a verified homomorphism, via the stabilizer chain of its graph.
PermGroup kernel(const Homomorphism& h);
PermGroup image(const Homomorphism& h);

/// Elementary divisors of g/g' (ones dropped, ascending).
std::vector<Order> abelian_invariants(const PermGroup& g);

/// Smith normal form diagonal of an integer matrix (nonzero entries only).
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m);

/// Deterministic bounded draw; independent of the standard distributions so
/// sequences are identical across standard libraries.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n);

}  // namespace nuengine
