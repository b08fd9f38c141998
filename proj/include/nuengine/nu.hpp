#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nuengine/fp.hpp"
#include "nuengine/perm_group.hpp"

namespace nuengine::nu {

enum class NuMode { kGeneratorTriples, kElementTriples };

std::string to_string(NuMode mode);
NuMode nu_mode_from_string(const std::string& s);

struct Caps {
  std::size_t coset_cap = 50000;
  std::size_t order_cap = 32;   // largest |G| run through the nu pipeline
  std::size_t direct_cap = 12;  // largest |G| for the direct tensor-square presentation
};

/// A finite group realized by its regular representation. Elements are
/// indexed by the standardized coset numbering of the enumeration, so index
/// 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup(fp::Presentation pres, const fp::CosetTable& table);

  const fp::Presentation& presentation() const { return pres_; }
  const PermGroup& group() const { return group_; }
  const std::vector<Permutation>& generator_images() const { return gen_images_; }
  std::size_t order() const { return words_.size(); }
  const fp::Word& word(std::size_t i) const { return words_[i]; }

  std::size_t multiply(std::size_t a, std::size_t b) const { return mul_[b][a]; }
  std::size_t inverse(std::size_t a) const { return inv_[a]; }
  /// a^b = b^-1 a b
  std::size_t conjugate(std::size_t a, std::size_t b) const;
  /// [a,b] = a^-1 b^-1 a b
  std::size_t commutator(std::size_t a, std::size_t b) const;
  /// Index of the element represented by a permutation of the regular action.
  std::size_t index_of(const Permutation& p) const { return p[0]; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }

 private:
  fp::Presentation pres_;
  PermGroup group_;
  std::vector<Permutation> gen_images_;
  std::vector<fp::Word> words_;
  std::vector<Permutation> elements_;
  std::vector<std::vector<std::size_t>> mul_;  // mul_[b][a] = a*b
  std::vector<std::size_t> inv_;
};

FiniteGroup enumerate_group(const fp::Presentation& p, std::size_t coset_cap);

/// Presentation of nu(G) on G and a phi-marked copy of its generators. Each
/// instantiated triple (g1,g2,g3) contributes the relators
///   [g1,g2^phi]^g3 = [g1^g3,(g2^g3)^phi]   and   [g1,g2^phi]^g3 = [g1,g2^phi]^(g3^phi).
/// Generator-triples mode ranges over presentation generators; element-triples
/// mode over `elements` (words for every element of G).
fp::Presentation build_nu_presentation(const fp::Presentation& g, NuMode mode,
                                       const std::vector<fp::Word>* elements = nullptr);

class NuGroup {
 public:
  const FiniteGroup& base_group() const { return *g_; }
  std::size_t order_g() const { return g_->order(); }
  const fp::Presentation& presentation() const { return pres_; }
  NuMode mode() const { return mode_; }
  /// How the permutation realization was obtained.
  const std::string& action() const { return action_; }
  /// True when the generator-triples build failed the all-triples check.
  bool rebuilt() const { return rebuilt_; }

  const PermGroup& nu() const { return nu_; }
  const PermGroup& theta() const { return theta_; }
  const PermGroup& h() const { return h_; }
  const Homomorphism& rho() const { return *rho_; }

  const std::vector<Permutation>& emb_g() const { return emb_g_; }
  const std::vector<Permutation>& emb_phi() const { return emb_phi_; }
  /// Image of element i of G in the G and G^phi copies.
  const Permutation& elem_g(std::size_t i) const { return elem_g_[i]; }
  const Permutation& elem_phi(std::size_t i) const { return elem_phi_[i]; }
  /// [g_a, g_b^phi]
  const Permutation& tensor(std::size_t a, std::size_t b) const {
    return tensors_[a * g_->order() + b];
  }
  /// Element of G represented by rho(x) for x in nu(G).
  std::size_t rho_index(const Permutation& x) const;

 private:
  friend NuGroup realize_nu(const fp::Presentation&, const Caps&, NuMode);
  NuGroup() = default;

  std::shared_ptr<const FiniteGroup> g_;
  fp::Presentation pres_;
  NuMode mode_ = NuMode::kGeneratorTriples;
  std::string action_;
  bool rebuilt_ = false;
  PermGroup nu_;
  PermGroup theta_;
  PermGroup h_;
  std::optional<Homomorphism> rho_;
  std::vector<Permutation> emb_g_, emb_phi_;
  std::vector<Permutation> elem_g_, elem_phi_;
  std::vector<Permutation> tensors_;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Realizes nu(G). The defining relations are re-checked on every element
/// triple inside the realization; a generator-triples build that fails the
/// check is redone in element-triples mode.
/// Throws fp::EnumerationOverflow, CapExceeded or ConstructionError.
NuGroup realize_nu(const fp::Presentation& p, const Caps& caps = {},
                   NuMode mode = NuMode::kGeneratorTriples);

/// True iff [g_a,g_b^phi]^(g_c) = [g_a^g_c,(g_b^g_c)^phi] = [g_a,g_b^phi]^(g_c^phi)
/// holds for every triple; the witness of the first failure goes to `bad`.
bool all_triples_hold(const NuGroup& n, std::array<std::size_t, 3>* bad = nullptr);

struct TensorSet {
  std::vector<Permutation> tensors;                       // distinct, by witness
  std::vector<std::pair<std::size_t, std::size_t>> witness;
  std::vector<std::size_t> tensor_of_pair;                // a*|G|+b -> tensor index
  std::unordered_map<ElementKey, std::size_t, ElementKeyHash> by_key;  // nu keys
  std::unordered_map<ElementKey, unsigned, ElementKeyHash> lengths;    // over H
  std::vector<ElementKey> h_elements;  // breadth-first, so lengths ascend
  unsigned diameter = 0;

  std::optional<std::size_t> find(const PermGroup& nu, const Permutation& x) const;
};

TensorSet tensor_set(const NuGroup& n);

/// Least number of tensors multiplying to x; throws if x is not in H.
unsigned tensor_length(const NuGroup& n, const TensorSet& t, const Permutation& x);

/// Brown-Loday presentation of G (x) G: one generator per pair and, for all
/// g, g1, h, h1, the relators of
///   g g1 (x) h = (g^g1 (x) h^g1)(g1 (x) h),   g (x) h h1 = (g (x) h1)(g^h1 (x) h^h1).
fp::Presentation build_direct_tensor_square(const FiniteGroup& g, const Caps& caps = {});

struct PhiIsoResult {
  bool homomorphism = false;  // g(x)h -> [g,h^phi] respects every relator
  Order direct_order = 0;
  Order h_order = 0;
  bool isomorphism() const { return homomorphism && direct_order == h_order; }
};

PhiIsoResult phi_iso_check(const NuGroup& n, const fp::Presentation& direct,
                           const Caps& caps = {});

}  // namespace nuengine::nu
