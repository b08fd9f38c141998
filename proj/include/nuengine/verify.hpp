#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nuengine/nu.hpp"

namespace nuengine::verify {

inline constexpr std::uint64_t kExhaustiveLimit = 1000000;
inline constexpr std::uint64_t kSampleCount = 10000;

struct Scope {
  enum class Kind { kExhaustive, kSampled };
  Kind kind = Kind::kExhaustive;
  std::uint64_t count = 0;  // samples drawn (sampled scope only)
  std::uint64_t seed = 0;

  static Scope exhaustive() { return {}; }
  static Scope sampled(std::uint64_t count, std::uint64_t seed) {
    return {Kind::kSampled, count, seed};
  }
  /// Exhaustive when the tuple space is at most kExhaustiveLimit.
  static Scope for_space(std::uint64_t tuples, std::uint64_t seed);

  friend bool operator==(const Scope&, const Scope&) = default;
};

std::string to_string(const Scope& s);

struct CheckReport {
  std::string check;
  std::string group;
  Scope scope;
  bool passed = true;
  std::uint64_t tested = 0;                             // tuples evaluated
  std::optional<std::vector<std::string>> counterexample;
  std::optional<std::uint64_t> value;                   // recorded quantity, if any
  std::string note;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct TheoremARow {
  std::string name;
  std::uint64_t order_g = 0;
  std::uint64_t order_nu = 0;
  std::uint64_t order_h = 0;
  std::uint64_t n = 0;  // largest conjugacy class of a tensor in nu(G)
  std::uint64_t order_nu2 = 0;
  std::uint64_t order_g2 = 0;
  bool formula_ok = false;
  bool complete = false;
  std::string error;

  friend bool operator==(const TheoremARow&, const TheoremARow&) = default;
};

struct HypothesisWitness {
  std::size_t a = 0;  // index into TensorSet::tensors
  std::size_t d = 0, e = 0;
  std::size_t m = 0;
  std::vector<Permutation> b;
  std::vector<unsigned> b_lengths;
  PermGroup u;
  PermGroup u1;
  bool theta_in_u = false;
};

/// Printable word for element i of G.
std::string element_name(const nu::FiniteGroup& g, std::size_t i);

// [g,h^phi]^[x,y^phi] = [g,h^phi]^[x,y]; the six-fold equality
// [g,h^phi,x^phi] = [g,h,x^phi] = [g,h^phi,x] = [g^phi,h,x^phi] = [g^phi,h^phi,x] = [g^phi,h,x];
// [[g,h^phi],[x,y^phi]] = [[g,h],[x,y]^phi]. Tuples are (g,h,x,y).
CheckReport check_basic_identities(const nu::NuGroup& n, const Scope& scope);

// [alpha,beta] [u,v^phi]^-1 in Theta for u = rho(alpha), v = rho(beta), and
// [x,y^phi]^alpha = [x,y^phi]^rho(alpha) with rho(alpha) read in im G and in im G^phi.
CheckReport check_rho_decomposition(const nu::NuGroup& n, const Scope& scope);

/// [Theta, H] = 1, decided on generating sets.
CheckReport check_theta_centralizes(const nu::NuGroup& n);
/// nu(G)/Theta = G with the G copy mapping onto the quotient.
CheckReport check_theta_quotient(const nu::NuGroup& n);

/// Every coset of c in H has an element of tensor length at most [H:c]-1.
CheckReport check_coset_length(const nu::NuGroup& n, const nu::TensorSet& t, const PermGroup& c);

std::uint64_t max_tensor_class(const nu::NuGroup& n, const nu::TensorSet& t);

TheoremARow theorem_a_row(const std::string& name, const fp::Presentation& p,
                          const nu::Caps& caps = {});
TheoremARow theorem_a_row(const std::string& name, const nu::NuGroup& n, const nu::TensorSet& t);

/// |[a,b]^G| <= |[a,b^phi]^nu(G)| for every pair in scope.
CheckReport check_commutator_vs_tensor_class(const nu::NuGroup& n, const nu::TensorSet& t,
                                             const Scope& scope);

HypothesisWitness build_hypothesis_witness(const nu::NuGroup& n, const nu::TensorSet& t);
CheckReport check_hypothesis(const nu::NuGroup& n, const nu::TensorSet& t,
                             const HypothesisWitness& w);

/// For u in U with ua a tensor: <[h,u] : h in H> <= <[h,a] : h in H>.
CheckReport check_utheta_lemma(const HypothesisWitness& w, const nu::NuGroup& n,
                               const nu::TensorSet& t, std::uint64_t seed);

/// U1 = U cap U^(d^-1) cap U^(d^-1 e^-1), then
/// [H,U1'] <= [H,a]^(d^-1) and [H,[U1,d]] <= [H,a].
CheckReport check_proposition_u1(const HypothesisWitness& w, const nu::NuGroup& n,
                                 const nu::TensorSet& t);

/// Largest |<[h,x] : h in H>| over tensors x, stored in `value`.
CheckReport check_comm_finiteness(const nu::NuGroup& n, const nu::TensorSet& t);

struct FamilyRow {
  std::string family;
  std::string name;
  std::uint64_t parameter = 0;
  std::uint64_t order_g = 0;
  std::uint64_t order_g_derived = 0;
  std::uint64_t max_commutator_class = 0;
  std::optional<std::uint64_t> max_tensor_class;
  bool complete = false;
  std::string error;

  friend bool operator==(const FamilyRow&, const FamilyRow&) = default;
};

fp::Presentation dihedral_presentation(std::uint64_t m);
fp::Presentation prufer_truncation_presentation(std::uint64_t p, std::uint64_t k);

/// Largest conjugacy class of a commutator of G.
std::uint64_t max_commutator_class(const nu::FiniteGroup& g);

std::vector<FamilyRow> family_dihedral(std::uint64_t m_lo, std::uint64_t m_hi,
                                       const nu::Caps& caps = {});
std::vector<FamilyRow> family_prufer_truncation(std::uint64_t p, std::uint64_t k_lo,
                                                std::uint64_t k_hi, const nu::Caps& caps = {});

}  // namespace nuengine::verify
