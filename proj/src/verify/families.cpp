#include <algorithm>
#include <set>

#include "nuengine/verify.hpp"

namespace nuengine::verify {

fp::Presentation dihedral_presentation(std::uint64_t m) {
  const std::string n = std::to_string(m);
  return fp::parse_presentation("group D" + n + " { gens: a, b; rels: a^" + n +
                                ", b^2, (a*b)^2; }");
}

fp::Presentation prufer_truncation_presentation(std::uint64_t p, std::uint64_t k) {
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < k; ++i) q *= p;
  return fp::parse_presentation("group prufer-trunc-" + std::to_string(p) + "-" +
                                std::to_string(k) + " { gens: a, b; rels: a^" +
                                std::to_string(q) + ", b^2, a^b = a^-1; }");
}

std::uint64_t max_commutator_class(const nu::FiniteGroup& g) {
  const std::size_t m = g.order();
  std::set<std::size_t> comms;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) comms.insert(g.commutator(a, b));
  std::uint64_t best = 1;
  for (std::size_t c : comms) {
    std::set<std::size_t> cls;
    for (std::size_t z = 0; z < m; ++z) cls.insert(g.conjugate(c, z));
    best = std::max<std::uint64_t>(best, cls.size());
  }
  return best;
}

std::vector<FamilyRow> family_dihedral(std::uint64_t m_lo, std::uint64_t m_hi,
                                       const nu::Caps& caps) {
  std::vector<FamilyRow> rows;
  for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
    FamilyRow row;
    row.family = "dihedral";
    row.parameter = m;
    row.name = "D" + std::to_string(m);
    try {
      const nu::FiniteGroup g = nu::enumerate_group(dihedral_presentation(m), caps.coset_cap);
      row.order_g = g.order();
      row.order_g_derived = derived_subgroup(g.group()).order();
      row.max_commutator_class = max_commutator_class(g);
      row.complete = true;
    } catch (const fp::EnumerationOverflow& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<FamilyRow> family_prufer_truncation(std::uint64_t p, std::uint64_t k_lo,
                                                std::uint64_t k_hi, const nu::Caps& caps) {
  std::vector<FamilyRow> rows;
  for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
    FamilyRow row;
    row.family = "prufer";
    row.parameter = k;
    const fp::Presentation pres = prufer_truncation_presentation(p, k);
    row.name = pres.name;
    try {
      const nu::NuGroup n = nu::realize_nu(pres, caps);
      const nu::FiniteGroup& g = n.base_group();
      row.order_g = g.order();
      row.order_g_derived = derived_subgroup(g.group()).order();
      row.max_commutator_class = max_commutator_class(g);
      row.max_tensor_class = max_tensor_class(n, nu::tensor_set(n));
      row.complete = true;
    } catch (const fp::EnumerationOverflow& e) {
      row.error = e.what();
    } catch (const nu::CapExceeded& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace nuengine::verify
