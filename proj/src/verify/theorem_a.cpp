#include "nuengine/verify.hpp"

namespace nuengine::verify {

namespace {

std::vector<Permutation> joined(std::initializer_list<const PermGroup*> groups) {
  std::vector<Permutation> out;
  for (const auto* g : groups) out.insert(out.end(), g->generators().begin(), g->generators().end());
  return out;
}

}  // namespace

TheoremARow theorem_a_row(const std::string& name, const nu::NuGroup& n, const nu::TensorSet& t) {
  TheoremARow row;
  row.name = name;
  const PermGroup& nu = n.nu();
  row.order_g = n.order_g();
  row.order_nu = nu.order();
  row.order_h = n.h().order();
  row.n = max_tensor_class(n, t);
  const PermGroup nu2 = derived_subgroup(derived_subgroup(nu));
  row.order_nu2 = nu2.order();
  row.order_g2 = derived_subgroup(derived_subgroup(n.base_group().group())).order();

  const PermGroup gd = derived_subgroup(subgroup(nu, n.emb_g()));
  const PermGroup gd_phi = derived_subgroup(subgroup(nu, n.emb_phi()));
  const PermGroup mixed = commutator_subgroup(nu, gd, gd_phi);
  const PermGroup gdd = derived_subgroup(gd);
  const PermGroup gdd_phi = derived_subgroup(gd_phi);
  const PermGroup f1 = normal_closure(nu, mixed.generators());
  const PermGroup f2 = normal_closure(nu, gdd.generators());
  const PermGroup f3 = normal_closure(nu, gdd_phi.generators());
  const PermGroup product = subgroup(nu, joined({&f1, &f2, &f3}));
  row.formula_ok = product.same_group(nu2);
  row.complete = true;
  return row;
}

TheoremARow theorem_a_row(const std::string& name, const fp::Presentation& p,
                          const nu::Caps& caps) {
  try {
    const nu::NuGroup n = nu::realize_nu(p, caps);
    return theorem_a_row(name, n, nu::tensor_set(n));
  } catch (const fp::EnumerationOverflow& e) {
    TheoremARow row;
    row.name = name;
    row.error = e.what();
    return row;
  } catch (const nu::CapExceeded& e) {
    TheoremARow row;
    row.name = name;
    row.error = e.what();
    return row;
  }
}

}  // namespace nuengine::verify
