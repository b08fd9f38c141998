#include "nuengine/nu.hpp"

namespace nuengine::nu {

fp::Presentation build_direct_tensor_square(const FiniteGroup& g, const Caps& caps) {
  const std::size_t m = g.order();
  if (m > caps.direct_cap)
    throw CapExceeded("direct tensor square needs |G| <= " + std::to_string(caps.direct_cap));
  fp::Presentation out;
  out.name = g.presentation().name + "(x)" + g.presentation().name;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      out.generators.push_back({"t_" + std::to_string(a) + "_" + std::to_string(b), false});
  auto t = [m](std::size_t a, std::size_t b) { return fp::Word::generator(a * m + b); };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        fp::Word r1 = t(g.multiply(a, b), c).inverse() * t(g.conjugate(a, b), g.conjugate(c, b)) *
                      t(b, c);
        fp::Word r2 = t(a, g.multiply(b, c)).inverse() * t(a, c) *
                      t(g.conjugate(a, c), g.conjugate(b, c));
        out.relators.push_back(std::move(r1));
        out.relators.push_back(std::move(r2));
      }
  return out;
}

PhiIsoResult phi_iso_check(const NuGroup& n, const fp::Presentation& direct, const Caps& caps) {
  const std::size_t m = n.order_g();
  PhiIsoResult res;
  res.h_order = n.h().order();
  std::vector<Permutation> images;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) images.push_back(n.tensor(a, b));
  res.homomorphism = fp::von_dyck_check(direct, images, n.h());
  fp::EnumerationOptions opts;
  opts.cap = caps.coset_cap;
  res.direct_order = fp::presented_order(direct, opts);
  return res;
}

}  // namespace nuengine::nu
