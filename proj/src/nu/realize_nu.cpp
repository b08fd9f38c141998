#include <unordered_set>

#include "nuengine/nu.hpp"

namespace nuengine::nu {

FiniteGroup::FiniteGroup(fp::Presentation pres, const fp::CosetTable& table)
    : pres_(std::move(pres)) {
  const std::size_t n = table.num_cosets();
  for (std::size_t g = 0; g < table.generators().size(); ++g) {
    std::vector<Point> img(n);
    for (std::size_t c = 0; c < n; ++c) img[c] = static_cast<Point>(table.at(c, 2 * g));
    gen_images_.emplace_back(std::move(img));
  }
  BuildOptions opts;
  opts.order_bound = n;
  group_ = PermGroup(n, gen_images_, opts);
  if (group_.order() != n) throw GroupError("regular action of " + pres_.name + " is not regular");
  for (std::size_t c = 0; c < n; ++c) {
    words_.push_back(table.coset_word(c));
    elements_.push_back(fp::evaluate(words_.back(), gen_images_, n));
    if (elements_.back()[0] != c) throw GroupError("coset word does not reach its coset");
  }
  mul_.assign(n, std::vector<std::size_t>(n));
  inv_.assign(n, 0);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      mul_[b][a] = elements_[b][static_cast<Point>(a)];
      if (mul_[b][a] == 0) inv_[a] = b;
    }
}

std::size_t FiniteGroup::conjugate(std::size_t a, std::size_t b) const {
  return multiply(multiply(inverse(b), a), b);
}

std::size_t FiniteGroup::commutator(std::size_t a, std::size_t b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

FiniteGroup enumerate_group(const fp::Presentation& p, std::size_t coset_cap) {
  fp::EnumerationOptions opts;
  opts.cap = coset_cap;
  fp::CosetTable t = fp::todd_coxeter(p, {}, opts);
  if (!t.complete()) throw fp::EnumerationOverflow("enumeration of " + p.name + " exceeded the coset cap");
  return FiniteGroup(p, t);
}

std::size_t NuGroup::rho_index(const Permutation& x) const {
  return g_->index_of(rho_->map(x));
}

namespace {

struct Action {
  std::vector<Permutation> images;
  PermGroup group;
};

Permutation disjoint_sum(const Permutation& x, const Permutation& y) {
  std::vector<Point> img(x.degree() + y.degree());
  for (std::size_t i = 0; i < x.degree(); ++i) img[i] = x[static_cast<Point>(i)];
  const auto off = static_cast<Point>(x.degree());
  for (std::size_t i = 0; i < y.degree(); ++i) img[off + i] = off + y[static_cast<Point>(i)];
  return Permutation(std::move(img));
}

std::vector<Permutation> table_images(const fp::CosetTable& t) {
  std::vector<Permutation> out;
  const std::size_t n = t.num_cosets();
  for (std::size_t g = 0; g < t.generators().size(); ++g) {
    std::vector<Point> img(n);
    for (std::size_t c = 0; c < n; ++c) img[c] = static_cast<Point>(t.at(c, 2 * g));
    out.emplace_back(std::move(img));
  }
  return out;
}

fp::CosetTable enumerate(const fp::Presentation& p, std::span<const fp::Word> sub,
                         std::size_t cap) {
  fp::EnumerationOptions opts;
  opts.cap = cap;
  fp::CosetTable t = fp::todd_coxeter(p, sub, opts);
  if (!t.complete())
    throw fp::EnumerationOverflow("enumeration of " + p.name + " exceeded the coset cap");
  return t;
}

// Faithful permutation action of the presented nu(G). The action on cosets
// of the G copy has kernel core(G); its order equals index*|G| exactly when
// that core is trivial.
Action faithful_action(const fp::Presentation& pres, std::size_t k, std::size_t order_g,
                       std::size_t cap, std::string& how) {
  std::vector<fp::Word> g_words, phi_words;
  for (std::size_t i = 0; i < k; ++i) {
    g_words.push_back(fp::Word::generator(i));
    phi_words.push_back(fp::Word::generator(i + k));
  }
  fp::CosetTable tg = enumerate(pres, g_words, cap);
  const Order bound = static_cast<Order>(tg.num_cosets()) * order_g;
  if (tg.num_cosets() > kMaxDegree) throw CapExceeded("nu action exceeds the degree cap");
  auto imgs = table_images(tg);
  {
    BuildOptions o;
    o.order_bound = bound;
    PermGroup grp(tg.num_cosets(), imgs, o);
    if (grp.order() == bound) {
      how = "cosets-of-G";
      return {std::move(imgs), std::move(grp)};
    }
  }
  fp::CosetTable tp = enumerate(pres, phi_words, cap);
  if (tg.num_cosets() + tp.num_cosets() <= kMaxDegree) {
    auto pimgs = table_images(tp);
    std::vector<Permutation> both;
    for (std::size_t i = 0; i < imgs.size(); ++i) both.push_back(disjoint_sum(imgs[i], pimgs[i]));
    BuildOptions o;
    o.order_bound = bound;
    PermGroup grp(tg.num_cosets() + tp.num_cosets(), both, o);
    if (grp.order() == bound) {
      how = "cosets-of-G-and-Gphi";
      return {std::move(both), std::move(grp)};
    }
  }
  fp::CosetTable tr = enumerate(pres, {}, cap);
  if (tr.num_cosets() > kMaxDegree) throw CapExceeded("nu action exceeds the degree cap");
  auto rimgs = table_images(tr);
  BuildOptions o;
  o.order_bound = tr.num_cosets();
  PermGroup grp(tr.num_cosets(), rimgs, o);
  how = "regular";
  return {std::move(rimgs), std::move(grp)};
}

// Base images of y^-1 x y for elements of the group owning `base`.
void conj_key(const std::vector<Point>& base, const Permutation& x, const Permutation& y,
              const Permutation& y_inv, std::vector<Point>& out) {
  out.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) out[i] = y[x[y_inv[base[i]]]];
}

}  // namespace

bool all_triples_hold(const NuGroup& n, std::array<std::size_t, 3>* bad) {
  const FiniteGroup& g = n.base_group();
  const std::size_t m = g.order();
  const auto& base = n.nu().base();
  std::vector<ElementKey> tkey(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) tkey[a * m + b] = n.nu().key_of(n.tensor(a, b));
  std::vector<Point> k1, k2;
  for (std::size_t c = 0; c < m; ++c) {
    const Permutation& y = n.elem_g(c);
    const Permutation& yi = n.elem_g(g.inverse(c));
    const Permutation& z = n.elem_phi(c);
    const Permutation& zi = n.elem_phi(g.inverse(c));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        const Permutation& t = n.tensor(a, b);
        conj_key(base, t, y, yi, k1);
        conj_key(base, t, z, zi, k2);
        if (k1 != tkey[g.conjugate(a, c) * m + g.conjugate(b, c)] || k1 != k2) {
          if (bad) *bad = {a, b, c};
          return false;
        }
      }
  }
  return true;
}

NuGroup realize_nu(const fp::Presentation& p, const Caps& caps, NuMode mode) {
  auto g = std::make_shared<const FiniteGroup>(enumerate_group(p, caps.coset_cap));
  const std::size_t m = g->order();
  if (m > caps.order_cap)
    throw CapExceeded("|G| = " + std::to_string(m) + " exceeds the order cap " +
                      std::to_string(caps.order_cap));
  const std::size_t k = p.generators.size();

  NuGroup n;
  n.g_ = g;
  n.mode_ = mode;
  if (mode == NuMode::kElementTriples) {
    std::vector<fp::Word> words;
    for (std::size_t i = 0; i < m; ++i) words.push_back(g->word(i));
    n.pres_ = build_nu_presentation(p, mode, &words);
  } else {
    n.pres_ = build_nu_presentation(p, mode);
  }

  Action act = faithful_action(n.pres_, k, m, caps.coset_cap, n.action_);
  n.nu_ = std::move(act.group);
  const std::size_t deg = n.nu_.degree();
  n.emb_g_.assign(act.images.begin(), act.images.begin() + static_cast<std::ptrdiff_t>(k));
  n.emb_phi_.assign(act.images.begin() + static_cast<std::ptrdiff_t>(k), act.images.end());
  for (std::size_t i = 0; i < m; ++i) {
    n.elem_g_.push_back(fp::evaluate(g->word(i), n.emb_g_, deg));
    n.elem_phi_.push_back(fp::evaluate(g->word(i), n.emb_phi_, deg));
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      n.tensors_.push_back(commutator(n.elem_g_[a], n.elem_phi_[b]));

  if (!all_triples_hold(n)) {
    if (mode == NuMode::kElementTriples)
      throw ConstructionError("defining relations fail in the element-triples build of " + p.name);
    NuGroup r = realize_nu(p, caps, NuMode::kElementTriples);
    r.rebuilt_ = true;
    return r;
  }

  std::vector<Permutation> rho_images = g->generator_images();
  rho_images.insert(rho_images.end(), g->generator_images().begin(), g->generator_images().end());
  if (!fp::von_dyck_check(n.pres_, rho_images, g->group()))
    throw ConstructionError("rho is not a homomorphism for " + p.name);
  n.rho_.emplace(n.nu_, g->group(), std::move(rho_images));
  n.rho_->mark_verified();
  n.theta_ = kernel(*n.rho_);

  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermutationHash> seen;
  for (const auto& t : n.tensors_)
    if (!t.is_identity() && seen.insert(t).second) gens.push_back(t);
  n.h_ = PermGroup(deg, std::move(gens));
  return n;
}

}  // namespace nuengine::nu
