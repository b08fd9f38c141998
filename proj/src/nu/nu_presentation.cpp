#include <stdexcept>

#include "nuengine/nu.hpp"

namespace nuengine::nu {

std::string to_string(NuMode mode) {
  return mode == NuMode::kGeneratorTriples ? "generator-triples" : "element-triples";
}

NuMode nu_mode_from_string(const std::string& s) {
  if (s == "generator-triples") return NuMode::kGeneratorTriples;
  if (s == "element-triples") return NuMode::kElementTriples;
  throw std::invalid_argument("unknown nu mode '" + s + "'");
}

namespace {

fp::Word shift(const fp::Word& w, std::size_t offset) {
  std::vector<fp::Letter> out;
  out.reserve(w.letters().size());
  for (const auto& l : w.letters()) out.push_back({l.gen + offset, l.exp});
  return fp::Word(std::move(out));
}

std::string phi_name(const fp::Presentation& g, const std::string& base) {
  std::string name = base + "_phi";
  while (g.find(name)) name += "_";
  return name;
}

}  // namespace

fp::Presentation build_nu_presentation(const fp::Presentation& g, NuMode mode,
                                       const std::vector<fp::Word>* elements) {
  const std::size_t k = g.generators.size();
  fp::Presentation out;
  out.name = "nu(" + g.name + ")";
  out.generators = g.generators;
  for (const auto& s : g.generators) out.generators.push_back({phi_name(g, s.name), true});

  for (const auto& r : g.relators) out.relators.push_back(r);
  for (const auto& r : g.relators) out.relators.push_back(shift(r, k));

  std::vector<fp::Word> ws;
  if (mode == NuMode::kGeneratorTriples) {
    for (std::size_t i = 0; i < k; ++i) ws.push_back(fp::Word::generator(i));
  } else {
    if (!elements) throw std::invalid_argument("element-triples mode needs element words");
    for (const auto& w : *elements)
      if (!w.empty()) ws.push_back(w);
  }

  for (const auto& w1 : ws)
    for (const auto& w2 : ws)
      for (const auto& w3 : ws) {
        const fp::Word t = fp::commutator(w1, shift(w2, k));
        const fp::Word lhs = fp::conjugate(t, w3);
        const fp::Word r1 =
            lhs * fp::commutator(fp::conjugate(w1, w3), shift(fp::conjugate(w2, w3), k)).inverse();
        const fp::Word r2 = lhs * fp::conjugate(t, shift(w3, k)).inverse();
        if (!r1.empty()) out.relators.push_back(r1);
        if (!r2.empty()) out.relators.push_back(r2);
      }
  return out;
}

}  // namespace nuengine::nu
