#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "nuengine/corpus.hpp"

namespace nuengine::corpus {

namespace {

struct Builtin {
  std::string text;
  std::uint64_t order;
  std::vector<std::string> tags;
};

std::vector<Builtin> builtin_table() {
  std::vector<Builtin> t = {
      {"group trivial { gens: ; rels: ; }", 1, {"abelian", "cyclic"}},
      {"group C2xC2 { gens: a, b; rels: a^2, b^2, [a,b]; }", 4, {"abelian", "p-group"}},
      {"group C3xC3 { gens: a, b; rels: a^3, b^3, [a,b]; }", 9, {"abelian", "p-group"}},
      {"group S3 { gens: a, b; rels: a^3, b^2, (a*b)^2; }", 6, {}},
      {"group Q8 { gens: a, b; rels: a^4, a^2 = b^2, a^b = a^-1; }", 8, {"p-group"}},
      {"group A4 { gens: a, b; rels: a^2, b^3, (a*b)^3; }", 12, {}},
  };
  for (int n = 2; n <= 8; ++n) {
    const std::string s = std::to_string(n);
    std::vector<std::string> tags{"abelian", "cyclic"};
    if (n != 6) tags.push_back("p-group");
    t.push_back({"group C" + s + " { gens: a; rels: a^" + s + "; }", static_cast<std::uint64_t>(n), tags});
  }
  return t;
}

std::vector<std::string> tags_for_dihedral(std::uint64_t m) {
  std::vector<std::string> tags{"dihedral"};
  if ((m & (m - 1)) == 0) tags.push_back("p-group");
  return tags;
}

}  // namespace

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& b : builtin_table()) {
    fp::Presentation p = fp::parse_presentation(b.text);
    out.push_back({p.name, p, b.order, b.tags});
  }
  for (std::uint64_t m = 3; m <= 15; ++m) {
    fp::Presentation p = verify::dihedral_presentation(m);
    out.push_back({p.name, p, 2 * m, tags_for_dihedral(m)});
  }
  for (std::uint64_t k = 1; k <= 2; ++k) {
    fp::Presentation p = verify::prufer_truncation_presentation(3, k);
    out.push_back({p.name, p, k == 1 ? 6u : 18u, {"prufer"}});
  }
  std::sort(out.begin(), out.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  return out;
}

std::vector<CorpusEntry> corpus_from_text(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::set<std::string> names;
  for (auto& p : fp::parse_presentations(text)) {
    if (!names.insert(p.name).second) throw CorpusError("duplicate group name '" + p.name + "'");
    std::string name = p.name;
    out.push_back({std::move(name), std::move(p), std::nullopt, {}});
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return corpus_from_text(ss.str());
}

std::optional<CorpusEntry> find_entry(const std::vector<CorpusEntry>& entries,
                                      const std::string& name) {
  for (const auto& e : entries)
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace nuengine::corpus
