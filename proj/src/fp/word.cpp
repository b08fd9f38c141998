#include <sstream>

#include "nuengine/fp.hpp"

namespace nuengine::fp {

Word::Word(std::vector<Letter> letters) {
  for (const auto& l : letters) push(l);
}

Word Word::generator(std::size_t gen, long long exp) {
  Word w;
  w.push({gen, exp});
  return w;
}

void Word::push(Letter l) {
  if (l.exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == l.gen) {
    letters_.back().exp += l.exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const auto& l : letters_) n += static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp);
  return n;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push({it->gen, -it->exp});
  return w;
}

Word Word::pow(long long e) const {
  Word base = e < 0 ? inverse() : *this;
  Word out;
  for (long long i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
  return out;
}

Word Word::operator*(const Word& rhs) const {
  Word w = *this;
  w *= rhs;
  return w;
}

Word& Word::operator*=(const Word& rhs) {
  for (const auto& l : rhs.letters_) push(l);
  return *this;
}

std::vector<std::size_t> Word::columns() const {
  std::vector<std::size_t> cols;
  for (const auto& l : letters_) {
    const std::size_t col = 2 * l.gen + (l.exp < 0 ? 1 : 0);
    for (long long i = 0; i < (l.exp < 0 ? -l.exp : l.exp); ++i) cols.push_back(col);
  }
  return cols;
}

Word conjugate(const Word& x, const Word& y) { return y.inverse() * x * y; }

Word commutator(const Word& x, const Word& y) {
  return x.inverse() * y.inverse() * x * y;
}

std::optional<std::size_t> Presentation::find(std::string_view generator) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == generator) return i;
  return std::nullopt;
}

std::string Presentation::word_to_string(const Word& w) const {
  std::ostringstream out;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) out << '*';
    first = false;
    out << generators.at(l.gen).name;
    if (l.exp != 1) out << '^' << l.exp;
  }
  return out.str();
}

std::string serialize(const Presentation& p) {
  std::ostringstream out;
  out << "group " << p.name << " { gens: ";
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    out << (i ? ", " : "") << p.generators[i].name;
  out << "; rels: ";
  bool first = true;
  for (const auto& r : p.relators) {
    if (r.empty()) continue;
    out << (first ? "" : ", ") << p.word_to_string(r);
    first = false;
  }
  out << "; }\n";
  return out.str();
}

}  // namespace nuengine::fp
