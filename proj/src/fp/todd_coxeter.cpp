#include <algorithm>
#include <deque>

#include "nuengine/fp.hpp"

namespace nuengine::fp {

namespace {

using Coset = std::int32_t;
constexpr Coset kNone = CosetTable::kUndefined;

struct NeedSpace {};

std::size_t inv(std::size_t col) { return col ^ 1u; }

// Cyclically reduced column sequence of a relator.
std::vector<std::size_t> cyclic_columns(const Word& w) {
  std::vector<std::size_t> cols = w.columns();
  std::size_t lo = 0, hi = cols.size();
  while (hi - lo >= 2 && cols[lo] == inv(cols[hi - 1])) {
    ++lo;
    --hi;
  }
  return {cols.begin() + static_cast<std::ptrdiff_t>(lo), cols.begin() + static_cast<std::ptrdiff_t>(hi)};
}

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::span<const Word> subgroup, const EnumerationOptions& opts)
      : cols_(2 * p.generators.size()), cap_(std::max<std::size_t>(opts.cap, 1)),
        felsch_(opts.strategy == Strategy::kFelsch) {
    for (const auto& r : p.relators) {
      auto c = cyclic_columns(r);
      if (!c.empty()) rels_.push_back(std::move(c));
    }
    for (const auto& w : subgroup) {
      auto c = w.columns();
      if (!c.empty()) subgroup_.push_back(std::move(c));
    }
    if (felsch_) {
      by_first_.resize(cols_);
      for (const auto& r : rels_) {
        std::vector<std::size_t> ri(r.rbegin(), r.rend());
        for (auto& c : ri) c = inv(c);
        for (const std::vector<std::size_t>* w : {&r, static_cast<const std::vector<std::size_t>*>(&ri)})
          for (std::size_t k = 0; k < w->size(); ++k) {
            std::vector<std::size_t> rot(w->begin() + static_cast<std::ptrdiff_t>(k), w->end());
            rot.insert(rot.end(), w->begin(), w->begin() + static_cast<std::ptrdiff_t>(k));
            auto& bucket = by_first_[rot.front()];
            if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end())
              bucket.push_back(std::move(rot));
          }
      }
    }
  }

  bool run() {
    new_coset();
    return felsch_ ? run_felsch() : run_hlt();
  }

  std::size_t max_defined() const { return max_defined_; }

  // Renumbers live cosets breadth-first from coset 0 and fills `out`.
  void standardize(std::vector<Coset>& entries, std::vector<Coset>& parent,
                   std::vector<Coset>& column, std::size_t& count) {
    std::vector<Coset> fresh(p_.size(), kNone);
    std::vector<Coset> order{rep(0)};
    fresh[static_cast<std::size_t>(rep(0))] = 0;
    parent.assign(1, kNone);
    column.assign(1, kNone);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t x = 0; x < cols_; ++x) {
        Coset d = rep(get(order[i], x));
        if (fresh[static_cast<std::size_t>(d)] == kNone) {
          fresh[static_cast<std::size_t>(d)] = static_cast<Coset>(order.size());
          order.push_back(d);
          parent.push_back(static_cast<Coset>(i));
          column.push_back(static_cast<Coset>(x));
        }
      }
    }
    count = order.size();
    entries.assign(count * cols_, kNone);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t x = 0; x < cols_; ++x)
        entries[i * cols_ + x] = fresh[static_cast<std::size_t>(rep(get(order[i], x)))];
  }

 private:
  Coset get(Coset c, std::size_t x) const { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  void set(Coset c, std::size_t x, Coset d) { table_[static_cast<std::size_t>(c) * cols_ + x] = d; }
  bool live(Coset c) const { return p_[static_cast<std::size_t>(c)] == c; }

  Coset new_coset() {
    if (p_.size() >= cap_) throw NeedSpace{};
    Coset c = static_cast<Coset>(p_.size());
    p_.push_back(c);
    table_.resize(table_.size() + cols_, kNone);
    ++live_;
    max_defined_ = std::max(max_defined_, live_);
    return c;
  }

  void define(Coset c, std::size_t x) {
    Coset d = new_coset();
    set(c, x, d);
    set(d, inv(x), c);
    if (felsch_) deductions_.emplace_back(c, x);
  }

  Coset rep(Coset k) {
    Coset l = k;
    while (p_[static_cast<std::size_t>(l)] != l) l = p_[static_cast<std::size_t>(l)];
    while (p_[static_cast<std::size_t>(k)] != l) {
      Coset next = p_[static_cast<std::size_t>(k)];
      p_[static_cast<std::size_t>(k)] = l;
      k = next;
    }
    return l;
  }

  void merge(Coset k, Coset l, std::vector<Coset>& queue) {
    Coset a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[static_cast<std::size_t>(b)] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(Coset a, Coset b) {
    std::vector<Coset> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Coset g = queue[i];
      for (std::size_t x = 0; x < cols_; ++x) {
        const Coset d = get(g, x);
        if (d == kNone) continue;
        if (get(d, inv(x)) == g) set(d, inv(x), kNone);
        const Coset m = rep(g), n = rep(d);
        if (get(m, x) != kNone) {
          merge(n, get(m, x), queue);
        } else if (get(n, inv(x)) != kNone) {
          merge(m, get(n, inv(x)), queue);
        } else {
          set(m, x, n);
          set(n, inv(x), m);
          if (felsch_) deductions_.emplace_back(m, x);
        }
      }
    }
    coincided_ = true;
  }

  // Traces w from c in both directions without defining; deduces or merges.
  void scan(Coset c, const std::vector<std::size_t>& w) {
    Coset f = c;
    std::size_t i = 0;
    const std::size_t n = w.size();
    while (i < n && get(f, w[i]) != kNone) f = get(f, w[i++]);
    if (i == n) {
      if (f != c) coincidence(f, c);
      return;
    }
    Coset b = c;
    std::size_t j = n;
    while (j > i && get(b, inv(w[j - 1])) != kNone) b = get(b, inv(w[--j]));
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      set(f, w[i], b);
      set(b, inv(w[i]), f);
      if (felsch_) deductions_.emplace_back(f, w[i]);
    }
  }

  void scan_and_fill(Coset c, const std::vector<std::size_t>& w) {
    Coset f = c;
    std::size_t i = 0;
    const std::size_t n = w.size();
    Coset b = c;
    std::size_t j = n;
    while (true) {
      while (i < n && get(f, w[i]) != kNone) f = get(f, w[i++]);
      if (i == n) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j > i && get(b, inv(w[j - 1])) != kNone) b = get(b, inv(w[--j]));
      if (j < i + 1) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set(f, w[i], b);
        set(b, inv(w[i]), f);
        if (felsch_) deductions_.emplace_back(f, w[i]);
        return;
      }
      define(f, w[i]);
    }
  }

  void lookahead() {
    for (Coset c = 0; c < static_cast<Coset>(p_.size()); ++c) {
      for (const auto& r : rels_) {
        if (!live(c)) break;
        scan(c, r);
      }
    }
  }

  // Drops dead cosets, keeping definition order. Returns the new index of the
  // first live coset at or after `cursor`.
  std::size_t compact(std::size_t cursor) {
    std::vector<Coset> fresh(p_.size(), kNone);
    Coset next = 0;
    std::size_t new_cursor = static_cast<std::size_t>(-1);
    for (std::size_t c = 0; c < p_.size(); ++c) {
      if (c >= cursor && new_cursor == static_cast<std::size_t>(-1) && live(static_cast<Coset>(c)))
        new_cursor = static_cast<std::size_t>(next);
      if (live(static_cast<Coset>(c))) fresh[c] = next++;
    }
    std::vector<Coset> table(static_cast<std::size_t>(next) * cols_, kNone);
    for (std::size_t c = 0; c < p_.size(); ++c) {
      if (fresh[c] == kNone) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        Coset d = get(static_cast<Coset>(c), x);
        table[static_cast<std::size_t>(fresh[c]) * cols_ + x] =
            d == kNone ? kNone : fresh[static_cast<std::size_t>(rep(d))];
      }
    }
    table_ = std::move(table);
    p_.resize(static_cast<std::size_t>(next));
    for (std::size_t c = 0; c < p_.size(); ++c) p_[c] = static_cast<Coset>(c);
    deductions_.clear();
    return new_cursor == static_cast<std::size_t>(-1) ? p_.size() : new_cursor;
  }

  // Frees space after NeedSpace; false when nothing could be reclaimed.
  bool reclaim(std::size_t& cursor) {
    if (!felsch_) lookahead();
    if (live_ == p_.size()) return false;
    cursor = compact(cursor);
    return true;
  }

  bool first_undefined(Coset& c, std::size_t& x, std::size_t from = 0) const {
    for (std::size_t k = from; k < p_.size(); ++k) {
      if (!live(static_cast<Coset>(k))) continue;
      for (std::size_t y = 0; y < cols_; ++y)
        if (get(static_cast<Coset>(k), y) == kNone) {
          c = static_cast<Coset>(k);
          x = y;
          return true;
        }
    }
    return false;
  }

  bool run_hlt() {
    bool seeded = false;
    std::size_t c = 0;
    while (true) {
      try {
        if (!seeded) {
          for (const auto& w : subgroup_) scan_and_fill(rep(0), w);
          seeded = true;
        }
        while (c < p_.size()) {
          const Coset cc = static_cast<Coset>(c);
          for (const auto& r : rels_) {
            if (!live(cc)) break;
            scan_and_fill(cc, r);
          }
          if (live(cc))
            for (std::size_t x = 0; x < cols_; ++x)
              if (get(cc, x) == kNone) define(cc, x);
          ++c;
        }
        // Coincidences can reopen rows of processed cosets.
        Coset open;
        std::size_t x;
        if (!first_undefined(open, x)) return true;
        c = static_cast<std::size_t>(open);
      } catch (NeedSpace&) {
        if (!reclaim(c)) return false;
      }
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [a, x] = deductions_.back();
      deductions_.pop_back();
      if (!live(a)) continue;
      for (const auto& w : by_first_[x]) {
        if (!live(a)) break;
        scan(a, w);
      }
      if (!live(a)) continue;
      Coset b = get(a, x);
      if (b == kNone || !live(b)) continue;
      for (const auto& w : by_first_[inv(x)]) {
        if (!live(b)) break;
        scan(b, w);
      }
    }
  }

  bool run_felsch() {
    for (const auto& w : subgroup_) {
      try {
        scan_and_fill(rep(0), w);
      } catch (NeedSpace&) {
        return false;
      }
      process_deductions();
    }
    // Rows before `cursor` are full unless a coincidence reopened them.
    std::size_t cursor = 0;
    while (true) {
      if (coincided_) {
        cursor = 0;
        coincided_ = false;
      }
      Coset c;
      std::size_t x;
      if (!first_undefined(c, x, cursor)) {
        if (cursor == 0) return true;
        cursor = 0;
        continue;
      }
      cursor = static_cast<std::size_t>(c);
      try {
        define(c, x);
      } catch (NeedSpace&) {
        std::size_t ignored = 0;
        if (!reclaim(ignored)) return false;
        cursor = 0;
        continue;
      }
      process_deductions();
    }
  }

  std::size_t cols_;
  std::size_t cap_;
  bool felsch_;
  std::vector<std::vector<std::size_t>> rels_;
  std::vector<std::vector<std::size_t>> subgroup_;
  std::vector<std::vector<std::vector<std::size_t>>> by_first_;
  std::vector<Coset> table_;
  std::vector<Coset> p_;
  std::vector<std::pair<Coset, std::size_t>> deductions_;
  std::size_t live_ = 0;
  std::size_t max_defined_ = 0;
  bool coincided_ = false;
};

}  // namespace

Word CosetTable::coset_word(std::size_t coset) const {
  std::vector<Letter> rev;
  while (tree_parent_.at(coset) != kUndefined) {
    const auto col = static_cast<std::size_t>(tree_column_[coset]);
    rev.push_back({col / 2, (col % 2) ? -1 : 1});
    coset = static_cast<std::size_t>(tree_parent_[coset]);
  }
  std::reverse(rev.begin(), rev.end());
  return Word(std::move(rev));
}

CosetTable todd_coxeter(const Presentation& p, std::span<const Word> subgroup_gens,
                        const EnumerationOptions& options) {
  CosetTable t;
  t.generators_ = p.generators;
  t.relators_ = p.relators;
  t.columns_ = 2 * p.generators.size();
  Enumerator e(p, subgroup_gens, options);
  const bool ok = e.run();
  t.max_defined_ = e.max_defined();
  if (!ok) {
    t.status_ = EnumerationStatus::kOverflow;
    return t;
  }
  e.standardize(t.entries_, t.tree_parent_, t.tree_column_, t.num_cosets_);
  t.status_ = EnumerationStatus::kComplete;
  return t;
}

}  // namespace nuengine::fp
