#include <algorithm>
#include <cstdint>
#include <vector>

#include "wedgelab/errors.hpp"
#include "wedgelab/presentation.hpp"

namespace wedgelab {

namespace {

constexpr std::int32_t kUndef = -1;

/// Coset enumeration in the style of the HLT and Felsch procedures. Cosets
/// are numbered in creation order; live cosets are those with p[c] == c, and
/// compaction preserves their relative order.
class Enumerator {
 public:
  Enumerator(std::size_t ngens, std::vector<std::vector<std::int32_t>> relators, const EnumerationOptions& opts)
      : ncols_(2 * ngens), rels_(std::move(relators)), opts_(opts) {
    std::size_t cap = opts.max_cosets;
    if (ncols_ > 0) cap = std::min(cap, opts.max_table_entries / ncols_);
    cap_ = std::max<std::size_t>(cap, 1);
    grow(std::min<std::size_t>(cap_, 1024));
    new_coset();
    if (opts_.strategy == CosetStrategy::Felsch) build_conjugates();
  }

  bool run(const std::vector<std::vector<std::int32_t>>& subgroup) {
    try {
      for (const auto& w : subgroup) {
        scan_and_fill(0, w);
        process_deductions();
      }
      return opts_.strategy == CosetStrategy::Felsch ? felsch() : hlt();
    } catch (const Full&) {
      return false;
    }
  }

  /// Standardized action table of the completed enumeration.
  std::vector<std::vector<Elem>> action_table() {
    std::vector<std::int32_t> num(size_, kUndef);
    std::vector<std::int32_t> order;
    num[0] = 0;
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const std::int32_t c = order[head];
      for (std::size_t x = 0; x < ncols_; x += 2) {
        const std::int32_t d = at(c, x);
        if (num[d] == kUndef) {
          num[d] = static_cast<std::int32_t>(order.size());
          order.push_back(d);
        }
      }
    }
    std::vector<std::vector<Elem>> act(ncols_ / 2, std::vector<Elem>(order.size()));
    for (std::size_t j = 0; j < ncols_ / 2; ++j) {
      for (std::size_t i = 0; i < order.size(); ++i) act[j][i] = static_cast<Elem>(num[at(order[i], 2 * j)]);
    }
    return act;
  }

  std::size_t live() const { return live_; }
  std::size_t peak() const { return peak_; }
  std::size_t defined() const { return defined_; }

 private:
  struct Full {};

  std::int32_t& at(std::int32_t c, std::size_t x) { return table_[static_cast<std::size_t>(c) * ncols_ + x]; }
  static std::size_t inv(std::size_t x) { return x ^ 1u; }
  static std::size_t col(std::int32_t step) {
    return step > 0 ? 2 * static_cast<std::size_t>(step - 1) : 2 * static_cast<std::size_t>(-step - 1) + 1;
  }
  bool alive(std::int32_t c) const { return p_[static_cast<std::size_t>(c)] == c; }

  void grow(std::size_t rows) {
    table_.resize(rows * ncols_, kUndef);
    p_.resize(rows);
    rows_ = rows;
  }

  std::int32_t new_coset() {
    if (size_ == rows_) {
      if (rows_ >= cap_) throw Full{};
      grow(std::min(cap_, rows_ * 2));
    }
    const std::int32_t c = static_cast<std::int32_t>(size_++);
    p_[static_cast<std::size_t>(c)] = c;
    std::fill_n(table_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(c) * ncols_), ncols_, kUndef);
    ++live_;
    ++defined_;
    peak_ = std::max(peak_, live_);
    return c;
  }

  void define(std::int32_t c, std::size_t x) {
    const std::int32_t d = new_coset();
    at(c, x) = d;
    at(d, inv(x)) = c;
    if (felsch_) deductions_.push_back({c, x});
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (p_[static_cast<std::size_t>(r)] != r) r = p_[static_cast<std::size_t>(r)];
    while (p_[static_cast<std::size_t>(c)] != r) {
      const std::int32_t n = p_[static_cast<std::size_t>(c)];
      p_[static_cast<std::size_t>(c)] = r;
      c = n;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[static_cast<std::size_t>(b)] = a;
    --live_;
    queue_.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const std::int32_t g = queue_[i];
      for (std::size_t x = 0; x < ncols_; ++x) {
        const std::int32_t d = at(g, x);
        if (d == kUndef) continue;
        if (at(d, inv(x)) == g) at(d, inv(x)) = kUndef;
        const std::int32_t mu = rep(g), nu = rep(d);
        if (at(mu, x) != kUndef) {
          merge(nu, at(mu, x));
        } else if (at(nu, inv(x)) != kUndef) {
          merge(mu, at(nu, inv(x)));
        } else {
          at(mu, x) = nu;
          at(nu, inv(x)) = mu;
          if (felsch_) deductions_.push_back({mu, x});
        }
      }
    }
  }

  /// Scans w (columns) at coset c starting at cyclic offset `off`; defines
  /// new cosets only when `fill` is set.
  void scan_impl(std::int32_t c, const std::vector<std::int32_t>& w, std::size_t off, bool fill) {
    const std::size_t len = w.size();
    if (len == 0) return;
    auto letter = [&](std::size_t i) { return col(w[(off + i) % len]); };
    std::int32_t f = c, b = c;
    std::size_t i = 0, j = len;  // unscanned letters are [i, j)
    for (;;) {
      while (i < j && at(f, letter(i)) != kUndef) f = at(f, letter(i++));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, inv(letter(j - 1))) != kUndef) b = at(b, inv(letter(--j)));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        const std::size_t x = letter(i);
        at(f, x) = b;
        at(b, inv(x)) = f;
        if (felsch_) deductions_.push_back({f, x});
        return;
      }
      if (!fill) return;
      define(f, letter(i));
    }
  }

  void scan_and_fill(std::int32_t c, const std::vector<std::int32_t>& w) { scan_impl(c, w, 0, true); }

  /// Number of live cosets numbered below c, i.e. c's position after compaction.
  static std::size_t position_after(const std::vector<std::int32_t>& num, std::int32_t c) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(c); ++i) k += num[i] != kUndef;
    return k;
  }

  bool hlt() {
    std::size_t a = 0;
    while (a < size_) {
      const std::int32_t c = static_cast<std::int32_t>(a);
      if (!alive(c)) {
        ++a;
        continue;
      }
      try {
        for (const auto& r : rels_) {
          scan_and_fill(c, r);
          if (!alive(c)) break;
        }
        if (alive(c)) {
          for (std::size_t x = 0; x < ncols_; ++x) {
            if (at(c, x) == kUndef) define(c, x);
          }
        }
        ++a;
      } catch (const Full&) {
        // Lookahead: scan every live coset without defining, then compact.
        lookahead();
        const auto num = compact();
        if (live_ >= cap_) return false;
        a = position_after(num, c);
      }
    }
    return true;
  }

  void lookahead() {
    for (std::size_t a = 0; a < size_; ++a) {
      const std::int32_t c = static_cast<std::int32_t>(a);
      for (const auto& r : rels_) {
        if (!alive(c)) break;
        scan_impl(c, r, 0, false);
      }
    }
  }

  /// Renumbers live cosets 0..live-1 preserving order; returns old -> new.
  std::vector<std::int32_t> compact() {
    std::vector<std::int32_t> num(size_, kUndef);
    std::int32_t next = 0;
    for (std::size_t c = 0; c < size_; ++c) {
      if (p_[c] == static_cast<std::int32_t>(c)) num[c] = next++;
    }
    std::vector<std::pair<std::int32_t, std::size_t>> kept;
    for (const auto& [c, x] : deductions_) {
      const std::int32_t r = rep(c);
      kept.push_back({num[static_cast<std::size_t>(r)], x});
    }
    deductions_ = std::move(kept);
    for (std::size_t c = 0; c < size_; ++c) {
      if (num[c] == kUndef) continue;
      const std::size_t nc = static_cast<std::size_t>(num[c]);
      for (std::size_t x = 0; x < ncols_; ++x) {
        const std::int32_t d = table_[c * ncols_ + x];
        table_[nc * ncols_ + x] = d == kUndef ? kUndef : num[static_cast<std::size_t>(rep(d))];
      }
    }
    for (std::size_t c = 0; c < static_cast<std::size_t>(next); ++c) p_[c] = static_cast<std::int32_t>(c);
    size_ = static_cast<std::size_t>(next);
    live_ = size_;
    return num;
  }

  // ----- Felsch

  void build_conjugates() {
    felsch_ = true;
    conj_.assign(ncols_, {});
    for (std::size_t r = 0; r < rels_.size(); ++r) {
      const auto& w = rels_[r];
      std::vector<std::int32_t> winv(w.rbegin(), w.rend());
      for (auto& s : winv) s = -s;
      inv_rels_.push_back(winv);
      for (std::size_t o = 0; o < w.size(); ++o) {
        conj_[col(w[o])].push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(o), false});
        conj_[col(winv[o])].push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(o), true});
      }
    }
    for (auto& v : conj_) {
      std::sort(v.begin(), v.end(), [](const Conj& a, const Conj& b) {
        return std::tie(a.rel, a.inverse, a.offset) < std::tie(b.rel, b.inverse, b.offset);
      });
    }
  }

  void process_deductions() {
    if (!felsch_) return;
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      for (const Conj& cj : conj_[x]) {
        if (!alive(c)) break;
        scan_impl(c, cj.inverse ? inv_rels_[cj.rel] : rels_[cj.rel], cj.offset, false);
      }
      const std::int32_t d = alive(c) ? at(c, x) : kUndef;
      if (d == kUndef || !alive(d)) continue;
      for (const Conj& cj : conj_[inv(x)]) {
        if (!alive(d)) break;
        scan_impl(d, cj.inverse ? inv_rels_[cj.rel] : rels_[cj.rel], cj.offset, false);
      }
    }
  }

  bool felsch() {
    std::size_t a = 0;
    for (;;) {
      process_deductions();
      std::size_t x = ncols_;
      while (a < size_) {
        if (alive(static_cast<std::int32_t>(a))) {
          x = 0;
          while (x < ncols_ && at(static_cast<std::int32_t>(a), x) != kUndef) ++x;
          if (x < ncols_) break;
        }
        ++a;
      }
      if (a >= size_) return true;
      const std::int32_t c = static_cast<std::int32_t>(a);
      try {
        define(c, x);
      } catch (const Full&) {
        if (live_ == size_) return false;
        const auto num = compact();
        a = position_after(num, c);
      }
    }
  }

  struct Conj {
    std::uint32_t rel;
    std::uint32_t offset;
    bool inverse;
  };

  std::size_t ncols_;
  std::vector<std::vector<std::int32_t>> rels_;
  std::vector<std::vector<std::int32_t>> inv_rels_;
  EnumerationOptions opts_;
  std::size_t cap_ = 0;
  std::size_t rows_ = 0;
  std::size_t size_ = 0;
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
  std::size_t defined_ = 0;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> p_;
  std::vector<std::int32_t> queue_;
  bool felsch_ = false;
  std::vector<std::pair<std::int32_t, std::size_t>> deductions_;
  std::vector<std::vector<Conj>> conj_;
};

std::vector<std::int32_t> cyclically_reduced_steps(const Word& w) {
  std::vector<std::int32_t> st;
  for (std::int32_t x : w.expand()) {
    if (!st.empty() && st.back() == -x) {
      st.pop_back();
    } else {
      st.push_back(x);
    }
  }
  std::size_t b = 0, e = st.size();
  while (e - b >= 2 && st[b] == -st[e - 1]) {
    ++b;
    --e;
  }
  return {st.begin() + static_cast<std::ptrdiff_t>(b), st.begin() + static_cast<std::ptrdiff_t>(e)};
}

bool table_satisfies(const std::vector<std::vector<Elem>>& act, const std::vector<std::vector<std::int32_t>>& rels) {
  if (act.empty()) return true;
  const std::size_t n = act.front().size();
  std::vector<std::vector<Elem>> invact(act.size(), std::vector<Elem>(n, kNoElem));
  for (std::size_t j = 0; j < act.size(); ++j) {
    for (std::size_t c = 0; c < n; ++c) {
      if (invact[j][act[j][c]] != kNoElem) return false;  // not a permutation
      invact[j][act[j][c]] = static_cast<Elem>(c);
    }
  }
  for (const auto& r : rels) {
    for (std::size_t c = 0; c < n; ++c) {
      Elem x = static_cast<Elem>(c);
      for (std::int32_t s : r) x = s > 0 ? act[static_cast<std::size_t>(s - 1)][x] : invact[static_cast<std::size_t>(-s - 1)][x];
      if (x != c) return false;
    }
  }
  return true;
}

}  // namespace

CosetTable todd_coxeter(const Presentation& p, std::span<const Word> subgroup, const EnumerationOptions& opts) {
  if (opts.max_cosets < 1) throw Error("max_cosets must be at least 1");
  std::vector<std::vector<std::int32_t>> rels;
  for (const Word& w : p.relators) {
    auto r = cyclically_reduced_steps(w);
    if (!r.empty()) rels.push_back(std::move(r));
  }
  // Short relators first: they produce deductions early.
  std::stable_sort(rels.begin(), rels.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::vector<std::int32_t>> sub;
  for (const Word& w : subgroup) {
    auto s = w.expand();
    if (!s.empty()) sub.push_back(std::move(s));
  }

  CosetTable t;
  t.num_generators = p.num_generators();
  Enumerator e(p.num_generators(), rels, opts);
  const bool done = e.run(sub);
  t.max_active = e.peak();
  t.total_defined = e.defined();
  if (!done) {
    t.status = CosetTable::Status::Overflowed;
    return t;
  }
  t.action = e.action_table();
  if (!table_satisfies(t.action, rels)) throw Error("coset enumeration produced an inconsistent table");
  t.status = CosetTable::Status::Complete;
  return t;
}

CosetTable todd_coxeter(const Presentation& p, std::span<const Word> subgroup, std::size_t max_cosets) {
  EnumerationOptions opts;
  opts.max_cosets = max_cosets;
  return todd_coxeter(p, subgroup, opts);
}

std::shared_ptr<DenseGroup> realize(const Presentation& p, const EnumerationOptions& opts) {
  std::vector<Word> subst;
  const Presentation reduced = eliminate_redundant_generators(p, &subst);
  const CosetTable t = todd_coxeter(reduced, {}, opts);
  if (!t.complete()) {
    throw BudgetExceeded("coset enumeration exceeded " + std::to_string(opts.max_cosets) + " cosets");
  }
  const std::size_t n = t.index();
  std::vector<std::vector<Elem>> actions(p.num_generators(), std::vector<Elem>(n));
  std::vector<std::vector<Elem>> inverse(t.action.size(), std::vector<Elem>(n));
  for (std::size_t j = 0; j < t.action.size(); ++j) {
    for (std::size_t c = 0; c < n; ++c) inverse[j][t.action[j][c]] = static_cast<Elem>(c);
  }
  for (std::size_t g = 0; g < p.num_generators(); ++g) {
    for (std::size_t c = 0; c < n; ++c) {
      Elem x = static_cast<Elem>(c);
      for (const Letter& l : subst[g].letters()) {
        const auto& a = l.exp > 0 ? t.action[l.gen] : inverse[l.gen];
        for (std::int32_t i = 0; i < std::abs(l.exp); ++i) x = a[x];
      }
      actions[g][c] = x;
    }
  }
  if (p.num_generators() == 0) return DenseGroup::from_right_regular({});
  // from_right_regular needs the coset action to be regular, which holds
  // for the trivial subgroup.
  return DenseGroup::from_right_regular(actions);
}

std::shared_ptr<DenseGroup> realize(const Presentation& p, std::size_t max_cosets) {
  EnumerationOptions opts;
  opts.max_cosets = max_cosets;
  return realize(p, opts);
}

}  // namespace wedgelab
