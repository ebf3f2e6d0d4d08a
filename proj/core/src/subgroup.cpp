#include "wedgelab/subgroup.hpp"

#include <algorithm>
#include <numeric>

#include "wedgelab/errors.hpp"

namespace wedgelab {

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members, std::vector<Elem> generators)
    : parent_(std::move(parent)),
      members_(std::move(members)),
      gens_(std::move(generators)),
      bits_((parent_->order() + 63) / 64, 0) {
  std::sort(members_.begin(), members_.end());
  for (Elem x : members_) bits_[x >> 6] |= std::uint64_t{1} << (x & 63);
  if (members_.empty() || members_.front() != kIdentity) throw Error("subgroup lacks the identity");
  if (parent_->order() % members_.size() != 0) throw Error("subgroup order does not divide group order");
}

SubgroupBuilder::SubgroupBuilder(GroupPtr parent, std::size_t budget)
    : parent_(std::move(parent)), budget_(budget), bits_((parent_->order() + 63) / 64, 0) {
  insert(kIdentity);
}

void SubgroupBuilder::insert(Elem x) {
  bits_[x >> 6] |= std::uint64_t{1} << (x & 63);
  members_.push_back(x);
}

bool SubgroupBuilder::add(Elem x) {
  if (contains(x)) return false;
  gens_.push_back(x);
  const Group& g = *parent_;
  // The previous subgroup H is members_[0..h); new elements arrive as whole right cosets H*r.
  const std::size_t h = members_.size();
  std::vector<Elem> reps{kIdentity};
  auto add_coset = [&](Elem r) {
    if (members_.size() + h > budget_) {
      throw BudgetExceeded("subgroup closure exceeds " + std::to_string(budget_) + " elements");
    }
    reps.push_back(r);
    for (std::size_t i = 0; i < h; ++i) insert(g.mul(members_[i], r));
  };
  add_coset(x);
  for (std::size_t i = 1; i < reps.size(); ++i) {
    for (Elem s : gens_) {
      const Elem y = g.mul(reps[i], s);
      if (!contains(y)) add_coset(y);
    }
  }
  return true;
}

Subgroup SubgroupBuilder::build() const { return Subgroup(parent_, members_, gens_); }

Subgroup close_generators(const GroupPtr& g, std::span<const Elem> seeds, std::size_t budget) {
  SubgroupBuilder b(g, budget);
  for (Elem s : seeds) b.add(s);
  return b.build();
}

Subgroup normal_closure(const Subgroup& within, std::span<const Elem> seeds) {
  SubgroupBuilder b(within.parent());
  const Group& g = *within.parent();
  for (Elem s : seeds) b.add(s);
  for (std::size_t i = 0; i < b.generators().size(); ++i) {
    const Elem x = b.generators()[i];
    for (Elem t : within.generators()) {
      const Elem c = g.conj(x, t);
      if (!b.contains(c)) b.add(c);
    }
  }
  return b.build();
}

Subgroup whole_group(const GroupPtr& g) {
  std::vector<Elem> all(g->order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(g, std::move(all), g->generators());
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {kIdentity}, {}); }

Subgroup normal_closure(const GroupPtr& g, std::span<const Elem> seeds) {
  SubgroupBuilder b(g);
  for (Elem s : seeds) b.add(s);
  for (std::size_t i = 0; i < b.generators().size(); ++i) {
    const Elem x = b.generators()[i];
    for (Elem t : g->generators()) {
      const Elem c = g->conj(x, t);
      if (!b.contains(c)) b.add(c);
    }
  }
  return b.build();
}

namespace {

std::vector<Elem> generator_commutators(const Group& g, const std::vector<Elem>& gens) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Elem c = g.comm(gens[i], gens[j]);
      if (c != kIdentity) out.push_back(c);
    }
  }
  return out;
}

/// Greedy generating set for a subgroup whose members are already known.
Subgroup from_members(const GroupPtr& g, std::vector<Elem> members) {
  SubgroupBuilder b(g);
  for (Elem x : members) {
    if (!b.contains(x)) b.add(x);
  }
  return Subgroup(g, std::move(members), b.generators());
}

}  // namespace

Subgroup derived_subgroup(const GroupPtr& g) {
  const auto seeds = generator_commutators(*g, g->generators());
  return normal_closure(g, seeds);
}

Subgroup derived_subgroup(const Subgroup& s) {
  const auto seeds = generator_commutators(*s.parent(), s.generators());
  return normal_closure(s, seeds);
}

Subgroup center(const GroupPtr& g) {
  const auto& gens = g->generators();
  std::vector<Elem> members;
  for (Elem x = 0; x < g->order(); ++x) {
    bool central = true;
    for (Elem s : gens) {
      if (g->mul(x, s) != g->mul(s, x)) {
        central = false;
        break;
      }
    }
    if (central) members.push_back(x);
  }
  return from_members(g, std::move(members));
}

Subgroup second_center(const GroupPtr& g, const Subgroup& z) {
  const auto& gens = g->generators();
  std::vector<Elem> members;
  for (Elem x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (Elem s : gens) {
      if (!z.contains(g->comm(x, s))) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(x);
  }
  return from_members(g, std::move(members));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> members;
  for (Elem x : a.members()) {
    if (b.contains(x)) members.push_back(x);
  }
  return from_members(a.parent(), std::move(members));
}

bool is_normal(const Subgroup& n) {
  const Group& g = *n.parent();
  for (Elem x : n.generators()) {
    for (Elem t : g.generators()) {
      if (!n.contains(g.conj(x, t))) return false;
    }
  }
  return true;
}

bool is_abelian(const GroupPtr& g) { return generator_commutators(*g, g->generators()).empty(); }

bool is_abelian(const Subgroup& s) { return generator_commutators(*s.parent(), s.generators()).empty(); }

int derived_length(const GroupPtr& g) {
  Subgroup cur = whole_group(g);
  int len = 0;
  while (!cur.is_trivial()) {
    Subgroup next = derived_subgroup(cur);
    if (next.order() == cur.order()) return -1;
    cur = std::move(next);
    ++len;
  }
  return len;
}

std::vector<std::uint32_t> element_orders(const Group& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> ord(n, 0);
  ord[kIdentity] = 1;
  std::vector<Elem> powers;
  for (Elem x = 1; x < n; ++x) {
    if (ord[x]) continue;
    powers.clear();
    powers.push_back(kIdentity);
    for (Elem y = x; y != kIdentity; y = g.mul(y, x)) powers.push_back(y);
    const std::uint32_t k = static_cast<std::uint32_t>(powers.size());
    for (std::uint32_t i = 1; i < k; ++i) {
      if (!ord[powers[i]]) ord[powers[i]] = k / std::gcd(i, k);
    }
  }
  return ord;
}

ConjugacyClasses conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  std::vector<Elem> root(n);
  std::iota(root.begin(), root.end(), Elem{0});
  auto find = [&](Elem x) {
    while (root[x] != x) {
      root[x] = root[root[x]];
      x = root[x];
    }
    return x;
  };
  for (Elem x = 0; x < n; ++x) {
    for (Elem s : g.generators()) {
      Elem a = find(x), b = find(g.conj(x, s));
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      root[b] = a;
    }
  }
  ConjugacyClasses cc;
  cc.class_of.assign(n, 0);
  std::vector<std::uint32_t> index(n, 0xFFFFFFFFu);
  for (Elem x = 0; x < n; ++x) {
    const Elem r = find(x);
    if (index[r] == 0xFFFFFFFFu) {
      index[r] = static_cast<std::uint32_t>(cc.sizes.size());
      cc.sizes.push_back(0);
    }
    cc.class_of[x] = index[r];
    ++cc.sizes[index[r]];
  }
  return cc;
}

OrderStats order_stats(const GroupPtr& g) {
  OrderStats st;
  for (std::uint32_t o : element_orders(*g)) {
    ++st.order_histogram[o];
    st.exponent = std::lcm(st.exponent, std::uint64_t{o});
  }
  for (std::uint32_t s : conjugacy_classes(*g).sizes) ++st.class_sizes[s];
  return st;
}

EmbeddedGroup subgroup_as_group(const Subgroup& s, std::size_t dense_cutoff) {
  const Group& g = *s.parent();
  const std::size_t n = s.order();
  if (n > dense_cutoff) {
    throw BudgetExceeded("subgroup of order " + std::to_string(n) + " exceeds dense cutoff");
  }
  EmbeddedGroup out;
  out.from_parent.assign(g.order(), kNoElem);
  out.to_parent.reserve(n);
  out.to_parent.push_back(kIdentity);
  out.from_parent[kIdentity] = 0;
  for (std::size_t head = 0; head < out.to_parent.size(); ++head) {
    for (Elem t : s.generators()) {
      const Elem y = g.mul(out.to_parent[head], t);
      if (out.from_parent[y] == kNoElem) {
        out.from_parent[y] = static_cast<Elem>(out.to_parent.size());
        out.to_parent.push_back(y);
      }
    }
  }
  if (out.to_parent.size() != n) throw Error("subgroup generators do not generate its members");
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = out.from_parent[g.mul(out.to_parent[a], out.to_parent[b])];
    }
  }
  std::vector<Elem> gens;
  for (Elem t : s.generators()) gens.push_back(out.from_parent[t]);
  out.group = std::make_shared<DenseGroup>(n, std::move(table), std::move(gens));
  return out;
}

}  // namespace wedgelab
