#include "wedgelab/automorphisms.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "wedgelab/errors.hpp"
#include "wedgelab/functors.hpp"
#include "wedgelab/subgroup.hpp"
#include "wedgelab/wedge.hpp"

namespace wedgelab {

AutSearchBudget AutSearchBudget::from(const Budgets& b, SearchMode mode) {
  AutSearchBudget out;
  out.max_nodes = b.search_nodes;
  out.millis = b.search_millis;
  out.mode = mode;
  return out;
}

std::string to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

std::vector<Elem> greedy_generators(const Group& g, const std::vector<std::uint32_t>& order_of, std::size_t cap) {
  std::vector<Elem> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), Elem{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) { return order_of[a] > order_of[b]; });
  GroupPtr view(&g, [](const Group*) {});
  SubgroupBuilder sb(view);
  std::vector<Elem> out;
  for (Elem x : by_order) {
    if (sb.order() == g.order() || out.size() > cap) break;
    if (x != kIdentity && !sb.contains(x)) {
      sb.add(x);
      out.push_back(x);
    }
  }
  return out;
}

class Searcher {
 public:
  Searcher(const GroupPtr& src, const GroupPtr& tgt, std::span<const Elem> gens, const AutSearchBudget& budget,
           const ImageFilter& filter, const std::function<bool(const Morphism&)>& visit)
      : g_(src), t_(tgt), x_(gens.begin(), gens.end()), budget_(budget), visit_(visit) {
    const auto order_src = element_orders(*g_);
    const auto cc_src = conjugacy_classes(*g_);
    const bool same = g_ == t_;
    const auto order_tgt = same ? order_src : element_orders(*t_);
    const auto cc_tgt = same ? cc_src : conjugacy_classes(*t_);
    cands_.resize(x_.size());
    for (std::size_t i = 0; i < x_.size(); ++i) {
      const auto ox = order_src[x_[i]];
      const auto cx = cc_src.sizes[cc_src.class_of[x_[i]]];
      for (Elem y = 0; y < t_->order(); ++y) {
        if (order_tgt[y] != ox || cc_tgt.sizes[cc_tgt.class_of[y]] != cx) continue;
        if (filter && !filter(i, y)) continue;
        cands_[i].push_back(y);
      }
    }
    f_.assign(g_->order(), kNoElem);
    used_.assign(t_->order(), 0);
    y_.assign(x_.size(), kNoElem);
    f_[kIdentity] = kIdentity;
    used_[kIdentity] = 1;
    members_.push_back(kIdentity);
    start_ = std::chrono::steady_clock::now();
  }

  AutSearchStats run() {
    if (x_.empty()) {
      if (g_->order() == 1 && t_->order() == 1) {
        ++stats_.visited;
        visit_(morphism_from_table(g_, t_, f_));
      }
      stats_.complete = true;
      return stats_;
    }
    const bool finished = descend(0);
    stats_.complete = finished || stopped_;
    return stats_;
  }

 private:
  // Returns false when the budget ran out.
  bool descend(std::size_t i) {
    for (Elem y : cands_[i]) {
      if (stopped_) return true;
      if (++stats_.nodes > budget_.max_nodes) return false;
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
      if (static_cast<std::uint64_t>(ms.count()) > budget_.millis) return false;
      y_[i] = y;
      const std::size_t mark = members_.size();
      const bool ok = extend(i);
      if (ok) {
        if (i + 1 == x_.size()) {
          if (members_.size() == g_->order() && g_->order() == t_->order()) {
            ++stats_.visited;
            if (!visit_(morphism_from_table(g_, t_, f_))) stopped_ = true;
          }
        } else if (!descend(i + 1)) {
          undo(mark);
          return false;
        }
      }
      undo(mark);
    }
    return true;
  }

  // Breadth-first extension of the partial map to <x_0..x_i>, checking every
  // generator edge and injectivity.
  bool extend(std::size_t i) {
    const Group& G = *g_;
    const Group& T = *t_;
    for (std::size_t head = 0; head < members_.size(); ++head) {
      const Elem a = members_[head];
      for (std::size_t j = 0; j <= i; ++j) {
        const Elem b = G.mul(a, x_[j]);
        const Elem fb = T.mul(f_[a], y_[j]);
        if (f_[b] == kNoElem) {
          if (used_[fb]) return false;
          f_[b] = fb;
          used_[fb] = 1;
          members_.push_back(b);
        } else if (f_[b] != fb) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (members_.size() > mark) {
      const Elem b = members_.back();
      members_.pop_back();
      used_[f_[b]] = 0;
      f_[b] = kNoElem;
    }
  }

  GroupPtr g_, t_;
  std::vector<Elem> x_;
  AutSearchBudget budget_;
  const std::function<bool(const Morphism&)>& visit_;
  std::vector<std::vector<Elem>> cands_;
  std::vector<Elem> f_, y_, members_;
  std::vector<char> used_;
  AutSearchStats stats_;
  bool stopped_ = false;
  std::chrono::steady_clock::time_point start_;
};

ImageFilter ai_filter(const GroupPtr& g, std::span<const Elem> gens) {
  auto d = std::make_shared<Subgroup>(derived_subgroup(g));
  std::vector<Elem> x(gens.begin(), gens.end());
  return [g, d, x](std::size_t i, Elem y) { return d->contains(g->mul(y, x[i])); };
}

}  // namespace

std::vector<Elem> search_generators(const Group& g, std::size_t cap) {
  const auto order_of = element_orders(g);
  auto out = greedy_generators(g, order_of, cap);
  if (out.size() > cap) out = greedy_generators(g, order_of, g.order());
  return out;
}

AutSearchStats for_each_automorphism(const GroupPtr& g, std::span<const Elem> gens, const AutSearchBudget& budget,
                                     const ImageFilter& filter, const std::function<bool(const Morphism&)>& visit) {
  return for_each_isomorphism(g, g, gens, budget, filter, visit);
}

AutSearchStats for_each_isomorphism(const GroupPtr& src, const GroupPtr& tgt, std::span<const Elem> gens,
                                    const AutSearchBudget& budget, const ImageFilter& filter,
                                    const std::function<bool(const Morphism&)>& visit) {
  Searcher s(src, tgt, gens, budget, filter, visit);
  return s.run();
}

AutomorphismList automorphisms(const GroupPtr& g, const AutSearchBudget& budget) {
  AutomorphismList out;
  const auto gens = search_generators(*g);
  const auto st = for_each_automorphism(g, gens, budget, {}, [&](const Morphism& a) {
    out.list.push_back(a);
    return budget.mode == SearchMode::Exhaust;
  });
  out.complete = st.complete;
  out.nodes = st.nodes;
  return out;
}

bool inverts_all(const Morphism& alpha, std::span<const Elem> xs) {
  for (Elem x : xs) {
    if (alpha(x) != alpha.target->inv(x)) return false;
  }
  return true;
}

AutQuery has_ai(const GroupPtr& g, const AutSearchBudget& budget) {
  AutQuery q;
  const auto gens = search_generators(*g);
  const auto st = for_each_automorphism(g, gens, budget, ai_filter(g, gens), [&](const Morphism& a) {
    q.witness = a;
    return false;
  });
  q.nodes = st.nodes;
  if (q.witness) {
    q.answer = Answer::Yes;
    q.certificate = "search";
  } else if (st.complete) {
    q.answer = Answer::No;
    q.certificate = "exhaustive search";
  }
  return q;
}

AutQuery has_gi(const GroupPtr& g, std::span<const Elem> xs) {
  AutQuery q;
  q.certificate = "unique candidate";
  std::vector<Elem> images;
  for (Elem x : xs) images.push_back(g->inv(x));
  const Subgroup span = close_generators(g, xs);
  if (!span.is_whole()) throw ParameterViolation("the given elements do not generate the group");
  std::vector<Elem> table(g->order(), kNoElem);
  std::vector<Elem> queue{kIdentity};
  table[kIdentity] = kIdentity;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem a = queue[head];
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const Elem b = g->mul(a, xs[j]);
      const Elem fb = g->mul(table[a], images[j]);
      if (table[b] == kNoElem) {
        table[b] = fb;
        queue.push_back(b);
      } else if (table[b] != fb) {
        q.answer = Answer::No;
        return q;
      }
    }
  }
  Morphism a = morphism_from_table(g, g, std::move(table));
  if (!is_bijective(a)) {
    q.answer = Answer::No;
    return q;
  }
  q.answer = Answer::Yes;
  q.witness = std::move(a);
  return q;
}

AutQuery ai_lift_inverting_M(const CoverData& c, const AutSearchBudget& budget) {
  AutQuery q;
  const GroupPtr& h = c.h;
  const auto gens = search_generators(*h);
  const std::vector<Elem> mgens = c.m.generators();
  const auto st = for_each_automorphism(h, gens, budget, ai_filter(h, gens), [&](const Morphism& a) {
    if (!inverts_all(a, mgens)) return true;
    q.witness = a;
    return false;
  });
  q.nodes = st.nodes;
  if (q.witness) {
    q.answer = Answer::Yes;
    q.certificate = "search";
  } else if (st.complete) {
    q.answer = Answer::No;
    q.certificate = "exhaustive search";
  }
  return q;
}

bool class_two_lift_obstruction(const CoverData& c) {
  const GroupPtr& h = c.h;
  const Subgroup z = center(h);
  const Subgroup d = derived_subgroup(h);
  for (Elem x : d.generators()) {
    if (!z.contains(x)) return false;
  }
  for (Elem m : c.m.generators()) {
    if (h->mul(m, m) != kIdentity) return true;
  }
  return false;
}

Morphism descend_to_quotient(const CoverData& c, const Morphism& alpha) {
  for (Elem m : c.m.generators()) {
    if (!c.m.contains(alpha(m))) throw HypothesisFailed("automorphism does not preserve M");
  }
  const GroupPtr& g = c.proj.target;
  const std::vector<Elem> lifts = cover_lifts(c);
  std::vector<Elem> images;
  for (Elem s : g->generators()) images.push_back(c.proj(alpha(lifts[s])));
  try {
    return extend_to_morphism(g, g, images);
  } catch (const NotAMorphism&) {
    throw HypothesisFailed("induced map on the quotient is not a morphism");
  }
}

HolderCriterion holder_ai_criterion(std::int64_t n, std::int64_t m, std::int64_t r) {
  check_holder_parameters(n, m, r);
  HolderCriterion out;
  const std::int64_t rm = m == 1 ? 0 : r % m;
  const bool abelian = m == 1 || rm == 1 % m;
  out.has_ai = abelian || (n % 2 == 0 && (r * r) % m == 1 % m && std::gcd(r + 1, m) != 1);
  const std::int64_t order = n * m;
  out.square_free = true;
  for (std::int64_t p = 2; p * p <= order; ++p) {
    if (order % (p * p) == 0) out.square_free = false;
  }
  if (out.square_free) {
    // The Hall 2'-subgroup is <a, b^(2^k)> with 2^k the 2-part of n; it is
    // cyclic exactly when b^(2^k) centralises a.
    std::int64_t two = 1;
    while (n % (two * 2) == 0) two *= 2;
    std::int64_t x = 1 % std::max<std::int64_t>(m, 1);
    for (std::int64_t i = 0; i < two; ++i) x = x * r % std::max<std::int64_t>(m, 1);
    out.cyclic_odd_hall = m == 1 || x == 1 % m;
  }
  return out;
}

}  // namespace wedgelab
