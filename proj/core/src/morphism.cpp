#include "wedgelab/morphism.hpp"

#include "wedgelab/errors.hpp"

namespace wedgelab {

Elem Morphism::apply(Elem x) const {
  if (full_map) return (*full_map)[x];
  if (formula) return formula(x);
  throw Error("morphism has neither a table nor a formula");
}

Morphism extend_to_morphism(const GroupPtr& source, const GroupPtr& target, std::vector<Elem> images) {
  const auto& gens = source->generators();
  if (images.size() != gens.size()) throw NotAMorphism("generator image count mismatch");
  std::vector<Elem> map(source->order(), kNoElem);
  std::vector<Elem> queue;
  queue.reserve(source->order());
  map[kIdentity] = kIdentity;
  queue.push_back(kIdentity);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Elem y = source->mul(x, gens[j]);
      const Elem fy = target->mul(map[x], images[j]);
      if (map[y] == kNoElem) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        throw NotAMorphism("generator images violate a relation at element " + std::to_string(y));
      }
    }
  }
  if (queue.size() != source->order()) throw Error("source generators do not generate the group");
  Morphism f;
  f.source = source;
  f.target = target;
  f.gen_images = std::move(images);
  f.full_map = std::make_shared<const std::vector<Elem>>(std::move(map));
  return f;
}

Morphism morphism_from_formula(const GroupPtr& source, const GroupPtr& target, std::function<Elem(Elem)> fn) {
  Morphism f;
  f.source = source;
  f.target = target;
  f.formula = std::move(fn);
  for (Elem s : source->generators()) f.gen_images.push_back(f.formula(s));
  return f;
}

Morphism morphism_from_table(const GroupPtr& source, const GroupPtr& target, std::vector<Elem> table) {
  Morphism f;
  f.source = source;
  f.target = target;
  for (Elem s : source->generators()) f.gen_images.push_back(table[s]);
  f.full_map = std::make_shared<const std::vector<Elem>>(std::move(table));
  return f;
}

std::string MorphismFailure::describe() const {
  return "f(x*s) != f(x)*f(s) at x=" + std::to_string(element) + ", generator #" + std::to_string(generator);
}

std::optional<MorphismFailure> first_morphism_failure(const Morphism& f) {
  const auto& gens = f.source->generators();
  if (f.apply(kIdentity) != kIdentity) return MorphismFailure{kIdentity, 0};
  std::vector<Elem> gi(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) gi[j] = f.apply(gens[j]);
  for (Elem x = 0; x < f.source->order(); ++x) {
    const Elem fx = f.apply(x);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (f.apply(f.source->mul(x, gens[j])) != f.target->mul(fx, gi[j])) return MorphismFailure{x, j};
    }
  }
  return std::nullopt;
}

bool verify_morphism(const Morphism& f) { return !first_morphism_failure(f).has_value(); }

void require_morphism(const Morphism& f) {
  if (auto fail = first_morphism_failure(f)) throw NotAMorphism(fail->describe());
}

Morphism tabulate(const Morphism& f) {
  if (f.full_map) return f;
  std::vector<Elem> map(f.source->order());
  for (Elem x = 0; x < map.size(); ++x) map[x] = f.formula(x);
  Morphism g = f;
  g.full_map = std::make_shared<const std::vector<Elem>>(std::move(map));
  return g;
}

Subgroup kernel(const Morphism& f) {
  SubgroupBuilder b(f.source);
  std::vector<Elem> members;
  for (Elem x = 0; x < f.source->order(); ++x) {
    if (f.apply(x) != kIdentity) continue;
    members.push_back(x);
    if (!b.contains(x)) b.add(x);
  }
  return Subgroup(f.source, std::move(members), b.generators());
}

Subgroup image(const Morphism& f) {
  std::vector<Elem> imgs;
  for (Elem s : f.source->generators()) imgs.push_back(f.apply(s));
  return close_generators(f.target, imgs);
}

bool is_injective(const Morphism& f) { return kernel(f).is_trivial(); }

bool is_bijective(const Morphism& f) {
  return f.source->order() == f.target->order() && is_injective(f);
}

Morphism compose(const Morphism& f, const Morphism& g) {
  Morphism h;
  h.source = f.source;
  h.target = g.target;
  for (Elem s : f.source->generators()) h.gen_images.push_back(g.apply(f.apply(s)));
  if (f.full_map && g.full_map) {
    std::vector<Elem> map(f.source->order());
    for (Elem x = 0; x < map.size(); ++x) map[x] = (*g.full_map)[(*f.full_map)[x]];
    h.full_map = std::make_shared<const std::vector<Elem>>(std::move(map));
  } else {
    h.formula = [f, g](Elem x) { return g.apply(f.apply(x)); };
  }
  return h;
}

QuotientGroup::QuotientGroup(GroupPtr parent, std::vector<Elem> label, std::vector<Elem> reps,
                             std::vector<Elem> gens)
    : Group(reps.size(), std::move(gens)),
      parent_(std::move(parent)),
      label_(std::move(label)),
      reps_(std::move(reps)) {}

QuotientResult quotient(const GroupPtr& g, const Subgroup& n, std::size_t dense_cutoff) {
  if (!is_normal(n)) throw NotNormal("subgroup is not normal");
  const std::size_t size = g->order();
  // Raw coset labelling in element order, then renumbered breadth-first.
  std::vector<Elem> raw(size, kNoElem);
  std::vector<Elem> raw_rep;
  for (Elem x = 0; x < size; ++x) {
    if (raw[x] != kNoElem) continue;
    const Elem c = static_cast<Elem>(raw_rep.size());
    raw_rep.push_back(x);
    for (Elem m : n.members()) raw[g->mul(x, m)] = c;
  }
  const std::size_t q = raw_rep.size();
  std::vector<Elem> renum(q, kNoElem);
  std::vector<Elem> reps;
  reps.reserve(q);
  renum[raw[kIdentity]] = 0;
  reps.push_back(kIdentity);
  for (std::size_t head = 0; head < reps.size(); ++head) {
    for (Elem s : g->generators()) {
      const Elem y = g->mul(reps[head], s);
      if (renum[raw[y]] == kNoElem) {
        renum[raw[y]] = static_cast<Elem>(reps.size());
        reps.push_back(y);
      }
    }
  }
  std::vector<Elem> label(size);
  for (Elem x = 0; x < size; ++x) label[x] = renum[raw[x]];
  std::vector<Elem> gens;
  for (Elem s : g->generators()) gens.push_back(label[s]);

  auto qg = std::make_shared<QuotientGroup>(g, label, reps, gens);
  QuotientResult out;
  out.representatives = reps;
  out.group = q <= dense_cutoff ? GroupPtr(materialize(qg, dense_cutoff)) : GroupPtr(qg);
  out.projection = morphism_from_table(g, out.group, std::move(label));
  return out;
}

}  // namespace wedgelab
