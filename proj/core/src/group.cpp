#include "wedgelab/group.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "wedgelab/errors.hpp"

namespace wedgelab {

namespace {

const char* family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Cyclic: return "cyclic";
    case FamilyKind::Abelian: return "abelian";
    case FamilyKind::Dihedral: return "dihedral";
    case FamilyKind::Quaternion: return "quaternion";
    case FamilyKind::Symmetric: return "symmetric";
    case FamilyKind::Alternating: return "alternating";
    case FamilyKind::Extraspecial: return "extraspecial";
    case FamilyKind::Holder: return "holder";
    case FamilyKind::Product: return "product";
  }
  return "?";
}

}  // namespace

std::string FamilyTag::describe() const {
  std::ostringstream os;
  if (kind == FamilyKind::Product) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << '*';
      os << factors[i]->describe();
    }
    return os.str();
  }
  os << family_name(kind) << ':';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) os << ',';
    os << params[i];
  }
  return os.str();
}

Group::Group(std::size_t order, std::vector<Elem> generators)
    : order_(order), gens_(std::move(generators)) {
  if (order_ == 0) throw Error("group order must be positive");
  if (order_ > 0xFFFFFFFEull) throw BudgetExceeded("group order exceeds 32-bit element ids");
  if (gens_.empty()) gens_.push_back(kIdentity);
}

std::string Group::describe() const {
  if (family_) return family_->describe();
  if (!label_.empty()) return label_;
  return "group of order " + std::to_string(order_);
}

Elem Group::pow(Elem x, std::int64_t k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Elem result = kIdentity;
  Elem base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

Elem Group::element_order(Elem x) const {
  Elem y = x;
  Elem n = 1;
  while (y != kIdentity) {
    y = mul(y, x);
    ++n;
  }
  return n;
}

DenseGroup::DenseGroup(std::size_t n, std::vector<Elem> table, std::vector<Elem> generators)
    : Group(n, std::move(generators)), table_(std::move(table)), inverse_(n, kNoElem) {
  if (table_.size() != n * n) throw Error("Cayley table has wrong size");
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a] != a || table_[a * n] != a) throw Error("element 0 is not the identity");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (inverse_[a] != kNoElem) continue;
    const Elem* row = &table_[a * n];
    for (std::size_t b = 0; b < n; ++b) {
      if (row[b] == kIdentity) {
        inverse_[a] = static_cast<Elem>(b);
        inverse_[b] = static_cast<Elem>(a);
        break;
      }
    }
    if (inverse_[a] == kNoElem) throw Error("Cayley table row has no identity entry");
  }
}

std::shared_ptr<DenseGroup> DenseGroup::from_right_regular(const std::vector<std::vector<Elem>>& actions,
                                                           std::vector<Elem>* relabel) {
  if (actions.empty()) {
    if (relabel) relabel->assign(1, 0);
    return std::make_shared<DenseGroup>(1, std::vector<Elem>{0}, std::vector<Elem>{0});
  }
  const std::size_t n = actions.front().size();
  const std::size_t k = actions.size();
  // Breadth-first numbering of points from point 0, remembering the spanning tree.
  std::vector<Elem> id_of(n, kNoElem);
  std::vector<Elem> point_of;
  std::vector<Elem> parent;
  std::vector<std::uint32_t> via;
  point_of.reserve(n);
  id_of[0] = 0;
  point_of.push_back(0);
  parent.push_back(kNoElem);
  via.push_back(0);
  for (std::size_t head = 0; head < point_of.size(); ++head) {
    const Elem p = point_of[head];
    for (std::size_t j = 0; j < k; ++j) {
      const Elem q = actions[j][p];
      if (id_of[q] == kNoElem) {
        id_of[q] = static_cast<Elem>(point_of.size());
        point_of.push_back(q);
        parent.push_back(static_cast<Elem>(head));
        via.push_back(static_cast<std::uint32_t>(j));
      }
    }
  }
  if (point_of.size() != n) throw Error("right-regular action is not transitive");

  // x_a * x_b = (x_a * x_parent(b)) * s_via(b); row entries are computed in id order.
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    Elem* row = &table[a * n];
    row[0] = static_cast<Elem>(a);
    for (std::size_t b = 1; b < n; ++b) {
      const Elem prev_point = point_of[row[parent[b]]];
      row[b] = id_of[actions[via[b]][prev_point]];
    }
  }
  std::vector<Elem> gens(k);
  for (std::size_t j = 0; j < k; ++j) gens[j] = id_of[actions[j][0]];
  if (relabel) *relabel = id_of;
  return std::make_shared<DenseGroup>(n, std::move(table), std::move(gens));
}

std::shared_ptr<DenseGroup> materialize(const GroupPtr& g, std::size_t dense_cutoff) {
  if (auto d = std::dynamic_pointer_cast<const DenseGroup>(g)) {
    return std::const_pointer_cast<DenseGroup>(d);
  }
  const std::size_t n = g->order();
  if (n > dense_cutoff) {
    throw BudgetExceeded("cannot materialize group of order " + std::to_string(n) +
                         " above dense cutoff " + std::to_string(dense_cutoff));
  }
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = g->mul(static_cast<Elem>(a), static_cast<Elem>(b));
    }
  }
  auto d = std::make_shared<DenseGroup>(n, std::move(table), g->generators());
  d->set_family(g->family_ptr());
  d->set_label(g->label());
  return d;
}

namespace {

std::vector<Elem> product_generators(const Group& l, const Group& r) {
  std::vector<Elem> gens;
  const std::size_t m = r.order();
  for (Elem a : l.generators()) {
    if (a != kIdentity) gens.push_back(static_cast<Elem>(a * m));
  }
  for (Elem b : r.generators()) {
    if (b != kIdentity) gens.push_back(b);
  }
  return gens;
}

}  // namespace

ProductGroup::ProductGroup(GroupPtr left, GroupPtr right)
    : Group(left->order() * right->order(), product_generators(*left, *right)),
      left_(std::move(left)),
      right_(std::move(right)) {
  auto lf = left_->family_ptr();
  auto rf = right_->family_ptr();
  if (lf && rf) {
    auto tag = std::make_shared<FamilyTag>();
    tag->kind = FamilyKind::Product;
    for (const auto& f : {lf, rf}) {
      if (f->kind == FamilyKind::Product) {
        tag->factors.insert(tag->factors.end(), f->factors.begin(), f->factors.end());
      } else {
        tag->factors.push_back(f);
      }
    }
    set_family(tag);
  }
  set_label(left_->describe() + "*" + right_->describe());
}

Elem ProductGroup::mul(Elem a, Elem b) const {
  return pack(left_->mul(left_of(a), left_of(b)), right_->mul(right_of(a), right_of(b)));
}

Elem ProductGroup::inv(Elem a) const { return pack(left_->inv(left_of(a)), right_->inv(right_of(a))); }

GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2) {
  return std::make_shared<ProductGroup>(g1, g2);
}

bool check_group_axioms(const Group& g, std::size_t samples, std::size_t exhaustive_limit) {
  const std::size_t n = g.order();
  auto ok_pair = [&](Elem a) {
    return g.mul(a, kIdentity) == a && g.mul(kIdentity, a) == a && g.mul(a, g.inv(a)) == kIdentity &&
           g.mul(g.inv(a), a) == kIdentity;
  };
  if (n <= exhaustive_limit) {
    for (Elem a = 0; a < n; ++a) {
      if (!ok_pair(a)) return false;
      for (Elem b = 0; b < n; ++b) {
        const Elem ab = g.mul(a, b);
        if (ab >= n) return false;
        for (Elem c = 0; c < n; ++c) {
          if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) return false;
        }
      }
    }
    return true;
  }
  std::mt19937_64 rng(0x5eedu + n);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (std::size_t i = 0; i < samples; ++i) {
    const Elem a = pick(rng), b = pick(rng), c = pick(rng);
    if (!ok_pair(a)) return false;
    const Elem ab = g.mul(a, b);
    if (ab >= n) return false;
    if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) return false;
  }
  return true;
}

}  // namespace wedgelab
