#include "wedgelab/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "wedgelab/abelian.hpp"
#include "wedgelab/errors.hpp"

namespace wedgelab {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::size_t product_of(const std::vector<std::uint64_t>& v) {
  std::size_t n = 1;
  for (auto d : v) {
    if (d == 0) throw ParameterViolation("cyclic factor must be positive");
    if (n > (std::size_t{1} << 40) / d) throw BudgetExceeded("group order too large");
    n *= d;
  }
  return n;
}

std::vector<Elem> unit_generators(const std::vector<std::uint64_t>& d) {
  std::vector<Elem> gens;
  std::uint64_t stride = 1;
  for (auto di : d) {
    gens.push_back(static_cast<Elem>(stride));
    stride *= di;
  }
  return gens;
}

FamilyPtr make_tag(FamilyKind kind, std::vector<std::int64_t> params) {
  auto t = std::make_shared<FamilyTag>();
  t->kind = kind;
  t->params = std::move(params);
  return t;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

}  // namespace

// ------------------------------------------------------------ AbelianGroup

AbelianGroup::AbelianGroup(std::vector<std::uint64_t> factors)
    : Group(product_of(factors), unit_generators(factors)), d_(std::move(factors)) {}

Elem AbelianGroup::mul(Elem a, Elem b) const {
  std::uint64_t out = 0, stride = 1;
  for (auto d : d_) {
    out += ((a % d + b % d) % d) * stride;
    a = static_cast<Elem>(a / d);
    b = static_cast<Elem>(b / d);
    stride *= d;
  }
  return static_cast<Elem>(out);
}

Elem AbelianGroup::inv(Elem a) const {
  std::uint64_t out = 0, stride = 1;
  for (auto d : d_) {
    out += ((d - a % d) % d) * stride;
    a = static_cast<Elem>(a / d);
    stride *= d;
  }
  return static_cast<Elem>(out);
}

std::vector<std::int64_t> AbelianGroup::coords(Elem x) const {
  std::vector<std::int64_t> c;
  for (auto d : d_) {
    c.push_back(static_cast<std::int64_t>(x % d));
    x = static_cast<Elem>(x / d);
  }
  return c;
}

Elem AbelianGroup::element(const std::vector<std::int64_t>& c) const {
  std::uint64_t out = 0, stride = 1;
  for (std::size_t i = 0; i < d_.size(); ++i) {
    out += static_cast<std::uint64_t>(mod(c[i], static_cast<std::int64_t>(d_[i]))) * stride;
    stride *= d_[i];
  }
  return static_cast<Elem>(out);
}

// --------------------------------------------------------- MetacyclicGroup

MetacyclicGroup::MetacyclicGroup(std::int64_t m, std::int64_t k, std::int64_t r, std::int64_t s)
    : Group(static_cast<std::size_t>(m * k), {m > 1 ? Elem{1} : Elem{0}, k > 1 ? static_cast<Elem>(m) : Elem{0}}),
      m_(m),
      k_(k),
      r_(mod(r, m)),
      s_(mod(s, m)) {
  rpow_.resize(static_cast<std::size_t>(k));
  std::int64_t x = 1 % m;
  for (std::int64_t l = 0; l < k; ++l) {
    rpow_[static_cast<std::size_t>(l)] = x;
    x = x * r_ % m;
  }
}

Elem MetacyclicGroup::mul(Elem a, Elem b) const {
  const std::int64_t j1 = a / m_, i1 = a % m_, j2 = b / m_, i2 = b % m_;
  std::int64_t j = j1 + j2;
  std::int64_t i = i1 * rpow_[static_cast<std::size_t>(j2)] + i2;
  if (j >= k_) {
    j -= k_;
    i += s_;
  }
  return static_cast<Elem>(j * m_ + i % m_);
}

Elem MetacyclicGroup::inv(Elem a) const {
  const std::int64_t j = a / m_, i = a % m_;
  const std::int64_t jp = (k_ - j) % k_;
  std::int64_t ip = -i * rpow_[static_cast<std::size_t>(jp)];
  if (j + jp >= k_) ip -= s_;
  return static_cast<Elem>(jp * m_ + mod(ip, m_));
}

// ----------------------------------------------------------- ClassTwoGroup

ClassTwoGroup::ClassTwoGroup(std::vector<std::uint64_t> top, std::vector<std::uint64_t> central,
                             std::vector<std::vector<std::vector<std::int64_t>>> commutators)
    : Group(product_of(top) * product_of(central), unit_generators(top)),
      top_(std::move(top)),
      central_(std::move(central)) {
  const std::size_t t = top_.size(), c = central_.size();
  top_size_ = product_of(top_);
  comm_.assign(t * t * c, 0);
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      for (std::size_t k = 0; k < c; ++k) {
        const std::int64_t v = mod(commutators[j][i][k], static_cast<std::int64_t>(central_[k]));
        // x_j is defined mod top_j and y_i mod top_i, so the coefficient must be killed by both.
        if ((v * static_cast<std::int64_t>(top_[j])) % static_cast<std::int64_t>(central_[k]) != 0 ||
            (v * static_cast<std::int64_t>(top_[i])) % static_cast<std::int64_t>(central_[k]) != 0) {
          throw ParameterViolation("commutator coefficient incompatible with generator orders");
        }
        comm_[(j * t + i) * c + k] = v;
      }
    }
  }
}

void ClassTwoGroup::decode(Elem a, std::int64_t* x, std::int64_t* z) const {
  std::uint64_t v = a;
  for (std::size_t i = 0; i < top_.size(); ++i) {
    x[i] = static_cast<std::int64_t>(v % top_[i]);
    v /= top_[i];
  }
  for (std::size_t k = 0; k < central_.size(); ++k) {
    z[k] = static_cast<std::int64_t>(v % central_[k]);
    v /= central_[k];
  }
}

Elem ClassTwoGroup::encode(const std::int64_t* x, const std::int64_t* z) const {
  std::uint64_t v = 0, stride = 1;
  for (std::size_t i = 0; i < top_.size(); ++i) {
    v += static_cast<std::uint64_t>(mod(x[i], static_cast<std::int64_t>(top_[i]))) * stride;
    stride *= top_[i];
  }
  for (std::size_t k = 0; k < central_.size(); ++k) {
    v += static_cast<std::uint64_t>(mod(z[k], static_cast<std::int64_t>(central_[k]))) * stride;
    stride *= central_[k];
  }
  return static_cast<Elem>(v);
}

Elem ClassTwoGroup::mul(Elem a, Elem b) const {
  const std::size_t t = top_.size(), c = central_.size();
  std::int64_t x[32], z[64], y[32], w[64];
  decode(a, x, z);
  decode(b, y, w);
  for (std::size_t k = 0; k < c; ++k) z[k] += w[k];
  for (std::size_t j = 1; j < t; ++j) {
    if (!x[j]) continue;
    for (std::size_t i = 0; i < j; ++i) {
      const std::int64_t f = x[j] * y[i];
      if (!f) continue;
      const std::int64_t* cc = &comm_[(j * t + i) * c];
      for (std::size_t k = 0; k < c; ++k) z[k] += f * cc[k];
    }
  }
  for (std::size_t i = 0; i < t; ++i) x[i] += y[i];
  return encode(x, z);
}

Elem ClassTwoGroup::inv(Elem a) const {
  const std::size_t t = top_.size(), c = central_.size();
  std::int64_t x[32], z[64], y[32];
  decode(a, x, z);
  for (std::size_t i = 0; i < t; ++i) y[i] = -x[i];
  // (x, z)(-x, w) = (0, z + w + beta(x, -x))
  for (std::size_t k = 0; k < c; ++k) z[k] = -z[k];
  for (std::size_t j = 1; j < t; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const std::int64_t f = x[j] * y[i];
      const std::int64_t* cc = &comm_[(j * t + i) * c];
      for (std::size_t k = 0; k < c; ++k) z[k] -= f * cc[k];
    }
  }
  return encode(y, z);
}

Elem ClassTwoGroup::top_generator(std::size_t i) const {
  std::uint64_t stride = 1;
  for (std::size_t j = 0; j < i; ++j) stride *= top_[j];
  return static_cast<Elem>(stride);
}

Elem ClassTwoGroup::central_generator(std::size_t k) const {
  std::uint64_t stride = top_size_;
  for (std::size_t j = 0; j < k; ++j) stride *= central_[j];
  return static_cast<Elem>(stride);
}

// ------------------------------------------------------ permutation groups

std::shared_ptr<DenseGroup> permutation_group(const std::vector<std::vector<std::uint8_t>>& gens,
                                              std::size_t dense_cutoff,
                                              std::vector<std::vector<std::uint8_t>>* perms_out) {
  using Perm = std::vector<std::uint8_t>;
  const std::size_t deg = gens.empty() ? 0 : gens.front().size();
  Perm id(deg);
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  std::map<Perm, Elem> index{{id, 0}};
  std::vector<Perm> perms{id};
  for (std::size_t head = 0; head < perms.size(); ++head) {
    for (const Perm& g : gens) {
      Perm q(deg);
      for (std::size_t i = 0; i < deg; ++i) q[i] = g[perms[head][i]];
      if (index.emplace(q, static_cast<Elem>(perms.size())).second) {
        perms.push_back(std::move(q));
        if (perms.size() > dense_cutoff) throw BudgetExceeded("permutation group exceeds dense cutoff");
      }
    }
  }
  std::vector<std::vector<Elem>> actions(gens.size(), std::vector<Elem>(perms.size()));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t p = 0; p < perms.size(); ++p) {
      Perm q(deg);
      for (std::size_t i = 0; i < deg; ++i) q[i] = gens[j][perms[p][i]];
      actions[j][p] = index.at(q);
    }
  }
  std::vector<Elem> relabel;
  auto g = DenseGroup::from_right_regular(actions, &relabel);
  if (perms_out) {
    perms_out->assign(perms.size(), Perm{});
    for (std::size_t p = 0; p < perms.size(); ++p) (*perms_out)[relabel[p]] = perms[p];
  }
  return g;
}

namespace {

std::vector<std::uint8_t> transposition(int n, int a, int b) {
  std::vector<std::uint8_t> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
  return p;
}

std::vector<std::uint8_t> three_cycle(int n, int a, int b, int c) {
  std::vector<std::uint8_t> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  p[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
  p[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(c);
  p[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(a);
  return p;
}

std::shared_ptr<DenseGroup> symmetric_impl(int n, std::size_t cutoff, std::vector<std::vector<std::uint8_t>>* perms) {
  std::vector<std::vector<std::uint8_t>> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i, i + 1));
  return permutation_group(gens, cutoff, perms);
}

std::shared_ptr<DenseGroup> alternating_impl(int n, std::size_t cutoff, std::vector<std::vector<std::uint8_t>>* perms) {
  std::vector<std::vector<std::uint8_t>> gens;
  for (int k = 2; k < n; ++k) gens.push_back(three_cycle(n, 0, 1, k));
  return permutation_group(gens, cutoff, perms);
}

}  // namespace

// ------------------------------------------------------------ families

GroupPtr cyclic(std::int64_t n) {
  if (n < 1) throw ParameterViolation("cyclic order must be positive");
  auto g = std::make_shared<AbelianGroup>(n > 1 ? std::vector<std::uint64_t>{static_cast<std::uint64_t>(n)}
                                                : std::vector<std::uint64_t>{});
  g->set_family(make_tag(FamilyKind::Cyclic, {n}));
  return g;
}

GroupPtr abelian(const std::vector<std::int64_t>& factors) {
  std::vector<std::uint64_t> f;
  for (auto d : factors) {
    if (d < 1) throw ParameterViolation("abelian factors must be positive");
    f.push_back(static_cast<std::uint64_t>(d));
  }
  const auto inv = normalize_invariants(f);
  auto g = std::make_shared<AbelianGroup>(inv.factors);
  std::vector<std::int64_t> params(inv.factors.begin(), inv.factors.end());
  if (params.empty()) params.push_back(1);
  g->set_family(make_tag(FamilyKind::Abelian, params));
  return g;
}

GroupPtr dihedral(std::int64_t order) {
  if (order < 2 || order % 2) throw ParameterViolation("dihedral order must be even and at least 2");
  const std::int64_t n = order / 2;
  auto g = std::make_shared<MetacyclicGroup>(n, 2, -1, 0);
  g->set_family(make_tag(FamilyKind::Dihedral, {order}));
  return g;
}

GroupPtr quaternion(std::int64_t order) {
  if (order < 4 || order % 4) throw ParameterViolation("quaternion order must be a multiple of 4");
  const std::int64_t n = order / 4;
  auto g = std::make_shared<MetacyclicGroup>(2 * n, 2, -1, n);
  g->set_family(make_tag(FamilyKind::Quaternion, {order}));
  return g;
}

GroupPtr symmetric(int n) {
  if (n < 1 || n > 12) throw ParameterViolation("symmetric degree must be between 1 and 12");
  auto g = symmetric_impl(n, Budgets::defaults().dense_cutoff, nullptr);
  g->set_family(make_tag(FamilyKind::Symmetric, {n}));
  return g;
}

GroupPtr alternating(int n) {
  if (n < 1 || n > 12) throw ParameterViolation("alternating degree must be between 1 and 12");
  auto g = alternating_impl(n, Budgets::defaults().dense_cutoff, nullptr);
  g->set_family(make_tag(FamilyKind::Alternating, {n}));
  return g;
}

void check_holder_parameters(std::int64_t n, std::int64_t m, std::int64_t r) {
  if (n < 1 || m < 1) throw ParameterViolation("n and m must be positive");
  if (m % 2 == 0) throw ParameterViolation("m must be odd");
  if (r < 0 || (r >= m && !(m == 1 && r == 0))) throw ParameterViolation("r must satisfy 0 <= r < m");
  std::int64_t x = 1 % m;
  for (std::int64_t i = 0; i < n; ++i) x = x * r % m;
  if (x != 1 % m) throw ParameterViolation("r^n is not 1 mod m");
  if (std::gcd(m, n * (r - 1)) != 1 && m != 1) throw ParameterViolation("gcd(m, n(r-1)) is not 1");
}

GroupPtr holder(std::int64_t n, std::int64_t m, std::int64_t r) {
  check_holder_parameters(n, m, r);
  auto g = std::make_shared<MetacyclicGroup>(m, n, r, 0);
  g->set_family(make_tag(FamilyKind::Holder, {n, m, r}));
  return g;
}

// ---------------------------------------------------------- presentations

namespace {

Word gen(std::uint32_t i, std::int32_t e = 1) { return Word::generator(i, e); }

}  // namespace

Presentation dihedral_presentation(std::int64_t n) {
  Presentation p;
  p.generators = {"a", "b"};
  p.relators = {gen(0).pow(n), gen(1, 2), gen(0).conjugate_by(gen(1)) * gen(0)};
  return p;
}

Presentation quaternion_presentation(std::int64_t n) {
  Presentation p;
  p.generators = {"a", "b"};
  p.relators = {gen(0).pow(2 * n), gen(1, 2) * gen(0).pow(-n), gen(0).conjugate_by(gen(1)) * gen(0)};
  return p;
}

Presentation holder_presentation(std::int64_t n, std::int64_t m, std::int64_t r) {
  Presentation p;
  p.generators = {"a", "b"};
  p.relators = {gen(1).pow(n), gen(0).pow(m), gen(0).conjugate_by(gen(1)) * gen(0).pow(-r)};
  return p;
}

Presentation extraspecial_presentation(std::int64_t p, int n) {
  Presentation pr;
  const std::uint32_t c = static_cast<std::uint32_t>(2 * n);
  for (int i = 1; i <= 2 * n; ++i) pr.generators.push_back("g" + std::to_string(i));
  pr.generators.push_back("c");
  for (std::uint32_t j = 0; j <= c; ++j) pr.relators.push_back(gen(j).pow(p));
  for (std::uint32_t j = 0; j < c; ++j) pr.relators.push_back(commutator(gen(c), gen(j)));
  for (std::uint32_t j = 0; j < c; ++j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      if (j == i + 1 && i % 2 == 0) {
        pr.relators.push_back(commutator(gen(j), gen(i)) * gen(c));  // [g_j, g_i] = c^-1
      } else {
        pr.relators.push_back(commutator(gen(j), gen(i)));
      }
    }
  }
  return pr;
}

Presentation symmetric_cover_presentation(int n) {
  Presentation p;
  const std::uint32_t k = static_cast<std::uint32_t>(n - 1);
  for (std::uint32_t i = 1; i <= k; ++i) p.generators.push_back("g" + std::to_string(i));
  p.generators.push_back("z");
  const Word z = gen(k), zi = gen(k, -1);
  for (std::uint32_t i = 0; i < k; ++i) p.relators.push_back(gen(i, 2) * zi);
  for (std::uint32_t j = 0; j + 1 < k; ++j) p.relators.push_back((gen(j) * gen(j + 1)).pow(3) * zi);
  for (std::uint32_t a = 0; a < k; ++a) {
    for (std::uint32_t b = a + 2; b < k; ++b) p.relators.push_back((gen(a) * gen(b)).pow(2) * zi);
  }
  p.relators.push_back(z.pow(2));
  for (std::uint32_t i = 0; i < k; ++i) p.relators.push_back(commutator(gen(i), z));
  return p;
}

Presentation extraspecial_cover_presentation(std::int64_t p) {
  Presentation pr;
  pr.generators = {"g1", "g2", "c", "h1", "h2"};
  for (std::uint32_t j = 0; j < 5; ++j) pr.relators.push_back(gen(j).pow(p));
  pr.relators.push_back(commutator(gen(1), gen(0)) * gen(2, -1));  // [g2, g1] = c
  pr.relators.push_back(commutator(gen(2), gen(0)) * gen(3, -1));  // [c, g1] = h1
  pr.relators.push_back(commutator(gen(2), gen(1)) * gen(4, -1));  // [c, g2] = h2
  for (std::uint32_t h = 3; h < 5; ++h) {
    for (std::uint32_t j = 0; j < 5; ++j) {
      if (j != h) pr.relators.push_back(commutator(gen(h), gen(j)));
    }
  }
  return pr;
}

GroupPtr extraspecial(std::int64_t p, int n, ExtraspecialExponent kind) {
  if (!is_prime(p) || p == 2) throw ParameterViolation("extraspecial prime must be odd");
  if (n < 1) throw ParameterViolation("extraspecial rank must be at least 1");
  const std::size_t cutoff = Budgets::defaults().dense_cutoff;
  GroupPtr g;
  if (kind == ExtraspecialExponent::P) {
    g = realize(extraspecial_presentation(p, n));
  } else {
    // <g, h, c | g^p = c, h^p, c^p, [h, g] = c^-1, c central>
    Presentation base;
    base.generators = {"g", "h", "c"};
    base.relators = {gen(0).pow(p) * gen(2, -1), gen(1).pow(p), gen(2).pow(p),
                     commutator(gen(1), gen(0)) * gen(2), commutator(gen(2), gen(0)), commutator(gen(2), gen(1))};
    g = realize(base);
    if (n > 1) {
      // Central product with n-1 exponent-p factors: quotient of the direct
      // product by the anti-diagonal of the centres.
      const GroupPtr e = realize(extraspecial_presentation(p, 1));
      const Elem cg = g->generators()[2];
      for (int i = 1; i < n; ++i) {
        auto prod = std::make_shared<ProductGroup>(g, e);
        const Elem ce = e->generators()[2];
        const Elem anti = prod->pack(cg, e->inv(ce));
        const Subgroup d = close_generators(prod, std::vector<Elem>{anti});
        auto q = quotient(prod, d, cutoff);
        g = q.group;
      }
    }
  }
  auto gg = std::const_pointer_cast<Group>(g);
  gg->set_family(make_tag(FamilyKind::Extraspecial, {p, n, kind == ExtraspecialExponent::P ? 1 : 2}));
  return gg;
}

// -------------------------------------------------------------- covers

bool verify_cover(const CoverData& c) {
  if (!verify_morphism(c.proj)) return false;
  if (image(c.proj).order() != c.proj.target->order()) return false;
  const Subgroup k = kernel(c.proj);
  if (k.members() != c.m.members()) return false;
  const Group& h = *c.h;
  for (Elem x : c.m.generators()) {
    for (Elem s : h.generators()) {
      if (h.mul(x, s) != h.mul(s, x)) return false;
    }
  }
  const Subgroup d = derived_subgroup(c.h);
  return std::all_of(c.m.members().begin(), c.m.members().end(), [&](Elem x) { return d.contains(x); });
}

namespace {

CoverData trivial_cover(const GroupPtr& g, const std::string& kind) {
  std::vector<Elem> imgs = g->generators();
  CoverData c{g, trivial_subgroup(g), extend_to_morphism(g, g, imgs), kind};
  return c;
}

CoverData finish_cover(GroupPtr h, const GroupPtr& g, std::vector<Elem> images, const std::string& kind) {
  Morphism proj = extend_to_morphism(h, g, std::move(images));
  Subgroup m = kernel(proj);
  CoverData c{std::move(h), std::move(m), std::move(proj), kind};
  return c;
}

CoverData abelian_cover(const GroupPtr& g) {
  auto ag = std::dynamic_pointer_cast<const AbelianGroup>(g);
  if (!ag) throw UnsupportedFamily("abelian cover needs the abelian constructor");
  const auto& d = ag->factors();
  if (d.size() <= 1) return trivial_cover(g, "cyclic (trivial multiplier)");
  const std::size_t t = d.size();
  std::vector<std::uint64_t> central;
  std::vector<std::vector<std::vector<std::int64_t>>> comm(t, std::vector<std::vector<std::int64_t>>(t));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const std::uint64_t gij = std::gcd(d[i], d[j]);
      if (gij > 1) {
        pairs.push_back({j, i});
        central.push_back(gij);
      }
    }
  }
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t i = 0; i < j; ++i) comm[j][i].assign(central.size(), 0);
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) comm[pairs[k].first][pairs[k].second][k] = 1;
  auto h = std::make_shared<ClassTwoGroup>(d, central, comm);
  h->set_label("bilinear cover of " + g->describe());
  return finish_cover(h, g, g->generators(), "bilinear class-2 cover");
}

CoverData extraspecial_cover(const GroupPtr& g, std::int64_t p, int n, int kind, std::size_t cutoff) {
  if (kind == 2) {
    if (n == 1) return trivial_cover(g, "trivial multiplier (exponent p^2, order p^3)");
    throw UnsupportedFamily("no cover available for extraspecial groups of exponent p^2 and rank > 1");
  }
  if (n == 1) {
    EnumerationOptions opts;
    opts.max_cosets = std::max<std::size_t>(cutoff * 4, 10000);
    auto h = realize(extraspecial_cover_presentation(p), opts);
    h->set_label("pc cover of " + g->describe());
    const auto& gg = g->generators();  // g1, g2, c
    const auto& hg = h->generators();  // g1, g2, c, h1, h2
    (void)hg;
    return finish_cover(h, g, {gg[0], gg[1], g->inv(gg[2]), kIdentity, kIdentity}, "pc cover (order p^5)");
  }
  // Class-2 cover: tops g_1..g_2n of order p; central c and h_ij for i < j except (1,2).
  const std::size_t t = static_cast<std::size_t>(2 * n);
  std::vector<std::uint64_t> central{static_cast<std::uint64_t>(p)};
  std::vector<std::vector<std::vector<std::int64_t>>> comm(t, std::vector<std::vector<std::int64_t>>(t));
  std::vector<std::pair<std::size_t, std::size_t>> hs;
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!(i == 0 && j == 1)) {
        hs.push_back({j, i});
        central.push_back(static_cast<std::uint64_t>(p));
      }
    }
  }
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t i = 0; i < j; ++i) comm[j][i].assign(central.size(), 0);
  }
  for (std::size_t j = 1; j < t; j += 2) comm[j][j - 1][0] = -1;  // [g_2k, g_2k-1] = c^-1
  for (std::size_t k = 0; k < hs.size(); ++k) comm[hs[k].first][hs[k].second][k + 1] = 1;
  auto h = std::make_shared<ClassTwoGroup>(std::vector<std::uint64_t>(t, static_cast<std::uint64_t>(p)), central, comm);
  h->set_label("class-2 cover of " + g->describe());
  std::vector<Elem> images(g->generators().begin(), g->generators().begin() + static_cast<std::ptrdiff_t>(t));
  return finish_cover(h, g, images, "class-2 cover (order p^(2n^2+n))");
}

CoverData symmetric_cover(const GroupPtr& g, int n, std::size_t cutoff) {
  if (n < 4) return trivial_cover(g, "trivial multiplier");
  EnumerationOptions opts;
  opts.max_cosets = std::max<std::size_t>(cutoff * 4, 10000);
  auto h = realize(symmetric_cover_presentation(n), opts);
  if (h->order() > cutoff) throw BudgetExceeded("symmetric cover exceeds dense cutoff");
  h->set_label("H" + std::to_string(n));
  std::vector<Elem> images(g->generators().begin(), g->generators().end());
  images.push_back(kIdentity);
  return finish_cover(h, g, images, "H_n (Schur)");
}

CoverData alternating_cover(const GroupPtr& g, int n, std::size_t cutoff) {
  if (n < 4) return trivial_cover(g, "trivial multiplier");
  if (n > 5) throw UnsupportedFamily("alternating covers are provided for n = 4, 5 only");
  EnumerationOptions opts;
  opts.max_cosets = std::max<std::size_t>(cutoff * 4, 10000);
  auto hn = realize(symmetric_cover_presentation(n), opts);
  std::vector<std::vector<std::uint8_t>> sym_perms, alt_perms;
  auto sym = symmetric_impl(n, cutoff, &sym_perms);
  alternating_impl(n, cutoff, &alt_perms);
  std::map<std::vector<std::uint8_t>, Elem> alt_index;
  for (Elem i = 0; i < alt_perms.size(); ++i) alt_index[alt_perms[i]] = i;
  std::vector<Elem> hn_images(sym->generators().begin(), sym->generators().end());
  hn_images.push_back(kIdentity);
  const Morphism to_sym = extend_to_morphism(hn, sym, hn_images);
  const Subgroup kn = derived_subgroup(GroupPtr(hn));
  EmbeddedGroup k = subgroup_as_group(kn, cutoff);
  auto kg = std::const_pointer_cast<Group>(k.group);
  kg->set_label("K" + std::to_string(n));
  std::vector<Elem> images;
  for (Elem x : k.group->generators()) images.push_back(alt_index.at(sym_perms[to_sym(k.to_parent[x])]));
  return finish_cover(k.group, g, images, "K_n = [H_n, H_n] (Schur)");
}

}  // namespace

namespace {

CoverData build_cover(const GroupPtr& g, std::size_t dense_cutoff) {
  if (auto pg = std::dynamic_pointer_cast<const ProductGroup>(g)) {
    const auto a1 = abelian_invariants(pg->left(), dense_cutoff);
    const auto a2 = abelian_invariants(pg->right(), dense_cutoff);
    if (std::gcd(a1.order(), a2.order()) != 1) {
      throw UnsupportedFamily("product cover requires coprime abelianizations");
    }
    const CoverData c1 = schur_cover(pg->left(), dense_cutoff);
    const CoverData c2 = schur_cover(pg->right(), dense_cutoff);
    auto h = std::make_shared<ProductGroup>(c1.h, c2.h);
    std::vector<Elem> images;
    for (Elem x : h->generators()) images.push_back(pg->pack(c1.proj(h->left_of(x)), c2.proj(h->right_of(x))));
    return finish_cover(h, g, images, "product of covers");
  }
  {
    const FamilyTag* tag = g->family();
    if (!tag) throw UnsupportedFamily("group carries no family tag: " + g->describe());
    const auto& pr = tag->params;
    switch (tag->kind) {
      case FamilyKind::Cyclic:
        return trivial_cover(g, "cyclic (trivial multiplier)");
      case FamilyKind::Abelian:
        return abelian_cover(g);
      case FamilyKind::Dihedral: {
        const std::int64_t n = pr[0] / 2;
        if (n % 2 == 1) return trivial_cover(g, "trivial multiplier (n odd)");
        return finish_cover(quaternion(4 * n), g, g->generators(), "Q_4n");
      }
      case FamilyKind::Quaternion:
      case FamilyKind::Holder:
        return trivial_cover(g, "trivial multiplier");
      case FamilyKind::Symmetric:
        return symmetric_cover(g, static_cast<int>(pr[0]), dense_cutoff);
      case FamilyKind::Alternating:
        return alternating_cover(g, static_cast<int>(pr[0]), dense_cutoff);
      case FamilyKind::Extraspecial:
        return extraspecial_cover(g, pr[0], static_cast<int>(pr[1]), static_cast<int>(pr[2]), dense_cutoff);
      case FamilyKind::Product:
        throw UnsupportedFamily("product tag without product structure");
    }
  }
  throw UnsupportedFamily("unknown family");
}

}  // namespace

CoverData schur_cover(const GroupPtr& g, std::size_t dense_cutoff) {
  CoverData c = build_cover(g, dense_cutoff);
  if (!verify_cover(c)) throw Error("constructed cover failed verification for " + g->describe());
  if (c.h->order() != g->order() * c.m.order()) throw Error("cover order mismatch for " + g->describe());
  return c;
}

// ----------------------------------------------------------- descriptors

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::int64_t to_int(const std::string& s) {
  if (s.empty()) throw ParameterViolation("missing integer parameter");
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ParameterViolation("invalid integer '" + s + "'");
  }
  if (pos != s.size()) throw ParameterViolation("invalid integer '" + s + "'");
  return v;
}

GroupPtr single_descriptor(const std::string& text) {
  std::string name = text, args;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    args = text.substr(colon + 1);
  } else {
    // Aliases: c6, d8, q8, sym4, alt5, s4, a5
    std::size_t i = 0;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
    name = text.substr(0, i);
    args = text.substr(i);
  }
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::tolower(ch); });
  std::vector<std::int64_t> v;
  std::string exp_kind;
  if (!args.empty()) {
    for (const auto& part : split(args, ',')) {
      if (name == "extraspecial" || name == "es") {
        if (part == "p" || part == "p2" || part == "p^2") {
          exp_kind = part;
          continue;
        }
      }
      v.push_back(to_int(part));
    }
  }
  auto need = [&](std::size_t k) {
    if (v.size() != k) throw ParameterViolation("family '" + name + "' expects " + std::to_string(k) + " parameter(s)");
  };
  if (name == "cyclic" || name == "c") {
    need(1);
    return cyclic(v[0]);
  }
  if (name == "abelian") {
    if (v.empty()) throw ParameterViolation("abelian expects at least one factor");
    return abelian(v);
  }
  if (name == "dihedral" || name == "d") {
    need(1);
    return dihedral(v[0]);
  }
  if (name == "quaternion" || name == "q") {
    need(1);
    return quaternion(v[0]);
  }
  if (name == "symmetric" || name == "sym" || name == "s") {
    need(1);
    return symmetric(static_cast<int>(v[0]));
  }
  if (name == "alternating" || name == "alt" || name == "a") {
    need(1);
    return alternating(static_cast<int>(v[0]));
  }
  if (name == "holder") {
    need(3);
    return holder(v[0], v[1], v[2]);
  }
  if (name == "extraspecial" || name == "es") {
    ExtraspecialExponent kind = ExtraspecialExponent::P;
    if (!exp_kind.empty()) {
      kind = exp_kind == "p" ? ExtraspecialExponent::P : ExtraspecialExponent::PSquared;
    } else if (v.size() == 3) {
      if (v[2] != 1 && v[2] != 2) throw ParameterViolation("extraspecial exponent kind must be 1 (p) or 2 (p^2)");
      kind = v[2] == 1 ? ExtraspecialExponent::P : ExtraspecialExponent::PSquared;
      v.pop_back();
    }
    need(2);
    return extraspecial(v[0], static_cast<int>(v[1]), kind);
  }
  throw ParameterViolation("unknown group family '" + name + "'");
}

}  // namespace

GroupPtr group_from_descriptor(const std::string& text) {
  const auto parts = split(text, '*');
  GroupPtr g;
  for (const auto& part : parts) {
    if (part.empty()) throw ParameterViolation("empty factor in descriptor '" + text + "'");
    GroupPtr f = single_descriptor(part);
    g = g ? direct_product(g, f) : f;
  }
  return g;
}

}  // namespace wedgelab
