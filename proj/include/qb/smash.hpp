// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <json.hpp>

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "qb/config.hpp"
#include "qb/finite_ring.hpp"
#include "qb/layout.hpp"
#include "qb/modules.hpp"
#include "qb/morita.hpp"

namespace qb {

/// A finite group given by its table. Elements are 0..order-1.
class FiniteGroup {
 public:
  using G = std::uint32_t;

  FiniteGroup(std::vector<std::vector<G>> table, G identity, std::string name)
      : table_(std::move(table)), e_(identity), name_(std::move(name)) {
    const auto n = table_.size();
    if (n == 0) throw PreconditionError("empty group table");
    inv_.assign(n, n);
    for (G a = 0; a < n; ++a) {
      if (table_[a].size() != n) throw PreconditionError("group table is not square");
      for (G b = 0; b < n; ++b)
        if (table_[a][b] == e_) inv_[a] = b;
    }
    if (auto why = axioms_violation()) throw PreconditionError("not a group: " + *why);
  }

  static FiniteGroup cyclic(G n) {
    std::vector<std::vector<G>> t(n, std::vector<G>(n));
    for (G a = 0; a < n; ++a)
      for (G b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t), 0, "C" + std::to_string(n));
  }

  G order() const { return static_cast<G>(table_.size()); }
  G identity() const { return e_; }
  G mul(G a, G b) const { return table_[a][b]; }
  G inv(G a) const { return inv_[a]; }
  const std::string& name() const { return name_; }

  std::optional<std::string> axioms_violation() const {
    const G n = order();
    if (e_ >= n) return "identity out of range";
    for (G a = 0; a < n; ++a) {
      if (table_[e_][a] != a || table_[a][e_] != a) return "identity law";
      if (inv_[a] >= n || table_[inv_[a]][a] != e_) return "inverse law";
      for (G b = 0; b < n; ++b) {
        if (table_[a][b] >= n) return "table entry out of range";
        for (G c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) return "associativity";
      }
    }
    return std::nullopt;
  }

 private:
  std::vector<std::vector<G>> table_;
  std::vector<G> inv_;
  G e_;
  std::string name_;
};

/// A G-graded ring A = sum of A_g with finite homogeneous components.
///
/// Elements are indices: the component indices in group order, mixed radix
/// with A_0 most significant.
class GradedAlgebra {
 public:
  using Parts = std::vector<Index>;
  using Product = std::function<Parts(const Parts&, const Parts&)>;

  GradedAlgebra(FiniteGroup g, std::vector<Layout> components, Product mul, Parts one, std::string name)
      : g_(std::move(g)), comps_(std::move(components)), mul_(std::move(mul)), name_(std::move(name)) {
    if (comps_.size() != g_.order()) throw PreconditionError("one component per group element required");
    Layout all;
    for (const auto& c : comps_) all = Layout::concat(all, c);
    layout_ = all;
    if (layout_.size() >= kSizeOverflow) throw CapExceeded("graded algebra too large");
    one_ = join(one);
    if (size() <= 512) {
      table_.resize(size() * size());
      for (Index a = 0; a < size(); ++a)
        for (Index b = 0; b < size(); ++b) table_[a * size() + b] = join(mul_(split(a), split(b)));
    }
  }

  const FiniteGroup& group() const { return g_; }
  const Layout& layout() const { return layout_; }
  const Layout& component_layout(FiniteGroup::G g) const { return comps_[g]; }
  std::uint64_t size() const { return layout_.size(); }
  std::string descriptor() const { return name_; }
  Index zero() const { return 0; }
  Index one() const { return one_; }

  Parts split(Index a) const {
    Parts p(comps_.size());
    for (std::size_t i = comps_.size(); i-- > 0;) {
      p[i] = a % comps_[i].size();
      a /= comps_[i].size();
    }
    return p;
  }
  Index join(const Parts& p) const {
    Index a = 0;
    for (std::size_t i = 0; i < comps_.size(); ++i) a = a * comps_[i].size() + p[i];
    return a;
  }

  Index add(Index a, Index b) const { return layout_.encode(layout_.add(layout_.decode(a), layout_.decode(b))); }
  Index neg(Index a) const { return layout_.encode(layout_.neg(layout_.decode(a))); }
  Index mul(Index a, Index b) const {
    if (!table_.empty()) return table_[a * size() + b];
    return join(mul_(split(a), split(b)));
  }

  /// a_g: the degree-g component of a, as an element of A.
  Index component(Index a, FiniteGroup::G g) const {
    auto p = split(a);
    Parts q(p.size(), 0);
    q[g] = p[g];
    return join(q);
  }
  /// Degree of a nonzero homogeneous element.
  std::optional<FiniteGroup::G> degree(Index a) const {
    auto p = split(a);
    std::optional<FiniteGroup::G> d;
    for (FiniteGroup::G g = 0; g < p.size(); ++g)
      if (p[g] != 0) {
        if (d) return std::nullopt;
        d = g;
      }
    return d;
  }
  bool in_component(Index a, FiniteGroup::G g) const { return a == component(a, g); }

  std::vector<Index> additive_generators() const {
    std::vector<Index> out;
    for (std::size_t i = 0; i < layout_.rank(); ++i) out.push_back(layout_.encode(layout_.unit(i)));
    return out;
  }

  std::string format(Index a) const {
    auto p = split(a);
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + std::to_string(p[i]);
    return s + ")";
  }

  /// A_g A_h inside A_gh, unit in A_e; exhaustive.
  bool grading_respected() const {
    if (!in_component(one_, g_.identity())) return false;
    for (FiniteGroup::G g = 0; g < g_.order(); ++g)
      for (FiniteGroup::G h = 0; h < g_.order(); ++h)
        for (Index a = 0; a < comps_[g].size(); ++a)
          for (Index b = 0; b < comps_[h].size(); ++b) {
            Parts pa(comps_.size(), 0), pb(comps_.size(), 0);
            pa[g] = a;
            pb[h] = b;
            if (!in_component(mul(join(pa), join(pb)), g_.mul(g, h))) return false;
          }
    return true;
  }

 private:
  FiniteGroup g_;
  std::vector<Layout> comps_;
  Product mul_;
  std::string name_;
  Layout layout_;
  Index one_ = 0;
  std::vector<Index> table_;
};

/// S (+) N with (a,x)(b,y) = (ab, ay + xb), graded by C2 with A_0 = S, A_1 = N.
inline GradedAlgebra trivial_extension(const FiniteRing& s, const FiniteBimodule& n) {
  if (!(n.ring() == s)) throw PreconditionError("bimodule is not over " + s.descriptor());
  auto mul = [s, n](const GradedAlgebra::Parts& u, const GradedAlgebra::Parts& v) -> GradedAlgebra::Parts {
    return {s.mul(u[0], v[0]), n.add(n.left(u[0], v[1]), n.right(u[1], v[0]))};
  };
  return GradedAlgebra(FiniteGroup::cyclic(2), {s.layout(), n.layout()}, mul, {s.one(), n.zero()},
                       "TrivialExtension(" + s.descriptor() + ", " + n.descriptor() + ")");
}

/// The group algebra Z/p[C_n], graded by C_n.
inline GradedAlgebra group_algebra(std::uint32_t p, std::uint32_t order) {
  auto g = FiniteGroup::cyclic(order);
  std::vector<Layout> comps(order, Layout({p}));
  auto mul = [g, p](const GradedAlgebra::Parts& u, const GradedAlgebra::Parts& v) {
    GradedAlgebra::Parts w(u.size(), 0);
    for (std::uint32_t a = 0; a < u.size(); ++a)
      for (std::uint32_t b = 0; b < v.size(); ++b) w[g.mul(a, b)] = (w[g.mul(a, b)] + u[a] * v[b]) % p;
    return w;
  };
  GradedAlgebra::Parts one(order, 0);
  one[0] = 1;
  return GradedAlgebra(g, comps, mul, one, "GroupAlgebra(Zmod(" + std::to_string(p) + "), C" + std::to_string(order) + ")");
}

/// A function G -> Z, acting through the additive structure of A.
struct DualFunction {
  std::vector<std::int64_t> values;

  static DualFunction indicator(const FiniteGroup& g, FiniteGroup::G at) {
    DualFunction f{std::vector<std::int64_t>(g.order(), 0)};
    f.values[at] = 1;
    return f;
  }
  static DualFunction epsilon(const FiniteGroup& g) { return {std::vector<std::int64_t>(g.order(), 1)}; }
};

/// f . a = sum_g f(g) a_g
inline Index dual_action(const GradedAlgebra& a, const DualFunction& f, Index b) {
  const auto& L = a.layout();
  Coords acc = L.zero();
  for (FiniteGroup::G g = 0; g < a.group().order(); ++g)
    acc = L.add(acc, L.scale(L.decode(a.component(b, g)), f.values[g]));
  return L.encode(acc);
}

/// sum_h coeff[h] # p_h
struct SmashElement {
  std::vector<Index> coeff;
  friend bool operator==(const SmashElement&, const SmashElement&) = default;
};

inline SmashElement smash_unit(const GradedAlgebra& a) { return {std::vector<Index>(a.group().order(), a.one())}; }

inline SmashElement smash_basic(const GradedAlgebra& a, Index x, FiniteGroup::G h) {
  SmashElement u{std::vector<Index>(a.group().order(), a.zero())};
  u.coeff[h] = x;
  return u;
}

inline SmashElement smash_add(const GradedAlgebra& a, const SmashElement& u, const SmashElement& v) {
  SmashElement w = u;
  for (std::size_t h = 0; h < w.coeff.size(); ++h) w.coeff[h] = a.add(u.coeff[h], v.coeff[h]);
  return w;
}

/// (a # p_g)(b # p_h) = a b_{g h^-1} # p_h
inline SmashElement smash_mul(const GradedAlgebra& a, const SmashElement& u, const SmashElement& v) {
  const auto& G = a.group();
  SmashElement w{std::vector<Index>(G.order(), a.zero())};
  for (FiniteGroup::G h = 0; h < G.order(); ++h)
    for (FiniteGroup::G g = 0; g < G.order(); ++g) {
      auto part = a.component(v.coeff[h], G.mul(g, G.inv(h)));
      w.coeff[h] = a.add(w.coeff[h], a.mul(u.coeff[g], part));
    }
  return w;
}

/// (a # p_g) . b = a b_g
inline Index smash_act(const GradedAlgebra& a, const SmashElement& u, Index b) {
  Index acc = a.zero();
  for (FiniteGroup::G g = 0; g < a.group().order(); ++g) acc = a.add(acc, a.mul(u.coeff[g], a.component(b, g)));
  return acc;
}

inline std::uint64_t smash_size(const GradedAlgebra& a) {
  long double total = 1;
  for (std::uint32_t i = 0; i < a.group().order(); ++i) total *= static_cast<long double>(a.size());
  return total >= static_cast<long double>(kSizeOverflow) ? kSizeOverflow : static_cast<std::uint64_t>(total);
}

inline SmashElement smash_decode(const GradedAlgebra& a, Index i) {
  SmashElement u{std::vector<Index>(a.group().order())};
  for (std::size_t h = u.coeff.size(); h-- > 0;) {
    u.coeff[h] = i % a.size();
    i /= a.size();
  }
  return u;
}

inline std::string smash_format(const GradedAlgebra& a, const SmashElement& u) {
  std::string s;
  for (std::size_t h = 0; h < u.coeff.size(); ++h) {
    if (u.coeff[h] == a.zero()) continue;
    s += (s.empty() ? "" : " + ") + a.format(u.coeff[h]) + "#p" + std::to_string(h);
  }
  return s.empty() ? "0" : s;
}

/// A as a left module over the smash product: one operator per additive generator.
inline OperatorModule smash_module(const GradedAlgebra& a) {
  OperatorModule m{a.layout(), {}};
  const auto& L = a.layout();
  for (FiniteGroup::G h = 0; h < a.group().order(); ++h)
    for (auto x : a.additive_generators()) {
      auto u = smash_basic(a, x, h);
      m.operators.push_back(linear_map_from(L, [&](const Coords& v) { return L.decode(smash_act(a, u, L.encode(v))); }));
    }
  return m;
}

/// b -> b z for z in A_e.
inline LinearMap rho_map(const GradedAlgebra& a, Index z) {
  if (!a.in_component(z, a.group().identity())) throw PreconditionError("rho_z needs z in the identity component");
  const auto& L = a.layout();
  return linear_map_from(L, [&](const Coords& v) { return L.decode(a.mul(L.encode(v), z)); });
}

struct EndSmashReport {
  std::uint64_t identity_component_size = 0;
  std::uint64_t end_size = 0;
  bool images_of_one_in_identity_component = false;
  bool every_map_is_rho = false;
  bool rho_injective = false;
  bool rho_linear = false;
  bool composition = false;  // (b) rho_{zz'} = ((b) rho_z) rho_{z'}
  bool additive = false;
  bool unital = false;
  std::optional<bool> exhaustive_agrees;
  std::string failure;

  bool ok() const {
    return images_of_one_in_identity_component && every_map_is_rho && rho_injective && rho_linear && composition &&
           additive && unital && end_size == identity_component_size && exhaustive_agrees.value_or(true);
  }
};

/// End of A as a left smash-module, computed by the solver and compared with rho(A_e).
inline EndSmashReport end_smash_verify(const GradedAlgebra& a, const Config& cfg = {}) {
  if (a.size() > cfg.cap) throw CapExceeded("graded algebra " + a.descriptor() + " exceeds cap");
  EndSmashReport rep;
  const auto& L = a.layout();
  const auto e = a.group().identity();
  auto mod = smash_module(a);
  auto homs = module_homs(mod, mod, cfg.cap);
  rep.end_size = homs.size();

  std::vector<Index> ae;
  for (Index z = 0; z < a.size(); ++z)
    if (a.in_component(z, e)) ae.push_back(z);
  rep.identity_component_size = ae.size();

  std::map<LinearMap, Index> rhos;
  rep.rho_linear = true;
  for (auto z : ae) {
    auto r = rho_map(a, z);
    rhos.emplace(r, z);
    for (std::size_t k = 0; k < mod.operators.size() && rep.rho_linear; ++k)
      for (std::size_t i = 0; i < L.rank() && rep.rho_linear; ++i)
        rep.rho_linear = r.apply(L, mod.act(k, L.unit(i))) == mod.act(k, r.images[i]);
  }
  rep.rho_injective = rhos.size() == ae.size();

  rep.images_of_one_in_identity_component = rep.every_map_is_rho = true;
  for (const auto& psi : homs) {
    auto z = L.encode(psi.apply(L, L.decode(a.one())));
    if (!a.in_component(z, e)) {
      rep.images_of_one_in_identity_component = false;
      rep.failure = "(1)psi outside the identity component";
      continue;
    }
    if (!(psi == rho_map(a, z))) {
      rep.every_map_is_rho = false;
      rep.failure = "endomorphism differs from rho of (1)psi";
    }
  }

  rep.composition = rep.additive = true;
  for (auto z : ae)
    for (auto w : ae) {
      auto rz = rho_map(a, z), rw = rho_map(a, w), rzw = rho_map(a, a.mul(z, w)), rs = rho_map(a, a.add(z, w));
      for (Index b = 0; b < a.size(); ++b) {
        auto v = L.decode(b);
        if (rzw.apply(L, v) != rw.apply(L, rz.apply(L, v))) rep.composition = false;
        if (rs.apply(L, v) != L.add(rz.apply(L, v), rw.apply(L, v))) rep.additive = false;
      }
    }
  rep.unital = rho_map(a, a.one()) == linear_map_from(L, [](const Coords& v) { return v; });

  if (additive_candidate_count(L, L, cfg.brute_force_limit + 1) <= cfg.brute_force_limit) {
    auto brute = module_homs_exhaustive(mod, mod, cfg.brute_force_limit);
    std::sort(homs.begin(), homs.end());
    rep.exhaustive_agrees = brute && *brute == homs;
  }
  return rep;
}

/// Corner map from the smash product of the trivial extension to R:
/// (s0,n0)#p0 + (s1,n1)#p1  ->  [[s0, n1], [n0, s1]].
inline GenMatrix<FiniteMorita> corner_map(const GradedAlgebra& a, const SmashElement& u) {
  auto p0 = a.split(u.coeff[0]), p1 = a.split(u.coeff[1]);
  return {p0[0], p1[1], p0[1], p1[0]};
}

struct StructureMapReport {
  std::uint64_t pairs = 0;
  std::uint64_t multiplicative_pairs = 0;       // phi(uv) = phi(u) phi(v)
  std::uint64_t anti_multiplicative_pairs = 0;  // phi(uv) = phi(v) phi(u)
  bool bijective = false;
  bool additive = false;
  bool unit_to_unit = false;
  // [type u][type v] for types s#p0, s#p1, n#p0, n#p1
  std::array<std::array<bool, 4>, 4> corner_multiplicative{};
  std::array<std::array<bool, 4>, 4> corner_anti_multiplicative{};

  bool multiplicative() const { return multiplicative_pairs == pairs; }
  bool anti_multiplicative() const { return anti_multiplicative_pairs == pairs; }
};

inline StructureMapReport structure_map_check(const FiniteMorita& inst, const Config& cfg = {}) {
  auto a = trivial_extension(inst.ring(), inst.bimodule());
  const auto total = smash_size(a);
  if (total > cfg.cap) throw CapExceeded("smash product of " + inst.descriptor() + " exceeds cap");
  StructureMapReport rep;
  std::vector<SmashElement> all(total);
  std::vector<GenMatrix<FiniteMorita>> img(total);
  std::set<std::tuple<Element, Element, Element, Element>> seen;
  for (Index i = 0; i < total; ++i) {
    all[i] = smash_decode(a, i);
    img[i] = corner_map(a, all[i]);
    seen.insert({img[i].a, img[i].x, img[i].y, img[i].b});
  }
  rep.bijective = seen.size() == total && total == inst.matrix_ring_size();
  rep.unit_to_unit = corner_map(a, smash_unit(a)) == genmatrix_identity(inst);
  rep.additive = true;
  for (Index i = 0; i < total; ++i)
    for (Index j = 0; j < total; ++j) {
      ++rep.pairs;
      auto uv = corner_map(a, smash_mul(a, all[i], all[j]));
      rep.multiplicative_pairs += uv == genmatrix_mul(inst, img[i], img[j]);
      rep.anti_multiplicative_pairs += uv == genmatrix_mul(inst, img[j], img[i]);
      if (!(corner_map(a, smash_add(a, all[i], all[j])) == genmatrix_add(inst, img[i], img[j]))) rep.additive = false;
    }

  // homogeneous corner types
  auto typed = [&](int type, Index x) {
    GradedAlgebra::Parts p{0, 0};
    p[type / 2] = x;
    return smash_basic(a, a.join(p), static_cast<FiniteGroup::G>(type % 2));
  };
  const std::uint64_t sizes[] = {inst.ring().size(), inst.bimodule().size()};
  for (int t = 0; t < 4; ++t)
    for (int r = 0; r < 4; ++r) {
      bool iso = true, anti = true;
      for (Index x = 0; x < sizes[t / 2]; ++x)
        for (Index y = 0; y < sizes[r / 2]; ++y) {
          auto u = typed(t, x), v = typed(r, y);
          auto uv = corner_map(a, smash_mul(a, u, v));
          iso = iso && uv == genmatrix_mul(inst, corner_map(a, u), corner_map(a, v));
          anti = anti && uv == genmatrix_mul(inst, corner_map(a, v), corner_map(a, u));
        }
      rep.corner_multiplicative[t][r] = iso;
      rep.corner_anti_multiplicative[t][r] = anti;
    }
  return rep;
}

inline nlohmann::json structure_map_json(const StructureMapReport& r) {
  static const char* names[] = {"s#p0", "s#p1", "n#p0", "n#p1"};
  nlohmann::json table = nlohmann::json::array();
  for (int t = 0; t < 4; ++t)
    for (int u = 0; u < 4; ++u)
      table.push_back({{"u", names[t]},
                       {"v", names[u]},
                       {"multiplicative", r.corner_multiplicative[t][u]},
                       {"anti_multiplicative", r.corner_anti_multiplicative[t][u]}});
  return {{"kind", "structure_map"},
          {"map", "(s0,n0)#p0 + (s1,n1)#p1 -> [[s0, n1], [n0, s1]]"},
          {"pairs", r.pairs},
          {"multiplicative_pairs", r.multiplicative_pairs},
          {"anti_multiplicative_pairs", r.anti_multiplicative_pairs},
          {"multiplicative", r.multiplicative()},
          {"anti_multiplicative", r.anti_multiplicative()},
          {"bijective", r.bijective},
          {"additive", r.additive},
          {"unit_to_unit", r.unit_to_unit},
          {"corner_table", table}};
}

inline nlohmann::json end_smash_json(const EndSmashReport& r) {
  nlohmann::json j{{"kind", "end_smash"},
                   {"identity_component_size", r.identity_component_size},
                   {"end_size", r.end_size},
                   {"images_of_one_in_identity_component", r.images_of_one_in_identity_component},
                   {"every_map_is_rho", r.every_map_is_rho},
                   {"rho_injective", r.rho_injective},
                   {"rho_linear", r.rho_linear},
                   {"composition", r.composition},
                   {"additive", r.additive},
                   {"unital", r.unital}};
  j["exhaustive_agrees"] = r.exhaustive_agrees ? nlohmann::json(*r.exhaustive_agrees) : nlohmann::json(nullptr);
  return j;
}

}  // namespace qb
