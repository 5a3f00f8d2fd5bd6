#include "gradsk/fgab.hpp"

#include <algorithm>

namespace gradsk {

FGAbGroup::FGAbGroup(std::size_t ngens, IntMatrix relations)
    : ngens_(ngens), relations_(std::move(relations)) {
  if (relations_.rows() == 0) relations_ = IntMatrix(0, ngens);
  require(relations_.cols() == ngens_, Errc::DimensionMismatch,
          "relation width != generator count");
  init();
}

void FGAbGroup::init() {
  relations_ = row_lattice_basis(relations_.rows() ? relations_
                                                   : IntMatrix(0, ngens_));
  SmithForm f = smith_normal_form(relations_);
  V_ = f.V;
  Vinv_ = unimodular_inverse(V_);
  diag_.assign(ngens_, Int(0));
  Vec d = f.diag();
  for (std::size_t i = 0; i < d.size(); ++i) diag_[i] = d[i];
  invfac_.clear();
  for (const auto& x : diag_)
    if (x > 1) invfac_.push_back(x);
  for (const auto& x : diag_)
    if (x == 0) invfac_.push_back(0);
}

FGAbGroup FGAbGroup::from_invariants(const Vec& ds) {
  IntMatrix rel(0, ds.size());
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i] != 0) {
      Vec r(ds.size());
      r[i] = ds[i];
      rows.push_back(r);
    }
  }
  return FGAbGroup(ds.size(), IntMatrix::from_rows(rows, ds.size()));
}

FGAbGroup FGAbGroup::cyclic(const Int& n) { return from_invariants({n}); }

Vec FGAbGroup::gen(std::size_t i) const {
  require(i < ngens_, Errc::DimensionMismatch, "generator index");
  Vec v(ngens_);
  v[i] = 1;
  return reduce(v);
}

Vec FGAbGroup::reduce(const Vec& x) const {
  require(x.size() == ngens_, Errc::DimensionMismatch, "element size");
  Vec w = row_mul(x, V_);
  for (std::size_t i = 0; i < ngens_; ++i)
    if (diag_[i] != 0) w[i] = mod_norm(w[i], diag_[i]);
  return row_mul(w, Vinv_);
}

bool FGAbGroup::is_zero(const Vec& x) const { return vec_is_zero(reduce(x)); }

bool FGAbGroup::equal(const Vec& a, const Vec& b) const {
  return reduce(a) == reduce(b);
}

bool FGAbGroup::finite() const {
  return invfac_.empty() || invfac_.back() != 0;
}

bool FGAbGroup::is_trivial() const { return invfac_.empty(); }

Int FGAbGroup::order() const {
  require(finite(), Errc::InfiniteGroup, "order of an infinite group");
  Int n = 1;
  for (const auto& d : invfac_) n *= d;
  return n;
}

Int FGAbGroup::exponent() const {
  Int e = 1;
  for (const auto& d : invfac_) {
    if (d == 0) return 0;
    e = lcm_int(e, d);
  }
  return e;
}

Int FGAbGroup::element_order(const Vec& x) const {
  Vec w = row_mul(reduce(x), V_);
  Int ord = 1;
  for (std::size_t i = 0; i < ngens_; ++i) {
    if (diag_[i] == 0) {
      if (w[i] != 0) return 0;
    } else if (diag_[i] > 1) {
      Int wi = mod_norm(w[i], diag_[i]);
      if (wi != 0) ord = lcm_int(ord, diag_[i] / gcd_int(diag_[i], wi));
    }
  }
  return ord;
}

std::vector<Vec> FGAbGroup::enumerate() const {
  require(finite(), Errc::InfiniteGroup, "enumerate of an infinite group");
  std::vector<Vec> out;
  Vec w(ngens_);
  out.reserve(static_cast<std::size_t>(order()));
  for (;;) {
    out.push_back(reduce(row_mul(w, Vinv_)));
    std::size_t i = 0;
    for (; i < ngens_; ++i) {
      if (diag_[i] <= 1) continue;
      if (++w[i] < diag_[i]) break;
      w[i] = 0;
    }
    if (i == ngens_) break;
  }
  return out;
}

Subgroup subgroup_generated(const FGAbGroup& g, const std::vector<Vec>& elems) {
  std::vector<Vec> reduced;
  for (const auto& e : elems) {
    require(e.size() == g.ngens(), Errc::ElementNotInGroup,
            "element has wrong length");
    Vec r = g.reduce(e);
    if (!vec_is_zero(r)) reduced.push_back(std::move(r));
  }
  // keep generator lists short: a lattice basis spans the same subgroup
  Subgroup h{g, {}};
  IntMatrix basis =
      row_lattice_basis(IntMatrix::from_rows(reduced, g.ngens()));
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    Vec r = g.reduce(basis.row(i));
    if (!vec_is_zero(r)) h.gens.push_back(std::move(r));
  }
  return h;
}

Subgroup trivial_subgroup(const FGAbGroup& g) { return Subgroup{g, {}}; }

Subgroup full_subgroup(const FGAbGroup& g) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < g.ngens(); ++i) gens.push_back(g.gen(i));
  return subgroup_generated(g, gens);
}

namespace {

// rows spanning the preimage in Z^ngens of a subgroup (gens + relations)
IntMatrix sub_lattice(const Subgroup& h) {
  return stack_rows(IntMatrix::from_rows(h.gens, h.ambient.ngens()),
                    h.ambient.relations());
}

}  // namespace

bool sub_contains(const Subgroup& h, const Vec& x) {
  return in_row_lattice(sub_lattice(h), h.ambient.reduce(x));
}

std::optional<Vec> solve_membership(const Subgroup& h, const Vec& x) {
  auto sol = solve_left(sub_lattice(h), h.ambient.reduce(x));
  if (!sol) return std::nullopt;
  return Vec(sol->begin(), sol->begin() + h.gens.size());
}

bool sub_leq(const Subgroup& a, const Subgroup& b) {
  for (const auto& g : a.gens)
    if (!sub_contains(b, g)) return false;
  return true;
}

bool sub_equal(const Subgroup& a, const Subgroup& b) {
  return sub_leq(a, b) && sub_leq(b, a);
}

Subgroup sub_join(const Subgroup& a, const Subgroup& b) {
  std::vector<Vec> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return subgroup_generated(a.ambient, gens);
}

Subgroup sub_intersect(const Subgroup& a, const Subgroup& b) {
  // x in both row lattices: x = u*La = v*Lb; solve (u, v) [La; -Lb] = 0
  IntMatrix la = sub_lattice(a), lb = sub_lattice(b);
  IntMatrix stacked = stack_rows(la, mat_scale(-1, lb));
  std::vector<Vec> gens;
  for (const auto& k : left_kernel(stacked)) {
    Vec u(k.begin(), k.begin() + la.rows());
    gens.push_back(row_mul(u, la));
  }
  return subgroup_generated(a.ambient, gens);
}

FGAbGroup subgroup_group(const Subgroup& h) {
  // relations among the subgroup generators: c with c*gens == 0 in ambient
  std::size_t s = h.gens.size();
  IntMatrix gmat = IntMatrix::from_rows(h.gens, h.ambient.ngens());
  IntMatrix stacked = stack_rows(gmat, h.ambient.relations());
  std::vector<Vec> rel;
  for (const auto& k : left_kernel(stacked))
    rel.push_back(Vec(k.begin(), k.begin() + s));
  return FGAbGroup(s, IntMatrix::from_rows(rel, s));
}

Int sub_order(const Subgroup& h) { return subgroup_group(h).order(); }

FGAbGroup quotient(const FGAbGroup& g, const Subgroup& h) {
  require(h.ambient.same_presentation(g), Errc::NotASubgroup,
          "subgroup of a different group");
  return FGAbGroup(
      g.ngens(),
      stack_rows(g.relations(), IntMatrix::from_rows(h.gens, g.ngens())));
}

FGAbGroup subquotient(const Subgroup& n, const Subgroup& d) {
  require(n.ambient.same_presentation(d.ambient), Errc::NotASubgroup,
          "subquotient ambients differ");
  std::size_t s = n.gens.size();
  std::vector<Vec> rel;
  for (const auto& k :
       left_kernel(stack_rows(IntMatrix::from_rows(n.gens, n.ambient.ngens()),
                              n.ambient.relations())))
    rel.push_back(Vec(k.begin(), k.begin() + s));
  for (const auto& gd : d.gens) {
    auto c = solve_membership(n, gd);
    require(c.has_value(), Errc::NotASubgroup,
            "denominator is not contained in numerator");
    rel.push_back(*c);
  }
  return FGAbGroup(s, IntMatrix::from_rows(rel, s));
}

GroupHom make_hom(const FGAbGroup& src, const FGAbGroup& tgt, IntMatrix m) {
  require(m.rows() == src.ngens() && m.cols() == tgt.ngens(),
          Errc::DimensionMismatch, "hom matrix shape");
  // relations must map to zero in the target
  for (std::size_t i = 0; i < src.relations().rows(); ++i) {
    Vec img = row_mul(src.relations().row(i), m);
    require(tgt.is_zero(img), Errc::DimensionMismatch,
            "matrix does not respect the source relations");
  }
  return GroupHom{src, tgt, std::move(m)};
}

GroupHom identity_hom(const FGAbGroup& g) {
  return GroupHom{g, g, IntMatrix::identity(g.ngens())};
}

GroupHom zero_hom(const FGAbGroup& src, const FGAbGroup& tgt) {
  return GroupHom{src, tgt, IntMatrix(src.ngens(), tgt.ngens())};
}

GroupHom scalar_hom(const FGAbGroup& g, const Int& c) {
  return GroupHom{g, g, mat_scale(c, IntMatrix::identity(g.ngens()))};
}

GroupHom hom_compose(const GroupHom& f, const GroupHom& g) {
  require(f.target.same_presentation(g.source), Errc::DimensionMismatch,
          "hom composition mismatch");
  return GroupHom{f.source, g.target, mat_mul(f.matrix, g.matrix)};
}

GroupHom hom_add(const GroupHom& f, const GroupHom& g) {
  return GroupHom{f.source, f.target, mat_add(f.matrix, g.matrix)};
}

GroupHom hom_sub(const GroupHom& f, const GroupHom& g) {
  return GroupHom{f.source, f.target, mat_sub(f.matrix, g.matrix)};
}

Vec hom_apply(const GroupHom& f, const Vec& x) {
  return f.target.reduce(row_mul(f.source.reduce(x), f.matrix));
}

bool hom_equal(const GroupHom& f, const GroupHom& g) {
  if (!f.source.same_presentation(g.source)) return false;
  for (std::size_t i = 0; i < f.source.ngens(); ++i)
    if (!f.target.equal(f.matrix.row(i), g.matrix.row(i))) return false;
  return true;
}

Subgroup hom_kernel(const GroupHom& f) {
  // x with x*M in the target relation lattice; solve over the stacked matrix
  IntMatrix stacked = stack_rows(f.matrix, f.target.relations());
  std::vector<Vec> gens;
  for (const auto& k : left_kernel(stacked))
    gens.push_back(Vec(k.begin(), k.begin() + f.source.ngens()));
  // the source relation lattice maps into the kernel already; harmless
  return subgroup_generated(f.source, gens);
}

Subgroup hom_image(const GroupHom& f) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < f.source.ngens(); ++i)
    gens.push_back(f.matrix.row(i));
  return subgroup_generated(f.target, gens);
}

Subgroup preimage(const GroupHom& f, const Subgroup& h) {
  require(h.ambient.same_presentation(f.target), Errc::NotASubgroup,
          "preimage of a foreign subgroup");
  IntMatrix stacked = stack_rows(f.matrix, sub_lattice(h));
  std::vector<Vec> gens;
  for (const auto& k : left_kernel(stacked))
    gens.push_back(Vec(k.begin(), k.begin() + f.source.ngens()));
  return subgroup_generated(f.source, gens);
}

Subgroup lembe_full_product(const FGAbGroup& u, const FGAbGroup& a,
                            const std::function<Subgroup(const Vec&)>& w) {
  Subgroup prod = trivial_subgroup(u);
  for (const auto& elem : a.enumerate()) prod = sub_join(prod, w(elem));
  return prod;
}

bool lembe_hypothesis_holds(const FGAbGroup& u, const FGAbGroup& a,
                            const std::function<Subgroup(const Vec&)>& w) {
  (void)u;
  auto elems = a.enumerate();
  for (const auto& ea : elems)
    for (const auto& eb : elems) {
      // W_a <= W_b * W_{2b-a}
      Vec other = a.sub(a.scale(2, eb), ea);
      Subgroup rhs = sub_join(w(eb), w(other));
      if (!sub_leq(w(ea), rhs)) return false;
    }
  return true;
}

Subgroup lembe_product(const FGAbGroup& u, const FGAbGroup& a,
                       const std::function<Subgroup(const Vec&)>& w,
                       const std::vector<Vec>& gens, bool check_hypothesis) {
  if (check_hypothesis)
    require(lembe_hypothesis_holds(u, a, w), Errc::HypothesisViolated,
            "subgroup family violates W_a <= W_b W_{2b-a}");
  std::size_t m = gens.size();
  require(m < 8 * sizeof(std::size_t), Errc::DimensionMismatch,
          "too many generators");
  Subgroup prod = trivial_subgroup(u);
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    Vec label = a.zero();
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t(1) << i)) label = a.add(label, gens[i]);
    prod = sub_join(prod, w(label));
  }
  return prod;
}

}  // namespace gradsk
