#include "gradsk/algebra.hpp"

#include <algorithm>

namespace gradsk {

namespace {

Int torsion_m(const AlgebraPresentation& p) {
  auto tm = torsion_model(p.residue);
  return tm ? tm->m : Int(1);
}

IntMatrix degree_matrix(const AlgebraPresentation& p) {
  std::vector<Vec> rows;
  for (const auto& g : p.generators) rows.push_back(g.degree);
  return IntMatrix::from_rows(rows, p.ambient_rank());
}

// cross(A, B) = sum_{i > j} beta[i][j] A_i B_j, the scalar picked up when
// x^A x^B is brought into canonical generator order
Int cross_scalar(const AlgebraPresentation& p, const Vec& a, const Vec& b) {
  Int s = 0;
  std::size_t k = p.ngens();
  for (std::size_t j = 0; j < k; ++j) {
    if (b[j] == 0) continue;
    for (std::size_t i = j + 1; i < k; ++i)
      if (a[i] != 0) s += p.commutation(i, j) * a[i] * b[j];
  }
  return s;
}

FGAbGroup theta_group(const AlgebraPresentation& p) {
  if (const auto* a = std::get_if<AbstractResidueDatum>(&p.residue))
    return a->h_group();
  return FGAbGroup::trivial();
}

Vec theta_image(const AlgebraPresentation& p, const Vec& exps) {
  FGAbGroup h = theta_group(p);
  Vec img = h.zero();
  if (!p.extension || p.extension->theta_images.empty()) return img;
  for (std::size_t i = 0; i < exps.size(); ++i)
    img = h.add(img, h.scale(exps[i], h.reduce(p.extension->theta_images[i])));
  return img;
}

Int isqrt_exact(const Int& n, Errc code, const char* what) {
  Int r = boost::multiprecision::sqrt(n);
  require(r * r == n, code, what);
  return r;
}

}  // namespace

const char* case_tag_name(CaseTag t) {
  switch (t) {
    case CaseTag::Unramified: return "Unramified";
    case CaseTag::TotallyRamified: return "TotallyRamified";
    case CaseTag::Semiramified: return "Semiramified";
    case CaseTag::InertiallySplit: return "InertiallySplit";
    case CaseTag::General: return "General";
  }
  return "?";
}

Monomial mono_one(const AlgebraPresentation& p) {
  return Monomial{0, Vec(p.ngens())};
}

Monomial mono_gen(const AlgebraPresentation& p, std::size_t i) {
  Monomial m = mono_one(p);
  m.exps[i] = 1;
  return m;
}

Monomial mono_scalar(const AlgebraPresentation& p, const Int& zeta_exp) {
  Monomial m = mono_one(p);
  m.scalar = mod_norm(zeta_exp, torsion_m(p));
  return m;
}

Monomial mono_mul(const AlgebraPresentation& p, const Monomial& a,
                  const Monomial& b) {
  Monomial r;
  r.scalar = mod_norm(a.scalar + b.scalar + cross_scalar(p, a.exps, b.exps),
                      torsion_m(p));
  r.exps = vec_add(a.exps, b.exps);
  return r;
}

Monomial mono_inv(const AlgebraPresentation& p, const Monomial& a) {
  Monomial r;
  r.exps = vec_neg(a.exps);
  r.scalar = mod_norm(-a.scalar - cross_scalar(p, a.exps, r.exps),
                      torsion_m(p));
  return r;
}

Degree mono_degree(const AlgebraPresentation& p, const Monomial& a) {
  Degree d(p.ambient_rank());
  for (std::size_t i = 0; i < p.ngens(); ++i)
    d = vec_add(d, vec_scale(a.exps[i], p.generators[i].degree));
  return d;
}

bool mono_is_central(const AlgebraPresentation& p, const Monomial& a) {
  Int m = torsion_m(p);
  Vec comm = row_mul(a.exps, p.commutation);
  for (const auto& c : comm)
    if (mod_norm(c, m) != 0) return false;
  if (!vec_is_zero(theta_image(p, a.exps))) return false;
  return p.center.contains(mono_degree(p, a));
}

GradeLattice gamma_E(const AlgebraPresentation& p) {
  return lattice_join(p.center,
                      GradeLattice(p.ambient_rank(), degree_matrix(p)));
}

FGAbGroup gamma_quotient(const AlgebraPresentation& p) {
  std::size_t k = p.ngens();
  IntMatrix stacked = stack_rows(degree_matrix(p), p.center.basis());
  std::vector<Vec> rel;
  for (const auto& ker : left_kernel(stacked))
    rel.push_back(Vec(ker.begin(), ker.begin() + k));
  return FGAbGroup(k, IntMatrix::from_rows(rel, k));
}

ValidationReport validate_presentation(const AlgebraPresentation& p) {
  ValidationReport rep;
  std::size_t k = p.ngens();
  require(p.commutation.rows() == k && p.commutation.cols() == k,
          Errc::InconsistentCommutation, "commutation matrix must be k x k");
  auto tm = torsion_model(p.residue);
  require(tm.has_value() || p.commutation.is_zero(),
          Errc::ResidueTorsionUnknown,
          "nontrivial commutation needs a residue torsion description");
  Int m = tm ? tm->m : Int(1);
  rep.torsion_m = m;
  for (std::size_t i = 0; i < k; ++i) {
    require(mod_norm(p.commutation(i, i), m) == 0,
            Errc::InconsistentCommutation, "beta_ii must be 1");
    for (std::size_t j = 0; j < k; ++j)
      require(mod_norm(p.commutation(i, j) + p.commutation(j, i), m) == 0,
              Errc::InconsistentCommutation, "beta_ij * beta_ji must be 1");
  }
  FGAbGroup h = theta_group(p);
  if (p.extension && !p.extension->theta_images.empty())
    require(p.extension->theta_images.size() == k, Errc::InsufficientResidueData,
            "theta image count must match the generators");
  for (std::size_t i = 0; i < k; ++i) {
    const auto& g = p.generators[i];
    require(g.power >= 1, Errc::NonCentralPower, "generator power must be >= 1");
    require(g.degree.size() == p.ambient_rank(), Errc::RankMismatch,
            "generator degree rank");
    require(p.center.contains(vec_scale(g.power, g.degree)),
            Errc::NonCentralPower,
            "declared central power has degree outside the center lattice");
    // the power must also commute with everything
    for (std::size_t j = 0; j < k; ++j)
      require(mod_norm(g.power * p.commutation(i, j), m) == 0,
              Errc::NonCentralPower,
              "declared central power does not commute with the generators");
    if (!h.is_trivial() && p.extension && !p.extension->theta_images.empty())
      require(h.is_zero(vec_scale(g.power, h.reduce(p.extension->theta_images[i]))),
              Errc::NonCentralPower,
              "declared central power acts nontrivially on the residue");
  }
  FGAbGroup q = gamma_quotient(p);
  require(q.finite(), Errc::InfiniteRamification,
          "Gamma_E has infinite index over Gamma_T");
  // theta must be well defined on Gamma_E/Gamma_T
  if (p.extension && !p.extension->theta_images.empty()) {
    for (std::size_t i = 0; i < q.relations().rows(); ++i)
      require(vec_is_zero(theta_image(p, q.relations().row(i))),
              Errc::InsufficientResidueData,
              "theta images are not well defined modulo Gamma_T");
  }
  rep.index = q.order();
  rep.ok = true;
  return rep;
}

namespace {

Int e0_over_t0(const AlgebraPresentation& p) {
  if (std::holds_alternative<AbstractResidueDatum>(p.residue)) {
    require(p.extension.has_value(), Errc::InsufficientResidueData,
            "abstract residue data without extension degrees");
  }
  if (!p.extension) return 1;
  return p.extension->ind_E0 * p.extension->ind_E0 * p.extension->z_degree;
}

}  // namespace

ClassifyReport classify(const AlgebraPresentation& p) {
  validate_presentation(p);
  ClassifyReport rep{};
  FGAbGroup q = gamma_quotient(p);
  rep.index = q.order();
  rep.e = q.exponent();
  rep.e0_t0 = e0_over_t0(p);
  Int ind_e0 = p.extension ? p.extension->ind_E0 : Int(1);
  Int zdeg = p.extension ? p.extension->z_degree : Int(1);
  rep.n = isqrt_exact(rep.e0_t0 * rep.index, Errc::InsufficientResidueData,
                      "[E0:T0] * |Gamma_E:Gamma_T| is not a perfect square");
  require(rep.n % (ind_e0 * zdeg) == 0, Errc::InsufficientResidueData,
          "ind(E) is not divisible by ind(E0) [Z(E0):T0]");
  rep.partial = rep.n / (ind_e0 * zdeg);
  rep.inertially_split = rep.partial == 1;
  if (rep.index == 1) {
    require(zdeg == 1, Errc::InsufficientResidueData,
            "unramified algebra with a nontrivial residue Galois group");
    rep.tag = CaseTag::Unramified;
  } else if (rep.e0_t0 == 1) {
    rep.tag = CaseTag::TotallyRamified;
  } else if (ind_e0 == 1 && rep.e0_t0 == rep.index) {
    rep.tag = CaseTag::Semiramified;
  } else if (rep.inertially_split) {
    rep.tag = CaseTag::InertiallySplit;
  } else {
    rep.tag = CaseTag::General;
  }
  return rep;
}

Int SymplecticPairing::eval(const Vec& x, const Vec& y) const {
  Int s = 0;
  for (std::size_t i = 0; i < values.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < values.cols(); ++j)
      if (y[j] != 0) s += values(i, j) * x[i] * y[j];
  }
  return mod_norm(s, e);
}

SymplecticPairing symplectic_pairing(const AlgebraPresentation& p) {
  ClassifyReport c = classify(p);
  require(c.tag == CaseTag::TotallyRamified || c.index == 1,
          Errc::NotTotallyRamified,
          "pairing requires a totally ramified presentation");
  auto tm = torsion_model(p.residue);
  require(tm.has_value(), Errc::ResidueTorsionUnknown,
          "pairing needs the residue torsion");
  SymplecticPairing sp;
  sp.group = gamma_quotient(p);
  sp.e = sp.group.exponent();
  sp.m = tm->m;
  require(sp.e == 0 || tm->m % sp.e == 0, Errc::DegeneratePairing,
          "the residue does not contain the e-th roots of unity");
  std::size_t k = p.ngens();
  // well-definedness on cosets: relations pair trivially with everything
  for (std::size_t r = 0; r < sp.group.relations().rows(); ++r) {
    Vec c_row = row_mul(sp.group.relations().row(r), p.commutation);
    for (const auto& x : c_row)
      require(mod_norm(x, sp.m) == 0, Errc::DegeneratePairing,
              "commutation values are not well defined modulo Gamma_T");
  }
  // scale exponents from mod m to mod e
  sp.values = IntMatrix(k, k);
  if (sp.e > 0) {
    Int step = sp.m / sp.e;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Int v = mod_norm(p.commutation(i, j), sp.m);
        require(v % step == 0, Errc::DegeneratePairing,
                "commutation value does not lie in mu_e");
        sp.values(i, j) = v / step;
      }
  }
  // nondegenerate: the radical {x : x B = 0 mod e} must die in the group
  IntMatrix cond = stack_rows(sp.values, mat_scale(sp.e, IntMatrix::identity(k)));
  for (const auto& ker : left_kernel(cond)) {
    Vec x(ker.begin(), ker.begin() + k);
    require(sp.group.is_zero(x), Errc::DegeneratePairing,
            "pairing has a nontrivial radical");
  }
  return sp;
}

std::vector<HyperbolicPair> symplectic_basis(const SymplecticPairing& sp) {
  require(sp.group.finite(), Errc::DegeneratePairing, "group must be finite");
  std::vector<HyperbolicPair> pairs;
  if (sp.group.order() == 1) return pairs;

  // current orthogonal complement, as generators in group coordinates
  std::vector<Vec> cur;
  for (std::size_t i = 0; i < sp.group.ngens(); ++i)
    cur.push_back(sp.group.gen(i));

  for (;;) {
    Subgroup c = subgroup_generated(sp.group, cur);
    FGAbGroup cg = subgroup_group(c);
    if (cg.order() == 1) break;
    Int target = cg.exponent();
    // x in C whose pairing row against C's generators has maximal order
    Vec best_x;
    Int best_ord = 0;
    for (const auto& coeff : cg.enumerate()) {
      Vec x = sp.group.zero();
      for (std::size_t i = 0; i < c.gens.size(); ++i)
        x = sp.group.add(x, sp.group.scale(coeff[i], c.gens[i]));
      Int g = sp.e;
      for (const auto& gen : c.gens) g = gcd_int(g, sp.eval(x, gen));
      Int ord = g == 0 ? Int(1) : sp.e / g;
      if (ord > best_ord) {
        best_ord = ord;
        best_x = x;
        if (ord == target) break;
      }
    }
    require(best_ord == target && sp.group.element_order(best_x) == best_ord,
            Errc::DegeneratePairing,
            "pairing is degenerate on the complement");
    // combine generators into y with eval(x, y) of order best_ord
    Int g = sp.e;
    for (const auto& gen : c.gens) g = gcd_int(g, sp.eval(best_x, gen));
    // build y = sum c_i gen_i with sum c_i v_i == g (mod e)
    Vec y = sp.group.zero();
    Int acc = 0;
    for (const auto& gen : c.gens) {
      Int v = sp.eval(best_x, gen);
      if (v == 0) continue;
      if (acc == 0) {
        y = gen;
        acc = v;
        continue;
      }
      // extended gcd step: find s, t with s*acc + t*v == gcd(acc, v) mod e
      Int a = acc, b = v, s0 = 1, t0 = 0, s1 = 0, t1 = 1;
      while (b != 0) {
        Int qd = a / b;
        a -= qd * b;
        s0 -= qd * s1;
        t0 -= qd * t1;
        std::swap(a, b);
        std::swap(s0, s1);
        std::swap(t0, t1);
      }
      Vec ny = sp.group.add(sp.group.scale(s0, y), sp.group.scale(t0, gen));
      y = ny;
      acc = mod_norm(sp.eval(best_x, y), sp.e);
    }
    require(acc != 0 && sp.e / gcd_int(acc, sp.e) == best_ord,
            Errc::DegeneratePairing, "could not combine a hyperbolic partner");
    pairs.push_back(HyperbolicPair{best_x, y, best_ord});
    // orthogonal complement of <x, y> inside C
    std::size_t s = c.gens.size();
    IntMatrix conds(s, 2);
    for (std::size_t i = 0; i < s; ++i) {
      conds(i, 0) = sp.eval(c.gens[i], best_x);
      conds(i, 1) = sp.eval(c.gens[i], y);
    }
    // coefficient vectors with both pairings = 0 mod e
    std::vector<Vec> next;
    IntMatrix full = stack_rows(conds, mat_scale(sp.e, IntMatrix::identity(2)));
    for (const auto& ker : left_kernel(full)) {
      Vec coeff(ker.begin(), ker.begin() + s);
      Vec z = sp.group.zero();
      for (std::size_t i = 0; i < s; ++i)
        z = sp.group.add(z, sp.group.scale(coeff[i], c.gens[i]));
      if (!vec_is_zero(z)) next.push_back(z);
    }
    cur = next;
  }
  return pairs;
}

std::vector<ArmatureFactor> armature_decomposition(
    const AlgebraPresentation& p, const InvolutionDescriptor& tau) {
  InvolutionReport irep = validate_involution(p, tau);
  ClassifyReport c = classify(p);
  require(c.tag == CaseTag::TotallyRamified, Errc::CaseMismatch,
          "decomposition requires E totally ramified over T");
  require(irep.tr_case == TRCase::TRTotallyRamified, Errc::CaseMismatch,
          "decomposition requires T totally ramified over R");
  require(c.e == 2, Errc::CaseMismatch,
          "decomposition requires exponent 2 ramification");
  SymplecticPairing sp = symplectic_pairing(p);
  // doubled degrees must land in Gamma_R (tau fixes every square)
  GradeLattice ge = gamma_E(p);
  for (std::size_t i = 0; i < ge.basis().rows(); ++i)
    require(tau.gamma_R.contains(vec_scale(2, ge.basis().row(i))),
            Errc::CaseMismatch, "2 Gamma_E is not contained in Gamma_R");

  auto pairs = symplectic_basis(sp);
  std::vector<ArmatureFactor> factors;
  auto tm = torsion_model(p.residue);
  Int m = tm->m;
  for (const auto& pr : pairs) {
    require(pr.order == 2, Errc::CaseMismatch, "non-quaternion armature block");
    Degree di = mono_degree(p, Monomial{0, pr.x});
    Degree dj = mono_degree(p, Monomial{0, pr.y});
    AlgebraPresentation q;
    q.center = tau.gamma_R;
    q.generators = {GeneratorSpec{di, 2}, GeneratorSpec{dj, 2}};
    Int half = m / 2;
    q.commutation = IntMatrix{{Int(0), half}, {Int(-half), Int(0)}};
    q.residue = RootsOfUnityDatum{m, 1, false};
    validate_presentation(q);
    factors.push_back(ArmatureFactor{q, pr.x, pr.y});
  }
  // cross commutation between distinct factors must be trivial
  for (std::size_t a = 0; a < factors.size(); ++a)
    for (std::size_t b = a + 1; b < factors.size(); ++b) {
      for (const Vec* u : {&factors[a].i_exps, &factors[a].j_exps})
        for (const Vec* v : {&factors[b].i_exps, &factors[b].j_exps})
          require(sp.eval(*u, *v) == 0, Errc::CaseMismatch,
                  "factors do not commute");
    }
  // the factor degrees together with Gamma_T must recover Gamma_E
  std::vector<Vec> degs;
  for (const auto& f : factors) {
    degs.push_back(mono_degree(p, Monomial{0, f.i_exps}));
    degs.push_back(mono_degree(p, Monomial{0, f.j_exps}));
  }
  GradeLattice span = lattice_join(
      p.center,
      GradeLattice(p.ambient_rank(),
                   IntMatrix::from_rows(degs, p.ambient_rank())));
  require(span == gamma_E(p), Errc::CaseMismatch,
          "factor degrees do not span Gamma_E over Gamma_T");
  return factors;
}

}  // namespace gradsk
