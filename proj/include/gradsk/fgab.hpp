#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gradsk/snf.hpp"

namespace gradsk {

// Finitely generated abelian group presented by an integer relation matrix:
// G = Z^ngens / (row lattice of relations). Elements are coordinate vectors
// in the generators, kept in a canonical reduced form so equality is
// coordinate equality.
class FGAbGroup {
public:
  FGAbGroup() { init(); }
  explicit FGAbGroup(std::size_t ngens, IntMatrix relations = IntMatrix());
  // direct sum of Z/d_i, with d_i = 0 meaning a Z factor
  static FGAbGroup from_invariants(const Vec& ds);
  static FGAbGroup cyclic(const Int& n);
  static FGAbGroup trivial() { return FGAbGroup(0); }

  std::size_t ngens() const { return ngens_; }
  const IntMatrix& relations() const { return relations_; }

  Vec reduce(const Vec& x) const;
  bool is_zero(const Vec& x) const;
  bool equal(const Vec& a, const Vec& b) const;
  Vec zero() const { return Vec(ngens_); }
  Vec gen(std::size_t i) const;
  Vec add(const Vec& a, const Vec& b) const { return reduce(vec_add(a, b)); }
  Vec sub(const Vec& a, const Vec& b) const { return reduce(vec_sub(a, b)); }
  Vec neg(const Vec& a) const { return reduce(vec_neg(a)); }
  Vec scale(const Int& c, const Vec& a) const { return reduce(vec_scale(c, a)); }

  // torsion ascending by divisibility with 1s dropped, then 0s for free rank
  const Vec& invariant_factors() const { return invfac_; }
  bool finite() const;
  bool is_trivial() const;
  Int order() const;     // throws InfiniteGroup
  Int exponent() const;  // lcm of invariant factors; 0 when there is free rank
  Int element_order(const Vec& x) const;  // 0 = infinite order
  std::vector<Vec> enumerate() const;     // throws InfiniteGroup

  bool isomorphic(const FGAbGroup& o) const {
    return invfac_ == o.invfac_;
  }
  bool same_presentation(const FGAbGroup& o) const {
    return ngens_ == o.ngens_ && relations_ == o.relations_;
  }

  // full relation lattice membership (x == 0 in G)
  const IntMatrix& relation_lattice() const { return relations_; }

private:
  void init();
  std::size_t ngens_ = 0;
  IntMatrix relations_;  // canonical row basis of the relation lattice
  IntMatrix V_, Vinv_;   // x -> x*V diagonalizes the relation lattice
  Vec diag_;             // length ngens_: d_i >= 0
  Vec invfac_;
};

struct Subgroup {
  FGAbGroup ambient;
  std::vector<Vec> gens;  // reduced ambient coordinates
};

struct GroupHom {
  FGAbGroup source, target;
  IntMatrix matrix;  // source ngens x target ngens, acting as x -> x*matrix
};

Subgroup subgroup_generated(const FGAbGroup& g, const std::vector<Vec>& elems);
Subgroup trivial_subgroup(const FGAbGroup& g);
Subgroup full_subgroup(const FGAbGroup& g);

bool sub_contains(const Subgroup& h, const Vec& x);
// coefficients c with sum c_i * gens_i == x in the ambient group
std::optional<Vec> solve_membership(const Subgroup& h, const Vec& x);
bool sub_leq(const Subgroup& a, const Subgroup& b);  // a subset of b
bool sub_equal(const Subgroup& a, const Subgroup& b);
Subgroup sub_join(const Subgroup& a, const Subgroup& b);
Subgroup sub_intersect(const Subgroup& a, const Subgroup& b);
Int sub_order(const Subgroup& h);

// presentation of the subgroup on its own generators
FGAbGroup subgroup_group(const Subgroup& h);
// quotient of the ambient group by a subgroup
FGAbGroup quotient(const FGAbGroup& g, const Subgroup& h);
// n/d for subgroups d <= n of a common ambient group (checked)
FGAbGroup subquotient(const Subgroup& n, const Subgroup& d);

GroupHom make_hom(const FGAbGroup& src, const FGAbGroup& tgt, IntMatrix m);
GroupHom identity_hom(const FGAbGroup& g);
GroupHom zero_hom(const FGAbGroup& src, const FGAbGroup& tgt);
GroupHom scalar_hom(const FGAbGroup& g, const Int& c);
// x -> g(f(x))
GroupHom hom_compose(const GroupHom& f, const GroupHom& g);
GroupHom hom_add(const GroupHom& f, const GroupHom& g);
GroupHom hom_sub(const GroupHom& f, const GroupHom& g);
Vec hom_apply(const GroupHom& f, const Vec& x);
bool hom_equal(const GroupHom& f, const GroupHom& g);

Subgroup hom_kernel(const GroupHom& f);
Subgroup hom_image(const GroupHom& f);
Subgroup preimage(const GroupHom& f, const Subgroup& h);

// Product over epsilon-tuples of W at 0/1 combinations of the given
// generators of A. Under the hypothesis W_a <= W_b * W_{2b-a} this equals
// the product of W_a over all of A; check_hypothesis verifies it first
// (A must then be finite).
Subgroup lembe_product(const FGAbGroup& u, const FGAbGroup& a,
                       const std::function<Subgroup(const Vec&)>& w,
                       const std::vector<Vec>& gens, bool check_hypothesis);
bool lembe_hypothesis_holds(const FGAbGroup& u, const FGAbGroup& a,
                            const std::function<Subgroup(const Vec&)>& w);
// brute-force oracle side: product of W_a over every a in A
Subgroup lembe_full_product(const FGAbGroup& u, const FGAbGroup& a,
                            const std::function<Subgroup(const Vec&)>& w);

}  // namespace gradsk
