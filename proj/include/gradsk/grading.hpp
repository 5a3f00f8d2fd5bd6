#pragma once

#include <optional>

#include "gradsk/fgab.hpp"

namespace gradsk {

// A degree is a point of the ambient Z^r.
using Degree = Vec;

// Finite-rank sublattice of Z^r. Any generating set is reduced to a
// canonical full-row-rank basis at construction, so equality of lattices is
// equality of bases.
class GradeLattice {
public:
  GradeLattice() : ambient_rank_(0), basis_(0, 0) {}
  GradeLattice(std::size_t ambient_rank, const IntMatrix& gens);
  static GradeLattice full(std::size_t r);
  static GradeLattice scaled(const Vec& diag);  // direct sum of d_i Z
  static GradeLattice zero(std::size_t r);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(const Degree& v) const;
  std::optional<Vec> coords_of(const Degree& v) const;
  bool contains_lattice(const GradeLattice& small) const;
  bool operator==(const GradeLattice& o) const = default;

private:
  std::size_t ambient_rank_;
  IntMatrix basis_;
};

// right-to-left lexicographic total order; the last coordinate dominates
int lex_compare(const Degree& a, const Degree& b);

GradeLattice lattice_join(const GradeLattice& a, const GradeLattice& b);

// presentation of big/small on big's basis; NotASublattice when small is not
// contained in big
FGAbGroup quotient_lattice(const GradeLattice& big, const GradeLattice& small);

// |big : small|; 0 when infinite
Int lattice_index(const GradeLattice& big, const GradeLattice& small);

// dim_ES == dim_E0S0 * |big : small| (the graded dimension bookkeeping)
bool fundamental_equality_check(const Int& dim_es, const Int& dim_e0s0,
                                const GradeLattice& big,
                                const GradeLattice& small);

}  // namespace gradsk
