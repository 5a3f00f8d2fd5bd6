#include "gradsk/grading.hpp"

namespace gradsk {

GradeLattice::GradeLattice(std::size_t ambient_rank, const IntMatrix& gens)
    : ambient_rank_(ambient_rank) {
  require(gens.cols() == ambient_rank || gens.rows() == 0,
          Errc::RankMismatch, "lattice generators have wrong width");
  basis_ = row_lattice_basis(gens.rows() ? gens : IntMatrix(0, ambient_rank));
}

GradeLattice GradeLattice::full(std::size_t r) {
  return GradeLattice(r, IntMatrix::identity(r));
}

GradeLattice GradeLattice::scaled(const Vec& diag) {
  return GradeLattice(diag.size(), IntMatrix::diagonal(diag));
}

GradeLattice GradeLattice::zero(std::size_t r) {
  return GradeLattice(r, IntMatrix(0, r));
}

bool GradeLattice::contains(const Degree& v) const {
  require(v.size() == ambient_rank_, Errc::RankMismatch, "degree rank");
  return in_row_lattice(basis_, v);
}

std::optional<Vec> GradeLattice::coords_of(const Degree& v) const {
  require(v.size() == ambient_rank_, Errc::RankMismatch, "degree rank");
  return solve_left(basis_, v);
}

bool GradeLattice::contains_lattice(const GradeLattice& small) const {
  require(small.ambient_rank_ == ambient_rank_, Errc::RankMismatch,
          "lattices in different ambients");
  for (std::size_t i = 0; i < small.basis_.rows(); ++i)
    if (!contains(small.basis_.row(i))) return false;
  return true;
}

int lex_compare(const Degree& a, const Degree& b) {
  require(a.size() == b.size(), Errc::RankMismatch, "comparing mixed ranks");
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

GradeLattice lattice_join(const GradeLattice& a, const GradeLattice& b) {
  require(a.ambient_rank() == b.ambient_rank(), Errc::RankMismatch,
          "joining lattices in different ambients");
  return GradeLattice(a.ambient_rank(), stack_rows(a.basis(), b.basis()));
}

FGAbGroup quotient_lattice(const GradeLattice& big, const GradeLattice& small) {
  require(big.ambient_rank() == small.ambient_rank(), Errc::RankMismatch,
          "quotient of lattices in different ambients");
  std::vector<Vec> rel;
  for (std::size_t i = 0; i < small.basis().rows(); ++i) {
    auto c = big.coords_of(small.basis().row(i));
    require(c.has_value(), Errc::NotASublattice,
            "small lattice is not contained in the big one");
    rel.push_back(*c);
  }
  return FGAbGroup(big.rank(), IntMatrix::from_rows(rel, big.rank()));
}

Int lattice_index(const GradeLattice& big, const GradeLattice& small) {
  FGAbGroup q = quotient_lattice(big, small);
  return q.finite() ? q.order() : Int(0);
}

bool fundamental_equality_check(const Int& dim_es, const Int& dim_e0s0,
                                const GradeLattice& big,
                                const GradeLattice& small) {
  Int idx = lattice_index(big, small);
  require(idx != 0, Errc::InfiniteIndex, "fundamental equality needs finite index");
  return dim_es == dim_e0s0 * idx;
}

}  // namespace gradsk
