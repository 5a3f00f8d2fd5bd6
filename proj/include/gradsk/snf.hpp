#pragma once

#include <optional>
#include <vector>

#include "gradsk/matrix.hpp"

namespace gradsk {

// U * A * V = S with U, V unimodular and S diagonal, d1 | d2 | ... | dk >= 0.
struct SmithForm {
  IntMatrix U, S, V;
  // diagonal entries padded with zeros up to min(rows, cols)
  Vec diag() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

// One integer solution x of x*A = b, if any.
std::optional<Vec> solve_left(const IntMatrix& a, const Vec& b);

// Basis of the left kernel {x : x*A = 0}.
std::vector<Vec> left_kernel(const IntMatrix& a);

// Is v in the lattice spanned by the rows of A?
bool in_row_lattice(const IntMatrix& a, const Vec& v);

// Canonical basis of the row lattice of A: Hermite form, pivots positive,
// entries above a pivot reduced into [0, pivot). Zero rows dropped.
IntMatrix row_lattice_basis(const IntMatrix& a);

// Inverse of a unimodular matrix (exact; throws if not unimodular).
IntMatrix unimodular_inverse(const IntMatrix& u);

}  // namespace gradsk
