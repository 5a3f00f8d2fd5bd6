#include "gradsk/snf.hpp"

#include <algorithm>

namespace gradsk {

Vec SmithForm::diag() const {
  std::size_t k = std::min(S.rows(), S.cols());
  Vec d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = S(i, i);
  return d;
}

namespace {

// floor division quotient; keeps remainders small and nonnegative drift bounded
Int fdiv(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

// position of the entry of smallest nonzero absolute value in S[t.., t..]
bool smallest_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi,
                    std::size_t& pj) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      Int a = abs_int(s(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm f{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  IntMatrix& s = f.S;
  std::size_t k = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t pi = t, pj = t;
    if (!smallest_pivot(s, t, pi, pj)) break;  // rest is zero
    s.swap_rows(t, pi);
    f.U.swap_rows(t, pi);
    s.swap_cols(t, pj);
    f.V.swap_cols(t, pj);
    for (;;) {
      // clear column t; a nonzero remainder is strictly smaller than the
      // pivot, promote it and start over
      bool restart = false;
      for (std::size_t i = t + 1; i < s.rows() && !restart; ++i) {
        if (s(i, t) == 0) continue;
        Int q = fdiv(s(i, t), s(t, t));
        s.add_row(i, t, -q);
        f.U.add_row(i, t, -q);
        if (s(i, t) != 0) {
          s.swap_rows(t, i);
          f.U.swap_rows(t, i);
          restart = true;
        }
      }
      if (restart) continue;
      for (std::size_t j = t + 1; j < s.cols() && !restart; ++j) {
        if (s(t, j) == 0) continue;
        Int q = fdiv(s(t, j), s(t, t));
        s.add_col(j, t, -q);
        f.V.add_col(j, t, -q);
        if (s(t, j) != 0) {
          s.swap_cols(t, j);
          f.V.swap_cols(t, j);
          restart = true;
        }
      }
      if (restart) continue;
      // pivot divides everything below-right, or fold a bad row in and retry
      bool divides = true;
      for (std::size_t i = t + 1; i < s.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < s.cols() && divides; ++j)
          if (s(i, j) % s(t, t) != 0) {
            s.add_row(t, i, 1);
            f.U.add_row(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

std::optional<Vec> solve_left(const IntMatrix& a, const Vec& b) {
  require(b.size() == a.cols(), Errc::DimensionMismatch, "solve_left shapes");
  SmithForm f = smith_normal_form(a);
  Vec w = row_mul(b, f.V);
  std::size_t k = std::min(a.rows(), a.cols());
  Vec z(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (j < k && f.S(j, j) != 0) {
      if (w[j] % f.S(j, j) != 0) return std::nullopt;
      z[j] = w[j] / f.S(j, j);
    } else if (w[j] != 0) {
      return std::nullopt;
    }
  }
  return row_mul(z, f.U);
}

std::vector<Vec> left_kernel(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  std::size_t k = std::min(a.rows(), a.cols());
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (i >= k || f.S(i, i) == 0) basis.push_back(f.U.row(i));
  return basis;
}

bool in_row_lattice(const IntMatrix& a, const Vec& v) {
  return solve_left(a, v).has_value();
}

IntMatrix row_lattice_basis(const IntMatrix& a) {
  // integer row-ops only; unique Hermite form of the row lattice
  IntMatrix h = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    // reduce column c below r to a single nonzero entry via gcd steps
    for (;;) {
      std::size_t p = h.rows();
      Int best = 0;
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, c) != 0 && (p == h.rows() || abs_int(h(i, c)) < best)) {
          p = i;
          best = abs_int(h(i, c));
        }
      if (p == h.rows()) break;  // column clear
      h.swap_rows(r, p);
      bool all_clear = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Int q = h(i, c) / h(r, c);
        h.add_row(i, r, -q);
        if (h(i, c) != 0) all_clear = false;
      }
      if (all_clear) break;
    }
    if (h(r, c) != 0) {
      if (h(r, c) < 0) h.negate_row(r);
      // reduce entries above the pivot into [0, pivot)
      for (std::size_t i = 0; i < r; ++i) {
        Int q = fdiv(h(i, c), h(r, c));
        if (q != 0) h.add_row(i, r, -q);
      }
      ++r;
    }
  }
  IntMatrix out(r, h.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  require(u.rows() == u.cols(), Errc::DimensionMismatch, "inverse of non-square");
  std::size_t n = u.rows();
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = 1;
    auto x = solve_left(u, e);  // x * u = e_i
    require(x.has_value(), Errc::SolveFailed, "matrix is not unimodular");
    inv.set_row(i, *x);
  }
  return inv;
}

}  // namespace gradsk
