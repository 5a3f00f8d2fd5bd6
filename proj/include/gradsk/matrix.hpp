#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gradsk/error.hpp"

namespace gradsk {

// All arithmetic in the library is exact. cpp_int keeps value semantics and
// never overflows; there is no floating point anywhere in the engine.
using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}
inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}
// representative of a mod m in [0, m); m > 0
inline Int mod_norm(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}
Int abs_int(const Int& a);

class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static IntMatrix diagonal(const Vec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);

  IntMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const IntMatrix& o) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row a += c * row b ; col a += c * col b
  void add_row(std::size_t a, std::size_t b, const Int& c);
  void add_col(std::size_t a, std::size_t b, const Int& c);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_scale(const Int& c, const IntMatrix& a);
// stack a's rows over b's rows (same column count)
IntMatrix stack_rows(const IntMatrix& a, const IntMatrix& b);
// x * A for a row vector x
Vec row_mul(const Vec& x, const IntMatrix& a);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Int& c, const Vec& a);
bool vec_is_zero(const Vec& a);

// exact determinant (fraction-free Bareiss); square input
Int det(const IntMatrix& a);

}  // namespace gradsk
