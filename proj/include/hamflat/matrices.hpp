#ifndef HAMFLAT_MATRICES_HPP
#define HAMFLAT_MATRICES_HPP

#include <vector>

#include "hamflat/poly.hpp"

namespace hamflat {

// Dense matrix of polynomials sharing one variable dimension.
class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, int dim);
  static PolyMatrix identity(int n, int dim);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int dim() const { return dim_; }

  Poly& at(int r, int c) { return entries_[static_cast<size_t>(r * cols_ + c)]; }
  const Poly& at(int r, int c) const { return entries_[static_cast<size_t>(r * cols_ + c)]; }

  bool is_zero() const;
  bool is_symmetric() const;
  PolyMatrix transpose() const;

  PolyMatrix operator-() const;
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix operator*(const Rational& c) const;

  bool operator==(const PolyMatrix& o) const;
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

 private:
  int rows_, cols_, dim_;
  std::vector<Poly> entries_;
};

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b);  // ab - ba

// Constant symmetric matrix with nonzero determinant, checked at
// construction. Size 0 is permitted as the empty matrix (det convention 1)
// so that operators without a nonlocal tail can be described.
class ConstSymMatrix {
 public:
  explicit ConstSymMatrix(std::vector<std::vector<Rational>> grid);
  static ConstSymMatrix identity(int n);
  static ConstSymMatrix antidiagonal_ones(int n);

  int size() const { return size_; }
  const Rational& at(int r, int c) const { return entries_[static_cast<size_t>(r * size_ + c)]; }

  Rational determinant() const { return det_; }
  // Exact inverse, computed by fraction-free (Bareiss) elimination on the
  // denominator-cleared integer matrix.
  ConstSymMatrix inverse() const;

  // Embeds into a PolyMatrix of constant entries over `dim` variables.
  PolyMatrix as_poly_matrix(int dim) const;

  bool operator==(const ConstSymMatrix& o) const {
    return size_ == o.size_ && entries_ == o.entries_;
  }

 private:
  ConstSymMatrix(int size, std::vector<Rational> entries, Rational det)
      : size_(size), entries_(std::move(entries)), det_(std::move(det)) {}

  int size_;
  std::vector<Rational> entries_;
  Rational det_;
};

// Rank-3 array of polynomials, e.g. the b^{ij}_k coefficients. Indices are
// 0-based positions; the report layer converts to 1-based for display.
class PolyTensor3 {
 public:
  PolyTensor3(int n1, int n2, int n3, int dim);

  int size1() const { return n1_; }
  int size2() const { return n2_; }
  int size3() const { return n3_; }
  int dim() const { return dim_; }

  Poly& at(int i, int j, int k) { return entries_[index(i, j, k)]; }
  const Poly& at(int i, int j, int k) const { return entries_[index(i, j, k)]; }

  bool is_zero() const;

 private:
  size_t index(int i, int j, int k) const {
    return static_cast<size_t>((i * n2_ + j) * n3_ + k);
  }
  int n1_, n2_, n3_, dim_;
  std::vector<Poly> entries_;
};

class PolyTensor4 {
 public:
  PolyTensor4(int n1, int n2, int n3, int n4, int dim);

  int size1() const { return n1_; }
  int size2() const { return n2_; }
  int size3() const { return n3_; }
  int size4() const { return n4_; }
  int dim() const { return dim_; }

  Poly& at(int i, int j, int k, int l) { return entries_[index(i, j, k, l)]; }
  const Poly& at(int i, int j, int k, int l) const { return entries_[index(i, j, k, l)]; }

  bool is_zero() const;

 private:
  size_t index(int i, int j, int k, int l) const {
    return static_cast<size_t>(((i * n2_ + j) * n3_ + k) * n4_ + l);
  }
  int n1_, n2_, n3_, n4_, dim_;
  std::vector<Poly> entries_;
};

}  // namespace hamflat

#endif
