#include "hamflat/matrices.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hamflat {

PolyMatrix::PolyMatrix(int rows, int cols, int dim)
    : rows_(rows), cols_(cols), dim_(dim) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("PolyMatrix: negative shape");
  entries_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Poly(dim));
}

PolyMatrix PolyMatrix::identity(int n, int dim) {
  PolyMatrix m(n, n, dim);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(dim, Rational(1));
  return m;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool PolyMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, dim_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix m(*this);
  for (auto& p : m.entries_) p = -p;
  return m;
}

static void require_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.dim() != b.dim())
    throw std::invalid_argument("PolyMatrix: shape mismatch");
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix m(a);
  for (size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] += b.entries_[i];
  return m;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix m(a);
  for (size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] -= b.entries_[i];
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows() || a.dim() != b.dim())
    throw std::invalid_argument("PolyMatrix: inner dimension mismatch");
  PolyMatrix m(a.rows(), b.cols(), a.dim());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return m;
}

PolyMatrix PolyMatrix::operator*(const Rational& c) const {
  PolyMatrix m(*this);
  for (auto& p : m.entries_) p *= c;
  return m;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && dim_ == o.dim_ && entries_ == o.entries_;
}

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) { return a * b - b * a; }

namespace {

// Fraction-free Gauss-Jordan (Montante-Bareiss) on the augmented system
// [M | d*I] over integers. Returns false if M is singular. On success the
// right half holds det(M) * M^{-1} / d and `pivot` holds +/- det(M).
bool bareiss_invert(std::vector<std::vector<mpz_class>>& aug, int n, mpz_class& pivot) {
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n; ++k) {
    if (aug[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
      int r = k + 1;
      while (r < n && aug[static_cast<size_t>(r)][static_cast<size_t>(k)] == 0) ++r;
      if (r == n) return false;
      std::swap(aug[static_cast<size_t>(k)], aug[static_cast<size_t>(r)]);
      sign = -sign;
    }
    const auto& pk = aug[static_cast<size_t>(k)];
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      auto& row = aug[static_cast<size_t>(i)];
      mpz_class lead = row[static_cast<size_t>(k)];
      for (int j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        mpz_class t = pk[static_cast<size_t>(k)] * row[static_cast<size_t>(j)] -
                      lead * pk[static_cast<size_t>(j)];
        mpz_divexact(row[static_cast<size_t>(j)].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[static_cast<size_t>(k)] = 0;
    }
    prev = aug[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  pivot = sign > 0 ? prev : mpz_class(-prev);
  if (sign < 0)
    for (auto& row : aug)
      for (auto& v : row) v = -v;
  return true;
}

}  // namespace

ConstSymMatrix::ConstSymMatrix(std::vector<std::vector<Rational>> grid)
    : size_(static_cast<int>(grid.size())), det_(0) {
  entries_.reserve(static_cast<size_t>(size_) * static_cast<size_t>(size_));
  for (auto& row : grid) {
    if (static_cast<int>(row.size()) != size_)
      throw std::invalid_argument("ConstSymMatrix: grid is not square");
    for (auto& v : row) entries_.push_back(std::move(v));
  }
  for (int i = 0; i < size_; ++i)
    for (int j = i + 1; j < size_; ++j)
      if (at(i, j) != at(j, i)) throw std::invalid_argument("ConstSymMatrix: not symmetric");

  if (size_ == 0) {
    det_ = Rational(1);
    return;
  }
  // Clear denominators, then one Bareiss pass gives the determinant.
  mpz_class lcm = 1;
  for (const auto& v : entries_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
  std::vector<std::vector<mpz_class>> aug(
      static_cast<size_t>(size_), std::vector<mpz_class>(2 * static_cast<size_t>(size_), 0));
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j)
      aug[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          at(i, j).num() * (lcm / at(i, j).den());
    aug[static_cast<size_t>(i)][static_cast<size_t>(size_) + static_cast<size_t>(i)] = 1;
  }
  mpz_class det_scaled;
  if (!bareiss_invert(aug, size_, det_scaled))
    throw std::invalid_argument("ConstSymMatrix: singular matrix");
  mpz_class denom;
  mpz_pow_ui(denom.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(size_));
  det_ = Rational(mpq_class(det_scaled) / mpq_class(denom));
}

ConstSymMatrix ConstSymMatrix::identity(int n) {
  std::vector<std::vector<Rational>> g(static_cast<size_t>(n),
                                       std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rational(1);
  return ConstSymMatrix(std::move(g));
}

ConstSymMatrix ConstSymMatrix::antidiagonal_ones(int n) {
  std::vector<std::vector<Rational>> g(static_cast<size_t>(n),
                                       std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i)
    g[static_cast<size_t>(i)][static_cast<size_t>(n - 1 - i)] = Rational(1);
  return ConstSymMatrix(std::move(g));
}

ConstSymMatrix ConstSymMatrix::inverse() const {
  if (size_ == 0) return *this;
  mpz_class lcm = 1;
  for (const auto& v : entries_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
  std::vector<std::vector<mpz_class>> aug(
      static_cast<size_t>(size_), std::vector<mpz_class>(2 * static_cast<size_t>(size_), 0));
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j)
      aug[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          at(i, j).num() * (lcm / at(i, j).den());
    aug[static_cast<size_t>(i)][static_cast<size_t>(size_) + static_cast<size_t>(i)] = 1;
  }
  mpz_class pivot;
  if (!bareiss_invert(aug, size_, pivot))
    throw std::logic_error("ConstSymMatrix: singular in inverse (checked nondegenerate)");

  // A = M / lcm, so A^{-1} = lcm * M^{-1}; the right half of aug is
  // det(M)*M^{-1} up to the sign already folded into pivot by bareiss_invert.
  std::vector<Rational> inv;
  inv.reserve(entries_.size());
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j)
      inv.push_back(Rational(mpq_class(aug[static_cast<size_t>(i)][static_cast<size_t>(size_) + static_cast<size_t>(j)] * lcm) /
                             mpq_class(pivot)));
  Rational inv_det = Rational(1) / det_;
  return ConstSymMatrix(size_, std::move(inv), std::move(inv_det));
}

PolyMatrix ConstSymMatrix::as_poly_matrix(int dim) const {
  PolyMatrix m(size_, size_, dim);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) m.at(i, j) = Poly::constant(dim, at(i, j));
  return m;
}

PolyTensor3::PolyTensor3(int n1, int n2, int n3, int dim)
    : n1_(n1), n2_(n2), n3_(n3), dim_(dim) {
  entries_.assign(static_cast<size_t>(n1) * static_cast<size_t>(n2) * static_cast<size_t>(n3),
                  Poly(dim));
}

bool PolyTensor3::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyTensor4::PolyTensor4(int n1, int n2, int n3, int n4, int dim)
    : n1_(n1), n2_(n2), n3_(n3), n4_(n4), dim_(dim) {
  entries_.assign(static_cast<size_t>(n1) * static_cast<size_t>(n2) * static_cast<size_t>(n3) *
                      static_cast<size_t>(n4),
                  Poly(dim));
}

bool PolyTensor4::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

}  // namespace hamflat
