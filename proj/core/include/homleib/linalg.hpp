#ifndef HOMLEIB_LINALG_HPP
#define HOMLEIB_LINALG_HPP

#include "homleib/scalar.hpp"

#include <optional>
#include <vector>

namespace homleib {

class Vector;
class LinearMap;

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& msg, std::vector<Scalar> kernel_witness)
      : std::runtime_error(msg), witness_(std::move(kernel_witness)) {}
  const std::vector<Scalar>& kernel_witness() const { return witness_; }

 private:
  std::vector<Scalar> witness_;
};

/// Coordinate vector over the configured field.
class Vector {
 public:
  Vector() = default;
  Vector(const FieldPtr& f, std::size_t dim);
  static Vector basis(const FieldPtr& f, std::size_t dim, std::size_t index);  // 0-based

  std::size_t dim() const { return coords_.size(); }
  const FieldPtr& field() const { return field_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }

  Vector operator+(const Vector& o) const;
  Vector operator-(const Vector& o) const;
  Vector operator-() const;
  Vector scaled(const Scalar& c) const;
  bool is_zero() const;
  bool operator==(const Vector& o) const;

  std::vector<std::string> to_strings() const;

 private:
  FieldPtr field_;
  std::vector<Scalar> coords_;
};

/// Dense rows x cols matrix; column j is the image of the j-th basis vector.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(const FieldPtr& f, std::size_t rows, std::size_t cols);
  static LinearMap identity(const FieldPtr& f, std::size_t n);
  static LinearMap zero(const FieldPtr& f, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return m_[i * cols_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return m_[i * cols_ + j]; }

  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  LinearMap operator-() const;
  LinearMap scaled(const Scalar& c) const;
  bool operator==(const LinearMap& o) const;
  bool is_zero() const;
  bool is_identity() const;

  LinearMap transpose() const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> m_;
};

/// Structure-constant tensor of a bilinear product: e_i . e_j = sum_k c[i][j][k] e_k.
class Product {
 public:
  Product() = default;
  Product(const FieldPtr& f, std::size_t dim);

  std::size_t dim() const { return dim_; }
  const FieldPtr& field() const { return field_; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }

  Product operator+(const Product& o) const;
  bool operator==(const Product& o) const;
  bool is_zero() const;

  /// Matrix of left multiplication by e_i: v -> e_i . v.
  LinearMap left_matrix(std::size_t i) const;
  /// Matrix of right multiplication by e_i: v -> v . e_i.
  LinearMap right_matrix(std::size_t i) const;

 private:
  FieldPtr field_;
  std::size_t dim_ = 0;
  std::vector<Scalar> c_;
};

/// Element of A (x) A in the basis e_i (x) e_j; coeffs is dim x dim.
class Tensor2Element {
 public:
  Tensor2Element() = default;
  Tensor2Element(const FieldPtr& f, std::size_t dim);
  static Tensor2Element pure(const Vector& a, const Vector& b);

  std::size_t dim() const { return dim_; }
  const FieldPtr& field() const { return field_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return c_[i * dim_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return c_[i * dim_ + j]; }

  Tensor2Element operator+(const Tensor2Element& o) const;
  Tensor2Element operator-(const Tensor2Element& o) const;
  Tensor2Element operator-() const;
  bool is_zero() const;
  bool operator==(const Tensor2Element& o) const;

  std::vector<std::string> to_strings() const;  // row-major flattening

 private:
  FieldPtr field_;
  std::size_t dim_ = 0;
  std::vector<Scalar> c_;
};

Vector map_apply(const LinearMap& m, const Vector& v);
LinearMap map_compose(const LinearMap& m, const LinearMap& n);  // m after n
LinearMap map_power(const LinearMap& m, std::uint64_t n);
Vector product_apply(const Product& p, const Vector& u, const Vector& v);

/// Exact solve by fraction-free (Bareiss) elimination with row pivoting.
/// Throws SingularMatrixError carrying a kernel witness when A is singular.
Vector solve_linear(const LinearMap& a, const Vector& b);
LinearMap map_inverse(const LinearMap& a);
Scalar map_determinant(const LinearMap& a);

/// The signed dual -M^T (the only dual exposed).
LinearMap dual_map(const LinearMap& m);

/// (lhs (x) rhs) applied to a tensor-square element: coeffs -> lhs . coeffs . rhs^T.
Tensor2Element tensor_apply(const Tensor2Element& e, const LinearMap& lhs, const LinearMap& rhs);
/// The exchange operator x (x) y -> y (x) x.
Tensor2Element tensor_swap(const Tensor2Element& e);

/// Kronecker product acting on the flattened basis e_i (x) e_j (row-major).
LinearMap kronecker(const LinearMap& a, const LinearMap& b);

}  // namespace homleib

#endif
