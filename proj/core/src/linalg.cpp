#include "homleib/linalg.hpp"

namespace homleib {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw ShapeError(msg);
}

}  // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(const FieldPtr& f, std::size_t dim) : field_(f), coords_(dim, Scalar::zero(f)) {}

Vector Vector::basis(const FieldPtr& f, std::size_t dim, std::size_t index) {
  Vector v(f, dim);
  v.coords_.at(index) = Scalar::one(f);
  return v;
}

Vector Vector::operator+(const Vector& o) const {
  require(dim() == o.dim(), "vector dimension mismatch");
  Vector r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r.coords_[i] = coords_[i] + o.coords_[i];
  return r;
}

Vector Vector::operator-(const Vector& o) const {
  require(dim() == o.dim(), "vector dimension mismatch");
  Vector r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r.coords_[i] = coords_[i] - o.coords_[i];
  return r;
}

Vector Vector::operator-() const {
  Vector r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

Vector Vector::scaled(const Scalar& c) const {
  Vector r = *this;
  for (auto& x : r.coords_) x = x * c;
  return r;
}

bool Vector::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool Vector::operator==(const Vector& o) const {
  if (dim() != o.dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (coords_[i] != o.coords_[i]) return false;
  return true;
}

std::vector<std::string> Vector::to_strings() const {
  std::vector<std::string> out;
  out.reserve(dim());
  for (const auto& c : coords_) out.push_back(c.to_string());
  return out;
}

// ---------------------------------------------------------------- LinearMap

LinearMap::LinearMap(const FieldPtr& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), m_(rows * cols, Scalar::zero(f)) {}

LinearMap LinearMap::identity(const FieldPtr& f, std::size_t n) {
  LinearMap m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

LinearMap LinearMap::zero(const FieldPtr& f, std::size_t rows, std::size_t cols) {
  return LinearMap(f, rows, cols);
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch");
  LinearMap r = *this;
  for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] = m_[i] + o.m_[i];
  return r;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch");
  LinearMap r = *this;
  for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] = m_[i] - o.m_[i];
  return r;
}

LinearMap LinearMap::operator-() const {
  LinearMap r = *this;
  for (auto& c : r.m_) c = -c;
  return r;
}

LinearMap LinearMap::scaled(const Scalar& c) const {
  LinearMap r = *this;
  for (auto& x : r.m_) x = x * c;
  return r;
}

bool LinearMap::operator==(const LinearMap& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < m_.size(); ++i)
    if (m_[i] != o.m_[i]) return false;
  return true;
}

bool LinearMap::is_zero() const {
  for (const auto& c : m_)
    if (!c.is_zero()) return false;
  return true;
}

bool LinearMap::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(field_, rows_);
}

LinearMap LinearMap::transpose() const {
  LinearMap r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

// ---------------------------------------------------------------- Product

Product::Product(const FieldPtr& f, std::size_t dim)
    : field_(f), dim_(dim), c_(dim * dim * dim, Scalar::zero(f)) {}

Product Product::operator+(const Product& o) const {
  require(dim_ == o.dim_, "product dimension mismatch");
  Product r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

bool Product::operator==(const Product& o) const {
  if (dim_ != o.dim_) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

bool Product::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

LinearMap Product::left_matrix(std::size_t i) const {
  LinearMap m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = at(i, j, k);
  return m;
}

LinearMap Product::right_matrix(std::size_t i) const {
  LinearMap m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = at(j, i, k);
  return m;
}

// ---------------------------------------------------------------- Tensor2Element

Tensor2Element::Tensor2Element(const FieldPtr& f, std::size_t dim)
    : field_(f), dim_(dim), c_(dim * dim, Scalar::zero(f)) {}

Tensor2Element Tensor2Element::pure(const Vector& a, const Vector& b) {
  require(a.dim() == b.dim(), "tensor factor dimension mismatch");
  Tensor2Element t(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) t.at(i, j) = a[i] * b[j];
  return t;
}

Tensor2Element Tensor2Element::operator+(const Tensor2Element& o) const {
  require(dim_ == o.dim_, "tensor dimension mismatch");
  Tensor2Element r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Tensor2Element Tensor2Element::operator-(const Tensor2Element& o) const {
  require(dim_ == o.dim_, "tensor dimension mismatch");
  Tensor2Element r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

Tensor2Element Tensor2Element::operator-() const {
  Tensor2Element r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool Tensor2Element::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool Tensor2Element::operator==(const Tensor2Element& o) const {
  if (dim_ != o.dim_) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

std::vector<std::string> Tensor2Element::to_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.to_string());
  return out;
}

// ---------------------------------------------------------------- operations

Vector map_apply(const LinearMap& m, const Vector& v) {
  require(m.cols() == v.dim(), "map/vector dimension mismatch");
  Vector r(m.field(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Scalar acc = Scalar::zero(m.field());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
      acc = acc + m.at(i, j) * v[j];
    }
    r[i] = acc;
  }
  return r;
}

LinearMap map_compose(const LinearMap& m, const LinearMap& n) {
  require(m.cols() == n.rows(), "composition dimension mismatch");
  LinearMap r(m.field(), m.rows(), n.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < n.cols(); ++j) {
      Scalar acc = Scalar::zero(m.field());
      for (std::size_t k = 0; k < m.cols(); ++k) {
        if (m.at(i, k).is_zero() || n.at(k, j).is_zero()) continue;
        acc = acc + m.at(i, k) * n.at(k, j);
      }
      r.at(i, j) = acc;
    }
  return r;
}

LinearMap map_power(const LinearMap& m, std::uint64_t n) {
  require(m.rows() == m.cols(), "powers require a square matrix");
  LinearMap r = LinearMap::identity(m.field(), m.rows());
  LinearMap base = m;
  while (n) {
    if (n & 1) r = map_compose(r, base);
    base = map_compose(base, base);
    n >>= 1;
  }
  return r;
}

Vector product_apply(const Product& p, const Vector& u, const Vector& v) {
  require(p.dim() == u.dim() && p.dim() == v.dim(), "product/vector dimension mismatch");
  Vector r(p.field(), p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < p.dim(); ++j) {
      if (v[j].is_zero()) continue;
      const Scalar uv = u[i] * v[j];
      for (std::size_t k = 0; k < p.dim(); ++k) {
        if (p.at(i, j, k).is_zero()) continue;
        r[k] = r[k] + uv * p.at(i, j, k);
      }
    }
  }
  return r;
}

namespace {

// Fraction-free elimination of [A | rhs...]. Returns the echelon form, the
// pivot column list and the determinant of A (when square). Throws nothing;
// callers inspect the rank.
struct Echelon {
  std::vector<std::vector<Scalar>> m;  // rows x (n + extra)
  std::vector<std::size_t> pivot_cols;
  Scalar det;
  bool det_valid = false;
};

Echelon bareiss(const LinearMap& a, const std::vector<Vector>& rhs) {
  const auto f = a.field();
  const std::size_t n = a.rows(), cols = a.cols(), extra = rhs.size();
  Echelon e;
  e.m.assign(n, std::vector<Scalar>(cols + extra, Scalar::zero(f)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cols; ++j) e.m[i][j] = a.at(i, j);
    for (std::size_t j = 0; j < extra; ++j) e.m[i][cols + j] = rhs[j][i];
  }
  Scalar prev = Scalar::one(f);
  int sign = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && e.m[piv][col].is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != row) {
      std::swap(e.m[piv], e.m[row]);
      sign = -sign;
    }
    const Scalar pivot = e.m[row][col];
    for (std::size_t i = row + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < cols + extra; ++j) {
        e.m[i][j] = (e.m[i][j] * pivot - e.m[i][col] * e.m[row][j]) / prev;
      }
      e.m[i][col] = Scalar::zero(f);
    }
    prev = pivot;
    e.pivot_cols.push_back(col);
    ++row;
  }
  if (cols == n) {
    e.det_valid = true;
    if (e.pivot_cols.size() == n) {
      e.det = sign > 0 ? prev : -prev;
    } else {
      e.det = Scalar::zero(f);
    }
  }
  return e;
}

std::vector<Scalar> kernel_witness_from(const Echelon& e, const FieldPtr& f, std::size_t n) {
  // Pick the first non-pivot column, set it to 1, back-substitute the pivots.
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (free_col < n && is_pivot[free_col]) ++free_col;
  std::vector<Scalar> x(n, Scalar::zero(f));
  if (free_col == n) return x;  // should not happen for singular square input
  x[free_col] = Scalar::one(f);
  for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
    const std::size_t pc = e.pivot_cols[r];
    Scalar acc = Scalar::zero(f);
    for (std::size_t j = pc + 1; j < n; ++j) {
      if (e.m[r][j].is_zero() || x[j].is_zero()) continue;
      acc = acc + e.m[r][j] * x[j];
    }
    x[pc] = -acc / e.m[r][pc];
  }
  return x;
}

}  // namespace

Vector solve_linear(const LinearMap& a, const Vector& b) {
  require(a.rows() == a.cols(), "solve requires a square matrix");
  require(a.rows() == b.dim(), "solve dimension mismatch");
  const auto f = a.field();
  const std::size_t n = a.rows();
  Echelon e = bareiss(a, {b});
  if (e.pivot_cols.size() != n)
    throw SingularMatrixError("singular matrix", kernel_witness_from(e, f, n));
  Vector x(f, n);
  for (std::size_t i = n; i-- > 0;) {
    Scalar acc = e.m[i][n];
    for (std::size_t j = i + 1; j < n; ++j) acc = acc - e.m[i][j] * x[j];
    x[i] = acc / e.m[i][i];
  }
  return x;
}

LinearMap map_inverse(const LinearMap& a) {
  require(a.rows() == a.cols(), "inverse requires a square matrix");
  const auto f = a.field();
  const std::size_t n = a.rows();
  std::vector<Vector> rhs;
  rhs.reserve(n);
  for (std::size_t j = 0; j < n; ++j) rhs.push_back(Vector::basis(f, n, j));
  Echelon e = bareiss(a, rhs);
  if (e.pivot_cols.size() != n)
    throw SingularMatrixError("singular matrix", kernel_witness_from(e, f, n));
  LinearMap inv(f, n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = n; i-- > 0;) {
      Scalar acc = e.m[i][n + col];
      for (std::size_t j = i + 1; j < n; ++j) acc = acc - e.m[i][j] * inv.at(j, col);
      inv.at(i, col) = acc / e.m[i][i];
    }
  }
  return inv;
}

Scalar map_determinant(const LinearMap& a) {
  require(a.rows() == a.cols(), "determinant requires a square matrix");
  Echelon e = bareiss(a, {});
  return e.det;
}

LinearMap dual_map(const LinearMap& m) {
  require(m.rows() == m.cols(), "dual requires a square matrix");
  return -m.transpose();
}

Tensor2Element tensor_apply(const Tensor2Element& e, const LinearMap& lhs, const LinearMap& rhs) {
  require(lhs.cols() == e.dim() && rhs.cols() == e.dim(), "tensor operator dimension mismatch");
  require(lhs.rows() == e.dim() && rhs.rows() == e.dim(), "tensor operator must preserve dimension");
  Tensor2Element r(e.field(), e.dim());
  const std::size_t n = e.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Scalar acc = Scalar::zero(e.field());
      for (std::size_t i = 0; i < n; ++i) {
        if (lhs.at(a, i).is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (e.at(i, j).is_zero() || rhs.at(b, j).is_zero()) continue;
          acc = acc + lhs.at(a, i) * e.at(i, j) * rhs.at(b, j);
        }
      }
      r.at(a, b) = acc;
    }
  return r;
}

Tensor2Element tensor_swap(const Tensor2Element& e) {
  Tensor2Element r(e.field(), e.dim());
  for (std::size_t i = 0; i < e.dim(); ++i)
    for (std::size_t j = 0; j < e.dim(); ++j) r.at(i, j) = e.at(j, i);
  return r;
}

LinearMap kronecker(const LinearMap& a, const LinearMap& b) {
  LinearMap r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b.at(k, l).is_zero()) continue;
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    }
  return r;
}

}  // namespace homleib
