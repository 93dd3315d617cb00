#pragma once

// Exact linear algebra: dense matrices over Z and Q, an incremental
// Hermite-form lattice basis, Bareiss determinants, elimination over F_p and
// the local (p-adic) Smith form.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "modrep/arith.hpp"

namespace modrep {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  std::vector<T> operator*(std::span<const T> v) const {
    if (v.size() != cols_) throw InternalError("matrix-vector dimension mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      T acc = 0;
      for (std::size_t c = 0; c < cols_; ++c)
        if (v[c] != 0 && (*this)(r, c) != 0) acc += (*this)(r, c) * v[c];
      out[r] = acc;
    }
    return out;
  }
  std::vector<T> operator*(const std::vector<T>& v) const { return (*this) * std::span<const T>(v); }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InternalError("matrix-matrix dimension mismatch");
    Matrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(r, k);
        if (a == 0) continue;
        for (std::size_t c = 0; c < o.cols_; ++c)
          if (o(k, c) != 0) out(r, c) += a * o(k, c);
      }
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    check_same(o);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
  }
  Matrix operator-(const Matrix& o) const {
    check_same(o);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
  }
  Matrix scaled(const T& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= s;
    return out;
  }

  bool operator==(const Matrix& o) const = default;

  const std::vector<T>& data() const { return data_; }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntVector = std::vector<Int>;
using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

inline bool is_integral(const RatMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(),
                     [](const Rational& x) { return denominator(x) == 1; });
}

/// Throws InternalError when some entry is not an integer.
inline IntMatrix to_integer(const RatMatrix& m, const char* context) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (denominator(m(i, j)) != 1)
        throw InternalError(std::string("non-integral entry in ") + context);
      r(i, j) = numerator(m(i, j));
    }
  return r;
}

inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline void axpy(IntVector& y, const Int& a, const IntVector& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += a * x[i];
}

/// Exact division of every entry; throws when a remainder is nonzero.
inline void divide_exact(IntVector& v, const Int& d, const char* context) {
  for (auto& x : v) {
    if (x % d != 0) throw InternalError(std::string("non-integral division in ") + context);
    x /= d;
  }
}

/// Echelon basis of a sublattice of Z^n built from generators one at a time.
/// Every basis row keeps its expression as an integer combination of the
/// inserted generators.
class LatticeBasis {
 public:
  explicit LatticeBasis(std::size_t ambient_dim) : dim_(ambient_dim) {}

  struct Row {
    IntVector vec;
    IntVector expr;  // coefficients on generators inserted so far
    std::size_t pivot;
  };

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t generator_count() const { return generators_; }
  const std::vector<Row>& rows() const { return rows_; }

  void insert(IntVector x) {
    if (x.size() != dim_) throw InternalError("LatticeBasis: generator has wrong length");
    const std::size_t gen = generators_++;
    for (auto& r : rows_) r.expr.resize(generators_, Int(0));
    IntVector ex(generators_, Int(0));
    ex[gen] = 1;

    std::size_t ri = 0;
    for (std::size_t col = 0; col < dim_; ++col) {
      if (x[col] == 0) continue;
      while (ri < rows_.size() && rows_[ri].pivot < col) ++ri;
      if (ri == rows_.size() || rows_[ri].pivot != col) {
        if (x[col] < 0) {
          for (auto& e : x) e = -e;
          for (auto& e : ex) e = -e;
        }
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(ri), Row{std::move(x), std::move(ex), col});
        return;
      }
      Row& r = rows_[ri];
      const Int a = r.vec[col];
      const Int b = x[col];
      Int s, t;
      const Int g = ext_gcd(a, b, s, t);
      const Int ag = a / g, bg = b / g;
      IntVector nr(dim_), nx(dim_);
      for (std::size_t k = 0; k < dim_; ++k) {
        nr[k] = s * r.vec[k] + t * x[k];
        nx[k] = ag * x[k] - bg * r.vec[k];
      }
      IntVector ne(generators_), nxe(generators_);
      for (std::size_t k = 0; k < generators_; ++k) {
        ne[k] = s * r.expr[k] + t * ex[k];
        nxe[k] = ag * ex[k] - bg * r.expr[k];
      }
      r.vec = std::move(nr);
      r.expr = std::move(ne);
      x = std::move(nx);
      ex = std::move(nxe);
    }
  }

  /// Reduce entries above each pivot into [0, pivot), giving Hermite normal form.
  void reduce() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t c = rows_[i].pivot;
      const Int& d = rows_[i].vec[c];
      for (std::size_t j = 0; j < i; ++j) {
        Int q = rows_[j].vec[c] / d;
        if (rows_[j].vec[c] - q * d < 0) q -= 1;
        if (q == 0) continue;
        axpy(rows_[j].vec, -q, rows_[i].vec);
        axpy(rows_[j].expr, -q, rows_[i].expr);
      }
    }
  }

  /// Coordinates of x on the basis rows; throws if x is not in the lattice.
  IntVector coordinates(IntVector x) const {
    IntVector c(rows_.size(), Int(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& r = rows_[i];
      if (x[r.pivot] == 0) continue;
      if (x[r.pivot] % r.vec[r.pivot] != 0) throw InternalError("vector not in lattice (pivot remainder)");
      c[i] = x[r.pivot] / r.vec[r.pivot];
      axpy(x, -c[i], r.vec);
    }
    if (!is_zero(x)) throw InternalError("vector not in lattice span");
    return c;
  }

 private:
  static Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
    Int old_r = a, r = b, old_s = 1, ss = 0, old_t = 0, tt = 1;
    while (r != 0) {
      const Int q = old_r / r;
      Int tmp = old_r - q * r;
      old_r = r;
      r = tmp;
      tmp = old_s - q * ss;
      old_s = ss;
      ss = tmp;
      tmp = old_t - q * tt;
      old_t = tt;
      tt = tmp;
    }
    if (old_r < 0) {
      old_r = -old_r;
      old_s = -old_s;
      old_t = -old_t;
    }
    s = old_s;
    t = old_t;
    return old_r;
  }

  std::size_t dim_;
  std::size_t generators_ = 0;
  std::vector<Row> rows_;
};

/// Determinant by fraction-free Bareiss elimination.
inline Int determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InternalError("determinant of non-square matrix");
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m(s, k) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(s, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Arithmetic over F_p with word-sized entries.

using ModMatrix = Matrix<std::int64_t>;

inline std::int64_t mod_reduce(const Int& x, std::int64_t p) {
  Int r = x % p;
  if (r < 0) r += p;
  return r.convert_to<std::int64_t>();
}

inline ModMatrix reduce_mod(const IntMatrix& m, std::int64_t p) {
  ModMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = mod_reduce(m(i, j), p);
  return r;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = ((a % p) + p) % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

/// Reduced row echelon form over F_p: the nonzero rows and their pivot columns.
struct ModEchelon {
  ModMatrix rref;  // rank x cols
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

inline ModEchelon row_reduce(ModMatrix m, std::int64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(sel, c));
    const std::int64_t inv = mod_inverse(m(row, col), p);
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = m(row, c) * inv % p;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const std::int64_t f = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = ((m(r, c) - f * m(row, c)) % p + p) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  ModMatrix rref(pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rref(r, c) = m(r, c);
  return {std::move(rref), std::move(pivots)};
}

inline std::size_t rank_mod(const IntMatrix& m, std::int64_t p) { return row_reduce(reduce_mod(m, p), p).rank(); }

/// Kernel basis (as columns) of the matrix whose RREF is given.
inline ModMatrix nullspace(const ModEchelon& e, std::size_t cols, std::int64_t p) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  ModMatrix k(cols, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], j) = (p - e.rref(r, free[j])) % p;
  }
  return k;
}

inline ModMatrix mul_mod(const ModMatrix& a, const ModMatrix& b, std::int64_t p) {
  if (a.cols() != b.rows()) throw InternalError("mod-p matrix dimension mismatch");
  ModMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = (out(i, j) + x * b(k, j)) % p;
    }
  return out;
}

inline std::vector<std::int64_t> mul_mod(const ModMatrix& a, const IntVector& v, std::int64_t p) {
  std::vector<std::int64_t> out(a.rows(), 0);
  std::vector<std::int64_t> vr(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) vr[i] = mod_reduce(v[i], p);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] = (out[i] + a(i, k) * vr[k]) % p;
  return out;
}

/// p-adic valuations of the elementary divisors of a nonsingular square
/// integer matrix (its Smith form over the local ring Z_(p)), ascending.
/// Elimination runs modulo p^N with N one more than nu_p(det).
inline std::vector<unsigned> local_smith_valuations(const IntMatrix& m, long long p) {
  require_prime(p);
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InternalError("local Smith form of non-square matrix");
  const Int det = determinant(m);
  if (det == 0) throw InternalError("local Smith form of singular matrix");
  const unsigned bound = nu_p(det, p).value() + 1;
  const Int modulus = ipow(p, bound);
  auto red = [&](const Int& x) {
    Int r = x % modulus;
    if (r < 0) r += modulus;
    return r;
  };
  auto val = [&](const Int& x) -> unsigned {
    if (x == 0) return bound;
    return nu_p(x, p).value();
  };
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = red(m(i, j));

  std::vector<unsigned> out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t br = k, bc = k;
    unsigned best = bound + 1;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j) {
        const unsigned v = val(a(i, j));
        if (v < best) {
          best = v;
          br = i;
          bc = j;
        }
      }
    if (best >= bound) throw InternalError("local Smith form lost precision");
    for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(br, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, bc));
    const Int pk = ipow(p, best);
    // pivot = p^best * unit; normalize the pivot row by the unit's inverse
    const Int unit = a(k, k) / pk;
    Int inv;
    mpz_invert(inv.backend().data(), unit.backend().data(), modulus.backend().data());
    for (std::size_t j = k; j < n; ++j) a(k, j) = red(a(k, j) * inv);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Int f = a(i, k) / pk;
      for (std::size_t j = k; j < n; ++j) a(i, j) = red(a(i, j) - f * a(k, j));
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a(k, j) == 0) continue;
      const Int f = a(k, j) / pk;
      for (std::size_t i = k; i < n; ++i) a(i, j) = red(a(i, j) - f * a(i, k));
    }
    out.push_back(best);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace modrep
