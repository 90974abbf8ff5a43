#include "hodgelab/intlattice.hpp"

#include <algorithm>
#include <utility>

namespace hodgelab {

// ------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols,
                                  std::size_t rows) {
  IntMatrix M(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) M(r, c) = cols[c][r];
  }
  return M;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<long>(r * cols_),
                   data_.begin() + static_cast<long>((r + 1) * cols_));
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix T(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) T(c, r) = (*this)(r, c);
  return T;
}

IntMatrix IntMatrix::hcat(const IntMatrix& right) const {
  if (right.rows_ != rows_) throw Error("hcat: row count mismatch");
  IntMatrix out(rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) out(r, cols_ + c) = right(r, c);
  }
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

IntMatrix IntMatrix::operator*(const IntMatrix& b) const {
  if (cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
  IntMatrix out(rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a * b(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& x) const {
  if (x.size() != cols_) throw Error("matrix-vector product: dimension mismatch");
  IntVector out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * x[k];
  return out;
}

nlohmann::json IntMatrix::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t r = 0; r < rows_; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < cols_; ++c) row.push_back((*this)(r, c).get_str());
    arr.push_back(std::move(row));
  }
  return arr;
}

// --------------------------------------------------------------- helpers

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

namespace {

using Columns = std::vector<IntVector>;

// Replaces (u, v) by (s u + t v, -(b/g) u + (a/g) v) with s a + t b = g.
// The 2x2 transform has determinant 1.
void combine(IntVector& u, IntVector& v, const Integer& s, const Integer& t,
             const Integer& bg, const Integer& ag) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    Integer nu = s * u[i] + t * v[i];
    Integer nv = ag * v[i] - bg * u[i];
    u[i] = std::move(nu);
    v[i] = std::move(nv);
  }
}

void axpy(IntVector& dst, const Integer& k, const IntVector& src) {
  if (k == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += k * src[i];
}

struct Gcdext {
  Integer g, s, t;
};

Gcdext gcdext(const Integer& a, const Integer& b) {
  Gcdext r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

}  // namespace

// ------------------------------------------------------------------- HNF

HnfResult hnf_with_transform(const IntMatrix& M) {
  const std::size_t rows = M.rows(), cols = M.cols();
  Columns h = M.columns();
  Columns v = IntMatrix::identity(cols).columns();
  HnfResult out;
  std::size_t c = 0;
  for (std::size_t r = 0; r < rows && c < cols; ++r) {
    for (std::size_t k = c + 1; k < cols; ++k) {
      if (h[k][r] == 0) continue;
      const Integer a = h[c][r], b = h[k][r];
      if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        // Cheap elimination when the pivot already divides the entry.
        Integer q = b / a;
        axpy(h[k], -q, h[c]);
        axpy(v[k], -q, v[c]);
        continue;
      }
      Gcdext e = gcdext(a, b);
      Integer bg = b / e.g, ag = a / e.g;
      combine(h[c], h[k], e.s, e.t, bg, ag);
      combine(v[c], v[k], e.s, e.t, bg, ag);
    }
    if (h[c][r] == 0) continue;
    if (h[c][r] < 0) {
      for (auto& x : h[c]) x = -x;
      for (auto& x : v[c]) x = -x;
    }
    for (std::size_t k = 0; k < c; ++k) {
      Integer q = floor_div(h[k][r], h[c][r]);
      if (q != 0) {
        axpy(h[k], -q, h[c]);
        axpy(v[k], -q, v[c]);
      }
    }
    out.pivot_rows.push_back(r);
    ++c;
  }
  out.rank = c;
  out.H = IntMatrix::from_columns(h, rows);
  out.V = IntMatrix::from_columns(v, cols);
  return out;
}

IntMatrix hnf(const IntMatrix& M) { return hnf_with_transform(M).H; }

std::size_t rank(const IntMatrix& M) { return hnf_with_transform(M).rank; }

// ------------------------------------------------------------------- SNF

SnfResult snf(const IntMatrix& M) {
  const std::size_t rows = M.rows(), cols = M.cols();
  IntMatrix A = M;
  IntMatrix U = IntMatrix::identity(rows);
  IntMatrix V = IntMatrix::identity(cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(A(i, c), A(j, c));
    for (std::size_t c = 0; c < rows; ++c) std::swap(U(i, c), U(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(A(r, i), A(r, j));
    for (std::size_t r = 0; r < cols; ++r) std::swap(V(r, i), V(r, j));
  };
  // row_i += k * row_j
  auto add_row = [&](std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t c = 0; c < cols; ++c) A(i, c) += k * A(j, c);
    for (std::size_t c = 0; c < rows; ++c) U(i, c) += k * U(j, c);
  };
  auto add_col = [&](std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t r = 0; r < rows; ++r) A(r, i) += k * A(r, j);
    for (std::size_t r = 0; r < cols; ++r) V(r, i) += k * V(r, j);
  };

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    Integer best;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c) {
        if (A(r, c) == 0) continue;
        if (!found || abs(A(r, c)) < best) {
          found = true;
          best = abs(A(r, c));
          pr = r;
          pc = c;
        }
      }
    if (!found) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    while (true) {
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (A(r, t) == 0) continue;
        add_row(r, t, -floor_div(A(r, t), A(t, t)));
        if (A(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (A(t, c) == 0) continue;
        add_col(c, t, -floor_div(A(t, c), A(t, t)));
        if (A(t, c) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remaining entry of row/column t into the pivot.
        std::size_t br = t, bc = t;
        Integer b = abs(A(t, t));
        for (std::size_t r = t + 1; r < rows; ++r)
          if (A(r, t) != 0 && abs(A(r, t)) < b) {
            b = abs(A(r, t));
            br = r;
            bc = t;
          }
        for (std::size_t c = t + 1; c < cols; ++c)
          if (A(t, c) != 0 && abs(A(t, c)) < b) {
            b = abs(A(t, c));
            br = t;
            bc = c;
          }
        swap_rows(t, br);
        swap_cols(t, bc);
        continue;
      }
      // Divisibility: pivot must divide every entry of the trailing block.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (!mpz_divisible_p(A(r, c).get_mpz_t(), A(t, t).get_mpz_t())) {
            add_row(t, r, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (A(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) A(t, c) = -A(t, c);
      for (std::size_t c = 0; c < rows; ++c) U(t, c) = -U(t, c);
    }
  }

  SnfResult out;
  out.invariant_factors.reserve(diag);
  for (std::size_t i = 0; i < diag; ++i) out.invariant_factors.push_back(A(i, i));
  out.S = std::move(A);
  out.U = std::move(U);
  out.V = std::move(V);
  return out;
}

// ---------------------------------------------------------- solve/kernel

IntVector solve_exact(const IntMatrix& M, const IntVector& b) {
  if (b.size() != M.rows()) throw Error("solve_exact: length mismatch");
  HnfResult h = hnf_with_transform(M);
  IntVector residual = b;
  IntVector y(M.cols(), Integer(0));
  std::size_t next_row = 0;
  for (std::size_t k = 0; k < h.rank; ++k) {
    const std::size_t p = h.pivot_rows[k];
    for (; next_row < p; ++next_row) {
      if (residual[next_row] != 0) throw NoIntegerSolution("vector is outside the column span");
    }
    const Integer& pivot = h.H(p, k);
    if (!mpz_divisible_p(residual[p].get_mpz_t(), pivot.get_mpz_t())) {
      throw NoIntegerSolution("vector is outside the column lattice");
    }
    y[k] = residual[p] / pivot;
    for (std::size_t r = p; r < M.rows(); ++r) residual[r] -= y[k] * h.H(r, k);
    next_row = p + 1;
  }
  for (std::size_t r = next_row; r < M.rows(); ++r) {
    if (residual[r] != 0) throw NoIntegerSolution("vector is outside the column span");
  }
  return h.V * y;
}

std::vector<IntVector> kernel_basis(const IntMatrix& M) {
  HnfResult h = hnf_with_transform(M);
  std::vector<IntVector> raw;
  for (std::size_t c = h.rank; c < M.cols(); ++c) raw.push_back(h.V.column(c));
  if (raw.empty()) return raw;
  HnfResult canon = hnf_with_transform(IntMatrix::from_columns(raw, M.cols()));
  std::vector<IntVector> out;
  for (std::size_t c = 0; c < canon.rank; ++c) out.push_back(canon.H.column(c));
  return out;
}

bool lattice_equal(const IntMatrix& G1, const IntMatrix& G2) {
  if (G1.rows() != G2.rows()) throw Error("lattice_equal: row count mismatch");
  HnfResult a = hnf_with_transform(G1), b = hnf_with_transform(G2);
  if (a.rank != b.rank) return false;
  for (std::size_t c = 0; c < a.rank; ++c)
    for (std::size_t r = 0; r < G1.rows(); ++r)
      if (a.H(r, c) != b.H(r, c)) return false;
  return true;
}

std::vector<IntVector> saturation(const IntMatrix& M) {
  std::vector<IntVector> ann = kernel_basis(M.transpose());
  IntMatrix A(ann.size(), M.rows());
  for (std::size_t i = 0; i < ann.size(); ++i)
    for (std::size_t j = 0; j < M.rows(); ++j) A(i, j) = ann[i][j];
  return kernel_basis(A);
}

namespace {

std::vector<IntVector> canonical_mod(const std::vector<IntVector>& gens,
                                     std::size_t dim, const Integer& m) {
  IntMatrix G = IntMatrix::from_columns(gens, dim);
  IntMatrix mI(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) mI(i, i) = m;
  HnfResult h = hnf_with_transform(G.hcat(mI));
  std::vector<IntVector> out;
  for (std::size_t c = 0; c < h.rank; ++c) {
    IntVector v = h.H.column(c);
    bool zero = true;
    for (auto& x : v) {
      x = mod_floor(x, m);
      zero = zero && x == 0;
    }
    if (!zero) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<IntVector> kernel_mod(const SnfResult& s, const Integer& m) {
  if (m < 2) throw Error("kernel_mod: modulus must be at least 2");
  const std::size_t cols = s.V.rows();
  const std::size_t rows = s.U.rows();
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < cols; ++i) {
    Integer scale = 1;
    if (i < rows) {
      const Integer& f = s.S(i, i);
      Integer g;
      mpz_gcd(g.get_mpz_t(), f.get_mpz_t(), m.get_mpz_t());
      scale = m / g;
    }
    if (mpz_divisible_p(scale.get_mpz_t(), m.get_mpz_t())) continue;
    IntVector v = s.V.column(i);
    for (auto& x : v) x *= scale;
    gens.push_back(std::move(v));
  }
  return canonical_mod(gens, cols, m);
}

std::vector<IntVector> kernel_mod(const IntMatrix& M, const Integer& m) {
  return kernel_mod(snf(M), m);
}

bool lattice_equal_mod(const IntMatrix& G1, const IntMatrix& G2, const Integer& m) {
  if (G1.rows() != G2.rows()) throw Error("lattice_equal_mod: row count mismatch");
  const std::size_t dim = G1.rows();
  IntMatrix mI(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) mI(i, i) = m;
  return lattice_equal(G1.hcat(mI), G2.hcat(mI));
}

bool in_lattice(const IntMatrix& G, const IntVector& v, const Integer& m) {
  IntMatrix full = G;
  if (m > 0) {
    IntMatrix mI(G.rows(), G.rows());
    for (std::size_t i = 0; i < G.rows(); ++i) mI(i, i) = m;
    full = G.hcat(mI);
  }
  try {
    solve_exact(full, v);
    return true;
  } catch (const NoIntegerSolution&) {
    return false;
  }
}

bool is_unimodular(const IntMatrix& M) {
  if (M.rows() != M.cols()) return false;
  return hnf(M) == IntMatrix::identity(M.rows());
}

IntMatrix unimodular_inverse(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw NoIntegerSolution("matrix is not square");
  HnfResult h = hnf_with_transform(M);
  if (!(h.H == IntMatrix::identity(M.rows()))) {
    throw NoIntegerSolution("matrix is not unimodular");
  }
  return h.V;
}

}  // namespace hodgelab
