#pragma once

#include <initializer_list>
#include <vector>

#include <json.hpp>

#include "hodgelab/common.hpp"

namespace hodgelab {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length rows).
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector column(std::size_t c) const;
  IntVector row(std::size_t r) const;
  std::vector<IntVector> columns() const;
  IntMatrix transpose() const;
  /// Horizontal concatenation; row counts must agree.
  IntMatrix hcat(const IntMatrix& right) const;
  bool is_zero() const;

  IntMatrix operator*(const IntMatrix& b) const;
  IntVector operator*(const IntVector& x) const;
  bool operator==(const IntMatrix& b) const = default;

  /// Debug form: array of rows of decimal strings.
  nlohmann::json to_json() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct HnfResult {
  IntMatrix H;  ///< M * V == H
  IntMatrix V;  ///< unimodular column transform
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  ///< pivot row of column k, k < rank
};

struct SnfResult {
  IntMatrix S;  ///< diagonal, U * M * V == S
  IntMatrix U;
  IntMatrix V;
  /// min(rows, cols) diagonal entries; each divides the next, zeros last.
  IntVector invariant_factors;
};

/// Column-style Hermite normal form of the lattice spanned by the columns of
/// M. Convention: lower echelon; column k (k < rank) has its first nonzero
/// entry, the positive pivot, at row pivot_rows[k], with pivot rows strictly
/// increasing; every other entry of a pivot row, to the left of its pivot,
/// lies in [0, pivot); columns rank.. are zero. Same shape as M.
IntMatrix hnf(const IntMatrix& M);
HnfResult hnf_with_transform(const IntMatrix& M);

SnfResult snf(const IntMatrix& M);

/// Returns x with M x = b. When the kernel of M is nontrivial the kernel
/// coordinates of the HNF transform are set to zero, which selects one
/// canonical solution. Throws NoIntegerSolution if b is outside the column
/// lattice.
IntVector solve_exact(const IntMatrix& M, const IntVector& b);

/// HNF-canonical basis of the saturated lattice {x : M x = 0}.
std::vector<IntVector> kernel_basis(const IntMatrix& M);

/// True iff the column lattices of G1 and G2 coincide.
bool lattice_equal(const IntMatrix& G1, const IntMatrix& G2);

/// Rank over Q.
std::size_t rank(const IntMatrix& M);

/// Basis of the saturation (Q-span intersected with Z^rows) of the column lattice.
std::vector<IntVector> saturation(const IntMatrix& M);

/// Generators of {x mod m : M x = 0 mod m}, reduced into [0, m) and
/// HNF-canonical modulo m; vectors that vanish mod m are dropped.
std::vector<IntVector> kernel_mod(const IntMatrix& M, const Integer& m);
/// Same, reusing a precomputed Smith form of M.
std::vector<IntVector> kernel_mod(const SnfResult& snf_of_m, const Integer& m);

/// True iff span(G1) + m Z^r == span(G2) + m Z^r.
bool lattice_equal_mod(const IntMatrix& G1, const IntMatrix& G2, const Integer& m);

/// True iff v lies in span(G) (+ m Z^r when m > 0).
bool in_lattice(const IntMatrix& G, const IntVector& v, const Integer& m = 0);

/// |det| == 1 for a square matrix.
bool is_unimodular(const IntMatrix& M);

/// Inverse of a unimodular matrix. Throws NoIntegerSolution otherwise.
IntMatrix unimodular_inverse(const IntMatrix& M);

Integer dot(const IntVector& a, const IntVector& b);

/// Floor division with a positive or negative divisor.
Integer floor_div(const Integer& a, const Integer& b);
/// Representative of a modulo m in [0, m).
Integer mod_floor(const Integer& a, const Integer& m);

}  // namespace hodgelab
