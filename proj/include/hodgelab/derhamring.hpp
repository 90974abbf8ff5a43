#pragma once

#include <string>
#include <vector>

#include "hodgelab/common.hpp"
#include "hodgelab/gradedpoly.hpp"
#include "hodgelab/hodgering.hpp"
#include "hodgelab/intlattice.hpp"
#include "hodgelab/report.hpp"

namespace hodgelab {

/// de Rham numbers h^0 .. h^{2n} of an n-dimensional (virtual) class.
/// Membership in DR_n: h^i == h^{2n-i}, and h^n even when n is odd.
class DeRhamVector {
 public:
  explicit DeRhamVector(int n);
  DeRhamVector(int n, std::vector<Integer> h);
  static DeRhamVector from_values(const std::vector<long>& h);

  int dim() const { return n_; }
  Integer& at(int i) { return h_.at(static_cast<std::size_t>(i)); }
  const Integer& at(int i) const { return h_.at(static_cast<std::size_t>(i)); }
  const std::vector<Integer>& entries() const { return h_; }

  bool is_poincare_dual() const;
  bool is_member() const;
  bool is_zero() const;

  /// (sum h^i t^i) z^n in Z[t,z].
  Polynomial to_polynomial() const;
  static DeRhamVector from_polynomial(const Polynomial& p, int n);

  DeRhamVector operator+(const DeRhamVector& o) const;
  DeRhamVector operator-(const DeRhamVector& o) const;
  DeRhamVector operator*(const Integer& k) const;
  /// Product in Z[t,z]; dimensions add.
  DeRhamVector operator*(const DeRhamVector& o) const;
  bool operator==(const DeRhamVector& o) const = default;

  std::string to_string() const { return to_polynomial().to_string(); }

 private:
  int n_;
  std::vector<Integer> h_;
};

long rank_DR(int n);

/// (t^i + t^{2n-i}) z^n for i < n, then t^n z^n (n even) or 2 t^n z^n (n odd).
std::vector<DeRhamVector> basis_DR(int n);

/// Coordinates in basis_DR. Throws NotInDR.
IntVector derham_coordinates(const DeRhamVector& v);
DeRhamVector derham_from_coordinates(int n, const IntVector& coords);

/// x, y -> t: h^m_dR = sum_{i+j=m} h^{i,j}.
DeRhamVector s_map(const HodgeDiamond& a);
/// The same map on a whole polynomial in Z[x,y,z].
Polynomial s_map(const Polynomial& p);

struct DeRhamImages {
  Polynomial A, B, C, D;
  static const DeRhamImages& standard();
};

Polynomial psi(const Polynomial& P, const DeRhamImages& images = DeRhamImages::standard());
DeRhamVector psi_piece(const Polynomial& P, int n);

/// Generators of ker psi: A^2C - D^2, AB - 2D, B^2 - 4C, BD - 2AC.
const std::vector<Polynomial>& derham_kernel_generators();

/// The n+1 monomials spanning (Z[A,B,C,D]/J)_n, in block order
/// A^iD^l, C^kD^l (k>0), AC^kD^l (k>0), BC^k; each block lex ascending.
std::vector<Exponent> derham_normal_monomials(int n);

/// Unique combination of derham_normal_monomials(n) mapping to v. Throws NotInDR.
Polynomial decompose_DR(const DeRhamVector& v);

Integer chi_DR(const DeRhamVector& v);
Integer h0_DR(const DeRhamVector& v);
Integer chi_H(const HodgeDiamond& a);
Integer h00_H(const HodgeDiamond& a);

/// Per degree: psi-images of the monomials span DR_n, the kernel is J_n, and
/// s(basis_H(n)) spans DR_n.
CheckRecord verify_derham(int max_n, Execution ex = Execution::Parallel,
                          const std::vector<Polynomial>& kernel_gens = derham_kernel_generators());

}  // namespace hodgelab
