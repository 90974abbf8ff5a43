#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hodgelab/common.hpp"
#include "hodgelab/derhamring.hpp"
#include "hodgelab/gradedpoly.hpp"
#include "hodgelab/hodgering.hpp"
#include "hodgelab/intlattice.hpp"
#include "hodgelab/report.hpp"

namespace hodgelab {

/// A pair (a, b) of a Hodge diamond and a de Rham vector of the same dimension.
struct HdrElement {
  HodgeDiamond a;
  DeRhamVector b;

  HdrElement(HodgeDiamond a, DeRhamVector b);
  explicit HdrElement(int n) : a(n), b(n) {}

  int dim() const { return a.dim(); }

  HdrElement operator+(const HdrElement& o) const;
  HdrElement operator-(const HdrElement& o) const;
  HdrElement operator*(const Integer& k) const;
  /// Componentwise product: Kunneth on the Hodge side, Z[t,z] on the de Rham side.
  HdrElement operator*(const HdrElement& o) const;
  bool operator==(const HdrElement& o) const = default;

  std::string to_string() const;
};

/// a in H_n, b in DR_n, h^{0,0}(a) == h^0(b) and chi(a) == chi(b).
/// Throws DegreeMismatch when the dimensions differ.
bool is_member_hdr(const HodgeDiamond& a, const DeRhamVector& b);
bool is_member_hdr(const HdrElement& e);

/// g2 = (t+2t^2+t^3)z^2 and g3 = (t^2+2t^3+t^4)z^3.
const DeRhamVector& kernel_generator_g2();
const DeRhamVector& kernel_generator_g3();

HdrElement sprime();  ///< (0, g2)
HdrElement tprime();  ///< (0, g3)

/// Lattice basis of I_n = {v in DR_n : chi(v) = 0, h^0(v) = 0}, in DR coordinates.
std::vector<IntVector> kernel_I(int n);
/// Generators g2 * DR_{n-2} and g3 * DR_{n-3}, in DR coordinates.
std::vector<IntVector> kernel_I_generators(int n);

/// Per degree: kernel_I(n) equals the lattice of kernel_I_generators(n).
CheckRecord verify_kernel_I(int max_n, Execution ex = Execution::Parallel);

/// Degree 3: for w = a*g3 + b1*g2*(1+t^2)z + b2*g2*2tz over a grid of small
/// coefficients, w together with g2 * DR_1 generates I_3 iff h^2(w) is odd.
CheckRecord verify_tprime_alternatives(Execution ex = Execution::Parallel);

/// Pair of families in Z[x,y,z] and Z[t,z].
struct HdrFamily {
  Polynomial hodge;
  Polynomial derham;

  HdrElement piece(int n) const;
};

/// A, B, C, D -> (phi, psi); S -> (0, g2); T -> (0, g3).
HdrFamily tau(const Polynomial& P);

long rank_HDR(int n);
std::vector<HdrElement> basis_HDR(int n);

/// Coordinates in H_n (+) DR_n: hodge_coordinates followed by derham_coordinates.
IntVector hdr_coordinates(const HdrElement& e);

/// Q in Z[A,B,C,D,S,T] with tau(Q) = e in degree n. The Z[A,B,C,D] part is
/// decompose(a); the rest is c = b - s(a) written over g2 and g3 times the de
/// Rham normal monomials, chosen by solve_exact. Throws NotInHDR.
Polynomial decompose_HDR(const HdrElement& e);

/// Per degree: tau-images of the degree-n monomials (without T when
/// include_tprime is false) generate HDR_n.
CheckRecord verify_tau_surjective(int max_n, Execution ex = Execution::Parallel,
                                  bool include_tprime = true);

/// sum lambda_{i,j} h^{i,j} + sum mu_i h^i_dR, optionally mod m.
struct CombinedFunctional {
  int n = 0;
  std::vector<Integer> lambda;  ///< row-major (n+1)^2
  std::vector<Integer> mu;      ///< 2n+1
  std::optional<Integer> modulus;

  explicit CombinedFunctional(int n = 0);
  static CombinedFunctional from_full(int n, const IntVector& v);

  Integer& lam(int i, int j) { return lambda[static_cast<std::size_t>(i * (n + 1) + j)]; }
  const Integer& lam(int i, int j) const {
    return lambda[static_cast<std::size_t>(i * (n + 1) + j)];
  }
  /// lambda followed by mu.
  IntVector full() const;
  Integer evaluate(const HdrElement& e) const;
  bool operator==(const CombinedFunctional&) const = default;
};

/// Full coordinate vector of e: all h^{i,j} row-major, then h^0 .. h^{2n}.
IntVector hdr_full_vector(const HdrElement& e);

/// Basis of the combined functionals vanishing on HDR_n.
std::vector<CombinedFunctional> hdr_relations(int n);
/// Generators of the combined functionals vanishing mod m on the
/// tau-generated lattice, reduced into [0, m).
std::vector<CombinedFunctional> hdr_congruences(int n, const Integer& m);

/// serre[i,j], poincare[i], components, euler; euler is left out for n = 0
/// where it coincides with components. With m even and n odd, parity is
/// (m/2) h^n_dR. Entries carry the modulus when m is given.
std::vector<std::pair<std::string, CombinedFunctional>> named_hdr_relations(
    int n, const std::optional<Integer>& m = std::nullopt);

/// Per degree: rank_HDR(n) == r_n + n - 1 (1 for n = 0), and hdr_relations(n)
/// equals the span of named_hdr_relations(n).
CheckRecord verify_hdr_relations(int max_n, Execution ex = Execution::Parallel);
/// Per degree and modulus: hdr_congruences(n, m) equals the named span mod m,
/// and (m/2) h^n_dR is a congruence iff m is even and n is odd.
CheckRecord verify_hdr_congruences(int max_n, const std::vector<long>& moduli,
                                   Execution ex = Execution::Parallel);

}  // namespace hodgelab
