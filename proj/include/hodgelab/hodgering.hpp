#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hodgelab/common.hpp"
#include "hodgelab/gradedpoly.hpp"
#include "hodgelab/intlattice.hpp"
#include "hodgelab/report.hpp"

namespace hodgelab {

/// Hodge numbers h^{i,j}, 0 <= i, j <= n, of an n-dimensional (virtual) class.
/// Entries may be negative. Membership in H_n is Serre duality,
/// h^{i,j} == h^{n-i,n-j}, and is not enforced on construction.
class HodgeDiamond {
 public:
  explicit HodgeDiamond(int n);
  HodgeDiamond(int n, std::vector<Integer> row_major);
  static HodgeDiamond from_rows(const std::vector<std::vector<long>>& rows);

  int dim() const { return n_; }
  Integer& at(int i, int j) { return h_[index(i, j)]; }
  const Integer& at(int i, int j) const { return h_[index(i, j)]; }
  const std::vector<Integer>& entries() const { return h_; }

  bool is_member() const;
  bool is_zero() const;

  /// (sum h^{i,j} x^i y^j) z^n in Z[x,y,z].
  Polynomial to_polynomial() const;
  /// Reads the degree-n piece of p. Throws Error when an x or y exponent
  /// exceeds n.
  static HodgeDiamond from_polynomial(const Polynomial& p, int n);

  HodgeDiamond operator+(const HodgeDiamond& o) const;
  HodgeDiamond operator-(const HodgeDiamond& o) const;
  HodgeDiamond operator*(const Integer& k) const;
  bool operator==(const HodgeDiamond& o) const = default;

  std::string to_string() const { return to_polynomial().to_string(); }

 private:
  std::size_t index(int i, int j) const;
  int n_;
  std::vector<Integer> h_;
};

long rank_H(int n);

/// Serre-orbit representatives (i,j) <= (n-i,n-j) in lex order; one per orbit.
std::vector<std::pair<int, int>> serre_representatives(int n);

std::vector<HodgeDiamond> basis_H(int n);

/// Values at the Serre representatives: the coordinates of d in basis_H.
/// Throws NotSerreDual.
IntVector hodge_coordinates(const HodgeDiamond& d);
HodgeDiamond hodge_from_coordinates(int n, const IntVector& coords);

/// Product of two diamonds by direct convolution. Throws NotSerreDual if
/// either factor is not a member.
HodgeDiamond kunneth(const HodgeDiamond& a, const HodgeDiamond& b);

/// Images of A, B, C, D in Z[x,y,z]. standard() is the presentation map;
/// other tables exist for negative controls.
struct HodgeImages {
  Polynomial A, B, C, D;
  static const HodgeImages& standard();
};

Polynomial phi(const Polynomial& P, const HodgeImages& images = HodgeImages::standard());
HodgeDiamond phi_piece(const Polynomial& P, int n);

/// D^2 - ABD + C(A^2 + B^2 - 4C), the generator of ker phi.
const Polynomial& relation_G();

/// P0 + P1 * D with P0, P1 in Z[A,B,C]; the normal form modulo G.
struct PresentationElement {
  Polynomial p0;
  Polynomial p1;

  PresentationElement();
  PresentationElement(Polynomial p0, Polynomial p1);

  Polynomial to_polynomial() const;  ///< in Z[A,B,C,D]
  std::string to_string() const { return to_polynomial().to_string(); }
  bool operator==(const PresentationElement& o) const = default;
};

PresentationElement normal_form(const Polynomial& P);
PresentationElement nf_mul(const PresentationElement& a, const PresentationElement& b);
Polynomial phi(const PresentationElement& e);

/// Basis monomials of (Z[A,B,C,D]/G)_n as exponents in Z[A,B,C,D]:
/// A^iB^jC^k with i+j+2k = n, (i,j,k) lex ascending, then the same with a D
/// factor for degree n-2.
std::vector<Exponent> normal_monomials(int n);

/// The unique normal form mapping to d under phi. Throws NotSerreDual.
PresentationElement decompose(const HodgeDiamond& d);

/// Linear functional sum lambda_{i,j} h^{i,j} / denominator, optionally mod m.
struct LinearFunctional {
  int n = 0;
  std::vector<Integer> lambda;  ///< row-major (n+1)^2
  Integer denominator = 1;      ///< positive; rational inputs are cleared into lambda
  std::optional<Integer> modulus;

  static LinearFunctional unit(int n, int i, int j);
  Integer& at(int i, int j) { return lambda[static_cast<std::size_t>(i * (n + 1) + j)]; }
  const Integer& at(int i, int j) const {
    return lambda[static_cast<std::size_t>(i * (n + 1) + j)];
  }
  /// Numerator value sum lambda_{i,j} h^{i,j} (not reduced mod m).
  Integer evaluate(const HodgeDiamond& d) const;
  bool operator==(const LinearFunctional&) const = default;
};

/// Serre functionals e_{i,j} - e_{n-i,n-j}, one per non-fixed orbit.
std::vector<LinearFunctional> serre_relations(int n);

/// Full-coordinate ((n+1)^2 rows) images of every degree-n monomial of
/// Z[A,B,C,D], columns in lex order of monomials_of_degree.
IntMatrix monomial_image_matrix(int n, const HodgeImages& images = HodgeImages::standard());

/// Basis of the functionals vanishing on every phi-image in degree n.
std::vector<LinearFunctional> relations(int n);
/// Generators of the functionals vanishing mod m on every phi-image.
std::vector<LinearFunctional> congruences(int n, const Integer& m);

/// Lattice basis of (C)_n = C * H_{n-2}; empty for n < 2.
std::vector<HodgeDiamond> birational_ideal_basis(int n);

/// Outer-edge functionals e_{0,j} (0 <= j <= n) and e_{i,0} (0 < i < n).
/// Modulo Serre duality these span every outer number and its dual.
std::vector<std::pair<std::string, LinearFunctional>> outer_functionals(int n);

struct BirationalVerdict {
  bool invariant = false;
  /// When invariant: coefficient of each outer functional, modulo the Serre
  /// relations (reduced into [0, m) for modular functionals).
  std::vector<std::pair<std::string, Rational>> outer_coefficients;
  /// When not invariant: an element of (C)_n on which the functional is nonzero.
  std::optional<HodgeDiamond> witness;
  Integer witness_value = 0;
  std::string witness_label;
};

BirationalVerdict is_birational_invariant(const LinearFunctional& f);

// ---- verification

/// Per degree: phi-images of all degree-n monomials span H_n, and their
/// kernel is G * (degree n-4 monomials).
CheckRecord verify_presentation(int max_n, Execution ex = Execution::Parallel,
                                const HodgeImages& images = HodgeImages::standard());
/// Per degree: relations(n) spans the Serre relations exactly.
CheckRecord verify_hodge_relations(int max_n, Execution ex = Execution::Parallel);
/// Per degree and modulus: congruences(n, m) equals the Serre span mod m.
CheckRecord verify_hodge_congruences(int max_n, const std::vector<long>& moduli,
                                     Execution ex = Execution::Parallel);
/// Per degree >= 2: the outer-edge projection has kernel (C)_n and image of rank 2n.
CheckRecord verify_birational(int max_n, Execution ex = Execution::Parallel);
/// Per degree: ranks, basis independence and decompose round trip on the basis.
CheckRecord verify_hodge_basis(int max_n, Execution ex = Execution::Parallel);

}  // namespace hodgelab
