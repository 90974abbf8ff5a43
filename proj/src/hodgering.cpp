#include "hodgelab/hodgering.hpp"

#include <algorithm>
#include <map>

#include "degree_cache.hpp"

namespace hodgelab {

// ---------------------------------------------------------- HodgeDiamond

HodgeDiamond::HodgeDiamond(int n) : n_(n) {
  if (n < 0) throw Error("diamond dimension must be non-negative");
  h_.assign(static_cast<std::size_t>((n + 1) * (n + 1)), Integer(0));
}

HodgeDiamond::HodgeDiamond(int n, std::vector<Integer> row_major)
    : n_(n), h_(std::move(row_major)) {
  if (n < 0) throw Error("diamond dimension must be non-negative");
  if (h_.size() != static_cast<std::size_t>((n + 1) * (n + 1))) {
    throw Error("diamond of dimension " + std::to_string(n) + " needs " +
                std::to_string((n + 1) * (n + 1)) + " entries");
  }
}

HodgeDiamond HodgeDiamond::from_rows(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) throw Error("diamond needs at least one row");
  const int n = static_cast<int>(rows.size()) - 1;
  std::vector<Integer> h;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw Error("diamond must be square");
    for (long v : r) h.emplace_back(v);
  }
  return HodgeDiamond(n, std::move(h));
}

std::size_t HodgeDiamond::index(int i, int j) const {
  if (i < 0 || j < 0 || i > n_ || j > n_) throw Error("diamond index out of range");
  return static_cast<std::size_t>(i * (n_ + 1) + j);
}

bool HodgeDiamond::is_member() const {
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; j <= n_; ++j)
      if (at(i, j) != at(n_ - i, n_ - j)) return false;
  return true;
}

bool HodgeDiamond::is_zero() const {
  return std::all_of(h_.begin(), h_.end(), [](const Integer& v) { return v == 0; });
}

Polynomial HodgeDiamond::to_polynomial() const {
  Polynomial::TermMap terms;
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; j <= n_; ++j)
      if (at(i, j) != 0) {
        terms.emplace(Exponent{static_cast<unsigned>(i), static_cast<unsigned>(j),
                               static_cast<unsigned>(n_)},
                      at(i, j));
      }
  return Polynomial(rings::hodge(), std::move(terms));
}

HodgeDiamond HodgeDiamond::from_polynomial(const Polynomial& p, int n) {
  if (!(*p.ring() == *rings::hodge())) throw ContextMismatch("expected a polynomial in Z[x,y,z]");
  HodgeDiamond d(n);
  for (const auto& [e, c] : p.terms()) {
    if (static_cast<int>(e[2]) != n) continue;
    if (static_cast<int>(e[0]) > n || static_cast<int>(e[1]) > n) {
      throw Error("term x^" + std::to_string(e[0]) + "y^" + std::to_string(e[1]) +
                  " does not fit a diamond of dimension " + std::to_string(n));
    }
    d.at(static_cast<int>(e[0]), static_cast<int>(e[1])) = c;
  }
  return d;
}

HodgeDiamond HodgeDiamond::operator+(const HodgeDiamond& o) const {
  if (o.n_ != n_) throw DegreeMismatch("diamonds of different dimension");
  HodgeDiamond r = *this;
  for (std::size_t k = 0; k < h_.size(); ++k) r.h_[k] += o.h_[k];
  return r;
}

HodgeDiamond HodgeDiamond::operator-(const HodgeDiamond& o) const {
  if (o.n_ != n_) throw DegreeMismatch("diamonds of different dimension");
  HodgeDiamond r = *this;
  for (std::size_t k = 0; k < h_.size(); ++k) r.h_[k] -= o.h_[k];
  return r;
}

HodgeDiamond HodgeDiamond::operator*(const Integer& k) const {
  HodgeDiamond r = *this;
  for (auto& v : r.h_) v *= k;
  return r;
}

// ------------------------------------------------------------ bases

long rank_H(int n) {
  if (n < 0) throw Error("degree must be non-negative");
  const long s = static_cast<long>(n + 1) * (n + 1);
  return n % 2 == 0 ? (s + 1) / 2 : s / 2;
}

std::vector<std::pair<int, int>> serre_representatives(int n) {
  std::vector<std::pair<int, int>> reps;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (std::make_pair(i, j) <= std::make_pair(n - i, n - j)) reps.emplace_back(i, j);
  return reps;
}

std::vector<HodgeDiamond> basis_H(int n) {
  std::vector<HodgeDiamond> out;
  for (auto [i, j] : serre_representatives(n)) {
    HodgeDiamond d(n);
    d.at(i, j) = 1;
    d.at(n - i, n - j) = 1;
    out.push_back(std::move(d));
  }
  return out;
}

IntVector hodge_coordinates(const HodgeDiamond& d) {
  if (!d.is_member()) throw NotSerreDual("diamond violates Serre duality");
  IntVector c;
  for (auto [i, j] : serre_representatives(d.dim())) c.push_back(d.at(i, j));
  return c;
}

HodgeDiamond hodge_from_coordinates(int n, const IntVector& coords) {
  auto reps = serre_representatives(n);
  if (coords.size() != reps.size()) throw Error("coordinate count does not match r_n");
  HodgeDiamond d(n);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    auto [i, j] = reps[k];
    d.at(i, j) = coords[k];
    d.at(n - i, n - j) = coords[k];
  }
  return d;
}

HodgeDiamond kunneth(const HodgeDiamond& a, const HodgeDiamond& b) {
  if (!a.is_member() || !b.is_member()) throw NotSerreDual("Kunneth factor is not Serre dual");
  const int n1 = a.dim(), n2 = b.dim();
  HodgeDiamond c(n1 + n2);
  for (int i1 = 0; i1 <= n1; ++i1)
    for (int j1 = 0; j1 <= n1; ++j1) {
      const Integer& x = a.at(i1, j1);
      if (x == 0) continue;
      for (int i2 = 0; i2 <= n2; ++i2)
        for (int j2 = 0; j2 <= n2; ++j2) c.at(i1 + i2, j1 + j2) += x * b.at(i2, j2);
    }
  return c;
}

// ---------------------------------------------------------- presentation

const HodgeImages& HodgeImages::standard() {
  static const HodgeImages images = [] {
    const auto& R = rings::hodge();
    return HodgeImages{Polynomial::parse(R, "(1+xy)z"), Polynomial::parse(R, "(x+y)z"),
                       Polynomial::parse(R, "xyz^2"), Polynomial::parse(R, "(x+xy^2)z^2")};
  }();
  return images;
}

Polynomial phi(const Polynomial& P, const HodgeImages& images) {
  if (!(*P.ring() == *rings::presentation())) {
    throw ContextMismatch("phi expects a polynomial in Z[A,B,C,D]");
  }
  const std::vector<Polynomial> imgs{images.A, images.B, images.C, images.D};
  return P.substitute(imgs, rings::hodge());
}

HodgeDiamond phi_piece(const Polynomial& P, int n) {
  return HodgeDiamond::from_polynomial(phi(P), n);
}

const Polynomial& relation_G() {
  static const Polynomial g =
      Polynomial::parse(rings::presentation(), "D^2 - A*B*D + C*(A^2 + B^2 - 4*C)");
  return g;
}

PresentationElement::PresentationElement()
    : p0(rings::presentation_base()), p1(rings::presentation_base()) {}

PresentationElement::PresentationElement(Polynomial a, Polynomial b)
    : p0(std::move(a)), p1(std::move(b)) {
  if (!(*p0.ring() == *rings::presentation_base()) ||
      !(*p1.ring() == *rings::presentation_base())) {
    throw ContextMismatch("normal form parts must live in Z[A,B,C]");
  }
}

namespace {

Polynomial embed_base(const Polynomial& p, unsigned d_power) {
  Polynomial::TermMap t;
  for (const auto& [e, c] : p.terms()) t.emplace(Exponent{e[0], e[1], e[2], d_power}, c);
  return Polynomial(rings::presentation(), std::move(t));
}

const Polynomial& base_var(const char* name) {
  static const Polynomial A = Polynomial::variable(rings::presentation_base(), "A");
  static const Polynomial B = Polynomial::variable(rings::presentation_base(), "B");
  static const Polynomial C = Polynomial::variable(rings::presentation_base(), "C");
  return name[0] == 'A' ? A : name[0] == 'B' ? B : C;
}

// Q = C(A^2 + B^2 - 4C), so that D^2 = AB D - Q modulo G.
const Polynomial& reduction_Q() {
  static const Polynomial q =
      Polynomial::parse(rings::presentation_base(), "C*(A^2 + B^2 - 4*C)");
  return q;
}

const Polynomial& reduction_AB() {
  static const Polynomial ab = base_var("A") * base_var("B");
  return ab;
}

}  // namespace

Polynomial PresentationElement::to_polynomial() const {
  return embed_base(p0, 0) + embed_base(p1, 1);
}

PresentationElement nf_mul(const PresentationElement& a, const PresentationElement& b) {
  const Polynomial bd = a.p1 * b.p1;
  return {a.p0 * b.p0 - bd * reduction_Q(), a.p0 * b.p1 + a.p1 * b.p0 + bd * reduction_AB()};
}

PresentationElement normal_form(const Polynomial& P) {
  if (!(*P.ring() == *rings::presentation())) {
    throw ContextMismatch("normal_form expects a polynomial in Z[A,B,C,D]");
  }
  const auto& base = rings::presentation_base();
  // Bucket coefficients by D-power, then fold in D^k = (a_k, b_k).
  std::map<unsigned, Polynomial::TermMap> by_power;
  for (const auto& [e, c] : P.terms()) by_power[e[3]].emplace(Exponent{e[0], e[1], e[2]}, c);

  PresentationElement acc;
  PresentationElement dpow(Polynomial::constant(base, 1), Polynomial(base));
  const PresentationElement D(Polynomial(base), Polynomial::constant(base, 1));
  unsigned k = 0;
  for (auto& [power, terms] : by_power) {
    while (k < power) {
      dpow = nf_mul(dpow, D);
      ++k;
    }
    Polynomial coef(base, std::move(terms));
    acc = PresentationElement(acc.p0 + coef * dpow.p0, acc.p1 + coef * dpow.p1);
  }
  return acc;
}

Polynomial phi(const PresentationElement& e) { return phi(e.to_polynomial()); }

std::vector<Exponent> normal_monomials(int n) {
  std::vector<Exponent> out;
  for (int block = 0; block < 2; ++block) {
    const int m = n - 2 * block;
    for (int i = 0; i <= m; ++i)
      for (int j = 0; i + j <= m; ++j) {
        const int rest = m - i - j;
        if (rest % 2 != 0) continue;
        out.push_back(Exponent{static_cast<unsigned>(i), static_cast<unsigned>(j),
                               static_cast<unsigned>(rest / 2), static_cast<unsigned>(block)});
      }
  }
  return out;
}

namespace {

struct DecomposeData {
  std::vector<Exponent> monomials;
  IntMatrix inverse;  // maps H_n coordinates to monomial coefficients
};

DecomposeData build_decompose_data(int n) {
  DecomposeData data;
  data.monomials = normal_monomials(n);
  std::vector<IntVector> cols;
  for (const auto& e : data.monomials) {
    HodgeDiamond img = phi_piece(Polynomial::monomial(rings::presentation(), e), n);
    cols.push_back(hodge_coordinates(img));
  }
  const auto r = static_cast<std::size_t>(rank_H(n));
  if (cols.size() != r) {
    throw InternalBasisDefect("normal monomial count " + std::to_string(cols.size()) +
                              " differs from r_n = " + std::to_string(r));
  }
  IntMatrix M = IntMatrix::from_columns(cols, r);
  try {
    data.inverse = unimodular_inverse(M);
  } catch (const NoIntegerSolution&) {
    throw InternalBasisDefect("basis-change matrix in degree " + std::to_string(n) +
                              " is not unimodular");
  }
  return data;
}

detail::DegreeCache<DecomposeData>& decompose_cache() {
  static detail::DegreeCache<DecomposeData> cache;
  return cache;
}

}  // namespace

PresentationElement decompose(const HodgeDiamond& d) {
  const IntVector coords = hodge_coordinates(d);  // throws NotSerreDual
  auto data = decompose_cache().get(d.dim(), build_decompose_data);
  const IntVector x = data->inverse * coords;
  Polynomial::TermMap t0, t1;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    const Exponent& e = data->monomials[k];
    (e[3] == 0 ? t0 : t1).emplace(Exponent{e[0], e[1], e[2]}, x[k]);
  }
  const auto& base = rings::presentation_base();
  return {Polynomial(base, std::move(t0)), Polynomial(base, std::move(t1))};
}

// ---------------------------------------------------------- functionals

LinearFunctional LinearFunctional::unit(int n, int i, int j) {
  LinearFunctional f;
  f.n = n;
  f.lambda.assign(static_cast<std::size_t>((n + 1) * (n + 1)), Integer(0));
  f.at(i, j) = 1;
  return f;
}

Integer LinearFunctional::evaluate(const HodgeDiamond& d) const {
  if (d.dim() != n) throw DegreeMismatch("functional and diamond differ in dimension");
  return dot(lambda, d.entries());
}

namespace {

LinearFunctional functional_from(int n, const IntVector& v) {
  LinearFunctional f;
  f.n = n;
  f.lambda = v;
  return f;
}

IntMatrix functional_matrix(const std::vector<LinearFunctional>& fs, int n) {
  std::vector<IntVector> cols;
  for (const auto& f : fs) cols.push_back(f.lambda);
  return IntMatrix::from_columns(cols, static_cast<std::size_t>((n + 1) * (n + 1)));
}

}  // namespace

std::vector<LinearFunctional> serre_relations(int n) {
  std::vector<LinearFunctional> out;
  for (auto [i, j] : serre_representatives(n)) {
    if (i == n - i && j == n - j) continue;
    LinearFunctional f = LinearFunctional::unit(n, i, j);
    f.at(n - i, n - j) = -1;
    out.push_back(std::move(f));
  }
  return out;
}

IntMatrix monomial_image_matrix(int n, const HodgeImages& images) {
  const auto mons = monomials_of_degree(*rings::presentation(), n);
  std::vector<IntVector> cols;
  cols.reserve(mons.size());
  for (const auto& e : mons) {
    Polynomial img = phi(Polynomial::monomial(rings::presentation(), e), images);
    cols.push_back(HodgeDiamond::from_polynomial(img, n).entries());
  }
  return IntMatrix::from_columns(cols, static_cast<std::size_t>((n + 1) * (n + 1)));
}

namespace {

detail::DegreeCache<SnfResult>& image_snf_cache() {
  static detail::DegreeCache<SnfResult> cache;
  return cache;
}

}  // namespace

std::vector<LinearFunctional> relations(int n) {
  std::vector<LinearFunctional> out;
  for (const auto& v : kernel_basis(monomial_image_matrix(n).transpose())) {
    out.push_back(functional_from(n, v));
  }
  return out;
}

std::vector<LinearFunctional> congruences(int n, const Integer& m) {
  auto s = image_snf_cache().get(n, [](int deg) { return snf(monomial_image_matrix(deg).transpose()); });
  std::vector<LinearFunctional> out;
  for (const auto& v : kernel_mod(*s, m)) {
    LinearFunctional f = functional_from(n, v);
    f.modulus = m;
    out.push_back(std::move(f));
  }
  return out;
}

// ------------------------------------------------------------ birational

std::vector<HodgeDiamond> birational_ideal_basis(int n) {
  std::vector<HodgeDiamond> out;
  if (n < 2) return out;
  for (const auto& b : basis_H(n - 2)) {
    HodgeDiamond d(n);
    for (int i = 0; i <= n - 2; ++i)
      for (int j = 0; j <= n - 2; ++j) d.at(i + 1, j + 1) = b.at(i, j);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<std::pair<std::string, LinearFunctional>> outer_functionals(int n) {
  std::vector<std::pair<std::string, LinearFunctional>> out;
  for (int j = 0; j <= n; ++j) {
    out.emplace_back("h^{0," + std::to_string(j) + "}", LinearFunctional::unit(n, 0, j));
  }
  for (int i = 1; i < n; ++i) {
    out.emplace_back("h^{" + std::to_string(i) + ",0}", LinearFunctional::unit(n, i, 0));
  }
  return out;
}

BirationalVerdict is_birational_invariant(const LinearFunctional& f) {
  if (f.n < 0) throw Error("functional degree must be non-negative");
  if (f.lambda.size() != static_cast<std::size_t>((f.n + 1) * (f.n + 1))) {
    throw Error("functional has the wrong number of coefficients");
  }
  if (f.modulus && f.denominator != 1) {
    throw Error("modular functionals must have integer coefficients");
  }
  const int n = f.n;
  BirationalVerdict verdict;
  const auto ideal = birational_ideal_basis(n);
  const auto lower = n >= 2 ? basis_H(n - 2) : std::vector<HodgeDiamond>{};
  for (std::size_t k = 0; k < ideal.size(); ++k) {
    Integer v = f.evaluate(ideal[k]);
    if (f.modulus) v = mod_floor(v, *f.modulus);
    if (v == 0) continue;
    verdict.invariant = false;
    verdict.witness = ideal[k];
    verdict.witness_value = v;
    verdict.witness_label = n == 2 ? "Bl_pt(P^2) - P^2"
                                   : "C * (" + lower[k].to_string() + ")";
    return verdict;
  }

  verdict.invariant = true;
  const auto outer = outer_functionals(n);
  std::vector<LinearFunctional> cols_f;
  for (const auto& [name, g] : outer) cols_f.push_back(g);
  for (auto& s : serre_relations(n)) cols_f.push_back(std::move(s));
  IntMatrix M = functional_matrix(cols_f, n);
  if (f.modulus) {
    const std::size_t dim = M.rows();
    IntMatrix mI(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) mI(i, i) = *f.modulus;
    M = M.hcat(mI);
  }
  IntVector x;
  try {
    x = solve_exact(M, f.lambda);
  } catch (const NoIntegerSolution&) {
    throw Error("functional annihilates (C)_n but is not an outer combination; "
                "this contradicts the birational classification");
  }
  for (std::size_t k = 0; k < outer.size(); ++k) {
    Rational c(x[k], f.denominator);
    c.canonicalize();
    if (f.modulus) c = Rational(mod_floor(x[k], *f.modulus));
    verdict.outer_coefficients.emplace_back(outer[k].first, c);
  }
  return verdict;
}

// ---------------------------------------------------------- verification

namespace {

std::string describe_vector(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

IntMatrix to_rep_coordinates(const IntMatrix& full, int n) {
  auto reps = serre_representatives(n);
  IntMatrix out(reps.size(), full.cols());
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const auto row = static_cast<std::size_t>(reps[k].first * (n + 1) + reps[k].second);
    for (std::size_t c = 0; c < full.cols(); ++c) out(k, c) = full(row, c);
  }
  return out;
}

}  // namespace

CheckRecord verify_presentation(int max_n, Execution ex, const HodgeImages& images) {
  return run_check(
      "hodge.presentation",
      "phi: Z[A,B,C,D] -> H_* is onto in each degree with kernel generated by G",
      0, max_n, ex, [&images](int n) -> std::string {
        const auto& R = rings::presentation();
        const auto mons = monomials_of_degree(*R, n);
        const IntMatrix full = monomial_image_matrix(n, images);
        for (std::size_t c = 0; c < mons.size(); ++c) {
          HodgeDiamond d(n, full.column(c));
          if (!d.is_member()) {
            return "phi(" + Polynomial::monomial(R, mons[c]).to_string() +
                   ") = " + d.to_string() + " is not Serre dual";
          }
        }
        const IntMatrix M = to_rep_coordinates(full, n);
        const auto r = static_cast<std::size_t>(rank_H(n));
        if (!lattice_equal(M, IntMatrix::identity(r))) {
          auto s = snf(M);
          std::string f;
          for (const auto& v : s.invariant_factors) f += (f.empty() ? "" : ",") + v.get_str();
          return "image lattice is not H_n; invariant factors [" + f + "]";
        }
        std::map<Exponent, std::size_t> index;
        for (std::size_t c = 0; c < mons.size(); ++c) index.emplace(mons[c], c);
        std::vector<IntVector> gens;
        for (const auto& e : monomials_of_degree(*R, n - 4)) {
          Polynomial g = relation_G() * Polynomial::monomial(R, e);
          IntVector v(mons.size(), Integer(0));
          for (const auto& [ge, gc] : g.terms()) v[index.at(ge)] = gc;
          gens.push_back(std::move(v));
        }
        const auto kernel = kernel_basis(M);
        if (!lattice_equal(IntMatrix::from_columns(kernel, mons.size()),
                           IntMatrix::from_columns(gens, mons.size()))) {
          return "kernel (rank " + std::to_string(kernel.size()) +
                 ") differs from G * monomials (" + std::to_string(gens.size()) +
                 " generators)";
        }
        return {};
      });
}

CheckRecord verify_hodge_relations(int max_n, Execution ex) {
  return run_check(
      "hodge.relations",
      "the universal linear relations among Hodge numbers are spanned by Serre duality",
      0, max_n, ex, [](int n) -> std::string {
        const auto rel = relations(n);
        const auto serre = serre_relations(n);
        const long expected = static_cast<long>((n + 1) * (n + 1)) - rank_H(n);
        if (static_cast<long>(rel.size()) != expected) {
          return "relation rank " + std::to_string(rel.size()) + ", expected " +
                 std::to_string(expected);
        }
        if (!lattice_equal(functional_matrix(rel, n), functional_matrix(serre, n))) {
          return "relation lattice differs from the Serre span";
        }
        return {};
      });
}

CheckRecord verify_hodge_congruences(int max_n, const std::vector<long>& moduli, Execution ex) {
  return run_check(
      "hodge.congruences",
      "the universal congruences among Hodge numbers are spanned by Serre duality",
      0, max_n, ex, [&moduli](int n) -> std::string {
        const IntMatrix serre = functional_matrix(serre_relations(n), n);
        for (long m : moduli) {
          const auto cong = congruences(n, Integer(m));
          if (!lattice_equal_mod(functional_matrix(cong, n), serre, Integer(m))) {
            return "mod " + std::to_string(m) + ": congruences differ from the Serre span";
          }
        }
        return {};
      });
}

CheckRecord verify_birational(int max_n, Execution ex) {
  return run_check(
      "hodge.birational",
      "ker(H_n -> Z[x,y,z]/(xy)) = (C)_n and the image is free of rank 2n",
      2, max_n, ex, [](int n) -> std::string {
        const auto basis = basis_H(n);
        // Outer positions: (0, j) for all j, then (i, 0) for i > 0.
        std::vector<std::pair<int, int>> outer;
        for (int j = 0; j <= n; ++j) outer.emplace_back(0, j);
        for (int i = 1; i <= n; ++i) outer.emplace_back(i, 0);
        IntMatrix P(outer.size(), basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c)
          for (std::size_t r = 0; r < outer.size(); ++r)
            P(r, c) = basis[c].at(outer[r].first, outer[r].second);

        const auto r_n = static_cast<std::size_t>(rank_H(n));
        std::vector<IntVector> ideal;
        for (const auto& d : birational_ideal_basis(n)) ideal.push_back(hodge_coordinates(d));
        if (rank(IntMatrix::from_columns(ideal, r_n)) != r_n - 2 * static_cast<std::size_t>(n)) {
          return "(C)_n does not have rank r_n - 2n";
        }
        const auto kernel = kernel_basis(P);
        if (!lattice_equal(IntMatrix::from_columns(kernel, r_n),
                           IntMatrix::from_columns(ideal, r_n))) {
          return "kernel of the outer projection differs from (C)_n";
        }
        // Expected image basis: y^j (j < n), x^i (0 < i < n), x^n + y^n.
        std::vector<IntVector> image;
        for (std::size_t r = 0; r < outer.size(); ++r) {
          auto [i, j] = outer[r];
          if ((i == 0 && j == n) || (j == 0 && i == n)) continue;
          IntVector v(outer.size(), Integer(0));
          v[r] = 1;
          image.push_back(std::move(v));
        }
        IntVector top(outer.size(), Integer(0));
        top[static_cast<std::size_t>(n)] = 1;          // (0, n)
        top[outer.size() - 1] = 1;                     // (n, 0)
        image.push_back(std::move(top));
        if (image.size() != 2 * static_cast<std::size_t>(n) || rank(P) != image.size()) {
          return "image rank " + std::to_string(rank(P)) + ", expected " + std::to_string(2 * n);
        }
        if (!lattice_equal(P, IntMatrix::from_columns(image, outer.size()))) {
          return "image lattice differs from the listed basis";
        }
        return {};
      });
}

CheckRecord verify_hodge_basis(int max_n, Execution ex) {
  return run_check(
      "hodge.basis",
      "H_n is free of rank r_n on the Serre-orbit basis; decompose inverts phi",
      0, max_n, ex, [](int n) -> std::string {
        const auto basis = basis_H(n);
        if (static_cast<long>(basis.size()) != rank_H(n)) return "basis size differs from r_n";
        std::vector<IntVector> cols;
        for (const auto& b : basis) {
          if (!b.is_member()) return "basis element " + b.to_string() + " is not Serre dual";
          cols.push_back(b.entries());
        }
        const IntMatrix B =
            IntMatrix::from_columns(cols, static_cast<std::size_t>((n + 1) * (n + 1)));
        auto s = snf(B);
        for (const auto& f : s.invariant_factors) {
          if (f != 1) return "basis is not a saturated independent set";
        }
        for (const auto& b : basis) {
          PresentationElement e = decompose(b);
          HodgeDiamond back = HodgeDiamond::from_polynomial(phi(e), n);
          if (!(back == b)) {
            return "round trip failed on " + b.to_string() + " via " + e.to_string() + " " +
                   describe_vector(back.entries());
          }
        }
        return {};
      });
}

}  // namespace hodgelab
