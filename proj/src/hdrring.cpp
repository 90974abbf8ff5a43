#include "hodgelab/hdrring.hpp"

#include <array>
#include <sstream>

#include "degree_cache.hpp"

namespace hodgelab {

HdrElement::HdrElement(HodgeDiamond a_, DeRhamVector b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.dim() != b.dim()) {
    throw DegreeMismatch("Hodge part has dimension " + std::to_string(a.dim()) +
                         " but de Rham part has dimension " + std::to_string(b.dim()));
  }
}

HdrElement HdrElement::operator+(const HdrElement& o) const { return {a + o.a, b + o.b}; }
HdrElement HdrElement::operator-(const HdrElement& o) const { return {a - o.a, b - o.b}; }
HdrElement HdrElement::operator*(const Integer& k) const { return {a * k, b * k}; }

HdrElement HdrElement::operator*(const HdrElement& o) const {
  HodgeDiamond p(a.dim() + o.a.dim());
  for (int i = 0; i <= a.dim(); ++i)
    for (int j = 0; j <= a.dim(); ++j)
      for (int k = 0; k <= o.a.dim(); ++k)
        for (int l = 0; l <= o.a.dim(); ++l) p.at(i + k, j + l) += a.at(i, j) * o.a.at(k, l);
  return {std::move(p), b * o.b};
}

std::string HdrElement::to_string() const {
  return "(" + a.to_string() + ", " + b.to_string() + ")";
}

bool is_member_hdr(const HodgeDiamond& a, const DeRhamVector& b) {
  if (a.dim() != b.dim()) {
    throw DegreeMismatch("Hodge part has dimension " + std::to_string(a.dim()) +
                         " but de Rham part has dimension " + std::to_string(b.dim()));
  }
  return a.is_member() && b.is_member() && h00_H(a) == h0_DR(b) && chi_H(a) == chi_DR(b);
}

bool is_member_hdr(const HdrElement& e) { return is_member_hdr(e.a, e.b); }

const DeRhamVector& kernel_generator_g2() {
  static const DeRhamVector g = DeRhamVector::from_values({0, 1, 2, 1, 0});
  return g;
}

const DeRhamVector& kernel_generator_g3() {
  static const DeRhamVector g = DeRhamVector::from_values({0, 0, 1, 2, 1, 0, 0});
  return g;
}

HdrElement sprime() { return {HodgeDiamond(2), kernel_generator_g2()}; }
HdrElement tprime() { return {HodgeDiamond(3), kernel_generator_g3()}; }

namespace {

std::string describe(const IntVector& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k].get_str();
  os << "]";
  return os.str();
}

std::vector<IntVector> as_columns(const std::vector<DeRhamVector>& vs) {
  std::vector<IntVector> out;
  for (const auto& v : vs) out.push_back(derham_coordinates(v));
  return out;
}

}  // namespace

std::vector<IntVector> kernel_I(int n) {
  const auto basis = basis_DR(n);
  IntMatrix C(2, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    C(0, k) = chi_DR(basis[k]);
    C(1, k) = h0_DR(basis[k]);
  }
  return kernel_basis(C);
}

std::vector<IntVector> kernel_I_generators(int n) {
  std::vector<DeRhamVector> gens;
  if (n >= 2)
    for (const auto& v : basis_DR(n - 2)) gens.push_back(kernel_generator_g2() * v);
  if (n >= 3)
    for (const auto& v : basis_DR(n - 3)) gens.push_back(kernel_generator_g3() * v);
  return as_columns(gens);
}

CheckRecord verify_kernel_I(int max_n, Execution ex) {
  return run_check("hdr.kernel_I",
                   "ker(chi, h^0) on DR_* is the ideal generated by (t+2t^2+t^3)z^2 and "
                   "(t^2+2t^3+t^4)z^3",
                   0, max_n, ex, [](int n) -> std::string {
                     const auto rows = static_cast<std::size_t>(n + 1);
                     const auto kernel = kernel_I(n);
                     const auto gens = kernel_I_generators(n);
                     for (const auto& g : gens) {
                       const DeRhamVector v = derham_from_coordinates(n, g);
                       if (chi_DR(v) != 0 || h0_DR(v) != 0) {
                         return "generator " + v.to_string() + " is outside the kernel";
                       }
                     }
                     const IntMatrix K = IntMatrix::from_columns(kernel, rows);
                     const IntMatrix G = IntMatrix::from_columns(gens, rows);
                     if (!lattice_equal(K, G)) {
                       for (const auto& v : kernel)
                         if (!in_lattice(G, v)) {
                           return "kernel element " +
                                  derham_from_coordinates(n, v).to_string() +
                                  " is not generated by g2, g3";
                         }
                       return "kernel and generated ideal differ";
                     }
                     return {};
                   });
}

CheckRecord verify_tprime_alternatives(Execution ex) {
  return run_check(
      "hdr.tprime_alternatives",
      "an element of I_3 generates I_3 together with g2*DR_1 iff its h^2 is odd", 3, 3, ex,
      [ex](int n) -> std::string {
        const auto rows = static_cast<std::size_t>(n + 1);
        const IntMatrix I3 = IntMatrix::from_columns(kernel_I(n), rows);
        std::vector<DeRhamVector> base;
        for (const auto& v : basis_DR(1)) base.push_back(kernel_generator_g2() * v);
        const auto base_cols = as_columns(base);

        std::vector<std::array<int, 3>> samples;
        for (int a = -3; a <= 3; ++a)
          for (int b1 = -2; b1 <= 2; ++b1)
            for (int b2 = -2; b2 <= 2; ++b2) samples.push_back({a, b1, b2});
        std::vector<std::string> outcome(samples.size());
        parallel_for(samples.size(), ex, [&](std::size_t k) {
          const auto [a, b1, b2] = samples[k];
          const DeRhamVector w = kernel_generator_g3() * Integer(a) + base[0] * Integer(b1) +
                                 base[1] * Integer(b2);
          if (!w.is_member() || chi_DR(w) != 0 || h0_DR(w) != 0) {
            outcome[k] = w.to_string() + " is not in I_3";
            return;
          }
          auto cols = base_cols;
          cols.push_back(derham_coordinates(w));
          const bool generates = lattice_equal(IntMatrix::from_columns(cols, rows), I3);
          const bool odd = mpz_odd_p(w.at(2).get_mpz_t()) != 0;
          if (generates != odd) {
            outcome[k] = "w = " + w.to_string() + " has h^2 = " + w.at(2).get_str() +
                         (generates ? " but generates" : " but does not generate");
          }
        });
        for (const auto& o : outcome)
          if (!o.empty()) return o;
        return {};
      });
}

HdrElement HdrFamily::piece(int n) const {
  return {HodgeDiamond::from_polynomial(hodge, n), DeRhamVector::from_polynomial(derham, n)};
}

HdrFamily tau(const Polynomial& P) {
  if (!(*P.ring() == *rings::hdr_presentation())) {
    throw ContextMismatch("tau expects a polynomial in Z[A,B,C,D,S,T]");
  }
  static const std::vector<Polynomial> hodge_images = [] {
    const auto& h = HodgeImages::standard();
    const Polynomial zero(rings::hodge());
    return std::vector<Polynomial>{h.A, h.B, h.C, h.D, zero, zero};
  }();
  static const std::vector<Polynomial> derham_images = [] {
    const auto& d = DeRhamImages::standard();
    return std::vector<Polynomial>{d.A,
                                   d.B,
                                   d.C,
                                   d.D,
                                   kernel_generator_g2().to_polynomial(),
                                   kernel_generator_g3().to_polynomial()};
  }();
  return {P.substitute(hodge_images, rings::hodge()),
          P.substitute(derham_images, rings::derham())};
}

namespace {

IntVector hdr_coordinates_unchecked(const HodgeDiamond& a, const DeRhamVector& b) {
  IntVector v = hodge_coordinates(a);
  const IntVector w = derham_coordinates(b);
  v.insert(v.end(), w.begin(), w.end());
  return v;
}

std::vector<HdrElement> build_basis_HDR(int n) {
  const auto bh = basis_H(n);
  const auto bd = basis_DR(n);
  IntMatrix C(2, bh.size() + bd.size());
  for (std::size_t k = 0; k < bh.size(); ++k) {
    C(0, k) = h00_H(bh[k]);
    C(1, k) = chi_H(bh[k]);
  }
  for (std::size_t k = 0; k < bd.size(); ++k) {
    C(0, bh.size() + k) = -h0_DR(bd[k]);
    C(1, bh.size() + k) = -chi_DR(bd[k]);
  }
  std::vector<HdrElement> out;
  for (const auto& v : kernel_basis(C)) {
    const IntVector hc(v.begin(), v.begin() + static_cast<long>(bh.size()));
    const IntVector dc(v.begin() + static_cast<long>(bh.size()), v.end());
    out.emplace_back(hodge_from_coordinates(n, hc), derham_from_coordinates(n, dc));
  }
  return out;
}

detail::DegreeCache<std::vector<HdrElement>>& basis_cache() {
  static detail::DegreeCache<std::vector<HdrElement>> cache;
  return cache;
}

}  // namespace

std::vector<HdrElement> basis_HDR(int n) {
  if (n < 0) throw Error("degree must be non-negative");
  return *basis_cache().get(n, build_basis_HDR);
}

long rank_HDR(int n) { return static_cast<long>(basis_HDR(n).size()); }

IntVector hdr_coordinates(const HdrElement& e) {
  if (!is_member_hdr(e)) throw NotInHDR("pair " + e.to_string() + " is not in HDR");
  return hdr_coordinates_unchecked(e.a, e.b);
}

namespace {

Polynomial embed_presentation(const Polynomial& p) {
  Polynomial::TermMap t;
  for (const auto& [e, c] : p.terms()) {
    Exponent x = e;
    x.resize(6, 0);
    t.emplace(std::move(x), c);
  }
  return Polynomial(rings::hdr_presentation(), std::move(t));
}

struct IdealSolveData {
  std::vector<Exponent> monomials;  ///< in Z[A,B,C,D,S,T]
  IntMatrix M;
};

IdealSolveData build_ideal_data(int n) {
  IdealSolveData data;
  std::vector<IntVector> cols;
  auto add = [&](const DeRhamVector& g, int deg, std::size_t slot) {
    if (n < deg) return;
    for (const auto& e : derham_normal_monomials(n - deg)) {
      const DeRhamVector img = psi_piece(Polynomial::monomial(rings::presentation(), e), n - deg);
      cols.push_back(derham_coordinates(g * img));
      Exponent x = e;
      x.resize(6, 0);
      x[slot] = 1;
      data.monomials.push_back(std::move(x));
    }
  };
  add(kernel_generator_g2(), 2, 4);
  add(kernel_generator_g3(), 3, 5);
  data.M = IntMatrix::from_columns(cols, static_cast<std::size_t>(n + 1));
  return data;
}

detail::DegreeCache<IdealSolveData>& ideal_cache() {
  static detail::DegreeCache<IdealSolveData> cache;
  return cache;
}

}  // namespace

Polynomial decompose_HDR(const HdrElement& e) {
  if (!is_member_hdr(e)) throw NotInHDR("pair " + e.to_string() + " is not in HDR");
  const int n = e.dim();
  Polynomial out = embed_presentation(decompose(e.a).to_polynomial());
  const DeRhamVector c = e.b - s_map(e.a);
  if (c.is_zero()) return out;
  auto data = ideal_cache().get(n, build_ideal_data);
  if (data->monomials.empty()) {
    throw InternalBasisDefect("nonzero kernel element in degree " + std::to_string(n));
  }
  IntVector x;
  try {
    x = solve_exact(data->M, derham_coordinates(c));
  } catch (const NoIntegerSolution&) {
    throw InternalBasisDefect("b - s(a) = " + c.to_string() + " is outside the ideal (g2, g3)");
  }
  Polynomial::TermMap t;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != 0) t.emplace(data->monomials[k], x[k]);
  return out + Polynomial(rings::hdr_presentation(), std::move(t));
}

namespace {

std::vector<IntVector> tau_columns(int n, bool include_tprime) {
  const auto& R = rings::hdr_presentation();
  std::vector<IntVector> cols;
  for (const auto& e : monomials_of_degree(*R, n)) {
    if (!include_tprime && e[5] != 0) continue;
    const HdrElement img = tau(Polynomial::monomial(R, e)).piece(n);
    cols.push_back(hdr_coordinates(img));
  }
  return cols;
}

}  // namespace

CheckRecord verify_tau_surjective(int max_n, Execution ex, bool include_tprime) {
  std::string id = include_tprime ? "hdr.tau_surjective" : "hdr.tau_surjective_without_T";
  return run_check(
      std::move(id), "tau: Z[A,B,C,D,S,T] -> HDR_* is surjective", 0, max_n, ex,
      [include_tprime](int n) -> std::string {
        const auto basis = basis_HDR(n);
        const auto rows = static_cast<std::size_t>(rank_H(n) + rank_DR(n));
        const IntMatrix G = IntMatrix::from_columns(tau_columns(n, include_tprime), rows);
        std::vector<IntVector> bcols;
        for (const auto& b : basis) bcols.push_back(hdr_coordinates(b));
        const IntMatrix B = IntMatrix::from_columns(bcols, rows);
        if (lattice_equal(G, B)) return {};
        for (const auto& b : basis)
          if (!in_lattice(G, hdr_coordinates(b))) {
            return "HDR basis element " + b.to_string() + " is not in the tau-image";
          }
        return "tau-image is not contained in HDR_n";
      });
}

CombinedFunctional::CombinedFunctional(int n_)
    : n(n_),
      lambda(static_cast<std::size_t>((n_ + 1) * (n_ + 1)), Integer(0)),
      mu(static_cast<std::size_t>(2 * n_ + 1), Integer(0)) {}

CombinedFunctional CombinedFunctional::from_full(int n, const IntVector& v) {
  CombinedFunctional f(n);
  if (v.size() != f.lambda.size() + f.mu.size()) throw Error("combined functional size mismatch");
  std::copy(v.begin(), v.begin() + static_cast<long>(f.lambda.size()), f.lambda.begin());
  std::copy(v.begin() + static_cast<long>(f.lambda.size()), v.end(), f.mu.begin());
  return f;
}

IntVector CombinedFunctional::full() const {
  IntVector v = lambda;
  v.insert(v.end(), mu.begin(), mu.end());
  return v;
}

IntVector hdr_full_vector(const HdrElement& e) {
  IntVector v = e.a.entries();
  v.insert(v.end(), e.b.entries().begin(), e.b.entries().end());
  return v;
}

Integer CombinedFunctional::evaluate(const HdrElement& e) const {
  if (e.dim() != n) throw DegreeMismatch("functional and element dimensions differ");
  return dot(full(), hdr_full_vector(e));
}

namespace {

std::size_t full_size(int n) { return static_cast<std::size_t>((n + 1) * (n + 1) + 2 * n + 1); }

IntMatrix basis_full_matrix(int n) {
  std::vector<IntVector> cols;
  for (const auto& b : basis_HDR(n)) cols.push_back(hdr_full_vector(b));
  return IntMatrix::from_columns(cols, full_size(n));
}

detail::DegreeCache<SnfResult>& tau_snf_cache() {
  static detail::DegreeCache<SnfResult> cache;
  return cache;
}

IntMatrix functional_matrix(const std::vector<CombinedFunctional>& fs, int n) {
  std::vector<IntVector> cols;
  for (const auto& f : fs) cols.push_back(f.full());
  return IntMatrix::from_columns(cols, full_size(n));
}

IntMatrix named_matrix(int n, const std::optional<Integer>& m) {
  std::vector<CombinedFunctional> fs;
  for (auto& [name, f] : named_hdr_relations(n, m)) fs.push_back(f);
  return functional_matrix(fs, n);
}

}  // namespace

std::vector<CombinedFunctional> hdr_relations(int n) {
  std::vector<CombinedFunctional> out;
  for (const auto& v : kernel_basis(basis_full_matrix(n).transpose())) {
    out.push_back(CombinedFunctional::from_full(n, v));
  }
  return out;
}

std::vector<CombinedFunctional> hdr_congruences(int n, const Integer& m) {
  if (m < 2) throw Error("modulus must be at least 2");
  auto s = tau_snf_cache().get(n, [](int deg) {
    std::vector<IntVector> cols;
    for (const auto& c : tau_columns(deg, true)) {
      const IntVector hc(c.begin(), c.begin() + rank_H(deg));
      const IntVector dc(c.begin() + rank_H(deg), c.end());
      cols.push_back(hdr_full_vector(
          {hodge_from_coordinates(deg, hc), derham_from_coordinates(deg, dc)}));
    }
    return snf(IntMatrix::from_columns(cols, full_size(deg)).transpose());
  });
  std::vector<CombinedFunctional> out;
  for (const auto& v : kernel_mod(*s, m)) {
    CombinedFunctional f = CombinedFunctional::from_full(n, v);
    f.modulus = m;
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::pair<std::string, CombinedFunctional>> named_hdr_relations(
    int n, const std::optional<Integer>& m) {
  std::vector<std::pair<std::string, CombinedFunctional>> out;
  for (const auto& [i, j] : serre_representatives(n)) {
    if (i == n - i && j == n - j) continue;
    CombinedFunctional f(n);
    f.lam(i, j) = 1;
    f.lam(n - i, n - j) = -1;
    out.emplace_back("serre[" + std::to_string(i) + "," + std::to_string(j) + "]", std::move(f));
  }
  for (int i = 0; i < n; ++i) {
    CombinedFunctional f(n);
    f.mu[static_cast<std::size_t>(i)] = 1;
    f.mu[static_cast<std::size_t>(2 * n - i)] = -1;
    out.emplace_back("poincare[" + std::to_string(i) + "]", std::move(f));
  }
  {
    CombinedFunctional f(n);
    f.lam(0, 0) = 1;
    f.mu[0] = -1;
    out.emplace_back("components", std::move(f));
  }
  if (n > 0) {
    CombinedFunctional f(n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) f.lam(i, j) = (i + j) % 2 == 0 ? 1 : -1;
    for (int i = 0; i <= 2 * n; ++i) f.mu[static_cast<std::size_t>(i)] = i % 2 == 0 ? -1 : 1;
    out.emplace_back("euler", std::move(f));
  }
  if (m && n % 2 == 1 && mpz_even_p(m->get_mpz_t())) {
    CombinedFunctional f(n);
    f.mu[static_cast<std::size_t>(n)] = *m / 2;
    out.emplace_back("parity", std::move(f));
  }
  if (m) {
    for (auto& [name, f] : out) {
      for (auto& v : f.lambda) v = mod_floor(v, *m);
      for (auto& v : f.mu) v = mod_floor(v, *m);
      f.modulus = *m;
    }
  }
  return out;
}

CheckRecord verify_hdr_relations(int max_n, Execution ex) {
  return run_check(
      "hdr.relations",
      "linear relations on HDR_* are spanned by Serre, Poincare, components and Euler", 0, max_n,
      ex, [](int n) -> std::string {
        const long expected = n == 0 ? 1 : rank_H(n) + n - 1;
        if (rank_HDR(n) != expected) {
          return "rank_HDR = " + std::to_string(rank_HDR(n)) + ", expected " +
                 std::to_string(expected);
        }
        const IntMatrix N = named_matrix(n, std::nullopt);
        if (rank(N) != N.cols()) return "named relations are dependent";
        const auto rel = hdr_relations(n);
        if (rel.size() != full_size(n) - static_cast<std::size_t>(rank_HDR(n))) {
          return "annihilator rank " + std::to_string(rel.size());
        }
        const IntMatrix K = functional_matrix(rel, n);
        if (!lattice_equal(K, N)) {
          for (const auto& f : rel)
            if (!in_lattice(N, f.full())) return "relation " + describe(f.full()) + " is not named";
          return "a named functional is not a relation";
        }
        return {};
      });
}

CheckRecord verify_hdr_congruences(int max_n, const std::vector<long>& moduli, Execution ex) {
  return run_check(
      "hdr.congruences",
      "congruences on HDR_* are the linear relations plus middle parity of h^n_dR", 0, max_n,
      ex, [&moduli](int n) -> std::string {
        for (long mv : moduli) {
          const Integer m = mv;
          const IntMatrix K = functional_matrix(hdr_congruences(n, m), n);
          const IntMatrix N = named_matrix(n, m);
          if (!lattice_equal_mod(K, N, m)) {
            return "mod " + std::to_string(mv) + ": congruences differ from the named span";
          }
          if (mv % 2 == 0) {
            IntVector parity(full_size(n), Integer(0));
            parity[static_cast<std::size_t>((n + 1) * (n + 1) + n)] = m / 2;
            const bool present = in_lattice(K, parity, m);
            if (present != (n % 2 == 1)) {
              return "mod " + std::to_string(mv) + ": parity functional " +
                     (present ? "present" : "absent") + " for n = " + std::to_string(n);
            }
          }
        }
        return {};
      });
}

}  // namespace hodgelab
