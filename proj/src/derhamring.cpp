#include "hodgelab/derhamring.hpp"

#include <algorithm>
#include <map>

#include "degree_cache.hpp"

namespace hodgelab {

DeRhamVector::DeRhamVector(int n) : n_(n) {
  if (n < 0) throw Error("de Rham dimension must be non-negative");
  h_.assign(static_cast<std::size_t>(2 * n + 1), Integer(0));
}

DeRhamVector::DeRhamVector(int n, std::vector<Integer> h) : n_(n), h_(std::move(h)) {
  if (n < 0) throw Error("de Rham dimension must be non-negative");
  if (h_.size() != static_cast<std::size_t>(2 * n + 1)) {
    throw Error("de Rham vector of dimension " + std::to_string(n) + " needs " +
                std::to_string(2 * n + 1) + " entries");
  }
}

DeRhamVector DeRhamVector::from_values(const std::vector<long>& h) {
  if (h.size() % 2 == 0) throw Error("de Rham vector needs an odd number of entries");
  std::vector<Integer> v(h.begin(), h.end());
  return DeRhamVector(static_cast<int>(h.size() / 2), std::move(v));
}

bool DeRhamVector::is_poincare_dual() const {
  for (int i = 0; i <= 2 * n_; ++i)
    if (at(i) != at(2 * n_ - i)) return false;
  return true;
}

bool DeRhamVector::is_member() const {
  if (!is_poincare_dual()) return false;
  return n_ % 2 == 0 || mpz_even_p(at(n_).get_mpz_t());
}

bool DeRhamVector::is_zero() const {
  return std::all_of(h_.begin(), h_.end(), [](const Integer& v) { return v == 0; });
}

Polynomial DeRhamVector::to_polynomial() const {
  Polynomial::TermMap t;
  for (int i = 0; i <= 2 * n_; ++i)
    if (at(i) != 0) t.emplace(Exponent{static_cast<unsigned>(i), static_cast<unsigned>(n_)}, at(i));
  return Polynomial(rings::derham(), std::move(t));
}

DeRhamVector DeRhamVector::from_polynomial(const Polynomial& p, int n) {
  if (!(*p.ring() == *rings::derham())) throw ContextMismatch("expected a polynomial in Z[t,z]");
  DeRhamVector v(n);
  for (const auto& [e, c] : p.terms()) {
    if (static_cast<int>(e[1]) != n) continue;
    if (static_cast<int>(e[0]) > 2 * n) {
      throw Error("term t^" + std::to_string(e[0]) + " does not fit dimension " +
                  std::to_string(n));
    }
    v.at(static_cast<int>(e[0])) = c;
  }
  return v;
}

DeRhamVector DeRhamVector::operator+(const DeRhamVector& o) const {
  if (o.n_ != n_) throw DegreeMismatch("de Rham vectors of different dimension");
  DeRhamVector r = *this;
  for (std::size_t k = 0; k < h_.size(); ++k) r.h_[k] += o.h_[k];
  return r;
}

DeRhamVector DeRhamVector::operator-(const DeRhamVector& o) const {
  if (o.n_ != n_) throw DegreeMismatch("de Rham vectors of different dimension");
  DeRhamVector r = *this;
  for (std::size_t k = 0; k < h_.size(); ++k) r.h_[k] -= o.h_[k];
  return r;
}

DeRhamVector DeRhamVector::operator*(const Integer& k) const {
  DeRhamVector r = *this;
  for (auto& v : r.h_) v *= k;
  return r;
}

DeRhamVector DeRhamVector::operator*(const DeRhamVector& o) const {
  DeRhamVector r(n_ + o.n_);
  for (int i = 0; i <= 2 * n_; ++i)
    for (int j = 0; j <= 2 * o.n_; ++j) r.at(i + j) += at(i) * o.at(j);
  return r;
}

long rank_DR(int n) {
  if (n < 0) throw Error("degree must be non-negative");
  return n + 1;
}

std::vector<DeRhamVector> basis_DR(int n) {
  std::vector<DeRhamVector> out;
  for (int i = 0; i < n; ++i) {
    DeRhamVector v(n);
    v.at(i) = 1;
    v.at(2 * n - i) = 1;
    out.push_back(std::move(v));
  }
  DeRhamVector mid(n);
  mid.at(n) = n % 2 == 0 ? 1 : 2;
  out.push_back(std::move(mid));
  return out;
}

IntVector derham_coordinates(const DeRhamVector& v) {
  if (!v.is_member()) throw NotInDR("vector violates Poincare duality or middle parity");
  const int n = v.dim();
  IntVector c;
  for (int i = 0; i < n; ++i) c.push_back(v.at(i));
  c.push_back(n % 2 == 0 ? v.at(n) : Integer(v.at(n) / 2));
  return c;
}

DeRhamVector derham_from_coordinates(int n, const IntVector& coords) {
  if (coords.size() != static_cast<std::size_t>(n + 1)) throw Error("need n+1 coordinates");
  DeRhamVector v(n);
  for (int i = 0; i < n; ++i) {
    v.at(i) = coords[static_cast<std::size_t>(i)];
    v.at(2 * n - i) = coords[static_cast<std::size_t>(i)];
  }
  v.at(n) = n % 2 == 0 ? coords.back() : Integer(2 * coords.back());
  return v;
}

DeRhamVector s_map(const HodgeDiamond& a) {
  const int n = a.dim();
  DeRhamVector v(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) v.at(i + j) += a.at(i, j);
  return v;
}

Polynomial s_map(const Polynomial& p) {
  const auto& R = rings::derham();
  const std::vector<Polynomial> imgs{Polynomial::variable(R, "t"), Polynomial::variable(R, "t"),
                                     Polynomial::variable(R, "z")};
  return p.substitute(imgs, R);
}

const DeRhamImages& DeRhamImages::standard() {
  static const DeRhamImages images = [] {
    const auto& R = rings::derham();
    return DeRhamImages{Polynomial::parse(R, "(1+t^2)z"), Polynomial::parse(R, "2tz"),
                        Polynomial::parse(R, "t^2z^2"), Polynomial::parse(R, "(t+t^3)z^2")};
  }();
  return images;
}

Polynomial psi(const Polynomial& P, const DeRhamImages& images) {
  if (!(*P.ring() == *rings::presentation())) {
    throw ContextMismatch("psi expects a polynomial in Z[A,B,C,D]");
  }
  const std::vector<Polynomial> imgs{images.A, images.B, images.C, images.D};
  return P.substitute(imgs, rings::derham());
}

DeRhamVector psi_piece(const Polynomial& P, int n) {
  return DeRhamVector::from_polynomial(psi(P), n);
}

const std::vector<Polynomial>& derham_kernel_generators() {
  static const std::vector<Polynomial> gens = [] {
    const auto& R = rings::presentation();
    return std::vector<Polynomial>{
        Polynomial::parse(R, "A^2*C - D^2"), Polynomial::parse(R, "A*B - 2*D"),
        Polynomial::parse(R, "B^2 - 4*C"), Polynomial::parse(R, "B*D - 2*A*C")};
  }();
  return gens;
}

std::vector<Exponent> derham_normal_monomials(int n) {
  using E = Exponent;
  std::vector<Exponent> out;
  auto u = [](int v) { return static_cast<unsigned>(v); };
  // A^i D^l, i + 2l = n
  for (int i = 0; i <= n; ++i)
    if ((n - i) % 2 == 0) out.push_back(E{u(i), 0, 0, u((n - i) / 2)});
  // C^k D^l, k > 0, 2k + 2l = n
  if (n % 2 == 0)
    for (int k = 1; 2 * k <= n; ++k) out.push_back(E{0, 0, u(k), u(n / 2 - k)});
  // A C^k D^l, k > 0, 1 + 2k + 2l = n
  if (n % 2 == 1)
    for (int k = 1; 1 + 2 * k <= n; ++k) out.push_back(E{1, 0, u(k), u((n - 1) / 2 - k)});
  // B C^k, 1 + 2k = n
  if (n % 2 == 1) out.push_back(E{0, 1, u((n - 1) / 2), 0});
  return out;
}

namespace {

struct DrDecomposeData {
  std::vector<Exponent> monomials;
  IntMatrix inverse;
};

DrDecomposeData build_dr_data(int n) {
  DrDecomposeData data;
  data.monomials = derham_normal_monomials(n);
  std::vector<IntVector> cols;
  for (const auto& e : data.monomials) {
    cols.push_back(derham_coordinates(psi_piece(Polynomial::monomial(rings::presentation(), e), n)));
  }
  if (cols.size() != static_cast<std::size_t>(n + 1)) {
    throw InternalBasisDefect("de Rham normal monomial count differs from n+1");
  }
  try {
    data.inverse = unimodular_inverse(IntMatrix::from_columns(cols, cols.size()));
  } catch (const NoIntegerSolution&) {
    throw InternalBasisDefect("de Rham basis-change matrix in degree " + std::to_string(n) +
                              " is not unimodular");
  }
  return data;
}

detail::DegreeCache<DrDecomposeData>& dr_cache() {
  static detail::DegreeCache<DrDecomposeData> cache;
  return cache;
}

}  // namespace

Polynomial decompose_DR(const DeRhamVector& v) {
  const IntVector coords = derham_coordinates(v);
  auto data = dr_cache().get(v.dim(), build_dr_data);
  const IntVector x = data->inverse * coords;
  Polynomial::TermMap t;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != 0) t.emplace(data->monomials[k], x[k]);
  return Polynomial(rings::presentation(), std::move(t));
}

Integer chi_DR(const DeRhamVector& v) {
  Integer s = 0;
  for (int i = 0; i <= 2 * v.dim(); ++i) s += (i % 2 == 0) ? v.at(i) : Integer(-v.at(i));
  return s;
}

Integer h0_DR(const DeRhamVector& v) { return v.at(0); }

Integer chi_H(const HodgeDiamond& a) {
  Integer s = 0;
  for (int i = 0; i <= a.dim(); ++i)
    for (int j = 0; j <= a.dim(); ++j) s += ((i + j) % 2 == 0) ? a.at(i, j) : Integer(-a.at(i, j));
  return s;
}

Integer h00_H(const HodgeDiamond& a) { return a.at(0, 0); }

CheckRecord verify_derham(int max_n, Execution ex, const std::vector<Polynomial>& kernel_gens) {
  return run_check(
      "derham.presentation",
      "psi = s o phi maps Z[A,B,C,D] onto DR_* with kernel J; s: H_n -> DR_n is onto",
      0, max_n, ex, [&kernel_gens](int n) -> std::string {
        const auto& R = rings::presentation();
        const auto mons = monomials_of_degree(*R, n);
        const auto dim = static_cast<std::size_t>(n + 1);
        std::vector<IntVector> cols;
        for (const auto& e : mons) {
          const Polynomial m = Polynomial::monomial(R, e);
          DeRhamVector img = psi_piece(m, n);
          if (!img.is_member()) {
            return "psi(" + m.to_string() + ") = " + img.to_string() + " is not in DR_n";
          }
          if (!(img == s_map(phi_piece(m, n)))) {
            return "psi(" + m.to_string() + ") differs from s(phi(" + m.to_string() + "))";
          }
          cols.push_back(derham_coordinates(img));
        }
        const IntMatrix M = IntMatrix::from_columns(cols, dim);
        if (!lattice_equal(M, IntMatrix::identity(dim))) return "psi-image lattice is not DR_n";

        std::map<Exponent, std::size_t> index;
        for (std::size_t c = 0; c < mons.size(); ++c) index.emplace(mons[c], c);
        std::vector<IntVector> gens;
        for (const auto& g : kernel_gens) {
          const long gd = g.degree();
          for (const auto& e : monomials_of_degree(*R, n - gd)) {
            const Polynomial prod = g * Polynomial::monomial(R, e);
            IntVector v(mons.size(), Integer(0));
            for (const auto& [pe, pc] : prod.terms()) v[index.at(pe)] = pc;
            gens.push_back(std::move(v));
          }
        }
        const auto kernel = kernel_basis(M);
        if (!lattice_equal(IntMatrix::from_columns(kernel, mons.size()),
                           IntMatrix::from_columns(gens, mons.size()))) {
          return "kernel (rank " + std::to_string(kernel.size()) + ") differs from J_n";
        }

        std::vector<IntVector> s_cols;
        for (const auto& b : basis_H(n)) s_cols.push_back(derham_coordinates(s_map(b)));
        if (!lattice_equal(IntMatrix::from_columns(s_cols, dim), IntMatrix::identity(dim))) {
          return "s(H_n) does not span DR_n";
        }
        return {};
      });
}

}  // namespace hodgelab
