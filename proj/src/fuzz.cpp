#include "hodgelab/fuzz.hpp"

#include <functional>

#include "hodgelab/hdrring.hpp"

namespace hodgelab {

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

FuzzReport collect(std::size_t count, Execution ex,
                   const std::function<std::string(std::size_t)>& trial) {
  std::vector<std::string> outcome(count);
  parallel_for(count, ex, [&](std::size_t k) {
    try {
      outcome[k] = trial(k);
    } catch (const std::exception& e) {
      outcome[k] = std::string("exception: ") + e.what();
    }
  });
  FuzzReport r;
  r.trials = count;
  for (std::size_t k = 0; k < count; ++k) {
    if (outcome[k].empty()) continue;
    ++r.failures;
    if (r.examples.size() < 5) r.examples.push_back("trial " + std::to_string(k) + ": " + outcome[k]);
  }
  return r;
}

}  // namespace

Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, int terms,
                             unsigned max_exp, long bound) {
  Polynomial::TermMap t;
  const int count = static_cast<int>(uniform(rng, 0, terms));
  for (int k = 0; k < count; ++k) {
    Exponent e(ring->size());
    for (auto& x : e) x = static_cast<unsigned>(uniform(rng, 0, max_exp - 1));
    t[e] += uniform(rng, -bound, bound);
  }
  return Polynomial(ring, std::move(t));
}

Polynomial random_presentation(std::mt19937_64& rng, int n, int terms, long bound) {
  const auto& R = rings::presentation();
  const auto mons = monomials_of_degree(*R, n);
  Polynomial p(R);
  if (mons.empty()) return p;
  for (int k = 0; k < terms; ++k) {
    const auto& e = mons[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(mons.size()) - 1))];
    p = p + Polynomial::monomial(R, e, uniform(rng, -bound, bound));
  }
  return p;
}

HodgeDiamond random_diamond(std::mt19937_64& rng, int n, long bound) {
  IntVector c(static_cast<std::size_t>(rank_H(n)));
  for (auto& x : c) x = uniform(rng, -bound, bound);
  return hodge_from_coordinates(n, c);
}

DeRhamVector random_derham(std::mt19937_64& rng, int n, long bound) {
  IntVector c(static_cast<std::size_t>(rank_DR(n)));
  for (auto& x : c) x = uniform(rng, -bound, bound);
  return derham_from_coordinates(n, c);
}

FuzzReport round_trip_batch(int n, std::size_t count, std::uint64_t seed, long bound,
                            Execution ex) {
  return collect(count, ex, [=](std::size_t k) -> std::string {
    auto rng = trial_rng(seed + static_cast<std::uint64_t>(n), k);
    const HodgeDiamond d = random_diamond(rng, n, bound);
    const PresentationElement e = decompose(d);
    if (!(phi_piece(e.to_polynomial(), n) == d)) return "phi(decompose(d)) != d for " + d.to_string();
    const DeRhamVector v = random_derham(rng, n, bound);
    if (!(psi_piece(decompose_DR(v), n) == v)) return "psi(decompose_DR(v)) != v for " + v.to_string();
    return {};
  });
}

namespace {

using Law = std::function<std::string(std::mt19937_64&)>;

std::string poly_ring_laws(std::mt19937_64& rng, const RingPtr& R) {
  const Polynomial p = random_polynomial(rng, R, 4, 3, 9);
  const Polynomial q = random_polynomial(rng, R, 4, 3, 9);
  const Polynomial r = random_polynomial(rng, R, 4, 3, 9);
  if (!(p + q == q + p)) return "p+q != q+p";
  if (!(p * q == q * p)) return "pq != qp";
  if (!((p + q) + r == p + (q + r))) return "addition not associative";
  if (!((p * q) * r == p * (q * r))) return "multiplication not associative";
  if (!(p * (q + r) == p * q + p * r)) return "not distributive";
  if (!(p - p == Polynomial(R))) return "p - p != 0";
  return {};
}

const std::vector<Law>& laws() {
  static const std::vector<Law> table = {
      [](std::mt19937_64& rng) { return poly_ring_laws(rng, rings::hodge()); },
      [](std::mt19937_64& rng) { return poly_ring_laws(rng, rings::presentation()); },
      [](std::mt19937_64& rng) -> std::string {
        // grading: pieces of a product
        const auto& R = rings::presentation();
        const Polynomial p = random_polynomial(rng, R, 4, 3, 9);
        const Polynomial q = random_polynomial(rng, R, 4, 3, 9);
        const Polynomial pq = p * q;
        Polynomial sum(R);
        for (long n = 0; n <= pq.degree(); ++n) {
          Polynomial expect(R);
          for (long a = 0; a <= n; ++a) expect = expect + p.graded_piece(a) * q.graded_piece(n - a);
          if (!(pq.graded_piece(n) == expect)) return "graded piece " + std::to_string(n) + " of pq";
          sum = sum + pq.graded_piece(n);
        }
        if (!(sum == pq)) return "graded pieces do not sum to the polynomial";
        return {};
      },
      [](std::mt19937_64& rng) -> std::string {
        const auto& R = rings::presentation();
        const Polynomial p = random_polynomial(rng, R, 3, 3, 5);
        const Polynomial q = random_polynomial(rng, R, 3, 3, 5);
        if (!(phi(p * q) == phi(p) * phi(q))) return "phi(pq) != phi(p)phi(q)";
        if (!(phi(p + q) == phi(p) + phi(q))) return "phi(p+q) != phi(p)+phi(q)";
        if (!(psi(p * q) == psi(p) * psi(q))) return "psi(pq) != psi(p)psi(q)";
        if (!(psi(p) == s_map(phi(p)))) return "psi != s o phi";
        return {};
      },
      [](std::mt19937_64& rng) -> std::string {
        const auto& R = rings::presentation();
        const auto a = normal_form(random_polynomial(rng, R, 3, 3, 5));
        const auto b = normal_form(random_polynomial(rng, R, 3, 3, 5));
        const auto c = normal_form(random_polynomial(rng, R, 3, 3, 5));
        if (!(nf_mul(a, b) == nf_mul(b, a))) return "nf_mul not commutative";
        if (!(nf_mul(nf_mul(a, b), c) == nf_mul(a, nf_mul(b, c)))) return "nf_mul not associative";
        if (!(nf_mul(a, b) == normal_form(a.to_polynomial() * b.to_polynomial()))) {
          return "nf_mul differs from normal_form of the product";
        }
        if (!(phi(nf_mul(a, b)) == phi(a) * phi(b))) return "phi(nf_mul) != phi * phi";
        return {};
      },
      [](std::mt19937_64& rng) -> std::string {
        const int n1 = static_cast<int>(uniform(rng, 0, 3));
        const int n2 = static_cast<int>(uniform(rng, 0, 3));
        const HodgeDiamond a = random_diamond(rng, n1, 9);
        const HodgeDiamond b = random_diamond(rng, n2, 9);
        const DeRhamVector sa = s_map(a);
        if (!sa.is_member()) return "s(a) is not in DR";
        if (!(s_map(kunneth(a, b)) == sa * s_map(b))) return "s(ab) != s(a)s(b)";
        if (!(s_map(a + a) == sa + sa)) return "s not additive";
        return {};
      },
      [](std::mt19937_64& rng) -> std::string {
        const HodgeDiamond a = random_diamond(rng, static_cast<int>(uniform(rng, 0, 3)), 9);
        const HodgeDiamond b = random_diamond(rng, static_cast<int>(uniform(rng, 0, 3)), 9);
        const HodgeDiamond c = random_diamond(rng, static_cast<int>(uniform(rng, 0, 2)), 9);
        const HodgeDiamond ab = kunneth(a, b);
        if (!ab.is_member()) return "Kunneth product is not Serre dual";
        if (!(ab == kunneth(b, a))) return "Kunneth not commutative";
        if (!(kunneth(ab, c) == kunneth(a, kunneth(b, c)))) return "Kunneth not associative";
        if (!(ab.to_polynomial() == a.to_polynomial() * b.to_polynomial())) {
          return "Kunneth differs from the polynomial product";
        }
        return {};
      },
      [](std::mt19937_64& rng) -> std::string {
        const int n1 = static_cast<int>(uniform(rng, 0, 3));
        const int n2 = static_cast<int>(uniform(rng, 0, 3));
        const auto b1 = basis_HDR(n1);
        const auto b2 = basis_HDR(n2);
        HdrElement x(n1), y(n2);
        for (const auto& e : b1) x = x + e * Integer(uniform(rng, -9, 9));
        for (const auto& e : b2) y = y + e * Integer(uniform(rng, -9, 9));
        if (!is_member_hdr(x * y)) return "HDR product is not a member";
        if (!(x * y == y * x)) return "HDR product not commutative";
        return {};
      },
  };
  return table;
}

}  // namespace

FuzzReport algebraic_laws(std::size_t count, std::uint64_t seed, Execution ex) {
  return collect(count, ex, [seed](std::size_t k) -> std::string {
    auto rng = trial_rng(seed, k);
    const auto& table = laws();
    const std::string r = table[k % table.size()](rng);
    return r.empty() ? r : "law " + std::to_string(k % table.size()) + ": " + r;
  });
}

}  // namespace hodgelab
