#include <doctest.h>

#include <random>

#include "hodgelab/hodgering.hpp"
#include "hodgelab/intlattice.hpp"
#include "oracles.hpp"

using namespace hodgelab;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix M(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) M(i, j) = d(rng);
  return M;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  IntMatrix U = IntMatrix::identity(n);
  for (int step = 0; step < 12; ++step) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    const long k = d(rng);
    for (std::size_t r = 0; r < n; ++r) U(r, a) += k * U(r, b);
  }
  return U;
}

// Column-style HNF shape: lower echelon with positive pivots, reduced rows.
bool is_hnf(const IntMatrix& H, std::size_t* rank_out = nullptr) {
  std::size_t k = 0;
  long last_pivot = -1;
  for (; k < H.cols(); ++k) {
    std::size_t p = 0;
    while (p < H.rows() && H(p, k) == 0) ++p;
    if (p == H.rows()) break;
    if (static_cast<long>(p) <= last_pivot || H(p, k) <= 0) return false;
    for (std::size_t j = 0; j < k; ++j)
      if (H(p, j) < 0 || H(p, j) >= H(p, k)) return false;
    last_pivot = static_cast<long>(p);
  }
  for (std::size_t j = k; j < H.cols(); ++j)
    for (std::size_t r = 0; r < H.rows(); ++r)
      if (H(r, j) != 0) return false;
  if (rank_out) *rank_out = k;
  return true;
}

}  // namespace

TEST_CASE("hnf examples") {
  CHECK(hnf(IntMatrix::identity(3)) == IntMatrix::identity(3));
  CHECK(hnf(IntMatrix(2, 3)) == IntMatrix(2, 3));
  // Columns (2,0) and (1,1) span a lattice of index 2; the lower-left entry
  // is reduced modulo the second pivot.
  CHECK(hnf(IntMatrix{{2, 1}, {0, 1}}) == IntMatrix{{1, 0}, {1, 2}});
  CHECK(hnf(IntMatrix{{4, 6}}) == IntMatrix{{2, 0}});
  CHECK(hnf(IntMatrix{{0, 0}, {3, -6}}) == IntMatrix{{0, 0}, {3, 0}});
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
    const IntMatrix M = random_matrix(rng, r, c, 6);
    const HnfResult h = hnf_with_transform(M);
    std::size_t rk = 0;
    REQUIRE(is_hnf(h.H, &rk));
    CHECK(rk == oracle::q_rank(M));
    CHECK(h.rank == rk);
    CHECK(M * h.V == h.H);
    CHECK(abs(oracle::det(h.V)) == 1);
    CHECK(hnf(h.H) == h.H);
    const IntMatrix U = random_unimodular(rng, c);
    CHECK(hnf(M * U) == h.H);
    if (r == c && rk == r) {
      CHECK(oracle::full_lattices_equal(M, h.H.hcat(IntMatrix(r, 0))));
    }
  }
}

TEST_CASE("snf examples") {
  CHECK(snf(IntMatrix{{2, 0}, {0, 3}}).invariant_factors == IntVector{1, 6});
  CHECK(snf(IntMatrix::identity(4)).invariant_factors == IntVector(4, Integer(1)));
  CHECK(snf(IntMatrix{{0}}).invariant_factors == IntVector{0});
}

TEST_CASE("snf agrees with determinantal divisors") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t r = 1 + trial % 3, c = 1 + (trial / 3) % 4;
    const IntMatrix M = random_matrix(rng, r, c, 7);
    const SnfResult s = snf(M);
    CHECK(s.U * M * s.V == s.S);
    CHECK(abs(oracle::det(s.U)) == 1);
    CHECK(abs(oracle::det(s.V)) == 1);
    CHECK(s.invariant_factors == oracle::invariant_factors(M));
    for (std::size_t k = 0; k + 1 < s.invariant_factors.size(); ++k) {
      const Integer& a = s.invariant_factors[k];
      const Integer& b = s.invariant_factors[k + 1];
      if (a == 0) {
        CHECK(b == 0);
      } else {
        CHECK(b % a == 0);
      }
    }
  }
}

TEST_CASE("solve_exact") {
  CHECK(solve_exact(IntMatrix::identity(3), {4, -5, 6}) == IntVector{4, -5, 6});
  CHECK_THROWS_AS(solve_exact(IntMatrix{{2}}, {3}), NoIntegerSolution);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix M = random_matrix(rng, 3, 2 + trial % 3, 5);
    std::uniform_int_distribution<long> d(-4, 4);
    IntVector x{d(rng), d(rng)};
    x.resize(M.cols(), 0);
    const IntVector b = M * x;
    const IntVector y = solve_exact(M, b);
    CHECK(M * y == b);
  }
}

TEST_CASE("solve_exact on the degree-2 Hodge basis change") {
  // columns: phi-images of A^2, AB, B^2, C, D in Serre coordinates
  const auto mons = normal_monomials(2);
  std::vector<IntVector> cols;
  for (const auto& e : mons) {
    cols.push_back(hodge_coordinates(phi_piece(Polynomial::monomial(rings::presentation(), e), 2)));
  }
  const IntMatrix M = IntMatrix::from_columns(cols, 5);
  const auto x = solve_exact(M, hodge_coordinates(HodgeDiamond::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  Polynomial p(rings::presentation());
  for (std::size_t k = 0; k < mons.size(); ++k) p = p + Polynomial::monomial(rings::presentation(), mons[k], x[k]);
  CHECK(p.to_string() == "A^2 - C");
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(IntMatrix{{1, 1}}) == std::vector<IntVector>{{1, -1}});
  CHECK(kernel_basis(IntMatrix::identity(3)).empty());
  CHECK(kernel_basis(IntMatrix{{2, 4}}) == std::vector<IntVector>{{2, -1}});

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t r = 1 + trial % 3, c = 2 + (trial / 3) % 3;
    const IntMatrix M = random_matrix(rng, r, c, 5);
    const auto K = kernel_basis(M);
    CHECK(K.size() == c - oracle::q_rank(M));
    for (const auto& v : K) CHECK(M * v == IntVector(r, Integer(0)));
    if (K.empty()) continue;
    const IntMatrix KM = IntMatrix::from_columns(K, c);
    // saturated: gcd of maximal minors is 1
    CHECK(oracle::determinantal_divisor(KM, K.size()) == 1);
    // every small kernel vector lies in the Q-span
    for (const auto& v : oracle::all_mod(c, 5)) {
      IntVector w = v;
      for (auto& x : w) x -= 2;
      if (M * w == IntVector(r, Integer(0))) CHECK(oracle::in_span_q(KM, w));
    }
  }
}

TEST_CASE("lattice_equal") {
  std::mt19937_64 rng(15);
  const IntMatrix M = random_matrix(rng, 3, 4, 5);
  CHECK(lattice_equal(M, M * random_unimodular(rng, 4)));
  CHECK_FALSE(lattice_equal(IntMatrix::identity(3),
                            IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
  CHECK(lattice_equal(IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{2, 1}, {1, 1}}));
  CHECK(lattice_equal(IntMatrix(2, 0), IntMatrix(2, 3)));
}

TEST_CASE("kernel_mod examples") {
  for (long m : {2, 3, 6}) {
    CHECK(kernel_mod(IntMatrix::identity(3), Integer(m)).empty());
    CHECK(kernel_mod(IntMatrix{{m}}, Integer(m)) == std::vector<IntVector>{{1}});
  }
}

TEST_CASE("kernel_mod equals the brute-force solution set") {
  std::mt19937_64 rng(16);
  for (long m : {2, 3, 4, 6}) {
    for (int trial = 0; trial < 12; ++trial) {
      const std::size_t r = 1 + trial % 2, c = 2 + trial % 2;
      const IntMatrix M = random_matrix(rng, r, c, 6);
      const auto gens = kernel_mod(M, Integer(m));
      for (const auto& g : gens)
        for (const auto& x : g) CHECK((x >= 0 && x < m));
      const auto generated = oracle::closure_mod(gens, c, m);
      std::size_t solutions = 0;
      for (const auto& x : oracle::all_mod(c, m)) {
        const bool solves = oracle::reduce(M * x, m) == IntVector(r, Integer(0));
        std::vector<long> key;
        for (const auto& v : x) key.push_back(v.get_si());
        CHECK(solves == (generated.count(key) == 1));
        solutions += solves;
      }
      CHECK(solutions == generated.size());
    }
  }
}

TEST_CASE("lattice_equal_mod and in_lattice") {
  const IntMatrix A{{1}, {1}};
  const IntMatrix B{{1}, {-1}};
  CHECK(lattice_equal_mod(A, B, 2));
  CHECK_FALSE(lattice_equal_mod(A, B, 3));
  CHECK(in_lattice(IntMatrix{{2, 0}, {0, 3}}, {4, 9}));
  CHECK_FALSE(in_lattice(IntMatrix{{2, 0}, {0, 3}}, {1, 3}));
  CHECK(in_lattice(IntMatrix{{2, 0}, {0, 3}}, {1, 3}, 5));
}

TEST_CASE("unimodular inverse and saturation") {
  std::mt19937_64 rng(17);
  const IntMatrix U = random_unimodular(rng, 4);
  CHECK(is_unimodular(U));
  CHECK(U * unimodular_inverse(U) == IntMatrix::identity(4));
  CHECK_FALSE(is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), NoIntegerSolution);
  const auto sat = saturation(IntMatrix{{2}, {4}});
  CHECK(sat == std::vector<IntVector>{{1, 2}});
}

TEST_CASE("floor helpers") {
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(mod_floor(-7, 3) == 2);
  CHECK(dot({1, 2, 3}, {4, 5, 6}) == 32);
}
