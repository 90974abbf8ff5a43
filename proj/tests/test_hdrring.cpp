#include <doctest.h>

#include "hodgelab/fuzz.hpp"
#include "hodgelab/hdrring.hpp"
#include "oracles.hpp"

using namespace hodgelab;

namespace {

DeRhamVector Dr(const char* s, int n) {
  return DeRhamVector::from_polynomial(Polynomial::parse(rings::derham(), s), n);
}
HodgeDiamond Hd(const char* s, int n) {
  return HodgeDiamond::from_polynomial(Polynomial::parse(rings::hodge(), s), n);
}
Polynomial T(const char* s) { return Polynomial::parse(rings::hdr_presentation(), s); }

std::size_t full_size(int n) { return static_cast<std::size_t>((n + 1) * (n + 1) + 2 * n + 1); }

IntMatrix matrix_of(const std::vector<CombinedFunctional>& fs, int n) {
  std::vector<IntVector> cols;
  for (const auto& f : fs) cols.push_back(f.full());
  return IntMatrix::from_columns(cols, full_size(n));
}

HdrElement random_member(std::mt19937_64& rng, int n) {
  HdrElement x(n);
  std::uniform_int_distribution<long> d(-9, 9);
  for (const auto& e : basis_HDR(n)) x = x + e * Integer(d(rng));
  return x;
}

}  // namespace

TEST_CASE("is_member_hdr") {
  CHECK(is_member_hdr(Hd("(1+xy)z", 1), Dr("(1+t^2)z", 1)));
  CHECK(is_member_hdr(HodgeDiamond(2), Dr("(t+2t^2+t^3)z^2", 2)));
  CHECK_FALSE(is_member_hdr(Hd("(1+xy)z", 1), Dr("(2+2t^2)z", 1)));
  CHECK_THROWS_AS(is_member_hdr(HodgeDiamond(1), DeRhamVector(2)), DegreeMismatch);
  CHECK_THROWS_AS(HdrElement(HodgeDiamond(1), DeRhamVector(2)), DegreeMismatch);
}

TEST_CASE("sprime and tprime") {
  CHECK(sprime().b.to_string() == "(t+2t^2+t^3)z^2");
  CHECK(sprime().a.is_zero());
  CHECK(tprime().b.to_string() == "(t^2+2t^3+t^4)z^3");
  CHECK(is_member_hdr(sprime()));
  CHECK(is_member_hdr(tprime()));
}

TEST_CASE("kernel_I") {
  CHECK(kernel_I(0).empty());
  CHECK(kernel_I(1).empty());
  const auto k2 = kernel_I(2);
  REQUIRE(k2.size() == 1);
  CHECK(derham_from_coordinates(2, k2[0]) == kernel_generator_g2());
  const auto k3 = kernel_I(3);
  CHECK(k3.size() == 2);
  CHECK(lattice_equal(IntMatrix::from_columns(k3, 4), IntMatrix::from_columns(kernel_I_generators(3), 4)));
  for (int n = 0; n <= 8; ++n) CHECK(static_cast<long>(kernel_I(n).size()) == std::max(0, n - 1));
  CHECK(verify_kernel_I(6).passed());
}

TEST_CASE("alternatives to tprime") {
  CHECK(verify_tprime_alternatives().passed());
  const IntMatrix I3 = IntMatrix::from_columns(kernel_I(3), 4);
  std::vector<IntVector> base;
  for (const auto& v : basis_DR(1)) base.push_back(derham_coordinates(kernel_generator_g2() * v));
  auto generates = [&](const DeRhamVector& w) {
    auto cols = base;
    cols.push_back(derham_coordinates(w));
    return lattice_equal(IntMatrix::from_columns(cols, 4), I3);
  };
  CHECK(generates(kernel_generator_g3()));
  CHECK_FALSE(generates(Dr("(t+2t^2+2t^3+2t^4+t^5)z^3", 3)));
  CHECK_FALSE(generates(kernel_generator_g3() * Integer(2)));
  CHECK(generates(kernel_generator_g3() * Integer(3) + Dr("(t+2t^2+2t^3+2t^4+t^5)z^3", 3)));
}

TEST_CASE("tau") {
  const HdrElement a = tau(T("A")).piece(1);
  CHECK(a.a == Hd("(1+xy)z", 1));
  CHECK(a.b == Dr("(1+t^2)z", 1));
  CHECK(tau(T("S")).piece(2) == sprime());
  CHECK(tau(T("T")).piece(3) == tprime());
  const HdrFamily ss = tau(T("S^2"));
  CHECK(ss.hodge.is_zero());
  CHECK(ss.piece(4).b == kernel_generator_g2() * kernel_generator_g2());
  for (std::size_t k = 0; k < 50; ++k) {
    auto rng = trial_rng(51, k);
    const Polynomial p = random_polynomial(rng, rings::hdr_presentation(), 3, 2, 5);
    const Polynomial q = random_polynomial(rng, rings::hdr_presentation(), 3, 2, 5);
    const HdrFamily fp = tau(p), fq = tau(q), fpq = tau(p * q);
    CHECK(fpq.hodge == fp.hodge * fq.hodge);
    CHECK(fpq.derham == fp.derham * fq.derham);
  }
}

TEST_CASE("tau surjectivity") {
  CHECK(verify_tau_surjective(5).passed());
  CHECK(verify_tau_surjective(0).passed());
  const CheckRecord without = verify_tau_surjective(4, Execution::Serial, false);
  CHECK_FALSE(without.passed());
  CHECK(without.first_failure().rfind("degree 3", 0) == 0);
}

TEST_CASE("rank_HDR and basis_HDR") {
  CHECK(rank_HDR(0) == 1);
  CHECK(rank_HDR(1) == 2);
  CHECK(rank_HDR(2) == 6);
  const auto b1 = basis_HDR(1);
  REQUIRE(b1.size() == 2);
  CHECK(b1[0] == HdrElement(Hd("(1+xy)z", 1), Dr("(1+t^2)z", 1)));
  CHECK(b1[1] == HdrElement(Hd("(x+y)z", 1), Dr("2tz", 1)));
  for (int n = 1; n <= 6; ++n) {
    // oracle: rank over Q of the two constraints on the r_n + n + 1 coordinates
    const auto bh = basis_H(n);
    const auto bd = basis_DR(n);
    IntMatrix C(2, bh.size() + bd.size());
    for (std::size_t k = 0; k < bh.size(); ++k) {
      C(0, k) = bh[k].at(0, 0);
      C(1, k) = chi_H(bh[k]);
    }
    for (std::size_t k = 0; k < bd.size(); ++k) {
      C(0, bh.size() + k) = -bd[k].at(0);
      C(1, bh.size() + k) = -chi_DR(bd[k]);
    }
    const long expected = static_cast<long>(bh.size() + bd.size() - oracle::q_rank(C));
    CHECK(rank_HDR(n) == expected);
    CHECK(rank_HDR(n) == rank_H(n) + n - 1);
    for (const auto& e : basis_HDR(n)) CHECK(is_member_hdr(e));
  }
}

TEST_CASE("decompose_HDR") {
  CHECK(decompose_HDR(sprime()).to_string() == "S");
  CHECK(decompose_HDR(tprime()).to_string() == "T");
  const HdrElement p2{HodgeDiamond::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), Dr("(1+t^2+t^4)z^2", 2)};
  CHECK(decompose_HDR(p2).to_string() == "A^2 - C");
  CHECK_THROWS_AS(decompose_HDR(HdrElement(Hd("(1+xy)z", 1), Dr("(2+2t^2)z", 1))), NotInHDR);
  for (int n = 0; n <= 5; ++n) {
    for (std::size_t k = 0; k < 20; ++k) {
      auto rng = trial_rng(52, k);
      const HdrElement e = random_member(rng, n);
      CHECK(tau(decompose_HDR(e)).piece(n) == e);
    }
  }
}

TEST_CASE("hdr relations") {
  CHECK(hdr_relations(1).size() == 5);
  for (int n = 0; n <= 5; ++n) {
    const auto rel = hdr_relations(n);
    CHECK(rel.size() == full_size(n) - static_cast<std::size_t>(rank_HDR(n)));
    for (const auto& f : rel)
      for (const auto& b : basis_HDR(n)) CHECK(f.evaluate(b) == 0);
    std::vector<CombinedFunctional> named;
    for (const auto& [name, f] : named_hdr_relations(n)) named.push_back(f);
    CHECK(lattice_equal(matrix_of(named, n), matrix_of(rel, n)));
  }
  CHECK(verify_hdr_relations(5).passed());
}

TEST_CASE("hdr congruences") {
  auto names = [](int n, long m) {
    std::vector<std::string> out;
    for (const auto& [name, f] : named_hdr_relations(n, Integer(m))) out.push_back(name);
    return out;
  };
  const auto n23 = names(2, 3);
  CHECK(std::find(n23.begin(), n23.end(), "parity") == n23.end());
  const auto n12 = names(1, 2);
  CHECK(std::find(n12.begin(), n12.end(), "parity") != n12.end());

  std::vector<CombinedFunctional> exact;
  for (const auto& [name, f] : named_hdr_relations(2)) exact.push_back(f);
  CHECK(lattice_equal_mod(matrix_of(hdr_congruences(2, 3), 2), matrix_of(exact, 2), 3));

  for (int n = 0; n <= 5; ++n) {
    IntVector parity(full_size(n), Integer(0));
    parity[static_cast<std::size_t>((n + 1) * (n + 1) + n)] = 1;
    CHECK(in_lattice(matrix_of(hdr_congruences(n, 2), n), parity, 2) == (n % 2 == 1));
  }
  CHECK(verify_hdr_congruences(5, {2, 3, 4, 6}).passed());
}

TEST_CASE("componentwise product preserves membership") {
  for (std::size_t k = 0; k < 60; ++k) {
    auto rng = trial_rng(53, k);
    const HdrElement x = random_member(rng, static_cast<int>(k % 4));
    const HdrElement y = random_member(rng, static_cast<int>((k / 4) % 3));
    CHECK(is_member_hdr(x * y));
  }
  const HdrElement deg{HodgeDiamond::from_rows({{1, 2}, {2, 1}}), s_map(HodgeDiamond::from_rows({{1, 2}, {2, 1}}))};
  CHECK(is_member_hdr(deg));
}
