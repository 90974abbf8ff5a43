#include <doctest.h>

#include "hodgelab/fuzz.hpp"
#include "hodgelab/hodgering.hpp"
#include "oracles.hpp"

using namespace hodgelab;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(rings::presentation(), s); }
Polynomial B(const char* s) { return Polynomial::parse(rings::presentation_base(), s); }
HodgeDiamond Hd(const char* s, int n) {
  return HodgeDiamond::from_polynomial(Polynomial::parse(rings::hodge(), s), n);
}

// Reduces one term at a time: the first term (in map order) with D-exponent
// e >= 2 is rewritten as c m D^(e-2) (ABD - Q). A different order from
// normal_form, which works on whole D-power pairs.
Polynomial divide_by_G(Polynomial p) {
  const Polynomial repl = P("A*B*D - C*(A^2 + B^2 - 4*C)");
  for (;;) {
    bool changed = false;
    for (const auto& [e, c] : p.terms()) {
      if (e[3] < 2) continue;
      Exponent rest = e;
      rest[3] -= 2;
      const Polynomial term = Polynomial::monomial(rings::presentation(), e, c);
      p = p - term + Polynomial::monomial(rings::presentation(), rest, c) * repl;
      changed = true;
      break;
    }
    if (!changed) return p;
  }
}

IntMatrix serre_matrix(int n, const std::optional<long>& m = std::nullopt) {
  std::vector<IntVector> cols;
  for (const auto& f : serre_relations(n)) {
    IntVector v = f.lambda;
    if (m)
      for (auto& x : v) x = mod_floor(x, *m);
    cols.push_back(v);
  }
  return IntMatrix::from_columns(cols, static_cast<std::size_t>((n + 1) * (n + 1)));
}

IntMatrix functional_matrix(const std::vector<LinearFunctional>& fs, int n) {
  std::vector<IntVector> cols;
  for (const auto& f : fs) cols.push_back(f.lambda);
  return IntMatrix::from_columns(cols, static_cast<std::size_t>((n + 1) * (n + 1)));
}

}  // namespace

TEST_CASE("rank_H") {
  const std::vector<long> expected{1, 2, 5, 8, 13, 18, 25, 32, 41, 50, 61, 72, 85};
  for (int n = 0; n <= 12; ++n) CHECK(rank_H(n) == expected[static_cast<std::size_t>(n)]);
  for (int n = 0; n <= 8; ++n) CHECK(normal_monomials(n).size() == static_cast<std::size_t>(rank_H(n)));
}

TEST_CASE("basis_H") {
  const auto b1 = basis_H(1);
  REQUIRE(b1.size() == 2);
  CHECK(b1[0].to_string() == "(1+xy)z");
  CHECK(b1[1].to_string() == "(x+y)z");
  CHECK(basis_H(0).size() == 1);
  CHECK(basis_H(0)[0].to_string() == "1");
  const auto b2 = basis_H(2);
  CHECK(b2.size() == 5);
  CHECK(std::count(b2.begin(), b2.end(), Hd("xyz^2", 2)) == 1);
  for (int n = 0; n <= 6; ++n) {
    std::vector<IntVector> cols;
    for (const auto& d : basis_H(n)) {
      CHECK(d.is_member());
      cols.push_back(d.entries());
    }
    const IntMatrix M = IntMatrix::from_columns(cols, static_cast<std::size_t>((n + 1) * (n + 1)));
    CHECK(oracle::q_rank(M) == static_cast<std::size_t>(rank_H(n)));
    // the representative rows form an identity block, so the basis is unimodular
    const auto reps = serre_representatives(n);
    for (std::size_t r = 0; r < reps.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c)
        CHECK(M(static_cast<std::size_t>(reps[r].first * (n + 1) + reps[r].second), c) == (r == c ? 1 : 0));
  }
}

TEST_CASE("is_member") {
  CHECK(Hd("(1+xy)z", 1).is_member());
  CHECK_FALSE(HodgeDiamond::from_rows({{1, 0}, {0, 0}}).is_member());
  CHECK(HodgeDiamond(3).is_member());
  CHECK(HodgeDiamond::from_rows({{1, -2}, {-2, 1}}).is_member());
}

TEST_CASE("kunneth") {
  const HodgeDiamond p1 = Hd("(1+xy)z", 1);
  CHECK(kunneth(p1, p1).to_string() == "(1+2xy+x^2y^2)z^2");
  const HodgeDiamond e = Hd("(1+x+y+xy)z", 1);
  CHECK(kunneth(e, e) == HodgeDiamond::from_rows({{1, 2, 1}, {2, 4, 2}, {1, 2, 1}}));
  CHECK(kunneth(e, HodgeDiamond::from_rows({{1}})) == e);
  CHECK_THROWS_AS(kunneth(HodgeDiamond::from_rows({{1, 0}, {0, 0}}), e), NotSerreDual);
}

TEST_CASE("phi") {
  CHECK(phi_piece(P("A"), 1) == Hd("(1+xy)z", 1));
  CHECK(phi(P("A^2 - C")).to_string() == "(1+xy+x^2y^2)z^2");
  CHECK(phi(relation_G()).is_zero());
  CHECK(phi(P("D")).to_string() == "(x+xy^2)z^2");
  CHECK_THROWS_AS(phi(Polynomial::parse(rings::hodge(), "x")), ContextMismatch);
}

TEST_CASE("normal_form") {
  const PresentationElement d2 = normal_form(P("D^2"));
  CHECK(d2.p0 == B("-A^2*C - B^2*C + 4*C^2"));
  CHECK(d2.p1 == B("A*B"));
  CHECK(normal_form(P("A^3")) == PresentationElement(B("A^3"), Polynomial(rings::presentation_base())));
  CHECK(normal_form(P("D^3")) == normal_form(P("D") * normal_form(P("D^2")).to_polynomial()));
  for (std::size_t k = 0; k < 150; ++k) {
    auto rng = trial_rng(31, k);
    const Polynomial p = random_polynomial(rng, rings::presentation(), 4, 5, 9);
    const PresentationElement e = normal_form(p);
    CHECK(e.to_polynomial() == divide_by_G(p));
    CHECK(phi(e) == phi(p));
  }
}

TEST_CASE("nf_mul") {
  const PresentationElement D(Polynomial(rings::presentation_base()),
                              Polynomial::constant(rings::presentation_base(), 1));
  const PresentationElement d2 = nf_mul(D, D);
  CHECK(d2 == normal_form(P("D^2")));
  const Polynomial zero(rings::presentation_base());
  CHECK(nf_mul({B("A"), zero}, {B("B"), zero}) == PresentationElement(B("A*B"), zero));
  for (std::size_t k = 0; k < 150; ++k) {
    auto rng = trial_rng(32, k);
    const auto a = normal_form(random_polynomial(rng, rings::presentation(), 3, 3, 9));
    const auto b = normal_form(random_polynomial(rng, rings::presentation(), 3, 3, 9));
    CHECK(phi(nf_mul(a, b)) == phi(a) * phi(b));
    CHECK(nf_mul(a, b) == normal_form(a.to_polynomial() * b.to_polynomial()));
  }
}

TEST_CASE("decompose") {
  CHECK(decompose(HodgeDiamond::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).to_string() == "A^2 - C");
  const PresentationElement d = decompose(Hd("(x+xy^2)z^2", 2));
  CHECK(d.p0.is_zero());
  CHECK(d.p1 == Polynomial::constant(rings::presentation_base(), 1));
  CHECK(decompose(Hd("(1+x+y+xy)z", 1)).to_string() == "A + B");
  CHECK(decompose(HodgeDiamond(0)).to_polynomial().is_zero());
  CHECK_THROWS_AS(decompose(HodgeDiamond::from_rows({{1, 0}, {0, 0}})), NotSerreDual);
  for (int n = 0; n <= 8; ++n) {
    for (const auto& b : basis_H(n)) CHECK(phi_piece(decompose(b).to_polynomial(), n) == b);
    for (std::size_t k = 0; k < 25; ++k) {
      auto rng = trial_rng(33, k);
      const HodgeDiamond x = random_diamond(rng, n, 9);
      const PresentationElement e = decompose(x);
      CHECK(phi_piece(e.to_polynomial(), n) == x);
      const PresentationElement e3 = decompose(x * Integer(-3));
      CHECK(e3.p0 == e.p0 * Integer(-3));
      CHECK(e3.p1 == e.p1 * Integer(-3));
    }
  }
}

TEST_CASE("relations") {
  CHECK(relations(0).empty());
  CHECK(lattice_equal(functional_matrix(relations(1), 1), IntMatrix{{1, 0}, {0, 1}, {0, -1}, {-1, 0}}));
  for (int n = 0; n <= 6; ++n) {
    const auto rel = relations(n);
    CHECK(static_cast<long>(rel.size()) == (n + 1) * (n + 1) - rank_H(n));
    CHECK(lattice_equal(functional_matrix(rel, n), serre_matrix(n)));
    for (const auto& f : rel)
      for (const auto& b : basis_H(n)) CHECK(f.evaluate(b) == 0);
  }
  CHECK(serre_relations(2).size() == 4);
}

TEST_CASE("congruences") {
  CHECK(lattice_equal_mod(functional_matrix(congruences(2, 5), 2), serre_matrix(2, 5), 5));
  const auto c12 = congruences(1, 2);
  CHECK(lattice_equal_mod(functional_matrix(c12, 1), IntMatrix{{1, 0}, {0, 1}, {0, 1}, {1, 0}}, 2));
  CHECK(lattice_equal_mod(functional_matrix(congruences(3, 4), 3), serre_matrix(3, 4), 4));
  for (const auto& f : congruences(3, 4)) {
    REQUIRE(f.modulus);
    CHECK(*f.modulus == 4);
  }
}

TEST_CASE("birational ideal") {
  const auto b2 = birational_ideal_basis(2);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].to_string() == "xyz^2");
  const auto b3 = birational_ideal_basis(3);
  REQUIRE(b3.size() == 2);
  CHECK(b3[0].to_string() == "(xy+x^2y^2)z^3");
  CHECK(b3[1].to_string() == "(x^2y+xy^2)z^3");
  CHECK(birational_ideal_basis(1).empty());
  for (int n = 2; n <= 7; ++n) CHECK(static_cast<long>(birational_ideal_basis(n).size()) == rank_H(n) - 2 * n);
}

TEST_CASE("is_birational_invariant") {
  const auto v11 = is_birational_invariant(LinearFunctional::unit(2, 1, 1));
  CHECK_FALSE(v11.invariant);
  REQUIRE(v11.witness);
  CHECK(v11.witness->to_string() == "xyz^2");
  CHECK(v11.witness_value == 1);
  CHECK(v11.witness_label == "Bl_pt(P^2) - P^2");

  const auto v01 = is_birational_invariant(LinearFunctional::unit(2, 0, 1));
  CHECK(v01.invariant);
  CHECK(is_birational_invariant(LinearFunctional::unit(2, 0, 2)).invariant);
  // h^{2,1} is Serre dual to h^{0,1}
  const auto v21 = is_birational_invariant(LinearFunctional::unit(2, 2, 1));
  CHECK(v21.invariant);
  bool found = false;
  for (const auto& [name, c] : v21.outer_coefficients)
    if (name == "h^{0,1}") found = (c == 1);
  CHECK(found);

  LinearFunctional f3 = LinearFunctional::unit(3, 1, 1);
  f3.at(2, 2) = 1;
  const auto v3 = is_birational_invariant(f3);
  CHECK_FALSE(v3.invariant);
  CHECK(v3.witness->to_string() == "(xy+x^2y^2)z^3");
  CHECK(v3.witness_value == 2);

  LinearFunctional euler{2, {}, 1, std::nullopt};
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) euler.lambda.push_back((i + j) % 2 == 0 ? 1 : -1);
  const auto ve = is_birational_invariant(euler);
  CHECK_FALSE(ve.invariant);
  CHECK(ve.witness_value == 1);

  // e11 + e22 vanishes mod 2 on the ideal in degree 3
  f3.modulus = Integer(2);
  CHECK(is_birational_invariant(f3).invariant);
}

TEST_CASE("verification checks") {
  CHECK(verify_presentation(6).passed());
  CHECK(verify_presentation(0).passed());
  CHECK(verify_hodge_relations(6).passed());
  CHECK(verify_hodge_congruences(5, {2, 3, 4}).passed());
  CHECK(verify_birational(6).passed());
  CHECK(verify_hodge_basis(6).passed());

  HodgeImages bad = HodgeImages::standard();
  bad.D = Polynomial::parse(rings::hodge(), "(x+x^2y)z^2");
  const CheckRecord r = verify_presentation(4, Execution::Serial, bad);
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure().rfind("degree 2", 0) == 0);
  CHECK_THROWS_AS(r.require(), VerificationFailure);

  HodgeImages weak = HodgeImages::standard();
  weak.C = Polynomial::parse(rings::hodge(), "2xyz^2");
  CHECK_FALSE(verify_presentation(3, Execution::Serial, weak).passed());
}
