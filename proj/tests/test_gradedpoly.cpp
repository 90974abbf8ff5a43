#include <doctest.h>

#include <random>

#include "hodgelab/fuzz.hpp"
#include "hodgelab/gradedpoly.hpp"

using namespace hodgelab;

namespace {

Polynomial H(const char* s) { return Polynomial::parse(rings::hodge(), s); }
Polynomial P(const char* s) { return Polynomial::parse(rings::presentation(), s); }

}  // namespace

TEST_CASE("add") {
  CHECK(H("(1+xy)z") + H("(x+y)z") == H("(1+x+y+xy)z"));
  CHECK(H("(1+xy)z") + Polynomial(rings::hodge()) == H("(1+xy)z"));
  CHECK((H("xz") + H("-xz")).is_zero());
  CHECK_THROWS_AS(H("z") + P("A"), ContextMismatch);
}

TEST_CASE("mul") {
  CHECK(H("(1+xy)z") * H("(1+xy)z") == H("(1+2xy+x^2y^2)z^2"));
  CHECK(H("(1+x+y+xy)z").pow(2) == H("(1+2x+2y+x^2+4xy+y^2+2x^2y+2xy^2+x^2y^2)z^2"));
  CHECK(H("(1+xy)z") * Polynomial::constant(rings::hodge(), 1) == H("(1+xy)z"));
  CHECK((H("(1+xy)z") * H("(1+xy)z")).weighted_degree({0, 0, 2}) == 2);
}

TEST_CASE("graded_piece") {
  CHECK(H("(1+xy)z + (x+y)z^2").graded_piece(1) == H("(1+xy)z"));
  CHECK(Polynomial(rings::hodge()).graded_piece(5).is_zero());
  CHECK(H("(1+xy)z").graded_piece(2).is_zero());
  CHECK(P("A^2 - C + D*A").is_homogeneous(2) == false);
  CHECK(P("A^2 - C").is_homogeneous(2));
  CHECK(P("A*D + B^3").degree() == 3);
}

TEST_CASE("substitute") {
  const auto& R = rings::hodge();
  const std::map<std::string, Polynomial> img{{"A", H("(1+xy)z")},
                                              {"B", H("(x+y)z")},
                                              {"C", H("xyz^2")},
                                              {"D", H("(x+xy^2)z^2")}};
  CHECK(P("A^2").substitute(img, R) == H("(1+2xy+x^2y^2)z^2"));
  const std::map<std::string, Polynomial> dr{{"B", Polynomial::parse(rings::derham(), "2tz")},
                                             {"C", Polynomial::parse(rings::derham(), "t^2z^2")}};
  CHECK(P("B^2 - 4C").substitute(dr, rings::derham()).is_zero());
  CHECK(P("7").substitute(img, R) == Polynomial::constant(R, 7));
  CHECK_THROWS_AS(P("A*D").substitute(dr, rings::derham()), MissingImage);
}

TEST_CASE("rendering") {
  CHECK(H("(1+2xy+x^2y^2)z^2").to_string() == "(1+2xy+x^2y^2)z^2");
  CHECK(H("xyz^2").to_string() == "xyz^2");
  CHECK(H("(x+xy^2)z^2").to_string() == "(x+xy^2)z^2");
  CHECK(H("1").to_string() == "1");
  CHECK(Polynomial(rings::hodge()).to_string() == "0");
  CHECK(P("A^2 - C").to_string() == "A^2 - C");
  CHECK(P("-C + A^2").to_string() == "A^2 - C");
  CHECK(P("D*D - A*B*D").to_string() == "-ABD + D^2");
  CHECK(Polynomial::parse(rings::derham(), "(t+2t^2+t^3)z^2").to_string() == "(t+2t^2+t^3)z^2");
}

TEST_CASE("parse") {
  CHECK(H("xy^2") == H("x*y^2"));
  CHECK(H("(xy)^2") == H("x^2*y^2"));
  CHECK(P("3AB") == P("3*A*B"));
  CHECK(P("2(A+B)") == P("2A + 2B"));
  CHECK(P("A \xE2\x88\x92 C") == P("A - C"));
  CHECK(P("A\xC2\xB7" "B") == P("A*B"));
  CHECK(P("-(A - B)") == P("B - A"));
  CHECK_THROWS_AS(P("A +"), ParseError);
  CHECK_THROWS_AS(P("A + Q"), ParseError);
  CHECK_THROWS_AS(P("(A"), ParseError);
  CHECK_THROWS_AS(P("A^"), ParseError);
}

TEST_CASE("render and parse round trip on random polynomials") {
  for (const auto& R : {rings::hodge(), rings::derham(), rings::presentation(), rings::hdr_presentation()}) {
    for (std::size_t k = 0; k < 200; ++k) {
      auto rng = trial_rng(21, k);
      const Polynomial p = random_polynomial(rng, R, 6, 4, 30);
      CHECK(Polynomial::parse(R, p.to_string()) == p);
    }
  }
}

TEST_CASE("json round trip") {
  for (std::size_t k = 0; k < 100; ++k) {
    auto rng = trial_rng(22, k);
    const Polynomial p = random_polynomial(rng, rings::hodge(), 6, 4, 1000000);
    CHECK(Polynomial::from_json(rings::hodge(), p.to_json()) == p);
  }
  const auto j = H("(1+xy)z").to_json();
  CHECK(j.dump() == R"([{"coef":"1","exp":[0,0,1]},{"coef":"1","exp":[1,1,1]}])");
  CHECK_THROWS_AS(Polynomial::from_json(rings::hodge(), nlohmann::json::parse(R"([{"exp":[1]}])")),
                  ParseError);
  CHECK_THROWS_AS(Polynomial::from_json(rings::hodge(),
                                        nlohmann::json::parse(R"([{"exp":[0,0,1],"coef":1.5}])")),
                  ParseError);
}

TEST_CASE("big coefficients do not overflow") {
  const Polynomial p = P("1000000000000*A");
  CHECK((p * p * p).to_string() == "1000000000000000000000000000000000000A^3");
}

TEST_CASE("monomials_of_degree matches brute-force enumeration") {
  const auto& R = *rings::presentation();
  for (int n = 0; n <= 8; ++n) {
    std::vector<Exponent> brute;
    for (unsigned a = 0; a <= 8; ++a)
      for (unsigned b = 0; b <= 8; ++b)
        for (unsigned c = 0; c <= 4; ++c)
          for (unsigned d = 0; d <= 4; ++d)
            if (static_cast<int>(a + b + 2 * c + 2 * d) == n) brute.push_back({a, b, c, d});
    std::sort(brute.begin(), brute.end());
    CHECK(monomials_of_degree(R, n) == brute);
  }
  CHECK(monomials_of_degree(R, -1).empty());
  CHECK_THROWS(monomials_of_degree(*rings::hodge(), 1));
}

TEST_CASE("ring laws on random polynomials") {
  for (std::size_t k = 0; k < 300; ++k) {
    auto rng = trial_rng(23, k);
    const auto& R = rings::hodge();
    const Polynomial p = random_polynomial(rng, R, 4, 3, 9);
    const Polynomial q = random_polynomial(rng, R, 4, 3, 9);
    const Polynomial r = random_polynomial(rng, R, 4, 3, 9);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p + q == q + p);
    Polynomial sum(R);
    for (long n = 0; n <= p.degree(); ++n) sum = sum + p.graded_piece(n);
    CHECK(sum == p);
  }
}
