#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hodgelab/common.hpp"

namespace hodgelab {

struct VariableSpec {
  std::string name;
  unsigned weight = 1;

  bool operator==(const VariableSpec&) const = default;
};

/// Ordered list of variables with their degree weights. Immutable.
class Ring {
 public:
  explicit Ring(std::vector<VariableSpec> vars);

  std::size_t size() const { return vars_.size(); }
  const VariableSpec& var(std::size_t i) const { return vars_.at(i); }
  const std::vector<VariableSpec>& vars() const { return vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  bool operator==(const Ring& other) const { return vars_ == other.vars_; }

 private:
  std::vector<VariableSpec> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<VariableSpec> vars);

namespace rings {
/// Z[x,y,z]: x, y of weight 0, z of weight 1.
const RingPtr& hodge();
/// Z[t,z]: t of weight 0, z of weight 1.
const RingPtr& derham();
/// Z[A,B,C,D]: A, B of weight 1, C, D of weight 2.
const RingPtr& presentation();
/// Z[A,B,C], the D-free coefficient ring of the presentation.
const RingPtr& presentation_base();
/// Z[A,B,C,D,S,T] with S of weight 2 and T of weight 3.
const RingPtr& hdr_presentation();
}  // namespace rings

using Exponent = std::vector<unsigned>;

/// Sparse polynomial over Z in a weighted ring.
///
/// Terms are kept in a map keyed by exponent vector, so iteration is
/// lexicographic in the declared variable order. No zero coefficient is ever
/// stored. Values are immutable once built; all operations return new values.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Integer>;

  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, TermMap terms);

  static Polynomial constant(RingPtr ring, const Integer& c);
  static Polynomial variable(RingPtr ring, std::string_view name,
                             unsigned power = 1);
  static Polynomial monomial(RingPtr ring, Exponent exp, const Integer& c = 1);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Integer coefficient(const Exponent& exp) const;

  /// Weighted degree of an exponent vector in this ring.
  long weighted_degree(const Exponent& exp) const;
  /// Largest weighted degree of any term; -1 for zero.
  long degree() const;
  bool is_homogeneous(long n) const;

  /// Sum of the terms whose weighted degree is exactly n.
  Polynomial graded_piece(long n) const;

  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial operator*(const Integer& k) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& q) const;

  /// Ring homomorphism evaluation. images[i] is the image of variable i;
  /// every image must live in target.
  Polynomial substitute(std::span<const Polynomial> images,
                        const RingPtr& target) const;
  /// Same, keyed by variable name. Throws MissingImage when a variable that
  /// occurs in this polynomial has no entry.
  Polynomial substitute(const std::map<std::string, Polynomial>& images,
                        const RingPtr& target) const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static Polynomial from_json(RingPtr ring, const nlohmann::json& j);
  /// Parses text such as "A^2 - C", "(1+2xy+x^2y^2)z^2" or "3*A*B".
  static Polynomial parse(RingPtr ring, std::string_view text);

 private:
  void check_same_ring(const Polynomial& q) const;

  RingPtr ring_;
  TermMap terms_;
};

inline Polynomial operator*(const Integer& k, const Polynomial& p) {
  return p * k;
}

/// All exponent vectors of weighted degree n, lexicographically ascending.
std::vector<Exponent> monomials_of_degree(const Ring& ring, long n);

}  // namespace hodgelab
