#include "hodgelab/gradedpoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace hodgelab {

Integer parse_integer(const std::string& text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() <= digits_from) throw ParseError("empty integer literal");
  for (std::size_t i = digits_from; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("not an integer: '" + std::string(s) + "'");
    }
  }
  std::string body(s.substr(s[0] == '+' ? 1 : 0));
  return Integer(body, 10);
}

// ---------------------------------------------------------------- Ring

Ring::Ring(std::vector<VariableSpec> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw Error("variable name must not be empty");
    if (!seen.insert(v.name).second) {
      throw Error("duplicate variable name '" + v.name + "'");
    }
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw Error("unknown variable '" + std::string(name) + "'");
  return *idx;
}

RingPtr make_ring(std::vector<VariableSpec> vars) {
  return std::make_shared<const Ring>(std::move(vars));
}

namespace rings {
const RingPtr& hodge() {
  static const RingPtr r = make_ring({{"x", 0}, {"y", 0}, {"z", 1}});
  return r;
}
const RingPtr& derham() {
  static const RingPtr r = make_ring({{"t", 0}, {"z", 1}});
  return r;
}
const RingPtr& presentation() {
  static const RingPtr r =
      make_ring({{"A", 1}, {"B", 1}, {"C", 2}, {"D", 2}});
  return r;
}
const RingPtr& presentation_base() {
  static const RingPtr r = make_ring({{"A", 1}, {"B", 1}, {"C", 2}});
  return r;
}
const RingPtr& hdr_presentation() {
  static const RingPtr r = make_ring(
      {{"A", 1}, {"B", 1}, {"C", 2}, {"D", 2}, {"S", 2}, {"T", 3}});
  return r;
}
}  // namespace rings

// ---------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error("polynomial needs a ring");
}

Polynomial::Polynomial(RingPtr ring, TermMap terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw Error("polynomial needs a ring");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != ring_->size()) {
      throw Error("exponent vector length does not match ring");
    }
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Integer& c) {
  Exponent zero(ring->size(), 0);
  return monomial(std::move(ring), std::move(zero), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name,
                                unsigned power) {
  Exponent e(ring->size(), 0);
  e[ring->require_index(name)] = power;
  return monomial(std::move(ring), std::move(e), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, Exponent exp, const Integer& c) {
  TermMap t;
  if (c != 0) t.emplace(std::move(exp), c);
  return Polynomial(std::move(ring), std::move(t));
}

Integer Polynomial::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Integer(0) : it->second;
}

long Polynomial::weighted_degree(const Exponent& exp) const {
  long d = 0;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    d += static_cast<long>(exp[i]) * ring_->var(i).weight;
  }
  return d;
}

long Polynomial::degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, weighted_degree(e));
  return d;
}

bool Polynomial::is_homogeneous(long n) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return weighted_degree(t.first) == n;
  });
}

Polynomial Polynomial::graded_piece(long n) const {
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (weighted_degree(e) == n) out.emplace(e, c);
  }
  return Polynomial(ring_, std::move(out));
}

void Polynomial::check_same_ring(const Polynomial& q) const {
  if (ring_ != q.ring_ && !(*ring_ == *q.ring_)) {
    throw ContextMismatch("polynomials live in different rings");
  }
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  check_same_ring(q);
  TermMap out = terms_;
  for (const auto& [e, c] : q.terms_) {
    auto [it, inserted] = out.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  TermMap out = terms_;
  for (auto& [e, c] : out) c = -c;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& q) const { return *this + (-q); }

Polynomial Polynomial::operator*(const Polynomial& q) const {
  check_same_ring(q);
  TermMap out;
  Exponent e(ring_->size());
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : q.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      auto [it, inserted] = out.try_emplace(e, c1 * c2);
      if (!inserted) it->second += c1 * c2;
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Integer& k) const {
  if (k == 0) return Polynomial(ring_);
  TermMap out = terms_;
  for (auto& [e, c] : out) c *= k;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& q) const {
  return *ring_ == *q.ring_ && terms_ == q.terms_;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images,
                                  const RingPtr& target) const {
  if (images.size() != ring_->size()) {
    throw MissingImage("substitution needs one image per variable");
  }
  for (const auto& img : images) {
    if (!(*img.ring() == *target)) {
      throw ContextMismatch("substitution images must share the target ring");
    }
  }
  // powers[i][k] = images[i]^k, filled lazily.
  std::vector<std::vector<Polynomial>> powers(ring_->size());
  auto power_of = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Polynomial result(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term = term * power_of(i, e[i]);
    }
    result = result + term;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& images,
                                  const RingPtr& target) const {
  std::vector<bool> used(ring_->size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
  }
  std::vector<Polynomial> ordered;
  ordered.reserve(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    auto it = images.find(ring_->var(i).name);
    if (it != images.end()) {
      ordered.push_back(it->second);
    } else if (used[i]) {
      throw MissingImage("no image for variable '" + ring_->var(i).name + "'");
    } else {
      ordered.push_back(Polynomial(target));
    }
  }
  return substitute(ordered, target);
}

// ------------------------------------------------------------ rendering

namespace {

bool long_names(const Ring& ring) {
  return std::any_of(ring.vars().begin(), ring.vars().end(),
                     [](const VariableSpec& v) { return v.name.size() > 1; });
}

std::string render_monomial(const Ring& ring, const Exponent& e,
                            const std::vector<std::size_t>& which) {
  const bool sep = long_names(ring);
  std::string out;
  for (std::size_t i : which) {
    if (e[i] == 0) continue;
    if (sep && !out.empty()) out += '*';
    out += ring.var(i).name;
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// Appends "c*mono" with the sign folded into the separator.
void append_term(std::string& out, const Integer& c, const std::string& mono,
                 bool first, bool spaced) {
  const bool negative = c < 0;
  Integer a = abs(c);
  if (first) {
    if (negative) out += '-';
  } else if (spaced) {
    out += negative ? " - " : " + ";
  } else {
    out += negative ? '-' : '+';
  }
  if (mono.empty()) {
    out += a.get_str();
  } else {
    if (a != 1) out += a.get_str();
    out += mono;
  }
}

unsigned total(const Exponent& e, const std::vector<std::size_t>& which) {
  unsigned s = 0;
  for (std::size_t i : which) s += e[i];
  return s;
}

Exponent project(const Exponent& e, const std::vector<std::size_t>& which) {
  Exponent out;
  for (std::size_t i : which) out.push_back(e[i]);
  return out;
}

}  // namespace

// Display order: weight-0 variables are shown by ascending total degree,
// ties by descending lex. Weighted monomials are shown by ascending weighted
// degree, ties by descending lex. When the ring mixes both kinds, terms are
// grouped by their weighted part, e.g. "(1+2xy+x^2y^2)z^2".
std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::size_t> inner, outer;
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    (ring_->var(i).weight == 0 ? inner : outer).push_back(i);
  }
  auto outer_deg = [&](const Exponent& e) {
    long d = 0;
    for (std::size_t i : outer) d += static_cast<long>(e[i]) * ring_->var(i).weight;
    return d;
  };

  // Group terms by the weighted part of their exponent.
  std::map<Exponent, std::vector<std::pair<Exponent, Integer>>> groups;
  for (const auto& [e, c] : terms_) groups[project(e, outer)].emplace_back(e, c);

  std::vector<const decltype(groups)::value_type*> order;
  for (const auto& g : groups) order.push_back(&g);
  std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
    const Exponent& ea = a->second.front().first;
    const Exponent& eb = b->second.front().first;
    long da = outer_deg(ea), db = outer_deg(eb);
    if (da != db) return da < db;
    return a->first > b->first;
  });

  std::string out;
  bool first = true;
  for (auto* g : order) {
    auto items = g->second;
    std::sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
      unsigned ta = total(a.first, inner), tb = total(b.first, inner);
      if (ta != tb) return ta < tb;
      return project(a.first, inner) > project(b.first, inner);
    });
    const std::string outer_mono =
        render_monomial(*ring_, items.front().first, outer);
    if (items.size() == 1 || outer_mono.empty()) {
      // Single term, or weighted part trivial: render terms inline.
      for (std::size_t k = 0; k < items.size(); ++k) {
        const auto& [e, c] = items[k];
        std::string mono = render_monomial(*ring_, e, inner);
        if (!mono.empty() && !outer_mono.empty() && long_names(*ring_)) mono += '*';
        mono += outer_mono;
        append_term(out, c, mono, first && k == 0, inner.empty() || k == 0);
      }
    } else {
      out += first ? "" : " + ";
      out += '(';
      bool inner_first = true;
      for (const auto& [e, c] : items) {
        append_term(out, c, render_monomial(*ring_, e, inner), inner_first, false);
        inner_first = false;
      }
      out += ')';
      if (long_names(*ring_)) out += '*';
      out += outer_mono;
    }
    first = false;
  }
  return out;
}

nlohmann::json Polynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    arr.push_back({{"exp", e}, {"coef", c.get_str()}});
  }
  return arr;
}

Polynomial Polynomial::from_json(RingPtr ring, const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be a term list");
  TermMap terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coef")) {
      throw ParseError("term needs 'exp' and 'coef'");
    }
    Exponent e;
    for (const auto& x : t.at("exp")) {
      if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long>() >= 0)) {
        throw ParseError("exponents must be non-negative integers");
      }
      e.push_back(x.get<unsigned>());
    }
    if (e.size() != ring->size()) throw ParseError("exponent length mismatch");
    const auto& cj = t.at("coef");
    if (!cj.is_string() && !cj.is_number_integer()) throw ParseError("coefficient must be an integer");
    Integer c = parse_integer(cj.is_string() ? cj.get<std::string>() : cj.dump());
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) it->second += c;
  }
  return Polynomial(std::move(ring), std::move(terms));
}

// --------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(RingPtr ring, std::string text) : ring_(std::move(ring)), s_(std::move(text)) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek('+')) {
        ++pos_;
      } else if (peek('-')) {
        ++pos_;
        sign = -1;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
      if (!peek('+') && !peek('-')) break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial::constant(ring_, Integer(s_.substr(start, pos_ - start), 10));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string ident = s_.substr(start, pos_ - start);
      if (ring_->index_of(ident)) return Polynomial::variable(ring_, ident);
      // Juxtaposed single-letter variables, as in "xy" or "AB": take one
      // letter and let the caller pick up the rest, so "xy^2" is x*y^2.
      std::string one(1, c);
      if (!ring_->index_of(one)) fail("unknown variable '" + ident + "'");
      pos_ = start + 1;
      return Polynomial::variable(ring_, one);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  RingPtr ring_;
  std::string s_;
  std::size_t pos_ = 0;
};

std::string normalize_symbols(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN and U+00B7 MIDDLE DOT.
    if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
      out += '-';
      i += 2;
    } else if (text.compare(i, 2, "\xC2\xB7") == 0) {
      out += '*';
      i += 1;
    } else {
      out += text[i];
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) {
  return Parser(std::move(ring), normalize_symbols(text)).run();
}

// ------------------------------------------------------------ monomials

namespace {
void enumerate(const Ring& ring, std::size_t i, long remaining, Exponent& cur,
               std::vector<Exponent>& out) {
  if (i == ring.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const long w = ring.var(i).weight;
  for (long k = 0; k * w <= remaining; ++k) {
    cur[i] = static_cast<unsigned>(k);
    enumerate(ring, i + 1, remaining - k * w, cur, out);
  }
  cur[i] = 0;
}
}  // namespace

std::vector<Exponent> monomials_of_degree(const Ring& ring, long n) {
  for (const auto& v : ring.vars()) {
    if (v.weight == 0) {
      throw Error("monomial enumeration needs positive weights ('" + v.name + "')");
    }
  }
  std::vector<Exponent> out;
  if (n < 0) return out;
  Exponent cur(ring.size(), 0);
  enumerate(ring, 0, n, cur, out);
  return out;
}

}  // namespace hodgelab
