#include "hodgelab/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace hodgelab::json_io {

json integer(const Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return v.get_si();
  return v.get_str();
}

Integer read_integer(const json& j) {
  if (j.is_number_integer()) return parse_integer(j.dump());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

json rational(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return integer(q.get_num());
  return q.get_str();
}

Rational read_rational(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      const Integer num = parse_integer(s.substr(0, slash));
      const Integer den = parse_integer(s.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + s + "'");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
  }
  return Rational(read_integer(j));
}

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

int read_dim(const json& j) {
  const json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<long>() < 0 || n.get<long>() > 1000) {
    throw ParseError("'n' must be a small non-negative integer");
  }
  return n.get<int>();
}

void expect_type(const json& j, const std::string& type) {
  const json& t = field(j, "type");
  if (!t.is_string() || t.get<std::string>() != type) {
    throw ParseError("expected type '" + type + "', got " + t.dump());
  }
}

void check_schema(const json& j) {
  if (j.is_object() && j.contains("schema") && j.at("schema") != kSchema) {
    throw ParseError("unsupported schema " + j.at("schema").dump());
  }
}

template <class T, class F>
std::vector<T> read_list(const json& j, std::size_t size, const char* what, F&& read) {
  if (!j.is_array() || j.size() != size) {
    throw ParseError(std::string(what) + " must be an array of length " + std::to_string(size));
  }
  std::vector<T> out;
  for (const auto& x : j) out.push_back(read(x));
  return out;
}

template <class T, class F>
std::vector<T> read_square(const json& j, int n, const char* what, F&& read) {
  const auto size = static_cast<std::size_t>(n + 1);
  if (!j.is_array() || j.size() != size) {
    throw ParseError(std::string(what) + " must have " + std::to_string(size) + " rows");
  }
  std::vector<T> out;
  for (const auto& row : j) {
    auto r = read_list<T>(row, size, what, read);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

json rows_of(const std::vector<Integer>& flat, int n) {
  json rows = json::array();
  for (int i = 0; i <= n; ++i) {
    json row = json::array();
    for (int j = 0; j <= n; ++j) row.push_back(integer(flat[static_cast<std::size_t>(i * (n + 1) + j)]));
    rows.push_back(std::move(row));
  }
  return rows;
}

json list_of(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer(x));
  return out;
}

}  // namespace

json hodge(const HodgeDiamond& d) {
  return {{"type", "hodge"}, {"n", d.dim()}, {"h", rows_of(d.entries(), d.dim())}};
}

json derham(const DeRhamVector& v) {
  return {{"type", "derham"}, {"n", v.dim()}, {"h", list_of(v.entries())}};
}

json hdr(const HdrElement& e) {
  return {{"type", "hdr"}, {"n", e.dim()}, {"hodge", hodge(e.a)}, {"derham", derham(e.b)}};
}

json functional(const LinearFunctional& f) {
  json j = {{"type", "functional"}, {"space", "hodge"}, {"n", f.n}};
  if (f.denominator == 1) {
    j["lambda"] = rows_of(f.lambda, f.n);
  } else {
    json rows = json::array();
    for (int i = 0; i <= f.n; ++i) {
      json row = json::array();
      for (int k = 0; k <= f.n; ++k) row.push_back(rational(Rational(f.at(i, k), f.denominator)));
      rows.push_back(std::move(row));
    }
    j["lambda"] = std::move(rows);
  }
  if (f.modulus) j["modulus"] = integer(*f.modulus);
  return j;
}

json functional(const CombinedFunctional& f) {
  json j = {{"type", "functional"},
            {"space", "hdr"},
            {"n", f.n},
            {"lambda", rows_of(f.lambda, f.n)},
            {"mu", list_of(f.mu)}};
  if (f.modulus) j["modulus"] = integer(*f.modulus);
  return j;
}

json variety(const VarietyClass& v) {
  json j = {{"name", v.name}, {"n", v.dim}};
  j["hodge"] = v.hodge ? hodge(*v.hodge) : json("abstract");
  j["derham"] = v.derham ? derham(*v.derham) : json(nullptr);
  j["derham_source"] = v.derham_source;
  if (v.hodge) {
    j["hodge_polynomial"] = v.hodge->to_string();
    j["derham_polynomial"] = v.derham->to_string();
  }
  json known = json::object();
  for (const auto& k : v.known) known[k.label] = integer(k.value);
  if (!v.known.empty()) j["known"] = std::move(known);
  j["partial"] = !v.concrete();
  j["notes"] = v.notes;
  return j;
}

HodgeDiamond read_hodge(const json& j) {
  check_schema(j);
  expect_type(j, "hodge");
  const int n = read_dim(j);
  return HodgeDiamond(n, read_square<Integer>(field(j, "h"), n, "'h'", read_integer));
}

DeRhamVector read_derham(const json& j) {
  check_schema(j);
  expect_type(j, "derham");
  const int n = read_dim(j);
  return DeRhamVector(n, read_list<Integer>(field(j, "h"), static_cast<std::size_t>(2 * n + 1),
                                            "'h'", read_integer));
}

HdrElement read_hdr(const json& j) {
  check_schema(j);
  expect_type(j, "hdr");
  const int n = read_dim(j);
  HodgeDiamond a = read_hodge(field(j, "hodge"));
  DeRhamVector b = read_derham(field(j, "derham"));
  if (a.dim() != n || b.dim() != n) throw ParseError("parts do not have dimension n");
  return {std::move(a), std::move(b)};
}

Element read_element(const json& j) {
  check_schema(j);
  const json& t = field(j, "type");
  if (t == "hodge") return read_hodge(j);
  if (t == "derham") return read_derham(j);
  if (t == "hdr") return read_hdr(j);
  throw ParseError("unknown element type " + t.dump());
}

Functional read_functional(const json& j) {
  check_schema(j);
  expect_type(j, "functional");
  const int n = read_dim(j);
  std::string space = "hodge";
  if (j.contains("space")) {
    if (!j.at("space").is_string()) throw ParseError("'space' must be a string");
    space = j.at("space").get<std::string>();
  }
  std::optional<Integer> modulus;
  if (j.contains("modulus")) {
    modulus = read_integer(j.at("modulus"));
    if (*modulus < 2) throw ParseError("'modulus' must be at least 2");
  }
  if (space == "hodge") {
    const auto q = read_square<Rational>(field(j, "lambda"), n, "'lambda'", read_rational);
    Integer den = 1;
    for (const auto& x : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    if (modulus && den != 1) throw ParseError("modular functionals need integer coefficients");
    LinearFunctional f;
    f.n = n;
    f.denominator = den;
    for (const auto& x : q) f.lambda.push_back(x.get_num() * (den / x.get_den()));
    f.modulus = modulus;
    return f;
  }
  if (space == "hdr") {
    CombinedFunctional f(n);
    f.lambda = read_square<Integer>(field(j, "lambda"), n, "'lambda'", read_integer);
    f.mu = read_list<Integer>(field(j, "mu"), static_cast<std::size_t>(2 * n + 1), "'mu'",
                              read_integer);
    f.modulus = modulus;
    return f;
  }
  throw ParseError("unknown functional space '" + space + "'");
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

json with_schema(json body) {
  json out = {{"schema", kSchema}};
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out;
}

}  // namespace hodgelab::json_io
