#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "hodgelab/catalog.hpp"
#include "hodgelab/derhamring.hpp"
#include "hodgelab/hdrring.hpp"
#include "hodgelab/hodgering.hpp"

namespace hodgelab::json_io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "hodgelab/1";

/// Integers that fit in 64 bits are written as JSON numbers, larger ones as
/// decimal strings. Both forms are accepted on input.
json integer(const Integer& v);
Integer read_integer(const json& j);
/// "a/b" or an integer; rationals with denominator 1 are written as integers.
json rational(const Rational& q);
Rational read_rational(const json& j);

json hodge(const HodgeDiamond& d);
json derham(const DeRhamVector& v);
json hdr(const HdrElement& e);
json functional(const LinearFunctional& f);
json functional(const CombinedFunctional& f);
json variety(const VarietyClass& v);

HodgeDiamond read_hodge(const json& j);
DeRhamVector read_derham(const json& j);
HdrElement read_hdr(const json& j);

using Element = std::variant<HodgeDiamond, DeRhamVector, HdrElement>;
/// Dispatches on "type". Throws ParseError; membership is not checked.
Element read_element(const json& j);

using Functional = std::variant<LinearFunctional, CombinedFunctional>;
/// {"type":"functional","space":"hodge"|"hdr","n":..,"lambda":[[..]],
///  "mu":[..],"modulus":m}. Rational entries are cleared into a common
/// denominator for Hodge functionals and rejected for hdr ones.
Functional read_functional(const json& j);

/// Parses text as JSON, mapping syntax errors to ParseError.
json parse(const std::string& text);
json read_file(const std::string& path);

/// Adds the schema field to the given object.
json with_schema(json body);

}  // namespace hodgelab::json_io
