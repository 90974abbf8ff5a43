#include "hodgelab/catalog.hpp"

namespace hodgelab {

HdrElement VarietyClass::element() const {
  if (!concrete()) throw PartialEntry("'" + name + "' has no complete Hodge and de Rham data");
  return {*hodge, *derham};
}

namespace {

VarietyClass degenerate(std::string name, const HodgeDiamond& h, std::string notes) {
  VarietyClass v;
  v.name = std::move(name);
  v.dim = h.dim();
  v.hodge = h;
  v.derham = s_map(h);
  v.derham_source = "via-s";
  v.notes = std::move(notes);
  return v;
}

VarietyClass pinned(std::string name, const HdrElement& e, std::string notes) {
  VarietyClass v;
  v.name = std::move(name);
  v.dim = e.dim();
  v.hodge = e.a;
  v.derham = e.b;
  v.derham_source = "pinned";
  v.notes = std::move(notes);
  return v;
}

VarietyClass partial(std::string name, int dim, std::vector<KnownNumber> known,
                     std::string notes) {
  VarietyClass v;
  v.name = std::move(name);
  v.dim = dim;
  v.derham_source = "unknown";
  v.known = std::move(known);
  v.notes = std::move(notes);
  return v;
}

std::vector<VarietyClass> build() {
  const auto& H = rings::hodge();
  std::vector<VarietyClass> out;
  out.push_back(degenerate("point", HodgeDiamond::from_rows({{1}}), "Spec k"));
  out.push_back(degenerate("P1", HodgeDiamond::from_polynomial(Polynomial::parse(H, "(1+xy)z"), 1),
                           "projective line; image of A"));
  out.push_back(degenerate("E", HodgeDiamond::from_polynomial(Polynomial::parse(H, "(1+x+y+xy)z"), 1),
                           "elliptic curve; A + B"));
  out.push_back(degenerate("P2", HodgeDiamond::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                           "projective plane; A^2 - C"));
  out.push_back(degenerate("GenD",
                           HodgeDiamond::from_polynomial(Polynomial::parse(H, "(x+xy^2)z^2"), 2),
                           "virtual class: the presentation generator D, not a variety"));
  out.push_back(pinned("Sprime", sprime(),
                       "virtual class (0, (t+2t^2+t^3)z^2) in the kernel of (chi, h^0)"));
  out.push_back(pinned("Tprime", tprime(),
                       "virtual class (0, (t^2+2t^3+t^4)z^3) in the kernel of (chi, h^0)"));
  out.push_back(partial("SerreSurface", 2, {{"h^{1,0}", 0}, {"h^{0,1}", 1}},
                        "surface with H^0(Omega^1) = 0 and h^1(O) = 1; remaining numbers unknown"));
  out.push_back(partial("LangSurface", 2, {{"h^{1,0}", 1}, {"h^{0,1}", 1}, {"h^1_dR", 1}},
                        "surface with h^{1,0} = h^{0,1} = h^1_dR = 1; remaining numbers unknown"));
  return out;
}

}  // namespace

const std::vector<VarietyClass>& catalog_entries() {
  static const std::vector<VarietyClass> entries = build();
  return entries;
}

const VarietyClass& catalog_get(const std::string& name) {
  for (const auto& v : catalog_entries())
    if (v.name == name) return v;
  throw UnknownName("no catalog entry named '" + name + "'");
}

HdrElement catalog_product(const std::vector<std::string>& names) {
  HdrElement acc = catalog_get("point").element();
  for (const auto& n : names) acc = acc * catalog_get(n).element();
  return acc;
}

}  // namespace hodgelab
