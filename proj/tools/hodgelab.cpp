#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hodgelab/catalog.hpp"
#include "hodgelab/derhamring.hpp"
#include "hodgelab/hdrring.hpp"
#include "hodgelab/hodgering.hpp"
#include "hodgelab/json_io.hpp"
#include "hodgelab/parallel.hpp"
#include "hodgelab/report.hpp"

using namespace hodgelab;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kVerificationFailed = 3 };

constexpr int kDepthCeiling = 12;

bool g_pretty = false;

void emit(const json& j) { std::cout << j.dump(g_pretty ? 2 : -1) << "\n"; }

json term_list(const Polynomial& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back({{"monomial", Polynomial::monomial(p.ring(), e).to_string()},
                   {"coef", json_io::integer(c)}});
  }
  return out;
}

// ----------------------------------------------------------------- rank

int cmd_rank(const std::string& space, int n) {
  if (space == "hodge") {
    std::cout << rank_H(n) << "\n";
  } else if (space == "derham") {
    std::cout << rank_DR(n) << "\n";
  } else {
    std::cout << rank_HDR(n) << "\n";
  }
  return kOk;
}

// ------------------------------------------------------------ decompose

int not_member(const std::string& space, const std::string& reason) {
  emit(json_io::with_schema(
      {{"type", "decomposition"}, {"space", space}, {"member", false}, {"reason", reason}}));
  std::cerr << "not a member: " << reason << "\n";
  return kNegative;
}

int cmd_decompose(const std::string& path) {
  const auto element = json_io::read_element(json_io::read_file(path));
  if (const auto* d = std::get_if<HodgeDiamond>(&element)) {
    if (!d->is_member()) return not_member("hodge", "h^{i,j} != h^{n-i,n-j} for some (i,j)");
    const PresentationElement e = decompose(*d);
    const Polynomial p = e.to_polynomial();
    emit(json_io::with_schema({{"type", "decomposition"},
                               {"space", "hodge"},
                               {"member", true},
                               {"n", d->dim()},
                               {"expression", p.to_string()},
                               {"normal_form", {{"p0", e.p0.to_string()}, {"p1", e.p1.to_string()}}},
                               {"terms", term_list(p)}}));
    return kOk;
  }
  if (const auto* v = std::get_if<DeRhamVector>(&element)) {
    if (!v->is_poincare_dual()) return not_member("derham", "h^i != h^{2n-i} for some i");
    if (!v->is_member()) return not_member("derham", "middle de Rham number is odd in odd dimension");
    const Polynomial p = decompose_DR(*v);
    emit(json_io::with_schema({{"type", "decomposition"},
                               {"space", "derham"},
                               {"member", true},
                               {"n", v->dim()},
                               {"expression", p.to_string()},
                               {"terms", term_list(p)}}));
    return kOk;
  }
  const auto& e = std::get<HdrElement>(element);
  if (!e.a.is_member()) return not_member("hdr", "Hodge part violates Serre duality");
  if (!e.b.is_member()) return not_member("hdr", "de Rham part violates Poincare duality or parity");
  if (h00_H(e.a) != h0_DR(e.b)) return not_member("hdr", "h^{0,0} != h^0");
  if (chi_H(e.a) != chi_DR(e.b)) return not_member("hdr", "Euler characteristics differ");
  const Polynomial p = decompose_HDR(e);
  Polynomial::TermMap base, ideal;
  for (const auto& [x, c] : p.terms()) (x[4] || x[5] ? ideal : base).emplace(x, c);
  const auto& R = rings::hdr_presentation();
  emit(json_io::with_schema({{"type", "decomposition"},
                             {"space", "hdr"},
                             {"member", true},
                             {"n", e.dim()},
                             {"expression", p.to_string()},
                             {"presentation_part", Polynomial(R, base).to_string()},
                             {"ideal_part", Polynomial(R, ideal).to_string()},
                             {"terms", term_list(p)}}));
  return kOk;
}

// ------------------------------------------------------------ relations

std::string serre_name(const LinearFunctional& f) {
  for (int i = 0; i <= f.n; ++i)
    for (int j = 0; j <= f.n; ++j)
      if (f.at(i, j) == 1) return "serre[" + std::to_string(i) + "," + std::to_string(j) + "]";
  return "serre[?]";
}

IntMatrix columns_of(const std::vector<IntVector>& cols, std::size_t rows) {
  return IntMatrix::from_columns(cols, rows);
}

int cmd_relations(const std::string& space, int n, std::optional<long> mod, bool tamper) {
  std::optional<Integer> m;
  if (mod) m = Integer(*mod);
  json list = json::array();
  std::vector<IntVector> named, computed;
  std::size_t rows = 0;

  if (space == "hodge") {
    rows = static_cast<std::size_t>((n + 1) * (n + 1));
    for (auto f : serre_relations(n)) {
      const std::string name = serre_name(f);
      if (m) {
        for (auto& v : f.lambda) v = mod_floor(v, *m);
        f.modulus = m;
      }
      named.push_back(f.lambda);
      list.push_back({{"name", name}, {"functional", json_io::functional(f)}});
    }
    for (const auto& f : m ? congruences(n, *m) : relations(n)) computed.push_back(f.lambda);
  } else if (space == "hdr") {
    rows = static_cast<std::size_t>((n + 1) * (n + 1) + 2 * n + 1);
    for (const auto& [name, f] : named_hdr_relations(n, m)) {
      named.push_back(f.full());
      list.push_back({{"name", name}, {"functional", json_io::functional(f)}});
    }
    for (const auto& f : m ? hdr_congruences(n, *m) : hdr_relations(n)) computed.push_back(f.full());
  } else {
    throw ParseError("relations are available for --space hodge or hdr");
  }

  if (tamper && !named.empty()) {
    named.pop_back();
    list.erase(list.size() - 1);
  }
  const IntMatrix N = columns_of(named, rows);
  const IntMatrix K = columns_of(computed, rows);
  const bool agree = m ? lattice_equal_mod(N, K, *m) : lattice_equal(N, K);
  json out = {{"type", "relations"}, {"space", space}, {"n", n}, {"relations", list},
              {"verified", agree}};
  if (m) out["modulus"] = json_io::integer(*m);
  emit(json_io::with_schema(out));
  if (!agree) {
    std::cerr << "relation table does not match the computed annihilator\n";
    return kVerificationFailed;
  }
  return kOk;
}

// ----------------------------------------------------------- birational

int cmd_birational(const std::string& path) {
  const auto fv = json_io::read_functional(json_io::read_file(path));
  const auto* f = std::get_if<LinearFunctional>(&fv);
  if (!f) throw ParseError("birational expects a functional on Hodge numbers");
  const BirationalVerdict v = is_birational_invariant(*f);
  json out = {{"type", "birational-verdict"}, {"n", f->n}, {"invariant", v.invariant}};
  if (f->modulus) out["modulus"] = json_io::integer(*f->modulus);
  if (v.invariant) {
    json coeffs = json::array();
    for (const auto& [name, c] : v.outer_coefficients) {
      if (c != 0) coeffs.push_back({{"name", name}, {"coef", json_io::rational(c)}});
    }
    out["outer_coefficients"] = std::move(coeffs);
  } else {
    out["witness"] = json_io::hodge(*v.witness);
    out["witness_polynomial"] = v.witness->to_string();
    out["witness_label"] = v.witness_label;
    out["value"] = json_io::integer(v.witness_value);
  }
  emit(json_io::with_schema(out));
  return v.invariant ? kOk : kNegative;
}

// --------------------------------------------------------------- verify

struct VerifyOptions {
  int max_n = 8;
  int max_hdr = 5;
  std::vector<std::string> only;
  int jobs = 0;
  bool serial = false;
  bool timings = false;
  bool tamper = false;
};

CheckRecord control_without_tprime(Execution ex) {
  CheckRecord inner = verify_tau_surjective(3, ex, false);
  CheckRecord r;
  r.id = "hdr.control_without_T";
  r.certifies = "without T the tau-image misses HDR_3 (odd h^2 direction)";
  r.seconds = inner.seconds;
  for (const auto& d : inner.degrees) {
    DegreeOutcome o{d.degree, true, {}};
    if (d.degree == 3 && d.passed) {
      o.passed = false;
      o.witness = "tau-image without T already generates HDR_3";
    }
    if (d.degree < 3 && !d.passed) {
      o.passed = false;
      o.witness = d.witness;
    }
    r.degrees.push_back(std::move(o));
  }
  return r;
}

int cmd_verify(const VerifyOptions& o) {
  if (o.max_n > kDepthCeiling || o.max_hdr > kDepthCeiling) {
    std::cerr << "warning: depth above " << kDepthCeiling << " may take a long time\n";
  }
  set_thread_count(o.jobs);
  const Execution ex = o.serial ? Execution::Serial : Execution::Parallel;
  auto want = [&o](const std::string& group) {
    if (o.only.empty()) return true;
    for (const auto& g : o.only)
      if (g == group) return true;
    return false;
  };

  VerificationReport report;
  if (want("hodge")) {
    report.checks.push_back(verify_hodge_basis(o.max_n, ex));
    report.checks.push_back(verify_presentation(o.max_n, ex));
    report.checks.push_back(verify_hodge_relations(o.max_n, ex));
    report.checks.push_back(verify_hodge_congruences(o.max_n, {2, 3, 4, 5, 6, 9}, ex));
    report.checks.push_back(verify_birational(o.max_n, ex));
  }
  if (want("derham")) {
    auto gens = derham_kernel_generators();
    if (o.tamper) gens.pop_back();
    report.checks.push_back(verify_derham(o.max_n, ex, gens));
  }
  if (want("hdr")) {
    report.checks.push_back(verify_kernel_I(o.max_n, ex));
    report.checks.push_back(verify_tprime_alternatives(ex));
    report.checks.push_back(verify_tau_surjective(o.max_hdr, ex));
    report.checks.push_back(control_without_tprime(ex));
    report.checks.push_back(verify_hdr_relations(o.max_hdr, ex));
    report.checks.push_back(verify_hdr_congruences(o.max_hdr, {2, 3, 4, 6}, ex));
  }
  json out = report.to_json(o.timings);
  out["max"] = o.max_n;
  out["max_hdr"] = o.max_hdr;
  emit(out);
  std::cerr << report.summary();
  return report.passed() ? kOk : kVerificationFailed;
}

// -------------------------------------------------------------- catalog

int cmd_catalog_list() {
  json entries = json::array();
  for (const auto& v : catalog_entries()) entries.push_back(json_io::variety(v));
  emit(json_io::with_schema({{"type", "catalog"}, {"entries", entries}}));
  return kOk;
}

int cmd_catalog_show(const std::string& name) {
  json j = json_io::variety(catalog_get(name));
  j["type"] = "variety";
  if (const auto& v = catalog_get(name); v.concrete()) j["hdr_member"] = is_member_hdr(v.element());
  emit(json_io::with_schema(j));
  return kOk;
}

int cmd_catalog_product(const std::vector<std::string>& names) {
  const HdrElement e = catalog_product(names);
  json j = json_io::hdr(e);
  j["factors"] = names;
  j["hodge_polynomial"] = e.a.to_string();
  j["derham_polynomial"] = e.b.to_string();
  emit(json_io::with_schema(j));
  return kOk;
}

// ----------------------------------------------------------------- eval

int cmd_eval(const std::string& map, const std::string& expr) {
  json out = {{"type", "image"}, {"map", map}};
  if (map == "tau") {
    const Polynomial p = Polynomial::parse(rings::hdr_presentation(), expr);
    const HdrFamily f = tau(p);
    out["input"] = p.to_string();
    out["hodge"] = f.hodge.to_string();
    out["derham"] = f.derham.to_string();
  } else {
    const Polynomial p = Polynomial::parse(rings::presentation(), expr);
    const Polynomial img = map == "phi" ? phi(p) : psi(p);
    out["input"] = p.to_string();
    out["image"] = img.to_string();
    out["terms"] = img.to_json();
  }
  emit(json_io::with_schema(out));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hodge, de Rham and Hodge-de Rham rings: exact computations and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", g_pretty, "Indent JSON output");
  app.add_flag("--json", "JSON output (the default)");

  const std::vector<std::string> spaces{"hodge", "derham", "hdr"};

  std::string space = "hodge";
  int degree = 0;
  auto* rank = app.add_subcommand("rank", "Rank of the degree-n piece");
  rank->add_option("--space", space)->check(CLI::IsMember(spaces));
  rank->add_option("-n,--degree", degree)->required()->check(CLI::NonNegativeNumber);

  std::string input;
  auto* dec = app.add_subcommand("decompose", "Write an element over the ring generators");
  dec->add_option("--input,input", input, "JSON file (hodge, derham or hdr)")->required();

  std::optional<long> modulus;
  bool tamper = false;
  auto* rel = app.add_subcommand("relations", "Universal linear relations or congruences");
  rel->add_option("--space", space)->check(CLI::IsMember(std::vector<std::string>{"hodge", "hdr"}));
  rel->add_option("-n,--degree", degree)->required()->check(CLI::NonNegativeNumber);
  rel->add_option("--mod", modulus, "Modulus m >= 2")->check(CLI::Range(2L, 1L << 40));
  rel->add_flag("--tamper", tamper)->group("");

  auto* bir = app.add_subcommand("birational", "Decide whether a functional is a birational invariant");
  bir->add_option("--input,input", input, "Functional JSON file")->required();

  VerifyOptions vopt;
  auto* ver = app.add_subcommand("verify", "Run the structure checks degree by degree");
  ver->add_option("--max", vopt.max_n, "Depth for Hodge and de Rham checks")->check(CLI::NonNegativeNumber);
  ver->add_option("--max-hdr", vopt.max_hdr, "Depth for Hodge-de Rham checks")->check(CLI::NonNegativeNumber);
  ver->add_option("--only", vopt.only, "Check groups: hodge, derham, hdr")
      ->delimiter(',')
      ->check(CLI::IsMember(spaces));
  ver->add_option("--jobs", vopt.jobs, "OpenMP threads (0: runtime default)")->check(CLI::NonNegativeNumber);
  ver->add_flag("--serial", vopt.serial, "Use the serial reference path");
  ver->add_flag("--timings", vopt.timings, "Include wall times in the JSON report");
  ver->add_flag("--tamper", vopt.tamper)->group("");

  auto* cat = app.add_subcommand("catalog", "Named generator classes");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "All entries");
  std::string name;
  auto* show = cat->add_subcommand("show", "One entry");
  show->add_option("name", name)->required();
  std::vector<std::string> names;
  auto* prod = cat->add_subcommand("product", "Product of entries");
  prod->add_option("names", names);

  std::string map = "phi", expr;
  auto* ev = app.add_subcommand("eval", "Image of a polynomial under phi, psi or tau");
  ev->add_option("--map", map)->check(CLI::IsMember(std::vector<std::string>{"phi", "psi", "tau"}));
  ev->add_option("--expr,expr", expr)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*rank) return cmd_rank(space, degree);
    if (*dec) return cmd_decompose(input);
    if (*rel) return cmd_relations(space, degree, modulus, tamper);
    if (*bir) return cmd_birational(input);
    if (*ver) return cmd_verify(vopt);
    if (*ev) return cmd_eval(map, expr);
    if (*cat) {
      if (*show) return cmd_catalog_show(name);
      if (*prod) return cmd_catalog_product(names);
      return cmd_catalog_list();
    }
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const InternalBasisDefect& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
