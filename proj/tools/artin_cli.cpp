// Command-line front end. Every subcommand is a thin adapter over the
// library: parse input, call one operation, format the result.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "artin/classify.hpp"
#include "artin/error.hpp"
#include "artin/homology.hpp"
#include "artin/json_io.hpp"
#include "artin/modeltheory.hpp"
#include "artin/poincare.hpp"
#include "artin/salvetti.hpp"
#include "artin/tables.hpp"

namespace {

using artin::CoxeterGraph;
using artin::CoxeterType;

struct InputOpts {
  std::string preset;
  std::string file;
};

void add_input(CLI::App* cmd, InputOpts& in, bool required = true) {
  auto* p = cmd->add_option("input", in.preset,
                            "preset expression, e.g. A3+B2 or ~D4");
  auto* f = cmd->add_option("--file", in.file, "graph file in the text format");
  p->excludes(f);
  if (required) p->required(false);
}

CoxeterGraph load_graph(const InputOpts& in) {
  if (!in.file.empty()) {
    std::ifstream is(in.file);
    if (!is) artin::fail(artin::Errc::syntax_error, "cannot open " + in.file);
    std::ostringstream buf;
    buf << is.rdbuf();
    return CoxeterGraph::parse(buf.str());
  }
  if (in.preset.empty())
    artin::fail(artin::Errc::syntax_error, "no input given");
  return artin::preset_graph(in.preset);
}

// A single irreducible type, either named directly (H3, ~A4) or as a graph
// that classifies to one component.
CoxeterType load_type(const InputOpts& in) {
  if (in.file.empty() && !in.preset.empty()) {
    if (auto t = artin::parse_type(in.preset)) return *t;
  }
  CoxeterGraph g = load_graph(in);
  artin::Decomposition d = artin::classify(g);
  if (d.components.size() != 1)
    artin::fail(artin::Errc::unsupported_type,
                "input must be a single irreducible type");
  return d.components[0].type;
}

bool json_output = false;

void emit(const nlohmann::json& j, const std::string& text) {
  if (json_output)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

// Whether the homology outputs for this graph rest on the K(pi,1)
// conjecture or on its proved cases (spherical and affine components).
bool kpi1_proved(const CoxeterGraph& g) {
  for (const auto& c : artin::classify(g).components)
    if (!c.type.spherical() && !c.type.affine()) return false;
  return true;
}

void attach_kpi1(nlohmann::json& j, std::string& text, const CoxeterGraph& g) {
  bool proved = kpi1_proved(g);
  j["k_pi_1"] = proved ? "proved" : "conjectural";
  if (!proved)
    text += "\nnote: conditional on the K(pi,1) conjecture for this graph";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of Artin groups given by Coxeter graphs"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  InputOpts in, in2;
  int degree = 2;
  int max_degree = 3;
  std::string table = "all";

  auto* classify_cmd = app.add_subcommand("classify", "canonical type multiset");
  add_input(classify_cmd, in);
  auto* decompose_cmd =
      app.add_subcommand("decompose", "typed irreducible components");
  add_input(decompose_cmd, in);
  auto* poincare_cmd =
      app.add_subcommand("poincare", "Poincare polynomial of a spherical graph");
  add_input(poincare_cmd, in);
  auto* complex_cmd =
      app.add_subcommand("complex", "Salvetti chain complex dump");
  add_input(complex_cmd, in);
  complex_cmd->add_option("--degree", max_degree, "truncation degree (default 3)");
  auto* homology_cmd =
      app.add_subcommand("homology", "integral homology via Smith normal form");
  add_input(homology_cmd, in);
  homology_cmd->add_option("--degree", degree, "homology degree (default 2)");
  auto* h2_cmd = app.add_subcommand(
      "h2", "H_2 by the closed formula (connected simply laced)");
  add_input(h2_cmd, in);
  auto* h1_cmd = app.add_subcommand("h1", "H_1 from the presentation");
  add_input(h1_cmd, in);
  auto* torsion_cmd =
      app.add_subcommand("torsion", "torsion orders of A/Z(A)");
  add_input(torsion_cmd, in);
  auto* center_cmd = app.add_subcommand("center", "center facts");
  add_input(center_cmd, in);
  auto* distinguish_cmd = app.add_subcommand(
      "distinguish", "first-order distinguishing certificate");
  add_input(distinguish_cmd, in);
  distinguish_cmd->add_option("other", in2.preset, "second type")->required();
  auto* eqe_cmd = app.add_subcommand(
      "eqe-affine", "existential equivalence of affine types");
  add_input(eqe_cmd, in);
  eqe_cmd->add_option("other", in2.preset, "second type")->required();
  auto* retract_cmd = app.add_subcommand(
      "retract", "homological retract obstruction: retract TARGET SOURCE");
  add_input(retract_cmd, in);
  retract_cmd->add_option("source", in2.preset, "source type")->required();
  auto* catalog_cmd = app.add_subcommand(
      "catalog", "recompute the reference tables and diff them");
  catalog_cmd->add_option("--table", table, "all | affine-h2 | poincare | torsion")
      ->check(CLI::IsMember({"all", "affine-h2", "poincare", "torsion"}));

  // --format may appear after the subcommand
  for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (format == "json") json_output = true;

  try {
    if (*classify_cmd) {
      CoxeterGraph g = load_graph(in);
      artin::Decomposition d = artin::classify(g);
      std::string text;
      nlohmann::json types = nlohmann::json::array();
      for (const auto& t : d.types()) {
        if (!text.empty()) text += " + ";
        text += t.str();
        types.push_back(t.str());
      }
      emit({{"types", std::move(types)}}, text);
    } else if (*decompose_cmd) {
      CoxeterGraph g = load_graph(in);
      artin::Decomposition d = artin::classify(g);
      std::string text;
      for (const auto& c : d.components) {
        text += c.type.str() + ":";
        for (int v : c.vertices) text += " " + g.name(v);
        text += "\n";
      }
      if (!text.empty()) text.pop_back();
      emit({{"components", artin::to_json(d, g)}}, text);
    } else if (*poincare_cmd) {
      CoxeterGraph g = load_graph(in);
      std::vector<int> all(g.size());
      for (int v = 0; v < g.size(); ++v) all[v] = v;
      artin::IntPolynomial w = artin::poincare_of_subset(g, all);

      std::vector<int> exps;
      for (const auto& c : artin::classify(g).components)
        for (int e : artin::exponents(c.type)) exps.push_back(e);
      std::sort(exps.begin(), exps.end());
      std::string factored;
      for (size_t i = 0; i < exps.size();) {
        size_t j = i;
        while (j < exps.size() && exps[j] == exps[i]) ++j;
        std::string factor = "(" + artin::IntPolynomial::q_integer(exps[i] + 1).str() + ")";
        factored += factor;
        if (j - i > 1) factored += "^" + std::to_string(j - i);
        i = j;
      }
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto& c : w.coeffs()) coeffs.push_back(c.str());
      emit({{"factored", factored},
            {"coefficients", std::move(coeffs)},
            {"order", w.eval(1).str()}},
           "factored: " + factored + "\nexpanded: " + w.str());
    } else if (*complex_cmd) {
      CoxeterGraph g = load_graph(in);
      nlohmann::json j = artin::dump_complex(artin::build_complex(g, max_degree));
      std::string text = j.dump(2);
      attach_kpi1(j, text, g);
      emit(j, text);
    } else if (*homology_cmd) {
      CoxeterGraph g = load_graph(in);
      auto c = artin::build_complex(g, std::max(degree, 1));
      artin::AbelianGroup h = artin::homology_at(c, degree);
      nlohmann::json j = {{"degree", degree}, {"group", artin::to_json(h)}};
      std::string text = h.str();
      attach_kpi1(j, text, g);
      emit(j, text);
    } else if (*h2_cmd) {
      CoxeterGraph g = load_graph(in);
      artin::AbelianGroup h = artin::h2_fast(g);
      nlohmann::json j = {{"group", artin::to_json(h)}};
      std::string text = h.str();
      attach_kpi1(j, text, g);
      emit(j, text);
    } else if (*h1_cmd) {
      artin::AbelianGroup h = artin::h1_of_artin(load_graph(in));
      emit({{"group", artin::to_json(h)}}, h.str());
    } else if (*torsion_cmd) {
      artin::TorsionProfile p = artin::torsion_profile(load_type(in));
      std::string text = "{";
      nlohmann::json orders = nlohmann::json::array();
      for (size_t i = 0; i < p.orders.size(); ++i) {
        text += (i ? ", " : "") + std::to_string(p.orders[i]);
        orders.push_back(p.orders[i]);
      }
      text += "}";
      emit({{"orders", std::move(orders)}}, text);
    } else if (*center_cmd) {
      artin::CenterFact f = artin::center_fact(load_type(in));
      bool sq = f.kind == artin::CenterGenerator::delta_squared;
      emit({{"generator", sq ? "Delta^2" : "Delta"},
            {"reflection_count", f.reflection_count},
            {"central_exponent", f.central_exponent}},
           std::string("generator: ") + (sq ? "Delta^2" : "Delta") +
               ", reflections: " + std::to_string(f.reflection_count) +
               ", abelianized exponent: " + std::to_string(f.central_exponent));
    } else if (*distinguish_cmd) {
      auto cert = artin::distinguish_spherical(load_graph(in), load_graph(in2));
      nlohmann::json j = artin::to_json(cert);
      std::string text;
      if (cert.isomorphic)
        text = "Isomorphic";
      else
        text = std::string("Distinguished by ") + artin::method_name(cert.method) +
               ", witness " + j["witness"].dump();
      emit(j, text);
    } else if (*eqe_cmd) {
      auto d = artin::existentially_equivalent_affine(load_type(in), load_type(in2));
      nlohmann::json j = artin::to_json(d);
      std::string text = j["decision"].get<std::string>();
      if (d.rank_certificate)
        text += " (ranks " + std::to_string(d.rank_certificate->first) + " vs " +
                std::to_string(d.rank_certificate->second) + ")";
      else if (d.homology_certificate && d.homology_certificate->obstructed)
        text += " (H_" + std::to_string(d.homology_certificate->degree) +
                " obstruction)";
      emit(j, text);
    } else if (*retract_cmd) {
      auto r = artin::retract_obstruction(load_type(in), load_type(in2));
      std::string text;
      if (r.obstructed)
        text = "Obstructed in degree " + std::to_string(r.degree) + ": " +
               r.source_homology.str() + " does not embed in " +
               r.target_homology.str();
      else
        text = "NoObstructionFound";
      emit(artin::to_json(r), text);
    } else if (*catalog_cmd) {
      artin::TableSelect sel = artin::TableSelect::all;
      if (table == "affine-h2") sel = artin::TableSelect::affine_h2;
      if (table == "poincare") sel = artin::TableSelect::poincare;
      if (table == "torsion") sel = artin::TableSelect::torsion;
      artin::TableReport report = artin::reproduce_tables(sel);
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& c : report.checks)
        checks.push_back({{"table", c.table},
                          {"name", c.name},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"ok", c.ok}});
      emit({{"checks", std::move(checks)}, {"mismatches", report.mismatches()}},
           report.str());
      return report.mismatches() == 0 ? 0 : 1;
    }
  } catch (const artin::Error& e) {
    std::cerr << "error: " << e.what();
    if (!in.preset.empty()) std::cerr << " (input: " << in.preset << ")";
    if (!in.file.empty()) std::cerr << " (file: " << in.file << ")";
    std::cerr << "\n";
    return artin::is_input_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
