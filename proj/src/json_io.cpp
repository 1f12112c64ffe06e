#include "artin/json_io.hpp"

#include "json_util.hpp"

namespace artin {

nlohmann::json to_json(const AbelianGroup& g) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const BigInt& d : g.torsion) torsion.push_back(json_int(d));
  return {{"free_rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

AbelianGroup abelian_from_json(const nlohmann::json& j) {
  AbelianGroup g;
  g.free_rank = j.at("free_rank").get<int>();
  for (const auto& d : j.at("torsion")) {
    if (d.is_string())
      g.torsion.emplace_back(d.get<std::string>());
    else
      g.torsion.emplace_back(d.get<long long>());
  }
  return g;
}

nlohmann::json to_json(const Decomposition& d, const CoxeterGraph& g) {
  nlohmann::json out = nlohmann::json::array();
  for (const Component& c : d.components) {
    nlohmann::json gens = nlohmann::json::array();
    for (int v : c.vertices) gens.push_back(g.name(v));
    out.push_back({{"type", c.type.str()}, {"generators", std::move(gens)}});
  }
  return out;
}

nlohmann::json to_json(const DistinguishCertificate& c) {
  if (c.isomorphic)
    return {{"verdict", "Isomorphic"}};
  nlohmann::json witness;
  switch (c.method) {
    case DistinguishMethod::torsion_orders:
      witness = {{"order", *c.order_witness}};
      break;
    case DistinguishMethod::hyperbolicity:
      witness = {{"embeds_z2", c.z2_side->str()}};
      break;
    case DistinguishMethod::abelianization:
      witness = {{"abelianization_orders",
                  {c.abelianization_orders->first,
                   c.abelianization_orders->second}}};
      break;
    case DistinguishMethod::component_multiset:
      witness = {{"component", c.component_witness->str()}};
      break;
  }
  return {{"verdict", "Distinguished"},
          {"method", method_name(c.method)},
          {"witness", std::move(witness)}};
}

nlohmann::json to_json(const RetractObstruction& r) {
  if (!r.obstructed) return {{"obstructed", false}};
  return {{"obstructed", true},
          {"degree", r.degree},
          {"source_homology", to_json(r.source_homology)},
          {"target_homology", to_json(r.target_homology)}};
}

nlohmann::json to_json(const EqeDecision& d) {
  switch (d.verdict) {
    case EqeVerdict::equivalent:
      return {{"decision", "Equivalent"}};
    case EqeVerdict::out_of_theorem_scope:
      return {{"decision", "OutOfTheoremScope"}};
    case EqeVerdict::not_equivalent:
      break;
  }
  nlohmann::json cert;
  if (d.rank_certificate)
    cert = {{"ranks", {d.rank_certificate->first, d.rank_certificate->second}}};
  else if (d.homology_certificate)
    cert = to_json(*d.homology_certificate);
  return {{"decision", "NotEquivalent"}, {"certificate", std::move(cert)}};
}

}  // namespace artin
