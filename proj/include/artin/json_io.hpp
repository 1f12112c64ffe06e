#pragma once

#include <nlohmann/json.hpp>

#include "artin/abelian.hpp"
#include "artin/graph.hpp"
#include "artin/modeltheory.hpp"
#include "artin/types.hpp"

namespace artin {

/// {"free_rank": b, "torsion": [d1, d2, ...]}
nlohmann::json to_json(const AbelianGroup& g);
AbelianGroup abelian_from_json(const nlohmann::json& j);

/// [{"type": "A3", "generators": ["a", "b", "c"]}, ...]
nlohmann::json to_json(const Decomposition& d, const CoxeterGraph& g);

/// {"verdict", "method", "witness"}
nlohmann::json to_json(const DistinguishCertificate& c);

/// {"obstructed", "degree", "source_homology", "target_homology"}
nlohmann::json to_json(const RetractObstruction& r);

/// {"decision", "certificate"}
nlohmann::json to_json(const EqeDecision& d);

}  // namespace artin
