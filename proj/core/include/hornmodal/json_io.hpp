#ifndef HORNMODAL_JSON_IO_HPP
#define HORNMODAL_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "hornmodal/classify.hpp"
#include "hornmodal/model.hpp"
#include "hornmodal/morphism.hpp"
#include "hornmodal/solver.hpp"

namespace hornmodal {

// Exchange format for graphs and models:
//   {"n": int, "edges": [[u,v],...], "valuation": {"p":[ids]}, "root": id|null}
// Graphs travel as models with an empty valuation and null root.

nlohmann::json model_to_json(const KripkeModel& m);
KripkeModel model_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json types_list_to_json(const TypesList& t);
nlohmann::json witness_to_json(const HomWitness& w);
nlohmann::json classification_to_json(const ClassificationOutcome& o);

nlohmann::json sat_result_to_json(const SatResult& r);

nlohmann::json unravel_to_json(const UnravelResult& u);

} // namespace hornmodal

#endif // HORNMODAL_JSON_IO_HPP
