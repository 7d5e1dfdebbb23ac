#pragma once

#include <json.hpp>

#include "sheafrig/associated.hpp"
#include "sheafrig/lie_models.hpp"
#include "sheafrig/motion.hpp"

namespace sheafrig {

using Json = nlohmann::json;

// Rationals serialize as "p/q" strings; plain JSON integers are accepted on
// input.
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json matrix_to_json(const Mat& m);
Mat matrix_from_json(const Json& j, int expected_cols = -1);

Json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const Json& j);

Json hypergraph_to_json(const Hypergraph& g);
Hypergraph hypergraph_from_json(const Json& j);

Json motion_spec_to_json(const MotionSheafSpec& spec);
MotionSheafSpec motion_spec_from_json(const Json& j);

Json associated_spec_to_json(const AssociatedSheafSpec& spec);
AssociatedSheafSpec associated_spec_from_json(const Json& j);

Json framework_to_json(const Framework& fw);
Framework framework_from_json(const Json& j);

Json arrangement_to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const Json& j);

Json sheaf_to_json(const CellularSheaf& f);
Json cohomology_to_json(const CohomologyReport& rep);
Json verdict_to_json(const RigidityVerdict& v);
Json sparsity_to_json(const SparsityReport& rep);
Json move_to_json(const ExtensionMove& m);
ExtensionMove move_from_json(const Json& j);

Json load_json_file(const std::string& path);
void write_text_atomic(const std::string& path, const std::string& text);

} // namespace sheafrig
