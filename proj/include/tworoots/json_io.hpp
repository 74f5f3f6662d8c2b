#pragma once

// JSON forms of the main objects.

#include <json.hpp>

#include "tworoots/forms.hpp"
#include "tworoots/orbits.hpp"

namespace tworoots::io {

using nlohmann::json;

json to_json(const Diagram& d);
Diagram diagram_from_json(const json& j);

json to_json(const Root& r);
Root root_from_json(const json& j);

json to_json(const EpsilonForm& e);
EpsilonForm epsilon_from_json(const json& j);

json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

// {"S": matrix} with optional {"components": [a, b]}.
json tworoot_to_json(const IntMatrix& s, bool with_components = true);
IntMatrix tworoot_from_json(const json& j);

json to_json(const RootPair& p);
RootPair root_pair_from_json(const json& j);

json to_json(const OrbitTable& o, bool with_members = false);
OrbitTable orbit_from_json(const json& j);

json coords_to_json(const CanonicalBasis& basis, const IntVector& coords, const std::vector<std::string>& names = {});

json to_json(const Decomposition& d);

}  // namespace tworoots::io
