#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pinchext/extension.hpp"
#include "pinchext/families.hpp"
#include "pinchext/gallery.hpp"
#include "pinchext/rational.hpp"

namespace pinchext::io {

using json = nlohmann::json;

json to_json(cplx v); // [re, im]
cplx complex_from_json(const json& j);

json to_json(const RationalPart& rp); // {"poles":[{"a":[re,im],"m":..,"c":[[re,im],..]}]}
RationalPart rational_part_from_json(const json& j);

json to_json(const RationalityVerdict& v);
json to_json(const ExtensionVerdict& v);
json to_json(const CoefficientLadder& L);
json to_json(const PinchDescriptor& d);
json to_json(const std::vector<BoundViolation>& v);
json to_json(const TestSequenceReport& r);
json to_json(const TestFamilyReport& r);
json to_json(const GeneralPositionReport& r);
json to_json(const WindingProfile& p);
json to_json(const gallery::GrowthProbe& g);

// Deterministic text: object keys sorted, numbers printed with 17 significant
// digits, non-finite numbers as null, two-space indentation.
std::string dump(const json& j);

} // namespace pinchext::io
