#pragma once

// Text and JSON renderings.  Text uses the class notation accepted by
// parse_class(), so printed classes can be pasted back in.

#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "swl/bdj.hpp"
#include "swl/groth.hpp"
#include "swl/weights.hpp"

namespace swl {

// Insertion-ordered so that emitted keys follow the documented layout.
using json = nlohmann::ordered_json;

std::string to_text(const PlaceStructure& s, const SerreWeight& w);
std::string to_text(const PlaceStructure& s, const VirtualClass& c);
std::string to_text(std::span<const std::int64_t> v);  // (a,b,...)
std::string to_text(const Weight& w);                 // ((k...),(l...))

json to_json(const SerreWeight& w);
json to_json(const VirtualClass& c);
json to_json(const Weight& w);
json to_json(const WeightCandidate& c);
json to_json(const ProductCandidate& c);

SerreWeight serre_weight_from_json(const PlaceStructure& s, const json& j);
VirtualClass virtual_class_from_json(const PlaceStructure& s, const json& j);
Weight weight_from_json(const json& j);

}  // namespace swl
