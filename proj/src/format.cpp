#include "swl/format.hpp"

#include <limits>
#include <sstream>

#include "swl/error.hpp"

namespace swl {

namespace {

json int_to_json(const Int& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() &&
      v >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
      throw ParseError("bad integer string '" + s + "'");
    return Int(s);
  }
  throw ParseError("expected an integer, got " + j.dump());
}

std::string place_text(const PlaceStructure& s, int v, const PlaceWeight& w,
                       bool indexed) {
  std::ostringstream os;
  const int off = s.offset(v);
  bool first = true;
  auto sep = [&] {
    if (!first) os << ' ';
    first = false;
  };
  if (w.D != 0) {
    sep();
    if (indexed) os << "det[" << off << "]^" << w.D;
    else os << (s.total_degree() == 1 ? "det^" : "e^") << w.D;
  }
  for (std::size_t i = 0; i < w.b.size(); ++i) {
    sep();
    if (s.total_degree() == 1) os << "Sym^" << (w.b[i] - 2);
    else os << "Sym[" << off + static_cast<int>(i) << "]^" << (w.b[i] - 2);
  }
  return os.str();
}

}  // namespace

std::string to_text(const PlaceStructure& s, const SerreWeight& w) {
  if (static_cast<int>(w.places.size()) != s.place_count())
    throw DomainError("Serre weight does not match the place structure");
  const bool indexed = s.place_count() > 1;
  std::string out;
  for (int v = 0; v < s.place_count(); ++v) {
    if (v > 0) out += ' ';
    out += place_text(s, v, w.places[static_cast<std::size_t>(v)], indexed);
  }
  return out;
}

std::string to_text(const PlaceStructure& s, const VirtualClass& c) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, m] : c.terms()) {
    long long a = m < 0 ? -m : m;
    if (first) out += m < 0 ? "-" : "";
    else out += m < 0 ? " - " : " + ";
    if (a != 1) out += std::to_string(a) + " ";
    out += to_text(s, w);
    first = false;
  }
  return out;
}

std::string to_text(std::span<const std::int64_t> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string to_text(const Weight& w) {
  return "(" + to_text(w.k) + "," + to_text(w.l) + ")";
}

json to_json(const SerreWeight& w) {
  json out = json::array();
  for (std::size_t v = 0; v < w.places.size(); ++v)
    out.push_back({{"place", v}, {"b", w.places[v].b}, {"D", int_to_json(w.places[v].D)}});
  return out;
}

json to_json(const VirtualClass& c) {
  json out = json::array();
  for (const auto& [w, m] : c.terms()) out.push_back({{"weight", to_json(w)}, {"mult", m}});
  return out;
}

json to_json(const Weight& w) { return {{"k", w.k}, {"l", w.l}}; }

json to_json(const WeightCandidate& c) {
  return {{"weight", {{"b", c.weight.b}, {"D", int_to_json(c.weight.D)}}},
          {"J", c.J},
          {"certainty", to_string(c.certainty)}};
}

json to_json(const ProductCandidate& c) {
  return {{"weight", to_json(c.weight)}, {"certainty", to_string(c.certainty)}};
}

SerreWeight serre_weight_from_json(const PlaceStructure& s, const json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != s.place_count())
    throw ParseError("Serre weight JSON must list one entry per place");
  SerreWeight out;
  for (int v = 0; v < s.place_count(); ++v) {
    const auto& e = j[static_cast<std::size_t>(v)];
    if (!e.is_object() || !e.contains("b") || !e.contains("D"))
      throw ParseError("Serre weight entry needs \"b\" and \"D\"");
    if (e.contains("place") && e["place"].get<int>() != v)
      throw ParseError("Serre weight places out of order");
    out.places.push_back(make_place_weight(s, v, e["b"].get<std::vector<int>>(),
                                           int_from_json(e["D"])));
  }
  return out;
}

VirtualClass virtual_class_from_json(const PlaceStructure& s, const json& j) {
  if (!j.is_array()) throw ParseError("class JSON must be a list");
  VirtualClass out(s);
  for (const auto& e : j) {
    if (!e.contains("weight") || !e.contains("mult"))
      throw ParseError("class entry needs \"weight\" and \"mult\"");
    out.add(serre_weight_from_json(s, e["weight"]), e["mult"].get<long long>());
  }
  return out;
}

Weight weight_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("l"))
    throw ParseError("weight JSON needs \"k\" and \"l\"");
  return Weight{j["k"].get<std::vector<std::int64_t>>(),
                j["l"].get<std::vector<std::int64_t>>()};
}

}  // namespace swl
