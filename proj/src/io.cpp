#include "splitcover/io.hpp"

#include <limits>

namespace splitcover {

json integer_to_json(const Integer& v) {
  static const Integer lo = Integer(std::numeric_limits<std::int64_t>::min());
  static const Integer hi = Integer(std::numeric_limits<std::int64_t>::max());
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("malformed integer literal '" + j.get<std::string>() + "'");
    }
  }
  throw std::invalid_argument("expected an integer (number or decimal string)");
}

json to_json(const SplitSet& s) {
  json pi = json::array();
  for (Index i = 0; i < s.dim(); ++i) pi.push_back(integer_to_json(s.pi()(i)));
  return json{{"n", s.dim()}, {"pi", std::move(pi)}, {"eta", integer_to_json(s.eta())}};
}

SplitSet split_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("pi") || !j.contains("eta"))
    throw std::invalid_argument("split record needs fields n, pi, eta");
  const auto n = j.at("n").get<std::int64_t>();
  const json& pi_json = j.at("pi");
  if (!pi_json.is_array() || static_cast<std::int64_t>(pi_json.size()) != n)
    throw std::invalid_argument("split record: pi must be an array of length n");
  IntVec pi(static_cast<Index>(n));
  for (Index i = 0; i < static_cast<Index>(n); ++i)
    pi(i) = integer_from_json(pi_json.at(static_cast<std::size_t>(i)));
  return SplitSet(std::move(pi), integer_from_json(j.at("eta")));
}

json to_json(const SplitFamily& f) {
  json splits = json::array();
  for (const SplitSet& s : f.splits) splits.push_back(to_json(s));
  return json{{"n", f.n}, {"k", f.k}, {"splits", std::move(splits)}};
}

SplitFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("splits"))
    throw std::invalid_argument("family record needs fields n, k, splits");
  SplitFamily f;
  f.n = j.at("n").get<std::int64_t>();
  f.k = j.at("k").get<int>();
  for (const json& s : j.at("splits")) f.splits.push_back(split_from_json(s));
  for (const SplitSet& s : f.splits)
    if (s.dim() != f.n) throw std::invalid_argument("family member dimension mismatch");
  return f;
}

json to_json(const CubePoint& p) {
  json coords = json::array();
  for (Index i = 0; i < p.dim(); ++i) coords.push_back(rational_to_string(p[i]));
  return coords;
}

CubePoint cube_point_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("cube point must be an array of rationals");
  RatVec coords(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    coords(static_cast<Index>(i)) = rational_from_string(j.at(i).get<std::string>());
  return CubePoint(std::move(coords));
}

json to_json(const DominanceReport& r) {
  json out{{"dominated", r.dominated}, {"cells_checked", r.cells_checked}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  return out;
}

json to_json(const CoverResult& r) {
  json splits = json::array();
  for (const SplitSet& s : r.splits) splits.push_back(to_json(s));
  return json{{"found", true},
              {"size", r.size},
              {"optimal", r.optimal},
              {"splits", std::move(splits)},
              {"family_indices", r.family_indices}};
}

json to_json(const ConstructiveCover& c) {
  json splits = json::array();
  for (const SplitSet& s : c.splits) splits.push_back(to_json(s));
  return json{{"case", case_tag_name(c.tag)}, {"size", c.splits.size()},
              {"splits", std::move(splits)}};
}

json to_json(const ExperimentReport& r, bool with_details, bool with_timing) {
  json params = json::object();
  for (const auto& [key, value] : r.parameters) params[key] = value;

  auto record_to_json = [](const InstanceRecord& rec) {
    json out{{"input", to_json(rec.input)}, {"ok", rec.ok}, {"note", rec.note}};
    json outputs = json::array();
    for (const SplitSet& s : rec.output) outputs.push_back(to_json(s));
    out["output"] = std::move(outputs);
    if (rec.witness) out["witness"] = to_json(*rec.witness);
    return out;
  };

  json failures = json::array();
  for (const InstanceRecord& rec : r.details)
    if (!rec.ok) failures.push_back(record_to_json(rec));

  json out{{"experiment", r.name},
           {"parameters", std::move(params)},
           {"verdict", r.pass ? "Pass" : "Fail"},
           {"instances", r.instances},
           {"failures", std::move(failures)}};
  if (with_details) {
    json details = json::array();
    for (const InstanceRecord& rec : r.details) details.push_back(record_to_json(rec));
    out["details"] = std::move(details);
  }
  if (with_timing) out["seconds"] = r.seconds;
  return out;
}

}  // namespace splitcover
