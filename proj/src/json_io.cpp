#include "faithful/json_io.hpp"

#include "faithful/error.hpp"

namespace faithful {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("json: missing field \"") + key + "\"");
  return j.at(key);
}

Json set_json(const std::set<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(to_json(v));
  return out;
}

}  // namespace

Json to_json(const Integer& v) { return v.get_str(); }

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  throw PreconditionError("json: expected an integer or a decimal string, got " + j.dump());
}

Json to_json(const Rational& v) {
  Json out;
  out["num"] = to_json(v.num());
  out["den"] = to_json(v.den());
  return out;
}

Rational rational_from_json(const Json& j) {
  const Integer den = integer_from_json(field(j, "den"));
  if (den == 0) throw PreconditionError("json: zero denominator");
  return Rational(integer_from_json(field(j, "num")), den);
}

Json to_json(const Decomposition& d) {
  Json out;
  out["target"] = to_json(d.target);
  Json terms = Json::array();
  for (const Term& t : d.terms) {
    Json term;
    term["num"] = to_json(t.num);
    term["den"] = to_json(t.den);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d;
  d.target = rational_from_json(field(j, "target"));
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw PreconditionError("json: \"terms\" must be an array");
  for (const Json& t : terms) {
    Term term{integer_from_json(field(t, "num")), integer_from_json(field(t, "den"))};
    if (term.den == 0) throw PreconditionError("json: zero denominator in a term");
    d.terms.push_back(std::move(term));
  }
  return d;
}

Json to_json(const FaithfulnessReport& r) {
  Json out;
  out["faithful"] = r.faithful;
  out["method"] = to_string(r.method);
  out["combos_examined"] = r.combos_examined;
  if (r.violation) {
    Json v;
    Json coeffs = Json::array();
    for (const Integer& c : r.violation->coefficients) coeffs.push_back(to_json(c));
    v["coefficients"] = std::move(coeffs);
    v["value"] = to_json(r.violation->value);
    out["violation"] = std::move(v);
  } else {
    out["violation"] = nullptr;
  }
  return out;
}

Json to_json(const ConstructionTrace& t) {
  Json out;
  Json primes = Json::array();
  for (const Integer& p : t.primes_used) primes.push_back(to_json(p));
  out["primes_used"] = std::move(primes);
  Json forbidden = Json::array();
  for (const Integer& f : t.forbidden) forbidden.push_back(to_json(f));
  out["forbidden"] = std::move(forbidden);
  if (t.bezout) {
    Json b;
    b["y"] = to_json(t.bezout->y);
    b["x"] = to_json(t.bezout->x);
    out["bezout"] = std::move(b);
  } else {
    out["bezout"] = nullptr;
  }
  out["progression_steps"] = t.progression_steps;
  out["branch"] = t.branch ? Json(to_string(*t.branch)) : Json(nullptr);
  out["r"] = t.r ? to_json(*t.r) : Json(nullptr);
  out["applied_scaling"] = t.applied_scaling ? to_json(*t.applied_scaling) : Json(nullptr);
  out["special_case"] = t.special_case ? Json(*t.special_case) : Json(nullptr);
  return out;
}

Json to_json(const LengthResult& r) {
  Json out;
  out["length"] = r.length;
  out["found"] = r.found ? to_json(*r.found) : Json(nullptr);
  out["exhausted"] = r.exhausted;
  out["nodes"] = r.nodes;
  out["candidates"] = r.candidates;
  return out;
}

Json to_json(const SearchResult& r) {
  Json out;
  Json lengths = Json::array();
  for (const LengthResult& l : r.lengths) lengths.push_back(to_json(l));
  out["lengths"] = std::move(lengths);
  out["exhausted"] = r.all_exhausted();
  return out;
}

Json to_json(const Prop6Instance& inst) {
  Json out;
  out["m"] = to_json(inst.m);
  out["n"] = to_json(inst.n);
  out["y2"] = to_json(inst.y2);
  out["y"] = to_json(inst.y);
  out["x"] = to_json(inst.x);
  out["decomposition"] = to_json(inst.decomposition);
  out["condition"] = inst.condition;
  out["report"] = to_json(inst.oracle);
  return out;
}

Json to_json(const Prop6ScanResult& r) {
  Json out;
  out["instances_checked"] = r.instances_checked;
  Json list = Json::array();
  for (const Prop6Instance& inst : r.discrepancies) list.push_back(to_json(inst));
  out["discrepancies"] = std::move(list);
  return out;
}

Json to_json(const PartitionCheck& c) {
  Json out;
  Json blocks = Json::array();
  for (const Decomposition& b : c.blocks.blocks) blocks.push_back(to_json(b));
  out["blocks"] = std::move(blocks);
  out["combined"] = to_json(c.blocks.combined);
  out["s"] = set_json(c.s);
  out["t"] = set_json(c.t);
  out["s_contains_t"] = c.s_contains_t;
  out["equal"] = c.equal;
  return out;
}

}  // namespace faithful
