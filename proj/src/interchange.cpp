/*
 * Copyright (C) 2026 mvl contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mvl/interchange.hpp"

#include <fstream>
#include <sstream>

#include "mvl/error.hpp"

namespace mvl {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what(), e.byte);
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path + "'");
}

namespace {

// Every accessor failure becomes a DomainError naming the field.
template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw DomainError(std::string("field '") + key + "' has the wrong type");
  }
}

ValueSet value_set_from(const Json& j, int value_count) {
  if (!j.is_array()) throw DomainError("value set must be an index list");
  ValueSet s = 0;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw DomainError("value index must be an integer");
    const int v = x.get<int>();
    if (v < 0 || v >= value_count) throw DomainError("value index " + std::to_string(v) + " outside V");
    s |= singleton(v);
  }
  return s;
}

Json index_list(const BitSet& b) {
  Json a = Json::array();
  for (auto i : b.indices()) a.push_back(i);
  return a;
}

Json int_list(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

Json signature_json(const Signature& sig) {
  Json j = Json::object();
  for (const auto& c : sig.connectives()) j[c.name] = c.arity;
  return j;
}

void collect_signature(const Formula& f, Signature& sig) {
  if (f.is_atom()) return;
  if (!sig.contains(f.connective())) sig.add(f.connective());
  for (const auto& a : f.args()) collect_signature(a, sig);
}

}  // namespace

Json value_set_json(ValueSet s) {
  Json a = Json::array();
  for (int x : members_of(s)) a.push_back(x);
  return a;
}

Json relation_to_json(const IntersectiveRelation& r) {
  Json members = Json::array();
  for (const auto& m : r.members) members.push_back(Json{{"dp", value_set_json(m.dp)}, {"dc", value_set_json(m.dc)}});
  return Json{{"members", members}};
}

IntersectiveRelation relation_from_json(const Json& j, int value_count) {
  IntersectiveRelation r;
  r.value_count = value_count;
  for (const auto& m : field<Json>(j, "members")) {
    MixedRelation mr;
    mr.dp = value_set_from(field<Json>(m, "dp"), value_count);
    mr.dc = value_set_from(field<Json>(m, "dc"), value_count);
    r.members.push_back(mr);
  }
  return r;
}

Json semantics_to_json(const Semantics& s) {
  Json j;
  j["values"] = s.values.labels;
  Json labels = Json::object();
  if (s.values.one) labels["one"] = *s.values.one;
  if (s.values.zero) labels["zero"] = *s.values.zero;
  if (s.values.hash_p) labels["hash_p"] = *s.values.hash_p;
  if (s.values.hash_c) labels["hash_c"] = *s.values.hash_c;
  j["labels"] = labels;
  Json conns = Json::object();
  for (const auto& c : s.signature.connectives()) {
    Json cj{{"arity", c.arity}};
    if (const auto* tf = s.truth_function(c.name)) cj["table"] = tf->table;
    conns[c.name] = cj;
  }
  j["connectives"] = conns;
  j["relation"] = relation_to_json(s.relation);
  if (s.valuational) {
    j["worlds"] = "all-valuations";
  } else {
    Json ws = Json::array();
    for (const auto& w : s.worlds) {
      Json wj = Json::object();
      for (const auto& [k, v] : w.values) wj[k] = v;
      ws.push_back(wj);
    }
    j["worlds"] = ws;
  }
  return j;
}

Semantics semantics_from_json(const Json& j) {
  Semantics s;
  s.values.labels = field<std::vector<std::string>>(j, "values");
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_object()) throw DomainError("field 'labels' must be an object");
    for (const auto& [key, slot] : {std::pair{"one", &s.values.one}, std::pair{"zero", &s.values.zero},
                                    std::pair{"hash_p", &s.values.hash_p}, std::pair{"hash_c", &s.values.hash_c}})
      if (l.contains(key)) *slot = field<int>(l, key);
  }
  const int k = s.values.size();
  if (j.contains("connectives")) {
    const Json& cs = j.at("connectives");
    if (!cs.is_object()) throw DomainError("field 'connectives' must be an object");
    for (const auto& [name, cj] : cs.items()) {
      ConnectiveSig sig{name, field<int>(cj, "arity")};
      if (sig.arity < 0) throw DomainError("negative arity for '" + name + "'");
      s.signature.add(sig);
      if (cj.contains("table")) s.truth_functions[name] = TruthFunction{sig, k, field<std::vector<int>>(cj, "table")};
    }
  }
  s.relation = relation_from_json(field<Json>(j, "relation"), k);
  const Json& ws = field<Json>(j, "worlds");
  if (ws.is_string()) {
    if (ws.get<std::string>() != "all-valuations") throw DomainError("worlds must be \"all-valuations\" or a list");
    s.valuational = true;
  } else if (ws.is_array()) {
    for (const auto& wj : ws) {
      if (!wj.is_object()) throw DomainError("each world must be an object");
      World w;
      for (const auto& [key, v] : wj.items()) {
        if (!v.is_number_integer()) throw DomainError("world value for '" + key + "' must be an integer");
        w.values[key] = v.get<int>();
      }
      s.worlds.push_back(std::move(w));
    }
  } else {
    throw DomainError("worlds must be \"all-valuations\" or a list");
  }
  s.validate();
  return s;
}

Json table_to_json(const ArgumentTable& t) {
  Json j;
  Json fs = Json::array();
  Signature sig;
  for (const auto& f : t.formulas()) {
    fs.push_back(f.text());
    collect_signature(f, sig);
  }
  j["formulas"] = fs;
  j["signature"] = signature_json(sig);
  if (t.monotone_presentation()) {
    j["presentation"] = "maximal-failing";
    Json boxes = Json::array();
    for (const auto& b : t.maximal_failing())
      boxes.push_back(Json{{"premises", index_list(b.p)}, {"conclusions", index_list(b.n)}});
    j["failing"] = boxes;
  } else {
    j["presentation"] = "explicit";
    std::string bits;
    for (auto v : t.materialize()) bits.push_back(v ? '1' : '0');
    j["holds"] = bits;
  }
  return j;
}

ArgumentTable table_from_json(const Json& j) {
  Signature sig;
  if (j.contains("signature")) {
    const Json& sj = j.at("signature");
    if (!sj.is_object()) throw DomainError("field 'signature' must be an object");
    for (const auto& [name, a] : sj.items()) {
      if (!a.is_number_integer() || a.get<int>() < 0) throw DomainError("bad arity for '" + name + "'");
      sig.add({name, a.get<int>()});
    }
  }
  std::vector<Formula> fs;
  for (const auto& t : field<std::vector<std::string>>(j, "formulas")) fs.push_back(parse_formula(t, sig));
  const std::size_t n = fs.size();
  const auto pres = field<std::string>(j, "presentation");
  if (pres == "maximal-failing") {
    std::vector<Box> boxes;
    for (const auto& bj : field<Json>(j, "failing")) {
      Box b{BitSet(n), BitSet(n)};
      for (int i : field<std::vector<int>>(bj, "premises")) {
        if (i < 0 || static_cast<std::size_t>(i) >= n) throw DomainError("formula index out of range");
        b.p.set(i);
      }
      for (int i : field<std::vector<int>>(bj, "conclusions")) {
        if (i < 0 || static_cast<std::size_t>(i) >= n) throw DomainError("formula index out of range");
        b.n.set(i);
      }
      boxes.push_back(std::move(b));
    }
    return ArgumentTable::from_boxes(std::move(fs), std::move(boxes));
  }
  if (pres == "explicit") {
    const auto bits = field<std::string>(j, "holds");
    std::vector<std::uint8_t> h;
    for (char c : bits) {
      if (c != '0' && c != '1') throw DomainError("'holds' must be a 0/1 string");
      h.push_back(c == '1');
    }
    return ArgumentTable::from_verdicts(std::move(fs), std::move(h));
  }
  throw DomainError("unknown table presentation '" + pres + "'");
}

Json report_to_json(const PropertyReport& r) {
  Json j;
  j["property"] = r.property;
  j["verdict"] = r.holds ? "holds" : "fails";
  j["witness"] = r.witness;
  if (r.fragment_relative) j["fragment_relative"] = true;
  if (!r.parts.empty()) {
    Json parts = Json::array();
    for (const auto& p : r.parts) parts.push_back(report_to_json(p));
    j["parts"] = parts;
  }
  return j;
}

Json agreement_to_json(const AgreementResult& a, const std::vector<Formula>& formulas) {
  Json j;
  j["arguments"] = a.arguments;
  j["evaluations"] = a.evaluations;
  j["disagreements"] = a.disagreements;
  j["first"] = a.first ? Json(format_argument(*a.first, formulas, true)) : Json(nullptr);
  return j;
}

Json reduction_to_json(const ReductionResult& r) {
  Json j;
  j["provenance"] = r.provenance;
  j["semantics"] = semantics_to_json(r.semantics);
  Json maps = Json::array();
  for (const auto& m : r.value_maps) maps.push_back(int_list(m));
  j["value_map"] = maps;
  Json used = Json::array();
  for (int v : members_of(r.used_values)) used.push_back(r.semantics.values.labels[v]);
  j["used_values"] = used;
  Json origin = Json::array();
  for (const auto& [l, w] : r.origin) origin.push_back(Json::array({l, w}));
  j["origin"] = origin;
  j["dropped"] = r.dropped;
  if (r.agreement) {
    Json a;
    a["arguments"] = r.agreement->arguments;
    a["evaluations"] = r.agreement->evaluations;
    a["disagreements"] = r.agreement->disagreements;
    j["agreement"] = a;
  }
  return j;
}

Json certificate_to_json(const RankCertificate& c) {
  Json j;
  j["rank"] = c.rank ? Json(*c.rank) : Json(nullptr);
  j["lower_bound"] = c.lower_bound;
  j["members"] = c.members;
  j["witness"] = c.witness ? semantics_to_json(*c.witness) : Json(nullptr);
  j["refutations"] = c.refutations;
  j["proof"] = Json{{"kind", c.proof == LowerBoundProof::exhausted_search ? "exhausted-search" : "constraint-table"},
                    {"steps", c.steps}};
  return j;
}

Json builtin_to_json(const BuiltinSpec& b) {
  Json j;
  j["name"] = b.name;
  j["description"] = b.description;
  const Json sem = semantics_to_json(b.semantics);
  for (const auto& [k, v] : sem.items()) j[k] = v;
  Json props = Json::object();
  for (const auto& e : b.expected_properties) props[e.property] = e.holds;
  Json expected;
  expected["properties"] = props;
  expected["rank"] = b.expected_rank;
  expected["rank_basis"] = b.rank_basis;
  if (b.expected_tf_rank) expected["truth_functional_rank"] = *b.expected_tf_rank;
  j["expected"] = expected;
  if (b.supervaluation) {
    Json sv;
    sv["table"] = table_to_json(b.supervaluation->table);
    Json traces = Json::array();
    for (const auto& t : b.supervaluation->traces) {
      Json tr = Json::array();
      for (const auto& [g, d] : t.trace) tr.push_back(Json::array({value_set_json(g), value_set_json(d)}));
      traces.push_back(Json{{"premises", int_list(t.argument.premises)},
                            {"conclusions", int_list(t.argument.conclusions)},
                            {"trace", tr}});
    }
    sv["traces"] = traces;
    j["supervaluation"] = sv;
  }
  return j;
}

}  // namespace mvl
