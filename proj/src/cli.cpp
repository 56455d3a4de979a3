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

#include "mvl/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "mvl/decompose.hpp"
#include "mvl/grouping.hpp"
#include "mvl/interchange.hpp"
#include "mvl/kernels.hpp"
#include "mvl/logiclib.hpp"
#include "mvl/rank.hpp"
#include "mvl/structure.hpp"

namespace mvl {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage: return kExitUsage;
    case ErrorKind::io: return kExitIo;
    case ErrorKind::parse: return kExitParse;
    case ErrorKind::guard: return kExitGuard;
    case ErrorKind::precondition: return kExitPrecondition;
    case ErrorKind::domain: return kExitDomain;
  }
  return kExitInternal;
}

namespace {

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

// ---------------------------------------------------------------- text layout

std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string cell = c < r.size() ? r[c] : "";
      s += cell;
      if (c + 1 < width.size()) s += std::string(width[c] - cell.size() + 2, ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + "\n";
  };
  std::string out = line(header);
  std::string rule;
  for (std::size_t c = 0; c < width.size(); ++c) rule += std::string(width[c], '-') + (c + 1 < width.size() ? "  " : "");
  out += rule + "\n";
  for (const auto& r : rows) out += line(r);
  return out;
}

std::string member_class(const MixedRelation& m) {
  if (m.dp == m.dc) return "pure";
  if (subset_of(m.dp, m.dc)) return "p-mixed";
  if (subset_of(m.dc, m.dp)) return "q-mixed";
  return "mixed";
}

std::string render_relation(const IntersectiveRelation& r, const ValueSystem& v) {
  if (r.members.empty()) return "relation: universal\n";
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < r.members.size(); ++i)
    rows.push_back({std::to_string(i + 1), v.format(r.members[i].dp), v.format(r.members[i].dc),
                    member_class(r.members[i])});
  return render_table({"member", "Dp", "Dc", "class"}, rows);
}

std::string render_truth_function(const TruthFunction& tf, const ValueSystem& v) {
  const auto& L = v.labels;
  const std::string& name = tf.connective.name;
  if (tf.connective.arity == 0) return name + " = " + L[tf.table[0]] + "\n";
  if (tf.connective.arity == 1) {
    std::vector<std::vector<std::string>> rows;
    for (int x = 0; x < v.size(); ++x) rows.push_back({L[x], L[tf.table[x]]});
    return render_table({"x", name + "(x)"}, rows);
  }
  if (tf.connective.arity == 2) {
    std::vector<std::string> header{name};
    for (int y = 0; y < v.size(); ++y) header.push_back(L[y]);
    std::vector<std::vector<std::string>> rows;
    for (int x = 0; x < v.size(); ++x) {
      std::vector<std::string> row{L[x]};
      for (int y = 0; y < v.size(); ++y) row.push_back(L[tf.table[x * v.size() + y]]);
      rows.push_back(row);
    }
    return render_table(header, rows);
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 0; r < tf.row_count(); ++r) {
    std::string args;
    for (int a : decode_row(r, tf.connective.arity, v.size())) args += (args.empty() ? "" : ", ") + L[a];
    rows.push_back({args, L[tf.table[r]]});
  }
  return render_table({"arguments", name}, rows);
}

std::string render_semantics(const Semantics& s) {
  std::string out = "values: " + s.values.format(s.values.all()) + "\n\n";
  out += render_relation(s.relation, s.values);
  for (const auto& c : s.signature.connectives())
    if (const auto* tf = s.truth_function(c.name)) out += "\n" + render_truth_function(*tf, s.values);
  out += "\nworlds: ";
  out += s.valuational ? "all valuations\n" : std::to_string(s.worlds.size()) + " explicit\n";
  return out;
}

std::string render_report(const PropertyReport& r, int indent = 0) {
  std::string pad(indent, ' ');
  std::string out = pad + r.property + ": " + (r.holds ? "holds" : "fails");
  if (r.fragment_relative) out += " (fragment-relative)";
  out += "\n";
  if (r.parts.empty())
    for (const auto& w : r.witness) out += pad + "  " + w + "\n";
  for (const auto& p : r.parts) out += render_report(p, indent + 2);
  return out;
}

std::string render_reports(const std::vector<PropertyReport>& rs) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : rs) {
    std::string w;
    for (const auto& line : r.witness) w += (w.empty() ? "" : "; ") + line;
    rows.push_back({r.property, r.holds ? "holds" : "fails", r.fragment_relative ? "fragment" : "", w});
  }
  return render_table({"property", "verdict", "scope", "witness"}, rows);
}

std::string render_certificate(const RankCertificate& c) {
  const std::string none = c.proof == LowerBoundProof::constraint_table ? "not computed (lower bound only)"
                                                                       : "not found within bounds";
  std::string out = "rank: " + (c.rank ? std::to_string(*c.rank) : none) + "\n";
  out += "lower bound: " + std::to_string(c.lower_bound) + "\n";
  out += "members: " + std::to_string(c.members) + "\n";
  out += std::string("proof: ") + (c.proof == LowerBoundProof::exhausted_search ? "exhausted-search" : "constraint-table") + "\n";
  if (!c.refutations.empty()) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < c.refutations.size(); ++k)
      rows.push_back({std::to_string(k + 1), std::to_string(c.refutations[k])});
    out += "\n" + render_table({"values", "refuted"}, rows);
  }
  if (!c.steps.empty()) {
    out += "\nsteps:\n";
    for (const auto& s : c.steps) out += "  " + s + "\n";
  }
  if (c.witness) out += "\nwitness\n" + render_semantics(*c.witness);
  return out;
}

// ---------------------------------------------------------------- inputs

struct Logic {
  Semantics semantics;
  std::optional<BuiltinSpec> spec;
};

Logic load_logic(const std::string& ref) {
  if (ref.empty()) throw UsageError("--logic is required");
  if (ref.rfind("builtin:", 0) == 0) {
    BuiltinSpec b = builtin(ref.substr(8));
    Logic l{b.semantics, std::move(b)};
    return l;
  }
  return {semantics_from_json(load_json_file(ref)), std::nullopt};
}

Signature fragment_signature(const RunConfig& c, const Semantics& s) {
  return c.connectives.empty() ? s.signature : s.signature.restrict_to(c.connectives);
}

Fragment make_fragment(const RunConfig& c, const Semantics& s) {
  for (const auto& a : c.atoms)
    if (!is_atom_name(a)) throw UsageError("'" + a + "' is not an atom name");
  return generate_fragment(c.atoms, fragment_signature(c, s), c.depth, c.guard_formulas);
}

std::vector<Formula> parse_all(const std::vector<std::string>& texts, const Signature& sig) {
  std::vector<Formula> out;
  for (const auto& t : texts) out.push_back(parse_formula(t, sig));
  return out;
}

// Table from --table, from --formulas under --logic, or from the builtin's stored verdicts.
ArgumentTable load_table(const RunConfig& c, std::optional<Logic>& logic) {
  if (!c.table.empty()) return table_from_json(load_json_file(c.table));
  logic = load_logic(c.logic);
  if (!c.formulas.empty()) {
    auto fs = parse_all(c.formulas, logic->semantics.signature);
    if (fs.size() > c.guard_formulas) throw GuardError("formula list exceeds --guard-formulas");
    return table_from_semantics(logic->semantics, fs);
  }
  if (logic->spec && logic->spec->supervaluation) return logic->spec->supervaluation->table;
  throw UsageError("give --table, or --formulas with --logic");
}

int verdict(bool holds) { return holds ? kExitHolds : kExitFails; }

void emit(std::ostream& out, const RunConfig& c, const Json& j, const std::string& text) {
  if (c.format == OutputFormat::json)
    out << dump(j);
  else
    out << text;
}

// ---------------------------------------------------------------- commands

int cmd_parse(const RunConfig& c, std::ostream& out) {
  const Signature sig = c.logic.empty() ? standard_signature() : load_logic(c.logic).semantics.signature;
  if (c.formulas.empty()) throw UsageError("parse needs at least one formula");
  Json arr = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& f : parse_all(c.formulas, sig)) {
    std::string atoms;
    Json aj = Json::array();
    for (const auto& a : f.atoms()) {
      atoms += (atoms.empty() ? "" : ",") + a;
      aj.push_back(a);
    }
    arr.push_back(Json{{"formula", f.text()}, {"depth", f.depth()}, {"size", f.size()}, {"atoms", aj}});
    rows.push_back({f.text(), std::to_string(f.depth()), std::to_string(f.size()), atoms});
  }
  emit(out, c, Json{{"formulas", arr}}, render_table({"formula", "depth", "size", "atoms"}, rows));
  return kExitHolds;
}

int cmd_eval(const RunConfig& c, std::ostream& out) {
  const Semantics s = load_logic(c.logic).semantics;
  if (c.formulas.empty()) throw UsageError("eval needs at least one formula");
  const auto fs = parse_all(c.formulas, s.signature);
  std::vector<World> worlds;
  std::vector<std::string> atoms;
  if (!c.world.empty()) {
    World w;
    for (const auto& item : c.world)
      for (const auto& kv : split(item, ',')) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--world expects atom=value, got '" + kv + "'");
        const std::string atom = kv.substr(0, eq), val = kv.substr(eq + 1);
        auto idx = s.values.find(val);
        if (!idx) throw DomainError("unknown value '" + val + "'");
        w.values[atom] = *idx;
        atoms.push_back(atom);
      }
    worlds.push_back(std::move(w));
  } else if (s.valuational) {
    std::set<std::string> as;
    for (const auto& f : fs) f.collect_atoms(as);
    atoms.assign(as.begin(), as.end());
    worlds = s.worlds_over(atoms);
  } else {
    worlds = s.worlds;
    std::set<std::string> as;
    for (const auto& f : fs) f.collect_atoms(as);
    atoms.assign(as.begin(), as.end());
  }
  std::vector<std::string> header{"world"};
  header.insert(header.end(), atoms.begin(), atoms.end());
  for (const auto& f : fs) header.push_back(f.text());
  std::vector<std::vector<std::string>> rows;
  Json wj = Json::array();
  for (std::size_t w = 0; w < worlds.size(); ++w) {
    std::vector<std::string> row{std::to_string(w)};
    Json vals = Json::object();
    for (const auto& a : atoms) {
      auto it = worlds[w].values.find(a);
      row.push_back(it == worlds[w].values.end() ? "-" : s.values.labels[it->second]);
    }
    for (const auto& f : fs) {
      const int v = evaluate(s, f, worlds[w]);
      row.push_back(s.values.labels[v]);
      vals[f.text()] = s.values.labels[v];
    }
    rows.push_back(row);
    wj.push_back(vals);
  }
  emit(out, c, Json{{"worlds", wj}}, render_table(header, rows));
  return kExitHolds;
}

std::vector<std::string> property_names(const RunConfig& c) {
  static const std::vector<std::string> all{"monotonic", "reflexive", "transitive", "permeable"};
  std::vector<std::string> out;
  for (const auto& p : c.properties) {
    if (p == "all") {
      out.insert(out.end(), all.begin(), all.end());
    } else if (p == "monotonic" || p == "reflexive" || p == "transitive" || p == "cut-transitive" ||
               p == "permeable" || p == "substitution") {
      out.push_back(p);
    } else {
      throw UsageError("unknown property '" + p + "'");
    }
  }
  return out;
}

std::vector<PropertyReport> run_checks(const RunConfig& c, Logic& logic, const std::string& level_in) {
  const auto names = property_names(c);
  std::string level = level_in;
  const bool stored = logic.spec && logic.spec->supervaluation;
  if (level == "auto") level = stored ? "fragment" : "truth";
  std::vector<PropertyReport> out;
  if (level == "truth") {
    const RelationTable t = tabulate(logic.semantics.relation);
    const ValueSystem* v = &logic.semantics.values;
    for (const auto& n : names) {
      PropertyReport r;
      if (n == "monotonic") r = is_monotonic(t, v);
      else if (n == "reflexive") r = is_reflexive(t, v);
      else if (n == "transitive") r = is_value_transitive(t, v);
      else if (n == "cut-transitive") r = is_cut_transitive(t, v);
      else if (n == "permeable") r = is_permeable(t, v);
      else r = check_substitution_invariance(logic.semantics, make_fragment(c, logic.semantics), 1, c.guard_formulas);
      r.property = n;
      out.push_back(std::move(r));
    }
    return out;
  }
  if (level != "fragment") throw UsageError("--level must be auto, truth or fragment");
  ArgumentTable table = stored && c.formulas.empty()
                            ? logic.spec->supervaluation->table
                            : c.formulas.empty()
                                  ? table_from_semantics(logic.semantics, make_fragment(c, logic.semantics).formulas)
                                  : table_from_semantics(logic.semantics, parse_all(c.formulas, logic.semantics.signature));
  for (const auto& n : names) {
    PropertyReport r;
    if (n == "monotonic") r = is_monotonic(table);
    else if (n == "reflexive") r = is_reflexive(table);
    else if (n == "transitive") r = is_transitive(table);
    else if (n == "cut-transitive") r = is_cut_transitive(table);
    else if (n == "permeable") r = is_permeable(table);
    else r = check_substitution_invariance(logic.semantics, make_fragment(c, logic.semantics), 1, c.guard_formulas);
    r.property = n;
    out.push_back(std::move(r));
  }
  return out;
}

int cmd_check(const RunConfig& c, std::ostream& out) {
  std::vector<PropertyReport> reports;
  if (!c.table.empty()) {
    const ArgumentTable t = table_from_json(load_json_file(c.table));
    for (const auto& n : property_names(c)) {
      PropertyReport r;
      if (n == "monotonic") r = is_monotonic(t);
      else if (n == "reflexive") r = is_reflexive(t);
      else if (n == "transitive") r = is_transitive(t);
      else if (n == "cut-transitive") r = is_cut_transitive(t);
      else if (n == "permeable") r = is_permeable(t);
      else throw UsageError("substitution needs --logic");
      r.property = n;
      reports.push_back(std::move(r));
    }
  } else {
    Logic logic = load_logic(c.logic);
    reports = run_checks(c, logic, c.level);
  }
  Json arr = Json::array();
  bool all = true;
  std::string text;
  for (const auto& r : reports) {
    arr.push_back(report_to_json(r));
    all = all && r.holds;
    text += render_report(r);
  }
  emit(out, c, Json{{"reports", arr}}, text);
  return verdict(all);
}

struct Decomposition {
  std::string kind;
  IntersectiveRelation relation;
  bool reconstructs = false;
};

Decomposition decompose_logic(const RunConfig& c, const Semantics& s) {
  const RelationTable t = tabulate(s.relation);
  const ValueSystem* v = &s.values;
  std::string kind = c.kind;
  if (kind == "auto") {
    const bool refl = is_reflexive(t, v).holds, trans = is_value_transitive(t, v).holds;
    kind = refl && trans ? "tarskian" : refl ? "reflexive" : trans ? "transitive" : "monotone";
  }
  Decomposition d;
  d.kind = kind;
  if (kind == "monotone") d.relation = decompose_monotone(t, true, v);
  else if (kind == "reflexive") d.relation = decompose_reflexive(t, v);
  else if (kind == "transitive") d.relation = decompose_transitive(t, v);
  else if (kind == "tarskian") d.relation = decompose_tarskian(t, v);
  else throw UsageError("--kind must be auto, monotone, reflexive, transitive or tarskian");
  if (c.minimize) d.relation = minimize_intersection(d.relation);
  d.reconstructs = tabulate(d.relation) == t;
  return d;
}

Json decomposition_json(const Decomposition& d) {
  const Classification cl = classify_relation(d.relation);
  Json j;
  j["kind"] = d.kind;
  j["relation"] = relation_to_json(d.relation);
  Json classes = Json::array();
  for (const auto& m : d.relation.members) classes.push_back(member_class(m));
  j["member_classes"] = classes;
  j["t_polarized"] = cl.t_polarized;
  j["f_polarized"] = cl.f_polarized;
  j["reconstructs"] = d.reconstructs;
  return j;
}

std::string decomposition_text(const Decomposition& d, const ValueSystem& v) {
  const Classification cl = classify_relation(d.relation);
  std::string out = "decomposition: " + d.kind + "\n\n" + render_relation(d.relation, v);
  out += "\nT-polarized: " + std::string(cl.t_polarized ? "yes" : "no") +
         "\nF-polarized: " + (cl.f_polarized ? "yes" : "no") +
         "\nreconstructs: " + (d.reconstructs ? "yes" : "no") + "\n";
  return out;
}

int cmd_decompose(const RunConfig& c, std::ostream& out) {
  const Semantics s = load_logic(c.logic).semantics;
  const Decomposition d = decompose_logic(c, s);
  emit(out, c, decomposition_json(d), decomposition_text(d, s.values));
  return verdict(d.reconstructs);
}

std::map<std::string, RegularityRules> rules_for(const Semantics& s, const Fragment& frag, const Fragment& reg) {
  const auto standard = standard_rules();
  std::map<std::string, RegularityRules> rules;
  for (const auto& conn : frag.signature.connectives()) {
    auto it = standard.find(conn.name);
    if (it != standard.end() && verify_regularity(s, conn, it->second, reg).holds) {
      rules[conn.name] = it->second;
      continue;
    }
    auto found = search_regularity(s, conn, reg);
    if (!found) throw PreconditionError("'" + conn.name + "' is not regular on the checked fragment");
    rules[conn.name] = *found;
  }
  return rules;
}

ReductionResult reduce_logic(const RunConfig& c, const std::string& method, std::optional<Logic>& logic) {
  if (method == "ss" || method == "tf") {
    if (!logic) logic = load_logic(c.logic);
    const Semantics& s = logic->semantics;
    const Fragment frag = make_fragment(c, s);
    if (method == "ss") return scott_suszko(s, frag, c.max_side, c.guard_worlds);
    TfOptions opt;
    opt.max_side = c.max_side;
    opt.world_guard = c.guard_worlds;
    const Fragment reg = generate_fragment(frag.atoms, frag.signature, std::min(1, frag.depth), c.guard_formulas);
    opt.regularity_fragment = reg;
    return tf_scott_suszko(s, rules_for(s, frag, reg), frag, opt);
  }
  if (method == "direct") {
    ArgumentTable table = [&] {
      if (!c.table.empty() || !c.formulas.empty() || c.logic.empty()) return load_table(c, logic);
      logic = load_logic(c.logic);
      if (logic->spec && logic->spec->supervaluation) return logic->spec->supervaluation->table;
      return table_from_semantics(logic->semantics, make_fragment(c, logic->semantics).formulas);
    }();
    const auto mode = table.size() <= static_cast<std::size_t>(kMaxExplicitFormulas) ? DirectWorlds::all_failing
                                                                                     : DirectWorlds::maximal_failing;
    ReductionResult r;
    r.provenance = "direct-scott-suszko";
    r.semantics = direct_scott_suszko(table, mode, c.guard_worlds);
    const ValueMatrix red = evaluate_formulas(r.semantics, table.formulas());
    for (std::uint8_t v : red.data) r.used_values |= singleton(v);
    r.agreement = compare_verdicts(BoxModel::from_boxes(table.size(), table.maximal_failing()),
                                   BoxModel::from_values(red, r.semantics.relation), c.max_side);
    return r;
  }
  throw UsageError("--method must be ss, direct or tf");
}

std::string reduction_text(const ReductionResult& r) {
  std::string out = "provenance: " + r.provenance + "\n";
  std::string used;
  for (int v : members_of(r.used_values)) used += (used.empty() ? "" : ", ") + r.semantics.values.labels[v];
  out += "used values: {" + used + "} (" + std::to_string(popcount(r.used_values)) + ")\n";
  if (!r.dropped.empty()) out += "dropped worlds: " + std::to_string(r.dropped.size()) + "\n";
  if (r.agreement)
    out += "agreement: " + std::to_string(r.agreement->arguments) + " arguments, " +
           std::to_string(r.agreement->disagreements) + " disagreements\n";
  if (!r.value_maps.empty()) {
    std::vector<std::string> header{"member"};
    for (std::size_t v = 0; v < r.value_maps[0].size(); ++v) header.push_back("t(" + std::to_string(v) + ")");
    std::vector<std::vector<std::string>> rows;
    for (std::size_t m = 0; m < r.value_maps.size(); ++m) {
      std::vector<std::string> row{std::to_string(m + 1)};
      for (int x : r.value_maps[m]) row.push_back(r.semantics.values.labels[x]);
      rows.push_back(row);
    }
    out += "\n" + render_table(header, rows);
  }
  return out + "\n" + render_semantics(r.semantics);
}

int cmd_reduce(const RunConfig& c, std::ostream& out) {
  if (c.method.empty()) throw UsageError("reduce needs --method ss|direct|tf");
  std::optional<Logic> logic;
  const ReductionResult r = reduce_logic(c, c.method, logic);
  emit(out, c, reduction_to_json(r), reduction_text(r));
  return verdict(!r.agreement || r.agreement->agree());
}

int cmd_group(const RunConfig& c, std::ostream& out) {
  const Semantics s = load_logic(c.logic).semantics;
  const Partition p = canonical_equivalence(tabulate(s.relation));
  const GroupingMap rho = GroupingMap::from_partition(p, s.values.size());
  std::vector<PropertyReport> reports{is_relation_g_reduction(tabulate(s.relation), rho)};
  reports.back().property = "relation";
  for (const auto& [name, tf] : s.truth_functions) {
    reports.push_back(is_c_g_reduction(tf, rho));
    reports.back().property = name;
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const PropertyReport& r) { return r.holds; });
  Json pj = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Json cls = Json::array();
    ValueSet set = 0;
    for (int x : p[i]) {
      cls.push_back(x);
      set |= singleton(x);
    }
    pj.push_back(cls);
    rows.push_back({std::to_string(i + 1), s.values.format(set)});
  }
  Json j{{"partition", pj}, {"discrete", p.size() == static_cast<std::size_t>(s.values.size())}};
  Json checks = Json::array();
  for (const auto& r : reports) checks.push_back(report_to_json(r));
  j["checks"] = checks;
  std::string text = render_table({"class", "values"}, rows) + "\n" + render_reports(reports);
  if (ok) {
    const Semantics q = quotient_semantics(s, rho);
    j["quotient"] = semantics_to_json(q);
    text += "\nquotient\n" + render_semantics(q);
  }
  emit(out, c, j, text);
  return verdict(ok);
}

int cmd_rank(const RunConfig& c, std::ostream& out) {
  const std::string method = c.method.empty() ? "search" : c.method;
  RankCertificate cert;
  if (method == "tf") {
    const Semantics s = load_logic(c.logic).semantics;
    cert = truth_functional_rank(s, make_fragment(c, s), c.max_values, c.max_side);
  } else {
    std::optional<Logic> logic;
    const ArgumentTable table = load_table(c, logic);
    if (method == "search")
      cert = brute_force_rank(table, c.max_values, c.max_worlds, c.members);
    else if (method == "constraint")
      cert = constraint_lower_bound(table);
    else
      throw UsageError("--method must be search, constraint or tf");
  }
  emit(out, c, certificate_to_json(cert), render_certificate(cert));
  return verdict(method == "constraint" || cert.rank.has_value());
}

int cmd_regularity(const RunConfig& c, std::ostream& out) {
  const Semantics s = load_logic(c.logic).semantics;
  const Fragment frag = make_fragment(c, s);
  std::vector<ConnectiveSig> conns;
  if (c.connective.empty()) {
    conns = frag.signature.connectives();
  } else {
    const auto* found = s.signature.find(c.connective);
    if (!found) throw DomainError("unknown connective '" + c.connective + "'");
    conns.push_back(*found);
  }
  const auto mode = c.canonical ? RegularitySearch::canonical : RegularitySearch::minimal;
  Json arr = Json::array();
  std::vector<std::vector<std::string>> rows;
  bool all = true;
  for (const auto& conn : conns) {
    Json j{{"connective", conn.name}, {"arity", conn.arity}};
    if (conn.arity > kMaxRegularityArity) {
      j["regular"] = nullptr;
      rows.push_back({conn.name, std::to_string(conn.arity), "skipped", "", ""});
      arr.push_back(j);
      continue;
    }
    const auto rules = search_regularity(s, conn, frag, mode);
    all = all && rules.has_value();
    j["regular"] = rules.has_value();
    if (rules) {
      Json pr = Json::array(), cr = Json::array();
      for (const auto& r : rules->premise_rules) pr.push_back(format_rule(r));
      for (const auto& r : rules->conclusion_rules) cr.push_back(format_rule(r));
      j["premise_rules"] = pr;
      j["conclusion_rules"] = cr;
      const TruthFunction tf = canonical_truth_function(*rules, conn.arity, conn.name);
      j["canonical_table"] = tf.table;
      j["strong_kleene"] = is_strong_kleene(tf);
      rows.push_back({conn.name, std::to_string(conn.arity), "yes", format_rules(rules->premise_rules),
                      format_rules(rules->conclusion_rules)});
    } else {
      rows.push_back({conn.name, std::to_string(conn.arity), "no", "", ""});
    }
    arr.push_back(j);
  }
  emit(out, c, Json{{"connectives", arr}},
       render_table({"connective", "arity", "regular", "premise rules", "conclusion rules"}, rows));
  return verdict(all);
}

int cmd_report(const RunConfig& c, std::ostream& out) {
  std::optional<Logic> logic = load_logic(c.logic);
  const auto checks = run_checks(c, *logic, c.level);
  StructuralProfile profile;
  for (const auto& r : checks) {
    if (r.property == "monotonic") profile.monotone = r.holds;
    if (r.property == "reflexive") profile.reflexive = r.holds;
    if (r.property == "transitive") profile.transitive = r.holds;
    if (r.property == "permeable") profile.permeable = r.holds;
  }
  Json j;
  Json cj = Json::array();
  for (const auto& r : checks) cj.push_back(report_to_json(r));
  j["check"] = cj;
  std::string text = "== check\n" + render_reports(checks);

  const Decomposition d = decompose_logic(c, logic->semantics);
  j["decompose"] = decomposition_json(d);
  text += "\n== decompose\n" + decomposition_text(d, logic->semantics.values);

  const ReductionResult r = reduce_logic(c, c.method.empty() ? "ss" : c.method, logic);
  j["reduce"] = reduction_to_json(r);
  text += "\n== reduce\n" + reduction_text(r);

  Json rank;
  text += "\n== rank\n";
  if (profile.monotone && !profile.permeable) {
    rank["profile_rank"] = classify_rank(profile);
    text += "profile rank: " + std::to_string(classify_rank(profile)) + "\n";
  }
  if (!c.formulas.empty()) {
    const ArgumentTable table = table_from_semantics(logic->semantics, parse_all(c.formulas, logic->semantics.signature));
    const RankCertificate cert = brute_force_rank(table, c.max_values, c.max_worlds, c.members);
    rank["certificate"] = certificate_to_json(cert);
    text += render_certificate(cert);
  }
  j["rank"] = rank;
  emit(out, c, j, text);
  return verdict(d.reconstructs && (!r.agreement || r.agreement->agree()));
}

int cmd_export(const RunConfig& c, std::ostream& out) {
  if (c.out_dir.empty()) throw UsageError("export-builtins needs --out DIR");
  std::error_code ec;
  std::filesystem::create_directories(c.out_dir, ec);
  if (ec) throw IoError("cannot create '" + c.out_dir + "': " + ec.message());
  Json files = Json::array();
  std::string text;
  for (const auto& name : builtin_names()) {
    const std::string path = (std::filesystem::path(c.out_dir) / (name + ".json")).string();
    write_text_file(path, dump(builtin_to_json(builtin(name))));
    files.push_back(path);
    text += path + "\n";
  }
  emit(out, c, Json{{"written", files}}, text);
  return kExitHolds;
}

}  // namespace

RunConfig parse_command_line(const std::vector<std::string>& args, std::ostream& out, bool& help) {
  RunConfig cfg;
  help = false;
  CLI::App app{"mvl: finite many-valued semantics and mixed consequence", "mvl"};
  app.require_subcommand(1);

  std::string atoms, formulas, properties, connectives, format = "text";
  std::vector<std::string> positional;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--logic", cfg.logic, "builtin:<name> or a semantics file");
    sub->add_option("--table", cfg.table, "argument table file");
    sub->add_option("--formulas", formulas, "formula list separated by ';'");
    sub->add_option("--fragment", atoms, "atom list separated by ','");
    sub->add_option("--connectives", connectives, "restrict the fragment signature (',' separated)");
    sub->add_option("--fragment-depth", cfg.depth, "fragment depth")->check(CLI::NonNegativeNumber);
    sub->add_option("--guard-formulas", cfg.guard_formulas, "formula guard")->check(CLI::PositiveNumber);
    sub->add_option("--guard-worlds", cfg.guard_worlds, "world guard for reductions")->check(CLI::PositiveNumber);
    sub->add_option("--max-side", cfg.max_side, "formulas per side when comparing verdicts")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("args", positional, "formulas (parse, eval) or key=value settings such as depth=2");
  };

  auto* parse = app.add_subcommand("parse", "parse formulas and print their canonical form");
  common(parse);
  auto* eval = app.add_subcommand("eval", "evaluate formulas at a world or at every world");
  common(eval);
  eval->add_option("--world", cfg.world, "atom=value assignment (repeat for more atoms)")
      ->allow_extra_args(false)
      ->take_all();
  auto* check = app.add_subcommand("check", "check structural properties");
  common(check);
  check->add_option("--properties", properties, "all, or a ',' list of monotonic, reflexive, transitive, "
                                                 "cut-transitive, permeable, substitution");
  check->add_option("--level", cfg.level, "auto, truth or fragment")->check(CLI::IsMember({"auto", "truth", "fragment"}));
  auto* decompose = app.add_subcommand("decompose", "decompose the consequence relation into mixed members");
  common(decompose);
  decompose->add_option("--kind", cfg.kind, "auto, monotone, reflexive, transitive or tarskian");
  decompose->add_flag("--minimize", cfg.minimize, "drop redundant members");
  auto* reduce = app.add_subcommand("reduce", "four-valued reduction");
  common(reduce);
  reduce->add_option("--method", cfg.method, "ss, direct or tf")->check(CLI::IsMember({"ss", "direct", "tf"}));
  auto* group = app.add_subcommand("group", "canonical grouping reduction");
  common(group);
  auto* rank = app.add_subcommand("rank", "rank certificate");
  common(rank);
  rank->add_option("--method", cfg.method, "search, constraint or tf")
      ->check(CLI::IsMember({"search", "constraint", "tf"}));
  rank->add_option("--max-values", cfg.max_values, "largest value count tried")->check(CLI::PositiveNumber);
  rank->add_option("--max-worlds", cfg.max_worlds, "largest world count tried")->check(CLI::PositiveNumber);
  rank->add_option("--members", cfg.members, "members of the searched intersection (1 = mixed rank)")
      ->check(CLI::Range(1, 3));
  auto* regularity = app.add_subcommand("regularity", "search regularity rules");
  common(regularity);
  regularity->add_option("--connective", cfg.connective, "one connective (default: all)");
  regularity->add_flag("--canonical", cfg.canonical, "union of every individually valid rule");
  auto* report = app.add_subcommand("report", "check, decompose, reduce and rank in one document");
  common(report);
  report->add_option("--method", cfg.method, "reduction method (ss, direct or tf)")
      ->check(CLI::IsMember({"ss", "direct", "tf"}));
  report->add_option("--max-values", cfg.max_values, "largest value count tried")->check(CLI::PositiveNumber);
  report->add_option("--max-worlds", cfg.max_worlds, "largest world count tried")->check(CLI::PositiveNumber);
  auto* exp = app.add_subcommand("export-builtins", "write every builtin as an interchange file");
  common(exp);
  exp->add_option("--out", cfg.out_dir, "output directory")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    help = true;
    out << app.help();
    return cfg;
  } catch (const CLI::CallForAllHelp&) {
    help = true;
    out << app.help("", CLI::AppFormatMode::All);
    return cfg;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  if (!atoms.empty()) cfg.atoms = split(atoms, ',');
  if (!formulas.empty()) cfg.formulas = split(formulas, ';');
  if (!properties.empty()) cfg.properties = split(properties, ',');
  if (!connectives.empty()) cfg.connectives = split(connectives, ',');
  cfg.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  for (const auto& p : positional) {
    const auto eq = p.find('=');
    if (cfg.command == "parse" || cfg.command == "eval") {
      cfg.formulas.push_back(p);
    } else if (eq != std::string::npos && p.substr(0, eq) == "depth") {
      try {
        cfg.depth = std::stoi(p.substr(eq + 1));
      } catch (const std::exception&) {
        throw UsageError("bad depth '" + p + "'");
      }
      if (cfg.depth < 0) throw UsageError("depth must be non-negative");
    } else {
      throw UsageError("unexpected argument '" + p + "'");
    }
  }
  return cfg;
}

int run(const RunConfig& c, std::ostream& out) {
  if (c.command == "parse") return cmd_parse(c, out);
  if (c.command == "eval") return cmd_eval(c, out);
  if (c.command == "check") return cmd_check(c, out);
  if (c.command == "decompose") return cmd_decompose(c, out);
  if (c.command == "reduce") return cmd_reduce(c, out);
  if (c.command == "group") return cmd_group(c, out);
  if (c.command == "rank") return cmd_rank(c, out);
  if (c.command == "regularity") return cmd_regularity(c, out);
  if (c.command == "report") return cmd_report(c, out);
  if (c.command == "export-builtins") return cmd_export(c, out);
  throw UsageError("unknown command '" + c.command + "'");
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    bool help = false;
    const RunConfig cfg = parse_command_line(args, out, help);
    if (help) return kExitHolds;
    return run(cfg, out);
  } catch (const Error& e) {
    err << "mvl: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "mvl: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace mvl
