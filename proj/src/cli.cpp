#include "artin/cli.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

#include "artin/coxeter.hpp"
#include "artin/sigma.hpp"

namespace artin::cli {

namespace {

const std::array<std::pair<Command, std::string_view>, 7> kCommands{{
    {Command::Classify, "classify"},
    {Command::Liv, "liv"},
    {Command::Sigma1, "sigma1"},
    {Command::Sigma2, "sigma2"},
    {Command::Homology, "homology"},
    {Command::Fibring, "fibring"},
    {Command::Scan, "scan"},
}};

[[noreturn]] void schema(const std::string& message) { throw Error(ErrorCode::SchemaError, message); }

Rational parse_rational(const std::string& token, const std::string& where) {
  static const std::regex pattern(R"(\s*([+-]?\d+)(/(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(token, m, pattern)) schema(where + ": '" + token + "' is not a rational number");
  if (m[3].matched && std::all_of(m[3].first, m[3].second, [](char c) { return c == '0'; })) {
    schema(where + ": zero denominator in '" + token + "'");
  }
  std::string text = m[1].str();
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  Rational q(text + (m[3].matched ? "/" + m[3].str() : ""), 10);
  q.canonicalize();
  return q;
}

// Builds the graph, reporting construction failures as schema errors.
LabeledGraph make_graph(std::vector<std::string> names, const std::vector<NamedEdge>& edges) {
  try {
    return LabeledGraph(std::move(names), edges);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError) throw;
    schema(std::string("edges: ") + e.what());
  }
}

std::optional<Label> parse_label(const std::string& text, const std::string& where) {
  if (text == "inf" || text == "infinity") return std::nullopt;
  static const std::regex digits(R"(\d{1,9})");
  if (!std::regex_match(text, digits)) schema(where + ": label '" + text + "' is not an integer or inf");
  return static_cast<Label>(std::stoul(text));
}

std::pair<std::size_t, std::size_t> line_column(std::string_view doc, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < doc.size(); ++i) {
    if (doc[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Character character_from_json(const LabeledGraph& g, const nlohmann::json& obj, const std::string& where) {
  if (!obj.is_object()) schema(where + " must be an object mapping vertex ids to values");
  Character chi{std::vector<Rational>(g.vertex_count(), Rational(0))};
  for (const auto& [key, value] : obj.items()) {
    auto v = g.find(key);
    if (!v) schema(where + ": unknown vertex '" + key + "'");
    std::string token;
    if (value.is_string()) token = value.get<std::string>();
    else if (value.is_number_integer()) token = std::to_string(value.get<long long>());
    else schema(where + "." + key + ": value must be an integer or a rational string");
    chi.values[*v] = parse_rational(token, where + "." + key);
  }
  return chi;
}

Json names(const LabeledGraph& g, const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(g.name(v));
  return out;
}

Json edge_json(const LabeledGraph& g, const Edge& e) { return Json::array({g.name(e.u), g.name(e.v), e.label}); }

Json edges_json(const LabeledGraph& g, const std::vector<Edge>& es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back(edge_json(g, e));
  return out;
}

Json character_json(const LabeledGraph& g, const Character& chi) {
  Json out = Json::object();
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[g.name(v)] = chi[v].get_str();
  return out;
}

Json element_json(const GroupElement& x) {
  Json out = Json::array();
  for (auto r : x) out.push_back(r);
  return out;
}

Json homology_group_json(const HomologyGroup& h) {
  Json out;
  out["free_rank"] = h.free_rank;
  Json torsion = Json::array();
  for (const auto& t : h.torsion) torsion.push_back(t.polynomial);
  out["torsion"] = torsion;
  out["finite_dimensional"] = h.finite_dimensional();
  if (h.finite_dimensional()) out["dimension"] = h.dimension();
  return out;
}

Json homology_report_json(const LabeledGraph& g, const KernelHomologyReport& report) {
  Json out;
  out["primitive_character"] = character_json(g, make_character(report.chi));
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json entry;
    entry["field"] = e.field;
    if (e.character) entry["mu"] = element_json(*e.character);
    Json groups = Json::array();
    for (std::size_t n = 0; n < e.groups.size(); ++n) {
      Json h{{"degree", n}};
      h.update(homology_group_json(e.groups[n]));
      groups.push_back(h);
    }
    entry["groups"] = groups;
    entries.push_back(entry);
  }
  out["entries"] = entries;
  return out;
}

Json quotient_json(const LabeledGraph& g, const FiniteQuotient& q) {
  Json out;
  out["orders"] = q.orders;
  Json phi = Json::object();
  for (Vertex v = 0; v < g.vertex_count(); ++v) phi[g.name(v)] = element_json(q.phi[v]);
  out["phi"] = phi;
  return out;
}

struct CertificateJson {
  const LabeledGraph& g;

  Json operator()(const std::monostate&) const { return nullptr; }
  Json operator()(const LivingCertificate& c) const {
    Json out{{"kind", "living-subgraph"}};
    out["liv_connected"] = c.liv_connected;
    out["liv0_connected"] = c.liv0_connected;
    out["dominant"] = c.dominant;
    Json comps = Json::array();
    for (const auto& comp : c.components) comps.push_back(names(g, comp));
    out["components"] = comps;
    out["undominated"] = names(g, c.undominated);
    return out;
  }
  Json operator()(const WitnessCertificate& c) const {
    Json out{{"kind", "finite-quotient"}};
    out["cut"] = {{"side_one", names(g, c.witness.cut.side_one)}, {"side_two", names(g, c.witness.cut.side_two)}};
    out["quotient"] = quotient_json(g, c.witness.quotient);
    out["mu"] = element_json(c.witness.character);
    Json obstruction = Json::array();
    for (const auto& x : c.witness.obstruction) obstruction.push_back(x.to_string());
    out["obstruction"] = obstruction;
    out["phi_restricted_surjective"] = c.phi_restricted_surjective;
    out["twisted_h1_free_rank"] = c.twisted_h1_free_rank;
    return out;
  }
  Json operator()(const HomologyCertificate& c) const {
    Json out{{"kind", "kernel-homology"}};
    out["field"] = c.field;
    if (c.character) out["mu"] = element_json(*c.character);
    out["degree"] = c.degree;
    out["free_rank"] = c.free_rank;
    return out;
  }
  Json operator()(const Sigma2Conditions& c) const {
    Json out{{"kind", "spherical-link-conditions"}};
    out["edge_failures"] = edges_json(g, c.edge_failures);
    out["link_failures"] = names(g, c.link_failures);
    out["complex_connected"] = c.complex_connected;
    out["complex_h1_vanishes"] = c.complex_h1_vanishes;
    out["simply_connected"] = c.simply_connected ? Json(*c.simply_connected) : Json("undecided");
    out["complex_triangles"] = c.complex_triangles;
    return out;
  }
  Json operator()(const TwoDimensionalConditions& c) const {
    Json out{{"kind", "two-dimensional-conditions"}};
    out["bad_edges"] = edges_json(g, c.bad_edges);
    out["bad_dead_vertices"] = names(g, c.bad_dead_vertices);
    out["liv_tree"] = c.liv_tree;
    return out;
  }
};

Json decision_json(const LabeledGraph& g, const Decision& d) {
  Json out;
  out["verdict"] = std::string(to_string(d.verdict));
  out["provenance"] = std::string(to_string(d.provenance));
  out["conditional_on_kpi1"] = d.conditional_on_kpi1;
  out["kpi1_assumed"] = d.kpi1_assumed;
  out["summary"] = d.summary;
  out["certificate"] = std::visit(CertificateJson{g}, d.certificate);
  return out;
}

Json sigma2_json(const LabeledGraph& g, const Sigma2Decision& d) {
  Json out;
  out["homotopical"] = decision_json(g, d.homotopical);
  out["homological"] = decision_json(g, d.homological);
  out["stable"] = d.stable;
  return out;
}

Json graph_json(const LabeledGraph& g) {
  return Json{{"vertices", g.names()}, {"edges", edges_json(g, g.edges())}};
}

Json classify_json(const LabeledGraph& g) {
  const auto f = classify_group(g);
  Json out;
  out["two_dimensional"] = f.two_dimensional;
  out["coherent"] = f.coherent;
  out["balanced"] = f.balanced;
  out["even"] = f.even;
  out["raag"] = f.raag;
  out["spherical"] = f.spherical;
  out["odd_tree"] = f.odd_tree;
  out["fc_type"] = f.fc_type;
  out["kpi1_known"] = f.kpi1_known;
  out["uniform_prime"] = f.uniform_prime ? Json(*f.uniform_prime) : Json(nullptr);
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  out["coxeter_type"] = classify(g, all).description();
  Json triangles = Json::array();
  for (const auto& c : enumerate_cliques(g, 3)) {
    if (c.size() == 3 && is_spherical(g, c)) triangles.push_back(names(g, c));
  }
  out["spherical_triangles"] = triangles;
  Json obstructions;
  obstructions["chordless_cycle"] = names(g, f.chordless_cycle);
  obstructions["heavy_clique"] = names(g, f.heavy_clique);
  obstructions["forbidden_diamond"] = names(g, f.forbidden_diamond);
  out["coherence_obstructions"] = obstructions;
  if (f.colouring) {
    Json colouring = Json::array();
    for (std::size_t i = 0; i < f.colouring->core.edges.size(); ++i) {
      const auto& e = f.colouring->core.edges[i];
      const auto c = f.colouring->colour[i];
      colouring.push_back({{"edge", Json::array({g.name(e.u), g.name(e.v), e.label})},
                           {"colour", c},
                           {"prime", f.colouring->primes[c]},
                           {"parity", f.colouring->parity[i]}});
    }
    out["balanced_colouring"] = colouring;
    out["balanced_exact"] = f.colouring->exact;
  }
  return out;
}

Json liv_json(const LabeledGraph& g, const Character& chi) {
  const auto liv = living_analysis(g, chi);
  Json out;
  out["living"] = names(g, liv.living);
  out["dead"] = names(g, liv.dead);
  out["dead_edges"] = edges_json(g, liv.dead_edges);
  out["living_edges"] = edges_json(g, liv.living_edges);
  Json three = Json::array();
  for (const auto& t : liv.three_dead) {
    three.push_back({{"edge", edge_json(g, t.edge)}, {"end", g.name(t.end)}, {"middle", g.name(t.middle)},
                     {"third", g.name(t.third)}});
  }
  out["three_dead_edges"] = three;
  Json comps = Json::array();
  for (const auto& c : liv.components) comps.push_back(names(g, c));
  out["components"] = comps;
  out["liv_connected"] = liv.liv_connected;
  out["liv0_connected"] = liv.liv0_connected;
  out["dominant"] = liv.dominant;
  out["undominated"] = names(g, liv.undominated);
  Json links = Json::object();
  for (Vertex v : liv.dead) {
    const auto link = spherical_link(g, chi, v);
    Json cells = Json::array();
    for (const auto& c : link.cells) cells.push_back(names(g, c));
    links[g.name(v)] = {{"vertices", names(g, link.vertices)}, {"cells", cells}, {"connected", link.connected()}};
  }
  out["spherical_links"] = links;
  return out;
}

Json fibring_json(const LabeledGraph& g, const Character& chi, const DecideOptions& options) {
  const auto r = fibring_report(g, chi, options);
  Json out;
  out["finitely_generated"] = std::string(to_string(r.finitely_generated));
  out["finitely_presented"] = std::string(to_string(r.finitely_presented));
  out["fp2"] = std::string(to_string(r.fp2));
  out["all_finiteness"] = r.all_finiteness;
  out["conditional_on_kpi1"] = r.conditional_on_kpi1;
  out["summary"] = r.summary;
  out["derived_subgroup_finitely_presented"] =
      r.derived_finitely_presented ? Json(*r.derived_finitely_presented) : Json("undecided");
  return out;
}

}  // namespace

Command parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands) {
    if (n == name) return c;
  }
  schema("command: unknown command '" + std::string(name) +
         "' (classify, liv, sigma1, sigma2, homology, fibring, scan)");
}

std::string_view to_string(Command c) {
  for (const auto& [k, n] : kCommands) {
    if (k == c) return n;
  }
  return "classify";
}

JobSpec parse_input(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(document, e.byte);
    std::string what = e.what();
    const auto pos = what.find("syntax error");
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                           (pos == std::string::npos ? what : what.substr(pos)));
  }
  if (!doc.is_object()) schema("document must be an object");
  static const std::set<std::string> known{"vertices", "edges", "character", "characters", "quotient",
                                           "fields",   "command", "bound",    "assume_kpi1"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) schema("unknown field '" + key + "'");
  }
  JobSpec spec;
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) schema("vertices: required array of ids");
  std::vector<std::string> vertex_names;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) schema("vertices: ids must be strings");
    vertex_names.push_back(v.get<std::string>());
  }
  std::vector<NamedEdge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) schema("edges: must be an array of [u, v, label]");
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
      const auto& e = doc["edges"][i];
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string()) {
        schema(where + ": must be [u, v, label]");
      }
      std::optional<Label> label;
      if (e[2].is_number_integer()) {
        const auto n = e[2].get<long long>();
        if (n < 0 || n > 1000000000) schema(where + ": label out of range");
        label = static_cast<Label>(n);
      } else if (e[2].is_string()) {
        label = parse_label(e[2].get<std::string>(), where);
      } else {
        schema(where + ": label must be an integer or \"inf\"");
      }
      if (!label) {
        spec.notes.push_back("edge " + e[0].get<std::string>() + "-" + e[1].get<std::string>() +
                             " labelled inf dropped");
        continue;
      }
      edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), *label});
    }
  }
  spec.graph = make_graph(std::move(vertex_names), edges);
  if (doc.contains("character")) spec.characters.push_back(character_from_json(spec.graph, doc["character"], "character"));
  if (doc.contains("characters")) {
    if (!doc["characters"].is_array()) schema("characters: must be an array of objects");
    for (std::size_t i = 0; i < doc["characters"].size(); ++i) {
      spec.characters.push_back(
          character_from_json(spec.graph, doc["characters"][i], "characters[" + std::to_string(i) + "]"));
    }
  }
  if (doc.contains("quotient")) {
    const auto& q = doc["quotient"];
    if (!q.is_object() || !q.contains("orders") || !q["orders"].is_array()) schema("quotient.orders: required array");
    FiniteQuotient quotient;
    for (const auto& o : q["orders"]) {
      if (!o.is_number_unsigned() || o.get<unsigned long>() < 1 || o.get<unsigned long>() > 100000) {
        schema("quotient.orders: entries must be positive integers");
      }
      quotient.orders.push_back(o.get<unsigned>());
    }
    quotient.phi.assign(spec.graph.vertex_count(), GroupElement(quotient.orders.size(), 0));
    if (q.contains("phi")) {
      if (!q["phi"].is_object()) schema("quotient.phi: must map vertex ids to residue lists");
      for (const auto& [key, value] : q["phi"].items()) {
        auto v = spec.graph.find(key);
        if (!v) schema("quotient.phi: unknown vertex '" + key + "'");
        if (!value.is_array() || value.size() != quotient.orders.size()) {
          schema("quotient.phi." + key + ": needs one residue per factor");
        }
        for (std::size_t i = 0; i < value.size(); ++i) {
          if (!value[i].is_number_integer()) schema("quotient.phi." + key + ": residues must be integers");
          const long long r = value[i].get<long long>();
          const long long m = quotient.orders[i];
          quotient.phi[*v][i] = static_cast<unsigned>(((r % m) + m) % m);
        }
      }
    }
    spec.quotient = std::move(quotient);
  }
  if (doc.contains("fields")) {
    if (!doc["fields"].is_array()) schema("fields: must be an array of names");
    for (const auto& f : doc["fields"]) {
      if (!f.is_string()) schema("fields: names must be strings");
      spec.fields.push_back(parse_field(f.get<std::string>()));
    }
  }
  if (doc.contains("command")) {
    if (!doc["command"].is_string()) schema("command: must be a string");
    spec.command = parse_command(doc["command"].get<std::string>());
  }
  if (doc.contains("bound")) {
    if (!doc["bound"].is_number_integer()) schema("bound: must be an integer");
    spec.bound = doc["bound"].get<long>();
  }
  if (doc.contains("assume_kpi1")) {
    if (!doc["assume_kpi1"].is_boolean()) schema("assume_kpi1: must be a boolean");
    spec.assume_kpi1 = doc["assume_kpi1"].get<bool>();
  }
  return spec;
}

LabeledGraph parse_inline_graph(std::string_view text, std::vector<std::string>* notes) {
  static const std::regex edge(R"(\s*([A-Za-z0-9_.']+)\s*-\s*([A-Za-z0-9_.']+)\s*:\s*([A-Za-z0-9]+)\s*)");
  static const std::regex vertex(R"(\s*([A-Za-z0-9_.']+)\s*)");
  std::vector<std::string> vertex_names;
  std::vector<NamedEdge> edges;
  auto add_vertex = [&](const std::string& name) {
    if (std::find(vertex_names.begin(), vertex_names.end(), name) == vertex_names.end()) vertex_names.push_back(name);
  };
  std::size_t start = 0;
  const std::string s(text);
  while (start <= s.size()) {
    const auto end = std::min(s.find(',', start), s.size());
    const std::string item = s.substr(start, end - start);
    std::smatch m;
    if (std::regex_match(item, m, edge)) {
      add_vertex(m[1]);
      add_vertex(m[2]);
      auto label = parse_label(m[3], "graph");
      if (label) edges.push_back({m[1], m[2], *label});
      else if (notes) notes->push_back("edge " + m[1].str() + "-" + m[2].str() + " labelled inf dropped");
    } else if (std::regex_match(item, m, vertex)) {
      add_vertex(m[1]);
    } else {
      throw Error(ErrorCode::ParseError, "line 1, column " + std::to_string(start + 1) + ": expected 'u-v:label' or a vertex name, got '" + item + "'");
    }
    start = end + 1;
  }
  return make_graph(std::move(vertex_names), edges);
}

Character parse_inline_character(const LabeledGraph& g, std::string_view text) {
  static const std::regex item(R"(\s*([A-Za-z0-9_.']+)\s*=\s*([^,]*))");
  Character chi{std::vector<Rational>(g.vertex_count(), Rational(0))};
  std::size_t start = 0;
  const std::string s(text);
  std::set<std::string> seen;
  while (start <= s.size()) {
    const auto end = std::min(s.find(',', start), s.size());
    const std::string part = s.substr(start, end - start);
    std::smatch m;
    if (!std::regex_match(part, m, item)) {
      throw Error(ErrorCode::ParseError, "line 1, column " + std::to_string(start + 1) + ": expected 'vertex=value', got '" + part + "'");
    }
    auto v = g.find(m[1].str());
    if (!v) schema("character: unknown vertex '" + m[1].str() + "'");
    if (!seen.insert(m[1].str()).second) schema("character: vertex '" + m[1].str() + "' given twice");
    chi.values[*v] = parse_rational(m[2].str(), "character." + m[1].str());
    start = end + 1;
  }
  return chi;
}

void validate_job(const JobSpec& spec) {
  if (spec.bound < 1 || spec.bound > spec.max_bound) {
    schema("bound: must lie in 1.." + std::to_string(spec.max_bound) + ", got " + std::to_string(spec.bound));
  }
  const bool needs_character = spec.command != Command::Classify && spec.command != Command::Scan;
  if (needs_character && spec.characters.empty()) {
    schema("character: command '" + std::string(to_string(spec.command)) + "' needs a character");
  }
  for (const auto& chi : spec.characters) validate_character(spec.graph, chi);
}

Json run_command(const JobSpec& spec) {
  validate_job(spec);
  const auto& g = spec.graph;
  DecideOptions options;
  options.fields = spec.fields;
  options.assume_kpi1 = spec.assume_kpi1;
  Json report;
  report["command"] = std::string(to_string(spec.command));
  report["graph"] = graph_json(g);
  report["notes"] = spec.notes;
  if (spec.assume_kpi1) report["kpi1_assumed"] = true;

  if (spec.command == Command::Classify) {
    report["classification"] = classify_json(g);
    return report;
  }
  if (spec.command == Command::Scan) {
    const auto entries = scan(g, spec.bound, options);
    Json list = Json::array();
    std::map<std::string, std::size_t> tally;
    for (const auto& e : entries) {
      const auto chi = make_character(e.chi);
      list.push_back({{"character", character_json(g, chi)},
                      {"sigma1", decision_json(g, e.sigma1)},
                      {"sigma2", sigma2_json(g, e.sigma2)}});
      ++tally["sigma1 " + std::string(to_string(e.sigma1.verdict))];
      ++tally["sigma2 " + std::string(to_string(e.sigma2.homotopical.verdict))];
    }
    report["bound"] = spec.bound;
    report["classes"] = entries.size();
    Json summary = Json::object();
    for (const auto& [k, n] : tally) summary[k] = n;
    report["summary"] = summary;
    report["entries"] = list;
    return report;
  }
  Json results = Json::array();
  for (const auto& chi : spec.characters) {
    Json r;
    r["character"] = character_json(g, chi);
    switch (spec.command) {
      case Command::Liv: r["liv"] = liv_json(g, chi); break;
      case Command::Sigma1: r["sigma1"] = decision_json(g, sigma1_decide(g, chi, options)); break;
      case Command::Sigma2: r["sigma2"] = sigma2_json(g, sigma2_decide(g, chi, options)); break;
      case Command::Homology:
        if (spec.quotient) {
          const auto check = validate_quotient(g, chi, *spec.quotient);
          r["quotient"] = quotient_json(g, *spec.quotient);
          r["psi_surjective"] = check.psi_surjective;
          r["phi_restricted_surjective"] = check.phi_restricted_surjective;
          if (!check.psi_surjective) report["notes"].push_back("(chi, phi) is not surjective onto Z x G");
          r["homology"] = homology_report_json(g, kernel_homology_report(g, chi, Twist{*spec.quotient, {}}));
        } else {
          r["homology"] = homology_report_json(
              g, kernel_homology_report(g, chi, spec.fields.empty() ? default_field_menu(g) : spec.fields));
        }
        break;
      case Command::Fibring: r["fibring"] = fibring_json(g, chi, options); break;
      default: break;
    }
    results.push_back(r);
  }
  report["results"] = results;
  return report;
}

namespace {

void render(const Json& value, const std::string& indent, std::ostringstream& out) {
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const Json& v) {
    return std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
  };
  if (value.is_object()) {
    for (const auto& [key, v] : value.items()) {
      if (v.is_primitive()) {
        out << indent << key << ": " << scalar(v) << "\n";
      } else if (v.is_array() && flat(v)) {
        out << indent << key << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
        out << "]\n";
      } else {
        out << indent << key << ":\n";
        render(v, indent + "  ", out);
      }
    }
  } else if (value.is_array()) {
    for (const auto& v : value) {
      if (v.is_primitive()) {
        out << indent << "- " << scalar(v) << "\n";
      } else if (v.is_array() && flat(v)) {
        out << indent << "- [";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
        out << "]\n";
      } else {
        out << indent << "-\n";
        render(v, indent + "  ", out);
      }
    }
  } else {
    out << indent << scalar(value) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(report, "", out);
  return out.str();
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::SchemaError:
    case ErrorCode::DuplicateEdge:
    case ErrorCode::LoopEdge:
    case ErrorCode::BadLabel:
    case ErrorCode::UnknownVertex:
      return 2;
    case ErrorCode::InvariantBreach:
      return 4;
    default:
      return 3;
  }
}

}  // namespace artin::cli
