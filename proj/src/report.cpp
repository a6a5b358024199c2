#include "ordgraph/report.hpp"

#include <sstream>

namespace ordgraph {

using nlohmann::json;

bool AnalysisReport::operator==(const AnalysisReport& o) const {
  return graph == o.graph && levels == o.levels && vertices == o.vertices && falpha == o.falpha &&
         condition_v_holds == o.condition_v_holds && condition_v_witness == o.condition_v_witness &&
         condition_s_status == o.condition_s_status && condition_s_detail == o.condition_s_detail &&
         ck_uniqueness == o.ck_uniqueness && simplicity == o.simplicity && version == o.version &&
         fibre_bound == o.fibre_bound;
}

AnalysisReport build_report(const Presentation& p, std::size_t bound, const std::vector<unsigned>& levels) {
  AnalysisReport r;
  r.graph = p.name();
  r.fibre_bound = bound;
  if (levels.empty())
    for (unsigned k = 0; k <= p.max_level(); ++k) r.levels.push_back(k);
  else
    r.levels = levels;

  for (VertexId v : p.vertices_by_name()) {
    AnalysisReport::VertexEntry ve;
    ve.name = p.vertex_name(v);
    for (unsigned k : r.levels) {
      VertexLevelReport vr = analyze_vertex(p, v, k, bound);
      AnalysisReport::LevelEntry le;
      le.level = k;
      le.is_source = vr.is_source;
      le.is_source_regular = vr.is_source_regular;
      le.fibre_kind = to_string(vr.fibre.kind);
      switch (vr.fibre.kind) {
        case Fibre::Kind::FiniteSet:
          for (const Path& m : vr.fibre.members) le.members.push_back(to_word(m));
          break;
        case Fibre::Kind::InfiniteWitness:
          le.witness = AnalysisReport::FibreWitness{to_word(*vr.fibre.cycle), to_word(*vr.fibre.seed),
                                                    to_word(*vr.fibre.connector)};
          break;
        case Fibre::Kind::Unknown:
          le.bound = vr.fibre.bound;
          break;
      }
      if (vr.is_regular != Tri::Unknown) le.is_regular = vr.is_regular == Tri::True;
      if (vr.is_regular == Tri::True && vr.fibre.kind == Fibre::Kind::FiniteSet) {
        std::string line = "T_" + ve.name + " = ";
        for (std::size_t i = 0; i < le.members.size(); ++i)
          line += (i ? " + " : "") + ("T_{" + le.members[i] + "} T_{" + le.members[i] + "}*");
        r.relation_lines.push_back(line + "   (level " + std::to_string(k) + ")");
      }
      ve.per_level.push_back(std::move(le));
    }
    r.vertices.push_back(std::move(ve));
  }

  for (unsigned k : r.levels) {
    QuotientDigraph q = falpha(p, k);
    AnalysisReport::FalphaEntry fe;
    fe.level = k;
    fe.vertex_count = q.comps.members.size();
    fe.edge_count = q.edges.size();
    for (const auto& c : cycles_without_entry(q.graph())) {
      std::vector<std::string> names;
      for (std::size_t e : c) names.push_back(p.generator(q.edges[e].rep).name);
      fe.cycles_without_entry.push_back(names);
    }
    r.falpha.push_back(std::move(fe));
  }

  Verdict v = ck_verdict(p, bound);
  r.condition_v_holds = v.condition_v.holds;
  if (v.condition_v.witness)
    r.condition_v_witness = AnalysisReport::VWitness{v.condition_v.witness->level,
                                                     p.generator(v.condition_v.witness->generator).name,
                                                     p.vertex_name(v.condition_v.witness->vertex)};
  r.condition_s_status = to_string(v.condition_s.status);
  if (!v.condition_s.detail.empty()) r.condition_s_detail = v.condition_s.detail;
  for (const auto& e : v.ck) {
    AnalysisReport::CkJson c{e.level, to_string(e.status), std::nullopt};
    if (!e.reason.empty()) c.reason = e.reason;
    r.ck_uniqueness.push_back(c);
  }
  r.simplicity = to_string(v.simplicity);
  r.warnings = v.warnings;
  return r;
}

void to_json(json& j, const AnalysisReport& r) {
  j = json::object();
  j["graph"] = r.graph;
  j["levels"] = r.levels;
  j["vertices"] = json::array();
  for (const auto& v : r.vertices) {
    json per = json::array();
    for (const auto& l : v.per_level) {
      json f = {{"kind", l.fibre_kind}};
      if (l.fibre_kind == "FiniteSet") f["members"] = l.members;
      if (l.witness)
        f["witness"] = {{"cycle", l.witness->cycle}, {"seed", l.witness->seed}, {"connector", l.witness->connector}};
      if (l.bound) f["bound"] = *l.bound;
      per.push_back({{"level", l.level},
                     {"isSource", l.is_source},
                     {"isSourceRegular", l.is_source_regular},
                     {"fibre", f},
                     {"isRegular", l.is_regular ? json(*l.is_regular) : json(nullptr)}});
    }
    j["vertices"].push_back({{"name", v.name}, {"perLevel", per}});
  }
  j["falpha"] = json::array();
  for (const auto& f : r.falpha)
    j["falpha"].push_back({{"level", f.level},
                           {"vertexCount", f.vertex_count},
                           {"edgeCount", f.edge_count},
                           {"cyclesWithoutEntry", f.cycles_without_entry}});
  j["conditionV"] = {{"holds", r.condition_v_holds}};
  if (r.condition_v_witness)
    j["conditionV"]["witness"] = {{"level", r.condition_v_witness->level},
                                  {"generator", r.condition_v_witness->generator},
                                  {"vertex", r.condition_v_witness->vertex}};
  j["conditionS"] = {{"status", r.condition_s_status}};
  if (r.condition_s_detail) j["conditionS"]["detail"] = *r.condition_s_detail;
  j["ckUniqueness"] = json::array();
  for (const auto& c : r.ck_uniqueness) {
    json e = {{"level", c.level}, {"status", c.status}};
    if (c.reason) e["reason"] = *c.reason;
    j["ckUniqueness"].push_back(e);
  }
  j["simplicity"] = {{"status", r.simplicity}};
  j["version"] = r.version;
  j["bounds"] = {{"fibreClasses", r.fibre_bound}};
}

void from_json(const json& j, AnalysisReport& r) {
  r = AnalysisReport();
  j.at("graph").get_to(r.graph);
  j.at("levels").get_to(r.levels);
  for (const auto& v : j.at("vertices")) {
    AnalysisReport::VertexEntry ve;
    v.at("name").get_to(ve.name);
    for (const auto& l : v.at("perLevel")) {
      AnalysisReport::LevelEntry le;
      l.at("level").get_to(le.level);
      l.at("isSource").get_to(le.is_source);
      l.at("isSourceRegular").get_to(le.is_source_regular);
      const auto& f = l.at("fibre");
      f.at("kind").get_to(le.fibre_kind);
      if (f.contains("members")) f.at("members").get_to(le.members);
      if (f.contains("witness")) {
        const auto& w = f.at("witness");
        le.witness = AnalysisReport::FibreWitness{w.at("cycle").get<std::string>(), w.at("seed").get<std::string>(),
                                                  w.at("connector").get<std::string>()};
      }
      if (f.contains("bound")) le.bound = f.at("bound").get<std::size_t>();
      if (!l.at("isRegular").is_null()) le.is_regular = l.at("isRegular").get<bool>();
      ve.per_level.push_back(std::move(le));
    }
    r.vertices.push_back(std::move(ve));
  }
  for (const auto& f : j.at("falpha")) {
    AnalysisReport::FalphaEntry fe;
    f.at("level").get_to(fe.level);
    f.at("vertexCount").get_to(fe.vertex_count);
    f.at("edgeCount").get_to(fe.edge_count);
    f.at("cyclesWithoutEntry").get_to(fe.cycles_without_entry);
    r.falpha.push_back(std::move(fe));
  }
  const auto& cv = j.at("conditionV");
  cv.at("holds").get_to(r.condition_v_holds);
  if (cv.contains("witness")) {
    const auto& w = cv.at("witness");
    r.condition_v_witness =
        AnalysisReport::VWitness{w.at("level").get<unsigned>(), w.at("generator").get<std::string>(),
                                 w.at("vertex").get<std::string>()};
  }
  j.at("conditionS").at("status").get_to(r.condition_s_status);
  if (j.at("conditionS").contains("detail")) r.condition_s_detail = j.at("conditionS").at("detail").get<std::string>();
  for (const auto& c : j.at("ckUniqueness")) {
    AnalysisReport::CkJson e;
    c.at("level").get_to(e.level);
    c.at("status").get_to(e.status);
    if (c.contains("reason")) e.reason = c.at("reason").get<std::string>();
    r.ck_uniqueness.push_back(std::move(e));
  }
  j.at("simplicity").at("status").get_to(r.simplicity);
  j.at("version").get_to(r.version);
  j.at("bounds").at("fibreClasses").get_to(r.fibre_bound);
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "graph " << r.graph << "\nlevels";
  for (unsigned k : r.levels) os << ' ' << k;
  os << "\n\n";
  for (const auto& v : r.vertices) {
    os << "vertex " << v.name << '\n';
    for (const auto& l : v.per_level) {
      os << "  level " << l.level << ": source=" << (l.is_source ? "yes" : "no")
         << " source-regular=" << (l.is_source_regular ? "yes" : "no") << " regular="
         << (l.is_regular ? (*l.is_regular ? "yes" : "no") : "unknown") << "\n    fibre " << l.fibre_kind;
      if (l.fibre_kind == "FiniteSet") {
        os << " {";
        for (std::size_t i = 0; i < l.members.size(); ++i) os << (i ? ", " : "") << l.members[i];
        os << "}";
      }
      if (l.witness)
        os << " cycle=[" << l.witness->cycle << "] seed=[" << l.witness->seed << "] connector=[" << l.witness->connector
           << "]";
      if (l.bound) os << " (bound " << *l.bound << ")";
      os << '\n';
    }
  }
  os << '\n';
  for (const auto& f : r.falpha) {
    os << "F_" << f.level << ": " << f.vertex_count << " vertices, " << f.edge_count << " edges";
    for (const auto& c : f.cycles_without_entry) {
      os << "; cycle without entry [";
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
      os << "]";
    }
    os << '\n';
  }
  if (!r.relation_lines.empty()) {
    os << "\nrelations at regular vertices\n";
    for (const auto& l : r.relation_lines) os << "  " << l << '\n';
  }
  os << "\ncondition (V): " << (r.condition_v_holds ? "holds" : "fails");
  if (r.condition_v_witness)
    os << " (level " << r.condition_v_witness->level << ", generator " << r.condition_v_witness->generator
       << ", vertex " << r.condition_v_witness->vertex << ")";
  os << "\ncondition (S): " << r.condition_s_status;
  if (r.condition_s_detail) os << " (" << *r.condition_s_detail << ")";
  os << '\n';
  for (const auto& c : r.ck_uniqueness) {
    os << "CK uniqueness at level " << c.level << ": " << c.status;
    if (c.reason) os << " (" << *c.reason << ")";
    os << '\n';
  }
  os << "simplicity: " << r.simplicity << '\n';
  for (const auto& w : r.warnings) os << "warning: " << w << '\n';
  return os.str();
}

}  // namespace ordgraph
