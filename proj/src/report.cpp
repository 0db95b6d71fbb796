#include "fpm/report.hpp"

#include <sstream>

#include <json.hpp>

namespace fpm {

namespace {

using nlohmann::ordered_json;

ordered_json pairs_json(const Instance& inst, const Matching& m) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : m.pairs(inst)) out.push_back({inst.name(e.agent), inst.name(e.job)});
  return out;
}

std::string infeasible_text(const Instance& inst, const Infeasible& cause) {
  // Mirror copies share the id of their G vertex.
  const std::string side = cause.side == Infeasible::Side::kLeft ? "_l exhausted its list" : "_r left unheld";
  return inst.name(cause.vertex) + side;
}

ordered_json trace_json(const Instance& inst, const SolveReport& report) {
  ordered_json out = ordered_json::array();
  for (const IterationRecord& rec : report.trace)
    out.push_back({{"trigger", inst.name(rec.trigger)},
                   {"component", rec.component},
                   {"component_size", rec.component_size},
                   {"edges_forbidden", rec.edges_forbidden},
                   {"proposals", rec.proposals}});
  return out;
}

const std::vector<std::uint8_t>& pick(const EdgeFlags& f, bool loops) { return loops ? f.loop : f.edge; }

}  // namespace

std::string format_solve_report(const Instance& inst, const SolveReport& report, OutputFormat format,
                                bool with_trace) {
  if (format == OutputFormat::kJson) {
    ordered_json j;
    if (report.found()) {
      const Found& f = report.result();
      j["outcome"] = "found";
      j["matching"] = pairs_json(inst, f.matching);
      ordered_json w = ordered_json::object();
      for (VertexId v = 0; v < inst.num_vertices(); ++v) w[inst.name(v)] = f.witness.alpha[v];
      j["witness"] = w;
      j["size"] = f.size;
    } else {
      const NoneExists& none = std::get<NoneExists>(report.outcome);
      j["outcome"] = "none";
      j["iteration"] = none.iteration;
      j["cause"] = infeasible_text(inst, none.cause);
    }
    if (with_trace) j["trace"] = trace_json(inst, report);
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  if (report.found()) {
    const Found& f = report.result();
    out << "found fully popular matching of size " << f.size << "\n";
    for (const Edge& e : f.matching.pairs(inst)) out << "  " << inst.name(e.agent) << ' ' << inst.name(e.job) << "\n";
    out << "witness:";
    for (VertexId v = 0; v < inst.num_vertices(); ++v) out << ' ' << inst.name(v) << '=' << f.witness.alpha[v];
    out << "\n";
  } else {
    const NoneExists& none = std::get<NoneExists>(report.outcome);
    out << "no fully popular matching (round " << none.iteration << ": " << infeasible_text(inst, none.cause)
        << ")\n";
  }
  if (with_trace) {
    for (std::size_t i = 0; i < report.trace.size(); ++i) {
      const IterationRecord& r = report.trace[i];
      out << "round " << i + 1 << ": trigger " << inst.name(r.trigger) << ", component " << r.component << " ("
          << r.component_size << " vertices), " << r.edges_forbidden << " edges forbidden, " << r.proposals
          << " proposals\n";
    }
  }
  return out.str();
}

std::string format_edges(const Instance& inst, const EdgeClassification& c, EdgeKind kind, OutputFormat format) {
  const EdgeFlags& f = kind == EdgeKind::kValid ? c.valid : kind == EdgeKind::kPopular ? c.popular : c.legal;
  if (format == OutputFormat::kJson) {
    ordered_json j;
    j["edges"] = ordered_json::array();
    for (EdgeId e = 0; e < inst.num_edges(); ++e)
      if (pick(f, false)[e]) j["edges"].push_back({inst.name(inst.edge(e).agent), inst.name(inst.edge(e).job)});
    j["self_loops"] = ordered_json::array();
    for (VertexId v = 0; v < inst.num_vertices(); ++v)
      if (pick(f, true)[v]) j["self_loops"].push_back(inst.name(v));
    ordered_json comps = ordered_json::array();
    for (const auto& members : c.members) {
      ordered_json names = ordered_json::array();
      for (VertexId v : members) names.push_back(inst.name(v));
      comps.push_back(names);
    }
    j["components"] = comps;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  for (EdgeId e = 0; e < inst.num_edges(); ++e)
    if (f.edge[e]) out << inst.name(inst.edge(e).agent) << ' ' << inst.name(inst.edge(e).job) << "\n";
  for (VertexId v = 0; v < inst.num_vertices(); ++v)
    if (f.loop[v]) out << inst.name(v) << ' ' << inst.name(v) << "\n";
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    out << "# component " << i << ":";
    for (VertexId v : c.members[i]) out << ' ' << inst.name(v);
    out << "\n";
  }
  return out.str();
}

std::string format_oracle_report(const Instance& inst, const OracleReport& r, OutputFormat format) {
  auto opt = [](const std::optional<int>& x) { return x ? ordered_json(*x) : ordered_json(nullptr); };
  if (format == OutputFormat::kJson) {
    ordered_json j;
    j["matchings"] = r.matchings.size();
    j["popular"] = r.num_popular;
    j["a_popular"] = r.num_a_popular;
    j["fully_popular"] = r.num_fully_popular;
    j["min_popular_size"] = opt(r.min_popular_size);
    j["max_popular_size"] = opt(r.max_popular_size);
    j["max_fully_popular_size"] = opt(r.max_fully_popular_size);
    j["popular_edges"] = ordered_json::array();
    for (EdgeId e = 0; e < inst.num_edges(); ++e)
      if (r.popular_edge[e]) j["popular_edges"].push_back({inst.name(inst.edge(e).agent), inst.name(inst.edge(e).job)});
    j["popular_self_loops"] = ordered_json::array();
    for (VertexId v = 0; v < inst.num_vertices(); ++v)
      if (r.popular_loop[v]) j["popular_self_loops"].push_back(inst.name(v));
    j["fully_popular_matchings"] = ordered_json::array();
    for (std::size_t i = 0; i < r.matchings.size(); ++i)
      if (r.fully_popular[i]) j["fully_popular_matchings"].push_back(pairs_json(inst, r.matchings[i]));
    j["loop_rule_holds"] = r.loop_rule_holds;
    return j.dump(2) + "\n";
  }
  auto show = [](const std::optional<int>& x) { return x ? std::to_string(*x) : std::string("-"); };
  std::ostringstream out;
  out << "matchings: " << r.matchings.size() << "\n"
      << "popular: " << r.num_popular << " (sizes " << show(r.min_popular_size) << ".." << show(r.max_popular_size)
      << ")\n"
      << "a-popular: " << r.num_a_popular << "\n"
      << "fully popular: " << r.num_fully_popular << " (max size " << show(r.max_fully_popular_size) << ")\n";
  for (std::size_t i = 0; i < r.matchings.size(); ++i) {
    if (!r.fully_popular[i]) continue;
    out << "  {";
    bool first = true;
    for (const Edge& e : r.matchings[i].pairs(inst)) {
      out << (first ? "" : ", ") << inst.name(e.agent) << ' ' << inst.name(e.job);
      first = false;
    }
    out << "}\n";
  }
  out << "popular edges:";
  for (EdgeId e = 0; e < inst.num_edges(); ++e)
    if (r.popular_edge[e]) out << " (" << inst.name(inst.edge(e).agent) << ',' << inst.name(inst.edge(e).job) << ')';
  out << "\npopular self-loops:";
  for (VertexId v = 0; v < inst.num_vertices(); ++v)
    if (r.popular_loop[v]) out << ' ' << inst.name(v);
  out << "\n";
  if (!r.loop_rule_holds) out << "warning: popular self-loops differ from the unstable vertices\n";
  return out.str();
}

}  // namespace fpm
