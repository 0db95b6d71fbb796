#include "fpm/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace fpm {

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || raw[first] == '#') continue;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    out.push_back({number, std::string(raw)});
  }
  return out;
}

std::vector<std::string> header(const Line& line, std::string_view key) {
  const auto colon = line.text.find(':');
  if (colon == std::string::npos || tokens(line.text.substr(0, colon)) != std::vector<std::string>{std::string(key)})
    throw InstanceError("line " + std::to_string(line.number) + ": expected '" + std::string(key) +
                            ": <names...>'",
                        line.number);
  return tokens(line.text.substr(colon + 1));
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() < 2) throw InstanceError("instance must start with 'agents:' and 'jobs:' lines");
  auto agents = header(lines[0], "agents");
  auto jobs = header(lines[1], "jobs");

  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> all = agents;
  all.insert(all.end(), jobs.begin(), jobs.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int line = i < agents.size() ? lines[0].number : lines[1].number;
    if (!ids.emplace(all[i], static_cast<VertexId>(i)).second)
      throw InstanceError("line " + std::to_string(line) + ": duplicate name '" + all[i] + "'", line);
  }

  const auto n = all.size();
  std::vector<std::vector<VertexId>> prefs(n);
  std::vector<int> defined_on(n, 0);
  std::vector<int> seen_on(n, 0);  // last line that listed each vertex
  for (std::size_t li = 2; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto where = "line " + std::to_string(line.number) + ": ";
    const auto gt = line.text.find('>');
    if (gt == std::string::npos)
      throw InstanceError(where + "expected '<name> > <neighbors...>'", line.number);
    const auto head = tokens(line.text.substr(0, gt));
    if (head.size() != 1) throw InstanceError(where + "expected a single vertex name before '>'", line.number);
    auto it = ids.find(head[0]);
    if (it == ids.end()) throw InstanceError(where + "unknown vertex '" + head[0] + "'", line.number);
    const VertexId v = it->second;
    if (defined_on[v])
      throw InstanceError(where + "second preference line for '" + head[0] + "' (first on line " +
                              std::to_string(defined_on[v]) + ")",
                          line.number);
    defined_on[v] = line.number;
    for (const auto& name : tokens(line.text.substr(gt + 1))) {
      auto jt = ids.find(name);
      if (jt == ids.end()) throw InstanceError(where + "unknown vertex '" + name + "'", line.number);
      if (seen_on[jt->second] == line.number)
        throw InstanceError(where + "'" + name + "' listed twice", line.number);
      seen_on[jt->second] = line.number;
      prefs[v].push_back(jt->second);
    }
  }

  // Report asymmetric adjacency against the offending line before the
  // constructor's generic checks run.
  std::vector<std::unordered_set<VertexId>> listed(n);
  for (std::size_t v = 0; v < n; ++v) listed[v].insert(prefs[v].begin(), prefs[v].end());
  for (std::size_t v = 0; v < n; ++v) {
    for (VertexId w : prefs[v]) {
      if ((v < agents.size()) == (static_cast<std::size_t>(w) < agents.size()))
        throw InstanceError("line " + std::to_string(defined_on[v]) + ": '" + all[v] +
                                "' lists same-side vertex '" + all[w] + "'",
                            defined_on[v]);
      if (!listed[w].count(static_cast<VertexId>(v)))
        throw InstanceError("line " + std::to_string(defined_on[v]) + ": '" + all[v] + "' lists '" +
                                all[w] + "' but '" + all[w] + "' does not list '" + all[v] + "'",
                            defined_on[v]);
    }
  }
  for (std::size_t a = 0; a < agents.size(); ++a)
    if (prefs[a].empty())
      throw InstanceError("agent '" + all[a] + "' has no neighbor", defined_on[a]);

  try {
    return Instance(std::move(agents), std::move(jobs), std::move(prefs));
  } catch (const InstanceError& e) {
    throw InstanceError(e.what());
  }
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "agents:";
  for (VertexId a = 0; a < inst.num_agents(); ++a) out << ' ' << inst.name(a);
  out << "\njobs:";
  for (VertexId b = inst.num_agents(); b < inst.num_vertices(); ++b) out << ' ' << inst.name(b);
  out << '\n';
  for (VertexId v = 0; v < inst.num_vertices(); ++v) {
    out << inst.name(v) << " >";
    for (VertexId w : inst.prefs(v)) out << ' ' << inst.name(w);
    out << '\n';
  }
  return out.str();
}

Matching parse_matching(const Instance& inst, std::string_view text) {
  Matching m(inst.num_vertices());
  for (const Line& line : content_lines(text)) {
    const auto where = "line " + std::to_string(line.number) + ": ";
    const auto t = tokens(line.text);
    if (t.size() != 2) throw InstanceError(where + "expected '<agent> <job>'", line.number);
    auto a = inst.find(t[0]);
    auto b = inst.find(t[1]);
    if (!a) throw InstanceError(where + "unknown vertex '" + t[0] + "'", line.number);
    if (!b) throw InstanceError(where + "unknown vertex '" + t[1] + "'", line.number);
    if (inst.is_job(*a)) std::swap(a, b);
    if (!inst.is_agent(*a) || !inst.is_job(*b))
      throw InstanceError(where + "pair must join an agent and a job", line.number);
    if (!inst.edge_between(*a, *b))
      throw InstanceError(where + "'" + t[0] + "' and '" + t[1] + "' are not adjacent", line.number);
    if (m.is_matched(*a) || m.is_matched(*b))
      throw InstanceError(where + "vertex already matched on an earlier line", line.number);
    m.pair(*a, *b);
  }
  return m;
}

std::string serialize_matching(const Instance& inst, const Matching& m) {
  std::ostringstream out;
  for (const Edge& e : m.pairs(inst)) out << inst.name(e.agent) << ' ' << inst.name(e.job) << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InstanceError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace fpm
