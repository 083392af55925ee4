#include "scarlab/cluster.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "scarlab/errors.hpp"

namespace scarlab::cluster {

namespace {

Edge canonical(int i, int j, double coupling) {
  if (i > j) std::swap(i, j);
  return Edge{i, j, coupling};
}

void add_edge(std::vector<Edge>& edges, int i, int j, double coupling) {
  edges.push_back(canonical(i, j, coupling));
}

void canonicalize(CouplingGraph& graph, bool allow_duplicates) {
  for (const Edge& e : graph.edges) {
    if (e.i == e.j) throw ConfigError("cluster: self-loop on site " + std::to_string(e.i));
    if (e.i < 0 || e.j < 0 || e.i >= graph.sites || e.j >= graph.sites)
      throw ConfigError("cluster: edge site index out of range");
  }
  std::sort(graph.edges.begin(), graph.edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  for (std::size_t k = 1; k < graph.edges.size(); ++k) {
    if (graph.edges[k].i == graph.edges[k - 1].i && graph.edges[k].j == graph.edges[k - 1].j) {
      if (!allow_duplicates)
        throw ConfigError("cluster: duplicate edge (" + std::to_string(graph.edges[k].i) +
                          "," + std::to_string(graph.edges[k].j) + ")");
      graph.edges.erase(graph.edges.begin() + static_cast<std::ptrdiff_t>(k));
      --k;
    }
  }
}

// Grid helpers; a wrap bond is only added when the dimension is long enough
// that it does not duplicate an interior bond.
bool wraps(Boundary boundary, int extent) { return boundary == Boundary::periodic && extent > 2; }

}  // namespace

CouplingGraph build_cluster(const ClusterSpec& spec) {
  if (spec.sites < 2) throw ConfigError("cluster: need at least 2 sites");
  CouplingGraph graph;
  graph.sites = spec.sites;

  const bool two_dim = spec.kind == Kind::ladder || spec.kind == Kind::square ||
                       spec.kind == Kind::triangular;
  if (two_dim) {
    if (spec.rows <= 0 || spec.cols <= 0 || spec.rows * spec.cols != spec.sites)
      throw ConfigError("cluster: rows*cols must equal the site count");
    if (spec.kind == Kind::ladder && spec.rows != 2)
      throw ConfigError("cluster: ladder preset requires 2 rows");
  }

  auto site = [&](int r, int c) { return r * spec.cols + c; };

  switch (spec.kind) {
    case Kind::chain:
      for (int i = 0; i + 1 < spec.sites; ++i) add_edge(graph.edges, i, i + 1, 1.0);
      if (wraps(spec.boundary, spec.sites)) add_edge(graph.edges, spec.sites - 1, 0, 1.0);
      break;
    case Kind::ladder:
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c + 1 < spec.cols; ++c) add_edge(graph.edges, site(r, c), site(r, c + 1), 1.0);
        if (wraps(spec.boundary, spec.cols)) add_edge(graph.edges, site(r, spec.cols - 1), site(r, 0), 1.0);
      }
      for (int c = 0; c < spec.cols; ++c) add_edge(graph.edges, site(0, c), site(1, c), 1.0);
      break;
    case Kind::square:
    case Kind::triangular:
      for (int r = 0; r < spec.rows; ++r)
        for (int c = 0; c < spec.cols; ++c) {
          if (c + 1 < spec.cols) add_edge(graph.edges, site(r, c), site(r, c + 1), 1.0);
          else if (wraps(spec.boundary, spec.cols)) add_edge(graph.edges, site(r, c), site(r, 0), 1.0);
          if (r + 1 < spec.rows) add_edge(graph.edges, site(r, c), site(r + 1, c), 1.0);
          else if (wraps(spec.boundary, spec.rows)) add_edge(graph.edges, site(r, c), site(0, c), 1.0);
        }
      if (spec.kind == Kind::triangular) {
        // one diagonal per plaquette
        for (int r = 0; r < spec.rows; ++r)
          for (int c = 0; c < spec.cols; ++c) {
            const bool interior = r + 1 < spec.rows && c + 1 < spec.cols;
            if (interior)
              add_edge(graph.edges, site(r, c), site(r + 1, c + 1), 1.0);
            else if (spec.boundary == Boundary::periodic && spec.rows > 2 && spec.cols > 2)
              add_edge(graph.edges, site(r, c),
                       site((r + 1) % spec.rows, (c + 1) % spec.cols), 1.0);
          }
      }
      break;
    case Kind::custom:
      graph.edges = spec.custom_edges;
      for (Edge& e : graph.edges) e = canonical(e.i, e.j, e.coupling);
      canonicalize(graph, /*allow_duplicates=*/false);
      return graph;
  }
  canonicalize(graph, /*allow_duplicates=*/true);
  return graph;
}

double coupling_sum(const CouplingGraph& graph) {
  double sum = 0.0;
  for (const Edge& e : graph.edges) sum += e.coupling;
  return 2.0 * sum;
}

bool is_connected(const CouplingGraph& graph) {
  if (graph.sites <= 1) return true;
  std::vector<std::vector<int>> adj(graph.sites);
  for (const Edge& e : graph.edges) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  std::vector<char> seen(graph.sites, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == graph.sites;
}

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::chain: return "chain";
    case Kind::ladder: return "ladder";
    case Kind::square: return "square";
    case Kind::triangular: return "triangular";
    case Kind::custom: return "custom";
  }
  return "?";
}

ClusterSpec parse_preset(const std::string& token) {
  std::vector<std::string> parts;
  std::stringstream ss(token);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() < 2 || parts.size() > 3)
    throw ConfigError("cluster preset: expected kind:size[:boundary], got '" + token + "'");

  ClusterSpec spec;
  if (parts[0] == "chain") spec.kind = Kind::chain;
  else if (parts[0] == "ladder") spec.kind = Kind::ladder;
  else if (parts[0] == "square") spec.kind = Kind::square;
  else if (parts[0] == "triangular") spec.kind = Kind::triangular;
  else throw ConfigError("cluster preset: unknown kind '" + parts[0] + "'");

  try {
    const auto x = parts[1].find('x');
    if (x != std::string::npos) {
      spec.rows = std::stoi(parts[1].substr(0, x));
      spec.cols = std::stoi(parts[1].substr(x + 1));
      spec.sites = spec.rows * spec.cols;
    } else {
      spec.sites = std::stoi(parts[1]);
      if (spec.kind != Kind::chain)
        throw ConfigError("cluster preset: " + parts[0] + " needs RxC dimensions");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("cluster preset: bad size field '" + parts[1] + "'");
  }

  if (parts.size() == 3) {
    if (parts[2] == "periodic") spec.boundary = Boundary::periodic;
    else if (parts[2] == "open") spec.boundary = Boundary::open;
    else throw ConfigError("cluster preset: boundary must be open or periodic");
  }
  return spec;
}

CouplingGraph load_cluster_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cluster file: cannot open '" + path + "'");
  CouplingGraph graph;
  bool have_sites = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::stringstream ss(line);
    if (!have_sites) {
      std::string tag;
      if (!(ss >> tag)) continue;  // blank/comment line
      int count = 0;
      if (tag != "N" || !(ss >> count))
        throw ConfigError("cluster file: first line must be 'N <count>' (line " +
                          std::to_string(lineno) + ")");
      graph.sites = count;
      have_sites = true;
      continue;
    }
    int i, j;
    double coupling;
    if (!(ss >> i)) continue;
    if (!(ss >> j >> coupling))
      throw ConfigError("cluster file: expected '<i> <j> <J>' on line " + std::to_string(lineno));
    graph.edges.push_back(canonical(i, j, coupling));
  }
  if (!have_sites) throw ConfigError("cluster file: missing 'N <count>' header");
  canonicalize(graph, /*allow_duplicates=*/false);
  return graph;
}

void save_cluster_file(const CouplingGraph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cluster file: cannot write '" + path + "'");
  out << "N " << graph.sites << "\n";
  char buf[64];
  for (const Edge& e : graph.edges) {
    std::snprintf(buf, sizeof buf, "%d %d %.17g\n", e.i, e.j, e.coupling);
    out << buf;
  }
}

CouplingGraph resolve_cluster(const std::string& preset_or_path) {
  if (std::ifstream probe(preset_or_path); probe.good()) return load_cluster_file(preset_or_path);
  return build_cluster(parse_preset(preset_or_path));
}

}  // namespace scarlab::cluster
