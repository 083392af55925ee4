#pragma once

#include <string>
#include <vector>

namespace scarlab::cluster {

enum class Kind { chain, ladder, square, triangular, custom };
enum class Boundary { open, periodic };

struct Edge {
  int i = 0;
  int j = 0;
  double coupling = 1.0;
};

/// Requested cluster geometry. `rows`/`cols` are required for the 2D kinds
/// (ladder, square, triangular) and must satisfy rows*cols == sites.
struct ClusterSpec {
  Kind kind = Kind::chain;
  int sites = 0;
  Boundary boundary = Boundary::periodic;
  int rows = 0;
  int cols = 0;
  std::vector<Edge> custom_edges;  // only read for Kind::custom
};

/// Weighted edge list over sites 0..sites-1. Edges are stored with i < j,
/// sorted by (i, j), no duplicates, no self-loops.
struct CouplingGraph {
  int sites = 0;
  std::vector<Edge> edges;
};

CouplingGraph build_cluster(const ClusterSpec& spec);

/// Sum of couplings over ordered site pairs, i.e. twice the edge-list sum.
double coupling_sum(const CouplingGraph& graph);

bool is_connected(const CouplingGraph& graph);

/// Parses preset strings like "chain:12:periodic", "ladder:2x6:open",
/// "square:3x4:periodic", "triangular:3x4:periodic". The boundary part is
/// optional and defaults to periodic.
ClusterSpec parse_preset(const std::string& token);

/// Line-oriented cluster file: `N <count>` then `<i> <j> <J>` per edge,
/// `#` starts a comment.
CouplingGraph load_cluster_file(const std::string& path);
void save_cluster_file(const CouplingGraph& graph, const std::string& path);

/// Accepts either a preset string or a path to a cluster file.
CouplingGraph resolve_cluster(const std::string& preset_or_path);

std::string kind_name(Kind kind);

}  // namespace scarlab::cluster
