#ifndef TODA_TROPICAL_HPP
#define TODA_TROPICAL_HPP

// Shortest paths on the graph G with vertices (j,k), j >= k >= 0, east edges
// (j,k) -> (j+2,k) and south edges (j,k) -> (j,k-1). With the edge lengths
// below, T^(t)_n is the length of a shortest path (t,t) -> (t+2n,0).

#include "toda/arith.hpp"
#include "toda/lattice.hpp"
#include "toda/paths.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace toda {

enum class Edge : char { East = 'E', South = 'S' };

struct Vertex {
  long j = 0;
  long k = 0;
  bool operator==(const Vertex&) const = default;
};

struct GraphPath {
  Vertex start;
  std::vector<Edge> edges;

  Vertex end() const;
  /// Start vertex then edges, e.g. "(1,1)ES".
  std::string to_string() const;
  /// Inverse of to_string. Throws InputError on malformed text or when the
  /// path leaves the vertex set.
  static GraphPath parse(std::string_view text);

  bool operator==(const GraphPath&) const = default;
};

/// W(E_{j,k}) = A_0 + ... + A_{j-k-1} + k A_{j-k}. For k = 0 the last term
/// vanishes and only A_0..A_{j-1} are read.
Integer east_edge_weight(long j, long k, const InitialDataUltra& a);

/// W(S_{j,k}) = 0.
inline Integer south_edge_weight(long, long) { return 0; }

/// Summed edge lengths along the path.
Integer graph_path_weight(const GraphPath& path, const InitialDataUltra& a);

/// T^(t)_n: DAG dynamic program from (t,t) to (t+2n,0). Needs t + 2n - 2 <= M
/// for n >= 1. Arbitrary integer (also negative) lengths are fine.
Integer shortest_tau(const InitialDataUltra& a, std::size_t t, std::size_t n);

/// T^(t)_0..T^(t)_{n_max} from a single sweep.
std::vector<Integer> shortest_tau_row(const InitialDataUltra& a, std::size_t t, std::size_t n_max);

/// A shortest path (t,t) -> (t+2n,0); the east edge wins ties.
GraphPath shortest_witness(const InitialDataUltra& a, std::size_t t, std::size_t n);

inline constexpr std::size_t kMaxGraphPaths = 1'000'000;

/// Monotone E/S paths (t,t) -> (t+2n,0), or (t,t) -> (t+2n,1) when restricted
/// (needs t >= 1). Lexicographic order with E < S.
std::vector<GraphPath> enumerate_graph_paths(std::size_t t, std::size_t n, bool restricted,
                                             std::size_t max_count = kMaxGraphPaths);

/// Tabular family -> path (t,t) -> (t+2n,1). The path whose strip sits at
/// heights h_j..h_j+1 passes the east edge E_{t+2j, t+2j-h_j}.
/// Throws ContractViolation for t = 0 or a non-tabular family.
GraphPath tabular_to_graph_path(const PathFamily& family);

/// T table for t = 0..t_last by the shortest-path route.
UltraTau shortest_tau_table(const InitialDataUltra& a, std::size_t t_last);

/// Field by the shortest-path route: qe_from_tau of the shortest-path T table.
UltraField solve_ivp_ultra(const InitialDataUltra& a, std::size_t t_max);

}  // namespace toda

#endif  // TODA_TROPICAL_HPP
