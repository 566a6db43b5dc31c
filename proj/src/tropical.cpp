#include "toda/tropical.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <regex>

namespace toda {

Vertex GraphPath::end() const {
  Vertex v = start;
  for (Edge e : edges) {
    if (e == Edge::East) {
      v.j += 2;
    } else {
      v.k -= 1;
    }
  }
  return v;
}

std::string GraphPath::to_string() const {
  std::string s = "(" + std::to_string(start.j) + "," + std::to_string(start.k) + ")";
  for (Edge e : edges) {
    s.push_back(static_cast<char>(e));
  }
  return s;
}

GraphPath GraphPath::parse(std::string_view text) {
  static const std::regex kPattern(R"(\((\d+),(\d+)\)([ES]*))");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, kPattern)) {
    throw InputError("malformed graph path: '" + std::string(text) + "'");
  }
  GraphPath path;
  path.start = {std::stol(m[1].str()), std::stol(m[2].str())};
  Vertex v = path.start;
  if (v.k > v.j) {
    throw InputError("graph path starts outside j >= k: '" + std::string(text) + "'");
  }
  for (char c : m[3].str()) {
    path.edges.push_back(static_cast<Edge>(c));
    if (c == 'S' && --v.k < 0) {
      throw InputError("graph path leaves k >= 0: '" + std::string(text) + "'");
    }
    if (c == 'E') {
      v.j += 2;
    }
  }
  return path;
}

namespace {

// Prefix sums S_i = A_0 + ... + A_{i-1}, i <= M.
class EastWeights {
 public:
  explicit EastWeights(const InitialDataUltra& a) : a_(a), prefix_(a.size() + 1) {
    prefix_[0] = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      prefix_[i + 1] = prefix_[i] + a[i];
    }
  }

  Integer operator()(long j, long k) const {
    if (k < 0 || j < k) {
      throw DomainError("east edge E_{" + std::to_string(j) + "," + std::to_string(k) +
                        "} is not in G");
    }
    const auto d = static_cast<std::size_t>(j - k);
    if (k == 0) {
      if (d > a_.size()) {
        throw DataExhaustedError("W(E_{" + std::to_string(j) + ",0}) needs A_0..A_" +
                                 std::to_string(j - 1));
      }
      return prefix_[d];
    }
    return prefix_[std::min(d, a_.size())] + k * a_[d];
  }

 private:
  const InitialDataUltra& a_;
  std::vector<Integer> prefix_;
};

void require_graph_data(std::size_t data_size, std::size_t t, std::size_t n) {
  if (n > 0 && t + 2 * n - 2 > data_size) {
    throw DataExhaustedError("T(" + std::to_string(t) + "," + std::to_string(n) + ") needs " +
                             std::to_string(t + 2 * n - 2) + " initial values, got " +
                             std::to_string(data_size));
  }
}

// dist[c][k] for vertex (t + 2c, k), 0 <= c <= n_max, 0 <= k <= t.
using DistanceGrid = std::vector<std::vector<std::optional<Integer>>>;

DistanceGrid sweep(std::size_t t, std::size_t n_max, const EastWeights& weight) {
  DistanceGrid dist(n_max + 1, std::vector<std::optional<Integer>>(t + 1));
  dist[0][t] = Integer(0);
  // increasing j, then decreasing k
  for (std::size_t c = 0; c <= n_max; ++c) {
    for (std::size_t k = t + 1; k-- > 0;) {
      std::optional<Integer>& best = dist[c][k];
      if (k < t && dist[c][k + 1]) {
        Integer via_south = *dist[c][k + 1];
        if (!best || via_south < *best) {
          best = std::move(via_south);
        }
      }
      if (c > 0 && dist[c - 1][k]) {
        Integer via_east = *dist[c - 1][k] +
                           weight(static_cast<long>(t + 2 * (c - 1)), static_cast<long>(k));
        if (!best || via_east < *best) {
          best = std::move(via_east);
        }
      }
    }
  }
  return dist;
}

}  // namespace

Integer east_edge_weight(long j, long k, const InitialDataUltra& a) {
  return EastWeights(a)(j, k);
}

Integer graph_path_weight(const GraphPath& path, const InitialDataUltra& a) {
  const EastWeights weight(a);
  Integer total = 0;
  Vertex v = path.start;
  for (Edge e : path.edges) {
    if (e == Edge::East) {
      total += weight(v.j, v.k);
      v.j += 2;
    } else {
      total += south_edge_weight(v.j, v.k);
      v.k -= 1;
    }
  }
  return total;
}

std::vector<Integer> shortest_tau_row(const InitialDataUltra& a, std::size_t t,
                                      std::size_t n_max) {
  require_graph_data(a.size(), t, n_max);
  const EastWeights weight(a);
  const DistanceGrid dist = sweep(t, n_max, weight);
  std::vector<Integer> row;
  row.reserve(n_max + 1);
  for (std::size_t c = 0; c <= n_max; ++c) {
    row.push_back(*dist[c][0]);
  }
  return row;
}

Integer shortest_tau(const InitialDataUltra& a, std::size_t t, std::size_t n) {
  return shortest_tau_row(a, t, n).back();
}

GraphPath shortest_witness(const InitialDataUltra& a, std::size_t t, std::size_t n) {
  require_graph_data(a.size(), t, n);
  const EastWeights weight(a);
  const DistanceGrid dist = sweep(t, n, weight);
  std::vector<Edge> reversed;
  std::size_t c = n;
  std::size_t k = 0;
  while (c > 0 || k < t) {
    if (c > 0 && dist[c - 1][k] &&
        *dist[c - 1][k] + weight(static_cast<long>(t + 2 * (c - 1)), static_cast<long>(k)) ==
            *dist[c][k]) {
      reversed.push_back(Edge::East);
      --c;
    } else {
      reversed.push_back(Edge::South);
      ++k;
    }
  }
  GraphPath path;
  path.start = {static_cast<long>(t), static_cast<long>(t)};
  path.edges.assign(reversed.rbegin(), reversed.rend());
  return path;
}

std::vector<GraphPath> enumerate_graph_paths(std::size_t t, std::size_t n, bool restricted,
                                             std::size_t max_count) {
  if (restricted && t == 0) {
    throw ContractViolation("restricted graph paths end at row 1 and need t >= 1");
  }
  const std::size_t souths = restricted ? t - 1 : t;
  const Integer count = binomial(souths + n, n);
  if (count > Integer(static_cast<unsigned long>(max_count))) {
    throw ResourceError("graph path count " + count.get_str() + " exceeds the cap " +
                        std::to_string(max_count));
  }
  std::vector<GraphPath> out;
  GraphPath current;
  current.start = {static_cast<long>(t), static_cast<long>(t)};
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t east_left,
                                                             std::size_t south_left) {
    if (east_left == 0 && south_left == 0) {
      out.push_back(current);
      return;
    }
    if (east_left > 0) {
      current.edges.push_back(Edge::East);
      extend(east_left - 1, south_left);
      current.edges.pop_back();
    }
    if (south_left > 0) {
      current.edges.push_back(Edge::South);
      extend(east_left, south_left - 1);
      current.edges.pop_back();
    }
  };
  extend(n, souths);
  return out;
}

GraphPath tabular_to_graph_path(const PathFamily& family) {
  const long t = static_cast<long>(family.t);
  if (t < 1) {
    throw ContractViolation("the tabular bijection is defined for t >= 1");
  }
  if (family.paths.size() != family.n) {
    throw ContractViolation("family has the wrong number of paths");
  }
  GraphPath path;
  path.start = {t, t};
  long row = t;
  for (std::size_t j = 0; j < family.paths.size(); ++j) {
    const LatticePath& p = family.paths[j];
    if (!is_tabular(p) || !p.is_positive() || !p.is_grounded()) {
      throw ContractViolation("path " + std::to_string(j) + " of the family is not tabular");
    }
    const auto h = p.heights();
    const long strip = *std::max_element(h.begin(), h.end()) - 1;
    const long target = t + 2 * static_cast<long>(j) - strip;
    if (target < 1 || target > row) {
      throw ContractViolation("family is not in the tabular set: strip rows out of order");
    }
    for (; row > target; --row) {
      path.edges.push_back(Edge::South);
    }
    path.edges.push_back(Edge::East);
  }
  for (; row > 1; --row) {
    path.edges.push_back(Edge::South);
  }
  return path;
}

UltraTau shortest_tau_table(const InitialDataUltra& a, std::size_t t_last) {
  UltraTau table(a.size(), t_last);
  for (std::size_t t = 0; t <= t_last; ++t) {
    const auto row = shortest_tau_row(a, t, table.sites(t) - 1);
    for (std::size_t n = 1; n < row.size(); ++n) {
      table.set(t, n, row[n]);
    }
  }
  return table;
}

UltraField solve_ivp_ultra(const InitialDataUltra& a, std::size_t t_max) {
  return qe_from_tau(shortest_tau_table(a, clip_time(a.size(), t_max) + 1));
}

}  // namespace toda
