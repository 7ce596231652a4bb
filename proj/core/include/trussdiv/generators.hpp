#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>

#include "trussdiv/graph.hpp"

namespace trussdiv {

// Graph from literal external-id pairs.
Graph graph_from_pairs(std::initializer_list<std::pair<ExternalId, ExternalId>> pairs);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // center is vertex 0
Graph cycle_graph(std::size_t n);
// K_{2,2,2}; opposite pairs are (0,3), (1,4), (2,5).
Graph octahedron_graph();

// G(n, p). Vertices left without edges are not part of the result.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Power-law graph with clustering (Holme-Kim): each new vertex attaches
/// `edges_per_vertex` edges, the first by preferential attachment and
/// each further one, with probability `triad_probability`, to a random
/// neighbour of the previous target (closing a triangle). Starts from a
/// clique on edges_per_vertex + 1 vertices, so m is close to
/// edges_per_vertex * n.
Graph holme_kim(std::size_t n, std::size_t edges_per_vertex, double triad_probability, std::uint64_t seed);

}  // namespace trussdiv
