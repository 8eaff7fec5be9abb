#ifndef ECC_GENERATE_HPP
#define ECC_GENERATE_HPP

#include <cstdint>

#include "ecc/multigraph.hpp"

namespace ecc {

/// Random connected 3-edge-connected multigraph with exactly n vertices and
/// m edges. Deterministic for a fixed (n, m, seed).
///
/// Requires n >= 2 and m >= ceil(3n/2). Small graphs are drawn as a random
/// spanning tree plus random extra edges; when that keeps getting rejected
/// (and always for large n) a Hamiltonian cycle plus a random matching forms
/// a near-cubic skeleton before the extra edges are added. Every candidate
/// is certified by the 3-edge-connectivity check.
Multigraph generate_3ec_graph(std::int32_t n, std::int32_t m, std::uint64_t seed);

/// Random connected multigraph: a random spanning tree plus m - (n - 1)
/// uniformly drawn extra edges (parallel edges allowed, no self-loops).
Multigraph generate_connected_graph(std::int32_t n, std::int32_t m, std::uint64_t seed);

/// Unrestricted random multigraph: m edges with uniform endpoints, so
/// self-loops, parallel edges, bridges and disconnected inputs all occur.
Multigraph generate_general_graph(std::int32_t n, std::int32_t m, std::uint64_t seed);

}  // namespace ecc

#endif  // ECC_GENERATE_HPP
