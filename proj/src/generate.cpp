#include "ecc/generate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>

#include "ecc/decompose.hpp"

namespace ecc {

namespace {

// Uniform draw in [0, bound) that does not depend on the standard library's
// distribution implementation, so generated files are portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = engine_();
        while (x >= limit) {
            x = engine_();
        }
        return x % bound;
    }

    Vertex vertex(Vertex n) { return static_cast<Vertex>(below(static_cast<std::uint64_t>(n))) + 1; }

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[static_cast<std::size_t>(below(i))]);
        }
    }

private:
    std::mt19937_64 engine_;
};

std::vector<Vertex> permutation(Vertex n, Rng& rng) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    rng.shuffle(order);
    return order;
}

void add_random_edges(std::vector<Edge>& edges, Vertex n, std::int32_t count, Rng& rng) {
    for (std::int32_t i = 0; i < count; ++i) {
        const Vertex a = rng.vertex(n);
        Vertex b = rng.vertex(n - 1);
        if (b >= a) {
            ++b;
        }
        edges.push_back({a, b});
    }
}

std::vector<Edge> random_tree(Vertex n, Rng& rng) {
    const auto order = permutation(n, rng);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < order.size(); ++i) {
        edges.push_back({order[static_cast<std::size_t>(rng.below(i))], order[i]});
    }
    return edges;
}

// Hamiltonian cycle plus a matching that avoids doubling cycle edges where
// it can; every vertex ends up with degree >= 3.
std::vector<Edge> cubic_skeleton(Vertex n, Rng& rng) {
    const auto cycle = permutation(n, rng);
    std::vector<Vertex> position(static_cast<std::size_t>(n) + 1);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        position[static_cast<std::size_t>(cycle[i])] = static_cast<Vertex>(i);
        edges.push_back({cycle[i], cycle[(i + 1) % cycle.size()]});
    }
    auto adjacent_on_cycle = [&](Vertex a, Vertex b) {
        const auto d = std::abs(position[static_cast<std::size_t>(a)] - position[static_cast<std::size_t>(b)]);
        return d == 1 || d == n - 1;
    };

    auto partners = permutation(n, rng);
    Vertex leftover = kNoVertex;
    if (partners.size() % 2 == 1) {
        leftover = partners.back();
        partners.pop_back();
    }
    const std::size_t pairs = partners.size() / 2;
    for (int sweep = 0; sweep < 4 && pairs > 1; ++sweep) {
        for (std::size_t p = 0; p < pairs; ++p) {
            if (adjacent_on_cycle(partners[2 * p], partners[2 * p + 1])) {
                const std::size_t q = static_cast<std::size_t>(rng.below(pairs));
                std::swap(partners[2 * p + 1], partners[2 * q + 1]);
            }
        }
    }
    for (std::size_t p = 0; p < pairs; ++p) {
        edges.push_back({partners[2 * p], partners[2 * p + 1]});
    }
    if (leftover != kNoVertex) {
        Vertex other = rng.vertex(n - 1);
        if (other >= leftover) {
            ++other;
        }
        edges.push_back({leftover, other});
    }
    return edges;
}

constexpr int kTreeAttempts = 400;
constexpr int kSkeletonAttempts = 200;
constexpr Vertex kTreeStrategyMaxVertices = 64;

}  // namespace

Multigraph generate_3ec_graph(std::int32_t n, std::int32_t m, std::uint64_t seed) {
    if (n < 2) {
        throw PreconditionError("generator needs n >= 2");
    }
    const std::int64_t min_edges = (3 * static_cast<std::int64_t>(n) + 1) / 2;
    if (m < min_edges) {
        throw PreconditionError("infeasible: a 3-edge-connected graph on " + std::to_string(n) +
                                " vertices needs at least " + std::to_string(min_edges) + " edges");
    }
    Rng rng(seed);

    if (n <= kTreeStrategyMaxVertices) {
        for (int attempt = 0; attempt < kTreeAttempts; ++attempt) {
            std::vector<Edge> edges = random_tree(n, rng);
            add_random_edges(edges, n, m - (n - 1), rng);
            rng.shuffle(edges);
            Multigraph g(n, std::move(edges));
            if (is_3ec(g)) {
                return g;
            }
        }
    }
    for (int attempt = 0; attempt < kSkeletonAttempts; ++attempt) {
        std::vector<Edge> edges = cubic_skeleton(n, rng);
        add_random_edges(edges, n, m - static_cast<std::int32_t>(edges.size()), rng);
        rng.shuffle(edges);
        Multigraph g(n, std::move(edges));
        if (is_3ec(g)) {
            return g;
        }
    }
    throw PreconditionError("generator retry budget exhausted for n=" + std::to_string(n) +
                            " m=" + std::to_string(m));
}

Multigraph generate_connected_graph(std::int32_t n, std::int32_t m, std::uint64_t seed) {
    if (n < 1 || m < n - 1) {
        throw PreconditionError("a connected graph on n vertices needs n >= 1 and m >= n - 1");
    }
    Rng rng(seed);
    std::vector<Edge> edges = random_tree(n, rng);
    if (n >= 2) {
        add_random_edges(edges, n, m - (n - 1), rng);
    }
    rng.shuffle(edges);
    return Multigraph(n, std::move(edges));
}

Multigraph generate_general_graph(std::int32_t n, std::int32_t m, std::uint64_t seed) {
    if (n < 1 || m < 0) {
        throw PreconditionError("general graph needs n >= 1 and m >= 0");
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    for (std::int32_t i = 0; i < m; ++i) {
        edges.push_back({rng.vertex(n), rng.vertex(n)});
    }
    return Multigraph(n, std::move(edges));
}

}  // namespace ecc
