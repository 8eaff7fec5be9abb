#ifndef ECC_TESTS_FIXTURES_HPP
#define ECC_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

#include "ecc/cut_enum.hpp"
#include "ecc/multigraph.hpp"
#include "ecc/oracle.hpp"

namespace ecc::testing {

inline Multigraph make_graph(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    std::vector<Edge> list;
    for (const auto& [a, b] : edges) {
        list.push_back({a, b});
    }
    return Multigraph(n, std::move(list));
}

inline Multigraph g_a() { return make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {4, 2}, {3, 1}}); }

inline Multigraph k4() { return make_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

inline Multigraph parallel(std::int32_t count) {
    std::vector<Edge> list(static_cast<std::size_t>(count), Edge{1, 2});
    return Multigraph(2, std::move(list));
}

inline Multigraph prism() {
    return make_graph(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}, {1, 4}, {2, 5}, {3, 6}});
}

// Hubs 1 and 2; middles 3, 4, 5.
inline Multigraph theta() { return make_graph(5, {{1, 3}, {3, 2}, {1, 4}, {4, 2}, {1, 5}, {5, 2}}); }

inline Multigraph c4() { return make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }

inline Multigraph path3() { return make_graph(3, {{1, 2}, {2, 3}}); }

inline std::set<oracle::Triple> triples(const std::vector<Cut3>& cuts) {
    std::set<oracle::Triple> out;
    for (const Cut3& c : cuts) {
        out.insert(c.edges);
    }
    return out;
}

}  // namespace ecc::testing

#endif  // ECC_TESTS_FIXTURES_HPP
