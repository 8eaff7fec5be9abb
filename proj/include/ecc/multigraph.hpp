#ifndef ECC_MULTIGRAPH_HPP
#define ECC_MULTIGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ecc {

// Vertices and edges are 1-based; 0 is reserved as "undefined".
using Vertex = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr Vertex kNoVertex = 0;
inline constexpr EdgeId kNoEdge = 0;

struct Edge {
    Vertex a = kNoVertex;
    Vertex b = kNoVertex;

    bool is_loop() const { return a == b; }
    Vertex other(Vertex v) const { return v == a ? b : a; }
};

struct Incidence {
    Vertex neighbor;
    EdgeId edge;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Raised when an operation's input does not meet its stated precondition
// (disconnected graph, not 3-edge-connected, infeasible generator request...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected multigraph with stable, dense edge identities.
///
/// Parallel edges and self-loops are kept as given. The incidence list of a
/// vertex follows edge order, so a self-loop contributes a single entry.
/// Immutable after construction.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(Vertex vertex_count, std::vector<Edge> edges);

    Vertex vertex_count() const { return vertex_count_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

    const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id - 1)]; }
    std::span<const Edge> edges() const { return edges_; }

    std::span<const Incidence> incidences(Vertex v) const {
        const auto begin = offsets_[static_cast<std::size_t>(v)];
        const auto end = offsets_[static_cast<std::size_t>(v) + 1];
        return std::span<const Incidence>(incidences_).subspan(begin, end - begin);
    }

    bool has_vertex(Vertex v) const { return v >= 1 && v <= vertex_count_; }
    bool has_edge(EdgeId id) const { return id >= 1 && id <= edge_count(); }

private:
    Vertex vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_ = {0, 0};
    std::vector<Incidence> incidences_;
};

/// Labeling of vertices into disjoint classes. Classes are sorted ascending
/// and ordered by their smallest member; class_of[v] indexes into classes.
struct Partition {
    std::vector<std::int32_t> class_of;  // by vertex, [0] unused
    std::vector<std::vector<Vertex>> classes;

    /// Builds the canonical partition from arbitrary labels (labels[v], v in 1..n).
    static Partition from_labels(std::span<const std::int64_t> labels);
    static Partition singletons(Vertex n);

    std::size_t size() const { return classes.size(); }
    bool same_class(Vertex u, Vertex v) const { return class_of[u] == class_of[v]; }

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Result of contracting vertex classes. edge_map[new id] is the id in the
/// graph that was contracted; vertex_map[old vertex] is the new vertex.
struct ContractionMap {
    std::vector<Vertex> vertex_map;
    std::vector<EdgeId> edge_map;
};

struct Contraction {
    Multigraph graph;
    ContractionMap map;
};

/// A subgraph carried together with the ids its vertices and edges had in
/// the graph it was taken from.
struct Subgraph {
    Multigraph graph;
    std::vector<Vertex> origin_vertex;  // by new vertex, [0] unused
    std::vector<EdgeId> origin_edge;    // by new edge, [0] unused
};

Multigraph parse_graph(std::istream& in);
Multigraph parse_graph(std::string_view text);
Multigraph read_graph_file(const std::string& path);

std::string format_graph(const Multigraph& g, std::string_view comment = {});

/// Merges every class into one vertex. Edges inside a class are dropped;
/// all others survive (parallel edges included) in their original order.
/// New vertices are numbered by first appearance of their label in 1..n.
Contraction contract_classes(const Multigraph& g, std::span<const std::int64_t> class_of);

/// Induced subgraph on `vertices` (given in the order the new ids follow).
Subgraph induced_subgraph(const Multigraph& g, std::span<const Vertex> vertices);

/// True iff deleting `removed` leaves at least two connected components.
bool is_disconnected_after_removal(const Multigraph& g, std::span<const EdgeId> removed);

Partition connected_components(const Multigraph& g);

/// Components of g after deleting every edge with removed[id] != 0.
/// component_labels gives each vertex a label in 1..count, [0] unused.
std::vector<std::int64_t> component_labels(const Multigraph& g, std::span<const char> removed);
Partition components_without(const Multigraph& g, std::span<const char> removed);

}  // namespace ecc

#endif  // ECC_MULTIGRAPH_HPP
