#include "ecc/multigraph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace ecc {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Multigraph::Multigraph(Vertex vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    const auto n = static_cast<std::size_t>(vertex_count_);
    offsets_.assign(n + 2, 0);
    for (const Edge& e : edges_) {
        if (!has_vertex(e.a) || !has_vertex(e.b)) {
            throw std::invalid_argument("endpoint out of range");
        }
        ++offsets_[static_cast<std::size_t>(e.a) + 1];
        if (!e.is_loop()) {
            ++offsets_[static_cast<std::size_t>(e.b) + 1];
        }
    }
    for (std::size_t v = 1; v < offsets_.size(); ++v) {
        offsets_[v] += offsets_[v - 1];
    }
    incidences_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 1; id <= edge_count(); ++id) {
        const Edge& e = edge(id);
        incidences_[fill[static_cast<std::size_t>(e.a)]++] = {e.b, id};
        if (!e.is_loop()) {
            incidences_[fill[static_cast<std::size_t>(e.b)]++] = {e.a, id};
        }
    }
}

namespace {

// Numbers the distinct labels of vertices 1..n in order of first
// appearance. Small non-negative labels take a direct lookup table.
std::vector<std::int32_t> first_seen_ids(std::span<const std::int64_t> labels, std::size_t n,
                                         std::int32_t& count) {
    std::vector<std::int32_t> id(n + 1, -1);
    count = 0;
    bool dense = true;
    for (std::size_t v = 1; v <= n && dense; ++v) {
        dense = labels[v] >= 0 && static_cast<std::uint64_t>(labels[v]) <= 2 * n;
    }
    if (dense) {
        std::vector<std::int32_t> table(2 * n + 1, -1);
        for (std::size_t v = 1; v <= n; ++v) {
            std::int32_t& slot = table[static_cast<std::size_t>(labels[v])];
            if (slot < 0) {
                slot = count++;
            }
            id[v] = slot;
        }
        return id;
    }
    std::unordered_map<std::int64_t, std::int32_t> index;
    index.reserve(n);
    for (std::size_t v = 1; v <= n; ++v) {
        auto [it, inserted] = index.try_emplace(labels[v], count);
        if (inserted) {
            ++count;
        }
        id[v] = it->second;
    }
    return id;
}

}  // namespace

Partition Partition::from_labels(std::span<const std::int64_t> labels) {
    // labels[0] is ignored
    Partition p;
    const std::size_t n = labels.empty() ? 0 : labels.size() - 1;
    std::int32_t count = 0;
    p.class_of = first_seen_ids(labels, n, count);
    p.classes.resize(static_cast<std::size_t>(count));
    for (std::size_t v = 1; v <= n; ++v) {
        p.classes[static_cast<std::size_t>(p.class_of[v])].push_back(static_cast<Vertex>(v));
    }
    // Vertices are scanned in increasing order, so classes are already sorted
    // and appear in order of their smallest member.
    return p;
}

Partition Partition::singletons(Vertex n) {
    std::vector<std::int64_t> labels(static_cast<std::size_t>(n) + 1);
    for (Vertex v = 1; v <= n; ++v) {
        labels[static_cast<std::size_t>(v)] = v;
    }
    return from_labels(labels);
}

namespace {

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

// Up to three fields; `count` keeps counting past that so callers can
// reject lines with extra fields.
struct Fields {
    std::array<std::string_view, 3> at;
    std::size_t count = 0;
};

Fields split_fields(std::string_view line) {
    Fields fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            if (fields.count < fields.at.size()) {
                fields.at[fields.count] = line.substr(start, i - start);
            }
            ++fields.count;
        }
    }
    return fields;
}

std::int64_t parse_count(std::string_view field, std::size_t line_no) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError(line_no, "expected an integer, got '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace

Multigraph parse_graph(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(std::string_view(buffer.view()));
}

Multigraph parse_graph(std::string_view text) {
    std::size_t line_no = 0;
    bool have_header = false;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::vector<Edge> edges;

    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (line.empty() || line[0] == '#' || is_blank(line)) {
            continue;
        }
        const Fields fields = split_fields(line);
        const std::string_view kind = fields.at[0];
        if (kind == "p") {
            if (have_header) {
                throw ParseError(line_no, "duplicate header");
            }
            if (fields.count != 3) {
                throw ParseError(line_no, "malformed header, expected 'p <n> <m>'");
            }
            n = parse_count(fields.at[1], line_no);
            m = parse_count(fields.at[2], line_no);
            if (n < 0 || m < 0 || n > INT32_MAX || m > INT32_MAX) {
                throw ParseError(line_no, "malformed header, counts out of range");
            }
            edges.reserve(static_cast<std::size_t>(m));
            have_header = true;
        } else if (kind == "e") {
            if (!have_header) {
                throw ParseError(line_no, "edge before header");
            }
            if (fields.count != 3) {
                throw ParseError(line_no, "malformed edge, expected 'e <u> <v>'");
            }
            const std::int64_t a = parse_count(fields.at[1], line_no);
            const std::int64_t b = parse_count(fields.at[2], line_no);
            if (a < 1 || a > n || b < 1 || b > n) {
                throw ParseError(line_no, "endpoint out of range");
            }
            if (static_cast<std::int64_t>(edges.size()) == m) {
                throw ParseError(line_no, "edge-count mismatch, more than " + std::to_string(m) + " edges");
            }
            edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(kind) + "'");
        }
    }
    if (!have_header) {
        throw ParseError(line_no, "missing header");
    }
    if (static_cast<std::int64_t>(edges.size()) != m) {
        throw ParseError(line_no, "edge-count mismatch, header declares " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    }
    return Multigraph(static_cast<Vertex>(n), std::move(edges));
}

Multigraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    return parse_graph(in);
}

std::string format_graph(const Multigraph& g, std::string_view comment) {
    std::string out;
    out.reserve(16 + static_cast<std::size_t>(g.edge_count()) * 14);
    if (!comment.empty()) {
        out += "# ";
        out += comment;
        out += '\n';
    }
    out += "p " + std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) + '\n';
    for (const Edge& e : g.edges()) {
        out += "e ";
        out += std::to_string(e.a);
        out += ' ';
        out += std::to_string(e.b);
        out += '\n';
    }
    return out;
}

Contraction contract_classes(const Multigraph& g, std::span<const std::int64_t> class_of) {
    const Vertex n = g.vertex_count();
    if (class_of.size() != static_cast<std::size_t>(n) + 1) {
        throw std::invalid_argument("class map must cover every vertex");
    }
    Contraction result;
    Vertex next = 0;
    result.map.vertex_map = first_seen_ids(class_of, static_cast<std::size_t>(n), next);
    result.map.vertex_map[0] = kNoVertex;
    for (Vertex v = 1; v <= n; ++v) {
        ++result.map.vertex_map[static_cast<std::size_t>(v)];
    }

    std::vector<Edge> edges;
    result.map.edge_map.assign(1, kNoEdge);
    for (EdgeId id = 1; id <= g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        const Vertex a = result.map.vertex_map[static_cast<std::size_t>(e.a)];
        const Vertex b = result.map.vertex_map[static_cast<std::size_t>(e.b)];
        if (a == b) {
            continue;
        }
        edges.push_back({a, b});
        result.map.edge_map.push_back(id);
    }
    result.graph = Multigraph(next, std::move(edges));
    return result;
}

Subgraph induced_subgraph(const Multigraph& g, std::span<const Vertex> vertices) {
    Subgraph sub;
    std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()) + 1, kNoVertex);
    sub.origin_vertex.assign(1, kNoVertex);
    for (const Vertex v : vertices) {
        sub.origin_vertex.push_back(v);
        local[static_cast<std::size_t>(v)] = static_cast<Vertex>(sub.origin_vertex.size() - 1);
    }
    std::vector<Edge> edges;
    sub.origin_edge.assign(1, kNoEdge);
    for (EdgeId id = 1; id <= g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        const Vertex a = local[static_cast<std::size_t>(e.a)];
        const Vertex b = local[static_cast<std::size_t>(e.b)];
        if (a == kNoVertex || b == kNoVertex) {
            continue;
        }
        edges.push_back({a, b});
        sub.origin_edge.push_back(id);
    }
    sub.graph = Multigraph(static_cast<Vertex>(vertices.size()), std::move(edges));
    return sub;
}

std::vector<std::int64_t> component_labels(const Multigraph& g, std::span<const char> removed) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::int64_t> label(n + 1, 0);
    std::vector<Vertex> stack;
    std::int64_t next_label = 0;
    for (Vertex s = 1; s <= g.vertex_count(); ++s) {
        if (label[static_cast<std::size_t>(s)] != 0) {
            continue;
        }
        label[static_cast<std::size_t>(s)] = ++next_label;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (const Incidence& inc : g.incidences(v)) {
                if (!removed.empty() && removed[static_cast<std::size_t>(inc.edge)]) {
                    continue;
                }
                auto& l = label[static_cast<std::size_t>(inc.neighbor)];
                if (l == 0) {
                    l = next_label;
                    stack.push_back(inc.neighbor);
                }
            }
        }
    }
    return label;
}

Partition components_without(const Multigraph& g, std::span<const char> removed) {
    return Partition::from_labels(component_labels(g, removed));
}

Partition connected_components(const Multigraph& g) {
    return components_without(g, {});
}

bool is_disconnected_after_removal(const Multigraph& g, std::span<const EdgeId> removed) {
    std::vector<char> mask(static_cast<std::size_t>(g.edge_count()) + 1, 0);
    for (const EdgeId id : removed) {
        if (!g.has_edge(id)) {
            throw std::invalid_argument("unknown edge id " + std::to_string(id));
        }
        mask[static_cast<std::size_t>(id)] = 1;
    }
    return components_without(g, mask).size() >= 2;
}

}  // namespace ecc
