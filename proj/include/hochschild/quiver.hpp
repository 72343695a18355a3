#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hochschild/bigint.hpp"

namespace hochschild {

using VertexId = std::uint32_t;
using ArrowId = std::uint32_t;

struct Arrow {
    std::string name;
    VertexId source = 0;
    VertexId target = 0;
};

/// Finite directed multigraph with named vertices and arrows.
///
/// Declaration order of vertices and arrows is significant: it fixes the
/// order of every path list, basis, and matrix derived from the quiver.
/// Immutable after construction.
class Quiver {
public:
    /// Throws std::invalid_argument on duplicate names, dangling endpoints,
    /// or an empty vertex list.
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows, std::string name = {});

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }

    const std::string& name() const { return name_; }
    const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
    const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    VertexId source(ArrowId a) const { return arrows_[a].source; }
    VertexId target(ArrowId a) const { return arrows_[a].target; }

    /// Arrows leaving / entering a vertex, in declaration order.
    std::span<const ArrowId> arrows_out(VertexId v) const { return out_[v]; }
    std::span<const ArrowId> arrows_in(VertexId v) const { return in_[v]; }

    std::optional<VertexId> find_vertex(std::string_view name) const;
    std::optional<ArrowId> find_arrow(std::string_view name) const;

    /// True when every arrow name is a single character, so paths print as words.
    bool short_arrow_names() const { return short_names_; }

private:
    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<ArrowId>> out_;
    std::vector<std::vector<ArrowId>> in_;
    bool short_names_ = true;
};

/// Composable arrow sequence. `base` is the origin; it is the whole path
/// when `arrows` is empty (a trivial path at a vertex).
struct Path {
    VertexId base = 0;
    std::vector<ArrowId> arrows;

    std::size_t length() const { return arrows.size(); }
    bool trivial() const { return arrows.empty(); }

    // lexicographic in arrow indices; trivial paths compare by vertex
    friend std::strong_ordering operator<=>(const Path& a, const Path& b)
    {
        if (auto c = std::lexicographical_compare_three_way(a.arrows.begin(), a.arrows.end(), b.arrows.begin(),
                                                            b.arrows.end());
            c != 0)
            return c;
        return a.base <=> b.base;
    }
    friend bool operator==(const Path&, const Path&) = default;
};

Path trivial_path(VertexId v);

/// Builds a path from arrow indices; throws std::invalid_argument unless the
/// arrows compose (or the list is empty, which needs `base`).
Path make_path(const Quiver& q, std::vector<ArrowId> arrows, std::optional<VertexId> base = std::nullopt);

VertexId origin(const Quiver& q, const Path& p);
VertexId terminus(const Quiver& q, const Path& p);
bool is_oriented_cycle(const Quiver& q, const Path& p);

/// `p` followed by `r`; requires terminus(p) == origin(r).
Path concat(const Quiver& q, const Path& p, const Path& r);
Path concat(const Quiver& q, const Path& p, const Path& r, const Path& s);

/// The subpath of length `j` starting at the origin.
Path prefix(const Path& p, std::size_t j);

/// Arrow names joined into a word ("aba"), with "." separators when some
/// arrow name is longer than one character; trivial paths print as "e_<vertex>".
std::string format_path(const Quiver& q, const Path& p);

/// Inverse of format_path.
Path parse_path(const Quiver& q, std::string_view text);

struct EnumerationLimits {
    std::size_t max_paths = 200000;
};

/// Parses the line-oriented quiver format:
///   # comment
///   vertex <id>
///   arrow <name> <source> <target>
/// Identifiers match [A-Za-z0-9_]+. Throws ParseError with the line number.
Quiver parse_quiver(std::string_view text, std::string name = {});

/// Reads and parses a file; the quiver is named after the file stem.
Quiver load_quiver(const std::filesystem::path& file);

struct QuiverClassification {
    bool weakly_connected = false;
    bool has_oriented_cycle = false;
    std::optional<Path> shortest_cycle;
    bool is_basic_cycle = false;
    std::optional<std::size_t> basic_cycle_length;
    std::vector<VertexId> sources;
    std::vector<VertexId> sinks;
};

QuiverClassification classify(const Quiver& q);

bool is_source(const Quiver& q, VertexId v);
bool is_sink(const Quiver& q, VertexId v);

/// Entry (u, v) is the number of length-`length` paths from u to v.
DenseIntMatrix path_count_matrix(const Quiver& q, std::size_t length);

BigInt count_paths(const Quiver& q, std::size_t length, VertexId from, VertexId to);

/// All paths of exactly `length` arrows from `from` to `to`, lexicographic in
/// arrow indices. Throws CapExceeded when the result would exceed the cap.
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t length, VertexId from, VertexId to,
                                  const EnumerationLimits& limits = {});

/// Size of the parallel-pair set (i//j).
BigInt count_parallel(const Quiver& q, std::size_t i, std::size_t j);

/// Cyclic shift of an oriented cycle moving its first `k` arrows to the end.
Path rotate(const Quiver& q, const Path& cycle, std::size_t k);

} // namespace hochschild
