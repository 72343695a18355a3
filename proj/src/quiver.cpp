#include "hochschild/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include "hochschild/disjoint_sets.hpp"
#include "hochschild/errors.hpp"

namespace hochschild {

namespace {

bool is_identifier(std::string_view s)
{
    if (s.empty())
        return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

std::vector<std::string_view> split_words(std::string_view line)
{
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            words.push_back(line.substr(i, j - i));
        i = j;
    }
    return words;
}

// walks[k][w] = number of length-k paths from w to `to`
std::vector<std::vector<BigInt>> walks_into(const Quiver& q, std::size_t length, VertexId to)
{
    std::vector<std::vector<BigInt>> walks(length + 1, std::vector<BigInt>(q.vertex_count(), BigInt(0)));
    walks[0][to] = 1;
    for (std::size_t k = 1; k <= length; ++k)
        for (ArrowId a = 0; a < q.arrow_count(); ++a)
            walks[k][q.source(a)] += walks[k - 1][q.target(a)];
    return walks;
}

// reach[k][w]: some length-k path runs from w to `to`
std::vector<std::vector<char>> reachable_into(const Quiver& q, std::size_t length, VertexId to)
{
    std::vector<std::vector<char>> reach(length + 1, std::vector<char>(q.vertex_count(), 0));
    reach[0][to] = 1;
    for (std::size_t k = 1; k <= length; ++k)
        for (ArrowId a = 0; a < q.arrow_count(); ++a)
            if (reach[k - 1][q.target(a)])
                reach[k][q.source(a)] = 1;
    return reach;
}

} // namespace

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows, std::string name)
    : name_(std::move(name)), vertices_(std::move(vertices)), arrows_(std::move(arrows))
{
    if (vertices_.empty())
        throw std::invalid_argument("quiver has no vertices");
    std::unordered_set<std::string> seen;
    for (const auto& v : vertices_)
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate vertex '" + v + "'");
    seen.clear();
    out_.resize(vertices_.size());
    in_.resize(vertices_.size());
    for (ArrowId a = 0; a < arrows_.size(); ++a) {
        const Arrow& arr = arrows_[a];
        if (!seen.insert(arr.name).second)
            throw std::invalid_argument("duplicate arrow '" + arr.name + "'");
        if (arr.source >= vertices_.size() || arr.target >= vertices_.size())
            throw std::invalid_argument("arrow '" + arr.name + "' has an undeclared endpoint");
        out_[arr.source].push_back(a);
        in_[arr.target].push_back(a);
        if (arr.name.size() != 1)
            short_names_ = false;
    }
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const
{
    for (VertexId v = 0; v < vertices_.size(); ++v)
        if (vertices_[v] == name)
            return v;
    return std::nullopt;
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const
{
    for (ArrowId a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].name == name)
            return a;
    return std::nullopt;
}

Path trivial_path(VertexId v) { return Path{v, {}}; }

Path make_path(const Quiver& q, std::vector<ArrowId> arrows, std::optional<VertexId> base)
{
    if (arrows.empty()) {
        if (!base || *base >= q.vertex_count())
            throw std::invalid_argument("trivial path needs a valid vertex");
        return trivial_path(*base);
    }
    for (ArrowId a : arrows)
        if (a >= q.arrow_count())
            throw std::invalid_argument("arrow index out of range");
    for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
        if (q.target(arrows[i]) != q.source(arrows[i + 1]))
            throw std::invalid_argument("arrows '" + q.arrow(arrows[i]).name + "' and '" +
                                        q.arrow(arrows[i + 1]).name + "' do not compose");
    const VertexId start = q.source(arrows.front());
    if (base && *base != start)
        throw std::invalid_argument("path origin does not match its first arrow");
    return Path{start, std::move(arrows)};
}

VertexId origin(const Quiver& q, const Path& p) { return p.trivial() ? p.base : q.source(p.arrows.front()); }

VertexId terminus(const Quiver& q, const Path& p) { return p.trivial() ? p.base : q.target(p.arrows.back()); }

bool is_oriented_cycle(const Quiver& q, const Path& p) { return !p.trivial() && origin(q, p) == terminus(q, p); }

Path concat(const Quiver& q, const Path& p, const Path& r)
{
    if (terminus(q, p) != origin(q, r))
        throw std::invalid_argument("paths do not compose");
    Path out{origin(q, p), p.arrows};
    out.arrows.insert(out.arrows.end(), r.arrows.begin(), r.arrows.end());
    return out;
}

Path concat(const Quiver& q, const Path& p, const Path& r, const Path& s) { return concat(q, concat(q, p, r), s); }

Path prefix(const Path& p, std::size_t j)
{
    if (j > p.length())
        throw std::invalid_argument("prefix longer than path");
    return Path{p.base, std::vector<ArrowId>(p.arrows.begin(), p.arrows.begin() + static_cast<std::ptrdiff_t>(j))};
}

std::string format_path(const Quiver& q, const Path& p)
{
    if (p.trivial())
        return "e_" + q.vertex_name(p.base);
    std::string out;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i > 0 && !q.short_arrow_names())
            out += '.';
        out += q.arrow(p.arrows[i]).name;
    }
    return out;
}

Path parse_path(const Quiver& q, std::string_view text)
{
    if (text.starts_with("e_")) {
        if (auto v = q.find_vertex(text.substr(2)))
            return trivial_path(*v);
    }
    std::vector<ArrowId> arrows;
    auto push = [&](std::string_view name) {
        auto a = q.find_arrow(name);
        if (!a)
            throw std::invalid_argument("unknown arrow '" + std::string(name) + "'");
        arrows.push_back(*a);
    };
    if (q.short_arrow_names() && text.find('.') == std::string_view::npos) {
        for (std::size_t i = 0; i < text.size(); ++i)
            push(text.substr(i, 1));
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t dot = std::min(text.find('.', start), text.size());
            push(text.substr(start, dot - start));
            start = dot + 1;
        }
    }
    if (arrows.empty())
        throw std::invalid_argument("empty path");
    return make_path(q, std::move(arrows));
}

Quiver parse_quiver(std::string_view text, std::string name)
{
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::unordered_set<std::string> vertex_names;
    std::unordered_set<std::string> arrow_names;
    std::vector<std::tuple<std::string, std::string, std::string, std::size_t>> pending;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto words = split_words(line);
        if (words.empty())
            continue;
        for (std::size_t k = 1; k < words.size(); ++k)
            if (!is_identifier(words[k]))
                throw ParseError(line_no, "invalid identifier '" + std::string(words[k]) + "'");
        if (words[0] == "vertex") {
            if (words.size() != 2)
                throw ParseError(line_no, "expected 'vertex <id>'");
            std::string id(words[1]);
            if (!vertex_names.insert(id).second)
                throw ParseError(line_no, "duplicate vertex '" + id + "'");
            vertices.push_back(std::move(id));
        } else if (words[0] == "arrow") {
            if (words.size() != 4)
                throw ParseError(line_no, "expected 'arrow <name> <source> <target>'");
            std::string id(words[1]);
            if (!arrow_names.insert(id).second)
                throw ParseError(line_no, "duplicate arrow name '" + id + "'");
            pending.emplace_back(std::move(id), std::string(words[2]), std::string(words[3]), line_no);
        } else {
            throw ParseError(line_no, "unknown directive '" + std::string(words[0]) + "'");
        }
    }

    // arrows may reference vertices declared later in the document
    auto vertex_index = [&](const std::string& id, std::size_t line) -> VertexId {
        auto it = std::find(vertices.begin(), vertices.end(), id);
        if (it == vertices.end())
            throw ParseError(line, "undeclared vertex '" + id + "'");
        return static_cast<VertexId>(it - vertices.begin());
    };
    for (auto& [id, src, tgt, line] : pending)
        arrows.push_back(Arrow{id, vertex_index(src, line), vertex_index(tgt, line)});
    if (vertices.empty())
        throw ParseError(line_no, "no vertices declared");
    return Quiver(std::move(vertices), std::move(arrows), std::move(name));
}

Quiver load_quiver(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        throw Error("cannot open quiver file '" + file.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_quiver(buf.str(), file.stem().string());
}

bool is_source(const Quiver& q, VertexId v) { return q.arrows_in(v).empty(); }

bool is_sink(const Quiver& q, VertexId v) { return q.arrows_out(v).empty(); }

QuiverClassification classify(const Quiver& q)
{
    QuiverClassification c;
    const std::size_t nv = q.vertex_count();

    DisjointSets components(nv);
    for (const Arrow& a : q.arrows())
        components.unite(a.source, a.target);
    std::size_t roots = 0;
    for (VertexId v = 0; v < nv; ++v)
        roots += components.find(v) == v;
    c.weakly_connected = roots == 1;

    for (VertexId v = 0; v < nv; ++v) {
        if (is_source(q, v))
            c.sources.push_back(v);
        if (is_sink(q, v))
            c.sinks.push_back(v);
    }

    // girth: minimum over arrows a of 1 + dist(t(a), o(a))
    std::size_t girth = std::numeric_limits<std::size_t>::max();
    for (VertexId s = 0; s < nv; ++s) {
        std::vector<std::size_t> dist(nv, std::numeric_limits<std::size_t>::max());
        std::queue<VertexId> frontier;
        dist[s] = 0;
        frontier.push(s);
        while (!frontier.empty()) {
            const VertexId x = frontier.front();
            frontier.pop();
            for (ArrowId a : q.arrows_out(x)) {
                const VertexId y = q.target(a);
                if (y == s)
                    girth = std::min(girth, dist[x] + 1);
                if (dist[y] == std::numeric_limits<std::size_t>::max()) {
                    dist[y] = dist[x] + 1;
                    frontier.push(y);
                }
            }
        }
    }
    c.has_oriented_cycle = girth != std::numeric_limits<std::size_t>::max();

    if (c.has_oriented_cycle) {
        // lexicographically least closed walk of length `girth`, built greedily
        std::vector<ArrowId> word;
        for (ArrowId first = 0; first < q.arrow_count() && word.empty(); ++first) {
            const VertexId start = q.source(first);
            const auto reach = reachable_into(q, girth, start);
            if (!reach[girth - 1][q.target(first)])
                continue;
            word.push_back(first);
            VertexId at = q.target(first);
            for (std::size_t left = girth - 1; left > 0; --left) {
                for (ArrowId a : q.arrows_out(at)) {
                    if (reach[left - 1][q.target(a)]) {
                        word.push_back(a);
                        at = q.target(a);
                        break;
                    }
                }
            }
        }
        c.shortest_cycle = make_path(q, std::move(word));
    }

    bool degrees_one = q.vertex_count() == q.arrow_count();
    for (VertexId v = 0; v < nv && degrees_one; ++v)
        degrees_one = q.arrows_in(v).size() == 1 && q.arrows_out(v).size() == 1;
    c.is_basic_cycle = degrees_one && c.weakly_connected;
    if (c.is_basic_cycle)
        c.basic_cycle_length = q.arrow_count();
    return c;
}

DenseIntMatrix path_count_matrix(const Quiver& q, std::size_t length)
{
    const auto nv = static_cast<Eigen::Index>(q.vertex_count());
    DenseIntMatrix adjacency = DenseIntMatrix::Constant(nv, nv, BigInt(0));
    for (const Arrow& a : q.arrows())
        adjacency(a.source, a.target) += 1;

    DenseIntMatrix result = DenseIntMatrix::Identity(nv, nv);
    DenseIntMatrix base = adjacency;
    for (std::size_t e = length; e > 0; e >>= 1) {
        if (e & 1)
            result = (result * base).eval();
        if (e > 1)
            base = (base * base).eval();
    }
    return result;
}

BigInt count_paths(const Quiver& q, std::size_t length, VertexId from, VertexId to)
{
    return walks_into(q, length, to)[length][from];
}

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t length, VertexId from, VertexId to,
                                  const EnumerationLimits& limits)
{
    const auto walks = walks_into(q, length, to);
    const BigInt total = walks[length][from];
    if (total > BigInt(static_cast<unsigned long>(limits.max_paths)))
        throw CapExceeded("enumerating length-" + std::to_string(length) + " paths from " + q.vertex_name(from) +
                          " to " + q.vertex_name(to) + " would produce " + total.str() + " paths (cap " +
                          std::to_string(limits.max_paths) + ")");

    std::vector<Path> out;
    out.reserve(static_cast<std::size_t>(total.to_u64()));
    if (length == 0) {
        if (from == to)
            out.push_back(trivial_path(from));
        return out;
    }

    // depth-first in arrow order, pruned to prefixes that can still reach `to`
    std::vector<ArrowId> word;
    word.reserve(length);
    auto extend = [&](auto&& self, VertexId at) -> void {
        const std::size_t left = length - word.size();
        if (left == 0) {
            out.push_back(Path{from, word});
            return;
        }
        for (ArrowId a : q.arrows_out(at)) {
            if (walks[left - 1][q.target(a)].is_zero())
                continue;
            word.push_back(a);
            self(self, q.target(a));
            word.pop_back();
        }
    };
    extend(extend, from);
    return out;
}

BigInt count_parallel(const Quiver& q, std::size_t i, std::size_t j)
{
    const DenseIntMatrix first = path_count_matrix(q, i);
    const DenseIntMatrix second = i == j ? first : path_count_matrix(q, j);
    return first.cwiseProduct(second).sum();
}

Path rotate(const Quiver& q, const Path& cycle, std::size_t k)
{
    if (!is_oriented_cycle(q, cycle))
        throw std::invalid_argument("rotate needs an oriented cycle");
    if (k >= cycle.length())
        throw std::invalid_argument("rotation amount must be below the cycle length");
    std::vector<ArrowId> arrows(cycle.arrows.begin() + static_cast<std::ptrdiff_t>(k), cycle.arrows.end());
    arrows.insert(arrows.end(), cycle.arrows.begin(), cycle.arrows.begin() + static_cast<std::ptrdiff_t>(k));
    return make_path(q, std::move(arrows));
}

} // namespace hochschild
