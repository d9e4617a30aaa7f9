#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pilearn {

/// Undirected link, stored with u < v. Ordering is lexicographic on (u, v).
struct Link {
    std::size_t u = 0;
    std::size_t v = 0;

    Link() = default;
    Link(std::size_t a, std::size_t b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Link&) const = default;
};

/// Links in canonical (sorted, duplicate-free) order.
using LinkSet = std::vector<Link>;

/// Sorts and validates; throws std::invalid_argument on duplicates or self-loops.
LinkSet make_link_set(std::vector<Link> links);

/// Sorted distinct endpoints of a set of links.
std::vector<std::size_t> endpoints(std::span<const Link> links);

/// Simple undirected graph over nodes 0..n-1 (adjacency matrix).
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t nodes);
    Graph(std::size_t nodes, std::span<const Link> links);

    static Graph complete(std::size_t nodes);

    std::size_t node_count() const noexcept { return n_; }
    std::size_t link_count() const noexcept { return m_; }

    bool has_link(std::size_t a, std::size_t b) const;
    bool has_link(const Link& l) const { return has_link(l.u, l.v); }

    /// Throws std::invalid_argument on self-loops, out-of-range endpoints or duplicates.
    void add_link(const Link& l);
    void add_links(std::span<const Link> links);
    void remove_link(const Link& l);

    LinkSet links() const;
    /// Absent node pairs in canonical order.
    LinkSet non_links() const;
    std::vector<std::size_t> neighbors(std::size_t v) const;
    std::size_t degree(std::size_t v) const;

    /// Connected components, each sorted, ordered by smallest member.
    std::vector<std::vector<std::size_t>> components() const;

    bool operator==(const Graph&) const = default;

private:
    void check_node(std::size_t v) const;

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint8_t> adj_;
};

}  // namespace pilearn
