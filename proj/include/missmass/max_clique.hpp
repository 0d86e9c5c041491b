#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace missmass {

/// Undirected simple graph with bitset adjacency rows.
class Graph {
public:
    explicit Graph(std::size_t vertices);

    std::size_t size() const noexcept { return n_; }
    void add_edge(std::size_t a, std::size_t b);
    bool adjacent(std::size_t a, std::size_t b) const noexcept {
        return (rows_[a * words_ + b / 64] >> (b % 64)) & 1U;
    }
    std::size_t degree(std::size_t v) const noexcept;
    const std::uint64_t* row(std::size_t v) const noexcept { return rows_.data() + v * words_; }
    std::size_t words() const noexcept { return words_; }

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
};

/// A maximum clique, vertices in increasing order. Branch and bound with greedy
/// colouring bounds over a degeneracy ordering; exact.
std::vector<std::size_t> maximum_clique(const Graph& graph);

} // namespace missmass
