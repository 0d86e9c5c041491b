#include "missmass/max_clique.hpp"

#include "missmass/errors.hpp"

#include <algorithm>
#include <bit>

namespace missmass {

Graph::Graph(std::size_t vertices)
    : n_(vertices), words_((vertices + 63) / 64), rows_(vertices * ((vertices + 63) / 64), 0) {}

void Graph::add_edge(std::size_t a, std::size_t b) {
    if (a >= n_ || b >= n_) throw ArgumentError("graph vertex out of range");
    if (a == b) return;
    rows_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
    rows_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
}

std::size_t Graph::degree(std::size_t v) const noexcept {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) total += static_cast<std::size_t>(std::popcount(row(v)[w]));
    return total;
}

namespace {

// Smallest-last ordering, returned with the highest-core vertices first.
std::vector<std::size_t> degeneracy_order(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> degree(n);
    std::vector<char> removed(n, 0);
    for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (!removed[v] && (pick == n || degree[v] < degree[pick])) pick = v;
        }
        removed[pick] = 1;
        order.push_back(pick);
        for (std::size_t u = 0; u < n; ++u) {
            if (!removed[u] && g.adjacent(pick, u)) --degree[u];
        }
    }
    std::reverse(order.begin(), order.end());
    return order;
}

class Search {
public:
    explicit Search(const Graph& g) : g_(g) {}

    std::vector<std::size_t> run() {
        if (g_.size() == 0) return {};
        best_ = {degeneracy_order(g_).front()};
        std::vector<std::size_t> candidates = degeneracy_order(g_);
        expand(candidates);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    // Greedy sequential colouring of the candidates in their given order.
    // Outputs the vertices sorted by colour together with the colour numbers,
    // which bound the clique size attainable from each prefix.
    void colour(const std::vector<std::size_t>& candidates, std::vector<std::size_t>& order,
                std::vector<std::size_t>& bounds) const {
        order.clear();
        bounds.clear();
        std::vector<std::size_t> uncoloured = candidates;
        std::size_t colour_number = 0;
        std::vector<std::size_t> klass;
        while (!uncoloured.empty()) {
            ++colour_number;
            klass.clear();
            std::vector<std::size_t> rest;
            for (std::size_t v : uncoloured) {
                bool clash = false;
                for (std::size_t u : klass) {
                    if (g_.adjacent(u, v)) {
                        clash = true;
                        break;
                    }
                }
                if (clash) {
                    rest.push_back(v);
                } else {
                    klass.push_back(v);
                }
            }
            for (std::size_t v : klass) {
                order.push_back(v);
                bounds.push_back(colour_number);
            }
            uncoloured.swap(rest);
        }
    }

    void expand(std::vector<std::size_t> candidates) {
        std::vector<std::size_t> order;
        std::vector<std::size_t> bounds;
        colour(candidates, order, bounds);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current_.size() + bounds[idx] <= best_.size()) return;
            const std::size_t v = order[idx];
            current_.push_back(v);
            std::vector<std::size_t> next;
            for (std::size_t j = 0; j < idx; ++j) {
                if (g_.adjacent(v, order[j])) next.push_back(order[j]);
            }
            if (next.empty()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
        }
    }

    const Graph& g_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
};

} // namespace

std::vector<std::size_t> maximum_clique(const Graph& graph) {
    return Search(graph).run();
}

} // namespace missmass
