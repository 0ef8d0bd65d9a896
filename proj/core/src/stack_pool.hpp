#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "pumpkit/pda.hpp"

namespace pumpkit::detail {

/// Hash-consed persistent stacks: equal stacks share one node id, so a
/// stack compares in O(1).
class StackPool {
public:
    using Node = std::uint32_t;
    static constexpr Node kEmpty = 0;

    StackPool() { nodes_.push_back({SymbolId::blank(), kEmpty, 0}); }

    Node push(Node below, SymbolId symbol)
    {
        const std::uint64_t key = (std::uint64_t{below} << 32) | symbol.value;
        auto [it, inserted] = index_.try_emplace(key, static_cast<Node>(nodes_.size()));
        if (inserted)
            nodes_.push_back({symbol, below, nodes_[below].height + 1});
        return it->second;
    }

    Node from_sequence(std::span<const SymbolId> deepestFirst)
    {
        Node n = kEmpty;
        for (SymbolId s : deepestFirst)
            n = push(n, s);
        return n;
    }

    Node below(Node n) const { return nodes_[n].below; }
    SymbolId top(Node n) const { return nodes_[n].symbol; }
    std::size_t height(Node n) const { return nodes_[n].height; }

private:
    struct Entry {
        SymbolId symbol;
        Node below;
        std::size_t height;
    };
    std::vector<Entry> nodes_;
    std::unordered_map<std::uint64_t, Node> index_;
};

} // namespace pumpkit::detail
