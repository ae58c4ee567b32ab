// union_find.hpp
//
// Disjoint-set forest with path halving and union by size.

#ifndef HOCOLIMKIT_UNION_FIND_HPP
#define HOCOLIMKIT_UNION_FIND_HPP

#include <numeric>
#include <utility>
#include <vector>

#include "error.hpp"

namespace hocolimkit
{

class UnionFind
{
public:
    UnionFind() = default;

    explicit UnionFind(Index n)
        : parent_(n), size_(n, 1)
    {
        std::iota(parent_.begin(), parent_.end(), Index{0});
    }

    Index size() const { return parent_.size(); }

    Index find(Index x)
    {
        while (parent_[x] != x)
        {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns true if the two classes were distinct.
    bool unite(Index a, Index b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    /// Relabels classes 0..k-1 in order of first appearance. Returns the
    /// class of each element and the smallest member of each class.
    std::pair<std::vector<Index>, std::vector<Index>> classes()
    {
        std::vector<Index> label(parent_.size(), npos);
        std::vector<Index> rootLabel(parent_.size(), npos);
        std::vector<Index> representative;
        for (Index x = 0; x < parent_.size(); ++x)
        {
            Index const r = find(x);
            if (rootLabel[r] == npos)
            {
                rootLabel[r] = representative.size();
                representative.push_back(x);
            }
            label[x] = rootLabel[r];
        }
        return {std::move(label), std::move(representative)};
    }

private:
    std::vector<Index> parent_;
    std::vector<Index> size_;
};

} // namespace hocolimkit

#endif // HOCOLIMKIT_UNION_FIND_HPP
