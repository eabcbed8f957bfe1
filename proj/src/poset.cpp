#include "lecount/poset.hpp"

#include <algorithm>
#include <set>

namespace lecount {

Poset Poset::from_covers(int n, const std::vector<CoverPair>& pairs) {
    if (n < 0) throw IndexError("negative poset size");
    Poset p;
    p.n_ = n;
    p.closure_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    for (const CoverPair& c : pairs) {
        p.check(c.lower);
        p.check(c.upper);
        if (c.lower == c.upper)
            throw CycleError("relation " + std::to_string(c.lower) + "<" +
                             std::to_string(c.upper) + " is reflexive");
    }
    // Transitive closure by repeated relaxation over the pair list.
    std::vector<std::vector<int>> up(static_cast<size_t>(n));
    for (const CoverPair& c : pairs) up[c.lower].push_back(c.upper);
    for (int x = 0; x < n; ++x) {
        // Depth-first reachability from x.
        std::vector<int> stack(up[x]);
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            if (y == x)
                throw CycleError("relations close into a cycle through " +
                                 std::to_string(x));
            size_t idx = p.index(x, y);
            if (p.closure_[idx]) continue;
            p.closure_[idx] = 1;
            for (int z : up[y]) stack.push_back(z);
        }
    }
    // Transitive reduction: (x,y) is a cover iff no z lies strictly between.
    std::set<CoverPair> covers;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (!p.less(x, y)) continue;
            bool direct = true;
            for (int z = 0; z < n && direct; ++z)
                if (p.less(x, z) && p.less(z, y)) direct = false;
            if (direct) covers.insert({x, y});
        }
    }
    p.covers_.assign(covers.begin(), covers.end());
    return p;
}

bool Poset::is_cover(int x, int y) const {
    check(x);
    check(y);
    return std::binary_search(covers_.begin(), covers_.end(),
                              CoverPair{x, y});
}

std::vector<int> Poset::up_covers(int x) const {
    check(x);
    std::vector<int> r;
    for (const CoverPair& c : covers_)
        if (c.lower == x) r.push_back(c.upper);
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<int> Poset::down_covers(int x) const {
    check(x);
    std::vector<int> r;
    for (const CoverPair& c : covers_)
        if (c.upper == x) r.push_back(c.lower);
    return r;  // already ascending: covers_ is sorted by lower first
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<char> has_lower(static_cast<size_t>(n_), 0);
    for (const CoverPair& c : covers_) has_lower[c.upper] = 1;
    std::vector<int> r;
    for (int x = 0; x < n_; ++x)
        if (!has_lower[x]) r.push_back(x);
    return r;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<char> has_upper(static_cast<size_t>(n_), 0);
    for (const CoverPair& c : covers_) has_upper[c.lower] = 1;
    std::vector<int> r;
    for (int x = 0; x < n_; ++x)
        if (!has_upper[x]) r.push_back(x);
    return r;
}

std::vector<int> Poset::below(int x) const {
    check(x);
    std::vector<int> r;
    for (int z = 0; z < n_; ++z)
        if (less(z, x)) r.push_back(z);
    return r;
}

std::vector<int> Poset::above(int x) const {
    check(x);
    std::vector<int> r;
    for (int z = 0; z < n_; ++z)
        if (less(x, z)) r.push_back(z);
    return r;
}

std::vector<std::vector<int>> Poset::components() const {
    std::vector<int> comp(static_cast<size_t>(n_), -1);
    std::vector<std::vector<int>> adj(static_cast<size_t>(n_));
    for (const CoverPair& c : covers_) {
        adj[c.lower].push_back(c.upper);
        adj[c.upper].push_back(c.lower);
    }
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            out[id].push_back(x);
            for (int y : adj[x]) {
                if (comp[y] < 0) {
                    comp[y] = id;
                    stack.push_back(y);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool Poset::is_connected() const {
    return components().size() <= 1;
}

bool Poset::is_bridge(const CoverPair& c) const {
    if (!is_cover(c.lower, c.upper))
        throw NotACoverError(std::to_string(c.lower) + "<" +
                             std::to_string(c.upper) + " is not a cover");
    // Component count of the Hasse graph with and without the edge.
    auto component_count = [this](const CoverPair* skip) {
        std::vector<std::vector<int>> adj(static_cast<size_t>(n_));
        for (const CoverPair& d : covers_) {
            if (skip && d == *skip) continue;
            adj[d.lower].push_back(d.upper);
            adj[d.upper].push_back(d.lower);
        }
        std::vector<char> seen(static_cast<size_t>(n_), 0);
        int count = 0;
        for (int s = 0; s < n_; ++s) {
            if (seen[s]) continue;
            ++count;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : adj[x]) {
                    if (!seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
                }
            }
        }
        return count;
    };
    return component_count(&c) > component_count(nullptr);
}

std::pair<Poset, std::vector<int>> Poset::induced(
    std::vector<int> elems) const {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (int x : elems) check(x);
    int m = static_cast<int>(elems.size());
    std::vector<CoverPair> rel;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (less(elems[i], elems[j]))
                rel.push_back({i, j});
    return {from_covers(m, rel), std::move(elems)};
}

std::pair<Poset, std::vector<int>> Poset::interval(int x, int y) const {
    check(x);
    check(y);
    std::vector<int> elems;
    for (int z = 0; z < n_; ++z)
        if (leq(x, z) && leq(z, y)) elems.push_back(z);
    return induced(std::move(elems));
}

Poset chain(int n) {
    std::vector<CoverPair> covers;
    for (int i = 0; i + 1 < n; ++i) covers.push_back({i, i + 1});
    return Poset::from_covers(n, covers);
}

Poset antichain(int n) {
    return Poset::from_covers(n, {});
}

Poset disjoint_sum(const Poset& a, const Poset& b) {
    std::vector<CoverPair> covers(a.covers());
    for (const CoverPair& c : b.covers())
        covers.push_back({c.lower + a.size(), c.upper + a.size()});
    return Poset::from_covers(a.size() + b.size(), covers);
}

Poset add_relations(const Poset& p, const std::vector<CoverPair>& pairs) {
    for (const CoverPair& c : pairs) {
        if (c.lower == c.upper || p.comparable(c.lower, c.upper))
            throw ComparableError("elements " + std::to_string(c.lower) +
                                  " and " + std::to_string(c.upper) +
                                  " are already comparable");
    }
    std::vector<CoverPair> covers(p.covers());
    covers.insert(covers.end(), pairs.begin(), pairs.end());
    return Poset::from_covers(p.size(), covers);
}

Poset remove_covers(const Poset& p, const std::vector<CoverPair>& covers) {
    std::set<CoverPair> drop;
    for (const CoverPair& c : covers) {
        if (!p.is_cover(c.lower, c.upper))
            throw NotACoverError(std::to_string(c.lower) + "<" +
                                 std::to_string(c.upper) +
                                 " is not a cover");
        drop.insert(c);
    }
    std::vector<CoverPair> rest;
    for (const CoverPair& c : p.covers())
        if (!drop.count(c)) rest.push_back(c);
    return Poset::from_covers(p.size(), rest);
}

Poset fold(const Poset& p, const std::vector<CoverPair>& s,
           const std::vector<CoverPair>& f) {
    std::set<CoverPair> in_f(f.begin(), f.end());
    for (const CoverPair& c : s)
        if (!in_f.count(c))
            throw NotACoverError("reversed pair " + std::to_string(c.lower) +
                                 "<" + std::to_string(c.upper) +
                                 " is not in the removed set");
    Poset stripped = remove_covers(p, f);
    std::vector<CoverPair> reversed;
    for (const CoverPair& c : s) reversed.push_back({c.upper, c.lower});
    return add_relations(stripped, reversed);
}

Poset fold(const Poset& p, const std::vector<CoverPair>& f) {
    return fold(p, f, f);
}

Poset slant_sum(const Poset& p, int attach_p, const Poset& q, int attach_q) {
    if (attach_p < 0 || attach_p >= p.size())
        throw IndexError("attach element outside the lower poset");
    if (attach_q < 0 || attach_q >= q.size())
        throw IndexError("attach element outside the hung poset");
    Poset sum = disjoint_sum(p, q);
    return add_relations(sum, {{attach_q + p.size(), attach_p}});
}

}  // namespace lecount
