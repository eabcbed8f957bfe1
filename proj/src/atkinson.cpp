#include "lecount/atkinson.hpp"

#include <algorithm>
#include <utility>

#include "lecount/dcomplete.hpp"
#include "lecount/errors.hpp"

namespace lecount {

namespace {

void check_dimensions(std::size_t u, std::size_t v) {
    if (u == 0 || v == 0) {
        throw DimensionError("combine requires nonempty spectra");
    }
}

// Hasse neighbours of every element, covers in both directions.
std::vector<std::vector<int>> hasse_adjacency(const Poset& p) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(p.size()));
    for (const CoverPair& c : p.covers()) {
        adj[static_cast<size_t>(c.lower)].push_back(c.upper);
        adj[static_cast<size_t>(c.upper)].push_back(c.lower);
    }
    return adj;
}

void check_tree_element(const Poset& p, int a) {
    if (!is_tree_poset(p)) {
        throw NotTreePosetError("Hasse diagram is not a tree");
    }
    if (a < 0 || a >= p.size()) {
        throw IndexError("element " + std::to_string(a) + " out of range");
    }
}

std::vector<Int> spectrum_below(const Poset& p,
                                const std::vector<std::vector<int>>& adj,
                                int v, int parent) {
    std::vector<Int> spec{1};
    for (int c : adj[static_cast<size_t>(v)]) {
        if (c == parent) continue;
        std::vector<Int> child = spectrum_below(p, adj, c, v);
        if (p.is_cover(c, v)) {
            spec = atkinson_combine_upper(child, spec);
        } else {
            spec = atkinson_combine_lower(spec, child);
        }
    }
    return spec;
}

int subtree_size(const std::vector<std::vector<int>>& adj, int v, int parent) {
    int size = 1;
    for (int c : adj[static_cast<size_t>(v)]) {
        if (c != parent) size += subtree_size(adj, c, v);
    }
    return size;
}

void assign_block(const Poset& p, const std::vector<std::vector<int>>& adj,
                  int v, int parent, int low, std::vector<int>& labels) {
    std::vector<int> below;
    std::vector<int> above;
    for (int c : adj[static_cast<size_t>(v)]) {
        if (c == parent) continue;
        (p.is_cover(c, v) ? below : above).push_back(c);
    }
    // The merge order peels below-children off the low end of the block,
    // so the first one merged must sit directly under v.
    std::reverse(below.begin(), below.end());
    int cursor = low;
    for (int c : below) {
        assign_block(p, adj, c, v, cursor, labels);
        cursor += subtree_size(adj, c, v);
    }
    labels[static_cast<size_t>(v)] = cursor + 1;
    ++cursor;
    for (int c : above) {
        assign_block(p, adj, c, v, cursor, labels);
        cursor += subtree_size(adj, c, v);
    }
}

struct QNode {
    std::vector<QPoly> spec;
    int low;
    int high;
};

QNode q_spectrum_below(const LabeledPoset& lp,
                       const std::vector<std::vector<int>>& adj, int v,
                       int parent) {
    const int label = lp.omega[static_cast<size_t>(v)];
    QNode node{{QPoly(1)}, label, label};
    std::vector<QNode> below;
    std::vector<QNode> above;
    for (int c : adj[static_cast<size_t>(v)]) {
        if (c == parent) continue;
        QNode child = q_spectrum_below(lp, adj, c, v);
        (lp.poset.is_cover(c, v) ? below : above).push_back(std::move(child));
    }
    // Each merge needs the labels of the side being absorbed to clear the
    // whole blob, so below-children must arrive with descending label
    // blocks and above-children with ascending ones; any other order
    // fails the same comparison sooner.
    std::sort(below.begin(), below.end(),
              [](const QNode& a, const QNode& b) { return a.high > b.high; });
    std::sort(above.begin(), above.end(),
              [](const QNode& a, const QNode& b) { return a.low < b.low; });
    for (QNode& child : below) {
        if (child.high >= node.low) {
            throw IncompatibleLabelingError(
                "labels below element " + std::to_string(v) +
                " are not dominated by the labels above");
        }
        node.spec = q_atkinson_combine_upper(child.spec, node.spec);
        node.low = child.low;
    }
    for (QNode& child : above) {
        if (child.low <= node.high) {
            throw IncompatibleLabelingError(
                "labels above element " + std::to_string(v) +
                " do not dominate the labels below");
        }
        node.spec = q_atkinson_combine_lower(node.spec, child.spec);
        node.high = child.high;
    }
    return node;
}

}  // namespace

std::vector<Int> atkinson_combine_lower(const std::vector<Int>& alpha,
                                        const std::vector<Int>& beta) {
    check_dimensions(alpha.size(), beta.size());
    const long u = static_cast<long>(alpha.size());
    const long v = static_cast<long>(beta.size());
    std::vector<Int> suffix(static_cast<size_t>(v) + 2, 0);
    for (long j = v; j >= 1; --j) {
        suffix[static_cast<size_t>(j)] =
            suffix[static_cast<size_t>(j) + 1] + beta[static_cast<size_t>(j) - 1];
    }
    std::vector<Int> gamma(static_cast<size_t>(u + v), 0);
    for (long r = 1; r <= u + v; ++r) {
        Int total = 0;
        for (long i = std::max(1L, r - v); i <= std::min(u, r); ++i) {
            const long tail_from = std::max(1L, r - i + 1);
            total += alpha[static_cast<size_t>(i) - 1] *
                     binomial(Int(r - 1), i - 1) *
                     binomial(Int(u + v - r), u - i) *
                     suffix[static_cast<size_t>(tail_from)];
        }
        gamma[static_cast<size_t>(r) - 1] = total;
    }
    return gamma;
}

std::vector<Int> atkinson_combine_upper(const std::vector<Int>& alpha,
                                        const std::vector<Int>& beta) {
    check_dimensions(alpha.size(), beta.size());
    // Dualizing both posets swaps the roles of the arguments and reverses
    // every spectrum.
    std::vector<Int> ralpha(alpha.rbegin(), alpha.rend());
    std::vector<Int> rbeta(beta.rbegin(), beta.rend());
    std::vector<Int> gamma = atkinson_combine_lower(rbeta, ralpha);
    std::reverse(gamma.begin(), gamma.end());
    return gamma;
}

std::vector<QPoly> q_atkinson_combine_lower(const std::vector<QPoly>& alpha,
                                            const std::vector<QPoly>& beta) {
    check_dimensions(alpha.size(), beta.size());
    const long u = static_cast<long>(alpha.size());
    const long v = static_cast<long>(beta.size());
    std::vector<QPoly> suffix(static_cast<size_t>(v) + 2);
    for (long j = v; j >= 1; --j) {
        suffix[static_cast<size_t>(j)] =
            suffix[static_cast<size_t>(j) + 1] + beta[static_cast<size_t>(j) - 1];
    }
    std::vector<QPoly> gamma(static_cast<size_t>(u + v));
    for (long r = 1; r <= u + v; ++r) {
        QPoly total;
        for (long i = std::max(1L, r - v); i <= std::min(u, r); ++i) {
            const long tail_from = std::max(1L, r - i + 1);
            // The r-i upper elements placed before the tracked one each
            // pass the u-i+1 lower elements from it onward.
            QPoly term = alpha[static_cast<size_t>(i) - 1] *
                         QPoly::monomial((u - i + 1) * (r - i));
            term *= q_binomial(r - 1, i - 1);
            term *= q_binomial(u + v - r, u - i);
            term *= suffix[static_cast<size_t>(tail_from)];
            total += term;
        }
        gamma[static_cast<size_t>(r) - 1] = std::move(total);
    }
    return gamma;
}

std::vector<QPoly> q_atkinson_combine_upper(const std::vector<QPoly>& alpha,
                                            const std::vector<QPoly>& beta) {
    check_dimensions(alpha.size(), beta.size());
    // Dualizing and reversing the label order preserves inversions, so the
    // reduction to the lower combine carries no q-correction.
    std::vector<QPoly> ralpha(alpha.rbegin(), alpha.rend());
    std::vector<QPoly> rbeta(beta.rbegin(), beta.rend());
    std::vector<QPoly> gamma = q_atkinson_combine_lower(rbeta, ralpha);
    std::reverse(gamma.begin(), gamma.end());
    return gamma;
}

std::vector<Int> atkinson_spectrum(const Poset& p, int a) {
    check_tree_element(p, a);
    return spectrum_below(p, hasse_adjacency(p), a, -1);
}

Int atkinson_count(const Poset& p) {
    if (p.size() == 0) return 1;
    std::vector<Int> spec = atkinson_spectrum(p, 0);
    Int total = 0;
    for (const Int& c : spec) total += c;
    return total;
}

std::vector<int> atkinson_compatible_labeling(const Poset& p, int a) {
    check_tree_element(p, a);
    std::vector<int> labels(static_cast<size_t>(p.size()), 0);
    assign_block(p, hasse_adjacency(p), a, -1, 0, labels);
    return labels;
}

std::vector<QPoly> q_atkinson_spectrum(const LabeledPoset& lp, int a) {
    validate_labeling(lp);
    check_tree_element(lp.poset, a);
    return q_spectrum_below(lp, hasse_adjacency(lp.poset), a, -1).spec;
}

}  // namespace lecount
