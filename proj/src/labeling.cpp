#include "lecount/labeling.hpp"

#include <algorithm>

namespace lecount {

void validate_labeling(const LabeledPoset& lp) {
    int n = lp.poset.size();
    if (static_cast<int>(lp.omega.size()) != n)
        throw IndexError("labeling has " + std::to_string(lp.omega.size()) +
                         " entries for " + std::to_string(n) + " elements");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : lp.omega) {
        if (v < 1 || v > n)
            throw IndexError("label " + std::to_string(v) +
                             " outside 1.." + std::to_string(n));
        if (seen[v])
            throw IndexError("label " + std::to_string(v) + " repeated");
        seen[v] = 1;
    }
}

bool is_natural(const LabeledPoset& lp) {
    validate_labeling(lp);
    int n = lp.poset.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (lp.poset.less(x, y) && lp.omega[x] > lp.omega[y])
                return false;
    return true;
}

bool is_regular(const LabeledPoset& lp) {
    validate_labeling(lp);
    int n = lp.poset.size();
    std::vector<int> by_label(static_cast<size_t>(n) + 1, -1);
    for (int x = 0; x < n; ++x) by_label[lp.omega[x]] = x;
    for (int x = 0; x < n; ++x) {
        for (int z = 0; z < n; ++z) {
            if (!lp.poset.less(x, z)) continue;
            int lo = std::min(lp.omega[x], lp.omega[z]);
            int hi = std::max(lp.omega[x], lp.omega[z]);
            for (int lab = lo + 1; lab < hi; ++lab) {
                int y = by_label[lab];
                if (!lp.poset.less(x, y) && !lp.poset.less(y, z))
                    return false;
            }
        }
    }
    return true;
}

long labeled_inversions(const LabeledPoset& lp) {
    validate_labeling(lp);
    int n = lp.poset.size();
    long count = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (lp.poset.less(x, y) && lp.omega[y] < lp.omega[x]) ++count;
    return count;
}

std::vector<int> labeled_descents(const LabeledPoset& lp) {
    validate_labeling(lp);
    std::vector<int> out;
    for (int x = 0; x < lp.poset.size(); ++x) {
        for (int y : lp.poset.up_covers(x)) {
            if (lp.omega[x] > lp.omega[y]) {
                out.push_back(x);
                break;
            }
        }
    }
    return out;
}

std::vector<int> extension_word(const LabeledPoset& lp,
                                const std::vector<int>& extension) {
    std::vector<int> word;
    word.reserve(extension.size());
    for (int x : extension) word.push_back(lp.omega[x]);
    return word;
}

std::vector<int> standardize_labels(const std::vector<int>& labels) {
    std::vector<int> sorted(labels);
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out;
    out.reserve(labels.size());
    for (int v : labels) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        out.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return out;
}

}  // namespace lecount
