#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lecount/dcomplete.hpp"
#include "lecount/numeric.hpp"
#include "lecount/poset.hpp"

namespace lecount {

inline constexpr int kRecognitionCap = 15;

// Zigzag poset z_1, ..., z_n whose cover between positions i and i+1
// points downward (z_{i+1} covered by z_i) exactly when i is in the
// descent set.
Poset ribbon(int n, const std::vector<int>& descents);

// Ribbon extension count via the classical factorial determinant.
Int macmahon_count(int n, const std::vector<int>& descents);

// A ribbon with hook-counted posets hung below its elements and at most
// one poset anchored above. Hangers attach by a cover from their unique
// maximal element up to the ribbon element; the anchor attaches by a
// cover from ribbon position `position` (1-based) up to `element`,
// which must be acyclic in the anchor poset.
struct MobileSpec {
    struct Anchor {
        int position = 0;
        Poset poset;
        int element = 0;
        bool operator==(const Anchor&) const = default;
    };

    int ribbon_size = 0;
    std::vector<int> descents;
    std::vector<std::vector<Poset>> hangers;  // hangers[i] hang below z_{i+1}
    std::vector<Anchor> anchors;              // at most one

    bool operator==(const MobileSpec&) const = default;
};

// Concrete poset for a spec. Ribbon positions keep indices 0..n-1;
// hanger and anchor elements are appended in declaration order, with
// their final indices recorded part by part.
struct RealizedMobile {
    Poset poset;
    std::vector<int> ribbon;
    std::vector<std::vector<std::vector<int>>> hangers;
    std::vector<int> anchor;
};

RealizedMobile realize(const MobileSpec& m);

// Fold set along the ribbon: every descent cover when free-standing;
// with an anchor at position j, descent covers before j and ascent
// covers from j on. Pairs are listed in ribbon order and use realized
// indices.
struct PathFolds {
    std::vector<CoverPair> folds;
    int anchor_position = 0;  // 0 when free-standing
};

PathFolds path_folds(const MobileSpec& m);

// Linear extensions of realize(m): fold at the path folds, evaluate
// every component-array entry by its hook product, take the
// determinant.
Int count_mobile(const MobileSpec& m, int cap = kDCompleteCap);

// Decomposition of a tree poset into a mobile spec. Fold pairs and
// ribbon elements refer to the input poset's own indices.
struct MobileMatch {
    MobileSpec spec;
    PathFolds folds;
    std::vector<int> ribbon_elements;
};

// Searches Hasse paths between all ordered endpoint pairs for a ribbon
// whose off-path subtrees hang below (rooted trees attached at their
// root) with at most one subtree above, and whose folds leave a rooted
// tree with a path component tree. First hit in endpoint order wins.
std::optional<MobileMatch> recognize_mobile_tree(const Poset& p,
                                                 int cap = kRecognitionCap);

// Up-down ribbon on 2k elements with a p-element chain or antichain
// hung below each odd position.
enum class EulerKind { chain, antichain };

MobileSpec euler_spec(EulerKind kind, int p, int k);

struct EulerFamily {
    Poset poset;
    Int count;
};

EulerFamily euler_family(EulerKind kind, int p, int k);

// Same count from the closed-form determinant entries
//   chain:     prod_r 1/(p! (rp+2r-1)(rp+2r))
//   antichain: prod_r 1/((rp+2r-1)(rp+2r))
// kept separate so the general pipeline can cross-check it.
Int euler_closed_form_count(EulerKind kind, int p, int k);

// Extension counts of a free-standing mobile whose ribbon is grown by
// ascents, as a polynomial in the grown poset size N over the binomial
// basis C(N, t).
struct DescentPolynomial {
    std::vector<Rat> coeffs;  // coeffs[t] multiplies C(N, t)

    Rat eval(const Int& n_value) const;
    std::string to_string() const;
};

// Samples one count per degree-of-freedom plus `extra_checks`
// verification points; InterpolationMismatchError if a verification
// point disagrees.
DescentPolynomial descent_polynomial(const MobileSpec& m,
                                     int extra_checks = 1);

}  // namespace lecount
