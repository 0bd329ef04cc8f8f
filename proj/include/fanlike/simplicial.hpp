#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fanlike/face.hpp"

namespace fanlike {

/// A vertex permutation in one-line notation: image[v-1] is the image of v.
using VertexPermutation = std::vector<int>;

/// A pure simplicial (n-1)-sphere on the vertex set {1..m}.
///
/// Both dual descriptions are kept: the facet list and the minimal non-face
/// list M(K). Construction always validates purity, the pseudomanifold
/// condition (every ridge lies in exactly two facets) and the Euler
/// characteristic 1 + (-1)^(n-1). This is a sanity filter, not PL recognition.
///
/// The degenerate (-1)-sphere {empty} (n = 0, m = 0) is allowed; it is the
/// link of a facet.
class PLSphere {
public:
    /// Facets are all n-subsets of {1..m} containing no member of `nonfaces`.
    /// Throws InvalidNonFaces when `nonfaces` is not an antichain of sets of
    /// size 2..n+1, or is not exactly the minimal non-face set of the complex
    /// it generates.
    static PLSphere from_min_nonfaces(int n, int m, std::vector<Face> nonfaces);
    static PLSphere from_facets(int n, int m, std::vector<Face> facets);

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    int dimension() const noexcept { return n_ - 1; }
    int picard() const noexcept { return m_ - n_; }

    /// Sorted (shortlex).
    const std::vector<Face>& facets() const noexcept { return facets_; }
    /// Sorted (shortlex).
    const std::vector<Face>& min_nonfaces() const noexcept { return nonfaces_; }

    Face vertex_set() const { return Face::range(m_); }
    bool is_face(Face f) const noexcept;
    bool is_facet(Face f) const noexcept;
    /// Index of a facet in facets(), or -1.
    int facet_index(Face f) const noexcept;

    /// Every face including the empty one, shortlex order.
    std::vector<Face> all_faces() const;

    friend bool operator==(const PLSphere& a, const PLSphere& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.facets_ == b.facets_;
    }

private:
    PLSphere(int n, int m, std::vector<Face> facets, std::vector<Face> nonfaces);

    int n_ = 0;
    int m_ = 0;
    std::vector<Face> facets_;
    std::vector<Face> nonfaces_;
};

/// Minimal non-faces recomputed from the facets (faces of size 2..n+1 scanned
/// level by level). Independent of the cached M(K).
std::vector<Face> min_nonfaces(const PLSphere& k);

/// A link together with the original labels of its vertices: the link complex
/// is renumbered to 1..k and labels[i] is the label in the ambient sphere of
/// link vertex i+1.
struct Link {
    PLSphere complex;
    std::vector<int> labels;

    /// Link vertex (1-based) carrying the ambient label, or 0.
    int local_of(int ambient_label) const noexcept;
};

Link link(const PLSphere& k, Face sigma);

/// Wedge at vertex v: the new vertex v' gets label m+1.
PLSphere wedge(const PLSphere& k, int v);

/// True when K is not a wedge. The detection rule looks for an edge {v, v'}
/// such that v and v' lie in exactly the same minimal non-faces, and only
/// accepts the pair after confirming wedge(link(K, {v'}), v) is isomorphic
/// to K.
bool is_seed(const PLSphere& k);

/// A pair (v, v') that realizes K as a wedge, if any.
struct WedgePair {
    int v = 0;
    int v_prime = 0;
};
std::vector<WedgePair> wedge_pairs(const PLSphere& k);

/// Connected sum along facets sigma1 of k1 and sigma2 of k2. `glue[i]` is the
/// vertex of sigma1 identified with the i-th smallest vertex of sigma2. The
/// remaining vertices of k2 are numbered m1+1, m1+2, ... in increasing order
/// of their labels in k2.
PLSphere connected_sum(const PLSphere& k1, const PLSphere& k2, Face sigma1, Face sigma2,
                       std::span<const int> glue);

/// Label that vertex `v2` of k2 receives inside connected_sum(k1, k2, ...).
int connected_sum_label(const PLSphere& k1, Face sigma2, std::span<const int> glue, int v2);

PLSphere polygon_boundary(int m);
/// Boundary of the n-simplex on n+1 vertices (an (n-1)-sphere).
PLSphere simplex_boundary(int n);

inline int picard(const PLSphere& k) { return k.picard(); }
inline int count_min_nonfaces(const PLSphere& k) { return static_cast<int>(k.min_nonfaces().size()); }
/// Every k-subset of the vertices is a face, i.e. no minimal non-face has size <= k.
bool is_k_neighborly(const PLSphere& k, int degree);
/// floor(n/2)-neighborly.
bool is_neighborly(const PLSphere& k);
/// Largest k for which k-neighborly holds.
int neighborly_degree(const PLSphere& k);
/// Every minimal non-face has exactly two vertices.
bool is_flag(const PLSphere& k);

/// Image of the complex under a vertex permutation.
PLSphere relabel(const PLSphere& k, const VertexPermutation& perm);
Face apply(const VertexPermutation& perm, Face f);

/// f-vector based Euler characteristic (empty face excluded).
long long euler_characteristic(const PLSphere& k);

}  // namespace fanlike
