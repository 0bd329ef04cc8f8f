#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fanlike/exact_linalg.hpp"
#include "fanlike/simplicial.hpp"

namespace fanlike {

/// n x m integer matrix; column v-1 is lambda_v.
using CharMatrix = IntMatrix;

/// Columns of a facet (or any face) in increasing vertex order.
IntMatrix face_block(const CharMatrix& lambda, Face f);
/// d(sigma) = det(lambda_sigma), columns in increasing vertex order.
BigInt facet_det(const CharMatrix& lambda, Face sigma);

/// |det lambda_sigma| = 1 on every facet. Throws ShapeMismatch.
bool is_characteristic(const PLSphere& k, const CharMatrix& lambda);

/// The lexicographically smallest facet.
Face base_facet(const PLSphere& k);

/// (lambda_{sigma0})^{-1} lambda. Throws NotUnimodular.
CharMatrix dj_normalize(const PLSphere& k, const CharMatrix& lambda, Face sigma0);
CharMatrix dj_normalize(const PLSphere& k, const CharMatrix& lambda);
bool dj_equivalent(const PLSphere& k, const CharMatrix& a, const CharMatrix& b);

/// Column relabeling: result column v is lambda's column g(v).
CharMatrix permute_columns(const CharMatrix& lambda, const VertexPermutation& g);

struct Projection {
    Link link;
    CharMatrix map;  // (n - |sigma|) x (link vertex count), columns in link order
};
/// The map induced on the link of sigma. Throws NotAFace.
Projection project(const PLSphere& k, const CharMatrix& lambda, Face sigma);

/// Lift of two maps over K to the wedge at v (new vertex m+1). Both maps are
/// normalized at the smallest facet containing v and must then agree outside
/// the row of v; throws IncompatibleInputs otherwise. The projection of the
/// result at {v} recovers lambda2 and at {m+1} recovers lambda1.
CharMatrix wedge_lift(const PLSphere& k, int v, const CharMatrix& lambda1, const CharMatrix& lambda2);

/// +-1 per facet, indexed like k.facets().
struct OrientationMap {
    Face base;
    std::vector<int> signs;

    int sign(const PLSphere& k, Face facet) const;
};
/// Throws OrientationConflict on a non-orientable input, NotAFacet if sigma0
/// is not a facet.
OrientationMap orientation_map(const PLSphere& k, Face sigma0);
OrientationMap orientation_map(const PLSphere& k);

/// d(sigma)/o(sigma) is the same nonzero value for every facet.
bool is_positive(const PLSphere& k, const CharMatrix& lambda);

/// A pair of facets violating the kernel sign criterion, with an integer
/// certificate x supported on sigma1 | sigma2: lambda x = 0, x >= 0 on
/// sigma1 \ sigma2, x <= 0 on sigma2 \ sigma1, x != 0.
struct FanViolation {
    Face sigma1;
    Face sigma2;
    std::vector<int> support;    // sorted vertices of sigma1 | sigma2
    std::vector<BigInt> witness;  // aligned with support
};

/// Checks one unordered pair; both faces must be facets with unimodular blocks.
std::optional<FanViolation> fan_violation(const PLSphere& k, const CharMatrix& lambda, Face sigma1, Face sigma2);
/// Up to `limit` violating pairs in facet order (sigma1 before sigma2).
std::vector<FanViolation> fan_violations(const PLSphere& k, const CharMatrix& lambda, std::size_t limit);
std::optional<FanViolation> find_fan_violation(const PLSphere& k, const CharMatrix& lambda);
/// Throws NotCharacteristic.
bool is_fan_giving(const PLSphere& k, const CharMatrix& lambda);
/// Re-checks a certificate from scratch.
bool witness_is_valid(const PLSphere& k, const CharMatrix& lambda, const FanViolation& v);

/// Some automorphism g of K makes lambda1 o g D-J equivalent to lambda2.
bool fan_isomorphic(const PLSphere& k, const CharMatrix& lambda1, const CharMatrix& lambda2);
/// Same, with a precomputed group.
bool fan_isomorphic(const PLSphere& k, const std::vector<VertexPermutation>& group, const CharMatrix& lambda1,
                    const CharMatrix& lambda2);

/// Subdivides a polygon edge; the new vertex is m+1 with lambda_a + lambda_b.
std::pair<PLSphere, CharMatrix> stellar_subdivide_polygon(const PLSphere& k, const CharMatrix& lambda, Face edge);

/// A strictly convex piecewise-linear support function exists. Throws
/// NotFanGiving.
bool is_projective(const PLSphere& k, const CharMatrix& lambda);

/// Fast fan-givingness test on 64-bit column data, reused by the search.
/// Facet inverses are computed once per call; facet pairs are visited with the
/// largest intersections first.
class FanChecker {
public:
    explicit FanChecker(const PLSphere& k);

    enum class Outcome { FanGiving, Violated, Overflow };
    /// `columns` holds lambda column-major: entry (r, v-1) at (v-1)*n + r.
    /// Assumes every facet block is unimodular.
    Outcome check(const std::int64_t* columns) const;

private:
    struct Pair {
        int first;                 // facet index of sigma1
        int second;                // facet index of sigma2
        std::vector<int> t_cols;   // vertices of sigma2 \ sigma1 (0-based)
        std::vector<int> r_rows;   // positions in sigma1 of sigma1 \ sigma2
    };
    int n_ = 0;
    std::vector<std::vector<int>> facet_cols_;  // 0-based vertex indices
    std::vector<Pair> pairs_;
};

/// Column-major int64 copy, or nullopt if some entry does not fit.
std::optional<std::vector<std::int64_t>> to_columns_i64(const CharMatrix& lambda);

/// Inverse of a unimodular n x n row-major block in 64-bit arithmetic;
/// false on overflow or if the block is not unimodular.
bool inverse_unimodular_i64(const std::int64_t* a, int n, std::int64_t* out);

}  // namespace fanlike
