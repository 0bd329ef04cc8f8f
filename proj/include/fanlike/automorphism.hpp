#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanlike/simplicial.hpp"

namespace fanlike {

/// The full automorphism group as an explicit element list.
struct AutGroup {
    std::vector<VertexPermutation> elements;  // sorted, identity first

    std::size_t order() const noexcept { return elements.size(); }
    bool contains(const VertexPermutation& g) const;
};

/// All vertex permutations preserving M(K) setwise.
AutGroup automorphisms(const PLSphere& k);

/// A bijection carrying M(k1) onto M(k2) (perm[v-1] is the image of vertex v
/// of k1), or nullopt.
std::optional<VertexPermutation> are_isomorphic(const PLSphere& k1, const PLSphere& k2);

VertexPermutation compose(const VertexPermutation& outer, const VertexPermutation& inner);
VertexPermutation inverse(const VertexPermutation& g);
VertexPermutation identity_permutation(int m);
bool is_permutation(const VertexPermutation& g);

/// One-line bracket notation, e.g. `[1, 5, 6, 7, 2, 3, 4]`.
std::string to_string(const VertexPermutation& g);

}  // namespace fanlike
