#include "fanlike/simplicial.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "fanlike/automorphism.hpp"
#include "fanlike/error.hpp"

namespace fanlike {

namespace {

// Faces generated from a facet list, every subset of every facet.
std::unordered_set<Face> faces_of(const std::vector<Face>& facets) {
    std::unordered_set<Face> out;
    for (Face f : facets) {
        std::uint64_t bits = f.bits();
        // Standard submask walk, including 0.
        for (std::uint64_t s = bits;; s = (s - 1) & bits) {
            out.insert(Face::from_bits(s));
            if (s == 0) break;
        }
    }
    return out;
}

std::vector<Face> nonfaces_from_face_set(const std::unordered_set<Face>& faces, int n, int m) {
    std::vector<Face> out;
    std::vector<Face> level;
    for (Face f : faces) {
        if (f.size() == 1) level.push_back(f);
    }
    for (int v = 1; v <= m; ++v) {
        if (!faces.contains(Face{v})) out.push_back(Face{v});
    }
    for (int size = 2; size <= n + 1 && !level.empty(); ++size) {
        std::vector<Face> next;
        for (Face f : level) {
            for (int v = f.max_vertex() + 1; v <= m; ++v) {
                Face g = f.with(v);
                if (faces.contains(g)) {
                    next.push_back(g);
                    continue;
                }
                bool minimal = true;
                for (int u : g.vertices()) {
                    if (!faces.contains(g.without(u))) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal) out.push_back(g);
            }
        }
        level = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_facets(int n, int m, const std::vector<Face>& facets) {
    if (n < 0) fail(ErrorCode::NotPure, "negative dimension parameter");
    if (m > kMaxVertices) fail(ErrorCode::TooLarge, "m = " + std::to_string(m) + " exceeds 64");
    if (n == 0) {
        if (m != 0 || facets.size() != 1 || !facets.front().empty()) {
            fail(ErrorCode::NotPure, "the only complex with n = 0 is {empty} on no vertices");
        }
        return;
    }
    if (n > 24) fail(ErrorCode::TooLarge, "facet size " + std::to_string(n) + " too large to validate");
    if (facets.empty()) fail(ErrorCode::NotPure, "no facets");
    Face all = Face::range(m);
    Face used;
    for (Face f : facets) {
        if (f.size() != n) {
            fail(ErrorCode::NotPure, "facet " + to_braced(f) + " does not have " + std::to_string(n) + " vertices");
        }
        if (!f.subset_of(all)) fail(ErrorCode::NotPure, "facet " + to_braced(f) + " uses a label above m");
        used = used | f;
    }
    if (used != all) fail(ErrorCode::NotPure, "vertex " + std::to_string((all - used).min_vertex()) + " is unused");

    std::unordered_map<Face, std::pair<int, int>> ridges;  // count, first facet
    std::vector<int> parent(facets.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto root = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (int v : facets[i].vertices()) {
            auto [it, fresh] = ridges.try_emplace(facets[i].without(v), 0, static_cast<int>(i));
            ++it->second.first;
            if (!fresh) parent[static_cast<std::size_t>(root(static_cast<int>(i)))] = root(it->second.second);
        }
    }
    for (const auto& [ridge, entry] : ridges) {
        if (entry.first != 2) {
            fail(ErrorCode::NotPseudomanifold,
                 "ridge " + to_braced(ridge) + " lies in " + std::to_string(entry.first) + " facets");
        }
    }
    // Strong connectivity: the facet/ridge adjacency graph has one component.
    int r0 = root(0);
    for (std::size_t i = 1; i < facets.size(); ++i) {
        if (root(static_cast<int>(i)) != r0) fail(ErrorCode::NotPseudomanifold, "facet graph is disconnected");
    }
}

long long euler_from_faces(const std::unordered_set<Face>& faces) {
    long long chi = 0;
    for (Face f : faces) {
        if (f.empty()) continue;
        chi += (f.size() % 2 == 1) ? 1 : -1;
    }
    return chi;
}

void check_euler(int n, const std::unordered_set<Face>& faces) {
    long long expected = 1 + ((n - 1) % 2 == 0 ? 1 : -1);
    long long chi = euler_from_faces(faces);
    if (chi != expected) {
        fail(ErrorCode::WrongEuler,
             "Euler characteristic " + std::to_string(chi) + ", expected " + std::to_string(expected));
    }
}

}  // namespace

PLSphere::PLSphere(int n, int m, std::vector<Face> facets, std::vector<Face> nonfaces)
    : n_(n), m_(m), facets_(std::move(facets)), nonfaces_(std::move(nonfaces)) {}

PLSphere PLSphere::from_facets(int n, int m, std::vector<Face> facets) {
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    check_facets(n, m, facets);
    if (n == 0) return PLSphere(0, 0, std::move(facets), {});
    auto faces = faces_of(facets);
    check_euler(n, faces);
    auto nonfaces = nonfaces_from_face_set(faces, n, m);
    return PLSphere(n, m, std::move(facets), std::move(nonfaces));
}

PLSphere PLSphere::from_min_nonfaces(int n, int m, std::vector<Face> nonfaces) {
    if (n < 1) fail(ErrorCode::InvalidNonFaces, "n must be at least 1");
    if (m > kMaxVertices) fail(ErrorCode::TooLarge, "m = " + std::to_string(m) + " exceeds 64");
    std::sort(nonfaces.begin(), nonfaces.end());
    nonfaces.erase(std::unique(nonfaces.begin(), nonfaces.end()), nonfaces.end());
    Face all = Face::range(m);
    for (std::size_t i = 0; i < nonfaces.size(); ++i) {
        Face f = nonfaces[i];
        if (f.size() < 2 || f.size() > n + 1) {
            fail(ErrorCode::InvalidNonFaces, "non-face " + to_braced(f) + " has size outside 2..n+1");
        }
        if (!f.subset_of(all)) fail(ErrorCode::InvalidNonFaces, "non-face " + to_braced(f) + " uses a label above m");
        for (std::size_t j = 0; j < nonfaces.size(); ++j) {
            if (i != j && nonfaces[j].subset_of(f)) {
                fail(ErrorCode::InvalidNonFaces,
                     "non-faces " + to_braced(nonfaces[j]) + " and " + to_braced(f) + " are nested");
            }
        }
    }

    std::vector<std::vector<Face>> by_vertex(static_cast<std::size_t>(m) + 1);
    for (Face f : nonfaces) {
        for (int v : f.vertices()) by_vertex[static_cast<std::size_t>(v)].push_back(f);
    }
    // Level-by-level face generation; a set is a face iff it contains no
    // non-face, and only non-faces through the newly added vertex can appear.
    std::vector<Face> level{Face{}};
    std::size_t face_count = 1;
    std::vector<Face> facets;
    for (int size = 1; size <= n + 1 && !level.empty(); ++size) {
        std::vector<Face> next;
        for (Face f : level) {
            for (int v = f.max_vertex() + 1; v <= m; ++v) {
                Face g = f.with(v);
                bool ok = true;
                for (Face bad : by_vertex[static_cast<std::size_t>(v)]) {
                    if (bad.subset_of(g)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) next.push_back(g);
            }
        }
        if (size == n + 1 && !next.empty()) {
            fail(ErrorCode::NotPure, "face " + to_braced(next.front()) + " has more than n vertices");
        }
        face_count += next.size();
        if (size == n) facets = next;
        level = std::move(next);
    }
    if (facets.empty()) fail(ErrorCode::NotPure, "no facets of size n");
    std::sort(facets.begin(), facets.end());
    check_facets(n, m, facets);
    auto faces = faces_of(facets);
    if (faces.size() != face_count) fail(ErrorCode::NotPure, "complex has maximal faces smaller than n");
    check_euler(n, faces);
    auto recomputed = nonfaces_from_face_set(faces, n, m);
    if (recomputed != nonfaces) {
        fail(ErrorCode::InvalidNonFaces, "given set is not the minimal non-face set of the complex it generates");
    }
    return PLSphere(n, m, std::move(facets), std::move(nonfaces));
}

bool PLSphere::is_face(Face f) const noexcept {
    if (!f.subset_of(Face::range(m_))) return false;
    for (Face bad : nonfaces_) {
        if (bad.subset_of(f)) return false;
    }
    return f.size() <= n_;
}

bool PLSphere::is_facet(Face f) const noexcept { return facet_index(f) >= 0; }

int PLSphere::facet_index(Face f) const noexcept {
    auto it = std::lower_bound(facets_.begin(), facets_.end(), f);
    if (it == facets_.end() || *it != f) return -1;
    return static_cast<int>(it - facets_.begin());
}

std::vector<Face> PLSphere::all_faces() const {
    auto set = faces_of(facets_);
    std::vector<Face> out(set.begin(), set.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Face> min_nonfaces(const PLSphere& k) {
    if (k.n() == 0) return {};
    return nonfaces_from_face_set(faces_of(k.facets()), k.n(), k.m());
}

long long euler_characteristic(const PLSphere& k) { return euler_from_faces(faces_of(k.facets())); }

int Link::local_of(int ambient_label) const noexcept {
    auto it = std::find(labels.begin(), labels.end(), ambient_label);
    return it == labels.end() ? 0 : static_cast<int>(it - labels.begin()) + 1;
}

Link link(const PLSphere& k, Face sigma) {
    if (!k.is_face(sigma)) fail(ErrorCode::NotAFace, to_braced(sigma) + " is not a face");
    Face span;
    std::vector<Face> star;
    for (Face f : k.facets()) {
        if (sigma.subset_of(f)) {
            star.push_back(f - sigma);
            span = span | (f - sigma);
        }
    }
    std::vector<int> labels = span.vertices();
    std::vector<int> local(static_cast<std::size_t>(k.m()) + 1, 0);
    for (std::size_t i = 0; i < labels.size(); ++i) local[static_cast<std::size_t>(labels[i])] = static_cast<int>(i) + 1;
    std::vector<Face> facets;
    facets.reserve(star.size());
    for (Face f : star) {
        Face g;
        for (int v : f.vertices()) g = g.with(local[static_cast<std::size_t>(v)]);
        facets.push_back(g);
    }
    int dim_n = k.n() - sigma.size();
    return Link{PLSphere::from_facets(dim_n, static_cast<int>(labels.size()), std::move(facets)), std::move(labels)};
}

PLSphere wedge(const PLSphere& k, int v) {
    if (v < 1 || v > k.m()) fail(ErrorCode::NotAVertex, std::to_string(v) + " is not a vertex");
    int v_prime = k.m() + 1;
    std::vector<Face> nonfaces;
    nonfaces.reserve(k.min_nonfaces().size());
    for (Face f : k.min_nonfaces()) nonfaces.push_back(f.contains(v) ? f.with(v_prime) : f);
    return PLSphere::from_min_nonfaces(k.n() + 1, k.m() + 1, std::move(nonfaces));
}

std::vector<WedgePair> wedge_pairs(const PLSphere& k) {
    std::vector<WedgePair> out;
    if (k.n() < 2) return out;
    // Bit mask of the minimal non-faces containing each vertex.
    std::vector<std::vector<bool>> member(static_cast<std::size_t>(k.m()) + 1);
    for (int v = 1; v <= k.m(); ++v) {
        for (Face f : k.min_nonfaces()) member[static_cast<std::size_t>(v)].push_back(f.contains(v));
    }
    for (int v = 1; v <= k.m(); ++v) {
        for (int w = v + 1; w <= k.m(); ++w) {
            if (member[static_cast<std::size_t>(v)] != member[static_cast<std::size_t>(w)]) continue;
            if (!k.is_face(Face{v, w})) continue;
            Link lk = link(k, Face{w});
            int local_v = lk.local_of(v);
            if (local_v == 0) continue;
            if (are_isomorphic(wedge(lk.complex, local_v), k)) out.push_back({v, w});
        }
    }
    return out;
}

bool is_seed(const PLSphere& k) { return wedge_pairs(k).empty(); }

int connected_sum_label(const PLSphere& k1, Face sigma2, std::span<const int> glue, int v2) {
    int idx = sigma2.index_of(v2);
    if (idx >= 0) return glue[static_cast<std::size_t>(idx)];
    Face below = Face::from_bits(v2 <= 1 ? 0 : (std::uint64_t{1} << (v2 - 1)) - 1);
    int rank = Face::from_bits(below.bits() & ~sigma2.bits()).size();
    return k1.m() + rank + 1;
}

PLSphere connected_sum(const PLSphere& k1, const PLSphere& k2, Face sigma1, Face sigma2,
                       std::span<const int> glue) {
    if (k1.n() != k2.n()) fail(ErrorCode::BadGlue, "summands have different dimensions");
    if (!k1.is_facet(sigma1)) fail(ErrorCode::NotAFacet, to_braced(sigma1) + " is not a facet of the first sphere");
    if (!k2.is_facet(sigma2)) fail(ErrorCode::NotAFacet, to_braced(sigma2) + " is not a facet of the second sphere");
    if (static_cast<int>(glue.size()) != k1.n()) fail(ErrorCode::BadGlue, "glue must list one vertex per facet vertex");
    Face image;
    for (int v : glue) {
        if (!sigma1.contains(v)) fail(ErrorCode::BadGlue, std::to_string(v) + " is not in the first facet");
        image = image.with(v);
    }
    if (image != sigma1) fail(ErrorCode::BadGlue, "glue is not a bijection");

    int m = k1.m() + k2.m() - k1.n();
    if (m > kMaxVertices) fail(ErrorCode::TooLarge, "connected sum has more than 64 vertices");
    std::vector<Face> facets;
    for (Face f : k1.facets()) {
        if (f != sigma1) facets.push_back(f);
    }
    for (Face f : k2.facets()) {
        if (f == sigma2) continue;
        Face g;
        for (int v : f.vertices()) g = g.with(connected_sum_label(k1, sigma2, glue, v));
        facets.push_back(g);
    }
    return PLSphere::from_facets(k1.n(), m, std::move(facets));
}

PLSphere polygon_boundary(int m) {
    if (m < 3) fail(ErrorCode::NotAPolygon, "a polygon needs at least 3 vertices");
    std::vector<Face> facets;
    for (int i = 1; i < m; ++i) facets.push_back(Face{i, i + 1});
    facets.push_back(Face{1, m});
    return PLSphere::from_facets(2, m, std::move(facets));
}

PLSphere simplex_boundary(int n) {
    if (n < 1) fail(ErrorCode::NotPure, "simplex boundary needs n >= 1");
    Face all = Face::range(n + 1);
    std::vector<Face> facets;
    for (int v = 1; v <= n + 1; ++v) facets.push_back(all.without(v));
    return PLSphere::from_facets(n, n + 1, std::move(facets));
}

bool is_k_neighborly(const PLSphere& k, int degree) {
    return std::all_of(k.min_nonfaces().begin(), k.min_nonfaces().end(),
                       [degree](Face f) { return f.size() > degree; });
}

bool is_neighborly(const PLSphere& k) { return is_k_neighborly(k, k.n() / 2); }

int neighborly_degree(const PLSphere& k) {
    int smallest = k.m() + 1;
    for (Face f : k.min_nonfaces()) smallest = std::min(smallest, f.size());
    return smallest - 1;
}

bool is_flag(const PLSphere& k) {
    return !k.min_nonfaces().empty() && std::all_of(k.min_nonfaces().begin(), k.min_nonfaces().end(),
                                                    [](Face f) { return f.size() == 2; });
}

Face apply(const VertexPermutation& perm, Face f) {
    Face out;
    for (int v : f.vertices()) out = out.with(perm[static_cast<std::size_t>(v) - 1]);
    return out;
}

PLSphere relabel(const PLSphere& k, const VertexPermutation& perm) {
    if (static_cast<int>(perm.size()) != k.m()) fail(ErrorCode::ShapeMismatch, "permutation length differs from m");
    std::vector<Face> facets;
    facets.reserve(k.facets().size());
    for (Face f : k.facets()) facets.push_back(fanlike::apply(perm, f));
    return PLSphere::from_facets(k.n(), k.m(), std::move(facets));
}

}  // namespace fanlike
