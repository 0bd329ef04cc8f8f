#include "fanlike/automorphism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace fanlike {

namespace {

struct Profile {
    int m = 0;
    std::vector<std::vector<int>> invariant;  // index v, 1-based
    std::vector<std::vector<int>> nf_pair;
    std::vector<std::vector<int>> facet_pair;
    std::vector<std::vector<Face>> nf_by_vertex;
    std::unordered_set<std::uint64_t> nonfaces;
};

Profile profile_of(const PLSphere& k) {
    Profile p;
    p.m = k.m();
    const auto sz = static_cast<std::size_t>(k.m()) + 1;
    p.invariant.assign(sz, {});
    p.nf_pair.assign(sz, std::vector<int>(sz, 0));
    p.facet_pair.assign(sz, std::vector<int>(sz, 0));
    p.nf_by_vertex.assign(sz, {});
    std::vector<int> degree(sz, 0);
    for (Face f : k.min_nonfaces()) {
        p.nonfaces.insert(f.bits());
        auto vs = f.vertices();
        for (int v : vs) {
            p.invariant[v].push_back(f.size());
            p.nf_by_vertex[v].push_back(f);
            for (int u : vs) ++p.nf_pair[u][v];
        }
    }
    for (Face f : k.facets()) {
        auto vs = f.vertices();
        for (int v : vs) {
            ++degree[v];
            for (int u : vs) ++p.facet_pair[u][v];
        }
    }
    for (int v = 1; v <= k.m(); ++v) {
        auto& inv = p.invariant[v];
        std::sort(inv.begin(), inv.end());
        inv.push_back(-degree[v]);
        // Row profiles of the pair tables are relabeling invariant too.
        std::vector<int> row_nf(p.nf_pair[v].begin() + 1, p.nf_pair[v].end());
        std::vector<int> row_fc(p.facet_pair[v].begin() + 1, p.facet_pair[v].end());
        std::sort(row_nf.begin(), row_nf.end());
        std::sort(row_fc.begin(), row_fc.end());
        inv.push_back(-1);
        inv.insert(inv.end(), row_nf.begin(), row_nf.end());
        inv.push_back(-1);
        inv.insert(inv.end(), row_fc.begin(), row_fc.end());
    }
    return p;
}

// Assignment order for the source complex: rarest invariant first, then the
// vertex most tied to what is already placed.
std::vector<int> assignment_order(const Profile& a) {
    std::vector<int> rarity(static_cast<std::size_t>(a.m) + 1, 0);
    for (int v = 1; v <= a.m; ++v) {
        for (int u = 1; u <= a.m; ++u) rarity[v] += a.invariant[u] == a.invariant[v] ? 1 : 0;
    }
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(a.m) + 1, false);
    for (int step = 0; step < a.m; ++step) {
        int best = -1;
        long long best_tie = -1;
        for (int v = 1; v <= a.m; ++v) {
            if (placed[v]) continue;
            long long tie = 0;
            for (int u : order) tie += a.nf_pair[u][v] + a.facet_pair[u][v];
            if (best < 0 || tie > best_tie || (tie == best_tie && rarity[v] < rarity[best])) {
                best = v;
                best_tie = tie;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    return order;
}

// Calls visit(perm) for every isomorphism a -> b until it returns false.
void for_each_isomorphism(const Profile& a, const Profile& b, const std::function<bool(const VertexPermutation&)>& visit) {
    if (a.m != b.m || a.nonfaces.size() != b.nonfaces.size()) return;
    {
        auto ia = std::vector<std::vector<int>>(a.invariant.begin() + 1, a.invariant.end());
        auto ib = std::vector<std::vector<int>>(b.invariant.begin() + 1, b.invariant.end());
        std::sort(ia.begin(), ia.end());
        std::sort(ib.begin(), ib.end());
        if (ia != ib) return;
    }
    const int m = a.m;
    std::vector<int> order = assignment_order(a);
    VertexPermutation image(static_cast<std::size_t>(m), 0);
    std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
    Face assigned;
    bool stop = false;

    std::function<void(int)> step = [&](int depth) {
        if (stop) return;
        if (depth == m) {
            if (!visit(image)) stop = true;
            return;
        }
        int v = order[depth];
        for (int w = 1; w <= m && !stop; ++w) {
            if (used[w] || a.invariant[v] != b.invariant[w]) continue;
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) {
                int u = order[i];
                int iu = image[u - 1];
                ok = a.nf_pair[u][v] == b.nf_pair[iu][w] && a.facet_pair[u][v] == b.facet_pair[iu][w];
            }
            if (!ok) continue;
            image[v - 1] = w;
            Face now = assigned.with(v);
            for (Face f : a.nf_by_vertex[v]) {
                if (!f.subset_of(now)) continue;
                Face g = fanlike::apply(image, f);
                if (!b.nonfaces.contains(g.bits())) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                image[v - 1] = 0;
                continue;
            }
            used[w] = true;
            Face saved = assigned;
            assigned = now;
            step(depth + 1);
            assigned = saved;
            used[w] = false;
            image[v - 1] = 0;
        }
    };
    step(0);
}

}  // namespace

bool AutGroup::contains(const VertexPermutation& g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

AutGroup automorphisms(const PLSphere& k) {
    Profile p = profile_of(k);
    AutGroup out;
    if (k.m() == 0) {
        out.elements.emplace_back();
        return out;
    }
    for_each_isomorphism(p, p, [&](const VertexPermutation& g) {
        out.elements.push_back(g);
        return true;
    });
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

std::optional<VertexPermutation> are_isomorphic(const PLSphere& k1, const PLSphere& k2) {
    if (k1.n() != k2.n() || k1.m() != k2.m()) return std::nullopt;
    if (k1.m() == 0) return VertexPermutation{};
    std::optional<VertexPermutation> found;
    Profile a = profile_of(k1);
    Profile b = profile_of(k2);
    for_each_isomorphism(a, b, [&](const VertexPermutation& g) {
        found = g;
        return false;
    });
    return found;
}

VertexPermutation compose(const VertexPermutation& outer, const VertexPermutation& inner) {
    VertexPermutation out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<std::size_t>(inner[i]) - 1];
    return out;
}

VertexPermutation inverse(const VertexPermutation& g) {
    VertexPermutation out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[static_cast<std::size_t>(g[i]) - 1] = static_cast<int>(i) + 1;
    return out;
}

VertexPermutation identity_permutation(int m) {
    VertexPermutation out(static_cast<std::size_t>(m));
    std::iota(out.begin(), out.end(), 1);
    return out;
}

bool is_permutation(const VertexPermutation& g) {
    std::vector<bool> seen(g.size() + 1, false);
    for (int v : g) {
        if (v < 1 || v > static_cast<int>(g.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::string to_string(const VertexPermutation& g) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < g.size(); ++i) out << (i ? ", " : "") << g[i];
    out << ']';
    return out.str();
}

}  // namespace fanlike
