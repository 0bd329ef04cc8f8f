#pragma once
// Independent reference implementations used as oracles by the tests. Nothing
// here calls the library routine it is meant to check.

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fanlike/automorphism.hpp"
#include "fanlike/catalog.hpp"
#include "fanlike/charmap.hpp"
#include "fanlike/error.hpp"
#include "fanlike/search.hpp"
#include "fanlike/simplicial.hpp"
#include "fanlike/templates.hpp"

namespace oracle {

using namespace fanlike;

// Cofactor expansion along the first row.
inline BigInt laplace_det(const IntMatrix& a) {
    const int n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    BigInt total = 0;
    for (int j = 0; j < n; ++j) {
        if (a(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int w = 0;
            for (int c = 0; c < n; ++c) {
                if (c != j) minor(r - 1, w++) = a(r, c);
            }
        }
        BigInt term = a(0, j) * laplace_det(minor);
        total += (j % 2 == 0) ? term : BigInt(-term);
    }
    return total;
}

// Largest k with a nonzero k x k minor.
inline int minor_rank(const IntMatrix& a) {
    int best = 0;
    const int r = a.rows();
    const int c = a.cols();
    for (int k = 1; k <= std::min(r, c); ++k) {
        bool found = false;
        for (unsigned rm = 0; rm < (1U << r) && !found; ++rm) {
            if (std::popcount(rm) != k) continue;
            for (unsigned cm = 0; cm < (1U << c) && !found; ++cm) {
                if (std::popcount(cm) != k) continue;
                std::vector<int> rows, cols;
                for (int i = 0; i < r; ++i) {
                    if (rm >> i & 1U) rows.push_back(i);
                }
                for (int i = 0; i < c; ++i) {
                    if (cm >> i & 1U) cols.push_back(i);
                }
                if (laplace_det(a.select_rows(rows).select_columns(cols)) != 0) found = true;
            }
        }
        if (!found) break;
        best = k;
    }
    return best;
}

// Faces from the facet list only: a set is a face iff it lies in some facet.
inline bool in_some_facet(const PLSphere& k, Face f) {
    return std::any_of(k.facets().begin(), k.facets().end(), [&](Face s) { return f.subset_of(s); });
}

// All non-faces whose every codimension-one subset is a face.
inline std::vector<Face> brute_min_nonfaces(int m, const std::vector<Face>& facets) {
    auto is_face = [&](Face f) {
        return std::any_of(facets.begin(), facets.end(), [&](Face s) { return f.subset_of(s); });
    };
    std::vector<Face> out;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) {
        Face f = Face::from_bits(bits);
        if (is_face(f)) continue;
        bool minimal = true;
        for (int v : f.vertices()) {
            if (!is_face(f.without(v))) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline IntMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) { return IntMatrix(rows); }

// Kernel-sign reference: for each facet pair, a rational kernel basis of the
// restricted matrix and a cone-triviality test on the sign rows.
inline bool kernel_sign_fan_giving(const PLSphere& k, const CharMatrix& lambda) {
    const auto& facets = k.facets();
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (std::size_t j = i + 1; j < facets.size(); ++j) {
            Face s1 = facets[i];
            Face s2 = facets[j];
            std::vector<int> u = (s1 | s2).vertices();
            std::vector<int> cols;
            for (int v : u) cols.push_back(v - 1);
            auto basis = kernel_basis(lambda.select_columns(cols));
            if (basis.empty()) continue;
            std::vector<std::vector<Rational>> rows;
            for (std::size_t p = 0; p < u.size(); ++p) {
                int v = u[p];
                bool in1 = s1.contains(v);
                bool in2 = s2.contains(v);
                if (in1 == in2) continue;
                std::vector<Rational> row;
                for (const auto& b : basis) row.push_back(in1 ? b[p] : Rational(-b[p]));
                rows.push_back(row);
            }
            RatMatrix d(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
            for (std::size_t r = 0; r < rows.size(); ++r) {
                for (std::size_t c = 0; c < basis.size(); ++c) d(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
            }
            if (rows.empty() || !cone_is_trivial(d)) return false;
        }
    }
    return true;
}

// Every labeled pure pseudomanifold containing the facet {1..n}, found by
// closing open ridges one at a time; keeps one representative per
// isomorphism class among those the library accepts as spheres.
inline std::vector<PLSphere> enumerate_spheres(int n, int m) {
    std::vector<Face> candidates;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) {
        if (std::popcount(bits) == n) candidates.push_back(Face::from_bits(bits));
    }
    std::vector<PLSphere> found;
    std::vector<Face> chosen{Face::range(n)};
    std::map<std::uint64_t, int> ridge_count;
    auto add = [&](Face f, int delta) {
        for (int v : f.vertices()) ridge_count[f.without(v).bits()] += delta;
    };
    add(chosen.front(), 1);
    std::function<void()> rec = [&] {
        Face open;
        bool has_open = false;
        for (const auto& [bits, cnt] : ridge_count) {
            if (cnt == 1) {
                open = Face::from_bits(bits);
                has_open = true;
                break;
            }
        }
        if (!has_open) {
            Face used;
            for (Face f : chosen) used = used | f;
            if (used != Face::range(m)) return;
            try {
                PLSphere k = PLSphere::from_facets(n, m, chosen);
                for (const auto& other : found) {
                    if (are_isomorphic(k, other)) return;
                }
                found.push_back(k);
            } catch (const Error&) {
            }
            return;
        }
        for (Face c : candidates) {
            if (!open.subset_of(c)) continue;
            if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
            bool ok = true;
            for (int v : c.vertices()) {
                auto it = ridge_count.find(c.without(v).bits());
                if (it != ridge_count.end() && it->second >= 2) ok = false;
            }
            if (!ok) continue;
            chosen.push_back(c);
            add(c, 1);
            rec();
            add(c, -1);
            chosen.pop_back();
            for (auto it = ridge_count.begin(); it != ridge_count.end();) {
                it = it->second == 0 ? ridge_count.erase(it) : std::next(it);
            }
        }
    };
    rec();
    return found;
}

inline std::string key(const IntMatrix& a) { return to_string(a); }

// Every matrix with the identity on the base facet and all other entries in
// [-bound, bound] that passes the library predicates for the mode.
inline std::set<std::string> naive_grid(const PLSphere& k, int bound, SearchMode mode) {
    const int n = k.n();
    const int m = k.m();
    Face base = base_facet(k);
    std::vector<std::pair<int, int>> free_slots;
    CharMatrix lambda(n, m);
    for (int v = 1; v <= m; ++v) {
        int idx = base.index_of(v);
        for (int r = 0; r < n; ++r) {
            if (idx >= 0) {
                lambda(r, v - 1) = r == idx ? 1 : 0;
            } else {
                free_slots.emplace_back(r, v - 1);
            }
        }
    }
    std::set<std::string> out;
    std::vector<long long> vals(free_slots.size(), -bound);
    for (;;) {
        for (std::size_t i = 0; i < free_slots.size(); ++i) lambda(free_slots[i].first, free_slots[i].second) = vals[i];
        bool ok = is_characteristic(k, lambda);
        if (ok && mode != SearchMode::Characteristic) ok = is_positive(k, lambda);
        if (ok && mode == SearchMode::FanGiving) ok = is_fan_giving(k, lambda);
        if (ok) out.insert(key(lambda));
        std::size_t pos = 0;
        while (pos < vals.size() && vals[pos] == bound) vals[pos++] = -bound;
        if (pos == vals.size()) break;
        ++vals[pos];
    }
    return out;
}

// The projection to a vertex link of a wedge, moved back onto K's labels:
// the link vertex carrying label `from` takes label `to`.
inline CharMatrix link_map_on(const Projection& p, int m, int from, int to) {
    CharMatrix out(p.map.rows(), m);
    for (std::size_t i = 0; i < p.link.labels.size(); ++i) {
        int label = p.link.labels[i] == from ? to : p.link.labels[i];
        for (int r = 0; r < p.map.rows(); ++r) out(r, label - 1) = p.map(r, static_cast<int>(i));
    }
    return out;
}

inline VertexPermutation link_relabel(const Link& l, int from, int to) {
    VertexPermutation g;
    for (int label : l.labels) g.push_back(label == from ? to : label);
    return g;
}

// Solves a template's affine entries for its indeterminates against a fixed
// matrix, one single-unknown entry at a time.
inline std::optional<std::vector<long long>> fit_template(const TemplateMatrix& t, const CharMatrix& lam) {
    std::vector<long long> x(kMaxIndeterminates, 0);
    std::vector<bool> known(kMaxIndeterminates, false);
    for (int pass = 0; pass < kMaxIndeterminates; ++pass) {
        for (int r = 0; r < t.n; ++r) {
            for (int c = 0; c < t.m; ++c) {
                const AffineForm& f = t.at(r, c);
                long long rest = static_cast<long long>(lam(r, c)) - f.constant;
                int unknown = -1;
                int count = 0;
                for (int i = 0; i < kMaxIndeterminates; ++i) {
                    if (f.coeff[i] == 0) continue;
                    if (known[i]) {
                        rest -= f.coeff[i] * x[i];
                    } else {
                        unknown = i;
                        ++count;
                    }
                }
                if (count != 1) continue;
                if (rest % f.coeff[unknown] != 0) return std::nullopt;
                x[unknown] = rest / f.coeff[unknown];
                known[unknown] = true;
            }
        }
    }
    if (instantiate(t, x) == lam) return x;
    return std::nullopt;
}

}  // namespace oracle
