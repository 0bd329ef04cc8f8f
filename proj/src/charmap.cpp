#include "fanlike/charmap.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "fanlike/automorphism.hpp"
#include "fanlike/error.hpp"

namespace fanlike {

namespace {

void check_shape(const PLSphere& k, const CharMatrix& lambda) {
    if (lambda.rows() != k.n() || lambda.cols() != k.m()) {
        fail(ErrorCode::ShapeMismatch, "matrix is " + std::to_string(lambda.rows()) + "x" +
                                           std::to_string(lambda.cols()) + ", sphere needs " + std::to_string(k.n()) +
                                           "x" + std::to_string(k.m()));
    }
}

std::vector<int> zero_based(Face f) {
    std::vector<int> out = f.vertices();
    for (int& v : out) --v;
    return out;
}

bool fits_i64(const BigInt& x) { return x >= INT64_MIN && x <= INT64_MAX; }

BigInt block_det(const CharMatrix& lambda, const std::vector<int>& cols) {
    const int n = lambda.rows();
    if (n <= 16) {
        std::int64_t buf[16 * 16];
        bool small = true;
        for (int r = 0; r < n && small; ++r) {
            for (int c = 0; c < n; ++c) {
                const BigInt& e = lambda(r, cols[c]);
                if (!fits_i64(e)) {
                    small = false;
                    break;
                }
                buf[r * n + c] = e.convert_to<std::int64_t>();
            }
        }
        if (small) {
            if (auto d = det_i64(buf, n)) return *d;
        }
    }
    return det(lambda.select_columns(cols));
}

// Adjacent facet pairs (index into facets()), one per ridge.
std::vector<std::pair<int, int>> walls_of(const PLSphere& k) {
    std::unordered_map<Face, int> first;
    std::vector<std::pair<int, int>> walls;
    for (std::size_t i = 0; i < k.facets().size(); ++i) {
        Face f = k.facets()[i];
        for (int v : f.vertices()) {
            auto [it, fresh] = first.try_emplace(f.without(v), static_cast<int>(i));
            if (!fresh) walls.emplace_back(it->second, static_cast<int>(i));
        }
    }
    return walls;
}

}  // namespace

IntMatrix face_block(const CharMatrix& lambda, Face f) { return lambda.select_columns(zero_based(f)); }

BigInt facet_det(const CharMatrix& lambda, Face sigma) { return block_det(lambda, zero_based(sigma)); }

bool is_characteristic(const PLSphere& k, const CharMatrix& lambda) {
    check_shape(k, lambda);
    for (Face f : k.facets()) {
        BigInt d = facet_det(lambda, f);
        if (d != 1 && d != -1) return false;
    }
    return true;
}

Face base_facet(const PLSphere& k) { return k.facets().front(); }

CharMatrix dj_normalize(const PLSphere& k, const CharMatrix& lambda, Face sigma0) {
    check_shape(k, lambda);
    if (!k.is_facet(sigma0)) fail(ErrorCode::NotAFacet, to_braced(sigma0) + " is not a facet");
    return inverse_unimodular(face_block(lambda, sigma0)) * lambda;
}

CharMatrix dj_normalize(const PLSphere& k, const CharMatrix& lambda) { return dj_normalize(k, lambda, base_facet(k)); }

bool dj_equivalent(const PLSphere& k, const CharMatrix& a, const CharMatrix& b) {
    check_shape(k, a);
    check_shape(k, b);
    Face base = base_facet(k);
    if (!is_unimodular(face_block(a, base)) || !is_unimodular(face_block(b, base))) return false;
    return dj_normalize(k, a, base) == dj_normalize(k, b, base);
}

CharMatrix permute_columns(const CharMatrix& lambda, const VertexPermutation& g) {
    if (static_cast<int>(g.size()) != lambda.cols()) fail(ErrorCode::ShapeMismatch, "permutation length");
    std::vector<int> idx;
    idx.reserve(g.size());
    for (int v : g) idx.push_back(v - 1);
    return lambda.select_columns(idx);
}

Projection project(const PLSphere& k, const CharMatrix& lambda, Face sigma) {
    check_shape(k, lambda);
    Link lk = link(k, sigma);
    Face tau;
    for (Face f : k.facets()) {
        if (sigma.subset_of(f)) {
            tau = f;
            break;
        }
    }
    std::vector<int> order = zero_based(sigma);
    for (int v : zero_based(tau - sigma)) order.push_back(v);
    IntMatrix u = inverse_unimodular(lambda.select_columns(order));
    IntMatrix full = u * lambda;
    std::vector<int> rows;
    for (int r = sigma.size(); r < k.n(); ++r) rows.push_back(r);
    std::vector<int> cols;
    for (int v : lk.labels) cols.push_back(v - 1);
    CharMatrix map = full.select_rows(rows).select_columns(cols);
    return Projection{std::move(lk), std::move(map)};
}

CharMatrix wedge_lift(const PLSphere& k, int v, const CharMatrix& lambda1, const CharMatrix& lambda2) {
    check_shape(k, lambda1);
    check_shape(k, lambda2);
    if (v < 1 || v > k.m()) fail(ErrorCode::NotAVertex, std::to_string(v) + " is not a vertex");
    Face tau;
    for (Face f : k.facets()) {
        if (f.contains(v)) {
            tau = f;
            break;
        }
    }
    CharMatrix a = dj_normalize(k, lambda1, tau);
    CharMatrix b = dj_normalize(k, lambda2, tau);
    const int n = k.n();
    const int m = k.m();
    const int rv = tau.index_of(v);
    for (int r = 0; r < n; ++r) {
        if (r == rv) continue;
        for (int c = 0; c < m; ++c) {
            if (a(r, c) != b(r, c)) {
                fail(ErrorCode::IncompatibleInputs, "normalized maps differ in row " + std::to_string(r + 1) +
                                                        " outside the row of vertex " + std::to_string(v));
            }
        }
    }
    CharMatrix out(n + 1, m + 1);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < m; ++c) out(r, c) = a(r, c);
    }
    for (int c = 0; c < m; ++c) {
        if (c != v - 1) out(n, c) = b(rv, c);
    }
    out(n, m) = 1;
    return out;
}

int OrientationMap::sign(const PLSphere& k, Face facet) const {
    int idx = k.facet_index(facet);
    if (idx < 0) fail(ErrorCode::NotAFacet, to_braced(facet) + " is not a facet");
    return signs[static_cast<std::size_t>(idx)];
}

OrientationMap orientation_map(const PLSphere& k, Face sigma0) {
    int start = k.facet_index(sigma0);
    if (start < 0) fail(ErrorCode::NotAFacet, to_braced(sigma0) + " is not a facet");
    const auto& facets = k.facets();
    std::unordered_map<Face, std::vector<int>> by_ridge;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (int v : facets[i].vertices()) by_ridge[facets[i].without(v)].push_back(static_cast<int>(i));
    }
    OrientationMap out{sigma0, std::vector<int>(facets.size(), 0)};
    out.signs[static_cast<std::size_t>(start)] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        Face sigma = facets[static_cast<std::size_t>(i)];
        for (int a : sigma.vertices()) {
            Face ridge = sigma.without(a);
            for (int j : by_ridge[ridge]) {
                if (j == i) continue;
                Face tau = facets[static_cast<std::size_t>(j)];
                int b = (tau - ridge).min_vertex();
                int parity = sigma.index_of(a) + tau.index_of(b) + 1;
                int s = out.signs[static_cast<std::size_t>(i)] * (parity % 2 == 0 ? 1 : -1);
                int& t = out.signs[static_cast<std::size_t>(j)];
                if (t == 0) {
                    t = s;
                    queue.push_back(j);
                } else if (t != s) {
                    fail(ErrorCode::OrientationConflict, "facets " + to_braced(sigma) + " and " + to_braced(tau) +
                                                             " disagree; complex is not orientable");
                }
            }
        }
    }
    return out;
}

OrientationMap orientation_map(const PLSphere& k) { return orientation_map(k, base_facet(k)); }

bool is_positive(const PLSphere& k, const CharMatrix& lambda) {
    check_shape(k, lambda);
    OrientationMap o = orientation_map(k);
    BigInt ratio = 0;
    for (std::size_t i = 0; i < k.facets().size(); ++i) {
        BigInt d = facet_det(lambda, k.facets()[i]) * o.signs[i];
        if (d == 0) return false;
        if (i == 0) {
            ratio = d;
        } else if (d != ratio) {
            return false;
        }
    }
    return true;
}

std::optional<FanViolation> fan_violation(const PLSphere& k, const CharMatrix& lambda, Face sigma1, Face sigma2) {
    check_shape(k, lambda);
    if (!k.is_facet(sigma1)) fail(ErrorCode::NotAFacet, to_braced(sigma1) + " is not a facet");
    if (!k.is_facet(sigma2)) fail(ErrorCode::NotAFacet, to_braced(sigma2) + " is not a facet");
    if (sigma1 == sigma2) return std::nullopt;
    IntMatrix inv = inverse_unimodular(face_block(lambda, sigma1));
    Face t = sigma2 - sigma1;
    IntMatrix mt = inv * face_block(lambda, t);  // n x k, rows follow sigma1
    std::vector<int> rows;
    for (int v : (sigma1 - sigma2).vertices()) rows.push_back(sigma1.index_of(v));
    auto z = nonneg_cone_point(to_rational(mt.select_rows(rows)));
    if (!z) return std::nullopt;

    RatVector mz = to_rational(mt) * *z;
    Face support = sigma1 | sigma2;
    RatVector x;
    for (int v : support.vertices()) {
        if (sigma1.contains(v)) {
            x.push_back(mz[static_cast<std::size_t>(sigma1.index_of(v))]);
        } else {
            x.push_back(-(*z)[static_cast<std::size_t>(t.index_of(v))]);
        }
    }
    return FanViolation{sigma1, sigma2, support.vertices(), clear_denominators(x)};
}

std::vector<FanViolation> fan_violations(const PLSphere& k, const CharMatrix& lambda, std::size_t limit) {
    if (!is_characteristic(k, lambda)) fail(ErrorCode::NotCharacteristic, "some facet determinant is not +-1");
    std::vector<FanViolation> out;
    const auto& facets = k.facets();
    for (std::size_t i = 0; i < facets.size() && out.size() < limit; ++i) {
        for (std::size_t j = i + 1; j < facets.size() && out.size() < limit; ++j) {
            if (auto v = fan_violation(k, lambda, facets[i], facets[j])) out.push_back(std::move(*v));
        }
    }
    return out;
}

std::optional<FanViolation> find_fan_violation(const PLSphere& k, const CharMatrix& lambda) {
    if (!is_characteristic(k, lambda)) fail(ErrorCode::NotCharacteristic, "some facet determinant is not +-1");
    if (auto cols = to_columns_i64(lambda)) {
        FanChecker checker(k);
        if (checker.check(cols->data()) == FanChecker::Outcome::FanGiving) return std::nullopt;
    }
    auto all = fan_violations(k, lambda, 1);
    if (all.empty()) return std::nullopt;
    return std::move(all.front());
}

bool is_fan_giving(const PLSphere& k, const CharMatrix& lambda) {
    if (!is_characteristic(k, lambda)) fail(ErrorCode::NotCharacteristic, "some facet determinant is not +-1");
    if (auto cols = to_columns_i64(lambda)) {
        FanChecker checker(k);
        auto outcome = checker.check(cols->data());
        if (outcome != FanChecker::Outcome::Overflow) return outcome == FanChecker::Outcome::FanGiving;
    }
    return fan_violations(k, lambda, 1).empty();
}

bool witness_is_valid(const PLSphere& k, const CharMatrix& lambda, const FanViolation& v) {
    check_shape(k, lambda);
    Face support = v.sigma1 | v.sigma2;
    if (support.vertices() != v.support || v.witness.size() != v.support.size()) return false;
    bool nonzero = false;
    for (std::size_t i = 0; i < v.support.size(); ++i) {
        int vertex = v.support[i];
        const BigInt& x = v.witness[i];
        if (x != 0) nonzero = true;
        if (v.sigma1.contains(vertex) && !v.sigma2.contains(vertex) && x < 0) return false;
        if (v.sigma2.contains(vertex) && !v.sigma1.contains(vertex) && x > 0) return false;
    }
    if (!nonzero) return false;
    for (int r = 0; r < lambda.rows(); ++r) {
        BigInt sum = 0;
        for (std::size_t i = 0; i < v.support.size(); ++i) sum += lambda(r, v.support[i] - 1) * v.witness[i];
        if (sum != 0) return false;
    }
    return true;
}

bool fan_isomorphic(const PLSphere& k, const std::vector<VertexPermutation>& group, const CharMatrix& lambda1,
                    const CharMatrix& lambda2) {
    check_shape(k, lambda1);
    check_shape(k, lambda2);
    Face base = base_facet(k);
    if (!is_unimodular(face_block(lambda2, base))) return false;
    CharMatrix target = dj_normalize(k, lambda2, base);
    for (const auto& g : group) {
        CharMatrix moved = permute_columns(lambda1, g);
        if (!is_unimodular(face_block(moved, base))) continue;
        if (dj_normalize(k, moved, base) == target) return true;
    }
    return false;
}

bool fan_isomorphic(const PLSphere& k, const CharMatrix& lambda1, const CharMatrix& lambda2) {
    return fan_isomorphic(k, automorphisms(k).elements, lambda1, lambda2);
}

std::pair<PLSphere, CharMatrix> stellar_subdivide_polygon(const PLSphere& k, const CharMatrix& lambda, Face edge) {
    if (k.n() != 2) fail(ErrorCode::NotAPolygon, "complex is not a polygon boundary");
    check_shape(k, lambda);
    if (!k.is_facet(edge)) fail(ErrorCode::NotAnEdge, to_braced(edge) + " is not an edge");
    const int m = k.m();
    int a = edge.min_vertex();
    int b = edge.max_vertex();
    std::vector<Face> facets;
    for (Face f : k.facets()) {
        if (f != edge) facets.push_back(f);
    }
    facets.push_back(Face{a, m + 1});
    facets.push_back(Face{b, m + 1});
    CharMatrix out(2, m + 1);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < m; ++c) out(r, c) = lambda(r, c);
        out(r, m) = lambda(r, a - 1) + lambda(r, b - 1);
    }
    return {PLSphere::from_facets(2, m + 1, std::move(facets)), std::move(out)};
}

bool is_projective(const PLSphere& k, const CharMatrix& lambda) {
    if (!is_fan_giving(k, lambda)) fail(ErrorCode::NotFanGiving, "projectivity needs a fan-giving map");
    // Heights c_v; the values on the base facet can be fixed to zero because
    // adding a global linear function preserves every wall inequality.
    Face base = base_facet(k);
    std::vector<int> var(static_cast<std::size_t>(k.m()) + 1, -1);
    int nvars = 0;
    for (int v = 1; v <= k.m(); ++v) {
        if (!base.contains(v)) var[static_cast<std::size_t>(v)] = nvars++;
    }
    auto walls = walls_of(k);
    RatMatrix ineqs(static_cast<int>(walls.size()), nvars + 1);
    std::vector<IntMatrix> inverses(k.facets().size());
    for (std::size_t w = 0; w < walls.size(); ++w) {
        auto [i, j] = walls[w];
        Face sigma = k.facets()[static_cast<std::size_t>(i)];
        Face tau = k.facets()[static_cast<std::size_t>(j)];
        int wv = (tau - sigma).min_vertex();
        IntMatrix& inv = inverses[static_cast<std::size_t>(i)];
        if (inv.rows() == 0) inv = inverse_unimodular(face_block(lambda, sigma));
        IntMatrix mu = inv * face_block(lambda, Face{wv});
        const int row = static_cast<int>(w);
        if (var[static_cast<std::size_t>(wv)] >= 0) ineqs(row, var[static_cast<std::size_t>(wv)]) += 1;
        auto sv = sigma.vertices();
        for (std::size_t p = 0; p < sv.size(); ++p) {
            int idx = var[static_cast<std::size_t>(sv[p])];
            if (idx >= 0) ineqs(row, idx) -= Rational(mu(static_cast<int>(p), 0));
        }
        ineqs(row, nvars) = 1;
    }
    return lp_feasible(ineqs, RatMatrix(0, nvars + 1));
}

std::optional<std::vector<std::int64_t>> to_columns_i64(const CharMatrix& lambda) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(lambda.rows()) * lambda.cols());
    for (int c = 0; c < lambda.cols(); ++c) {
        for (int r = 0; r < lambda.rows(); ++r) {
            const BigInt& e = lambda(r, c);
            if (!fits_i64(e)) return std::nullopt;
            out[static_cast<std::size_t>(c) * lambda.rows() + r] = e.convert_to<std::int64_t>();
        }
    }
    return out;
}

bool inverse_unimodular_i64(const std::int64_t* a, int n, std::int64_t* out) {
    if (n == 0) return true;
    if (n > 16) return false;
    // Fraction-free Gauss-Jordan on [A | I]; the left block ends as d*I and
    // the right block as d*A^{-1}.
    const int w = 2 * n;
    std::int64_t m[16 * 32];
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m[r * w + c] = a[r * n + c];
        for (int c = 0; c < n; ++c) m[r * w + n + c] = r == c ? 1 : 0;
    }
    std::int64_t prev = 1;
    for (int k = 0; k < n; ++k) {
        if (m[k * w + k] == 0) {
            int pick = -1;
            for (int r = k + 1; r < n; ++r) {
                if (m[r * w + k] != 0) {
                    pick = r;
                    break;
                }
            }
            if (pick < 0) return false;
            std::swap_ranges(m + k * w, m + k * w + w, m + pick * w);
        }
        const std::int64_t pivot = m[k * w + k];
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            const std::int64_t lead = m[i * w + k];
            for (int j = 0; j < w; ++j) {
                __int128 v = static_cast<__int128>(pivot) * m[i * w + j] - static_cast<__int128>(lead) * m[k * w + j];
                if (v % prev != 0) return false;
                v /= prev;
                if (v > INT64_MAX || v < INT64_MIN) return false;
                m[i * w + j] = static_cast<std::int64_t>(v);
            }
        }
        prev = pivot;
    }
    const std::int64_t d = prev;
    if (d != 1 && d != -1) return false;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) out[r * n + c] = m[r * w + n + c] * d;
    }
    // Cheap certificate: A * out must be the identity.
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            __int128 s = 0;
            for (int l = 0; l < n; ++l) s += static_cast<__int128>(a[r * n + l]) * out[l * n + c];
            if (s != (r == c ? 1 : 0)) return false;
        }
    }
    return true;
}

FanChecker::FanChecker(const PLSphere& k) : n_(k.n()) {
    const auto& facets = k.facets();
    for (Face f : facets) facet_cols_.push_back(zero_based(f));
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (std::size_t j = i + 1; j < facets.size(); ++j) {
            Pair p;
            p.first = static_cast<int>(i);
            p.second = static_cast<int>(j);
            p.t_cols = zero_based(facets[j] - facets[i]);
            for (int v : (facets[i] - facets[j]).vertices()) p.r_rows.push_back(facets[i].index_of(v));
            pairs_.push_back(std::move(p));
        }
    }
    std::stable_sort(pairs_.begin(), pairs_.end(),
                     [](const Pair& a, const Pair& b) { return a.t_cols.size() < b.t_cols.size(); });
}

FanChecker::Outcome FanChecker::check(const std::int64_t* columns) const {
    const int n = n_;
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    std::vector<std::int64_t> inv(facet_cols_.size() * nn);
    std::vector<std::int64_t> block(nn);
    for (std::size_t f = 0; f < facet_cols_.size(); ++f) {
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) block[r * n + c] = columns[facet_cols_[f][c] * n + r];
        }
        if (!inverse_unimodular_i64(block.data(), n, inv.data() + f * nn)) return Outcome::Overflow;
    }
    std::vector<std::int64_t> nmat;
    for (const Pair& p : pairs_) {
        const int k = static_cast<int>(p.t_cols.size());
        const std::int64_t* finv = inv.data() + static_cast<std::size_t>(p.first) * nn;
        nmat.assign(static_cast<std::size_t>(k) * k, 0);
        for (int r = 0; r < k; ++r) {
            const std::int64_t* row = finv + p.r_rows[r] * n;
            for (int c = 0; c < k; ++c) {
                const std::int64_t* col = columns + p.t_cols[c] * n;
                __int128 s = 0;
                for (int l = 0; l < n; ++l) s += static_cast<__int128>(row[l]) * col[l];
                if (s > INT64_MAX || s < INT64_MIN) return Outcome::Overflow;
                nmat[r * k + c] = static_cast<std::int64_t>(s);
            }
        }
        if (nonneg_cone_point(nmat, k, k)) return Outcome::Violated;
    }
    return Outcome::FanGiving;
}

}  // namespace fanlike
