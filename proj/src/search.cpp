#include "fanlike/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "fanlike/automorphism.hpp"
#include "fanlike/error.hpp"

namespace fanlike {

namespace {

using Columns = std::vector<std::int64_t>;  // column-major, m*n

struct Plan {
    int n = 0;
    int m = 0;
    SearchMode mode = SearchMode::FanGiving;
    std::vector<int> order;                         // free vertices, 1-based
    std::vector<Columns> candidates;                // per depth, flattened n-vectors
    std::vector<std::vector<int>> checks;           // per depth, facet indices to test
    std::vector<std::vector<int>> facet_cols;       // 0-based columns per facet
    std::vector<int> expected;                      // required det per facet, 0 = +-1
    Columns start;                                  // base columns filled in
    std::optional<FanChecker> checker;
};

bool det_ok(const Plan& plan, const std::int64_t* cols, int facet) {
    const int n = plan.n;
    std::int64_t buf[16 * 16];
    const auto& fc = plan.facet_cols[static_cast<std::size_t>(facet)];
    for (int c = 0; c < n; ++c) {
        const std::int64_t* col = cols + static_cast<std::ptrdiff_t>(fc[c]) * n;
        for (int r = 0; r < n; ++r) buf[r * n + c] = col[r];
    }
    auto d = det_i64(buf, n);
    if (!d) return false;  // entries are bounded, so this only guards misuse
    int want = plan.expected[static_cast<std::size_t>(facet)];
    return want == 0 ? (*d == 1 || *d == -1) : *d == want;
}

long long gcd_abs(const std::int64_t* v, int n) {
    long long g = 0;
    for (int i = 0; i < n; ++i) g = std::gcd(g, static_cast<long long>(v[i] < 0 ? -v[i] : v[i]));
    return g;
}

Plan make_plan(const PLSphere& k, const SearchConfig& cfg) {
    if (cfg.bound < 0) fail(ErrorCode::ShapeMismatch, "bound must be nonnegative");
    if (k.n() < 1) fail(ErrorCode::ShapeMismatch, "search needs n >= 1");
    if (k.n() > 16) fail(ErrorCode::TooLarge, "search supports n <= 16");
    Plan plan;
    plan.n = k.n();
    plan.m = k.m();
    plan.mode = cfg.mode;
    const int n = plan.n;
    const Face base = base_facet(k);

    if (!cfg.pins.empty()) {
        if (static_cast<int>(cfg.pins.size()) != k.m()) fail(ErrorCode::ShapeMismatch, "pins need one entry per vertex");
        for (const auto& col : cfg.pins) {
            if (!col.empty() && static_cast<int>(col.size()) != n) {
                fail(ErrorCode::ShapeMismatch, "a pinned column must have n entries");
            }
        }
    }
    auto pin = [&](int v, int r) -> std::optional<long long> {
        if (cfg.pins.empty()) return std::nullopt;
        const auto& col = cfg.pins[static_cast<std::size_t>(v) - 1];
        if (col.empty()) return std::nullopt;
        return col[static_cast<std::size_t>(r)];
    };

    plan.order = cfg.column_order.empty() ? greedy_column_order(k) : cfg.column_order;
    {
        std::vector<int> sorted = plan.order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> want = (Face::range(k.m()) - base).vertices();
        if (sorted != want) fail(ErrorCode::ShapeMismatch, "column order must list every non-base vertex once");
    }

    for (Face f : k.facets()) {
        std::vector<int> cols = f.vertices();
        for (int& c : cols) --c;
        plan.facet_cols.push_back(std::move(cols));
    }
    plan.expected.assign(k.facets().size(), 0);
    if (cfg.mode != SearchMode::Characteristic) {
        OrientationMap o = orientation_map(k, base);
        plan.expected = o.signs;
    }

    plan.start.assign(static_cast<std::size_t>(k.m()) * n, 0);
    bool base_conflict = false;
    for (int v : base.vertices()) {
        int r = base.index_of(v);
        plan.start[static_cast<std::size_t>(v - 1) * n + r] = 1;
        for (int rr = 0; rr < n; ++rr) {
            auto p = pin(v, rr);
            if (p && *p != (rr == r ? 1 : 0)) base_conflict = true;
        }
    }

    // Facets checked at the depth where their last free vertex is assigned;
    // facets with a single free vertex are applied while building candidates.
    std::vector<int> depth_of(static_cast<std::size_t>(k.m()) + 1, -1);
    for (std::size_t d = 0; d < plan.order.size(); ++d) depth_of[static_cast<std::size_t>(plan.order[d])] = static_cast<int>(d);
    const std::size_t depths = plan.order.size();
    plan.checks.assign(depths, {});
    std::vector<std::vector<int>> unary(depths);
    for (std::size_t i = 0; i < k.facets().size(); ++i) {
        Face f = k.facets()[i];
        Face free = f - base;
        if (free.empty()) continue;
        int last = -1;
        for (int v : free.vertices()) last = std::max(last, depth_of[static_cast<std::size_t>(v)]);
        if (free.size() == 1) {
            unary[static_cast<std::size_t>(last)].push_back(static_cast<int>(i));
        } else {
            plan.checks[static_cast<std::size_t>(last)].push_back(static_cast<int>(i));
        }
    }

    plan.candidates.assign(depths, {});
    if (base_conflict) {
        plan.start.clear();  // no matrix can satisfy the pins
        return plan;
    }
    const int b = cfg.bound;
    Columns scratch = plan.start;
    std::vector<std::int64_t> vec(static_cast<std::size_t>(n));
    for (std::size_t d = 0; d < depths; ++d) {
        int v = plan.order[d];
        std::fill(vec.begin(), vec.end(), -b);
        for (;;) {
            bool keep = true;
            for (int r = 0; r < n && keep; ++r) {
                auto p = pin(v, r);
                if (p && *p != vec[static_cast<std::size_t>(r)]) keep = false;
            }
            if (keep && gcd_abs(vec.data(), n) != 1) keep = false;
            if (keep) {
                std::copy(vec.begin(), vec.end(), scratch.begin() + static_cast<std::ptrdiff_t>(v - 1) * n);
                for (int f : unary[d]) {
                    if (!det_ok(plan, scratch.data(), f)) {
                        keep = false;
                        break;
                    }
                }
            }
            if (keep) plan.candidates[d].insert(plan.candidates[d].end(), vec.begin(), vec.end());
            int pos = n - 1;
            while (pos >= 0) {
                if (vec[static_cast<std::size_t>(pos)] < b) {
                    ++vec[static_cast<std::size_t>(pos)];
                    break;
                }
                vec[static_cast<std::size_t>(pos)] = -b;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    if (cfg.mode == SearchMode::FanGiving) plan.checker.emplace(k);
    return plan;
}

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::uint64_t budget = 0;
    // Nodes counted locally before touching the shared counter; small budgets
    // need a small batch or they never trip.
    std::uint64_t batch = 4096;
};

class Worker {
public:
    Worker(const Plan& plan, Shared& shared) : plan_(plan), shared_(shared), cols_(plan.start) {}

    void run_from(int depth) { dfs(depth); }

    // Assigns candidate `idx` at depth 0 and explores below it.
    void run_root(std::size_t idx) {
        if (!place(0, idx)) return;
        dfs(1);
    }

    void flush() {
        shared_.nodes += local_;
        local_ = 0;
    }

    std::vector<Columns> found;

private:
    bool place(int depth, std::size_t idx) {
        count();
        const int n = plan_.n;
        const int v = plan_.order[static_cast<std::size_t>(depth)];
        const auto& cand = plan_.candidates[static_cast<std::size_t>(depth)];
        std::copy_n(cand.begin() + static_cast<std::ptrdiff_t>(idx) * n, n,
                    cols_.begin() + static_cast<std::ptrdiff_t>(v - 1) * n);
        for (int f : plan_.checks[static_cast<std::size_t>(depth)]) {
            if (!det_ok(plan_, cols_.data(), f)) return false;
        }
        return true;
    }

    void dfs(int depth) {
        if (shared_.stop.load(std::memory_order_relaxed)) return;
        if (depth == static_cast<int>(plan_.order.size())) {
            leaf();
            return;
        }
        const std::size_t count = plan_.candidates[static_cast<std::size_t>(depth)].size() / static_cast<std::size_t>(plan_.n);
        for (std::size_t i = 0; i < count; ++i) {
            if (place(depth, i)) dfs(depth + 1);
        }
    }

    void leaf() {
        if (plan_.mode == SearchMode::FanGiving) {
            auto outcome = plan_.checker->check(cols_.data());
            if (outcome == FanChecker::Outcome::Overflow) throw std::logic_error("overflow on bounded entries");
            if (outcome != FanChecker::Outcome::FanGiving) return;
        }
        found.push_back(cols_);
    }

    void count() {
        if (++local_ >= shared_.batch) {
            std::uint64_t total = shared_.nodes.fetch_add(local_) + local_;
            local_ = 0;
            if (total > shared_.budget) {
                shared_.stop = true;
                fail(ErrorCode::BudgetExceeded, "node budget of " + std::to_string(shared_.budget) + " exceeded");
            }
        }
    }

    const Plan& plan_;
    Shared& shared_;
    Columns cols_;
    std::uint64_t local_ = 0;
};

CharMatrix to_matrix(const Columns& cols, int n, int m) {
    CharMatrix out(n, m);
    for (int c = 0; c < m; ++c) {
        for (int r = 0; r < n; ++r) out(r, c) = cols[static_cast<std::size_t>(c) * n + r];
    }
    return out;
}

// Normal form of lambda o g at the base facet, in 64-bit arithmetic.
std::optional<Columns> normalized_image(const Columns& cols, int n, int m, const VertexPermutation& g,
                                        const std::vector<int>& base_cols) {
    Columns moved(cols.size());
    for (int v = 0; v < m; ++v) {
        std::copy_n(cols.begin() + static_cast<std::ptrdiff_t>(g[static_cast<std::size_t>(v)] - 1) * n, n,
                    moved.begin() + static_cast<std::ptrdiff_t>(v) * n);
    }
    std::int64_t block[16 * 16];
    std::int64_t inv[16 * 16];
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) block[r * n + c] = moved[static_cast<std::size_t>(base_cols[c]) * n + r];
    }
    if (!inverse_unimodular_i64(block, n, inv)) return std::nullopt;
    Columns out(cols.size());
    for (int v = 0; v < m; ++v) {
        for (int r = 0; r < n; ++r) {
            __int128 s = 0;
            for (int l = 0; l < n; ++l) s += static_cast<__int128>(inv[r * n + l]) * moved[static_cast<std::size_t>(v) * n + l];
            if (s > INT64_MAX || s < INT64_MIN) return std::nullopt;
            out[static_cast<std::size_t>(v) * n + r] = static_cast<std::int64_t>(s);
        }
    }
    return out;
}

}  // namespace

std::string to_string(SearchMode mode) {
    switch (mode) {
        case SearchMode::Characteristic: return "characteristic";
        case SearchMode::Positive: return "positive";
        case SearchMode::FanGiving: return "fan";
    }
    return "unknown";
}

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Fanlike: return "Fanlike";
        case VerdictStatus::MinimallyNonFanlike: return "MinimallyNonFanlike";
        case VerdictStatus::NonFanlikeByLink: return "NonFanlikeByLink";
        case VerdictStatus::UnknownWithinBound: return "UnknownWithinBound";
    }
    return "Unknown";
}

std::vector<int> greedy_column_order(const PLSphere& k) {
    Face assigned = base_facet(k);
    std::vector<int> order;
    Face remaining = Face::range(k.m()) - assigned;
    while (!remaining.empty()) {
        int best = -1;
        int best_count = -1;
        for (int v : remaining.vertices()) {
            Face with = assigned.with(v);
            int count = 0;
            for (Face f : k.facets()) {
                if (f.contains(v) && f.subset_of(with)) ++count;
            }
            if (count > best_count) {
                best = v;
                best_count = count;
            }
        }
        order.push_back(best);
        assigned = assigned.with(best);
        remaining = remaining.without(best);
    }
    return order;
}

SearchResult search_char_maps(const PLSphere& k, const SearchConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Plan plan = make_plan(k, cfg);
    SearchResult result;
    const int n = plan.n;
    const int m = plan.m;
    std::vector<Columns> found;
    Shared shared;
    shared.budget = cfg.node_budget;
    shared.batch = std::clamp<std::uint64_t>(cfg.node_budget / 64, 1, 4096);

    if (plan.start.empty()) {
        // Pins contradict the identity on the base facet.
    } else if (plan.order.empty()) {
        Worker w(plan, shared);
        w.run_from(0);
        w.flush();
        found = std::move(w.found);
    } else {
        const std::size_t roots = plan.candidates[0].size() / static_cast<std::size_t>(n);
        unsigned threads = std::max(1U, cfg.threads);
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(roots, 1)));
        std::atomic<std::size_t> next{0};
        std::mutex mu;
        std::exception_ptr error;
        auto body = [&]() {
            Worker w(plan, shared);
            try {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= roots || shared.stop) break;
                    w.run_root(i);
                }
                w.flush();
            } catch (...) {
                shared.stop = true;
                std::lock_guard lock(mu);
                if (!error) error = std::current_exception();
            }
            std::lock_guard lock(mu);
            for (auto& f : w.found) found.push_back(std::move(f));
        };
        if (threads == 1) {
            body();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(body);
            for (auto& th : pool) th.join();
        }
        if (error) std::rethrow_exception(error);
    }
    std::sort(found.begin(), found.end());

    if (cfg.dedup && !found.empty()) {
        auto group = automorphisms(k).elements;
        std::vector<int> base_cols = base_facet(k).vertices();
        for (int& c : base_cols) --c;
        std::set<Columns> seen;
        std::vector<Columns> kept;
        for (auto& cols : found) {
            Columns key = cols;
            for (const auto& g : group) {
                auto img = normalized_image(cols, n, m, g, base_cols);
                if (img && *img < key) key = std::move(*img);
            }
            if (seen.insert(key).second) kept.push_back(std::move(cols));
        }
        found = std::move(kept);
    }

    result.maps.reserve(found.size());
    for (const auto& cols : found) {
        CharMatrix lambda = to_matrix(cols, n, m);
        // Results are re-verified with the reference predicates.
        bool ok = is_characteristic(k, lambda);
        if (ok && cfg.mode != SearchMode::Characteristic) ok = is_positive(k, lambda);
        if (ok && cfg.mode == SearchMode::FanGiving) ok = is_fan_giving(k, lambda);
        if (!ok) throw std::logic_error("search produced a matrix that fails re-verification");
        result.maps.push_back(std::move(lambda));
    }
    result.stats.nodes = shared.nodes.load();
    result.stats.time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

std::optional<BadLink> has_bad_link(const PLSphere& k, const std::vector<NamedSphere>& seeds, bool include_empty) {
    for (Face sigma : k.all_faces()) {
        if (sigma.empty() && !include_empty) continue;
        const int dim_n = k.n() - sigma.size();
        bool any = false;
        for (const auto& s : seeds) any = any || s.sphere.n() == dim_n;
        if (!any) continue;
        Face span;
        for (Face f : k.facets()) {
            if (sigma.subset_of(f)) span = span | f;
        }
        const int link_m = (span - sigma).size();
        std::optional<Link> lk;
        for (const auto& s : seeds) {
            if (s.sphere.n() != dim_n || s.sphere.m() != link_m) continue;
            if (!lk) lk = link(k, sigma);
            if (lk->complex.min_nonfaces().size() != s.sphere.min_nonfaces().size()) continue;
            if (are_isomorphic(lk->complex, s.sphere)) return BadLink{sigma, s.id};
        }
    }
    return std::nullopt;
}

Verdict classify(const PLSphere& k, const std::vector<NamedSphere>& seeds, int bound, unsigned threads) {
    Verdict v;
    v.bound = bound;
    for (const auto& s : seeds) {
        if (are_isomorphic(k, s.sphere)) {
            v.catalog_match = s.id;
            break;
        }
    }
    if (auto bad = has_bad_link(k, seeds, false)) {
        v.status = VerdictStatus::NonFanlikeByLink;
        v.bad_link = bad;
        return v;
    }
    SearchConfig cfg;
    cfg.bound = bound;
    cfg.mode = SearchMode::FanGiving;
    cfg.threads = threads;
    SearchResult r = search_char_maps(k, cfg);
    v.stats = r.stats;
    if (!r.maps.empty()) {
        v.status = VerdictStatus::Fanlike;
        v.witnesses = std::move(r.maps);
    } else if (!v.catalog_match.empty()) {
        v.status = VerdictStatus::MinimallyNonFanlike;
    } else {
        v.status = VerdictStatus::UnknownWithinBound;
    }
    return v;
}

BatyrevCounts batyrev_counts(const PLSphere& k) {
    const int p = k.picard();
    return BatyrevCounts{count_min_nonfaces(k), p, (p - 1) * (p + 2) / 2};
}

}  // namespace fanlike
