#include "fanlike/exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fanlike/error.hpp"

namespace fanlike {

template <typename T>
Matrix<T>::Matrix(int rows, int cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows < 0 || cols < 0 || data_.size() != static_cast<std::size_t>(rows) * cols) {
        fail(ErrorCode::ShapeMismatch, "matrix data does not match " + std::to_string(rows) + "x" + std::to_string(cols));
    }
}

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) fail(ErrorCode::ShapeMismatch, "ragged matrix literal");
        for (long long v : row) data_.emplace_back(v);
    }
}

template <typename T>
Matrix<T> Matrix<T>::identity(int n) {
    Matrix out(n, n);
    for (int i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

template <typename T>
std::vector<T> Matrix<T>::column(int c) const {
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
}

template <typename T>
Matrix<T> Matrix<T>::select_columns(const std::vector<int>& idx) const {
    Matrix out(rows_, static_cast<int>(idx.size()));
    for (int r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < idx.size(); ++j) out(r, static_cast<int>(j)) = (*this)(r, idx[j]);
    }
    return out;
}

template <typename T>
Matrix<T> Matrix<T>::select_rows(const std::vector<int>& idx) const {
    Matrix out(static_cast<int>(idx.size()), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (int c = 0; c < cols_; ++c) out(static_cast<int>(i), c) = (*this)(idx[i], c);
    }
    return out;
}

template class Matrix<BigInt>;
template class Matrix<Rational>;

namespace {

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) fail(ErrorCode::ShapeMismatch, "product of incompatible shapes");
    Matrix<T> out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& a) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int pick = -1;
        for (int r = row; r < a.rows(); ++r) {
            if (a(r, col) != 0) {
                pick = r;
                break;
            }
        }
        if (pick < 0) continue;
        if (pick != row) {
            for (int c = 0; c < a.cols(); ++c) std::swap(a(pick, c), a(row, c));
        }
        Rational inv = 1 / a(row, col);
        for (int c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            Rational factor = a(r, col);
            for (int c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

bool checked_i64(__int128 v, std::int64_t& out) {
    if (v > INT64_MAX || v < INT64_MIN) return false;
    out = static_cast<std::int64_t>(v);
    return true;
}

// Phase-one simplex over nonnegative variables. Each row is
// sum_j coeff[j] x_j (>= or =) rhs. Returns a feasible x or nullopt.
struct LpRow {
    std::vector<Rational> coeff;
    Rational rhs;
    bool equality = false;
};

std::optional<RatVector> phase_one(const std::vector<LpRow>& rows, int nvars) {
    const int nrows = static_cast<int>(rows.size());
    if (nrows == 0) return RatVector(static_cast<std::size_t>(nvars));

    int nslack = 0;
    for (const auto& row : rows) nslack += row.equality ? 0 : 1;

    // Rows whose slack can start basic need no artificial variable.
    std::vector<int> slack_col(static_cast<std::size_t>(nrows), -1);
    std::vector<bool> needs_art(static_cast<std::size_t>(nrows), true);
    int next_slack = nvars;
    for (int i = 0; i < nrows; ++i) {
        if (rows[i].equality) continue;
        slack_col[i] = next_slack++;
        if (rows[i].rhs <= 0) needs_art[i] = false;
    }
    int nart = static_cast<int>(std::count(needs_art.begin(), needs_art.end(), true));
    const int ncols = nvars + nslack + nart;
    const int rhs = ncols;

    std::vector<std::vector<Rational>> t(static_cast<std::size_t>(nrows),
                                         std::vector<Rational>(static_cast<std::size_t>(ncols) + 1));
    std::vector<int> basis(static_cast<std::size_t>(nrows));
    int next_art = nvars + nslack;
    for (int i = 0; i < nrows; ++i) {
        auto& tr = t[i];
        for (int j = 0; j < nvars; ++j) tr[j] = rows[i].coeff[j];
        if (slack_col[i] >= 0) tr[slack_col[i]] = -1;
        tr[rhs] = rows[i].rhs;
        if (tr[rhs] < 0 || (!needs_art[i] && slack_col[i] >= 0)) {
            for (auto& v : tr) v = -v;
        }
        if (needs_art[i]) {
            tr[next_art] = 1;
            basis[i] = next_art++;
        } else {
            basis[i] = slack_col[i];
        }
    }
    if (nart == 0) {
        RatVector x(static_cast<std::size_t>(nvars));
        return x;
    }

    // Reduced costs of the phase-one objective (sum of artificials).
    const int first_art = nvars + nslack;
    std::vector<Rational> cost(static_cast<std::size_t>(ncols) + 1);
    for (int i = 0; i < nrows; ++i) {
        if (basis[i] < first_art) continue;
        for (int j = 0; j <= ncols; ++j) {
            if (j < first_art || j == rhs) cost[j] -= t[i][j];
        }
    }

    for (;;) {
        int enter = -1;
        for (int j = 0; j < ncols; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int i = 0; i < nrows; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) break;  // unbounded direction cannot occur in phase one
        auto& pr = t[leave];
        Rational inv = 1 / pr[enter];
        for (auto& v : pr) v *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational f = t[i][enter];
            for (int j = 0; j <= ncols; ++j) {
                if (pr[j] != 0) t[i][j] -= f * pr[j];
            }
        }
        if (cost[enter] != 0) {
            Rational f = cost[enter];
            for (int j = 0; j <= ncols; ++j) {
                if (pr[j] != 0) cost[j] -= f * pr[j];
            }
        }
        basis[leave] = enter;
    }
    // cost[rhs] holds minus the objective value.
    if (cost[rhs] != 0) return std::nullopt;
    RatVector x(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nrows; ++i) {
        if (basis[i] < nvars) x[basis[i]] = t[i][rhs];
    }
    return x;
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return multiply(a, b); }
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return multiply(a, b); }

RatVector operator*(const RatMatrix& a, const RatVector& x) {
    if (static_cast<int>(x.size()) != a.cols()) fail(ErrorCode::ShapeMismatch, "matrix-vector shape mismatch");
    RatVector out(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
    }
    return out;
}

RatMatrix to_rational(const IntMatrix& a) {
    RatMatrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out(r, c) = Rational(a(r, c));
    }
    return out;
}

BigInt det(const IntMatrix& a) {
    if (!a.square()) fail(ErrorCode::NotSquare, std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    const int n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r) {
                if (m(r, k) != 0) {
                    swap_row = r;
                    break;
                }
            }
            if (swap_row < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
        }
        prev = m(k, k);
    }
    BigInt d = m(n - 1, n - 1);
    return sign < 0 ? BigInt(-d) : d;
}

std::optional<std::int64_t> det_i64(const std::int64_t* a, int n) {
    if (n == 0) return 1;
    std::int64_t buf[16 * 16];
    std::vector<std::int64_t> heap;
    std::int64_t* m = buf;
    if (n > 16) {
        heap.resize(static_cast<std::size_t>(n) * n);
        m = heap.data();
    }
    std::copy(a, a + static_cast<std::ptrdiff_t>(n) * n, m);
    std::int64_t prev = 1;
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        std::int64_t* rk = m + static_cast<std::ptrdiff_t>(k) * n;
        if (rk[k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r) {
                if (m[static_cast<std::ptrdiff_t>(r) * n + k] != 0) {
                    swap_row = r;
                    break;
                }
            }
            if (swap_row < 0) return 0;
            std::swap_ranges(rk, rk + n, m + static_cast<std::ptrdiff_t>(swap_row) * n);
            negate = !negate;
        }
        const std::int64_t pivot = rk[k];
        for (int i = k + 1; i < n; ++i) {
            std::int64_t* ri = m + static_cast<std::ptrdiff_t>(i) * n;
            const std::int64_t lead = ri[k];
            for (int j = k + 1; j < n; ++j) {
                __int128 v = static_cast<__int128>(ri[j]) * pivot - static_cast<__int128>(lead) * rk[j];
                if (!checked_i64(v / prev, ri[j])) return std::nullopt;
            }
        }
        prev = pivot;
    }
    std::int64_t d = m[static_cast<std::ptrdiff_t>(n) * n - 1];
    return negate ? -d : d;
}

bool is_unimodular(const IntMatrix& a) {
    if (!a.square()) return false;
    BigInt d = det(a);
    return d == 1 || d == -1;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
    if (!is_unimodular(a)) fail(ErrorCode::NotUnimodular, "determinant is not +-1");
    const int n = a.rows();
    RatMatrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug(r, c) = Rational(a(r, c));
        aug(r, n + r) = 1;
    }
    rref(aug);
    IntMatrix out(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) out(r, c) = numerator(aug(r, n + c));
    }
    return out;
}

int rank(const RatMatrix& a) {
    RatMatrix m = a;
    return static_cast<int>(rref(m).size());
}

std::vector<RatVector> kernel_basis(const IntMatrix& a) { return kernel_basis(to_rational(a)); }

std::vector<RatVector> kernel_basis(const RatMatrix& a) {
    RatMatrix m = a;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<RatVector> out;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector v(static_cast<std::size_t>(a.cols()));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), f);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<RatVector> lp_find_point(const RatMatrix& ineqs, const RatMatrix& eqs) {
    int width = -1;
    for (const RatMatrix* part : {&ineqs, &eqs}) {
        if (part->cols() == 0 && part->rows() == 0) continue;
        if (width >= 0 && part->cols() != width) fail(ErrorCode::ShapeMismatch, "LP blocks disagree on columns");
        width = part->cols();
    }
    if (width < 1) return RatVector{};
    const int k = width - 1;
    // Free variables split as y = y_plus - y_minus.
    std::vector<LpRow> rows;
    auto add = [&](const RatMatrix& part, bool equality) {
        for (int r = 0; r < part.rows(); ++r) {
            LpRow row;
            row.coeff.resize(static_cast<std::size_t>(2 * k));
            for (int j = 0; j < k; ++j) {
                row.coeff[j] = part(r, j);
                row.coeff[k + j] = -part(r, j);
            }
            row.rhs = part(r, k);
            row.equality = equality;
            rows.push_back(std::move(row));
        }
    };
    add(ineqs, false);
    add(eqs, true);
    auto x = phase_one(rows, 2 * k);
    if (!x) return std::nullopt;
    RatVector y(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) y[j] = (*x)[j] - (*x)[k + j];
    return y;
}

bool lp_feasible(const RatMatrix& ineqs, const RatMatrix& eqs) { return lp_find_point(ineqs, eqs).has_value(); }

std::optional<RatVector> cone_nonzero_point(const RatMatrix& d) {
    const int k = d.cols();
    RatMatrix ineqs(d.rows(), k + 1);
    for (int r = 0; r < d.rows(); ++r) {
        for (int c = 0; c < k; ++c) ineqs(r, c) = d(r, c);
    }
    for (int j = 0; j < k; ++j) {
        for (int s : {1, -1}) {
            RatMatrix eq(1, k + 1);
            eq(0, j) = s;
            eq(0, k) = 1;
            if (auto y = lp_find_point(ineqs, eq)) return y;
        }
    }
    return std::nullopt;
}

bool cone_is_trivial(const RatMatrix& d) { return !cone_nonzero_point(d).has_value(); }

namespace {

// Determinant of a k x k block (k <= 4) of 128-bit values by cofactor
// expansion; callers keep the entries small enough that nothing overflows.
__int128 small_det(const __int128* a, int k, int stride) {
    if (k == 0) return 1;
    if (k == 1) return a[0];
    if (k == 2) return a[0] * a[stride + 1] - a[1] * a[stride];
    __int128 sub[16];
    __int128 total = 0;
    for (int j = 0; j < k; ++j) {
        if (a[j] == 0) continue;
        int w = 0;
        for (int r = 1; r < k; ++r) {
            for (int c = 0; c < k; ++c) {
                if (c != j) sub[w++] = a[r * stride + c];
            }
        }
        __int128 minor = small_det(sub, k - 1, k - 1);
        total += (j % 2 == 0 ? a[j] : -a[j]) * minor;
    }
    return total;
}

// {z >= 0, Nz >= 0} is pointed, so it is nontrivial iff it has an extreme ray,
// and every extreme ray is cut out by cols-1 independent tight constraints.
// Enumerates those subsets for cols <= 5. Returns nullopt when the entries are
// too large for the 128-bit bound, and an empty vector when the cone is {0}.
std::optional<std::vector<std::int64_t>> small_cone_ray(const std::vector<std::int64_t>& n, int rows, int cols) {
    constexpr std::int64_t kEntryLimit = 1 << 16;
    for (std::int64_t v : n) {
        if (v > kEntryLimit || v < -kEntryLimit) return std::nullopt;
    }
    const int total = cols + rows;  // constraint i < cols is z_i >= 0, else row i - cols
    const int pick = cols - 1;
    std::vector<int> chosen(static_cast<std::size_t>(pick));
    for (int i = 0; i < pick; ++i) chosen[static_cast<std::size_t>(i)] = i;
    __int128 a[20];
    __int128 sub[16];
    std::vector<__int128> z(static_cast<std::size_t>(cols));
    for (;;) {
        for (int i = 0; i < pick; ++i) {
            int con = chosen[static_cast<std::size_t>(i)];
            for (int c = 0; c < cols; ++c) {
                a[i * cols + c] = con < cols ? (c == con ? 1 : 0) : n[static_cast<std::size_t>(con - cols) * cols + c];
            }
        }
        bool nonzero = false;
        for (int j = 0; j < cols; ++j) {
            int w = 0;
            for (int r = 0; r < pick; ++r) {
                for (int c = 0; c < cols; ++c) {
                    if (c != j) sub[w++] = a[r * cols + c];
                }
            }
            __int128 d = small_det(sub, pick, pick);
            z[static_cast<std::size_t>(j)] = j % 2 == 0 ? d : -d;
            nonzero = nonzero || d != 0;
        }
        if (nonzero) {
            for (int sign : {1, -1}) {
                bool ok = true;
                for (int c = 0; c < cols && ok; ++c) ok = sign * z[static_cast<std::size_t>(c)] >= 0;
                for (int r = 0; r < rows && ok; ++r) {
                    __int128 s = 0;
                    for (int c = 0; c < cols; ++c) s += n[static_cast<std::size_t>(r) * cols + c] * z[static_cast<std::size_t>(c)];
                    ok = sign * s >= 0;
                }
                if (ok) {
                    // Minors are bounded by 4! * 2^64, so reduce by the gcd before narrowing.
                    __int128 g = 0;
                    for (__int128 v : z) {
                        __int128 x = v < 0 ? -v : v;
                        while (x != 0) {
                            __int128 t = g % x;
                            g = x;
                            x = t;
                        }
                    }
                    std::vector<std::int64_t> out(static_cast<std::size_t>(cols));
                    for (int c = 0; c < cols; ++c) {
                        __int128 v = sign * z[static_cast<std::size_t>(c)] / g;
                        if (v > INT64_MAX || v < INT64_MIN) return std::nullopt;
                        out[static_cast<std::size_t>(c)] = static_cast<std::int64_t>(v);
                    }
                    return out;
                }
            }
        }
        int i = pick - 1;
        while (i >= 0 && chosen[static_cast<std::size_t>(i)] == total - pick + i) --i;
        if (i < 0) break;
        ++chosen[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < pick; ++j) chosen[static_cast<std::size_t>(j)] = chosen[static_cast<std::size_t>(j) - 1] + 1;
    }
    return std::vector<std::int64_t>{};
}

}  // namespace

std::optional<RatVector> nonneg_cone_point(const std::vector<std::int64_t>& n, int rows, int cols) {
    if (cols == 0) return std::nullopt;
    auto at = [&](int r, int c) { return n[static_cast<std::size_t>(r) * cols + c]; };
    for (int c = 0; c < cols; ++c) {
        bool ok = true;
        for (int r = 0; r < rows && ok; ++r) ok = at(r, c) >= 0;
        if (ok) {
            RatVector z(static_cast<std::size_t>(cols));
            z[c] = 1;
            return z;
        }
    }
    for (int r = 0; r < rows; ++r) {
        bool negative = true;
        for (int c = 0; c < cols && negative; ++c) negative = at(r, c) < 0;
        if (negative) return std::nullopt;
    }
    if (cols <= 5) {
        if (auto ray = small_cone_ray(n, rows, cols)) {
            if (ray->empty()) return std::nullopt;
            BigInt sum = 0;
            for (std::int64_t v : *ray) sum += v;
            RatVector z(static_cast<std::size_t>(cols));
            for (int c = 0; c < cols; ++c) z[static_cast<std::size_t>(c)] = Rational(BigInt((*ray)[static_cast<std::size_t>(c)]), sum);
            return z;
        }
    }
    std::vector<LpRow> lp;
    for (int r = 0; r < rows; ++r) {
        LpRow row;
        row.coeff.reserve(static_cast<std::size_t>(cols));
        for (int c = 0; c < cols; ++c) row.coeff.emplace_back(at(r, c));
        lp.push_back(std::move(row));
    }
    LpRow total;
    total.coeff.assign(static_cast<std::size_t>(cols), Rational(1));
    total.rhs = 1;
    total.equality = true;
    lp.push_back(std::move(total));
    return phase_one(lp, cols);
}

std::optional<RatVector> nonneg_cone_point(const RatMatrix& n) {
    const int rows = n.rows();
    const int cols = n.cols();
    if (cols == 0) return std::nullopt;
    for (int c = 0; c < cols; ++c) {
        bool ok = true;
        for (int r = 0; r < rows && ok; ++r) ok = n(r, c) >= 0;
        if (ok) {
            RatVector z(static_cast<std::size_t>(cols));
            z[c] = 1;
            return z;
        }
    }
    std::vector<LpRow> lp;
    for (int r = 0; r < rows; ++r) {
        LpRow row;
        for (int c = 0; c < cols; ++c) row.coeff.push_back(n(r, c));
        lp.push_back(std::move(row));
    }
    LpRow total;
    total.coeff.assign(static_cast<std::size_t>(cols), Rational(1));
    total.rhs = 1;
    total.equality = true;
    lp.push_back(std::move(total));
    return phase_one(lp, cols);
}

std::vector<BigInt> clear_denominators(const RatVector& x) {
    BigInt l = 1;
    for (const auto& v : x) l = boost::multiprecision::lcm(l, denominator(v));
    std::vector<BigInt> out;
    out.reserve(x.size());
    BigInt g = 0;
    for (const auto& v : x) {
        BigInt e = numerator(v) * (l / denominator(v));
        g = boost::multiprecision::gcd(g, e);
        out.push_back(std::move(e));
    }
    if (g > 1) {
        for (auto& e : out) e /= g;
    }
    return out;
}

std::string to_string(const IntMatrix& a) {
    std::ostringstream out;
    out << a.rows() << ' ' << a.cols() << '\n';
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out << (c ? " " : "") << a(r, c);
        out << '\n';
    }
    return out.str();
}

}  // namespace fanlike
