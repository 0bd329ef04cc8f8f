#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fanlike {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix over T.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
    Matrix(int rows, int cols, std::vector<T> data);
    /// Row-major nested initializer, for tests and constants.
    Matrix(std::initializer_list<std::initializer_list<long long>> rows);

    static Matrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const std::vector<T>& data() const noexcept { return data_; }

    std::vector<T> column(int c) const;
    /// Columns picked by 0-based index, in the given order.
    Matrix select_columns(const std::vector<int>& idx) const;
    Matrix select_rows(const std::vector<int>& idx) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVector operator*(const RatMatrix& a, const RatVector& x);
RatMatrix to_rational(const IntMatrix& a);

/// Fraction-free (Bareiss) determinant. Throws NotSquare.
BigInt det(const IntMatrix& a);
/// Overflow-checked 64-bit Bareiss on a row-major n x n block; nullopt on overflow.
std::optional<std::int64_t> det_i64(const std::int64_t* a, int n);

bool is_unimodular(const IntMatrix& a);
/// Exact integer inverse of a matrix with determinant +-1. Throws NotUnimodular.
IntMatrix inverse_unimodular(const IntMatrix& a);

int rank(const RatMatrix& a);
/// Basis of the right null space over Q, one vector per free column of the
/// reduced row echelon form.
std::vector<RatVector> kernel_basis(const IntMatrix& a);
std::vector<RatVector> kernel_basis(const RatMatrix& a);

/// Feasibility of {A_ineq y >= b_ineq, A_eq y = b_eq} with y free in Q^k.
/// Both systems are augmented: the last column holds the right-hand side, so
/// each matrix has k+1 columns (either may have zero rows, but column counts
/// must agree when both are non-empty). Exact phase-one simplex with Bland's
/// rule; returns a feasible point or nullopt.
std::optional<RatVector> lp_find_point(const RatMatrix& ineqs, const RatMatrix& eqs);
bool lp_feasible(const RatMatrix& ineqs, const RatMatrix& eqs);

/// True iff {y : D y >= 0} = {0}. Decided by 2k feasibility problems
/// {D y >= 0, s y_j = 1}.
bool cone_is_trivial(const RatMatrix& d);
/// A nonzero point of {y : D y >= 0}, or nullopt when the cone is trivial.
std::optional<RatVector> cone_nonzero_point(const RatMatrix& d);

/// Decides whether some z >= 0, z != 0 has N z >= 0 (N square or not). Returns
/// such a z scaled to sum 1, or nullopt. Small exact shortcuts run before the
/// LP; int entries are expected to be small.
std::optional<RatVector> nonneg_cone_point(const std::vector<std::int64_t>& n_rowmajor, int rows, int cols);
std::optional<RatVector> nonneg_cone_point(const RatMatrix& n);

/// Integer multiple of a rational vector with coprime entries (sign kept).
std::vector<BigInt> clear_denominators(const RatVector& x);

std::string to_string(const IntMatrix& a);

}  // namespace fanlike
