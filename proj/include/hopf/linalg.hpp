// Dense exact linear algebra over a finite field.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hopf/field.hpp"

namespace hopf {

class LinalgError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Vec = std::vector<Scalar>;

class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(FieldPtr field, std::size_t n);
    /// Rows given as integers, reduced into the prime subfield.
    static Matrix from_ints(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows);
    static Matrix from_rows(FieldPtr field, std::size_t cols, const std::vector<Vec>& rows);
    static Matrix from_columns(FieldPtr field, std::size_t rows, const std::vector<Vec>& cols);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec column(std::size_t c) const;
    const std::vector<Scalar>& entries() const { return data_; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(Scalar c) const;
    Vec apply(std::span<const Scalar> v) const;
    Matrix pow(std::uint64_t k) const;
    bool is_zero() const;

    /// Entry-wise equality over the same field.
    bool operator==(const Matrix& o) const;

private:
    void require_same_field(const Matrix& o, const char* what) const;

    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form; pivot is the first nonzero entry in each column.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Row-reduced basis of a subspace of F^ambient.  Two subspaces are equal iff
/// their canonical bases are entry-wise equal.
class Subspace {
public:
    Subspace(FieldPtr field, std::size_t ambient);
    /// Span of the given vectors.
    static Subspace span(FieldPtr field, std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace row_space(const Matrix& m);
    static Subspace full(FieldPtr field, std::size_t ambient);

    const FieldPtr& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<Vec> vectors() const;

    bool contains(std::span<const Scalar> v) const;
    /// Express v in the canonical basis; nullopt when v is not in the subspace.
    std::optional<Vec> coordinates(std::span<const Scalar> v) const;

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

private:
    FieldPtr field_;
    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Null space {v : M v = 0}.
Subspace kernel(const Matrix& m);
/// Functionals vanishing on s, as a subspace of the dual (same coordinates).
Subspace annihilator(const Subspace& s);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// b is a subspace of a.
bool subspace_contains(const Subspace& a, const Subspace& b);
/// dim a - dim (a meet b)
std::size_t quotient_dim(const Subspace& a, const Subspace& b);

/// Kronecker product; (A x B)(v x w) = Av x Bw with flat index i * dim(w) + j.
Matrix kronecker(const Matrix& a, const Matrix& b);
/// Flattened tensor product of two vectors, index i * w.size() + j.
Vec kron_vec(const Field& f, std::span<const Scalar> v, std::span<const Scalar> w);

/// Smallest k in [1, cap] with M^k = I.
std::optional<std::size_t> matrix_order(const Matrix& m, std::size_t cap);

}  // namespace hopf
