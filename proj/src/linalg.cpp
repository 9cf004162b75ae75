#include "hopf/linalg.hpp"

#include <algorithm>
#include <string>

namespace hopf {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Scalar{0})
{
    if (!field_) throw LinalgError("matrix without field");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (!field_) throw LinalgError("matrix without field");
    if (data_.size() != rows * cols)
        throw LinalgError("matrix entry count " + std::to_string(data_.size()) + " != " +
                          std::to_string(rows) + "x" + std::to_string(cols));
    for (auto s : data_)
        if (!field_->contains(s)) throw LinalgError("matrix entry outside field");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field->one();
    return m;
}

Matrix Matrix::from_ints(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw LinalgError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = field->from_int(rows[r][c]);
    }
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, std::size_t cols, const std::vector<Vec>& rows)
{
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw LinalgError("row length mismatch");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

Matrix Matrix::from_columns(FieldPtr field, std::size_t rows, const std::vector<Vec>& cols)
{
    Matrix m(field, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw LinalgError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Vec Matrix::column(std::size_t c) const
{
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void Matrix::require_same_field(const Matrix& o, const char* what) const
{
    if (!same_field(field_, o.field_)) throw LinalgError(std::string(what) + ": field mismatch");
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    require_same_field(o, "matrix product");
    if (cols_ != o.rows_) throw LinalgError("matrix product: shape mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar a = (*this)(r, k);
            if (a.v) field_->axpy(out.row(r), a, o.row(k));
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    require_same_field(o, "matrix sum");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw LinalgError("matrix sum: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], o.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    require_same_field(o, "matrix difference");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw LinalgError("matrix difference: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->sub(data_[i], o.data_[i]);
    return out;
}

Matrix Matrix::scaled(Scalar c) const
{
    Matrix out = *this;
    for (auto& s : out.data_) s = field_->mul(c, s);
    return out;
}

Vec Matrix::apply(std::span<const Scalar> v) const
{
    if (v.size() != cols_) throw LinalgError("matrix-vector product: shape mismatch");
    Vec out(rows_, Scalar{0});
    for (std::size_t r = 0; r < rows_; ++r) {
        Scalar acc{0};
        for (std::size_t c = 0; c < cols_; ++c)
            if (v[c].v) acc = field_->add(acc, field_->mul((*this)(r, c), v[c]));
        out[r] = acc;
    }
    return out;
}

Matrix Matrix::pow(std::uint64_t k) const
{
    if (!is_square()) throw LinalgError("matrix power of non-square matrix");
    Matrix acc = identity(field_, rows_);
    Matrix base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s.v == 0; });
}

bool Matrix::operator==(const Matrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && same_field(field_, o.field_) && data_ == o.data_;
}

RrefResult rref(const Matrix& m)
{
    RrefResult res{m, 0, {}};
    Matrix& a = res.reduced;
    const Field& f = *a.field();
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a(piv, c).v == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
        const Scalar inv = f.inv(a(r, c));
        for (auto& s : a.row(r).subspan(c)) s = f.mul(s, inv);
        const auto pivot_row = a.row(r).subspan(c);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Scalar factor = a(i, c);
            if (factor.v) f.axpy(a.row(i).subspan(c), f.neg(factor), pivot_row);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> inverse(const Matrix& m)
{
    if (!m.is_square()) throw LinalgError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = m.field()->one();
    }
    auto red = rref(aug);
    if (red.rank < n || red.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
    return inv;
}

Subspace::Subspace(FieldPtr field, std::size_t ambient)
    : field_(field), ambient_(ambient), basis_(field, 0, ambient)
{
}

Subspace Subspace::row_space(const Matrix& m)
{
    auto red = rref(m);
    Subspace s(m.field(), m.cols());
    Matrix basis(m.field(), red.rank, m.cols());
    for (std::size_t r = 0; r < red.rank; ++r)
        std::copy(red.reduced.row(r).begin(), red.reduced.row(r).end(), basis.row(r).begin());
    s.basis_ = std::move(basis);
    s.pivots_ = std::move(red.pivots);
    return s;
}

Subspace Subspace::span(FieldPtr field, std::size_t ambient, const std::vector<Vec>& vectors)
{
    return row_space(Matrix::from_rows(std::move(field), ambient, vectors));
}

Subspace Subspace::full(FieldPtr field, std::size_t ambient)
{
    return row_space(Matrix::identity(std::move(field), ambient));
}

std::vector<Vec> Subspace::vectors() const
{
    std::vector<Vec> out;
    for (std::size_t r = 0; r < basis_.rows(); ++r)
        out.emplace_back(basis_.row(r).begin(), basis_.row(r).end());
    return out;
}

std::optional<Vec> Subspace::coordinates(std::span<const Scalar> v) const
{
    if (v.size() != ambient_) throw LinalgError("vector length does not match ambient dimension");
    Vec rest(v.begin(), v.end());
    Vec coords(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        coords[i] = rest[pivots_[i]];
        field_->axpy(rest, field_->neg(coords[i]), basis_.row(i));
    }
    if (std::any_of(rest.begin(), rest.end(), [](Scalar s) { return s.v != 0; })) return std::nullopt;
    return coords;
}

bool Subspace::contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }

Subspace kernel(const Matrix& m)
{
    auto red = rref(m);
    const Field& f = *m.field();
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : red.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, Scalar{0});
        v[free] = f.one();
        for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = f.neg(red.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.field(), cols, basis);
}

Subspace annihilator(const Subspace& s) { return kernel(s.basis()); }

namespace {

void require_compatible(const Subspace& a, const Subspace& b, const char* what)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw LinalgError(std::string(what) + ": ambient dimensions differ (" +
                          std::to_string(a.ambient_dim()) + " vs " + std::to_string(b.ambient_dim()) + ")");
    if (!same_field(a.field(), b.field())) throw LinalgError(std::string(what) + ": field mismatch");
}

}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b)
{
    require_compatible(a, b, "subspace sum");
    auto vs = a.vectors();
    for (auto& v : b.vectors()) vs.push_back(std::move(v));
    return Subspace::span(a.field(), a.ambient_dim(), vs);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b)
{
    require_compatible(a, b, "subspace intersection");
    // Zassenhaus: rows [a | a] and [b | 0]; rows with zero left half span a meet b.
    const std::size_t n = a.ambient_dim();
    Matrix z(a.field(), a.dim() + b.dim(), 2 * n);
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) z(r, c) = z(r, n + c) = a.basis()(r, c);
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) z(a.dim() + r, c) = b.basis()(r, c);
    auto red = rref(z);
    std::vector<Vec> meet;
    for (std::size_t r = 0; r < red.rank; ++r) {
        if (red.pivots[r] < n) continue;
        auto row = red.reduced.row(r);
        meet.emplace_back(row.begin() + n, row.end());
    }
    return Subspace::span(a.field(), n, meet);
}

bool subspace_contains(const Subspace& a, const Subspace& b)
{
    require_compatible(a, b, "subspace containment");
    for (std::size_t r = 0; r < b.dim(); ++r)
        if (!a.contains(b.basis().row(r))) return false;
    return true;
}

std::size_t quotient_dim(const Subspace& a, const Subspace& b)
{
    return a.dim() - subspace_intersect(a, b).dim();
}

Matrix kronecker(const Matrix& a, const Matrix& b)
{
    if (!same_field(a.field(), b.field())) throw LinalgError("kronecker: field mismatch");
    const Field& f = *a.field();
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar s = a(i, j);
            if (!s.v) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = f.mul(s, b(k, l));
        }
    return out;
}

Vec kron_vec(const Field& f, std::span<const Scalar> v, std::span<const Scalar> w)
{
    Vec out(v.size() * w.size(), Scalar{0});
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i].v)
            for (std::size_t j = 0; j < w.size(); ++j) out[i * w.size() + j] = f.mul(v[i], w[j]);
    return out;
}

std::optional<std::size_t> matrix_order(const Matrix& m, std::size_t cap)
{
    if (!m.is_square()) throw LinalgError("matrix order of non-square matrix");
    const Matrix id = Matrix::identity(m.field(), m.rows());
    Matrix cur = m;
    for (std::size_t k = 1; k <= cap; ++k) {
        if (cur == id) return k;
        cur = cur * m;
    }
    return std::nullopt;
}

}  // namespace hopf
