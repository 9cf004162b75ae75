#include <doctest.h>

#include <random>

#include "hopf/linalg.hpp"

using namespace hopf;

namespace {

Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937& rng)
{
    std::uniform_int_distribution<std::uint32_t> pick(0, f->size() - 1);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar{pick(rng)};
    return m;
}

// every vector of F_q^n, in odometer order
std::vector<Vec> all_vectors(std::uint32_t q, std::size_t n)
{
    std::vector<Vec> out;
    Vec v(n, Scalar{0});
    while (true) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < n && ++v[i].v == q) v[i++].v = 0;
        if (i == n) break;
    }
    return out;
}

}  // namespace

TEST_CASE("rref examples")
{
    auto F5 = Field::prime(5), F7 = Field::prime(7);
    const auto id = Matrix::identity(F5, 3);
    CHECK(rref(id).reduced == id);
    CHECK(rref(id).rank == 3);
    const Matrix z(F5, 2, 4);
    CHECK(rref(z).reduced == z);
    CHECK(rref(z).rank == 0);
    const auto r = rref(Matrix::from_ints(F7, {{1, 2}, {2, 4}}));
    CHECK(r.reduced == Matrix::from_ints(F7, {{1, 2}, {0, 0}}));
    CHECK(r.rank == 1);
}

TEST_CASE("rref is idempotent and rank-nullity holds")
{
    std::mt19937 rng(3);
    for (auto f : {Field::prime(2), Field::prime(3), Field::prime(7), Field::make(2, 2, {1, 1, 1})})
        for (int t = 0; t < 30; ++t) {
            const Matrix m = random_matrix(f, 1 + t % 5, 1 + (t * 7) % 6, rng);
            const auto r = rref(m);
            CHECK(rref(r.reduced).reduced == r.reduced);
            CHECK(r.rank + kernel(m).dim() == m.cols());
            for (const auto& v : kernel(m).vectors()) {
                const Vec mv = m.apply(v);
                CHECK(std::all_of(mv.begin(), mv.end(), [](Scalar s) { return s.v == 0; }));
            }
        }
}

TEST_CASE("kernel examples")
{
    auto F2 = Field::prime(2);
    CHECK(kernel(Matrix::identity(F2, 4)).dim() == 0);
    CHECK(kernel(Matrix(F2, 3, 3)).dim() == 3);
    const Subspace k = kernel(Matrix::from_ints(F2, {{1, 1}}));
    CHECK(k.dim() == 1);
    CHECK(k.vectors()[0] == Vec{Scalar{1}, Scalar{1}});
    // enumeration oracle over F_2^2
    std::size_t count = 0;
    for (const auto& v : all_vectors(2, 2))
        if (F2->add(v[0], v[1]).v == 0) ++count;
    CHECK(count == 2);
}

TEST_CASE("canonical bases do not depend on the spanning set")
{
    auto F3 = Field::prime(3);
    const auto a = Subspace::span(F3, 3, {{Scalar{1}, Scalar{1}, Scalar{0}}, {Scalar{0}, Scalar{0}, Scalar{1}}});
    const auto b = Subspace::span(F3, 3, {{Scalar{1}, Scalar{1}, Scalar{2}}, {Scalar{2}, Scalar{2}, Scalar{0}},
                                          {Scalar{0}, Scalar{0}, Scalar{2}}});
    CHECK(a == b);
}

TEST_CASE("subspace lattice")
{
    auto F3 = Field::prime(3);
    const Vec e1{Scalar{1}, Scalar{0}}, e2{Scalar{0}, Scalar{1}};
    const auto A = Subspace::span(F3, 2, {e1}), B = Subspace::span(F3, 2, {e2});
    CHECK(subspace_sum(A, B).dim() == 2);
    CHECK(subspace_intersect(A, B).dim() == 0);
    CHECK(subspace_intersect(A, A) == A);
    CHECK(quotient_dim(A, A) == 0);
    CHECK(quotient_dim(subspace_sum(A, B), A) == 1);
    CHECK(subspace_contains(subspace_sum(A, B), A));
    CHECK_FALSE(subspace_contains(A, B));
    CHECK_THROWS_AS(subspace_sum(A, Subspace::full(F3, 3)), LinalgError);
}

TEST_CASE("intersection against exhaustive membership over F_3^3")
{
    auto F3 = Field::prime(3);
    // A = span{e1+e2, e3}, B = span{e1-e2, e2+e3}
    const auto A = Subspace::span(F3, 3, {{Scalar{1}, Scalar{1}, Scalar{0}}, {Scalar{0}, Scalar{0}, Scalar{1}}});
    const auto B = Subspace::span(F3, 3, {{Scalar{1}, Scalar{2}, Scalar{0}}, {Scalar{0}, Scalar{1}, Scalar{1}}});
    std::size_t both = 0;
    for (const auto& v : all_vectors(3, 3))
        if (A.contains(v) && B.contains(v)) ++both;
    const auto I = subspace_intersect(A, B);
    std::size_t expect = 1;
    for (std::size_t i = 0; i < I.dim(); ++i) expect *= 3;
    CHECK(both == expect);
    CHECK(I.dim() == 1);
    CHECK(subspace_sum(A, B).dim() == A.dim() + B.dim() - I.dim());

    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        const auto X = Subspace::row_space(random_matrix(F3, 2, 3, rng));
        const auto Y = Subspace::row_space(random_matrix(F3, 2, 3, rng));
        std::size_t n = 0;
        for (const auto& v : all_vectors(3, 3))
            if (X.contains(v) && Y.contains(v)) ++n;
        std::size_t size = 1;
        for (std::size_t i = 0; i < subspace_intersect(X, Y).dim(); ++i) size *= 3;
        CHECK(n == size);
    }
}

TEST_CASE("annihilator")
{
    auto F5 = Field::prime(5);
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
        const auto S = Subspace::row_space(random_matrix(F5, 2, 4, rng));
        const auto Ann = annihilator(S);
        CHECK(Ann.dim() + S.dim() == 4);
        for (const auto& a : Ann.vectors())
            for (const auto& s : S.vectors()) {
                Scalar dot{0};
                for (std::size_t i = 0; i < 4; ++i) dot = F5->add(dot, F5->mul(a[i], s[i]));
                CHECK(dot.v == 0);
            }
    }
}

TEST_CASE("kronecker product")
{
    auto F5 = Field::prime(5);
    CHECK(kronecker(Matrix::identity(F5, 2), Matrix::identity(F5, 3)) == Matrix::identity(F5, 6));
    const Matrix A = Matrix::from_ints(F5, {{1, 2}, {3, 4}});
    CHECK(kronecker(A, Matrix::from_ints(F5, {{3}})) == A.scaled(F5->from_int(3)));
    std::mt19937 rng(1);
    for (int t = 0; t < 10; ++t) {
        const Matrix a = random_matrix(F5, 2, 2, rng), b = random_matrix(F5, 2, 2, rng);
        const Matrix c = random_matrix(F5, 2, 2, rng), d = random_matrix(F5, 2, 2, rng);
        CHECK(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
        const Vec v = random_matrix(F5, 1, 2, rng).entries(), w = random_matrix(F5, 1, 3, rng).entries();
        const Matrix e = random_matrix(F5, 3, 3, rng);
        CHECK(kronecker(a, e).apply(kron_vec(*F5, v, w)) == kron_vec(*F5, a.apply(v), e.apply(w)));
    }
    // flat index i * dim(w) + j
    const Vec v{Scalar{1}, Scalar{2}}, w{Scalar{3}, Scalar{4}, Scalar{1}};
    const Vec vw = kron_vec(*F5, v, w);
    CHECK(vw[1 * 3 + 2] == F5->mul(v[1], w[2]));
}

TEST_CASE("matrix order")
{
    auto F2 = Field::prime(2);
    CHECK(matrix_order(Matrix::identity(F2, 3), 10) == 1);
    CHECK(matrix_order(Matrix::from_ints(F2, {{0, 1}, {1, 0}}), 10) == 2);
    const Matrix comp = Matrix::from_ints(F2, {{0, 1}, {1, 1}});  // companion of t^2 + t + 1
    CHECK(comp.pow(3) == Matrix::identity(F2, 2));
    CHECK(matrix_order(comp, 10) == 3);
    CHECK_FALSE(matrix_order(Matrix(F2, 2, 2), 10).has_value());
    CHECK_FALSE(matrix_order(comp, 2).has_value());
}

TEST_CASE("inverse")
{
    auto F7 = Field::prime(7);
    std::mt19937 rng(9);
    for (int t = 0; t < 20; ++t) {
        const Matrix m = random_matrix(F7, 4, 4, rng);
        const auto inv = inverse(m);
        CHECK(inv.has_value() == (rank(m) == 4));
        if (inv) CHECK(m * *inv == Matrix::identity(F7, 4));
    }
}
