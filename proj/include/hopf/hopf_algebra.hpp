// Structure-constant representation of a finite-dimensional Hopf algebra and
// the exhaustive axiom checker.
//
// Tensor layouts (n = dim):
//   mult[(i*n + j)*n + k]   coefficient of e_k in e_i e_j
//   comult[(i*n + j)*n + k] coefficient of e_j (x) e_k in Delta(e_i)
//   antipode(r, c)          coefficient of e_r in S(e_c)
// An element of H (x) H is flattened with e_i (x) e_j at index i*n + j.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopf/field.hpp"
#include "hopf/linalg.hpp"

namespace hopf {

class HopfError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Element {
    Vec coords;

    bool operator==(const Element&) const = default;
};

struct Tensor2 {
    std::size_t n = 0;
    Vec coords;  // n*n, e_j (x) e_k at j*n + k

    Scalar at(std::size_t j, std::size_t k) const { return coords[j * n + k]; }
    bool operator==(const Tensor2&) const = default;
};

struct HopfAlgebra {
    FieldPtr field;
    std::size_t dim = 0;
    std::vector<std::string> basis_labels;
    Vec mult;
    Vec unit;
    Vec comult;
    Vec counit;
    std::optional<Matrix> antipode;

    Scalar m(std::size_t i, std::size_t j, std::size_t k) const { return mult[(i * dim + j) * dim + k]; }
    Scalar c(std::size_t i, std::size_t j, std::size_t k) const { return comult[(i * dim + j) * dim + k]; }

    /// Shape and field-membership checks (not the Hopf axioms).
    void check_shape() const;
    /// Entry-wise identical tensors, labels and field.
    bool operator==(const HopfAlgebra& o) const;
};

// ---- elements ---------------------------------------------------------------

Element zero_element(const HopfAlgebra& h);
Element one(const HopfAlgebra& h);
Element basis_element(const HopfAlgebra& h, std::size_t i);
Element add(const HopfAlgebra& h, const Element& a, const Element& b);
Element sub(const HopfAlgebra& h, const Element& a, const Element& b);
Element scale(const HopfAlgebra& h, Scalar c, const Element& a);
bool is_zero(const Element& a);

Tensor2 zero_tensor(const HopfAlgebra& h);
Tensor2 tensor(const HopfAlgebra& h, const Element& a, const Element& b);
Tensor2 add(const HopfAlgebra& h, const Tensor2& a, const Tensor2& b);
Tensor2 sub(const HopfAlgebra& h, const Tensor2& a, const Tensor2& b);
Tensor2 scale(const HopfAlgebra& h, Scalar c, const Tensor2& a);
bool is_zero(const Tensor2& t);

Element multiply(const HopfAlgebra& h, const Element& a, const Element& b);
Tensor2 comultiply(const HopfAlgebra& h, const Element& a);
Scalar counit(const HopfAlgebra& h, const Element& a);
Element apply_antipode(const HopfAlgebra& h, const Element& a);
/// Componentwise product in H (x) H: (a (x) b)(c (x) d) = ac (x) bd.
Tensor2 tensor2_multiply(const HopfAlgebra& h, const Tensor2& s, const Tensor2& t);
Element power(const HopfAlgebra& h, const Element& a, std::uint64_t k);
Tensor2 tensor2_power(const HopfAlgebra& h, const Tensor2& t, std::uint64_t k);
Tensor2 one_tensor(const HopfAlgebra& h);

/// Linear map x -> Delta(x) as an n^2 x n matrix.
Matrix comult_matrix(const HopfAlgebra& h);
/// Linear map x -> a x (left) or x a (right).
Matrix left_mult_matrix(const HopfAlgebra& h, const Element& a);
Matrix right_mult_matrix(const HopfAlgebra& h, const Element& a);

std::string format_element(const HopfAlgebra& h, const Element& a);

// ---- axioms -------------------------------------------------------------------

struct AxiomCheck {
    std::string name;
    bool pass = true;
    /// First failing basis tuple in lexicographic order.
    std::vector<std::size_t> counterexample;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool all_pass() const;
    const AxiomCheck& get(const std::string& name) const;
    bool bialgebra_pass() const;
};

/// Exhaustive basis-tuple check of associativity, unit, coassociativity,
/// counit, bialgebra compatibility and the antipode law.
AxiomReport verify_axioms(const HopfAlgebra& h);

/// Convolution inverse of the identity; requires a bialgebra.
Matrix compute_antipode(const HopfAlgebra& h);

/// Linear dual with the transposed structure maps.
HopfAlgebra dual(const HopfAlgebra& h);

/// Same algebra expressed in the basis e'_i = e_{perm[i]}.
HopfAlgebra permute_basis(const HopfAlgebra& h, const std::vector<std::size_t>& perm);
/// Same algebra in the basis e'_i = sum_r change(r, i) e_r; change must be invertible.
HopfAlgebra change_basis(const HopfAlgebra& h, const Matrix& change);

}  // namespace hopf
