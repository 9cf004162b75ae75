// Structural analysis of a finite-dimensional Hopf algebra: grouplikes,
// skew-primitives, conjugation characters, coradical filtration, the
// Taft-Wilson dimension identity, quantum binomials and the p-power
// identities used in the dimension p^2 classification.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopf/hopf_algebra.hpp"

namespace hopf {

class AnalysisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pass/fail record serialized as {"check", "pass", "details"}.
struct CheckReport {
    std::string check;
    bool pass = true;
    nlohmann::json details = nlohmann::json::object();

    nlohmann::json to_json() const;
};

// ---- grouplikes ------------------------------------------------------------------

enum class Completeness { complete, unchecked };

struct GrouplikeGroup {
    std::vector<Element> elements;  // canonical (lexicographic) order
    std::vector<std::vector<std::size_t>> table;
    std::size_t identity_index = 0;
    Completeness completeness = Completeness::complete;

    std::size_t size() const { return elements.size(); }
    std::size_t inverse(std::size_t i) const;
    std::size_t order(std::size_t i) const;
    /// Largest element order.
    std::size_t exponent() const;
    bool is_abelian() const;
    /// Index of an element equal to e, if any.
    std::optional<std::size_t> find(const Element& e) const;
};

/// Default cap on field_size^dim for brute force; HOPF_BRUTEFORCE_CAP overrides.
std::uint64_t default_bruteforce_cap();

bool is_grouplike(const HopfAlgebra& h, const Element& x);

/// Enumerates every vector; throws when |F|^dim exceeds cap.
GrouplikeGroup grouplikes_bruteforce(const HopfAlgebra& h, std::uint64_t cap = default_bruteforce_cap());
/// Checks the candidates and closure; completeness is confirmed by brute
/// force when that fits under cap and reported unchecked otherwise.
GrouplikeGroup grouplikes_verify(const HopfAlgebra& h, const std::vector<Element>& candidates,
                                 std::uint64_t cap = default_bruteforce_cap());
/// Complete search: x is grouplike iff (e_i^* (x) id) Delta(x) = x_i x for all i
/// and eps(x) = 1, so grouplikes are the joint eigenvectors of these maps whose
/// eigenvalue tuple equals the vector itself.
GrouplikeGroup grouplikes_eigen(const HopfAlgebra& h);

// ---- skew-primitives and characters --------------------------------------------------

/// P_{g,h} = {x : Delta(x) = x (x) g + h (x) x}.
Subspace skew_primitives(const HopfAlgebra& h, const Element& g, const Element& hh);

/// f x f^{-1} as a linear map on H.
Matrix conjugation_matrix(const HopfAlgebra& h, const GrouplikeGroup& G, std::size_t f);

enum class CharacterKind { multiplicative, additive };

struct ConjugationCharacter {
    CharacterKind kind = CharacterKind::multiplicative;
    std::vector<Scalar> values;  // indexed like G.elements
    Element witness;
    /// Additive kind: f x f^{-1} - x = values[f] * direction, direction = h - g.
    Element direction;
};

/// Multiplicative over char != |G|'s prime, additive otherwise.  Throws when
/// x is not a witness; the message carries the defect vector.
ConjugationCharacter conjugation_character(const HopfAlgebra& h, const GrouplikeGroup& G, const Element& g,
                                           const Element& hh, const Element& x);
/// Deterministic witness in P_{g,h} outside k(g - h): the first canonical
/// basis vector of the first joint eigenspace (multiplicative kind) or of the
/// subspace whose conjugation defects lie in k(g - h) (additive kind).
std::optional<Element> canonical_witness(const HopfAlgebra& h, const GrouplikeGroup& G, const Element& g,
                                         const Element& hh);
bool character_law_holds(const HopfAlgebra& h, const GrouplikeGroup& G, const ConjugationCharacter& chi);

// ---- filtration ---------------------------------------------------------------------

struct FiltrationReport {
    std::vector<Subspace> levels;
    std::vector<std::size_t> dims;
    std::size_t stabilization_index = 0;
};

/// H_n = Delta^{-1}(H (x) H_{n-1} + H_0 (x) H) starting from h0.
FiltrationReport coradical_filtration(const HopfAlgebra& h, const Subspace& h0);
Subspace grouplike_span(const HopfAlgebra& h, const GrouplikeGroup& G);
/// Delta(H_n) inside sum_i H_i (x) H_{n-i} for every level.
CheckReport filtration_coalgebra_check(const HopfAlgebra& h, const FiltrationReport& f);

CheckReport taft_wilson_check(const HopfAlgebra& h, const GrouplikeGroup& G, const FiltrationReport& f);

// ---- quantum binomials and p-power identities ------------------------------------------

/// Gaussian binomial (n choose i)_w by the Pascal recurrence.
Scalar quantum_binomial(const Field& f, std::uint64_t n, std::uint64_t i, Scalar omega);
/// Factorial quotient form; nullopt when a denominator vanishes.
std::optional<Scalar> quantum_binomial_factorial(const Field& f, std::uint64_t n, std::uint64_t i, Scalar omega);

/// (x (x) 1 + g (x) x)^p = x^p (x) 1 + g^p (x) x^p and Delta(x^p) = x^p (x) 1 + 1 (x) x^p.
CheckReport frobenius_binomial_identity(const HopfAlgebra& h, const Element& g, const Element& x, std::uint32_t p);

/// k-fold b -> x b - b x applied to a.
Element ad_power(const HopfAlgebra& h, const Element& x, const Element& a, std::uint64_t k);

struct AdjointMatrices {
    Matrix T, P, P_inv;
};
/// Matrix of ad x on 1, g, ..., g^{p-1} and the binomial diagonalizing matrices over F_p.
AdjointMatrices adjoint_matrices(std::uint32_t p);
CheckReport adjoint_matrix_identity(std::uint32_t p);

/// Delta(x)^p = x^p (x) 1 + 1 (x) x^p + (g - 1) (x) x, x^p - x primitive and zero.
CheckReport delta_xp_identity(const HopfAlgebra& h, const Element& g, const Element& x, std::uint32_t p);

// ---- invariants ------------------------------------------------------------------------

std::size_t antipode_order(const HopfAlgebra& h, std::optional<std::size_t> cap = std::nullopt);

struct StructureFlags {
    bool commutative = false;
    bool cocommutative = false;
};
StructureFlags structure_flags(const HopfAlgebra& h);

struct FrobeniusProfile {
    std::size_t image_dim = 0;
    std::size_t kernel_dim = 0;
};
/// a -> a^p on a commutative algebra over a prime field.
FrobeniusProfile frobenius_profile(const HopfAlgebra& h);

struct PMapProfile {
    std::size_t rank = 0;
    bool nilpotent = true;
    bool abelian = true;  // P_{1,1} closed under commutators to zero
};
/// x -> x^p on the canonical basis of P_{1,1}, as a matrix in that basis.
PMapProfile p_map_on_primitives(const HopfAlgebra& h);

/// Everything above in one JSON document.
nlohmann::json analysis_report(const HopfAlgebra& h, const GrouplikeGroup& G);

}  // namespace hopf
