// The classified p^2-dimensional pointed Hopf algebras, built from their
// presentations by normal-form rewriting.
//
//   group-cp2    k[C_{p^2}]                     basis g^i, i < p^2
//   group-cpxcp  k[C_p x C_p]                   basis g^i h^j
//   taft         <g,x | g^p=1, x^p=0, gx=w xg>  basis g^i x^j, Delta(x) = x(x)1 + g(x)x
//   a1..a8       connected, generators x, y     basis x^i y^j
//   b1..b4       generators g, x                basis g^i x^j
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/hopf_algebra.hpp"

namespace hopf {

class FamilyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FamilyKind { GroupCp2, GroupCpxCp, Taft, A1, A2, A3, A4, A5, A6, A7, A8, B1, B2, B3, B4 };

std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> parse_family(std::string_view name);
/// The fourteen types over a field of characteristic p.
const std::vector<FamilyKind>& char_p_kinds();
bool is_connected_kind(FamilyKind kind);

struct FamilyId {
    FamilyKind kind = FamilyKind::GroupCp2;
    std::uint32_t p = 2;
    FieldPtr field;
    std::optional<Scalar> omega;  // Taft only

    /// Default instance: F_p for group algebras and A/B types; for Taft the
    /// smallest prime q = 1 (mod p) with the canonical primitive p-th root.
    static FamilyId canonical(FamilyKind kind, std::uint32_t p);
    static FamilyId taft(std::uint32_t p, FieldPtr field, Scalar omega);
    static FamilyId group(FamilyKind kind, std::uint32_t p, FieldPtr field);

    /// Throws FamilyError when the parameters violate the family's constraints.
    void validate() const;
    std::string name() const { return std::string(family_name(kind)); }
};

/// Linear combination of words over the generator alphabet.
using WordComb = std::map<std::string, Scalar>;

struct RewriteRule {
    std::string lhs;
    std::vector<std::pair<std::string, Scalar>> rhs;
};

enum class ReductionOrder { leftmost, random };

class RewriteSystem {
public:
    RewriteSystem(FieldPtr field, std::vector<RewriteRule> rules, std::vector<std::string> basis_words);

    const FieldPtr& field() const { return field_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const std::vector<std::string>& basis_words() const { return basis_words_; }

    /// Rewrite until no rule applies.  `random` picks the term and the match
    /// position uniformly at random at every step.
    WordComb reduce(WordComb input, ReductionOrder order = ReductionOrder::leftmost,
                    std::mt19937_64* rng = nullptr) const;
    /// Reduce and express in basis-word coordinates.
    Vec normal_form(std::string_view word, ReductionOrder order = ReductionOrder::leftmost,
                    std::mt19937_64* rng = nullptr) const;

private:
    FieldPtr field_;
    std::vector<RewriteRule> rules_;
    std::vector<std::string> basis_words_;
    std::map<std::string, std::size_t> index_;
};

RewriteSystem rewrite_system(const FamilyId& id);

Element rewrite_to_normal_form(const FamilyId& id, std::string_view word);
Element rewrite_to_normal_form(const FamilyId& id, std::string_view word, std::uint64_t seed);

/// Coefficients binom(p, i) / p mod p for 0 < i < p.
std::vector<Scalar> divided_power_coefficients(std::uint32_t p);

HopfAlgebra build(const FamilyId& id);
/// Taft presentation with an arbitrary nonzero w; no validation, no antipode.
/// Only for negative controls.
HopfAlgebra build_taft_unchecked(std::uint32_t p, FieldPtr field, Scalar omega);

/// Grouplikes known from the presentation (powers of g, and of h).
std::vector<Element> presented_grouplikes(const FamilyId& id);

}  // namespace hopf
