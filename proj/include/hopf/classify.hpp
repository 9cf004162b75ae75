// Invariant fingerprints and matching against the classified types of
// dimension p^2.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopf/analysis.hpp"
#include "hopf/families.hpp"

namespace hopf {

class ClassifyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Fingerprint {
    std::size_t dim = 0;
    std::uint32_t field_char = 0;
    std::size_t n_grouplikes = 0;
    std::size_t grouplike_exponent = 0;
    bool commutative = false;
    bool cocommutative = false;
    std::size_t antipode_order = 0;
    std::size_t dim_P11 = 0;
    std::vector<std::size_t> skew_quotient_dims;  // sorted over all grouplike pairs
    std::optional<std::size_t> frobenius_image_dim;
    std::optional<std::size_t> p_map_rank;
    std::optional<bool> p_map_nilpotent;
    std::optional<std::string> conj_character_kind;
    /// chi_x(t) = zeta^e for the canonical primitive root zeta, where x is the
    /// witness of P_{1,t}; smallest e over contributing pairs.
    std::optional<std::uint32_t> omega_exponent;

    bool operator==(const Fingerprint&) const = default;
    nlohmann::json to_json() const;
};

Fingerprint fingerprint(const HopfAlgebra& h);
Fingerprint fingerprint(const HopfAlgebra& h, const GrouplikeGroup& G);

struct CalibrationEntry {
    FamilyId id;
    Fingerprint fp;
};

/// Canonical types for dimension p^2 over `field`: the fourteen types when
/// char = p, otherwise the two group algebras and one Taft algebra per
/// primitive p-th root of unity in the field.  Cached per (p, field).
const std::vector<CalibrationEntry>& calibration(std::uint32_t p, const FieldPtr& field);
/// Throws ClassifyError naming the first colliding pair.
void assert_distinct(const std::vector<CalibrationEntry>& cal);
std::size_t distinct_count(const std::vector<CalibrationEntry>& cal);

struct TypeVerdict {
    std::optional<FamilyId> matched;
    Fingerprint fp;
    std::vector<CalibrationEntry> calibration;
    bool calibration_distinct = true;

    nlohmann::json to_json() const;
};

TypeVerdict classify(const HopfAlgebra& h, std::uint32_t p);

std::string entry_name(const FamilyId& id);

struct CharMode {
    /// nullopt: characteristic p over F_p; otherwise the Taft field F_q.
    std::optional<std::uint32_t> taft_q;
};

struct ReportTable {
    std::uint32_t p = 0;
    std::vector<CalibrationEntry> rows;
    bool distinct = true;
    std::size_t classes = 0;

    std::string to_markdown() const;
    nlohmann::json to_json() const;
};

ReportTable report_table(std::uint32_t p, CharMode mode);

}  // namespace hopf
