// Exact arithmetic in finite fields F_q and F_{q^m} = F_q[t]/(f).
//
// Elements are stored as a packed index: the coefficient vector
// (c_0, ..., c_{m-1}) of c_0 + c_1 t + ... + c_{m-1} t^{m-1} read as a base-q
// number with c_0 the most significant digit.  Integer order on packed
// indices is therefore lexicographic order on coefficient vectors, which is
// the canonical scalar order used everywhere a deterministic choice is made.
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopf {

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A field element as a packed coefficient index.  Meaningful only together
/// with the Field it was produced by.
struct Scalar {
    std::uint32_t v = 0;

    friend constexpr bool operator==(Scalar, Scalar) = default;
    friend constexpr auto operator<=>(Scalar, Scalar) = default;
};

bool is_prime(std::uint64_t n);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    static constexpr std::uint32_t kMaxDegree = 4;
    static constexpr std::uint32_t kMaxSize = 1u << 16;

    /// Prime field F_q.
    static FieldPtr prime(std::uint32_t q);
    /// F_q[t]/(f) with f given low-to-high as m+1 coefficients, monic.
    /// For m == 1 the modulus may be left empty.
    static FieldPtr make(std::uint32_t q, std::uint32_t m, std::vector<std::uint32_t> modulus);

    std::uint32_t characteristic() const { return q_; }
    std::uint32_t degree() const { return m_; }
    std::uint32_t size() const { return size_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    bool is_prime_field() const { return m_ == 1; }

    Scalar zero() const { return {0}; }
    Scalar one() const { return {one_}; }
    /// Image of an integer in the prime subfield.
    Scalar from_int(std::int64_t c) const;
    Scalar from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(Scalar a) const;
    /// Element with packed index `index` (the index-th element in canonical order).
    Scalar nth(std::uint32_t index) const;
    bool contains(Scalar a) const { return a.v < size_; }

    Scalar add(Scalar a, Scalar b) const;
    Scalar sub(Scalar a, Scalar b) const;
    Scalar neg(Scalar a) const;
    Scalar mul(Scalar a, Scalar b) const;
    Scalar inv(Scalar a) const;
    Scalar div(Scalar a, Scalar b) const;
    Scalar pow(Scalar a, std::uint64_t e) const;

    /// dst[i] += a * src[i]
    void axpy(std::span<Scalar> dst, Scalar a, std::span<const Scalar> src) const;

    std::string to_string(Scalar a) const;

    /// Same characteristic, degree and modulus.
    bool same_as(const Field& other) const;

private:
    Field() = default;
    void build_tables();
    std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) const;

    std::uint32_t q_ = 2;
    std::uint32_t m_ = 1;
    std::uint32_t size_ = 2;
    std::uint32_t one_ = 1;
    std::vector<std::uint32_t> modulus_;
    // extension fields: discrete log / exp tables against a generator of F^x
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> inv_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// A scalar bundled with its field; arithmetic checks that fields agree.
class FieldElement {
public:
    FieldElement(FieldPtr field, Scalar value);
    FieldElement(FieldPtr field, std::int64_t value);

    const FieldPtr& field() const { return field_; }
    Scalar value() const { return value_; }
    std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;
    bool is_zero() const { return value_.v == 0; }

    bool operator==(const FieldElement& o) const;

private:
    const Field& checked(const FieldElement& o) const;

    FieldPtr field_;
    Scalar value_;
};

enum class ArithOp { add, sub, mul, div };

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// Multiplicative order of a nonzero element.
std::uint64_t multiplicative_order(const Field& field, Scalar a);

/// Smallest (canonical order) primitive p-th root of unity in the field.
Scalar primitive_root_of_unity(const Field& field, std::uint32_t p);

/// All primitive p-th roots of unity, in canonical order.
std::vector<Scalar> primitive_roots_of_unity(const Field& field, std::uint32_t p);

/// Smallest prime q with q = 1 (mod p).
std::uint32_t smallest_prime_congruent_one(std::uint32_t p);

}  // namespace hopf
