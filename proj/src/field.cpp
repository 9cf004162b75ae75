#include "hopf/field.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace hopf {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::vector<std::uint32_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint32_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(static_cast<std::uint32_t>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

// Polynomials over F_q, low-to-high, trimmed of leading zeros.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t q)
{
    std::int64_t t = 0, nt = 1, r = q, nr = a;
    while (nr != 0) {
        std::int64_t quo = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - quo * nt);
        std::tie(r, nr) = std::make_pair(nr, r - quo * nr);
    }
    if (t < 0) t += q;
    return static_cast<std::uint32_t>(t);
}

Poly poly_rem(Poly a, const Poly& d, std::uint32_t q)
{
    trim(a);
    const std::uint32_t lead_inv = inv_mod(d.back(), q);
    while (a.size() >= d.size()) {
        const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % q;
        const std::size_t shift = a.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) {
            const std::uint64_t sub = c * d[i] % q;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + q - sub) % q);
        }
        trim(a);
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint32_t q)
{
    const std::size_t m = f.size() - 1;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        // enumerate monic polynomials of degree d
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= q;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            g[d] = 1;
            std::uint64_t rest = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(rest % q);
                rest /= q;
            }
            if (poly_rem(f, g, q).empty()) return false;
        }
    }
    return true;
}

}  // namespace

FieldPtr Field::prime(std::uint32_t q) { return make(q, 1, {}); }

FieldPtr Field::make(std::uint32_t q, std::uint32_t m, std::vector<std::uint32_t> modulus)
{
    if (!is_prime(q)) throw FieldError("characteristic " + std::to_string(q) + " is not prime");
    if (m == 0) throw FieldError("field degree must be positive");
    if (m > kMaxDegree)
        throw FieldError("field degree " + std::to_string(m) + " exceeds supported maximum " +
                         std::to_string(kMaxDegree));
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < m; ++i) size *= q;
    if (size > kMaxSize) throw FieldError("field of size " + std::to_string(size) + " is too large");

    if (m == 1 && modulus.empty()) modulus = {0, 1};
    if (modulus.size() != m + 1)
        throw FieldError("modulus must have degree+1 = " + std::to_string(m + 1) + " coefficients");
    for (auto c : modulus)
        if (c >= q) throw FieldError("modulus coefficient " + std::to_string(c) + " not reduced mod q");
    if (modulus.back() != 1) throw FieldError("modulus must be monic");
    if (m > 1 && !is_irreducible(modulus, q)) throw FieldError("modulus is reducible over F_q");

    auto f = std::shared_ptr<Field>(new Field());
    f->q_ = q;
    f->m_ = m;
    f->size_ = static_cast<std::uint32_t>(size);
    f->modulus_ = std::move(modulus);
    f->one_ = static_cast<std::uint32_t>(size / q);
    f->build_tables();
    return f;
}

std::vector<std::uint32_t> Field::coeffs(Scalar a) const
{
    std::vector<std::uint32_t> c(m_);
    std::uint32_t v = a.v;
    for (std::uint32_t i = m_; i-- > 0;) {
        c[i] = v % q_;
        v /= q_;
    }
    return c;
}

Scalar Field::from_coeffs(std::span<const std::uint32_t> c) const
{
    if (c.size() != m_)
        throw FieldError("scalar needs " + std::to_string(m_) + " coefficients, got " +
                         std::to_string(c.size()));
    std::uint32_t v = 0;
    for (auto x : c) {
        if (x >= q_) throw FieldError("scalar coefficient " + std::to_string(x) + " not reduced mod q");
        v = v * q_ + x;
    }
    return {v};
}

Scalar Field::from_int(std::int64_t c) const
{
    std::int64_t r = c % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    return {static_cast<std::uint32_t>(r) * one_};
}

Scalar Field::nth(std::uint32_t index) const
{
    if (index >= size_) throw FieldError("element index out of range");
    return {index};
}

std::vector<std::uint32_t> Field::poly_mulmod(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) const
{
    Poly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % q_);
    Poly r = poly_rem(prod, modulus_, q_);
    r.resize(m_, 0);
    return r;
}

void Field::build_tables()
{
    inv_.assign(size_, 0);
    if (m_ == 1) {
        for (std::uint32_t a = 1; a < q_; ++a) inv_[a] = inv_mod(a, q_);
        return;
    }
    const std::uint64_t order = size_ - 1;
    const auto factors = prime_factors(order);
    auto poly_pow = [&](Poly base, std::uint64_t e) {
        Poly acc(m_, 0);
        acc[0] = 1;
        while (e) {
            if (e & 1) acc = poly_mulmod(acc, base);
            base = poly_mulmod(base, base);
            e >>= 1;
        }
        return acc;
    };
    Poly one_poly(m_, 0);
    one_poly[0] = 1;
    Poly gen;
    for (std::uint32_t v = 1; v < size_; ++v) {
        Poly cand = coeffs({v});
        bool ok = true;
        for (auto r : factors)
            if (poly_pow(cand, order / r) == one_poly) {
                ok = false;
                break;
            }
        if (ok) {
            gen = std::move(cand);
            break;
        }
    }
    exp_.assign(order, 0);
    log_.assign(size_, 0);
    Poly cur = one_poly;
    for (std::uint64_t k = 0; k < order; ++k) {
        const std::uint32_t packed = from_coeffs(cur).v;
        exp_[k] = packed;
        log_[packed] = static_cast<std::uint32_t>(k);
        cur = poly_mulmod(cur, gen);
    }
    for (std::uint32_t v = 1; v < size_; ++v)
        inv_[v] = exp_[(order - log_[v]) % order];
}

Scalar Field::add(Scalar a, Scalar b) const
{
    if (m_ == 1) return {(a.v + b.v) % q_};
    std::uint32_t out = 0, scale = 1, x = a.v, y = b.v;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((x % q_ + y % q_) % q_) * scale;
        x /= q_;
        y /= q_;
        scale *= q_;
    }
    return {out};
}

Scalar Field::neg(Scalar a) const
{
    if (m_ == 1) return {a.v == 0 ? 0 : q_ - a.v};
    std::uint32_t out = 0, scale = 1, x = a.v;
    for (std::uint32_t i = 0; i < m_; ++i) {
        const std::uint32_t d = x % q_;
        out += (d == 0 ? 0 : q_ - d) * scale;
        x /= q_;
        scale *= q_;
    }
    return {out};
}

Scalar Field::sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

Scalar Field::mul(Scalar a, Scalar b) const
{
    if (m_ == 1) return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % q_)};
    if (a.v == 0 || b.v == 0) return {0};
    const std::uint32_t order = size_ - 1;
    return {exp_[(log_[a.v] + log_[b.v]) % order]};
}

Scalar Field::inv(Scalar a) const
{
    if (a.v == 0) throw FieldError("division by zero");
    return {inv_[a.v]};
}

Scalar Field::div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

Scalar Field::pow(Scalar a, std::uint64_t e) const
{
    Scalar acc = one();
    while (e) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

void Field::axpy(std::span<Scalar> dst, Scalar a, std::span<const Scalar> src) const
{
    if (a.v == 0) return;
    const std::size_t n = std::min(dst.size(), src.size());
    if (m_ == 1) {
        const std::uint64_t q = q_, av = a.v;
        for (std::size_t i = 0; i < n; ++i)
            if (src[i].v) dst[i].v = static_cast<std::uint32_t>((dst[i].v + av * src[i].v) % q);
        return;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (src[i].v) dst[i] = add(dst[i], mul(a, src[i]));
}

std::string Field::to_string(Scalar a) const
{
    if (m_ == 1) return std::to_string(a.v);
    std::ostringstream os;
    os << '[';
    auto c = coeffs(a);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
}

bool Field::same_as(const Field& other) const
{
    return q_ == other.q_ && m_ == other.m_ && modulus_ == other.modulus_;
}

bool same_field(const FieldPtr& a, const FieldPtr& b)
{
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_as(*b);
}

FieldElement::FieldElement(FieldPtr field, Scalar value) : field_(std::move(field)), value_(value)
{
    if (!field_) throw FieldError("null field");
    if (!field_->contains(value_)) throw FieldError("scalar out of range for field");
}

FieldElement::FieldElement(FieldPtr field, std::int64_t value)
    : FieldElement(field, field->from_int(value))
{
}

const Field& FieldElement::checked(const FieldElement& o) const
{
    if (!same_field(field_, o.field_)) throw FieldError("operands belong to different fields");
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const
{
    return {field_, checked(o).add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const
{
    return {field_, checked(o).sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const
{
    return {field_, checked(o).mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const
{
    return {field_, checked(o).div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const
{
    return same_field(field_, o.field_) && value_ == o.value_;
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw FieldError("unknown arithmetic op");
}

std::uint64_t multiplicative_order(const Field& field, Scalar a)
{
    if (a.v == 0) throw FieldError("zero has no multiplicative order");
    std::uint64_t k = 1;
    for (Scalar cur = a; cur != field.one(); cur = field.mul(cur, a)) ++k;
    return k;
}

std::vector<Scalar> primitive_roots_of_unity(const Field& field, std::uint32_t p)
{
    if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
    if (p == field.characteristic())
        throw FieldError("no p-th root in characteristic p other than 1");
    if ((field.size() - 1) % p != 0)
        throw FieldError("a primitive " + std::to_string(p) + "-th root of unity requires p | q^m - 1 (q^m = " +
                         std::to_string(field.size()) + ")");
    std::vector<Scalar> out;
    for (std::uint32_t v = 1; v < field.size(); ++v) {
        const Scalar z{v};
        // p prime: order exactly p iff z^p = 1 and z != 1
        if (z != field.one() && field.pow(z, p) == field.one()) out.push_back(z);
    }
    return out;
}

Scalar primitive_root_of_unity(const Field& field, std::uint32_t p)
{
    return primitive_roots_of_unity(field, p).front();
}

std::uint32_t smallest_prime_congruent_one(std::uint32_t p)
{
    for (std::uint32_t q = p + 1;; q += 1)
        if (q % p == 1 && is_prime(q)) return q;
}

}  // namespace hopf
