#include <doctest.h>

#include <random>

#include "hopf/families.hpp"

using namespace hopf;

namespace {

Element nf(const FamilyId& id, const std::string& w) { return rewrite_to_normal_form(id, w); }

std::vector<FamilyId> all_ids(std::uint32_t p)
{
    std::vector<FamilyId> out;
    for (auto k : char_p_kinds()) out.push_back(FamilyId::canonical(k, p));
    out.push_back(FamilyId::canonical(FamilyKind::Taft, p));
    return out;
}

// binom(p, i) / p mod p from exact integer binomials
std::int64_t divided_binomial(std::int64_t p, std::int64_t i)
{
    std::int64_t b = 1;
    for (std::int64_t k = 1; k <= i; ++k) b = b * (p - k + 1) / k;
    return (b / p) % p;
}

}  // namespace

TEST_CASE("names")
{
    CHECK(family_name(FamilyKind::B4) == "b4");
    CHECK(parse_family("a7") == FamilyKind::A7);
    CHECK_FALSE(parse_family("c9").has_value());
    CHECK(char_p_kinds().size() == 14);
}

TEST_CASE("divided power coefficients")
{
    CHECK(divided_power_coefficients(2) == std::vector<Scalar>{Scalar{1}});
    CHECK(divided_power_coefficients(3) == std::vector<Scalar>{Scalar{1}, Scalar{1}});
    CHECK(divided_power_coefficients(5) == std::vector<Scalar>{Scalar{1}, Scalar{2}, Scalar{2}, Scalar{1}});
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        auto F = Field::prime(p);
        const auto c = divided_power_coefficients(p);
        for (std::uint32_t i = 1; i < p; ++i) {
            CHECK(c[i - 1] == F->from_int(divided_binomial(p, i)));
            // (-1)^{i-1} / i
            const Scalar expect = F->mul(F->from_int(i % 2 ? 1 : -1), F->inv(F->from_int(i)));
            CHECK(c[i - 1] == expect);
        }
    }
}

TEST_CASE("rewriting examples")
{
    const auto b4 = FamilyId::canonical(FamilyKind::B4, 3);
    CHECK(nf(b4, "xg") == sub(build(b4), add(build(b4), nf(b4, "gx"), nf(b4, "g")), nf(b4, "gg")));
    const auto a5 = FamilyId::canonical(FamilyKind::A5, 3);
    const HopfAlgebra h5 = build(a5);
    CHECK(nf(a5, "yx") == sub(h5, nf(a5, "xy"), nf(a5, "y")));
    CHECK(nf(a5, "") == one(h5));
    CHECK(nf(a5, "xxx") == nf(a5, "x"));

    const auto b4_2 = FamilyId::canonical(FamilyKind::B4, 2);
    const HopfAlgebra h = build(b4_2);
    // gx - xg = 1 + g in characteristic 2 (g^2 = 1)
    CHECK(sub(h, nf(b4_2, "gx"), nf(b4_2, "xg")) == add(h, one(h), nf(b4_2, "g")));
    CHECK(nf(FamilyId::canonical(FamilyKind::A3, 3), "xxx") == nf(FamilyId::canonical(FamilyKind::A3, 3), "y"));
    CHECK_THROWS_AS(nf(b4, "xz"), FamilyError);
}

TEST_CASE("relations hold in the built algebras")
{
    for (std::uint32_t p : {2u, 3u, 5u})
        for (const auto& id : all_ids(p)) {
            const HopfAlgebra h = build(id);
            const auto rs = rewrite_system(id);
            for (const auto& rule : rs.rules()) {
                // multiply out lhs letter by letter and compare with rhs
                Element lhs = one(h);
                for (char c : rule.lhs) lhs = multiply(h, lhs, nf(id, std::string(1, c)));
                Element rhs = zero_element(h);
                for (const auto& [w, c] : rule.rhs) {
                    Element t = one(h);
                    for (char a : w) t = multiply(h, t, nf(id, std::string(1, a)));
                    rhs = add(h, rhs, scale(h, c, t));
                }
                CHECK_MESSAGE(lhs == rhs, id.name(), " p=", p, " rule ", rule.lhs);
            }
        }
}

TEST_CASE("generator coproducts")
{
    for (std::uint32_t p : {2u, 3u})
        for (const auto& id : all_ids(p)) {
            const HopfAlgebra h = build(id);
            const Element one_ = one(h);
            if (is_connected_kind(id.kind)) {
                const Element x = nf(id, "x"), y = nf(id, "y");
                CHECK(comultiply(h, x) == add(h, tensor(h, x, one_), tensor(h, one_, x)));
                Tensor2 dy = add(h, tensor(h, y, one_), tensor(h, one_, y));
                if (id.kind == FamilyKind::A6 || id.kind == FamilyKind::A7 || id.kind == FamilyKind::A8) {
                    const auto c = divided_power_coefficients(p);
                    for (std::uint32_t i = 1; i < p; ++i)
                        dy = add(h, dy, scale(h, c[i - 1], tensor(h, power(h, x, i), power(h, x, p - i))));
                }
                CHECK(comultiply(h, y) == dy);
            } else if (id.kind == FamilyKind::GroupCp2 || id.kind == FamilyKind::GroupCpxCp) {
                const Element g = nf(id, "g");
                CHECK(comultiply(h, g) == tensor(h, g, g));
            } else {
                const Element g = nf(id, "g"), x = nf(id, "x");
                CHECK(comultiply(h, g) == tensor(h, g, g));
                const Element left = (id.kind == FamilyKind::B1 || id.kind == FamilyKind::B2) ? one_ : g;
                CHECK(comultiply(h, x) == add(h, tensor(h, x, one_), tensor(h, left, x)));
            }
        }
}

TEST_CASE("reduction is confluent under random strategies")
{
    std::mt19937 rng(2024);
    for (auto kind : {FamilyKind::Taft, FamilyKind::A5, FamilyKind::B4, FamilyKind::GroupCpxCp}) {
        const auto id = FamilyId::canonical(kind, 3);
        const auto rs = rewrite_system(id);
        std::string alphabet;
        for (const auto& w : rs.basis_words())
            for (char c : w)
                if (alphabet.find(c) == std::string::npos) alphabet += c;
        std::uniform_int_distribution<std::size_t> len(0, 9), letter(0, alphabet.size() - 1);
        for (int t = 0; t < 100; ++t) {
            std::string w;
            for (std::size_t i = len(rng); i > 0; --i) w += alphabet[letter(rng)];
            const Element base = nf(id, w);
            CHECK(rewrite_to_normal_form(id, w, 17 + t) == base);
            CHECK(rewrite_to_normal_form(id, w, 1000 + t) == base);
        }
    }
}

TEST_CASE("parameter validation")
{
    auto F7 = Field::prime(7);
    CHECK_THROWS_AS(FamilyId::taft(3, F7, F7->one()), FamilyError);
    CHECK_THROWS_AS(FamilyId::taft(3, F7, F7->from_int(3)), FamilyError);  // order 6
    CHECK_THROWS_AS(FamilyId::taft(3, Field::prime(5), Scalar{2}), FamilyError);
    FamilyId bad = FamilyId::canonical(FamilyKind::B1, 3);
    bad.field = F7;
    CHECK_THROWS_AS(bad.validate(), FamilyError);
    CHECK_THROWS_AS(FamilyId::canonical(FamilyKind::A1, 4), FamilyError);
    CHECK_NOTHROW(build_taft_unchecked(3, F7, F7->one()));
}

TEST_CASE("presented grouplikes")
{
    CHECK(presented_grouplikes(FamilyId::canonical(FamilyKind::GroupCp2, 3)).size() == 9);
    CHECK(presented_grouplikes(FamilyId::canonical(FamilyKind::B3, 5)).size() == 5);
    CHECK(presented_grouplikes(FamilyId::canonical(FamilyKind::A2, 5)).size() == 1);
}
