#include <doctest.h>

#include <cstdlib>

#include "hopf/analysis.hpp"
#include "hopf/families.hpp"

using namespace hopf;

namespace {

Element nf(const FamilyId& id, const std::string& w) { return rewrite_to_normal_form(id, w); }

// explicit (n choose i)_w = prod (1 - w^{n-k}) / (1 - w^{k+1}) over k < i, when defined
Scalar direct_binomial(const Field& f, std::uint64_t n, std::uint64_t i, Scalar w)
{
    Scalar num = f.one(), den = f.one();
    for (std::uint64_t k = 0; k < i; ++k) {
        num = f.mul(num, f.sub(f.one(), f.pow(w, n - k)));
        den = f.mul(den, f.sub(f.one(), f.pow(w, k + 1)));
    }
    return f.div(num, den);
}

}  // namespace

TEST_CASE("grouplikes: eigen search agrees with brute force")
{
    for (std::uint32_t p : {2u, 3u}) {
        for (auto kind : char_p_kinds()) {
            const HopfAlgebra h = build(FamilyId::canonical(kind, p));
            if (p == 3 && h.field->size() > 3) continue;
            const auto fast = grouplikes_eigen(h);
            if (p == 2) {
                const auto slow = grouplikes_bruteforce(h);
                CHECK(fast.elements == slow.elements);
            }
            for (const auto& g : fast.elements) CHECK(is_grouplike(h, g));
            CHECK(h.dim % fast.size() == 0);
        }
    }
    const HopfAlgebra c = build(FamilyId::canonical(FamilyKind::GroupCpxCp, 2));
    const auto G = grouplikes_bruteforce(c);
    CHECK(G.size() == 4);
    CHECK(G.exponent() == 2);
    CHECK(G.is_abelian());
    CHECK(G.completeness == Completeness::complete);
    CHECK(grouplikes_eigen(build(FamilyId::canonical(FamilyKind::A1, 3))).size() == 1);
    CHECK(grouplikes_eigen(build(FamilyId::canonical(FamilyKind::GroupCp2, 3))).exponent() == 9);
}

TEST_CASE("grouplike cap and verify mode")
{
    const auto id = FamilyId::canonical(FamilyKind::B4, 3);
    const HopfAlgebra h = build(id);
    CHECK_THROWS_WITH_AS(grouplikes_bruteforce(h, 1000), doctest::Contains("exceeds cap 1000"), AnalysisError);
    const auto v = grouplikes_verify(h, presented_grouplikes(id), 1000);
    CHECK(v.size() == 3);
    CHECK(v.completeness == Completeness::unchecked);
    CHECK(grouplikes_verify(h, presented_grouplikes(id)).completeness == Completeness::complete);
}

TEST_CASE("skew-primitives")
{
    auto F3 = Field::prime(3);
    const auto taft = FamilyId::taft(2, F3, F3->from_int(2));
    const HopfAlgebra t = build(taft);
    const Element g = nf(taft, "g"), x = nf(taft, "x");
    const Subspace P = skew_primitives(t, one(t), g);
    CHECK(P.dim() == 2);
    CHECK(P.contains(x.coords));
    CHECK(P.contains(sub(t, one(t), g).coords));
    CHECK(skew_primitives(t, one(t), one(t)).dim() == 0);

    const auto b1 = FamilyId::canonical(FamilyKind::B1, 3);
    const HopfAlgebra h1 = build(b1);
    const Subspace P11 = skew_primitives(h1, one(h1), one(h1));
    CHECK(P11.dim() == 1);
    CHECK(P11.contains(nf(b1, "x").coords));

    // g - h is always (g, h)-primitive
    const HopfAlgebra c = build(FamilyId::canonical(FamilyKind::GroupCpxCp, 3));
    const auto G = grouplikes_eigen(c);
    for (std::size_t a = 0; a < G.size(); ++a)
        for (std::size_t b = 0; b < G.size(); ++b)
            CHECK(skew_primitives(c, G.elements[a], G.elements[b]).contains(sub(c, G.elements[b], G.elements[a]).coords));

    CHECK_THROWS_AS(skew_primitives(t, x, one(t)), AnalysisError);
}

TEST_CASE("quantum binomials")
{
    auto F7 = Field::prime(7);
    const Scalar w = F7->from_int(2);
    CHECK(quantum_binomial(*F7, 2, 1, w) == F7->from_int(3));  // 1 + w
    CHECK(quantum_binomial(*F7, 5, 0, w) == F7->one());
    CHECK(quantum_binomial(*F7, 3, 1, w).v == 0);  // 1 + w + w^2
    CHECK(quantum_binomial(*F7, 3, 2, w).v == 0);
    CHECK(quantum_binomial(*F7, 2, 3, w).v == 0);
    for (std::uint64_t n = 0; n < 6; ++n)
        for (std::uint64_t i = 0; i <= n; ++i) {
            const auto fac = quantum_binomial_factorial(*F7, n, i, w);
            if (fac) CHECK(*fac == quantum_binomial(*F7, n, i, w));
            if (n < 3) CHECK(direct_binomial(*F7, n, i, w) == quantum_binomial(*F7, n, i, w));
        }
    // w = 1 recovers ordinary binomials
    auto F11 = Field::prime(11);
    CHECK(quantum_binomial(*F11, 5, 2, F11->one()) == F11->from_int(10));
}

TEST_CASE("ad powers")
{
    const auto b4 = FamilyId::canonical(FamilyKind::B4, 3);
    const HopfAlgebra h = build(b4);
    const Element g = nf(b4, "g"), x = nf(b4, "x");
    CHECK(ad_power(h, x, g, 0) == g);
    // ad x (g) = xg - gx = g - g^2
    CHECK(ad_power(h, x, g, 1) == sub(h, g, nf(b4, "gg")));
    CHECK(ad_power(h, x, g, 2) == sub(h, g, one(h)));
    CHECK(is_zero(ad_power(h, x, x, 1)));
}

TEST_CASE("antipode order and structure flags")
{
    auto F2 = Field::prime(2);
    const HopfAlgebra c = build(FamilyId::group(FamilyKind::GroupCpxCp, 2, F2));
    CHECK(antipode_order(c) == 1);
    CHECK(antipode_order(build(FamilyId::canonical(FamilyKind::GroupCp2, 3))) == 2);
    CHECK(antipode_order(build(FamilyId::canonical(FamilyKind::Taft, 3))) == 6);
    CHECK(antipode_order(build(FamilyId::canonical(FamilyKind::B4, 5))) == 10);
    CHECK_THROWS_WITH_AS(antipode_order(build(FamilyId::canonical(FamilyKind::Taft, 3)), 4),
                         doctest::Contains("order exceeds cap 4"), AnalysisError);

    const auto fl_taft = structure_flags(build(FamilyId::canonical(FamilyKind::Taft, 2)));
    CHECK_FALSE(fl_taft.commutative);
    CHECK_FALSE(fl_taft.cocommutative);
    const auto fl_a1 = structure_flags(build(FamilyId::canonical(FamilyKind::A1, 3)));
    CHECK(fl_a1.commutative);
    CHECK(fl_a1.cocommutative);
    const auto fl_a6 = structure_flags(build(FamilyId::canonical(FamilyKind::A6, 3)));
    CHECK(fl_a6.commutative);
    CHECK(fl_a6.cocommutative);
}

TEST_CASE("Frobenius and p-map profiles")
{
    CHECK(frobenius_profile(build(FamilyId::canonical(FamilyKind::A6, 3))).image_dim == 1);
    CHECK(frobenius_profile(build(FamilyId::canonical(FamilyKind::A7, 3))).image_dim == 3);
    CHECK(frobenius_profile(build(FamilyId::canonical(FamilyKind::A8, 3))).image_dim == 9);
    CHECK_THROWS_AS(frobenius_profile(build(FamilyId::canonical(FamilyKind::Taft, 2))), AnalysisError);
    CHECK_THROWS_AS(frobenius_profile(build(FamilyId::canonical(FamilyKind::A5, 3))), AnalysisError);

    CHECK(p_map_on_primitives(build(FamilyId::canonical(FamilyKind::A1, 3))).rank == 0);
    const auto a2 = p_map_on_primitives(build(FamilyId::canonical(FamilyKind::A2, 3)));
    CHECK(a2.rank == 1);
    CHECK_FALSE(a2.nilpotent);
    const auto a3 = p_map_on_primitives(build(FamilyId::canonical(FamilyKind::A3, 3)));
    CHECK(a3.rank == 1);
    CHECK(a3.nilpotent);
    CHECK(p_map_on_primitives(build(FamilyId::canonical(FamilyKind::A4, 3))).rank == 2);
    CHECK_FALSE(p_map_on_primitives(build(FamilyId::canonical(FamilyKind::A5, 3))).abelian);
}

TEST_CASE("conjugation characters")
{
    const auto b4 = FamilyId::canonical(FamilyKind::B4, 3);
    const HopfAlgebra h = build(b4);
    const auto G = grouplikes_eigen(h);
    const Element g = nf(b4, "g"), x = nf(b4, "x");
    const auto chi = conjugation_character(h, G, one(h), g, x);
    CHECK(chi.kind == CharacterKind::additive);
    CHECK(chi.values[*G.find(g)] == h.field->one());
    CHECK(character_law_holds(h, G, chi));
    CHECK_THROWS_WITH_AS(conjugation_character(h, G, one(h), one(h), x), doctest::Contains("not (g,h)-primitive"),
                         AnalysisError);

    const auto taft = FamilyId::canonical(FamilyKind::Taft, 3);
    const HopfAlgebra t = build(taft);
    const auto GT = grouplikes_eigen(t);
    const auto chit = conjugation_character(t, GT, one(t), nf(taft, "g"), nf(taft, "x"));
    CHECK(chit.kind == CharacterKind::multiplicative);
    CHECK(chit.values[*GT.find(nf(taft, "g"))] == *taft.omega);
    CHECK(character_law_holds(t, GT, chit));
    const auto w = canonical_witness(t, GT, one(t), nf(taft, "g"));
    REQUIRE(w.has_value());
    CHECK(w->coords == nf(taft, "x").coords);

    const HopfAlgebra c = build(FamilyId::canonical(FamilyKind::GroupCpxCp, 2));
    const auto GC = grouplikes_eigen(c);
    CHECK_FALSE(canonical_witness(c, GC, GC.elements[0], GC.elements[1]).has_value());
}

TEST_CASE("filtrations")
{
    const HopfAlgebra t = build(FamilyId::canonical(FamilyKind::Taft, 3));
    const auto G = grouplikes_eigen(t);
    const auto F = coradical_filtration(t, grouplike_span(t, G));
    CHECK(F.dims == std::vector<std::size_t>{3, 6, 9});
    CHECK(filtration_coalgebra_check(t, F).pass);
    CHECK(taft_wilson_check(t, G, F).pass);

    const HopfAlgebra a = build(FamilyId::canonical(FamilyKind::A4, 2));
    const auto FA = coradical_filtration(a, grouplike_span(a, grouplikes_eigen(a)));
    CHECK(FA.dims.front() == 1);
    CHECK(FA.dims.back() == 4);

    const HopfAlgebra c = build(FamilyId::canonical(FamilyKind::GroupCp2, 2));
    CHECK(coradical_filtration(c, grouplike_span(c, grouplikes_eigen(c))).dims == std::vector<std::size_t>{4});

    // a proper subspace of the coradical is rejected
    const Subspace too_small = Subspace::span(t.field, t.dim, {one(t).coords});
    CHECK_THROWS_AS(coradical_filtration(t, too_small), AnalysisError);
}

TEST_CASE("p-power identities")
{
    const auto taft = FamilyId::canonical(FamilyKind::Taft, 3);
    const HopfAlgebra t = build(taft);
    CHECK(frobenius_binomial_identity(t, nf(taft, "g"), nf(taft, "x"), 3).pass);
    for (std::uint32_t p : {2u, 3u, 5u}) CHECK(adjoint_matrix_identity(p).pass);
    const auto b4 = FamilyId::canonical(FamilyKind::B4, 3);
    CHECK(delta_xp_identity(build(b4), nf(b4, "g"), nf(b4, "x"), 3).pass);
    const auto m = adjoint_matrices(3);
    CHECK(m.P * m.P_inv == Matrix::identity(m.P.field(), 3));
}

TEST_CASE("report JSON")
{
    const HopfAlgebra h = build(FamilyId::canonical(FamilyKind::B3, 2));
    const auto j = analysis_report(h, grouplikes_eigen(h));
    CHECK(j["grouplikes"]["count"] == 2);
    CHECK(j["dim_P11"] == 0);
    CHECK(j["filtration_dims"] == nlohmann::json::array({2, 4}));
}

TEST_CASE("brute force over F_7^9 agrees with the eigen search")
{
    const HopfAlgebra t = build(FamilyId::canonical(FamilyKind::Taft, 3));
    const auto slow = grouplikes_bruteforce(t);
    CHECK(slow.size() == 3);
    CHECK(slow.elements == grouplikes_eigen(t).elements);
}
