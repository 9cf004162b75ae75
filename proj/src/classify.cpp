#include "hopf/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace hopf {

using nlohmann::json;

namespace {

template <class T>
json opt(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::string cell(const std::optional<T>& v)
{
    if (!v) return "-";
    std::ostringstream os;
    if constexpr (std::is_same_v<T, bool>)
        os << (*v ? "yes" : "no");
    else
        os << *v;
    return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string field_key(std::uint32_t p, const Field& f)
{
    std::string k = std::to_string(p) + ":" + std::to_string(f.characteristic()) + "^" + std::to_string(f.degree());
    for (auto c : f.modulus()) k += "," + std::to_string(c);
    return k;
}

std::optional<std::uint32_t> root_exponent(const Field& f, std::uint32_t p, Scalar value)
{
    const Scalar zeta = primitive_root_of_unity(f, p);
    Scalar cur = f.one();
    for (std::uint32_t e = 0; e < p; ++e) {
        if (cur == value) return e;
        cur = f.mul(cur, zeta);
    }
    return std::nullopt;
}

}  // namespace

json Fingerprint::to_json() const
{
    return {{"dim", dim},
            {"field_char", field_char},
            {"n_grouplikes", n_grouplikes},
            {"grouplike_exponent", grouplike_exponent},
            {"commutative", commutative},
            {"cocommutative", cocommutative},
            {"antipode_order", antipode_order},
            {"dim_P11", dim_P11},
            {"skew_quotient_dims", skew_quotient_dims},
            {"frobenius_image_dim", opt(frobenius_image_dim)},
            {"p_map_rank", opt(p_map_rank)},
            {"p_map_nilpotent", opt(p_map_nilpotent)},
            {"conj_character_kind", opt(conj_character_kind)},
            {"omega_exponent", opt(omega_exponent)}};
}

Fingerprint fingerprint(const HopfAlgebra& h) { return fingerprint(h, grouplikes_eigen(h)); }

Fingerprint fingerprint(const HopfAlgebra& h, const GrouplikeGroup& G)
{
    const Field& f = *h.field;
    Fingerprint fp;
    fp.dim = h.dim;
    fp.field_char = f.characteristic();
    fp.n_grouplikes = G.size();
    fp.grouplike_exponent = G.exponent();
    const auto fl = structure_flags(h);
    fp.commutative = fl.commutative;
    fp.cocommutative = fl.cocommutative;
    fp.antipode_order = antipode_order(h);

    const Subspace H0 = grouplike_span(h, G);
    for (std::size_t a = 0; a < G.size(); ++a)
        for (std::size_t b = 0; b < G.size(); ++b) {
            const std::size_t q = quotient_dim(skew_primitives(h, G.elements[a], G.elements[b]), H0);
            fp.skew_quotient_dims.push_back(q);
            if (q == 0 || a == b || !G.is_abelian()) continue;
            const auto w = canonical_witness(h, G, G.elements[a], G.elements[b]);
            if (!w) continue;
            const auto chi = conjugation_character(h, G, G.elements[a], G.elements[b], *w);
            if (chi.kind == CharacterKind::additive) {
                fp.conj_character_kind = "additive";
                continue;
            }
            fp.conj_character_kind = "multiplicative";
            // the pair (g, h) is (g, g t); evaluate at t
            const std::size_t t = G.table[G.inverse(a)][b];
            const std::uint32_t p = static_cast<std::uint32_t>(G.order(t));
            if (!is_prime(p) || (f.size() - 1) % p != 0) continue;
            const auto e = root_exponent(f, p, chi.values[t]);
            if (e && (!fp.omega_exponent || *e < *fp.omega_exponent)) fp.omega_exponent = e;
        }
    std::sort(fp.skew_quotient_dims.begin(), fp.skew_quotient_dims.end());
    fp.dim_P11 = skew_primitives(h, one(h), one(h)).dim();

    if (f.is_prime_field() && fl.commutative) fp.frobenius_image_dim = frobenius_profile(h).image_dim;
    if (fp.dim_P11 > 0 && f.is_prime_field()) {
        const auto pm = p_map_on_primitives(h);
        fp.p_map_rank = pm.rank;
        fp.p_map_nilpotent = pm.nilpotent;
    }
    return fp;
}

std::string entry_name(const FamilyId& id)
{
    if (id.kind == FamilyKind::Taft && id.omega) return "taft(omega=" + id.field->to_string(*id.omega) + ")";
    return id.name();
}

const std::vector<CalibrationEntry>& calibration(std::uint32_t p, const FieldPtr& field)
{
    static std::mutex mu;
    static std::map<std::string, std::vector<CalibrationEntry>> cache;
    const std::string key = field_key(p, *field);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    if (!is_prime(p)) throw ClassifyError("p = " + std::to_string(p) + " is not prime");
    std::vector<FamilyId> ids;
    if (field->characteristic() == p) {
        if (!field->is_prime_field()) throw ClassifyError("characteristic-p calibration needs the prime field F_p");
        for (auto k : char_p_kinds()) ids.push_back(FamilyId::canonical(k, p));
    } else {
        ids.push_back(FamilyId::group(FamilyKind::GroupCp2, p, field));
        ids.push_back(FamilyId::group(FamilyKind::GroupCpxCp, p, field));
        if ((field->size() - 1) % p == 0)
            for (Scalar w : primitive_roots_of_unity(*field, p)) ids.push_back(FamilyId::taft(p, field, w));
    }
    std::vector<CalibrationEntry> cal;
    for (const auto& id : ids) {
        const HopfAlgebra h = build(id);
        cal.push_back({id, fingerprint(h)});
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(cal)).first->second;
}

void assert_distinct(const std::vector<CalibrationEntry>& cal)
{
    for (std::size_t i = 0; i < cal.size(); ++i)
        for (std::size_t j = i + 1; j < cal.size(); ++j)
            if (cal[i].fp == cal[j].fp)
                throw ClassifyError("calibration collision: " + entry_name(cal[i].id) + " and " + entry_name(cal[j].id) +
                                    " share a fingerprint");
}

std::size_t distinct_count(const std::vector<CalibrationEntry>& cal)
{
    std::vector<const Fingerprint*> seen;
    for (const auto& e : cal)
        if (std::none_of(seen.begin(), seen.end(), [&](const Fingerprint* f) { return *f == e.fp; }))
            seen.push_back(&e.fp);
    return seen.size();
}

json TypeVerdict::to_json() const
{
    json out;
    out["matched"] = matched ? std::string(family_name(matched->kind)) : std::string("unknown");
    if (matched && matched->omega) out["omega"] = matched->field->to_string(*matched->omega);
    out["fingerprint"] = fp.to_json();
    out["calibration_distinct"] = calibration_distinct;
    json cal = json::array();
    for (const auto& e : calibration) cal.push_back(entry_name(e.id));
    out["calibration"] = cal;
    out["method"] = "invariant fingerprint match against the calibrated classified types; "
                    "a match is not an isomorphism certificate and relies on the input being a pointed "
                    "Hopf algebra of dimension p^2";
    return out;
}

TypeVerdict classify(const HopfAlgebra& h, std::uint32_t p)
{
    if (!is_prime(p)) throw ClassifyError("p = " + std::to_string(p) + " is not prime");
    if (h.dim != static_cast<std::size_t>(p) * p)
        throw ClassifyError("dimension " + std::to_string(h.dim) + " is not p^2 = " + std::to_string(p * p));
    const AxiomReport ax = verify_axioms(h);
    for (const auto& c : ax.checks)
        if (!c.pass) {
            std::string tuple;
            for (auto i : c.counterexample) tuple += (tuple.empty() ? "" : ",") + std::to_string(i);
            throw ClassifyError("input fails the " + c.name + " axiom at basis tuple (" + tuple + ")");
        }
    TypeVerdict v;
    v.calibration = calibration(p, h.field);
    assert_distinct(v.calibration);
    v.calibration_distinct = true;
    v.fp = fingerprint(h);
    for (const auto& e : v.calibration)
        if (e.fp == v.fp) v.matched = e.id;
    return v;
}

ReportTable report_table(std::uint32_t p, CharMode mode)
{
    FieldPtr field;
    if (mode.taft_q) {
        if (!is_prime(*mode.taft_q)) throw ClassifyError("q = " + std::to_string(*mode.taft_q) + " is not prime");
        if (*mode.taft_q == p) throw ClassifyError("taft mode needs q different from p");
        field = Field::prime(*mode.taft_q);
    } else {
        if (!is_prime(p)) throw ClassifyError("p = " + std::to_string(p) + " is not prime");
        field = Field::prime(p);
    }
    ReportTable t;
    t.p = p;
    t.rows = calibration(p, field);
    t.classes = distinct_count(t.rows);
    t.distinct = t.classes == t.rows.size();
    return t;
}

std::string ReportTable::to_markdown() const
{
    std::ostringstream os;
    os << "| type | dim | char | grouplikes | exponent | commutative | cocommutative | antipode order | dim P11 "
          "| skew quotients | frobenius image | p-map rank | p-map nilpotent | character | omega exponent |\n";
    os << "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
        const Fingerprint& f = r.fp;
        // multiset as count*value
        std::map<std::size_t, std::size_t> counts;
        for (auto q : f.skew_quotient_dims) ++counts[q];
        std::string sq;
        for (auto [q, c] : counts) sq += (sq.empty() ? "" : " ") + std::to_string(c) + "*" + std::to_string(q);
        os << "| " << entry_name(r.id) << " | " << f.dim << " | " << f.field_char << " | " << f.n_grouplikes << " | "
           << f.grouplike_exponent << " | " << yes_no(f.commutative) << " | " << yes_no(f.cocommutative) << " | "
           << f.antipode_order << " | " << f.dim_P11 << " | " << sq << " | " << cell(f.frobenius_image_dim) << " | "
           << cell(f.p_map_rank) << " | " << cell(f.p_map_nilpotent) << " | " << cell(f.conj_character_kind) << " | "
           << cell(f.omega_exponent) << " |\n";
    }
    os << "\n" << rows.size() << " rows, " << classes << " distinct fingerprints"
       << (distinct ? "" : " (CALIBRATION COLLISION)") << "\n";
    return os.str();
}

json ReportTable::to_json() const
{
    json out;
    out["p"] = p;
    json rs = json::array();
    for (const auto& r : rows) rs.push_back({{"type", entry_name(r.id)}, {"fingerprint", r.fp.to_json()}});
    out["rows"] = rs;
    out["distinct"] = distinct;
    out["classes"] = classes;
    return out;
}

}  // namespace hopf
