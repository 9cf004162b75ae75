#include "hopf/families.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace hopf {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 15> kNames{{
    {FamilyKind::GroupCp2, "group-cp2"},
    {FamilyKind::GroupCpxCp, "group-cpxcp"},
    {FamilyKind::Taft, "taft"},
    {FamilyKind::A1, "a1"},
    {FamilyKind::A2, "a2"},
    {FamilyKind::A3, "a3"},
    {FamilyKind::A4, "a4"},
    {FamilyKind::A5, "a5"},
    {FamilyKind::A6, "a6"},
    {FamilyKind::A7, "a7"},
    {FamilyKind::A8, "a8"},
    {FamilyKind::B1, "b1"},
    {FamilyKind::B2, "b2"},
    {FamilyKind::B3, "b3"},
    {FamilyKind::B4, "b4"},
}};

bool is_group_kind(FamilyKind k) { return k == FamilyKind::GroupCp2 || k == FamilyKind::GroupCpxCp; }

std::string repeat(char c, std::size_t n) { return std::string(n, c); }

}  // namespace

std::string_view family_name(FamilyKind kind)
{
    for (const auto& [k, name] : kNames)
        if (k == kind) return name;
    return "unknown";
}

std::optional<FamilyKind> parse_family(std::string_view name)
{
    for (const auto& [k, n] : kNames)
        if (n == name) return k;
    return std::nullopt;
}

const std::vector<FamilyKind>& char_p_kinds()
{
    static const std::vector<FamilyKind> kinds{
        FamilyKind::GroupCp2, FamilyKind::GroupCpxCp, FamilyKind::A1, FamilyKind::A2, FamilyKind::A3,
        FamilyKind::A4,       FamilyKind::A5,         FamilyKind::A6, FamilyKind::A7, FamilyKind::A8,
        FamilyKind::B1,       FamilyKind::B2,         FamilyKind::B3, FamilyKind::B4};
    return kinds;
}

bool is_connected_kind(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::A1: case FamilyKind::A2: case FamilyKind::A3: case FamilyKind::A4:
    case FamilyKind::A5: case FamilyKind::A6: case FamilyKind::A7: case FamilyKind::A8:
        return true;
    default:
        return false;
    }
}

FamilyId FamilyId::canonical(FamilyKind kind, std::uint32_t p)
{
    if (!is_prime(p)) throw FamilyError("p = " + std::to_string(p) + " is not prime");
    if (kind == FamilyKind::Taft) {
        auto field = Field::prime(smallest_prime_congruent_one(p));
        return taft(p, field, primitive_root_of_unity(*field, p));
    }
    FamilyId id{kind, p, Field::prime(p), std::nullopt};
    id.validate();
    return id;
}

FamilyId FamilyId::taft(std::uint32_t p, FieldPtr field, Scalar omega)
{
    FamilyId id{FamilyKind::Taft, p, std::move(field), omega};
    id.validate();
    return id;
}

FamilyId FamilyId::group(FamilyKind kind, std::uint32_t p, FieldPtr field)
{
    FamilyId id{kind, p, std::move(field), std::nullopt};
    id.validate();
    return id;
}

void FamilyId::validate() const
{
    if (!is_prime(p)) throw FamilyError("p = " + std::to_string(p) + " is not prime");
    if (!field) throw FamilyError("family needs a field");
    if (kind == FamilyKind::Taft) {
        if (field->characteristic() == p)
            throw FamilyError("taft requires field characteristic different from p");
        if (!omega) throw FamilyError("taft requires omega");
        if (!field->contains(*omega) || *omega == field->one() || field->pow(*omega, p) != field->one())
            throw FamilyError("omega = " + field->to_string(omega.value_or(Scalar{})) +
                              " is not a primitive " + std::to_string(p) + "-th root of unity");
        return;
    }
    if (omega) throw FamilyError("omega is only meaningful for taft");
    if (is_group_kind(kind)) return;
    if (field->characteristic() != p || field->degree() != 1)
        throw FamilyError(std::string(family_name(kind)) + " requires the prime field F_" + std::to_string(p));
}

// ---- rewriting ------------------------------------------------------------------

RewriteSystem::RewriteSystem(FieldPtr field, std::vector<RewriteRule> rules, std::vector<std::string> basis_words)
    : field_(std::move(field)), rules_(std::move(rules)), basis_words_(std::move(basis_words))
{
    for (std::size_t i = 0; i < basis_words_.size(); ++i) index_.emplace(basis_words_[i], i);
}

namespace {

struct Match {
    std::size_t rule;
    std::size_t pos;
};

std::vector<Match> all_matches(const std::vector<RewriteRule>& rules, const std::string& w)
{
    std::vector<Match> out;
    for (std::size_t r = 0; r < rules.size(); ++r)
        for (std::size_t pos = w.find(rules[r].lhs); pos != std::string::npos; pos = w.find(rules[r].lhs, pos + 1))
            out.push_back({r, pos});
    return out;
}

std::optional<Match> leftmost_match(const std::vector<RewriteRule>& rules, const std::string& w)
{
    std::optional<Match> best;
    for (std::size_t r = 0; r < rules.size(); ++r) {
        const auto pos = w.find(rules[r].lhs);
        if (pos != std::string::npos && (!best || pos < best->pos)) best = Match{r, pos};
    }
    return best;
}

void accumulate(const Field& f, WordComb& into, const std::string& w, Scalar c)
{
    if (!c.v) return;
    auto [it, inserted] = into.emplace(w, c);
    if (!inserted) {
        it->second = f.add(it->second, c);
        if (!it->second.v) into.erase(it);
    }
}

}  // namespace

WordComb RewriteSystem::reduce(WordComb input, ReductionOrder order, std::mt19937_64* rng) const
{
    const Field& f = *field_;
    if (order == ReductionOrder::random && !rng) throw FamilyError("random reduction needs a generator");
    WordComb pending = std::move(input);
    WordComb done;
    while (!pending.empty()) {
        auto it = pending.begin();
        if (order == ReductionOrder::random)
            std::advance(it, std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(*rng));
        const std::string word = it->first;
        const Scalar coef = it->second;
        pending.erase(it);
        std::optional<Match> m;
        if (order == ReductionOrder::leftmost) {
            m = leftmost_match(rules_, word);
        } else {
            const auto ms = all_matches(rules_, word);
            if (!ms.empty()) m = ms[std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(*rng)];
        }
        if (!m) {
            accumulate(f, done, word, coef);
            continue;
        }
        const auto& rule = rules_[m->rule];
        const std::string prefix = word.substr(0, m->pos);
        const std::string suffix = word.substr(m->pos + rule.lhs.size());
        for (const auto& [w, c] : rule.rhs) accumulate(f, pending, prefix + w + suffix, f.mul(coef, c));
    }
    return done;
}

Vec RewriteSystem::normal_form(std::string_view word, ReductionOrder order, std::mt19937_64* rng) const
{
    WordComb in;
    in.emplace(std::string(word), field_->one());
    const auto reduced = reduce(std::move(in), order, rng);
    Vec out(basis_words_.size(), Scalar{0});
    for (const auto& [w, c] : reduced) {
        auto it = index_.find(w);
        if (it == index_.end()) throw FamilyError("irreducible word '" + w + "' is not a basis monomial");
        out[it->second] = c;
    }
    return out;
}

std::vector<Scalar> divided_power_coefficients(std::uint32_t p)
{
    if (!is_prime(p)) throw FamilyError("p = " + std::to_string(p) + " is not prime");
    const auto field = Field::prime(p);
    std::vector<Scalar> out;
    // binom(p, i) built exactly by the multiplicative recurrence; fits 64 bits for p in scope
    unsigned __int128 binom = 1;
    for (std::uint32_t i = 1; i < p; ++i) {
        binom = binom * (p - i + 1) / i;
        out.push_back(field->from_int(static_cast<std::int64_t>((binom / p) % p)));
    }
    return out;
}

namespace {

// A presentation together with the coalgebra data on generators.
struct Presentation {
    std::vector<RewriteRule> rules;
    std::vector<std::string> basis_words;
    std::vector<std::string> labels;
    // Delta(generator) as (left word, right word, coefficient)
    std::map<char, std::vector<std::tuple<std::string, std::string, Scalar>>> delta;
    std::map<char, Scalar> eps;
    // S(generator); absent means the antipode is computed
    std::map<char, WordComb> antipode;
};

Presentation presentation(FamilyKind kind, std::uint32_t p, const Field& f, std::optional<Scalar> omega)
{
    Presentation pr;
    const Scalar one = f.one();
    const Scalar minus_one = f.neg(one);
    auto two_gen_basis = [&](char a, char b) {
        for (std::uint32_t i = 0; i < p; ++i)
            for (std::uint32_t j = 0; j < p; ++j) {
                pr.basis_words.push_back(repeat(a, i) + repeat(b, j));
                pr.labels.push_back(std::string(1, a) + "^" + std::to_string(i) + " " + std::string(1, b) + "^" +
                                    std::to_string(j));
            }
    };
    auto grouplike = [&](char g, std::uint32_t order) {
        pr.delta[g] = {{std::string(1, g), std::string(1, g), one}};
        pr.eps[g] = one;
        pr.antipode[g] = {{repeat(g, order - 1), one}};
        pr.rules.push_back({repeat(g, order), {{"", one}}});
    };
    auto primitive = [&](char x) {
        pr.delta[x] = {{std::string(1, x), "", one}, {"", std::string(1, x), one}};
        pr.eps[x] = f.zero();
        pr.antipode[x] = {{std::string(1, x), minus_one}};
    };
    // Delta(x) = x (x) 1 + g (x) x, S(x) = -g^{-1} x
    auto skew_primitive = [&](char x, char g) {
        pr.delta[x] = {{std::string(1, x), "", one}, {std::string(1, g), std::string(1, x), one}};
        pr.eps[x] = f.zero();
        pr.antipode[x] = {{repeat(g, p - 1) + x, minus_one}};
    };
    // x^p -> 0, x^p -> x, x^p -> y
    auto power_rule = [&](char x, std::optional<char> target) {
        RewriteRule r{repeat(x, p), {}};
        if (target) r.rhs.push_back({std::string(1, *target), one});
        pr.rules.push_back(std::move(r));
    };
    auto commute = [&](char later, char earlier) {
        pr.rules.push_back({std::string(1, later) + earlier, {{std::string(1, earlier) + later, one}}});
    };

    switch (kind) {
    case FamilyKind::GroupCp2:
        for (std::uint32_t i = 0; i < p * p; ++i) {
            pr.basis_words.push_back(repeat('g', i));
            pr.labels.push_back("g^" + std::to_string(i));
        }
        grouplike('g', p * p);
        break;
    case FamilyKind::GroupCpxCp:
        two_gen_basis('g', 'h');
        grouplike('g', p);
        grouplike('h', p);
        commute('h', 'g');
        break;
    case FamilyKind::Taft:
        two_gen_basis('g', 'x');
        grouplike('g', p);
        skew_primitive('x', 'g');
        // gx = w xg  =>  xg -> w^{-1} gx
        pr.rules.push_back({"xg", {{"gx", f.inv(*omega)}}});
        power_rule('x', std::nullopt);
        break;
    case FamilyKind::B1:
    case FamilyKind::B2:
    case FamilyKind::B3:
    case FamilyKind::B4:
        two_gen_basis('g', 'x');
        grouplike('g', p);
        if (kind == FamilyKind::B1 || kind == FamilyKind::B2)
            primitive('x');
        else
            skew_primitive('x', 'g');
        if (kind == FamilyKind::B4)
            // gx - xg = g(g - 1)  =>  xg -> gx - g^2 + g
            pr.rules.push_back({"xg", {{"gx", one}, {"gg", minus_one}, {"g", one}}});
        else
            commute('x', 'g');
        power_rule('x', (kind == FamilyKind::B2 || kind == FamilyKind::B4) ? std::optional<char>('x') : std::nullopt);
        break;
    default: {
        two_gen_basis('x', 'y');
        primitive('x');
        primitive('y');
        if (kind == FamilyKind::A5)
            // [x, y] = y  =>  yx -> xy - y
            pr.rules.push_back({"yx", {{"xy", one}, {"y", minus_one}}});
        else
            commute('y', 'x');
        std::optional<char> xt, yt;
        switch (kind) {
        case FamilyKind::A1: case FamilyKind::A6: break;
        case FamilyKind::A2: case FamilyKind::A5: xt = 'x'; break;
        case FamilyKind::A3: xt = 'y'; break;
        case FamilyKind::A4: case FamilyKind::A8: xt = 'x'; yt = 'y'; break;
        case FamilyKind::A7: yt = 'x'; break;
        default: break;
        }
        power_rule('x', xt);
        power_rule('y', yt);
        if (kind == FamilyKind::A6 || kind == FamilyKind::A7 || kind == FamilyKind::A8) {
            const auto coeffs = divided_power_coefficients(p);
            for (std::uint32_t i = 1; i < p; ++i)
                pr.delta['y'].emplace_back(repeat('x', i), repeat('x', p - i), f.from_int(coeffs[i - 1].v));
            pr.antipode.erase('y');
        }
        break;
    }
    }
    return pr;
}

HopfAlgebra assemble(const Presentation& pr, const FieldPtr& field, bool want_antipode)
{
    const Field& f = *field;
    const RewriteSystem rs(field, pr.rules, pr.basis_words);
    const std::size_t n = pr.basis_words.size();

    HopfAlgebra h;
    h.field = field;
    h.dim = n;
    h.basis_labels = pr.labels;
    // right multiplication by each generator, then e_i e_j = (..(e_i a_1) a_2 ..) a_m
    std::map<char, Matrix> right;
    for (const auto& w : pr.basis_words)
        for (char a : w)
            if (!right.count(a)) {
                std::vector<Vec> cols;
                for (const auto& u : pr.basis_words) cols.push_back(rs.normal_form(u + a));
                right.emplace(a, Matrix::from_columns(field, n, cols));
            }
    h.mult.assign(n * n * n, Scalar{0});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod(n, Scalar{0});
            prod[i] = f.one();
            for (char a : pr.basis_words[j]) prod = right.at(a).apply(prod);
            std::copy(prod.begin(), prod.end(), h.mult.begin() + (i * n + j) * n);
        }
    // the normal monomials must be independent
    {
        std::vector<Vec> rows;
        for (const auto& w : pr.basis_words) rows.push_back(rs.normal_form(w));
        if (rank(Matrix::from_rows(field, n, rows)) != n) throw FamilyError("normal-form basis is degenerate");
    }
    h.unit = rs.normal_form("");

    auto elem = [&](const std::string& w) { return Element{rs.normal_form(w)}; };
    std::map<char, Tensor2> gen_delta;
    for (const auto& [g, terms] : pr.delta) {
        Tensor2 t = zero_tensor(h);
        for (const auto& [l, r, c] : terms) t = add(h, t, scale(h, c, tensor(h, elem(l), elem(r))));
        gen_delta.emplace(g, std::move(t));
    }
    std::vector<Tensor2> delta(n);
    h.counit.assign(n, Scalar{0});
    // basis words are closed under dropping the last letter
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(pr.basis_words[i], i);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& w = pr.basis_words[i];
        if (w.empty()) {
            delta[i] = one_tensor(h);
            h.counit[i] = f.one();
            continue;
        }
        const std::size_t prev = index.at(w.substr(0, w.size() - 1));
        delta[i] = tensor2_multiply(h, delta[prev], gen_delta.at(w.back()));
        h.counit[i] = f.mul(h.counit[prev], pr.eps.at(w.back()));
    }
    h.comult.assign(n * n * n, Scalar{0});
    for (std::size_t i = 0; i < n; ++i) std::copy(delta[i].coords.begin(), delta[i].coords.end(), h.comult.begin() + i * n * n);

    if (!want_antipode) return h;
    const bool closed_form = std::all_of(pr.delta.begin(), pr.delta.end(),
                                         [&](const auto& kv) { return pr.antipode.count(kv.first) > 0; });
    if (!closed_form) {
        h.antipode = compute_antipode(h);
        return h;
    }
    std::map<char, Element> gen_s;
    for (const auto& [g, comb] : pr.antipode) {
        Element e = zero_element(h);
        for (const auto& [w, c] : comb) e = add(h, e, scale(h, c, elem(w)));
        gen_s.emplace(g, std::move(e));
    }
    // S is an anti-homomorphism: S(w a) = S(a) S(w)
    std::vector<Element> s(n);
    Matrix sm(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& w = pr.basis_words[i];
        if (w.empty())
            s[i] = one(h);
        else
            s[i] = multiply(h, gen_s.at(w.back()), s[index.at(w.substr(0, w.size() - 1))]);
        for (std::size_t r = 0; r < n; ++r) sm(r, i) = s[i].coords[r];
    }
    h.antipode = std::move(sm);
    return h;
}

}  // namespace

RewriteSystem rewrite_system(const FamilyId& id)
{
    id.validate();
    auto pr = presentation(id.kind, id.p, *id.field, id.omega);
    return RewriteSystem(id.field, std::move(pr.rules), std::move(pr.basis_words));
}

Element rewrite_to_normal_form(const FamilyId& id, std::string_view word)
{
    return {rewrite_system(id).normal_form(word)};
}

Element rewrite_to_normal_form(const FamilyId& id, std::string_view word, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return {rewrite_system(id).normal_form(word, ReductionOrder::random, &rng)};
}

HopfAlgebra build(const FamilyId& id)
{
    id.validate();
    return assemble(presentation(id.kind, id.p, *id.field, id.omega), id.field, true);
}

HopfAlgebra build_taft_unchecked(std::uint32_t p, FieldPtr field, Scalar omega)
{
    if (!is_prime(p)) throw FamilyError("p = " + std::to_string(p) + " is not prime");
    if (!omega.v) throw FamilyError("omega must be nonzero");
    return assemble(presentation(FamilyKind::Taft, p, *field, omega), field, false);
}

std::vector<Element> presented_grouplikes(const FamilyId& id)
{
    const RewriteSystem rs = rewrite_system(id);
    std::vector<Element> out;
    const std::uint32_t p = id.p;
    switch (id.kind) {
    case FamilyKind::GroupCp2:
        for (std::uint32_t i = 0; i < p * p; ++i) out.push_back({rs.normal_form(repeat('g', i))});
        break;
    case FamilyKind::GroupCpxCp:
        for (std::uint32_t i = 0; i < p; ++i)
            for (std::uint32_t j = 0; j < p; ++j) out.push_back({rs.normal_form(repeat('g', i) + repeat('h', j))});
        break;
    default:
        if (is_connected_kind(id.kind)) {
            out.push_back({rs.normal_form("")});
        } else {
            for (std::uint32_t i = 0; i < p; ++i) out.push_back({rs.normal_form(repeat('g', i))});
        }
        break;
    }
    return out;
}

}  // namespace hopf
