#include "hopf/hopf_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace hopf {

namespace {

struct Entry3 {
    std::size_t a, b;
    Scalar v;
};

// Nonzero entries of Delta(e_i) for each i.
std::vector<std::vector<Entry3>> sparse_comult(const HopfAlgebra& h)
{
    const std::size_t n = h.dim;
    std::vector<std::vector<Entry3>> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (const Scalar v = h.c(i, j, k); v.v) out[i].push_back({j, k, v});
    return out;
}

struct Entry1 {
    std::size_t k;
    Scalar v;
};

// Nonzero entries of e_i e_j, indexed i*n + j.
std::vector<std::vector<Entry1>> sparse_mult(const HopfAlgebra& h)
{
    const std::size_t n = h.dim;
    std::vector<std::vector<Entry1>> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (const Scalar v = h.m(i, j, k); v.v) out[i * n + j].push_back({k, v});
    return out;
}

void require_dim(const HopfAlgebra& h, std::size_t size, const char* what)
{
    if (size != h.dim) throw HopfError(std::string(what) + ": dimension mismatch");
}

void require_dim2(const HopfAlgebra& h, const Tensor2& t, const char* what)
{
    if (t.n != h.dim || t.coords.size() != h.dim * h.dim)
        throw HopfError(std::string(what) + ": tensor dimension mismatch");
}

std::string tuple_text(const std::vector<std::size_t>& t)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ')';
    return os.str();
}

}  // namespace

void HopfAlgebra::check_shape() const
{
    if (!field) throw HopfError("algebra has no field");
    if (dim == 0) throw HopfError("algebra dimension must be positive");
    const std::size_t n3 = dim * dim * dim;
    if (basis_labels.size() != dim) throw HopfError("basis_labels must have dim entries");
    if (mult.size() != n3) throw HopfError("mult must have dim^3 entries");
    if (comult.size() != n3) throw HopfError("comult must have dim^3 entries");
    if (unit.size() != dim) throw HopfError("unit must have dim entries");
    if (counit.size() != dim) throw HopfError("counit must have dim entries");
    auto in_field = [&](const Vec& v) {
        return std::all_of(v.begin(), v.end(), [&](Scalar s) { return field->contains(s); });
    };
    if (!in_field(mult) || !in_field(comult) || !in_field(unit) || !in_field(counit))
        throw HopfError("structure constant outside the field");
    if (antipode) {
        if (antipode->rows() != dim || antipode->cols() != dim) throw HopfError("antipode must be dim x dim");
        if (!same_field(antipode->field(), field)) throw HopfError("antipode over a different field");
    }
}

bool HopfAlgebra::operator==(const HopfAlgebra& o) const
{
    if (!same_field(field, o.field) || dim != o.dim || basis_labels != o.basis_labels || mult != o.mult ||
        unit != o.unit || comult != o.comult || counit != o.counit)
        return false;
    if (antipode.has_value() != o.antipode.has_value()) return false;
    return !antipode || *antipode == *o.antipode;
}

// ---- elements -----------------------------------------------------------------

Element zero_element(const HopfAlgebra& h) { return {Vec(h.dim, Scalar{0})}; }

Element one(const HopfAlgebra& h) { return {h.unit}; }

Element basis_element(const HopfAlgebra& h, std::size_t i)
{
    if (i >= h.dim) throw HopfError("basis index out of range");
    Element e = zero_element(h);
    e.coords[i] = h.field->one();
    return e;
}

Element add(const HopfAlgebra& h, const Element& a, const Element& b)
{
    require_dim(h, a.coords.size(), "add");
    require_dim(h, b.coords.size(), "add");
    Element out = a;
    h.field->axpy(out.coords, h.field->one(), b.coords);
    return out;
}

Element sub(const HopfAlgebra& h, const Element& a, const Element& b)
{
    require_dim(h, a.coords.size(), "sub");
    require_dim(h, b.coords.size(), "sub");
    Element out = a;
    h.field->axpy(out.coords, h.field->neg(h.field->one()), b.coords);
    return out;
}

Element scale(const HopfAlgebra& h, Scalar c, const Element& a)
{
    Element out = a;
    for (auto& s : out.coords) s = h.field->mul(c, s);
    return out;
}

bool is_zero(const Element& a)
{
    return std::all_of(a.coords.begin(), a.coords.end(), [](Scalar s) { return s.v == 0; });
}

Tensor2 zero_tensor(const HopfAlgebra& h) { return {h.dim, Vec(h.dim * h.dim, Scalar{0})}; }

Tensor2 tensor(const HopfAlgebra& h, const Element& a, const Element& b)
{
    require_dim(h, a.coords.size(), "tensor");
    require_dim(h, b.coords.size(), "tensor");
    return {h.dim, kron_vec(*h.field, a.coords, b.coords)};
}

Tensor2 add(const HopfAlgebra& h, const Tensor2& a, const Tensor2& b)
{
    require_dim2(h, a, "add");
    require_dim2(h, b, "add");
    Tensor2 out = a;
    h.field->axpy(out.coords, h.field->one(), b.coords);
    return out;
}

Tensor2 sub(const HopfAlgebra& h, const Tensor2& a, const Tensor2& b)
{
    require_dim2(h, a, "sub");
    require_dim2(h, b, "sub");
    Tensor2 out = a;
    h.field->axpy(out.coords, h.field->neg(h.field->one()), b.coords);
    return out;
}

Tensor2 scale(const HopfAlgebra& h, Scalar c, const Tensor2& a)
{
    Tensor2 out = a;
    for (auto& s : out.coords) s = h.field->mul(c, s);
    return out;
}

bool is_zero(const Tensor2& t)
{
    return std::all_of(t.coords.begin(), t.coords.end(), [](Scalar s) { return s.v == 0; });
}

Element multiply(const HopfAlgebra& h, const Element& a, const Element& b)
{
    require_dim(h, a.coords.size(), "multiply");
    require_dim(h, b.coords.size(), "multiply");
    const std::size_t n = h.dim;
    const Field& f = *h.field;
    Element out = zero_element(h);
    for (std::size_t i = 0; i < n; ++i) {
        if (!a.coords[i].v) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!b.coords[j].v) continue;
            const Scalar ab = f.mul(a.coords[i], b.coords[j]);
            f.axpy(out.coords, ab, std::span<const Scalar>(h.mult).subspan((i * n + j) * n, n));
        }
    }
    return out;
}

Tensor2 comultiply(const HopfAlgebra& h, const Element& a)
{
    require_dim(h, a.coords.size(), "comultiply");
    const std::size_t n = h.dim;
    Tensor2 out = zero_tensor(h);
    for (std::size_t i = 0; i < n; ++i)
        if (a.coords[i].v)
            h.field->axpy(out.coords, a.coords[i], std::span<const Scalar>(h.comult).subspan(i * n * n, n * n));
    return out;
}

Scalar counit(const HopfAlgebra& h, const Element& a)
{
    require_dim(h, a.coords.size(), "counit");
    Scalar acc{0};
    for (std::size_t i = 0; i < h.dim; ++i) acc = h.field->add(acc, h.field->mul(a.coords[i], h.counit[i]));
    return acc;
}

Element apply_antipode(const HopfAlgebra& h, const Element& a)
{
    if (!h.antipode) throw HopfError("algebra has no antipode");
    return {h.antipode->apply(a.coords)};
}

Tensor2 tensor2_multiply(const HopfAlgebra& h, const Tensor2& s, const Tensor2& t)
{
    require_dim2(h, s, "tensor2_multiply");
    require_dim2(h, t, "tensor2_multiply");
    const std::size_t n = h.dim;
    const Field& f = *h.field;
    Tensor2 out = zero_tensor(h);
    std::vector<Entry3> sn, tn;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (s.at(a, b).v) sn.push_back({a, b, s.at(a, b)});
            if (t.at(a, b).v) tn.push_back({a, b, t.at(a, b)});
        }
    const std::span<const Scalar> mult(h.mult);
    for (const auto& x : sn)
        for (const auto& y : tn) {
            const Scalar coef = f.mul(x.v, y.v);
            const auto left = mult.subspan((x.a * n + y.a) * n, n);
            const auto right = mult.subspan((x.b * n + y.b) * n, n);
            for (std::size_t k = 0; k < n; ++k) {
                if (!left[k].v) continue;
                const Scalar lk = f.mul(coef, left[k]);
                f.axpy(std::span<Scalar>(out.coords).subspan(k * n, n), lk, right);
            }
        }
    return out;
}

Element power(const HopfAlgebra& h, const Element& a, std::uint64_t k)
{
    Element acc = one(h);
    for (std::uint64_t i = 0; i < k; ++i) acc = multiply(h, acc, a);
    return acc;
}

Tensor2 one_tensor(const HopfAlgebra& h) { return tensor(h, one(h), one(h)); }

Tensor2 tensor2_power(const HopfAlgebra& h, const Tensor2& t, std::uint64_t k)
{
    Tensor2 acc = one_tensor(h);
    for (std::uint64_t i = 0; i < k; ++i) acc = tensor2_multiply(h, acc, t);
    return acc;
}

Matrix comult_matrix(const HopfAlgebra& h)
{
    const std::size_t n = h.dim;
    Matrix out(h.field, n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t jk = 0; jk < n * n; ++jk) out(jk, i) = h.comult[i * n * n + jk];
    return out;
}

Matrix left_mult_matrix(const HopfAlgebra& h, const Element& a)
{
    Matrix out(h.field, h.dim, h.dim);
    for (std::size_t c = 0; c < h.dim; ++c) {
        auto col = multiply(h, a, basis_element(h, c));
        for (std::size_t r = 0; r < h.dim; ++r) out(r, c) = col.coords[r];
    }
    return out;
}

Matrix right_mult_matrix(const HopfAlgebra& h, const Element& a)
{
    Matrix out(h.field, h.dim, h.dim);
    for (std::size_t c = 0; c < h.dim; ++c) {
        auto col = multiply(h, basis_element(h, c), a);
        for (std::size_t r = 0; r < h.dim; ++r) out(r, c) = col.coords[r];
    }
    return out;
}

std::string format_element(const HopfAlgebra& h, const Element& a)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (!a.coords[i].v) continue;
        os << (first ? "" : " + ") << h.field->to_string(a.coords[i]) << "*(" << h.basis_labels[i] << ')';
        first = false;
    }
    return first ? "0" : os.str();
}

// ---- axioms ---------------------------------------------------------------------

bool AxiomReport::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck& AxiomReport::get(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw HopfError("no axiom check named " + name);
}

bool AxiomReport::bialgebra_pass() const
{
    for (const auto& c : checks)
        if (c.name != "antipode" && !c.pass) return false;
    return true;
}

namespace {

AxiomCheck fail(std::string name, std::vector<std::size_t> tuple, const std::string& what)
{
    AxiomCheck c{std::move(name), false, std::move(tuple), {}};
    c.detail = what + " fails at basis tuple " + tuple_text(c.counterexample);
    return c;
}

AxiomCheck check_associativity(const HopfAlgebra& h, const std::vector<std::vector<Entry1>>& sm)
{
    const std::size_t n = h.dim;
    const Field& f = *h.field;
    Vec lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::fill(lhs.begin(), lhs.end(), Scalar{0});
                std::fill(rhs.begin(), rhs.end(), Scalar{0});
                for (const auto& [l, v] : sm[i * n + j])
                    for (const auto& [r, w] : sm[l * n + k]) lhs[r] = f.add(lhs[r], f.mul(v, w));
                for (const auto& [l, v] : sm[j * n + k])
                    for (const auto& [r, w] : sm[i * n + l]) rhs[r] = f.add(rhs[r], f.mul(v, w));
                if (lhs != rhs) return fail("associativity", {i, j, k}, "(e_i e_j) e_k = e_i (e_j e_k)");
            }
    return {"associativity", true, {}, "all basis triples"};
}

AxiomCheck check_unit(const HopfAlgebra& h)
{
    for (std::size_t i = 0; i < h.dim; ++i) {
        const Element e = basis_element(h, i);
        if (multiply(h, one(h), e) != e) return fail("unit", {i}, "1 e_i = e_i");
        if (multiply(h, e, one(h)) != e) return fail("unit", {i}, "e_i 1 = e_i");
    }
    return {"unit", true, {}, "all basis elements"};
}

AxiomCheck check_coassociativity(const HopfAlgebra& h, const std::vector<std::vector<Entry3>>& sc)
{
    const std::size_t n = h.dim;
    const Field& f = *h.field;
    Vec lhs(n * n * n), rhs(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(lhs.begin(), lhs.end(), Scalar{0});
        std::fill(rhs.begin(), rhs.end(), Scalar{0});
        for (const auto& [j, k, v] : sc[i]) {
            // (Delta (x) id): Delta(e_j) (x) e_k
            for (const auto& [a, b, w] : sc[j]) {
                auto& s = lhs[(a * n + b) * n + k];
                s = f.add(s, f.mul(v, w));
            }
            // (id (x) Delta): e_j (x) Delta(e_k)
            for (const auto& [b, c, w] : sc[k]) {
                auto& s = rhs[(j * n + b) * n + c];
                s = f.add(s, f.mul(v, w));
            }
        }
        for (std::size_t t = 0; t < lhs.size(); ++t)
            if (lhs[t] != rhs[t])
                return fail("coassociativity", {i, t / (n * n), (t / n) % n, t % n},
                            "(Delta (x) id) Delta(e_i) = (id (x) Delta) Delta(e_i)");
    }
    return {"coassociativity", true, {}, "all basis elements"};
}

AxiomCheck check_counit(const HopfAlgebra& h, const std::vector<std::vector<Entry3>>& sc)
{
    const std::size_t n = h.dim;
    const Field& f = *h.field;
    for (std::size_t i = 0; i < n; ++i) {
        Vec left(n, Scalar{0}), right(n, Scalar{0});
        for (const auto& [j, k, v] : sc[i]) {
            left[k] = f.add(left[k], f.mul(h.counit[j], v));
            right[j] = f.add(right[j], f.mul(v, h.counit[k]));
        }
        const Element e = basis_element(h, i);
        if (left != e.coords) return fail("counit", {i}, "(eps (x) id) Delta(e_i) = e_i");
        if (right != e.coords) return fail("counit", {i}, "(id (x) eps) Delta(e_i) = e_i");
    }
    return {"counit", true, {}, "all basis elements"};
}

AxiomCheck check_bialgebra(const HopfAlgebra& h, const std::vector<std::vector<Entry1>>& sm,
                           const std::vector<std::vector<Entry3>>& sc)
{
    const std::size_t n = h.dim;
    const Field& f = *h.field;
    if (comultiply(h, one(h)) != one_tensor(h)) return fail("bialgebra", {}, "Delta(1) = 1 (x) 1");
    if (counit(h, one(h)) != f.one()) return fail("bialgebra", {}, "eps(1) = 1");
    Vec lhs(n * n), rhs(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // eps multiplicative
            Scalar e_prod{0};
            for (const auto& [k, v] : sm[i * n + j]) e_prod = f.add(e_prod, f.mul(v, h.counit[k]));
            if (e_prod != f.mul(h.counit[i], h.counit[j]))
                return fail("bialgebra", {i, j}, "eps(e_i e_j) = eps(e_i) eps(e_j)");
            // Delta multiplicative
            std::fill(lhs.begin(), lhs.end(), Scalar{0});
            for (const auto& [k, v] : sm[i * n + j])
                for (const auto& [a, b, w] : sc[k]) {
                    auto& s = lhs[a * n + b];
                    s = f.add(s, f.mul(v, w));
                }
            std::fill(rhs.begin(), rhs.end(), Scalar{0});
            for (const auto& [a, b, v] : sc[i])
                for (const auto& [c, d, w] : sc[j]) {
                    const Scalar vw = f.mul(v, w);
                    for (const auto& [k, x] : sm[a * n + c]) {
                        const Scalar vwx = f.mul(vw, x);
                        for (const auto& [l, y] : sm[b * n + d]) {
                            auto& s = rhs[k * n + l];
                            s = f.add(s, f.mul(vwx, y));
                        }
                    }
                }
            if (lhs != rhs) return fail("bialgebra", {i, j}, "Delta(e_i e_j) = Delta(e_i) Delta(e_j)");
        }
    return {"bialgebra", true, {}, "Delta and eps are unital algebra maps on all basis pairs"};
}

AxiomCheck check_antipode(const HopfAlgebra& h, const std::vector<std::vector<Entry1>>& sm,
                          const std::vector<std::vector<Entry3>>& sc)
{
    if (!h.antipode) return {"antipode", false, {}, "no antipode present"};
    const std::size_t n = h.dim;
    const Field& f = *h.field;
    const Matrix& s = *h.antipode;
    for (std::size_t i = 0; i < n; ++i) {
        Vec left(n, Scalar{0}), right(n, Scalar{0});
        for (const auto& [j, k, v] : sc[i])
            for (std::size_t r = 0; r < n; ++r) {
                // S(e_j) e_k and e_j S(e_k)
                if (const Scalar sr = s(r, j); sr.v) {
                    const Scalar c = f.mul(v, sr);
                    for (const auto& [t, w] : sm[r * n + k]) left[t] = f.add(left[t], f.mul(c, w));
                }
                if (const Scalar sr = s(r, k); sr.v) {
                    const Scalar c = f.mul(v, sr);
                    for (const auto& [t, w] : sm[j * n + r]) right[t] = f.add(right[t], f.mul(c, w));
                }
            }
        Vec expect(n);
        for (std::size_t t = 0; t < n; ++t) expect[t] = f.mul(h.counit[i], h.unit[t]);
        if (left != expect) return fail("antipode", {i}, "m(S (x) id) Delta(e_i) = eps(e_i) 1");
        if (right != expect) return fail("antipode", {i}, "m(id (x) S) Delta(e_i) = eps(e_i) 1");
    }
    return {"antipode", true, {}, "both convolution identities on all basis elements"};
}

}  // namespace

AxiomReport verify_axioms(const HopfAlgebra& h)
{
    h.check_shape();
    const auto sm = sparse_mult(h);
    const auto sc = sparse_comult(h);
    AxiomReport r;
    r.checks.push_back(check_associativity(h, sm));
    r.checks.push_back(check_unit(h));
    r.checks.push_back(check_coassociativity(h, sc));
    r.checks.push_back(check_counit(h, sc));
    r.checks.push_back(check_bialgebra(h, sm, sc));
    r.checks.push_back(check_antipode(h, sm, sc));
    return r;
}

Matrix compute_antipode(const HopfAlgebra& h)
{
    h.check_shape();
    const std::size_t n = h.dim;
    const Field& f = *h.field;
    const auto sm = sparse_mult(h);
    const auto sc = sparse_comult(h);
    // Unknown (r, a): coefficient of e_r in S(e_a).  Equation (i, k): the e_k
    // coordinate of sum S(e_a) e_b over Delta(e_i) equals eps(e_i) u_k.
    const std::size_t unknowns = n * n;
    Matrix system(h.field, n * n, unknowns + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [a, b, v] : sc[i])
            for (std::size_t r = 0; r < n; ++r)
                for (const auto& [k, w] : sm[r * n + b]) {
                    auto& s = system(i * n + k, r * n + a);
                    s = f.add(s, f.mul(v, w));
                }
        for (std::size_t k = 0; k < n; ++k) system(i * n + k, unknowns) = f.mul(h.counit[i], h.unit[k]);
    }
    const auto red = rref(system);
    if (!red.pivots.empty() && red.pivots.back() == unknowns)
        throw HopfError("identity map not convolution-invertible (not a Hopf algebra)");
    if (red.rank < unknowns)
        throw HopfError("antipode system is underdetermined (" + std::to_string(unknowns - red.rank) +
                        " free parameters); degenerate input");
    Matrix s(h.field, n, n);
    for (std::size_t row = 0; row < unknowns; ++row) {
        const std::size_t col = red.pivots[row];
        s(col / n, col % n) = red.reduced(row, unknowns);
    }
    HopfAlgebra check = h;
    check.antipode = s;
    if (!verify_axioms(check).get("antipode").pass)
        throw HopfError("convolution inverse is one-sided only (not a Hopf algebra)");
    return s;
}

namespace {

std::string dual_label(const std::string& label)
{
    if (!label.empty() && label.back() == '*') return label.substr(0, label.size() - 1);
    return label + "*";
}

}  // namespace

HopfAlgebra dual(const HopfAlgebra& h)
{
    h.check_shape();
    const std::size_t n = h.dim;
    HopfAlgebra d;
    d.field = h.field;
    d.dim = n;
    for (const auto& l : h.basis_labels) d.basis_labels.push_back(dual_label(l));
    d.mult.resize(n * n * n);
    d.comult.resize(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                d.mult[(i * n + j) * n + k] = h.c(k, i, j);
                d.comult[(i * n + j) * n + k] = h.m(j, k, i);
            }
    d.unit = h.counit;
    d.counit = h.unit;
    if (h.antipode) d.antipode = h.antipode->transpose();
    return d;
}

HopfAlgebra permute_basis(const HopfAlgebra& h, const std::vector<std::size_t>& perm)
{
    h.check_shape();
    const std::size_t n = h.dim;
    if (perm.size() != n) throw HopfError("permutation length must equal dim");
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) throw HopfError("not a permutation");
        seen[p] = true;
    }
    HopfAlgebra out;
    out.field = h.field;
    out.dim = n;
    out.mult.resize(n * n * n);
    out.comult.resize(n * n * n);
    out.unit.resize(n);
    out.counit.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.basis_labels.push_back(h.basis_labels[perm[i]]);
        out.unit[i] = h.unit[perm[i]];
        out.counit[i] = h.counit[perm[i]];
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                out.mult[(i * n + j) * n + k] = h.m(perm[i], perm[j], perm[k]);
                out.comult[(i * n + j) * n + k] = h.c(perm[i], perm[j], perm[k]);
            }
    }
    if (h.antipode) {
        Matrix s(h.field, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) s(r, c) = (*h.antipode)(perm[r], perm[c]);
        out.antipode = s;
    }
    return out;
}

HopfAlgebra change_basis(const HopfAlgebra& h, const Matrix& change)
{
    h.check_shape();
    const std::size_t n = h.dim;
    if (change.rows() != n || change.cols() != n) throw HopfError("change of basis must be dim x dim");
    const auto inv = inverse(change);
    if (!inv) throw HopfError("change of basis is not invertible");
    HopfAlgebra out;
    out.field = h.field;
    out.dim = n;
    for (std::size_t i = 0; i < n; ++i) out.basis_labels.push_back("b" + std::to_string(i));
    std::vector<Element> nb;
    for (std::size_t i = 0; i < n; ++i) nb.push_back({change.column(i)});
    out.mult.resize(n * n * n);
    out.comult.resize(n * n * n);
    const Matrix inv2 = kronecker(*inv, *inv);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Vec prod = inv->apply(multiply(h, nb[i], nb[j]).coords);
            std::copy(prod.begin(), prod.end(), out.mult.begin() + (i * n + j) * n);
        }
        const Vec cop = inv2.apply(comultiply(h, nb[i]).coords);
        std::copy(cop.begin(), cop.end(), out.comult.begin() + i * n * n);
        out.counit.push_back(counit(h, nb[i]));
    }
    out.unit = inv->apply(h.unit);
    if (h.antipode) out.antipode = (*inv) * (*h.antipode) * change;
    return out;
}

}  // namespace hopf
