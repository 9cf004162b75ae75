#include "hopf/io.hpp"

#include <algorithm>

namespace hopf {

using nlohmann::json;

namespace {

const json& member(const json& j, const char* key, const std::string& path)
{
    if (!j.is_object()) throw IoError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw IoError(path + ": missing field '" + key + "'");
    return *it;
}

std::uint64_t as_uint(const json& j, const std::string& path)
{
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
        throw IoError(path + ": expected a non-negative integer");
    return j.get<std::uint64_t>();
}

Scalar scalar_at(const Field& f, const json& j, const std::string& path)
{
    try {
        return scalar_from_json(f, j);
    } catch (const IoError& e) {
        throw IoError(path + ": " + e.what());
    }
}

const json& array_of(const json& j, std::size_t len, const std::string& path)
{
    if (!j.is_array()) throw IoError(path + ": expected an array");
    if (j.size() != len)
        throw IoError(path + ": expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
    return j;
}

std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Vec read_tensor3(const Field& f, const json& j, std::size_t n, const std::string& path)
{
    Vec out(n * n * n);
    array_of(j, n, path);
    for (std::size_t a = 0; a < n; ++a) {
        array_of(j[a], n, idx(path, a));
        for (std::size_t b = 0; b < n; ++b) {
            array_of(j[a][b], n, idx(idx(path, a), b));
            for (std::size_t c = 0; c < n; ++c)
                out[(a * n + b) * n + c] = scalar_at(f, j[a][b][c], idx(idx(idx(path, a), b), c));
        }
    }
    return out;
}

json write_tensor3(const Field& f, const Vec& t, std::size_t n)
{
    json out = json::array();
    for (std::size_t a = 0; a < n; ++a) {
        json plane = json::array();
        for (std::size_t b = 0; b < n; ++b) {
            json row = json::array();
            for (std::size_t c = 0; c < n; ++c) row.push_back(scalar_to_json(f, t[(a * n + b) * n + c]));
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

}  // namespace

json field_to_json(const Field& f)
{
    return {{"char", f.characteristic()}, {"degree", f.degree()}, {"modulus", f.modulus()}};
}

FieldPtr field_from_json(const json& j)
{
    const auto q = as_uint(member(j, "char", "field"), "field.char");
    std::uint64_t m = 1;
    if (j.contains("degree")) m = as_uint(j["degree"], "field.degree");
    std::vector<std::uint32_t> modulus;
    if (j.contains("modulus") && !j["modulus"].is_null()) {
        const auto& mj = j["modulus"];
        if (!mj.is_array()) throw IoError("field.modulus: expected an array");
        for (std::size_t i = 0; i < mj.size(); ++i)
            modulus.push_back(static_cast<std::uint32_t>(as_uint(mj[i], idx("field.modulus", i))));
    }
    if (q > Field::kMaxSize || m > Field::kMaxDegree) throw IoError("field: parameters out of range");
    try {
        return Field::make(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(m), std::move(modulus));
    } catch (const FieldError& e) {
        throw IoError(std::string("field: ") + e.what());
    }
}

json scalar_to_json(const Field& f, Scalar s)
{
    if (f.degree() == 1) return s.v;
    return f.coeffs(s);
}

Scalar scalar_from_json(const Field& f, const json& j)
{
    if (j.is_number_integer()) {
        if (f.degree() != 1) throw IoError("bare integer scalar requires a prime field");
        const auto v = j.get<std::int64_t>();
        if (v < 0 || static_cast<std::uint64_t>(v) >= f.characteristic())
            throw IoError("scalar " + std::to_string(v) + " not reduced mod " + std::to_string(f.characteristic()));
        return f.from_int(v);
    }
    if (!j.is_array()) throw IoError("scalar must be an integer or a coefficient list");
    std::vector<std::uint32_t> c;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0) throw IoError("scalar coefficient must be a non-negative integer");
        c.push_back(static_cast<std::uint32_t>(x.get<std::uint64_t>()));
    }
    try {
        return f.from_coeffs(c);
    } catch (const FieldError& e) {
        throw IoError(e.what());
    }
}

json algebra_to_json(const HopfAlgebra& h)
{
    h.check_shape();
    const Field& f = *h.field;
    const std::size_t n = h.dim;
    json out;
    out["field"] = field_to_json(f);
    out["dim"] = n;
    out["basis_labels"] = h.basis_labels;
    out["mult"] = write_tensor3(f, h.mult, n);
    json unit = json::array(), counit = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        unit.push_back(scalar_to_json(f, h.unit[i]));
        counit.push_back(scalar_to_json(f, h.counit[i]));
    }
    out["unit"] = std::move(unit);
    out["comult"] = write_tensor3(f, h.comult, n);
    out["counit"] = std::move(counit);
    if (h.antipode) {
        json s = json::array();
        for (std::size_t r = 0; r < n; ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < n; ++c) row.push_back(scalar_to_json(f, (*h.antipode)(r, c)));
            s.push_back(std::move(row));
        }
        out["antipode"] = std::move(s);
    } else {
        out["antipode"] = nullptr;
    }
    return out;
}

HopfAlgebra algebra_from_json(const json& j)
{
    if (!j.is_object()) throw IoError("algebra: expected a JSON object");
    HopfAlgebra h;
    h.field = field_from_json(member(j, "field", "algebra"));
    const Field& f = *h.field;
    const auto n = as_uint(member(j, "dim", "algebra"), "dim");
    if (n == 0 || n > 64) throw IoError("dim: must be in [1, 64]");
    h.dim = n;
    const auto& labels = array_of(member(j, "basis_labels", "algebra"), n, "basis_labels");
    for (std::size_t i = 0; i < n; ++i) {
        if (!labels[i].is_string()) throw IoError(idx("basis_labels", i) + ": expected a string");
        h.basis_labels.push_back(labels[i].get<std::string>());
    }
    h.mult = read_tensor3(f, member(j, "mult", "algebra"), n, "mult");
    h.comult = read_tensor3(f, member(j, "comult", "algebra"), n, "comult");
    const auto& unit = array_of(member(j, "unit", "algebra"), n, "unit");
    const auto& counit = array_of(member(j, "counit", "algebra"), n, "counit");
    for (std::size_t i = 0; i < n; ++i) {
        h.unit.push_back(scalar_at(f, unit[i], idx("unit", i)));
        h.counit.push_back(scalar_at(f, counit[i], idx("counit", i)));
    }
    if (j.contains("antipode") && !j["antipode"].is_null()) {
        const auto& s = array_of(j["antipode"], n, "antipode");
        Matrix m(h.field, n, n);
        for (std::size_t r = 0; r < n; ++r) {
            array_of(s[r], n, idx("antipode", r));
            for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar_at(f, s[r][c], idx(idx("antipode", r), c));
        }
        h.antipode = std::move(m);
    }
    return h;
}

HopfAlgebra parse_algebra(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // locate the byte offset as line/column
        const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + pos, '\n');
        const auto last_nl = text.substr(0, pos).rfind('\n');
        const auto col = pos - (last_nl == std::string_view::npos ? 0 : last_nl + 1) + 1;
        throw IoError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
    return algebra_from_json(j);
}

std::string dump_algebra(const HopfAlgebra& h) { return algebra_to_json(h).dump(1); }

}  // namespace hopf
