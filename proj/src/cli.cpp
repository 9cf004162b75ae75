#include "hopf/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "hopf/analysis.hpp"
#include "hopf/classify.hpp"
#include "hopf/families.hpp"
#include "hopf/io.hpp"

namespace hopf {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::uint32_t p = 0;
    std::string field;
    std::string omega;
    std::string output;
    std::string format = "markdown";
    std::string grouplikes = "eigen";
    std::uint64_t cap = 0;
    std::string char_mode = "equal-p";
};

// "q" or "q^m:c0,...,cm"
FieldPtr parse_field(const std::string& spec)
{
    try {
        const auto caret = spec.find('^');
        if (caret == std::string::npos) return Field::prime(static_cast<std::uint32_t>(std::stoul(spec)));
        const auto colon = spec.find(':');
        if (colon == std::string::npos) throw UsageError("extension field needs a modulus: q^m:c0,...,cm");
        const auto q = static_cast<std::uint32_t>(std::stoul(spec.substr(0, caret)));
        const auto m = static_cast<std::uint32_t>(std::stoul(spec.substr(caret + 1, colon - caret - 1)));
        std::vector<std::uint32_t> modulus;
        std::stringstream ss(spec.substr(colon + 1));
        for (std::string tok; std::getline(ss, tok, ',');) modulus.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        return Field::make(q, m, modulus);
    } catch (const std::invalid_argument&) {
        throw UsageError("cannot parse field '" + spec + "'");
    } catch (const std::out_of_range&) {
        throw UsageError("field '" + spec + "' out of range");
    }
}

Scalar parse_scalar(const Field& f, const std::string& spec)
{
    std::vector<std::uint32_t> c;
    std::stringstream ss(spec);
    try {
        for (std::string tok; std::getline(ss, tok, ',');) c.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    } catch (const std::exception&) {
        throw UsageError("cannot parse scalar '" + spec + "'");
    }
    if (c.size() == 1 && f.degree() == 1) {
        if (c[0] >= f.characteristic()) throw UsageError("omega " + spec + " not reduced mod " + std::to_string(f.characteristic()));
        return f.from_int(c[0]);
    }
    return f.from_coeffs(c);
}

FamilyId family_from(FamilyKind kind, const Options& o)
{
    if (o.p == 0) throw UsageError("family input needs --p");
    if (kind == FamilyKind::Taft) {
        if (o.field.empty()) {
            if (!o.omega.empty()) throw UsageError("--omega needs --field");
            return FamilyId::canonical(kind, o.p);
        }
        const FieldPtr f = parse_field(o.field);
        const Scalar w = o.omega.empty() ? primitive_root_of_unity(*f, o.p) : parse_scalar(*f, o.omega);
        return FamilyId::taft(o.p, f, w);
    }
    if (!o.omega.empty()) throw UsageError("--omega is only meaningful for taft");
    if (o.field.empty()) return FamilyId::canonical(kind, o.p);
    return FamilyId::group(kind, o.p, parse_field(o.field));
}

struct Input {
    HopfAlgebra h;
    std::optional<FamilyId> family;
};

Input load(const Options& o)
{
    if (std::filesystem::is_regular_file(o.input)) {
        std::ifstream in(o.input);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            return {parse_algebra(ss.str()), std::nullopt};
        } catch (const IoError& e) {
            throw IoError(o.input + ": " + e.what());
        }
    }
    const auto kind = parse_family(o.input);
    if (!kind) throw UsageError("'" + o.input + "' is neither a readable file nor a family name");
    const FamilyId id = family_from(*kind, o);
    return {build(id), id};
}

void write_text(const Options& o, const std::string& text, std::ostream& out)
{
    if (o.output.empty() || o.output == "-") {
        out << text;
        return;
    }
    std::ofstream f(o.output);
    if (!f) throw IoError("cannot write " + o.output);
    f << text;
}

std::string render_scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string markdown_kv(const json& j)
{
    std::ostringstream os;
    os << "| key | value |\n|---|---|\n";
    for (auto it = j.begin(); it != j.end(); ++it) os << "| " << it.key() << " | " << render_scalar(it.value()) << " |\n";
    return os.str();
}

std::string verify_markdown(const AxiomReport& r)
{
    std::ostringstream os;
    os << "| check | pass | counterexample | detail |\n|---|---|---|---|\n";
    for (const auto& c : r.checks) {
        std::string t;
        for (auto i : c.counterexample) t += (t.empty() ? "" : ",") + std::to_string(i);
        os << "| " << c.name << " | " << (c.pass ? "yes" : "no") << " | " << (t.empty() ? "-" : "(" + t + ")") << " | "
           << (c.detail.empty() ? "-" : c.detail) << " |\n";
    }
    return os.str();
}

json verify_json(const AxiomReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(CheckReport{c.name, c.pass, {{"counterexample", c.counterexample}, {"detail", c.detail}}}.to_json());
    return {{"all_pass", r.all_pass()}, {"checks", checks}};
}

GrouplikeGroup find_grouplikes(const HopfAlgebra& h, const Input& in, const Options& o)
{
    const std::uint64_t cap = o.cap ? o.cap : default_bruteforce_cap();
    if (o.grouplikes == "eigen") return grouplikes_eigen(h);
    if (o.grouplikes == "bruteforce") {
        try {
            return grouplikes_bruteforce(h, cap);
        } catch (const AnalysisError& e) {
            throw AnalysisError(std::string(e.what()) + " (try --grouplikes verify or --grouplikes eigen)");
        }
    }
    if (!in.family) throw UsageError("--grouplikes verify needs a family input with known grouplikes");
    return grouplikes_verify(h, presented_grouplikes(*in.family), cap);
}

int cmd_build(const Options& o, std::ostream& out)
{
    const Input in = load(o);
    write_text(o, dump_algebra(in.h) + "\n", out);
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const Input in = load(o);
    const AxiomReport r = verify_axioms(in.h);
    write_text(o, o.format == "json" ? verify_json(r).dump(1) + "\n" : verify_markdown(r), out);
    return r.all_pass() ? 0 : 1;
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err)
{
    const Input in = load(o);
    const AxiomReport ax = verify_axioms(in.h);
    if (!ax.all_pass()) {
        write_text(o, o.format == "json" ? verify_json(ax).dump(1) + "\n" : verify_markdown(ax), out);
        err << "input fails the Hopf axioms; analysis skipped\n";
        return 1;
    }
    const GrouplikeGroup G = find_grouplikes(in.h, in, o);
    const json rep = analysis_report(in.h, G);
    write_text(o, o.format == "json" ? rep.dump(1) + "\n" : markdown_kv(rep), out);
    const bool ok = rep["taft_wilson"]["pass"].get<bool>() && rep["filtration_coalgebra"]["pass"].get<bool>() &&
                    rep["grouplikes"]["divides_dim"].get<bool>();
    return ok ? 0 : 1;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err)
{
    const Input in = load(o);
    const AxiomReport ax = verify_axioms(in.h);
    if (!ax.all_pass()) {
        write_text(o, o.format == "json" ? verify_json(ax).dump(1) + "\n" : verify_markdown(ax), out);
        err << "input fails the Hopf axioms; not classified\n";
        return 1;
    }
    std::uint32_t p = o.p;
    if (p == 0) {
        while (static_cast<std::size_t>(p) * p < in.h.dim) ++p;
        if (static_cast<std::size_t>(p) * p != in.h.dim) throw UsageError("dimension is not a square; pass --p");
    }
    const TypeVerdict v = classify(in.h, p);
    if (o.format == "json") {
        write_text(o, v.to_json().dump(1) + "\n", out);
    } else {
        json j = v.to_json();
        json flat = {{"matched", j["matched"]}};
        if (j.contains("omega")) flat["omega"] = j["omega"];
        for (auto it = j["fingerprint"].begin(); it != j["fingerprint"].end(); ++it) flat[it.key()] = it.value();
        flat["calibration_distinct"] = j["calibration_distinct"];
        write_text(o, markdown_kv(flat), out);
    }
    return v.matched ? 0 : 1;
}

int cmd_report(const Options& o, std::ostream& out)
{
    if (o.p == 0) throw UsageError("report needs --p");
    CharMode mode;
    if (o.char_mode.rfind("taft", 0) == 0) {
        const auto l = o.char_mode.find('('), r = o.char_mode.find(')');
        if (l == std::string::npos) {
            mode.taft_q = smallest_prime_congruent_one(o.p);
        } else {
            if (r == std::string::npos || r < l) throw UsageError("--char taft(q) is malformed");
            try {
                mode.taft_q = static_cast<std::uint32_t>(std::stoul(o.char_mode.substr(l + 1, r - l - 1)));
            } catch (const std::exception&) {
                throw UsageError("--char taft(q) is malformed");
            }
        }
    } else if (o.char_mode != "equal-p") {
        throw UsageError("--char must be equal-p or taft(q)");
    }
    const ReportTable t = report_table(o.p, mode);
    write_text(o, o.format == "json" ? t.to_json().dump(1) + "\n" : t.to_markdown(), out);
    return t.distinct ? 0 : 1;
}

int cmd_dual(const Options& o, std::ostream& out)
{
    const Input in = load(o);
    write_text(o, dump_algebra(dual(in.h)) + "\n", out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Build, verify, analyze and classify pointed Hopf algebras of dimension p^2", "hopf"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", o.format, "markdown or json")->check(CLI::IsMember({"markdown", "json"}));
    };
    auto add_family = [&](CLI::App* s) {
        s->add_option("input", o.input, "algebra JSON file or family name")->required();
        s->add_option("--p", o.p, "prime p");
        s->add_option("--field", o.field, "q, or q^m:c0,...,cm");
        s->add_option("--omega", o.omega, "primitive p-th root of unity (taft)");
        s->add_option("-o,--output", o.output, "output file");
    };
    auto add_grouplikes = [&](CLI::App* s) {
        s->add_option("--grouplikes", o.grouplikes, "eigen, bruteforce or verify")
            ->check(CLI::IsMember({"eigen", "bruteforce", "verify"}));
        s->add_option("--cap", o.cap, "brute-force cap on |F|^dim");
    };

    auto* build_cmd = app.add_subcommand("build", "write an algebra as JSON");
    add_family(build_cmd);
    auto* verify_cmd = app.add_subcommand("verify", "check the Hopf algebra axioms");
    add_family(verify_cmd);
    add_format(verify_cmd);
    auto* analyze_cmd = app.add_subcommand("analyze", "grouplikes, skew-primitives, filtration and invariants");
    add_family(analyze_cmd);
    add_format(analyze_cmd);
    add_grouplikes(analyze_cmd);
    auto* classify_cmd = app.add_subcommand("classify", "match against the classified types");
    add_family(classify_cmd);
    add_format(classify_cmd);
    auto* report_cmd = app.add_subcommand("report", "fingerprint table of the classified types");
    report_cmd->add_option("--p", o.p, "prime p")->required();
    report_cmd->add_option("--char", o.char_mode, "equal-p or taft(q)");
    report_cmd->add_option("-o,--output", o.output, "output file");
    add_format(report_cmd);
    auto* dual_cmd = app.add_subcommand("dual", "write the dual algebra as JSON");
    add_family(dual_cmd);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*build_cmd) return cmd_build(o, out);
        if (*verify_cmd) return cmd_verify(o, out);
        if (*analyze_cmd) return cmd_analyze(o, out, err);
        if (*classify_cmd) return cmd_classify(o, out, err);
        if (*report_cmd) return cmd_report(o, out);
        if (*dual_cmd) return cmd_dual(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const FamilyError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const FieldError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ClassifyError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const AnalysisError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const HopfError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace hopf
