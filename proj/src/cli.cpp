#include "hochschild/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hochschild/bar_oracle.hpp"
#include "hochschild/direct.hpp"
#include "hochschild/errors.hpp"
#include "hochschild/extremes.hpp"
#include "hochschild/finiteness.hpp"
#include "hochschild/formula.hpp"

namespace hochschild {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string quiver_file;
    int n = 0;
    std::uint64_t characteristic = 0;
    int max_degree = 8;
    std::string engine = "both";
    std::string format = "json";
    std::size_t max_basis = 200000;
    int i = 1;
    std::optional<int> j;
};

class InputError : public Error {
public:
    using Error::Error;
};

json number(const BigInt& v)
{
    if (v.fits_u64())
        return v.to_u64();
    return v.str();
}

std::string plain(const BigInt& v) { return v.str(); }

json algebra_json(const Quiver& q, int n)
{
    json vertices = json::array();
    for (VertexId v = 0; v < q.vertex_count(); ++v)
        vertices.push_back(q.vertex_name(v));
    json arrows = json::array();
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const auto& arrow = q.arrow(a);
        arrows.push_back({{"name", arrow.name},
                          {"source", q.vertex_name(arrow.source)},
                          {"target", q.vertex_name(arrow.target)}});
    }
    json out;
    if (!q.name().empty())
        out["name"] = q.name();
    out["vertices"] = std::move(vertices);
    out["arrows"] = std::move(arrows);
    out["n"] = n;
    return out;
}

json finiteness_json(const Quiver& q, int n, const std::vector<Certificate>& certificates)
{
    const auto verdict = decide_finiteness(q, n);
    json out;
    out["verdict"] = verdict.finite ? "finite" : "infinite";
    out["witness"] = verdict.witness_cycle ? json(format_path(q, *verdict.witness_cycle)) : json(nullptr);
    json certs = json::array();
    for (const auto& c : certificates)
        certs.push_back({{"r", c.r}, {"degree", c.degree}, {"nonvanishing", c.nonvanishing}});
    out["certificates"] = std::move(certs);
    return out;
}

struct Context {
    Options opt;
    Quiver quiver;
    FieldSpec field;
    EnumerationLimits limits;
};

Context load(const Options& opt)
{
    if (opt.n < 2)
        throw InputError("--n must be at least 2");
    if (opt.max_degree < 0)
        throw InputError("--max-degree must be non-negative");
    if (opt.max_basis == 0)
        throw InputError("--max-basis must be positive");
    FieldSpec field = FieldSpec::rationals();
    try {
        field = FieldSpec::of_characteristic(opt.characteristic);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    Quiver q = [&] {
        try {
            return load_quiver(opt.quiver_file);
        } catch (const Error& e) {
            throw InputError(opt.quiver_file + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw InputError(opt.quiver_file + ": " + e.what());
        }
    }();
    return Context{opt, std::move(q), field, EnumerationLimits{opt.max_basis}};
}

struct EngineRuns {
    std::optional<CohomologyReport> direct;
    std::optional<CohomologyReport> formula;
    std::vector<std::string> warnings;
    bool truncated = false;
};

EngineRuns run_engines(const Context& ctx, bool want_direct, bool want_formula)
{
    EngineRuns runs;
    if (want_direct) {
        runs.direct = dims_direct(ctx.quiver, ctx.opt.n, ctx.field, ctx.opt.max_degree, ctx.limits);
        for (const auto& w : runs.direct->warnings)
            runs.warnings.push_back(w);
        if (runs.direct->truncated_at) {
            runs.truncated = true;
            runs.warnings.push_back("direct engine stopped at degree " + std::to_string(*runs.direct->truncated_at) +
                                    ": " + runs.direct->truncation_reason);
        }
    }
    if (want_formula) {
        try {
            runs.formula = dims_formula(ctx.quiver, ctx.opt.n, ctx.field, ctx.opt.max_degree, ctx.limits);
            if (runs.formula->truncated_at) {
                runs.truncated = true;
                runs.warnings.push_back("formula engine stopped at degree " +
                                        std::to_string(*runs.formula->truncated_at) + ": " +
                                        runs.formula->truncation_reason);
            }
        } catch (const FormulaDeclined& e) {
            runs.warnings.push_back(std::string("formula engine declined: ") + e.what());
        }
    }
    return runs;
}

/// nullopt when fewer than two engines produced values.
std::optional<bool> agreement(const EngineRuns& runs)
{
    if (!runs.direct || !runs.formula)
        return std::nullopt;
    const std::size_t common = std::min(runs.direct->dims.size(), runs.formula->dims.size());
    for (std::size_t d = 0; d < common; ++d)
        if (runs.direct->dims[d] != runs.formula->dims[d])
            return false;
    return true;
}

json dims_json(const EngineRuns& runs)
{
    json out = json::array();
    const std::size_t nd = runs.direct ? runs.direct->dims.size() : 0;
    const std::size_t nf = runs.formula ? runs.formula->dims.size() : 0;
    for (std::size_t d = 0; d < std::max(nd, nf); ++d) {
        json row;
        row["degree"] = d;
        if (d < nd && d < nf) {
            const auto& a = runs.direct->dims[d];
            const auto& b = runs.formula->dims[d];
            row["value"] = number(a);
            row["engine"] = "both";
            row["agree"] = a == b;
            if (a != b)
                row["formula_value"] = number(b);
        } else if (d < nd) {
            row["value"] = number(runs.direct->dims[d]);
            row["engine"] = "direct";
        } else {
            row["value"] = number(runs.formula->dims[d]);
            row["engine"] = "formula";
        }
        if (d < nd) {
            const auto& detail = runs.direct->details[d];
            row["detail"] = {{"cochain_dim", number(detail.cochain_dim)},
                             {"rank_in", number(detail.rank_in)},
                             {"rank_out", number(detail.rank_out)}};
        }
        out.push_back(std::move(row));
    }
    return out;
}

json base_report(const Context& ctx)
{
    json report;
    report["algebra"] = algebra_json(ctx.quiver, ctx.opt.n);
    report["char"] = ctx.field.characteristic();
    return report;
}

std::vector<Certificate> safe_certificates(const Context& ctx, std::vector<std::string>& warnings, bool& truncated)
{
    std::vector<Certificate> out;
    if (decide_finiteness(ctx.quiver, ctx.opt.n).finite)
        return out;
    for (int r : {0, 1}) {
        try {
            auto c = finiteness_certificates(ctx.quiver, ctx.opt.n, ctx.field, {r}, ctx.limits);
            out.insert(out.end(), c.begin(), c.end());
        } catch (const CapExceeded& e) {
            truncated = true;
            warnings.push_back("certificate r=" + std::to_string(r) + " skipped: " + e.what());
        }
    }
    return out;
}

void print_table(std::ostream& out, const json& report)
{
    const auto& alg = report["algebra"];
    out << "algebra " << alg.value("name", std::string("?")) << "  vertices " << alg["vertices"].size() << "  arrows "
        << alg["arrows"].size() << "  n " << alg["n"] << "  char " << report["char"] << "\n";
    if (report.contains("dims")) {
        out << std::left << std::setw(8) << "degree" << std::setw(14) << "value"
            << "engine\n";
        for (const auto& row : report["dims"]) {
            std::string value = row["value"].is_string() ? row["value"].get<std::string>() : row["value"].dump();
            std::string engine = row["engine"].get<std::string>();
            if (row.contains("formula_value"))
                engine += " (formula " + row["formula_value"].dump() + ")";
            out << std::setw(8) << row["degree"].dump() << std::setw(14) << value << engine << "\n";
        }
        out << "agreement " << report["agreement"].dump() << "\n";
    }
    if (report.contains("finiteness")) {
        const auto& f = report["finiteness"];
        out << "finiteness " << f["verdict"].get<std::string>();
        if (!f["witness"].is_null())
            out << "  witness " << f["witness"].get<std::string>();
        out << "\n";
        for (const auto& c : f["certificates"])
            out << "  r=" << c["r"] << " degree " << c["degree"] << " nonvanishing " << c["nonvanishing"] << "\n";
    }
    if (report.contains("extremes")) {
        for (const auto& block : report["extremes"]) {
            out << "(" << block["j"] << "//" << block["length"] << ")  classes " << block["classes"].size()
                << "  j-extremes " << block["count"].dump() << "\n";
            for (const auto& c : block["classes"]) {
                out << "  " << (c["j_extreme"].get<bool>() ? "*" : " ") << " {";
                bool first = true;
                for (const auto& m : c["members"]) {
                    out << (first ? "" : ", ") << m.get<std::string>();
                    first = false;
                }
                out << "}" << (c["vacuous"].get<bool>() ? " vacuous" : "") << "\n";
            }
        }
    }
    if (report.contains("checks")) {
        for (const auto& c : report["checks"])
            out << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << "  "
                << c["detail"].get<std::string>() << "\n";
    }
    if (report.contains("notes"))
        for (const auto& n : report["notes"])
            out << "note: " << n.get<std::string>() << "\n";
    for (const auto& w : report["warnings"])
        out << "warning: " << w.get<std::string>() << "\n";
}

void emit(std::ostream& out, const Options& opt, const json& report)
{
    if (opt.format == "table")
        print_table(out, report);
    else
        out << report.dump(2) << "\n";
}

int cmd_dims(const Options& opt, std::ostream& out)
{
    const Context ctx = load(opt);
    const bool want_direct = opt.engine != "formula";
    const bool want_formula = opt.engine != "direct";
    auto runs = run_engines(ctx, want_direct, want_formula);

    json report = base_report(ctx);
    report["dims"] = dims_json(runs);
    const auto agree = agreement(runs);
    report["agreement"] = agree ? json(*agree) : json(nullptr);
    report["finiteness"] = finiteness_json(ctx.quiver, opt.n, {});
    report["warnings"] = runs.warnings;
    emit(out, opt, report);
    if (agree && !*agree)
        return exit_mismatch;
    if (runs.truncated)
        return exit_cap_overflow;
    return exit_ok;
}

int cmd_finiteness(const Options& opt, std::ostream& out)
{
    const Context ctx = load(opt);
    std::vector<std::string> warnings;
    bool truncated = false;
    const auto certificates = safe_certificates(ctx, warnings, truncated);
    json report = base_report(ctx);
    report["finiteness"] = finiteness_json(ctx.quiver, opt.n, certificates);
    report["warnings"] = warnings;
    emit(out, opt, report);
    return truncated ? exit_cap_overflow : exit_ok;
}

int cmd_extremes(const Options& opt, std::ostream& out)
{
    const Context ctx = load(opt);
    if (opt.i < 1)
        throw InputError("--i must be at least 1");
    if (opt.j && (*opt.j < 1 || *opt.j > opt.n - 1))
        throw InputError("--j must lie in 1..n-1");
    const std::size_t length = static_cast<std::size_t>(opt.n) * static_cast<std::size_t>(opt.i);

    json blocks = json::array();
    for (int j = opt.j.value_or(1); j <= opt.j.value_or(opt.n - 1); ++j) {
        const auto partition = movement_classes(ctx.quiver, static_cast<std::size_t>(j), length, ctx.limits);
        json classes = json::array();
        std::size_t count = 0;
        for (const auto& c : partition.classes) {
            json members = json::array();
            for (std::size_t k : c.members)
                members.push_back(format_pair(ctx.quiver, partition.basis[k]));
            count += c.is_j_extreme();
            classes.push_back({{"members", std::move(members)},
                               {"j_extreme", c.is_j_extreme()},
                               {"vacuous", c.vacuous()},
                               {"plus_extreme_off_sink", c.plus_extreme_off_sink},
                               {"minus_extreme_off_source", c.minus_extreme_off_source}});
        }
        json block;
        block["j"] = j;
        block["i"] = opt.i;
        block["length"] = length;
        // j = n-1: every pair counts, whatever its class
        block["count"] = j == opt.n - 1 ? partition.basis.size() : count;
        block["classes"] = std::move(classes);
        blocks.push_back(std::move(block));
    }
    json report = base_report(ctx);
    report["extremes"] = std::move(blocks);
    report["warnings"] = json::array();
    emit(out, opt, report);
    return exit_ok;
}

int cmd_verify(const Options& opt, std::ostream& out)
{
    const Context ctx = load(opt);
    auto runs = run_engines(ctx, true, true);
    json checks = json::array();
    json notes = json::array();
    bool failed = false;
    auto check = [&](std::string name, bool passed, std::string detail) {
        failed |= !passed;
        checks.push_back({{"name", std::move(name)}, {"passed", passed}, {"detail", std::move(detail)}});
    };

    const auto agree = agreement(runs);
    if (agree)
        check("engine agreement", *agree, "direct vs closed form on degrees 0.." +
                                              std::to_string(std::min(runs.direct->dims.size(),
                                                                      runs.formula->dims.size()) - 1));

    const auto shape = classify(ctx.quiver);
    const auto& direct_dims = runs.direct->dims;
    if (shape.is_basic_cycle) {
        bool parity = true;
        for (std::size_t d = 2; d + 1 < direct_dims.size(); d += 2)
            parity &= direct_dims[d] == direct_dims[d + 1];
        check("even/odd parity", parity, "dim H^2i = dim H^2i+1 for i >= 1");
    }
    const std::uint64_t p = ctx.field.characteristic();
    if (shape.is_basic_cycle && *shape.basic_cycle_length > 1 && p != 0 && opt.n % static_cast<int>(p) == 0 &&
        agree && !*agree) {
        notes.push_back("open discrepancy: with char | n the basic-cycle closed form adds its correction to "
                        "H^2i and H^2i+1 when e | n(i-1)+1, while the cochain complex (and the bar oracle) "
                        "raise H^2i-1 and H^2i instead");
    }
    if (shape.is_basic_cycle && *shape.basic_cycle_length == 1 && direct_dims.size() > 1) {
        // naive closed form at e = 1: n = m, r = 0, so H^1 = m = n
        notes.push_back("open discrepancy: the basic-cycle closed form evaluated at e = 1 gives dim H^1 = " +
                        std::to_string(opt.n) + ", the cochain complex gives " + plain(direct_dims[1]) +
                        "; the formula engine declines single loops");
    }

    TruncatedComplex complex(ctx.quiver, opt.n, ctx.limits);
    try {
        bool zero = true;
        int top = std::min(opt.max_degree, 6);
        for (int m = 1; m <= top; ++m)
            zero &= (complex.differential(m + 1).matrix * complex.differential(m).matrix).is_zero();
        check("d∘d = 0", zero, "degrees 1.." + std::to_string(top));
    } catch (const CapExceeded& e) {
        runs.truncated = true;
        runs.warnings.push_back(std::string("d∘d check skipped: ") + e.what());
    }

    const OracleLimits oracle;
    const BigInt dimA = algebra_dim(ctx.quiver, opt.n);
    if (dimA <= BigInt(static_cast<unsigned long>(oracle.max_algebra_dim))) {
        const int top = std::min({opt.max_degree, 3, static_cast<int>(direct_dims.size()) - 1});
        if (top >= 0) {
            const auto bar = dims_bar(ctx.quiver, opt.n, ctx.field, top, oracle);
            bool same = true;
            for (int d = 0; d <= top; ++d)
                same &= bar[static_cast<std::size_t>(d)] == direct_dims[static_cast<std::size_t>(d)];
            check("bar oracle", same, "degrees 0.." + std::to_string(top));
            const auto center = center_dim_bruteforce(ctx.quiver, opt.n, ctx.field, oracle);
            check("center", BigInt(static_cast<unsigned long>(center)) == direct_dims[0],
                  "commutant dimension " + std::to_string(center));
        }
    } else {
        notes.push_back("bar oracle skipped: dim A = " + plain(dimA) + " exceeds " +
                        std::to_string(oracle.max_algebra_dim));
    }

    const auto certificates = safe_certificates(ctx, runs.warnings, runs.truncated);
    for (const auto& c : certificates) {
        bool ok = c.nonvanishing;
        std::string detail = "H^" + std::to_string(c.degree) + (c.nonvanishing ? " certified nonzero" : " not certified");
        if (static_cast<std::size_t>(c.degree) < direct_dims.size()) {
            ok &= direct_dims[static_cast<std::size_t>(c.degree)] >= BigInt(1);
            detail += ", direct " + plain(direct_dims[static_cast<std::size_t>(c.degree)]);
        }
        check("certificate r=" + std::to_string(c.r), ok, detail);
    }

    json report = base_report(ctx);
    report["dims"] = dims_json(runs);
    report["agreement"] = agree ? json(*agree) : json(nullptr);
    report["finiteness"] = finiteness_json(ctx.quiver, opt.n, certificates);
    report["checks"] = std::move(checks);
    report["notes"] = std::move(notes);
    report["warnings"] = runs.warnings;
    emit(out, opt, report);
    if (failed)
        return exit_mismatch;
    return runs.truncated ? exit_cap_overflow : exit_ok;
}

void add_common(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--quiver", opt.quiver_file, "quiver file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--n", opt.n, "truncation index (paths of length >= n vanish)")->required();
    cmd->add_option("--char", opt.characteristic, "field characteristic, 0 or a prime");
    cmd->add_option("--max-basis", opt.max_basis, "largest path set materialised per request");
    cmd->add_option("--format", opt.format, "json or table")->check(CLI::IsMember({"json", "table"}));
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hochschild cohomology of truncated quiver algebras", "hhtrunc"};
    app.require_subcommand(1);
    Options opt;

    auto* dims = app.add_subcommand("dims", "dimension sequence");
    add_common(dims, opt);
    dims->add_option("--max-degree", opt.max_degree, "highest degree reported")->capture_default_str();
    dims->add_option("--engine", opt.engine, "which engine to run")->capture_default_str()->check(CLI::IsMember({"direct", "formula", "both"}));

    auto* fin = app.add_subcommand("finiteness", "finite-dimensionality verdict and certificates");
    add_common(fin, opt);

    auto* ext = app.add_subcommand("extremes", "movement classes of (j//ni)");
    add_common(ext, opt);
    ext->add_option("--i", opt.i, "block index, paths of length n*i")->required();
    ext->add_option("--j", opt.j, "single j in 1..n-1; all when omitted");

    auto* ver = app.add_subcommand("verify", "cross-check engines, oracle and invariants");
    add_common(ver, opt);
    ver->add_option("--max-degree", opt.max_degree, "highest degree reported")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        if (dims->parsed())
            return cmd_dims(opt, out);
        if (fin->parsed())
            return cmd_finiteness(opt, out);
        if (ext->parsed())
            return cmd_extremes(opt, out);
        return cmd_verify(opt, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const CapExceeded& e) {
        err << "error: size cap exceeded: " << e.what() << "\n";
        return exit_cap_overflow;
    }
}

} // namespace hochschild
