#include "tspec/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tspec/oracle.hpp"
#include "tspec/partition.hpp"
#include "tspec/spectrum.hpp"
#include "tspec/witness.hpp"

namespace tspec::cli {

using nlohmann::json;

const std::vector<TableCell>& zero_table()
{
    static const std::vector<TableCell> cells = {
        {1, 0, "1"},      {3, 0, "4"},       {4, 0, "4"},      {5, 0, "36"},     {6, 0, "256"},
        {7, 0, "400"},    {8, 0, "9864"},    {9, 0, "6664"},   {10, 0, "790528"}, {11, 0, "1474848"},
    };
    return cells;
}

const std::vector<TableCell>& one_table()
{
    static const std::vector<TableCell> cells = {
        {7, 1, "441"},
        {9, 1, "46656"},
        {11, 1, "3052225"},
        {13, 1, "87609600"},
        {15, 1, "2701400625"},
        {17, 1, "3928998225152"},
        {14, 1, "566130565"},
        {16, 1, "301532774400"},
        {18, 1, "274422662958600"},
        {20, 1, "86181028874240000"},
    };
    return cells;
}

namespace {

enum class Format { text, json, csv };

struct Settings {
    Format format = Format::text;
    SpectrumOptions spectrum;
    double tolerance = oracle::kDefaultTolerance;
    std::string edges_path;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// What a subcommand produces: a JSON payload (always) plus renderers for
/// the human and csv formats.
struct Outcome {
    int n = 0;
    json payload;
    bool passed = true;
    std::function<void(std::ostream&)> text;
    std::function<void(std::ostream&)> csv;
};

json pair_rows(const std::vector<std::pair<Eigenvalue, Multiplicity>>& rows)
{
    json arr = json::array();
    for (const auto& [value, mul] : rows)
        arr.push_back(json::array({value, mul.str()}));
    return arr;
}

std::vector<std::pair<Eigenvalue, Multiplicity>> as_rows(const Spectrum& s)
{
    return {s.entries().begin(), s.entries().end()};
}

void write_pair_table(std::ostream& out, const std::vector<std::pair<Eigenvalue, Multiplicity>>& rows)
{
    out << std::setw(10) << "eigenvalue" << "  multiplicity\n";
    for (const auto& [value, mul] : rows)
        out << std::setw(10) << value << "  " << mul.str() << '\n';
}

void write_pair_csv(std::ostream& out, const std::vector<std::pair<Eigenvalue, Multiplicity>>& rows)
{
    out << "eigenvalue,multiplicity\n";
    for (const auto& [value, mul] : rows)
        out << value << ',' << mul.str() << '\n';
}

json parts_json(const Partition& p) { return std::vector<int>(p.parts().begin(), p.parts().end()); }

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

// ---------------------------------------------------------------------------

Outcome cmd_spectrum(int n, const Settings& cfg)
{
    const Spectrum s = spectrum(n, cfg.spectrum);
    const InvariantReport inv = check_invariants(s);
    auto rows = as_rows(s);

    Outcome o;
    o.n = n;
    o.payload = pair_rows(rows);
    o.passed = inv.all();
    o.text = [=](std::ostream& out) {
        out << "Spectrum of T_" << n << ": " << rows.size() << " distinct eigenvalues, "
            << factorial(n).str() << " in total\n";
        write_pair_table(out, rows);
        out << '\n';
        out << "check  sum of multiplicities == n!              " << verdict(inv.total_is_factorial) << '\n';
        out << "check  sum of lambda*mul == 0                   " << verdict(inv.zero_trace) << '\n';
        out << "check  sum of lambda^2*mul == n!*n(n-1)/2       " << verdict(inv.trace_of_square) << '\n';
        out << "check  mul(lambda) == mul(-lambda)              " << verdict(inv.symmetric) << '\n';
        out << "check  largest is n(n-1)/2 with multiplicity 1  " << verdict(inv.top_is_valency) << '\n';
    };
    o.csv = [rows](std::ostream& out) { write_pair_csv(out, rows); };
    return o;
}

Outcome cmd_top(int n, int count, const Settings& cfg)
{
    auto rows = top_eigenvalues(n, count, cfg.spectrum);
    Outcome o;
    o.n = n;
    o.payload = pair_rows(rows);
    o.text = [rows](std::ostream& out) { write_pair_table(out, rows); };
    o.csv = [rows](std::ostream& out) { write_pair_csv(out, rows); };
    return o;
}

Outcome cmd_mult(int n, Eigenvalue value, const Settings& cfg)
{
    const Multiplicity m = multiplicity(n, value, cfg.spectrum);
    Outcome o;
    o.n = n;
    o.payload = {{"eigenvalue", value}, {"multiplicity", m.str()}};
    o.text = [=](std::ostream& out) { out << "mul(" << value << ") in T_" << n << " = " << m.str() << '\n'; };
    o.csv = [=](std::ostream& out) { write_pair_csv(out, {{value, m}}); };
    return o;
}

Outcome cmd_eig(const std::vector<int>& parts)
{
    if (parts.empty())
        throw UsageError("eig needs the parts of a partition");
    const Partition p{std::vector<int>(parts)};
    const Eigenvalue lambda = eigenvalue(p);
    const BigInt deg = degree(p);
    const HookGrid hooks = hook_lengths(p);
    const Eigenvalue bound = eigenvalue_upper_bound(p);
    std::optional<CharacterRatio> ratio;
    if (p.n() >= 2)
        ratio = character_ratio(p);

    Outcome o;
    o.n = p.n();
    o.payload = {
        {"partition", parts_json(p)},
        {"eigenvalue", lambda},
        {"degree", deg.str()},
        {"hook_lengths", hooks.rows()},
        {"upper_bound", bound},
        {"conjugate", parts_json(conjugate(p))},
        {"character_ratio",
         ratio ? json(std::to_string(ratio->numerator) + "/" + std::to_string(ratio->denominator)) : json(nullptr)},
    };
    o.text = [=](std::ostream& out) {
        out << "partition        " << p.to_string() << " of " << p.n() << '\n';
        out << "eigenvalue       " << lambda << '\n';
        out << "degree           " << deg.str() << '\n';
        out << "upper bound      " << bound << '\n';
        out << "conjugate        " << conjugate(p).to_string() << '\n';
        out << "character ratio  ";
        if (ratio)
            out << ratio->numerator << '/' << ratio->denominator << '\n';
        else
            out << "undefined (n = 1)\n";
        out << "hook lengths\n";
        for (const auto& row : hooks.rows()) {
            out << " ";
            for (int h : row)
                out << ' ' << std::setw(3) << h;
            out << '\n';
        }
    };
    return o;
}

Outcome cmd_witness(int n, Eigenvalue target)
{
    const WitnessReport r = verify_witness(n, target);
    Outcome o;
    o.n = n;
    o.passed = r.verified;
    o.payload = {
        {"target", r.target},
        {"partition", parts_json(r.partition)},
        {"verified", r.verified},
    };
    o.text = [r](std::ostream& out) {
        out << "T_" << r.n << ", eigenvalue " << r.target << ": " << r.partition.to_string() << ' '
            << (r.verified ? "verified" : "NOT verified") << '\n';
    };
    return o;
}

Outcome cmd_tables(const Settings& cfg)
{
    struct Row {
        const char* table;
        TableCell cell;
        std::string computed;
        bool pass;
    };
    std::vector<Row> rows;
    bool all = true;
    int largest = 0;
    auto run_table = [&](const char* name, const std::vector<TableCell>& cells) {
        for (const auto& c : cells) {
            const std::string got = multiplicity(c.n, c.eigenvalue, cfg.spectrum).str();
            const bool pass = got == c.multiplicity;
            all = all && pass;
            largest = std::max(largest, c.n);
            rows.push_back({name, c, got, pass});
        }
    };
    run_table("zero", zero_table());
    run_table("one", one_table());

    Outcome o;
    o.n = largest;
    o.passed = all;
    json zero = json::array();
    json one = json::array();
    for (const auto& r : rows) {
        json cell = {{"n", r.cell.n},
                     {"expected", r.cell.multiplicity},
                     {"computed", r.computed},
                     {"pass", r.pass}};
        (std::string(r.table) == "zero" ? zero : one).push_back(std::move(cell));
    }
    o.payload = {{"multiplicity_of_zero", zero}, {"multiplicity_of_one", one}, {"pass", all}};
    o.text = [rows](std::ostream& out) {
        const char* current = "";
        for (const auto& r : rows) {
            if (std::string(current) != r.table) {
                current = r.table;
                out << (std::string(current) == "zero" ? "Multiplicity of eigenvalue 0\n"
                                                       : "\nMultiplicity of eigenvalue 1\n");
                out << std::setw(4) << "n" << std::setw(22) << "expected" << std::setw(22) << "computed"
                    << "  result\n";
            }
            out << std::setw(4) << r.cell.n << std::setw(22) << r.cell.multiplicity << std::setw(22)
                << r.computed << "  " << verdict(r.pass) << '\n';
        }
    };
    o.csv = [rows](std::ostream& out) {
        out << "eigenvalue,n,expected,computed,result\n";
        for (const auto& r : rows)
            out << r.cell.eigenvalue << ',' << r.cell.n << ',' << r.cell.multiplicity << ',' << r.computed << ','
                << verdict(r.pass) << '\n';
    };
    return o;
}

// Checks run by `verify` for a single n. Values are PASS, FAIL or SKIPPED.
std::vector<std::pair<std::string, std::string>> verify_row(int n, const Settings& cfg)
{
    std::vector<std::pair<std::string, std::string>> checks;
    auto add = [&](const char* name, std::optional<bool> result) {
        checks.emplace_back(name, result ? verdict(*result) : "SKIPPED");
    };

    const Spectrum s = spectrum(n, cfg.spectrum);
    const auto& e = s.entries();
    auto nth = [&](std::size_t i) -> std::optional<std::pair<Eigenvalue, Multiplicity>> {
        if (i >= e.size())
            return std::nullopt;
        auto it = std::next(e.begin(), static_cast<std::ptrdiff_t>(i));
        return *it;
    };
    auto expect = [&](std::size_t i, std::int64_t value, const BigInt& mul) {
        auto got = nth(i);
        return got && got->first == value && got->second == mul;
    };
    const std::int64_t m = n;

    add("largest", expect(0, m * (m - 1) / 2, 1));
    add("second", n >= 3 ? std::optional(expect(1, m * (m - 3) / 2, BigInt((m - 1) * (m - 1)))) : std::nullopt);
    add("third", n >= 4 ? std::optional(expect(2, (m - 1) * (m - 4) / 2, BigInt(m * (m - 3) / 2) * (m * (m - 3) / 2)))
                        : std::nullopt);
    add("fourth", n >= 7 ? std::optional(expect(3, m * (m - 5) / 2,
                                                BigInt((m - 1) * (m - 2) / 2) * ((m - 1) * (m - 2) / 2)))
                         : std::nullopt);

    std::optional<bool> hooks;
    if (n >= 3) {
        hooks = true;
        for (int k = 3; k <= n; ++k) {
            const BigInt d = degree(hook_partition(n, k));
            hooks = *hooks && s.multiplicity(m * (m - 2 * k + 1) / 2) >= d * d;
        }
    }
    add("hooks", hooks);
    add("invariants", check_invariants(s).all());

    bool bound = true;
    for (const Partition& p : enumerate_partitions(n, cfg.spectrum.max_n))
        bound = bound && eigenvalue(p) <= eigenvalue_upper_bound(p);
    add("bound", bound);

    if (n == 2) {
        add("zero", !s.contains(0));
    } else {
        const WitnessReport w = verify_witness(n, 0);
        add("zero", w.verified && s.contains(0));
    }
    const bool lemma_one = (n % 2 == 1 && n >= 7) || (n % 2 == 0 && n >= 14);
    if (lemma_one) {
        const WitnessReport w = verify_witness(n, 1);
        add("one", w.verified && s.contains(1));
    } else {
        add("one", std::nullopt);
    }
    return checks;
}

Outcome cmd_verify(int n_max, const Settings& cfg)
{
    if (n_max < 4)
        throw UsageError("verify needs n_max >= 4, got " + std::to_string(n_max));
    if (n_max > cfg.spectrum.max_n)
        throw ResourceLimitError("n_max = " + std::to_string(n_max) + " exceeds the configured maximum "
                                 + std::to_string(cfg.spectrum.max_n));

    std::vector<std::pair<int, std::vector<std::pair<std::string, std::string>>>> rows;
    bool all = true;
    for (int n = 2; n <= n_max; ++n) {
        auto checks = verify_row(n, cfg);
        for (const auto& c : checks)
            all = all && c.second != "FAIL";
        rows.emplace_back(n, std::move(checks));
    }

    Outcome o;
    o.n = n_max;
    o.passed = all;
    json jrows = json::array();
    for (const auto& [n, checks] : rows) {
        json c = json::object();
        for (const auto& [name, v] : checks)
            c[name] = v;
        jrows.push_back({{"n", n}, {"checks", c}});
    }
    o.payload = {{"rows", jrows}, {"pass", all}};
    auto table = [rows, all](std::ostream& out, char sep) {
        const bool csv = sep == ',';
        out << (csv ? "n" : "   n");
        for (const auto& c : rows.front().second)
            if (csv)
                out << ',' << c.first;
            else
                out << std::setw(12) << c.first;
        out << '\n';
        for (const auto& [n, checks] : rows) {
            if (csv)
                out << n;
            else
                out << std::setw(4) << n;
            for (const auto& c : checks)
                if (csv)
                    out << ',' << c.second;
                else
                    out << std::setw(12) << c.second;
            out << '\n';
        }
        if (!csv)
            out << "\noverall " << verdict(all) << '\n';
    };
    o.text = [table](std::ostream& out) { table(out, ' '); };
    o.csv = [table](std::ostream& out) { table(out, ','); };
    return o;
}

Outcome cmd_oracle(int n, const Settings& cfg)
{
    if (n < oracle::kMinN || n > oracle::kMaxN)
        throw UsageError("oracle needs " + std::to_string(oracle::kMinN) + " <= n <= "
                         + std::to_string(oracle::kMaxN) + ", got " + std::to_string(n));
    const oracle::CayleyGraph g = oracle::build_graph(n);
    if (!cfg.edges_path.empty()) {
        std::ofstream f(cfg.edges_path);
        if (!f)
            throw UsageError("cannot open " + cfg.edges_path + " for writing");
        g.write_edge_list(f);
    }
    const oracle::NumericSpectrum numeric = oracle::numeric_spectrum(g, cfg.tolerance);
    const Spectrum exact = spectrum(n, cfg.spectrum);
    const oracle::Comparison cmp = oracle::compare(exact, numeric, cfg.tolerance);

    Outcome o;
    o.n = n;
    o.passed = cmp.agreement;
    o.payload = {
        {"vertices", g.order()},
        {"edges", g.edge_count()},
        {"tolerance", cfg.tolerance},
        {"agreement", cmp.agreement},
        {"max_deviation", cmp.max_deviation},
        {"discrepancies", cmp.discrepancies},
    };
    const std::size_t vertices = g.order();
    const std::size_t edges = g.edge_count();
    o.text = [=](std::ostream& out) {
        out << "T_" << n << ": " << vertices << " vertices, " << edges << " edges\n";
        out << "agreement=" << (cmp.agreement ? "true" : "false") << " max_deviation=" << std::scientific
            << std::setprecision(3) << cmp.max_deviation << std::defaultfloat << " tolerance=" << cfg.tolerance
            << '\n';
        for (const auto& d : cmp.discrepancies)
            out << "  " << d << '\n';
    };
    return o;
}

std::string command_name(const CLI::App& app)
{
    for (const auto* sub : app.get_subcommands())
        return sub->get_name();
    return "";
}

void emit_error(const std::string& command, std::optional<int> n, const std::string& message, Format format,
                std::ostream& out, std::ostream& err)
{
    if (format == Format::json) {
        json record = {{"command", command},
                       {"n", n ? json(*n) : json(nullptr)},
                       {"payload", {{"message", message}}},
                       {"status", "error"}};
        out << record.dump(2) << '\n';
    } else {
        err << "error: " << message << '\n';
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact spectrum of the transposition graph T_n", "tspec"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("tspec ") + kVersion);

    Settings cfg;
    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", cfg.spectrum.threads, "Workers for the partition sweep (0 = all cores)")
        ->capture_default_str();
    app.add_option("--max-n", cfg.spectrum.max_n, "Enumeration cap on n")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--tolerance", cfg.tolerance, "Integrality tolerance (oracle only)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    int n = 0;
    int count = 0;
    long long value = 0;
    std::vector<int> parts;

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Full spectrum with multiplicities")->fallthrough();
    spectrum_cmd->add_option("n", n)->required();

    auto* mult_cmd = app.add_subcommand("mult", "Multiplicity of one eigenvalue")->fallthrough();
    mult_cmd->add_option("n", n)->required();
    mult_cmd->add_option("value", value)->required();

    auto* eig_cmd = app.add_subcommand("eig", "Eigenvalue, degree and hooks of a partition")->fallthrough();
    eig_cmd->add_option("parts", parts, "Parts of the partition, largest first")->required();

    auto* witness_cmd = app.add_subcommand("witness", "Explicit partition realising an eigenvalue")->fallthrough();
    witness_cmd->add_option("n", n)->required();
    witness_cmd->add_option("target", value)->required();

    auto* tables_cmd = app.add_subcommand("tables", "Recompute the golden multiplicity tables")->fallthrough();

    auto* verify_cmd = app.add_subcommand("verify", "Check the closed-form results for every n up to n_max")
                           ->fallthrough();
    verify_cmd->add_option("n_max", n)->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Compare against a brute-force eigensolve of T_n")->fallthrough();
    oracle_cmd->add_option("n", n)->required();
    oracle_cmd->add_option("--edges", cfg.edges_path, "Write the edge list of T_n to this file");

    auto* top_cmd = app.add_subcommand("top", "Largest distinct eigenvalues")->fallthrough();
    top_cmd->add_option("n", n)->required();
    top_cmd->add_option("count", count)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    cfg.format = format_name == "json" ? Format::json : format_name == "csv" ? Format::csv : Format::text;
    const std::string command = command_name(app);
    std::optional<int> record_n;
    if (!eig_cmd->parsed() && !tables_cmd->parsed())
        record_n = n;

    try {
        Outcome o;
        if (spectrum_cmd->parsed())
            o = cmd_spectrum(n, cfg);
        else if (mult_cmd->parsed())
            o = cmd_mult(n, value, cfg);
        else if (eig_cmd->parsed())
            o = cmd_eig(parts);
        else if (witness_cmd->parsed())
            o = cmd_witness(n, value);
        else if (tables_cmd->parsed())
            o = cmd_tables(cfg);
        else if (verify_cmd->parsed())
            o = cmd_verify(n, cfg);
        else if (oracle_cmd->parsed())
            o = cmd_oracle(n, cfg);
        else
            o = cmd_top(n, count, cfg);

        switch (cfg.format) {
        case Format::json: {
            json record = {{"command", command}, {"n", o.n}, {"payload", o.payload}, {"status", "ok"}};
            out << record.dump(2) << '\n';
            break;
        }
        case Format::csv:
            if (!o.csv)
                throw UsageError("csv output is not available for '" + command + "'");
            o.csv(out);
            break;
        case Format::text:
            o.text(out);
            break;
        }
        return o.passed ? kOk : kCheckFailed;
    } catch (const NoConstructionKnown& e) {
        emit_error(command, record_n, e.what(), cfg.format, out, err);
        return kCheckFailed;
    } catch (const InternalError& e) {
        emit_error(command, record_n, std::string("internal error: ") + e.what(), cfg.format, out, err);
        return kCheckFailed;
    } catch (const std::invalid_argument& e) {
        emit_error(command, record_n, e.what(), cfg.format, out, err);
        return kUsage;
    } catch (const ResourceLimitError& e) {
        emit_error(command, record_n, e.what(), cfg.format, out, err);
        return kUsage;
    } catch (const std::exception& e) {
        emit_error(command, record_n, e.what(), cfg.format, out, err);
        return kCheckFailed;
    }
}

} // namespace tspec::cli
