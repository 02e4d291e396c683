// Command-line surface for the schreier library: single terms, whole
// tables, identity verification, recurrence detection, and a method
// benchmark.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain
// error, 3 enumeration ceiling exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <schreier/schreier.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCeiling = 3;

constexpr const char* kCeilingEnvVar = "SCHREIER_ORACLE_CEILING";

using schreier::FamilyParams;
using schreier::Int;
using schreier::Method;
using schreier::SequenceTable;
using schreier::TableFormat;

std::int64_t resolve_ceiling(const std::optional<std::int64_t>& flag) {
    if (flag) {
        if (*flag < 1) throw std::invalid_argument("--ceiling must be >= 1");
        return *flag;
    }
    if (const char* env = std::getenv(kCeilingEnvVar)) {
        char* end = nullptr;
        const long long parsed = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || parsed < 1) {
            throw std::invalid_argument(std::string(kCeilingEnvVar) +
                                        " must be a positive integer");
        }
        return parsed;
    }
    return schreier::kDefaultOracleCeiling;
}

// Stdout by default; --out writes a temp file in the target directory
// and renames it into place.
void emit(const std::string& content, const std::optional<std::string>& out_path) {
    if (!out_path) {
        std::cout << content;
        return;
    }
    const std::filesystem::path target(*out_path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        file << content;
        file.flush();
        if (!file) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("cannot write " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target);
}

struct FamilyFlags {
    std::int64_t p = 1;
    std::optional<std::int64_t> q;

    FamilyParams params() const { return FamilyParams(p, q); }
};

void add_family_flags(CLI::App* cmd, FamilyFlags& flags) {
    cmd->add_option("--p", flags.p, "Scale for the smallest element (min >= p|S|)")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--q", flags.q,
                    "Scale for the second-smallest element (min2 >= q|S|)")
        ->check(CLI::PositiveNumber);
}

SequenceTable table_by_method(const FamilyParams& params, std::int64_t max_n,
                              const std::string& method, std::int64_t ceiling) {
    if (method == "enum") return schreier::enumeration_table(params, max_n, ceiling);
    if (method == "closed") return schreier::closed_form_table(params, max_n);
    if (params.has_q()) {
        return schreier::seq_order_pq_coupled(params.p(), *params.q(), max_n);
    }
    return schreier::seq_order_p(params.p(), max_n);
}

// ---------------------------------------------------------------- count

std::string render_single(const FamilyParams& params, std::int64_t n, const Int& value,
                          Method method, TableFormat format) {
    const auto tag = schreier::method_name(method);
    std::ostringstream out;
    switch (format) {
        case TableFormat::plain:
            out << value.get_str() << '\n';
            break;
        case TableFormat::csv:
            out << "n,value,method\n" << n << ',' << value.get_str() << ',' << tag << '\n';
            break;
        case TableFormat::json: {
            nlohmann::ordered_json j;
            j["n"] = n;
            j["value"] = value.get_str();
            j["method"] = tag;
            out << j.dump(2) << '\n';
            break;
        }
        case TableFormat::bfile:
            out << "# " << params.str() << " method=" << tag << '\n'
                << n << ' ' << value.get_str() << '\n';
            break;
    }
    return out.str();
}

int run_count(const FamilyFlags& family, std::int64_t n, const std::string& method,
              TableFormat format, std::int64_t ceiling,
              const std::optional<std::string>& out_path) {
    const FamilyParams params = family.params();
    Int value;
    Method tag = Method::closed_form;
    if (method == "enum") {
        value = schreier::oracle_count(params, n, ceiling);
        tag = Method::enumeration;
    } else if (method == "closed") {
        value = params.has_q() ? schreier::count_order_pq(params.p(), *params.q(), n)
                               : schreier::count_order_p(params.p(), n);
        tag = Method::closed_form;
    } else {
        const SequenceTable table = table_by_method(params, n, "rec", ceiling);
        value = table.at(n);
        tag = table.method;
    }
    emit(render_single(params, n, value, tag, format), out_path);
    return kExitOk;
}

// ---------------------------------------------------------------- table

int run_table(const FamilyFlags& family, std::int64_t max_n, const std::string& method,
              TableFormat format, std::int64_t ceiling,
              const std::optional<std::string>& out_path) {
    const SequenceTable table = table_by_method(family.params(), max_n, method, ceiling);
    emit(schreier::render_table(table, format), out_path);
    return kExitOk;
}

// ---------------------------------------------------------------- verify

class CheckLog {
public:
    void pass(const std::string& name) { lines_.push_back("PASS " + name); }
    void fail(const std::string& name, const std::string& detail) {
        lines_.push_back("FAIL " + name + ": " + detail);
        if (!first_failure_) first_failure_ = name + ": " + detail;
    }
    void check(const std::string& name, bool ok, const std::string& detail) {
        ok ? pass(name) : fail(name, detail);
    }
    bool all_passed() const { return !first_failure_.has_value(); }

    std::string str() const {
        std::ostringstream out;
        for (const auto& line : lines_) out << line << '\n';
        if (first_failure_) {
            out << "RESULT: FAIL (" << *first_failure_ << ")\n";
        } else {
            out << "RESULT: PASS (" << lines_.size() << " checks)\n";
        }
        return out.str();
    }

private:
    std::vector<std::string> lines_;
    std::optional<std::string> first_failure_;
};

// First index where two tables disagree, as a printable detail.
std::optional<std::string> first_mismatch(const SequenceTable& a, const SequenceTable& b) {
    for (std::int64_t n = a.first_index; n <= a.last_index() && n <= b.last_index(); ++n) {
        if (a.at(n) != b.at(n)) {
            std::ostringstream out;
            out << "first mismatch at n=" << n << " (" << schreier::method_name(a.method)
                << "=" << a.at(n).get_str() << ", " << schreier::method_name(b.method)
                << "=" << b.at(n).get_str() << ")";
            return out.str();
        }
    }
    return std::nullopt;
}

void agreement_check(CheckLog& log, const std::string& name, const SequenceTable& a,
                     const SequenceTable& b) {
    auto detail = first_mismatch(a, b);
    log.check(name, !detail.has_value(), detail.value_or(""));
}

void partition_check(CheckLog& log, const std::string& name,
                     const schreier::PartitionReport& report) {
    if (report.all_pass()) {
        log.pass(name);
        return;
    }
    std::ostringstream detail;
    if (!report.exact_partition) {
        detail << "partition not exact";
    } else {
        for (const auto& part : report.parts) {
            if (part.pass()) continue;
            detail << "part " << part.part << " expected " << part.expected.get_str()
                   << " actual " << part.actual.get_str();
            break;
        }
    }
    if (report.counterexample) detail << " counterexample " << report.counterexample->str();
    log.fail(name, detail.str());
}

void verify_order_p(CheckLog& log, std::int64_t p, std::int64_t max_n,
                    std::int64_t ceiling) {
    const FamilyParams params(p);
    const SequenceTable enumerated = schreier::enumeration_table(params, max_n, ceiling);
    const SequenceTable closed = schreier::closed_form_table(params, max_n);
    const SequenceTable recurred = schreier::seq_order_p(p, max_n);

    agreement_check(log, "agreement enumeration/closed-form", enumerated, closed);
    agreement_check(log, "agreement closed-form/recurrence", closed, recurred);

    if (max_n >= p + 2) {
        const auto violation = schreier::check_recurrence(schreier::order_p_recurrence(p),
                                                          closed);
        std::ostringstream detail;
        if (violation) detail << "violated at n=" << *violation;
        log.check("recurrence identity", !violation.has_value(), detail.str());
    }

    for (std::int64_t n = 1; n + p + 1 <= max_n; ++n) {
        const auto report = schreier::verify_partition_order_p(p, n, ceiling);
        partition_check(log, "partition of index " + std::to_string(n + p + 1), report);
    }
}

void verify_order_pq(CheckLog& log, std::int64_t p, std::int64_t q, std::int64_t max_n,
                     std::int64_t ceiling) {
    const FamilyParams params(p, q);
    const SequenceTable enumerated = schreier::enumeration_table(params, max_n, ceiling);
    const SequenceTable closed = schreier::closed_form_table(params, max_n);
    const SequenceTable coupled = schreier::seq_order_pq_coupled(p, q, max_n);
    const SequenceTable uncoupled = schreier::seq_order_pq_uncoupled(p, q, max_n);

    agreement_check(log, "agreement enumeration/closed-form", enumerated, closed);
    agreement_check(log, "agreement closed-form/coupled", closed, coupled);
    agreement_check(log, "agreement closed-form/uncoupled", closed, uncoupled);

    // Companion sequence of order q, and the identity coupling the two
    // families: |M(n+2q+1)| = |M(n+2q)| + |M(n+q)| + (q-p)*g(n).
    const SequenceTable companion = schreier::closed_form_table(FamilyParams(q), max_n);
    {
        bool ok = true;
        std::ostringstream detail;
        const Int scale = q - p;
        for (std::int64_t n = 1; n + 2 * q + 1 <= max_n && ok; ++n) {
            const Int expected =
                closed.at(n + 2 * q) + closed.at(n + q) + scale * companion.at(n);
            if (closed.at(n + 2 * q + 1) != expected) {
                ok = false;
                detail << "violated at n=" << n;
            }
        }
        log.check("coupled identity", ok, detail.str());
    }

    // The three difference forms of the coupled identity, offset by 0, q
    // and q+1; subtracting them yields the uncoupled recurrence.
    {
        const Int scale = q - p;
        auto a = [&](std::int64_t k) -> const Int& { return closed.at(k + q); };
        bool ok = true;
        std::ostringstream detail;
        for (std::int64_t n = 1; n + 3 * q + 2 <= max_n && ok; ++n) {
            const bool eq1 = a(n + q + 1) - a(n + q) == a(n) + scale * companion.at(n);
            const bool eq2 =
                a(n + 2 * q + 1) - a(n + 2 * q) == a(n + q) + scale * companion.at(n + q);
            const bool eq3 = a(n + 2 * q + 2) - a(n + 2 * q + 1) ==
                             a(n + q + 1) + scale * companion.at(n + q + 1);
            if (!(eq1 && eq2 && eq3)) {
                ok = false;
                detail << "violated at n=" << n << " (eq1=" << eq1 << " eq2=" << eq2
                       << " eq3=" << eq3 << ")";
            }
        }
        log.check("difference identities", ok, detail.str());
    }

    if (max_n >= q + 2) {
        const auto violation =
            schreier::check_recurrence(schreier::order_p_recurrence(q), companion);
        std::ostringstream detail;
        if (violation) detail << "violated at n=" << *violation;
        log.check("companion recurrence identity", !violation.has_value(), detail.str());
    }

    const auto shifted = schreier::shifted_pq_values(closed);
    if (shifted.size() > static_cast<std::size_t>(2 * q + 2)) {
        const bool ok =
            schreier::verify_annihilates(schreier::uncoupled_pq_recurrence(q), shifted);
        log.check("uncoupled recurrence identity", ok, "violated on the shifted table");
    }

    for (std::int64_t n = 1; n + 2 * q + 1 <= max_n; ++n) {
        const auto report = schreier::verify_partition_order_pq(p, q, n, ceiling);
        partition_check(log, "partition of index " + std::to_string(n + 2 * q + 1), report);
    }
}

int run_verify(const FamilyFlags& family, std::int64_t max_n, std::int64_t ceiling,
               const std::optional<std::string>& out_path) {
    // The enumeration legs compare against every index, so the whole
    // range must sit under the ceiling.
    if (max_n > ceiling) throw schreier::OracleRangeError(max_n, ceiling);
    const FamilyParams params = family.params();
    CheckLog log;
    if (params.has_q()) {
        verify_order_pq(log, params.p(), *params.q(), max_n, ceiling);
    } else {
        verify_order_p(log, params.p(), max_n, ceiling);
    }
    emit(log.str(), out_path);
    return log.all_passed() ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- detect

int run_detect(const FamilyFlags& family, std::int64_t prefix_len, std::int64_t max_order,
               const std::optional<std::string>& out_path) {
    if (prefix_len < 1) throw std::invalid_argument("--prefix-len must be >= 1");
    const FamilyParams params = family.params();

    // Build the detection prefix past the leading-zero band: for the
    // single-parameter family the values from index p on; for the
    // two-parameter family the shifted view a_n = |M(n+q)|.
    std::vector<Int> prefix;
    schreier::LinearRecurrence family_rec = schreier::order_p_recurrence(params.p());
    if (params.has_q()) {
        const std::int64_t q = *params.q();
        const SequenceTable table =
            schreier::seq_order_pq_coupled(params.p(), q, q + prefix_len);
        prefix = schreier::shifted_pq_values(table);
        family_rec = schreier::uncoupled_pq_recurrence(q);
    } else {
        const SequenceTable table =
            schreier::seq_order_p(params.p(), params.p() - 1 + prefix_len);
        prefix.assign(table.values.begin() + (params.p() - 1), table.values.end());
    }

    const auto result = schreier::detect_minimal(prefix, max_order);

    std::ostringstream out;
    out << "prefix-length: " << prefix.size() << '\n';
    if (!result) {
        out << "detected-order: none (searched up to " << max_order << ")\n";
    } else {
        const auto& rec = result->recurrence;
        out << "detected-order: " << rec.order() << '\n';
        out << "coefficients:";
        for (const auto& c : rec.coefficients()) out << ' ' << c.get_str();
        out << '\n';
        out << "characteristic:";
        for (const auto& c : schreier::characteristic_coefficients(rec)) {
            out << ' ' << c.get_str();
        }
        out << '\n';
        out << "minimal: " << (result->minimal ? "true" : "false") << '\n';
    }
    out << "family-recurrence-order: " << family_rec.order() << '\n';
    out << "family-recurrence-annihilates: "
        << (schreier::verify_annihilates(family_rec, prefix) ? "true" : "false") << '\n';
    emit(out.str(), out_path);
    return kExitOk;
}

// ---------------------------------------------------------------- bench

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_ms(double seconds) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.3f", seconds * 1e3);
    return buffer;
}

int run_bench(const FamilyFlags& family, std::int64_t max_n, std::int64_t ceiling,
              const std::optional<std::string>& out_path) {
    const FamilyParams params = family.params();
    const bool pq = params.has_q();

    std::vector<std::string> methods{"enum", "closed", "rec"};
    if (pq) methods = {"enum", "closed", "coupled", "uncoupled"};

    auto build = [&](const std::string& method, std::int64_t n) {
        if (method == "enum") {
            schreier::enumeration_table(params, n, ceiling);
        } else if (method == "closed") {
            schreier::closed_form_table(params, n);
        } else if (method == "coupled") {
            schreier::seq_order_pq_coupled(params.p(), *params.q(), n);
        } else if (method == "uncoupled") {
            schreier::seq_order_pq_uncoupled(params.p(), *params.q(), n);
        } else {
            schreier::seq_order_p(params.p(), n);
        }
    };

    // Row j covers indices (chunk*(j-1), min(chunk*j, max_n)]; each cell
    // is the incremental cost of extending that method's table across
    // the row. The enumeration column is capped at the ceiling.
    const std::int64_t chunk = (max_n + 9) / 10;
    std::vector<std::pair<std::int64_t, std::int64_t>> rows;
    for (std::int64_t from = 1; from <= max_n; from += chunk) {
        rows.emplace_back(from, std::min(from + chunk - 1, max_n));
    }

    std::vector<std::vector<std::string>> cells(rows.size());
    std::vector<double> totals(methods.size(), 0.0);
    std::vector<bool> full_range(methods.size(), true);
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
        const std::string& method = methods[mi];
        double previous = 0.0;
        std::int64_t previous_end = 0;
        for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            std::int64_t end = rows[ri].second;
            if (method == "enum") end = std::min(end, ceiling);
            if (end <= previous_end) {
                cells[ri].push_back(""); // entirely beyond the ceiling
                full_range[mi] = false;
                continue;
            }
            const auto start = Clock::now();
            build(method, end);
            const double cumulative = seconds_since(start);
            const double delta = std::max(0.0, cumulative - previous);
            cells[ri].push_back(format_ms(delta));
            totals[mi] += delta;
            previous = cumulative;
            previous_end = end;
        }
    }

    // The recurrence legs should win on any range shared with another
    // method; report the comparison rather than failing on timing noise.
    double best_rec = -1.0;
    double best_other = -1.0;
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
        if (!full_range[mi]) continue;
        const bool is_rec = methods[mi] != "enum" && methods[mi] != "closed";
        double& slot = is_rec ? best_rec : best_other;
        if (slot < 0 || totals[mi] < slot) slot = totals[mi];
    }
    const bool rec_fastest = best_rec >= 0 && (best_other < 0 || best_rec <= best_other);

    std::ostringstream out;
    out << "n_from,n_to";
    for (const auto& method : methods) out << ',' << method << "_ms";
    out << '\n';
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        out << rows[ri].first << ',' << rows[ri].second;
        for (const auto& cell : cells[ri]) out << ',' << cell;
        out << '\n';
    }
    out << "# rec_fastest=" << (rec_fastest ? "true" : "false") << '\n';
    if (!rec_fastest) {
        std::cerr << "warning: recurrence leg was not the fastest on the shared range\n";
    }
    emit(out.str(), out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counting sequences for generalized Schreier set families"};
    app.require_subcommand(1);

    FamilyFlags family;
    std::optional<std::int64_t> ceiling_flag;
    std::optional<std::string> out_path;
    std::string method = "closed";
    std::string format = "plain";
    std::int64_t n = 1;
    std::int64_t max_n = 1;
    std::int64_t prefix_len = 12;
    std::int64_t max_order = 8;

    const auto add_common = [&](CLI::App* cmd) {
        add_family_flags(cmd, family);
        cmd->add_option("--ceiling", ceiling_flag,
                        "Enumeration ceiling (default 40; env " +
                            std::string(kCeilingEnvVar) + ")")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--out", out_path, "Write output to a file (atomic rename)");
    };
    const auto add_method = [&](CLI::App* cmd) {
        cmd->add_option("--method", method, "Computation path")
            ->check(CLI::IsMember({"enum", "closed", "rec"}));
    };
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"plain", "csv", "json", "bfile"}));
    };

    CLI::App* count = app.add_subcommand("count", "Print a single term");
    add_common(count);
    add_method(count);
    add_format(count);
    count->add_option("--n", n, "Required maximum element")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* table = app.add_subcommand("table", "Print terms n = 1..max-n");
    add_common(table);
    add_method(table);
    add_format(table);
    table->add_option("--max-n", max_n, "Largest index")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* verify =
        app.add_subcommand("verify", "Cross-check every computation path and bijection");
    add_common(verify);
    verify->add_option("--max-n", max_n, "Largest index")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* detect =
        app.add_subcommand("detect", "Recover the minimal linear recurrence from counts");
    add_family_flags(detect, family);
    detect->add_option("--out", out_path, "Write output to a file (atomic rename)");
    detect->add_option("--prefix-len", prefix_len, "Number of terms to fit")
        ->required()
        ->check(CLI::PositiveNumber);
    detect->add_option("--max-order", max_order, "Largest order to search")
        ->check(CLI::PositiveNumber);

    CLI::App* bench =
        app.add_subcommand("bench", "Wall time per method per index range (CSV)");
    add_common(bench);
    bench->add_option("--max-n", max_n, "Largest index")
        ->required()
        ->check(CLI::PositiveNumber);

    // `table` defaults to the recurrence path; `count` to the closed form.
    try {
        app.parse(argc, argv);
        if (table->parsed() && table->count("--method") == 0) method = "rec";
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const std::int64_t ceiling = resolve_ceiling(ceiling_flag);
        const auto fmt = schreier::format_from_name(format);
        if (count->parsed()) {
            return run_count(family, n, method, *fmt, ceiling, out_path);
        }
        if (table->parsed()) {
            return run_table(family, max_n, method, *fmt, ceiling, out_path);
        }
        if (verify->parsed()) {
            return run_verify(family, max_n, ceiling, out_path);
        }
        if (detect->parsed()) {
            return run_detect(family, prefix_len, max_order, out_path);
        }
        if (bench->parsed()) {
            return run_bench(family, max_n, ceiling, out_path);
        }
        return kExitUsage;
    } catch (const schreier::OracleRangeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCeiling;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}
