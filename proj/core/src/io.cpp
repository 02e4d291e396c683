#include "schreier/io.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace schreier {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::enumeration: return "enumeration";
        case Method::closed_form: return "closed-form";
        case Method::recurrence_coupled: return "recurrence-coupled";
        case Method::recurrence_uncoupled: return "recurrence-uncoupled";
    }
    throw std::invalid_argument("method_name: unknown method");
}

Method method_from_name(std::string_view name) {
    if (name == "enumeration") return Method::enumeration;
    if (name == "closed-form") return Method::closed_form;
    if (name == "recurrence-coupled") return Method::recurrence_coupled;
    if (name == "recurrence-uncoupled") return Method::recurrence_uncoupled;
    throw std::invalid_argument("method_from_name: unknown method '" + std::string(name) +
                                "'");
}

std::optional<TableFormat> format_from_name(std::string_view name) {
    if (name == "plain") return TableFormat::plain;
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    if (name == "bfile") return TableFormat::bfile;
    return std::nullopt;
}

std::string_view format_name(TableFormat format) {
    switch (format) {
        case TableFormat::plain: return "plain";
        case TableFormat::csv: return "csv";
        case TableFormat::json: return "json";
        case TableFormat::bfile: return "bfile";
    }
    throw std::invalid_argument("format_name: unknown format");
}

namespace {

std::string render_plain(const SequenceTable& table) {
    std::ostringstream out;
    for (const Int& v : table.values) out << to_decimal(v) << '\n';
    return out.str();
}

std::string render_csv(const SequenceTable& table) {
    std::ostringstream out;
    out << "n,value,method\n";
    const auto tag = method_name(table.method);
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        out << table.first_index + static_cast<std::int64_t>(i) << ','
            << to_decimal(table.values[i]) << ',' << tag << '\n';
    }
    return out.str();
}

std::string render_json(const SequenceTable& table) {
    nlohmann::ordered_json j;
    j["params"]["p"] = table.params.p();
    if (table.params.has_q()) j["params"]["q"] = *table.params.q();
    j["method"] = method_name(table.method);
    j["first_index"] = table.first_index;
    auto values = nlohmann::ordered_json::array();
    for (const Int& v : table.values) values.push_back(to_decimal(v));
    j["values"] = std::move(values);
    return j.dump(2) + "\n";
}

std::string render_bfile(const SequenceTable& table) {
    std::ostringstream out;
    out << "# p=" << table.params.p();
    if (table.params.has_q()) out << " q=" << *table.params.q();
    out << " method=" << method_name(table.method) << '\n';
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        out << table.first_index + static_cast<std::int64_t>(i) << ' '
            << to_decimal(table.values[i]) << '\n';
    }
    return out.str();
}

[[noreturn]] void bad_bfile(const std::string& why) {
    throw std::invalid_argument("parse_bfile: " + why);
}

} // namespace

std::string render_table(const SequenceTable& table, TableFormat format) {
    switch (format) {
        case TableFormat::plain: return render_plain(table);
        case TableFormat::csv: return render_csv(table);
        case TableFormat::json: return render_json(table);
        case TableFormat::bfile: return render_bfile(table);
    }
    throw std::invalid_argument("render_table: unknown format");
}

SequenceTable parse_bfile(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;

    std::optional<std::int64_t> p, q;
    std::optional<Method> method;
    bool saw_header = false;

    std::optional<std::int64_t> first_index;
    std::int64_t expected_n = 0;
    std::vector<Int> values;

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (saw_header) bad_bfile("duplicate header line");
            saw_header = true;
            std::istringstream header(line.substr(1));
            std::string token;
            while (header >> token) {
                const auto eq = token.find('=');
                if (eq == std::string::npos) bad_bfile("malformed header token '" + token + "'");
                const std::string key = token.substr(0, eq);
                const std::string value = token.substr(eq + 1);
                if (key == "p" || key == "q") {
                    std::int64_t parsed = 0;
                    try {
                        parsed = std::stoll(value);
                    } catch (const std::exception&) {
                        bad_bfile("malformed header value '" + value + "'");
                    }
                    (key == "p" ? p : q) = parsed;
                } else if (key == "method") {
                    method = method_from_name(value);
                } else {
                    bad_bfile("unknown header key '" + key + "'");
                }
            }
            continue;
        }
        std::istringstream row(line);
        std::int64_t n = 0;
        std::string value_text;
        if (!(row >> n >> value_text)) bad_bfile("malformed data line '" + line + "'");
        std::string extra;
        if (row >> extra) bad_bfile("trailing content on data line '" + line + "'");
        if (!first_index) {
            first_index = n;
            expected_n = n;
        }
        if (n != expected_n) bad_bfile("indices must be consecutive");
        ++expected_n;
        try {
            values.emplace_back(value_text, 10);
        } catch (const std::invalid_argument&) {
            bad_bfile("malformed value '" + value_text + "'");
        }
    }

    if (!saw_header || !p || !method) bad_bfile("missing header");
    if (values.empty()) bad_bfile("no data lines");
    return SequenceTable{FamilyParams(*p, q), *first_index, std::move(values), *method};
}

} // namespace schreier
