#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "schreier/sequence_table.hpp"

namespace schreier {

enum class TableFormat { plain, csv, json, bfile };

std::optional<TableFormat> format_from_name(std::string_view name);
std::string_view format_name(TableFormat format);

/// Renders a table byte-deterministically:
///   plain  one decimal value per line
///   csv    header "n,value,method", one row per term
///   json   object {params, method, first_index, values: [decimal strings]}
///   bfile  "# p=.. [q=..] method=.." header, then "n value" lines
/// All output ends with a newline and uses "\n" line endings.
std::string render_table(const SequenceTable& table, TableFormat format);

/// Parses text produced by render_table(..., TableFormat::bfile) back
/// into an identical SequenceTable. Throws std::invalid_argument on
/// malformed input.
SequenceTable parse_bfile(std::string_view text);

} // namespace schreier
