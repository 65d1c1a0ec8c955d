#pragma once

#include <string>
#include <vector>

namespace sbs::report {

// A rendered table: preformatted cells, first columns are labels.
struct Table {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t);
std::string to_markdown(const Table& t);
// {"name": ..., "columns": [...], "rows": [[...], ...]} — see the shipped schema.
std::string tables_to_json(const std::vector<Table>& tables);

// Reads an artifact CSV back into a Table (header + string cells).
Table table_from_csv(const std::string& name, const std::string& csv_content);

} // namespace sbs::report
