#include "sbs/report.hpp"

#include <algorithm>
#include <cstdlib>

#include <nlohmann/json.hpp>

#include "sbs/csv.hpp"
#include "sbs/errors.hpp"

namespace sbs::report {

std::string to_csv(const Table& t) {
    std::string out = util::csv_line(t.header);
    for (const auto& row : t.rows) out += util::csv_line(row);
    return out;
}

namespace {

bool looks_numeric(const std::string& s) {
    if (s.empty()) return false;
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end && *end == '\0';
}

} // namespace

std::string to_markdown(const Table& t) {
    size_t ncols = t.header.size();
    std::vector<size_t> width(ncols, 0);
    std::vector<bool> numeric(ncols, true);
    for (size_t c = 0; c < ncols; ++c) width[c] = t.header[c].size();
    for (const auto& row : t.rows) {
        for (size_t c = 0; c < ncols && c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
            if (!row[c].empty() && !looks_numeric(row[c])) numeric[c] = false;
        }
    }

    auto pad = [&](const std::string& s, size_t c) {
        std::string cell = s;
        size_t n = width[c] > cell.size() ? width[c] - cell.size() : 0;
        if (numeric[c]) return std::string(n, ' ') + cell;
        return cell + std::string(n, ' ');
    };

    std::string out;
    out += "|";
    for (size_t c = 0; c < ncols; ++c) out += " " + pad(t.header[c], c) + " |";
    out += "\n|";
    for (size_t c = 0; c < ncols; ++c) {
        if (numeric[c])
            out += " " + std::string(width[c] > 0 ? width[c] - 1 : 0, '-') + ": |";
        else
            out += " " + std::string(width[c], '-') + " |";
    }
    out += "\n";
    for (const auto& row : t.rows) {
        out += "|";
        for (size_t c = 0; c < ncols; ++c) {
            const std::string& cell = c < row.size() ? row[c] : std::string();
            out += " " + pad(cell, c) + " |";
        }
        out += "\n";
    }
    return out;
}

std::string tables_to_json(const std::vector<Table>& tables) {
    nlohmann::ordered_json doc;
    doc["tables"] = nlohmann::ordered_json::array();
    for (const auto& t : tables) {
        nlohmann::ordered_json jt;
        jt["name"] = t.name;
        jt["columns"] = t.header;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) rows.push_back(row);
        jt["rows"] = std::move(rows);
        doc["tables"].push_back(std::move(jt));
    }
    return doc.dump(2) + "\n";
}

Table table_from_csv(const std::string& name, const std::string& csv_content) {
    auto records = util::parse_csv(csv_content);
    if (records.empty()) throw ConfigError("table '" + name + "' is empty");
    Table t;
    t.name = name;
    t.header = records.front();
    t.rows.assign(records.begin() + 1, records.end());
    return t;
}

} // namespace sbs::report
