#include <pilearn/csv.hpp>

#include <pilearn/error.hpp>

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pilearn {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

std::string where(std::size_t line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

Dataset read_dataset_csv(std::istream& in, const std::optional<Domain>& schema) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> names;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        for (auto cell : split(line)) {
            if (cell.empty()) throw InputError(where(line_no) + "empty column name in header");
            names.emplace_back(cell);
        }
        break;
    }
    if (names.empty()) throw InputError("CSV has no header row");
    if (schema && schema->names() != names) {
        throw InputError("CSV header does not match the schema's variables");
    }

    const auto width = names.size();
    std::vector<State> values;
    std::vector<State> max_seen(width, 0);
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split(line);
        if (cells.size() != width) {
            throw InputError(where(line_no) + "ragged row: expected " + std::to_string(width) + " cells, got " +
                             std::to_string(cells.size()));
        }
        for (std::size_t j = 0; j < width; ++j) {
            const auto cell = cells[j];
            State v = 0;
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) {
                throw InputError(where(line_no) + "non-integer cell '" + std::string(cell) + "' in column '" +
                                 names[j] + "'");
            }
            if (schema && v >= (*schema)[j].cardinality) {
                throw InputError(where(line_no) + "value " + std::to_string(v) + " out of range for '" + names[j] +
                                 "' (cardinality " + std::to_string((*schema)[j].cardinality) + ")");
            }
            max_seen[j] = std::max(max_seen[j], v);
            values.push_back(v);
        }
    }

    Domain domain;
    if (schema) {
        domain = *schema;
    } else {
        std::vector<std::pair<std::string, std::size_t>> vars;
        for (std::size_t j = 0; j < width; ++j) {
            vars.emplace_back(names[j], std::max<std::size_t>(2, std::size_t{max_seen[j]} + 1));
        }
        try {
            domain = Domain(std::move(vars));
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    return Dataset(std::move(domain), std::move(values));
}

Dataset parse_dataset_csv(const std::filesystem::path& path, const std::optional<Domain>& schema) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open dataset '" + path.string() + "'");
    return read_dataset_csv(in, schema);
}

void write_dataset_csv(std::ostream& out, const Dataset& data) {
    const auto& dom = data.domain();
    for (std::size_t j = 0; j < dom.size(); ++j) out << (j ? "," : "") << dom[j].name;
    out << '\n';
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto row = data.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
        out << '\n';
    }
}

Domain schema_from_json(const std::string& text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        std::vector<std::pair<std::string, std::size_t>> vars;
        for (const auto& v : doc.at("variables")) {
            vars.emplace_back(v.at("name").get<std::string>(), v.at("cardinality").get<std::size_t>());
        }
        return Domain(std::move(vars));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid schema JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("invalid schema: ") + e.what());
    }
}

Domain parse_schema_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open schema '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return schema_from_json(buf.str());
}

std::string schema_to_json(const Domain& domain) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : domain.variables()) vars.push_back({{"name", v.name}, {"cardinality", v.cardinality}});
    return nlohmann::json{{"variables", vars}}.dump(2) + "\n";
}

}  // namespace pilearn
