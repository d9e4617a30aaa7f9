#pragma once

#include <pilearn/dataset.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace pilearn {

/// Header row of variable names, then one row of non-negative integers per
/// case. Without a schema each cardinality is max(2, largest value + 1).
/// With a schema the header must list the schema's variables in order.
/// Throws InputError on ragged rows, non-integer cells, or out-of-range values.
Dataset read_dataset_csv(std::istream& in, const std::optional<Domain>& schema = std::nullopt);
Dataset parse_dataset_csv(const std::filesystem::path& path, const std::optional<Domain>& schema = std::nullopt);

void write_dataset_csv(std::ostream& out, const Dataset& data);

/// Sidecar schema: {"variables": [{"name": ..., "cardinality": ...}, ...]}.
Domain parse_schema_json(const std::filesystem::path& path);
Domain schema_from_json(const std::string& text);
std::string schema_to_json(const Domain& domain);

}  // namespace pilearn
