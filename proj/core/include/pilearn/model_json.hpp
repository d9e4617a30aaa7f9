#pragma once

#include <pilearn/generators.hpp>
#include <pilearn/joint_table.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace pilearn {

// Model files are JSON objects with a "variables" array of
// {"name", "cardinality"} entries plus exactly one of:
//
//   "joint": [{"assignment": [0, 1, ...], "p": 0.02}, ...]
//       Assignments not listed have probability 0. Total mass must be within
//       1e-6 of 1 and is renormalized.
//
//   "bayes": {"nodes": [{"name": ..., "parents": [...], "cpt": [[...], ...]}, ...]}
//       One node per variable; cpt rows follow the parents' mixed-radix order.

/// Throws InputError on malformed JSON or an invalid model.
JointTable model_from_json(std::string_view text);
JointTable parse_model_json(const std::filesystem::path& path);

std::string joint_to_json(const JointTable& joint, std::string_view name = {});
std::string bayes_to_json(const BayesSpec& spec, std::string_view name = {});

/// Built-in names "table1" and "music-box" (also "music_box"), else a file path.
JointTable load_model(std::string_view name_or_path);

}  // namespace pilearn
