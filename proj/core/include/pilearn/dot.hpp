#pragma once

#include <pilearn/graph.hpp>
#include <pilearn/pi_oracle.hpp>
#include <pilearn/variable.hpp>

#include <filesystem>
#include <string>

namespace pilearn {

/// Undirected DOT text, nodes in domain order, edges in canonical link order.
/// Colored links are drawn dotted; black links solid.
std::string to_dot(const Graph& g, const Domain& domain);
std::string to_dot(const ColoredGraph& g, const Domain& domain);

/// Throws InputError if the file cannot be written.
void export_dot(const Graph& g, const Domain& domain, const std::filesystem::path& path);
void export_dot(const ColoredGraph& g, const Domain& domain, const std::filesystem::path& path);

}  // namespace pilearn
