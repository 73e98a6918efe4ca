#pragma once

#include <istream>
#include <string>

#include "exactgm/objective.hpp"

namespace exactgm {

/**
 * Reads a graph in either supported format, detected from the first
 * significant line:
 *
 *   matrix     first line n, then n rows of n characters in {0,1}
 *   edge list  header "n=<k>", then 1-based "u v" pairs, symmetrized
 *
 * Both formats tolerate extra whitespace and skip blank lines and lines
 * starting with '#'. Errors carry 1-based line numbers.
 */
AdjacencyMatrix parse_graph(std::istream& in);
AdjacencyMatrix parse_graph_text(const std::string& text);
AdjacencyMatrix parse_graph_file(const std::string& path);

/**
 * Reads a separable quadratic objective:
 *
 *   n=<k>
 *   quad <i> <j> <rational>   coefficient of x_{ij}^2 (must be >= 0)
 *   lin  <i> <j> <rational>   coefficient of x_{ij}
 *
 * Indices are 1-based; rationals accept "p/q", integer, and decimal forms.
 */
SeparableQuadraticObjective parse_objective(std::istream& in);
SeparableQuadraticObjective parse_objective_file(const std::string& path);

}  // namespace exactgm
