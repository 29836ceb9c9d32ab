#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypersched/feasibility.hpp"
#include "hypersched/greedy.hpp"
#include "hypersched/hypergraph.hpp"

namespace hypersched {

/// Input error tied to a 1-based line number (0 when no line applies).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Hypergraph file as read, before validation. Edges are 0-based.
struct HypergraphText {
  int num_links = 0;
  std::vector<std::vector<LinkId>> edges;
  std::vector<int> edge_lines;
};

/// Format:
///   # comment
///   links N
///   edge a b c ...     (1-based labels, repeated)
HypergraphText parse_hypergraph_text(std::string_view text);

/// Validates (or minimalizes) parsed text. Validation failures surface as
/// ParseError pointing at the offending edge line.
Hypergraph build_hypergraph(const HypergraphText& parsed, bool minimalize);

/// One `demand v1 ... vN` line of rational literals.
DemandVector parse_demand_text(std::string_view text, int num_links);

/// N non-comment lines of N rationals each.
WeightMatrix parse_weight_text(std::string_view text, int num_links);

/// Comma-separated 1-based link labels forming a permutation, e.g. `3,1,2`.
Permutation parse_order(std::string_view text, int num_links);

std::string format_hypergraph(const Hypergraph& h);
std::string format_demand(const DemandVector& demand);

}  // namespace hypersched
