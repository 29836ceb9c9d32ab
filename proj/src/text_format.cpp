#include "hypersched/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hypersched {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

int parse_int(const std::string& tok, int line, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  }
  return value;
}

Rational parse_rational(const std::string& tok, int line) {
  try {
    return Rational::parse(tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

int line_of_edge(const HypergraphText& parsed, const std::vector<LinkId>& edge) {
  const LinkSet target = LinkSet::from_ids(edge);
  for (std::size_t k = 0; k < parsed.edges.size(); ++k) {
    bool in_range = std::all_of(parsed.edges[k].begin(), parsed.edges[k].end(),
                                [&](LinkId id) { return id >= 0 && id < kMaxLinks; });
    if (in_range && LinkSet::from_ids(parsed.edges[k]) == target) return parsed.edge_lines[k];
  }
  return 0;
}

std::string one_based(const std::vector<LinkId>& ids) {
  std::string out;
  for (LinkId id : ids) out += (out.empty() ? "" : " ") + std::to_string(id + 1);
  return out;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

HypergraphText parse_hypergraph_text(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty hypergraph file");
  const Line& header = lines.front();
  if (header.tokens[0] != "links" || header.tokens.size() != 2) {
    throw ParseError(header.number, "expected 'links N' as the first entry");
  }
  HypergraphText parsed;
  parsed.num_links = parse_int(header.tokens[1], header.number, "a link count");
  if (parsed.num_links < 1 || parsed.num_links > kMaxLinks) {
    throw ParseError(header.number, "link count must be between 1 and " + std::to_string(kMaxLinks));
  }
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0] != "edge") throw ParseError(line.number, "expected 'edge', got '" + line.tokens[0] + "'");
    std::vector<LinkId> edge;
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      const int label = parse_int(line.tokens[t], line.number, "a link label");
      if (label < 1 || label > parsed.num_links) {
        throw ParseError(line.number, "link label " + line.tokens[t] + " outside [1, " +
                                          std::to_string(parsed.num_links) + "]");
      }
      edge.push_back(label - 1);
    }
    parsed.edges.push_back(std::move(edge));
    parsed.edge_lines.push_back(line.number);
  }
  return parsed;
}

Hypergraph build_hypergraph(const HypergraphText& parsed, bool minimalize) {
  try {
    return minimalize ? Hypergraph::minimalize(parsed.num_links, parsed.edges)
                      : Hypergraph::create(parsed.num_links, parsed.edges);
  } catch (const InvalidHypergraph& e) {
    const HypergraphError& error = e.error();
    const int line = line_of_edge(parsed, error.edge);
    switch (error.kind) {
      case HypergraphError::Kind::kEdgeTooSmall:
        throw ParseError(line, "edge {" + one_based(error.edge) + "} needs at least two distinct links");
      case HypergraphError::Kind::kNotAntichain:
        throw ParseError(line, "edge {" + one_based(error.edge) + "} is contained in edge {" +
                                   one_based(error.other_edge) + "} (use --minimalize)");
      default:
        throw ParseError(line, error.message());
    }
  }
}

DemandVector parse_demand_text(std::string_view text, int num_links) {
  const auto lines = tokenize(text);
  if (lines.size() != 1 || lines.front().tokens[0] != "demand") {
    throw ParseError(lines.empty() ? 0 : lines.front().number, "expected a single 'demand v1 ... vN' line");
  }
  const Line& line = lines.front();
  if (static_cast<int>(line.tokens.size()) - 1 != num_links) {
    throw ParseError(line.number, "expected " + std::to_string(num_links) + " demand values, got " +
                                      std::to_string(line.tokens.size() - 1));
  }
  std::vector<Rational> values;
  for (std::size_t t = 1; t < line.tokens.size(); ++t) {
    Rational v = parse_rational(line.tokens[t], line.number);
    if (v.sign() < 0 || v > Rational(1)) {
      throw ParseError(line.number, "demand of link " + std::to_string(t) + " is " + v.to_string() +
                                        ", outside [0, 1]");
    }
    values.push_back(std::move(v));
  }
  return DemandVector(std::move(values));
}

WeightMatrix parse_weight_text(std::string_view text, int num_links) {
  const auto lines = tokenize(text);
  if (static_cast<int>(lines.size()) != num_links) {
    throw ParseError(lines.empty() ? 0 : lines.back().number,
                     "expected " + std::to_string(num_links) + " matrix rows, got " + std::to_string(lines.size()));
  }
  std::vector<std::vector<Rational>> rows;
  for (const Line& line : lines) {
    if (static_cast<int>(line.tokens.size()) != num_links) {
      throw ParseError(line.number, "expected " + std::to_string(num_links) + " entries, got " +
                                        std::to_string(line.tokens.size()));
    }
    std::vector<Rational> row;
    for (const auto& tok : line.tokens) row.push_back(parse_rational(tok, line.number));
    rows.push_back(std::move(row));
  }
  return WeightMatrix(rows);
}

Permutation parse_order(std::string_view text, int num_links) {
  std::vector<LinkId> image;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const std::string tok(text.substr(pos, comma - pos));
    const int label = parse_int(tok, 0, "a link label in --order");
    if (label < 1 || label > num_links) throw ParseError(0, "--order label " + tok + " out of range");
    image.push_back(label - 1);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  if (static_cast<int>(image.size()) != num_links) {
    throw ParseError(0, "--order must list all " + std::to_string(num_links) + " links");
  }
  try {
    return Permutation(std::move(image));
  } catch (const std::invalid_argument&) {
    throw ParseError(0, "--order must list every link exactly once");
  }
}

std::string format_hypergraph(const Hypergraph& h) {
  std::string out = "links " + std::to_string(h.num_links()) + "\n";
  for (LinkSet e : h.edges()) out += "edge " + format_one_based(e) + "\n";
  return out;
}

std::string format_demand(const DemandVector& demand) {
  std::string out = "demand";
  for (const auto& v : demand.values()) out += " " + v.to_string();
  return out;
}

}  // namespace hypersched
