#ifndef PST_GROUP_FILE_HPP
#define PST_GROUP_FILE_HPP

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "group.hpp"

namespace pst
{

namespace detail
{

struct GroupRecord
{
  std::optional<std::string> name;
  std::optional<std::size_t> degree;
  std::optional<std::string> gens;
  std::size_t header_line = 0, gens_line = 0, gens_column = 0;
};

inline std::string trim(std::string const &s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/**
 * Parse "(0 1)(2 3), (0 1 2)" into permutations.  Columns are 1-based and
 * relative to the start of the line, offset by `column0`.
 */
inline std::vector<Perm> parse_cycle_lists(std::string const &text, std::size_t degree,
                                           std::size_t line, std::size_t column0)
{
  std::vector<Perm> out;
  std::size_t i = 0;
  auto col = [&](std::size_t at) { return column0 + at; };
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
      ++i;
  };
  skip_space();
  if (i == text.size())
    return out;
  while (true) {
    std::vector<std::uint32_t> images(degree);
    for (std::size_t x = 0; x < degree; ++x)
      images[x] = static_cast<std::uint32_t>(x);
    std::vector<bool> used(degree, false);
    skip_space();
    if (i == text.size() || text[i] != '(')
      throw parse_error("expected '('", line, col(i));
    while (i < text.size() && text[i] == '(') {
      ++i;
      std::vector<std::uint32_t> cycle;
      std::vector<std::size_t> at;
      while (true) {
        skip_space();
        if (i == text.size())
          throw parse_error("unterminated cycle", line, col(i));
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw parse_error(std::string("unexpected character '") + text[i] + "'",
                            line, col(i));
        std::size_t value = 0, start = i;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc())
          throw parse_error("bad integer", line, col(start));
        i = static_cast<std::size_t>(ptr - text.data());
        if (value >= degree)
          throw parse_error("point " + std::to_string(value) + " outside degree " +
                              std::to_string(degree),
                            line, col(start));
        if (used[value])
          throw parse_error("cycles are not disjoint at point " + std::to_string(value),
                            line, col(start));
        used[value] = true;
        cycle.push_back(static_cast<std::uint32_t>(value));
        at.push_back(start);
      }
      for (std::size_t k = 0; k < cycle.size(); ++k)
        images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    out.emplace_back(std::move(images));
    skip_space();
    if (i == text.size())
      break;
    if (text[i] != ',')
      throw parse_error("expected ',' between generators", line, col(i));
    ++i;
  }
  return out;
}

inline Group finish_record(GroupRecord const &r)
{
  if (!r.name)
    throw parse_error("record without name", r.header_line, 1);
  if (!r.degree)
    throw parse_error("record without degree", r.header_line, 1);
  if (!r.gens)
    throw parse_error("record without gens", r.header_line, 1);
  auto gens = parse_cycle_lists(*r.gens, *r.degree, r.gens_line, r.gens_column);
  return Group::from_generators(gens, *r.name, std::max<std::size_t>(*r.degree, 1));
}

} // namespace detail

/// Parse group records from text (see README for the format).
inline std::vector<Group> parse_group_text(std::string const &text)
{
  std::vector<Group> out;
  std::optional<detail::GroupRecord> current;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  auto flush = [&] {
    if (current)
      out.push_back(detail::finish_record(*current));
    current.reset();
  };
  while (std::getline(in, raw)) {
    ++line;
    auto s = detail::trim(raw);
    if (s.empty()) {
      flush();
      continue;
    }
    if (s == "[group]") {
      flush();
      current.emplace();
      current->header_line = line;
      continue;
    }
    auto first = raw.find_first_not_of(" \t") + 1;
    if (!current)
      throw parse_error("expected [group] header", line, first);
    auto eq = raw.find('=');
    if (eq == std::string::npos)
      throw parse_error("expected 'key = value'", line, first);
    auto key = detail::trim(raw.substr(0, eq));
    auto value = detail::trim(raw.substr(eq + 1));
    auto value_column = raw.find_first_not_of(" \t", eq + 1);
    if (value_column == std::string::npos)
      value_column = raw.size();
    if (key == "name") {
      if (value.empty() || value.find_first_of(" \t") != std::string::npos)
        throw parse_error("name must be a single token", line, value_column + 1);
      current->name = value;
    } else if (key == "degree") {
      std::size_t d = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), d);
      if (ec != std::errc() || ptr != value.data() + value.size())
        throw parse_error("degree must be a non-negative integer", line,
                          value_column + 1);
      current->degree = d;
    } else if (key == "gens") {
      current->gens = raw.substr(eq + 1);
      current->gens_line = line;
      current->gens_column = eq + 2;
    } else {
      throw parse_error("unknown key '" + key + "'", line, first);
    }
  }
  flush();
  return out;
}

inline std::vector<Group> parse_group_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw usage_error("cannot open group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_group_text(buf.str());
  } catch (parse_error const &e) {
    throw parse_error(e.message() + " (in " + path + ")", e.line(), e.column());
  }
}

/// Inverse of parse_group_text for permutation groups.
inline std::string format_group_records(std::vector<Group> const &groups)
{
  std::string out;
  for (auto const &G : groups) {
    if (!G.has_permutations())
      throw usage_error(G.name() + " has no permutation representation");
    if (!out.empty())
      out += '\n';
    out += "[group]\nname = " + G.name() + "\ndegree = " + std::to_string(G.degree()) +
           "\ngens = ";
    bool first = true;
    for (auto const &g : G.generators()) {
      if (!first)
        out += ", ";
      out += g.to_cycle_string();
      first = false;
    }
    out += '\n';
  }
  return out;
}

} // namespace pst

#endif // PST_GROUP_FILE_HPP
