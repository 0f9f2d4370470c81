#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "liking/design.hpp"
#include "liking/digraph.hpp"
#include "liking/matching.hpp"

namespace liking::io {

/// Input rejected; the message carries the 1-based line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const noexcept { return line_; }

  private:
    int line_;
};

struct ParseWarning {
    int line = 0;
    std::string message;
};

// Text formats ('#' starts a comment, blank lines are ignored):
//   digraph <n>      followed by one arc "u v" per line
//   design <v> <b>   followed by one block per line (variety labels)
//   family <m> <k>   followed by one set per line; "-" is the empty set
// Serialization sorts arcs and set elements, so parse/serialize normalizes.

Digraph parse_digraph(std::string_view text, std::vector<ParseWarning>* warnings = nullptr);
std::string serialize_digraph(const Digraph& d);

Design parse_design(std::string_view text, std::vector<ParseWarning>* warnings = nullptr);
std::string serialize_design(const Design& d);

SetFamily parse_family(std::string_view text);
std::string serialize_family(const SetFamily& f);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace liking::io
