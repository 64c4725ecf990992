#ifndef INVOLUTE_PARSER_HPP
#define INVOLUTE_PARSER_HPP

#include "involute/rational.hpp"
#include "involute/system.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace involute {

struct SourceSpan {
  std::string file;
  std::size_t line = 1;
  std::size_t column_begin = 1;
  std::size_t column_end = 2;  // exclusive
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, std::string message, std::vector<std::string> expected = {});

  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::string message_;
  std::vector<std::string> expected_;
};

struct ParseOptions {
  std::string file = "<input>";
  /// Replaces the declared value of each named parameter. Naming a
  /// parameter the file does not declare is a ParseError.
  std::map<std::string, Rational> overrides;
};

struct ParsedFile {
  PDESystem system;
  /// Effective parameter values, overrides applied.
  std::map<std::string, Rational> parameters;
};

/// Throws ParseError and nothing else.
ParsedFile parse_file(std::string_view text, const ParseOptions& options = {});

inline PDESystem parse(std::string_view text, const ParseOptions& options = {}) {
  return parse_file(text, options).system;
}

/// Canonical DSL text; parse(serialize(s)) == s.
std::string serialize(const PDESystem& s);

}  // namespace involute

#endif  // INVOLUTE_PARSER_HPP
