#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sails/cfrac.hpp"

namespace sails::cli {

/// Parse failure at a byte offset of the input text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::ParseError, "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A surd given by value, or a continued fraction given by its letters.
using SurdSpec = std::variant<QuadraticSurd, PeriodicCF>;

/// Grammar (ASCII only, blanks ignored between tokens):
///   expression   integers, + - * /, parentheses and sqrt(...) of a
///                nonnegative rational, e.g. "(1+sqrt(2))/3", "sqrt(7/3)"
///   root+ A B C  larger real root of A t^2 + B t + C ("root-" the smaller)
///   CF literal   "[a0; a1, (p1, p2)]" or "[(p1, p2)]"
/// Rational values are rejected with RationalValue.
SurdSpec parse_spec(std::string_view text);

QuadraticSurd to_surd(const SurdSpec& spec);

/// "k0:k1" with k0 <= k1.
std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text);

/// Writes through a sibling temporary and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

/// Runs the `sails` command line; args excludes the program name. Returns 0
/// on success, 1 on bad input and 2 when a checked invariant fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sails::cli
