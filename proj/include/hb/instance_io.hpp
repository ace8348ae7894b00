#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "hb/exact_geometry.hpp"

namespace hb {

/// A point file: one "x y" pair of decimal integers per line, '#' starts a comment line.
/// Metadata travels in comments of the form "# name: ..." and "# seed: ...".
struct InstanceFile {
  PointSet::Coordinates coords;
  std::string name;
  std::optional<std::uint64_t> seed;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

InstanceFile parse_instance(std::istream& in, const std::string& source = "<input>");
InstanceFile parse_instance_text(const std::string& text, const std::string& source = "<input>");
InstanceFile read_instance(const std::string& path);

void write_instance(std::ostream& out, const InstanceFile& inst);
std::string instance_text(const InstanceFile& inst);

/// The deduplicated point set of an instance.
PointSet to_point_set(const InstanceFile& inst);

/// FNV-1a over the canonical coordinate text, as 16 hex digits.
std::string instance_digest(const InstanceFile& inst);

}  // namespace hb
