#include "hb/instance_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hb {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

void read_metadata(const std::string& comment, InstanceFile& inst, const std::string& source, std::size_t line) {
  const std::string body = trim(comment);
  const auto colon = body.find(':');
  if (colon == std::string::npos) return;
  const std::string key = trim(body.substr(0, colon));
  const std::string value = trim(body.substr(colon + 1));
  if (key == "name") {
    inst.name = value;
  } else if (key == "seed") {
    try {
      std::size_t used = 0;
      const unsigned long long s = std::stoull(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      inst.seed = s;
    } catch (const std::exception&) {
      throw ParseError(source, line, colon + 3, "seed metadata is not an unsigned integer");
    }
  }
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

InstanceFile parse_instance(std::istream& in, const std::string& source) {
  InstanceFile inst;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) continue;
    if (text[pos] == '#') {
      read_metadata(text.substr(pos + 1), inst, source, line_no);
      continue;
    }
    Integer values[2];
    for (int field = 0; field < 2; ++field) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == text.size())
        throw ParseError(source, line_no, pos + 1, field == 0 ? "expected an x coordinate" : "expected a y coordinate");
      const std::size_t start = pos;
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      const std::string token = text.substr(start, pos - start);
      auto parsed = parse_integer(token);
      if (!parsed) throw ParseError(source, line_no, start + 1, "'" + token + "' is not an integer");
      values[field] = std::move(*parsed);
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw ParseError(source, line_no, pos + 1, "unexpected text after the y coordinate");
    inst.coords.emplace_back(std::move(values[0]), std::move(values[1]));
  }
  if (inst.coords.empty()) throw ParseError(source, line_no + 1, 1, "no points");
  return inst;
}

InstanceFile parse_instance_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse_instance(in, source);
}

InstanceFile read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_instance(in, path);
}

void write_instance(std::ostream& out, const InstanceFile& inst) {
  if (!inst.name.empty()) out << "# name: " << inst.name << '\n';
  if (inst.seed) out << "# seed: " << *inst.seed << '\n';
  for (const auto& [x, y] : inst.coords) out << x << ' ' << y << '\n';
}

std::string instance_text(const InstanceFile& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

PointSet to_point_set(const InstanceFile& inst) { return PointSet(inst.coords); }

std::string instance_digest(const InstanceFile& inst) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
  };
  for (const auto& [x, y] : inst.coords) feed(x.str() + ' ' + y.str() + '\n');
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

}  // namespace hb
