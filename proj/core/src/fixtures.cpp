#include "gaugeqed/fixtures.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gaugeqed {

namespace {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

double FixtureSet::at(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) throw std::out_of_range("fixture key not found: " + key);
  return it->second;
}

std::string serialize_fixtures(const FixtureSet& fixtures) {
  std::ostringstream out;
  out << "# gaugeqed oracle reference fixtures\n";
  out << "fixture_version = " << fixtures.version << "\n";
  for (const auto& [key, value] : fixtures.values)
    out << key << " = " << format_value(value) << "\n";
  return out.str();
}

FixtureSet parse_fixtures(const std::string& text) {
  FixtureSet set;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("fixtures: malformed line " + std::to_string(line_no));
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty())
      throw std::runtime_error("fixtures: empty key on line " + std::to_string(line_no));
    if (key == "fixture_version") {
      set.version = std::stoi(value);
      continue;
    }
    std::size_t consumed = 0;
    const double parsed = std::stod(value, &consumed);
    if (consumed != value.size())
      throw std::runtime_error("fixtures: bad value on line " + std::to_string(line_no));
    set.values[key] = parsed;
  }
  return set;
}

void write_fixtures_file(const std::string& path, const FixtureSet& fixtures) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("fixtures: cannot open for writing: " + path);
  out << serialize_fixtures(fixtures);
  if (!out) throw std::runtime_error("fixtures: write failed: " + path);
}

FixtureSet read_fixtures_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("fixtures: cannot open: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_fixtures(buffer.str());
}

}  // namespace gaugeqed
