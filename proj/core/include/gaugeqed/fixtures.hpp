#ifndef GAUGEQED_FIXTURES_HPP
#define GAUGEQED_FIXTURES_HPP

#include <map>
#include <string>

// Versioned, human-readable key-value store for the converged reference
// values produced by the truncated-Fock oracle and consumed by the
// acceptance suite. Format: '#' comments, blank lines, and `key = value`
// lines with 17-significant-digit values.

namespace gaugeqed {

struct FixtureSet {
  int version = 1;
  std::map<std::string, double> values;

  double at(const std::string& key) const;  // throws std::out_of_range with the key name
  bool contains(const std::string& key) const { return values.count(key) != 0; }
};

std::string serialize_fixtures(const FixtureSet& fixtures);
FixtureSet parse_fixtures(const std::string& text);

void write_fixtures_file(const std::string& path, const FixtureSet& fixtures);
FixtureSet read_fixtures_file(const std::string& path);

}  // namespace gaugeqed

#endif
