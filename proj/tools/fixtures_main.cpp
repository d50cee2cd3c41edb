// Regenerates the converged oracle reference fixtures consumed by the
// acceptance suite. Slow by design: it runs the truncated-Fock oracle with
// its convergence gates.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "gaugeqed/fixtures.hpp"
#include "gaugeqed/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate oracle reference fixtures"};
  std::string out_path = "acceptance_reference.txt";
  bool skip_transit = false;
  app.add_option("--out", out_path, "Fixtures file to write");
  app.add_flag("--skip-transit", skip_transit, "Only regenerate the smoothed-box references");
  CLI11_PARSE(app, argc, argv);

  try {
    const gaugeqed::FixtureSet fixtures = gaugeqed::compute_reference_fixtures(!skip_transit);
    gaugeqed::write_fixtures_file(out_path, fixtures);
    std::cout << "wrote " << fixtures.values.size() << " reference values to " << out_path
              << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
