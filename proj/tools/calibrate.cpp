// algstat-calibrate: measures the machine constants and writes the
// calibration file that the test suites assert against.
#include <iostream>

#include "CLI11.hpp"
#include "algstat/calibration.hpp"
#include "algstat/errors.hpp"
#include "lab_context.hpp"

int main(int argc, char** argv) {
  CLI::App app{"algstat-calibrate: measure and freeze machine constants"};
  lab::CommonOptions opts;
  opts.add_to(app);
  std::string output = "calibration/default.cal";
  app.add_option("-o,--output", output, "Calibration file to write")->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    algstat::HaltingTable table = lab::open_table(opts, false);
    const algstat::Calibration cal = algstat::measure_calibration(table);
    cal.save(output);
    std::cout << cal.str();
    std::cout << "wrote " << output << "\n";
    return 0;
  } catch (const algstat::UserError& e) {
    std::cerr << "algstat-calibrate: " << e.what() << "\n";
    return 2;
  } catch (const algstat::InvariantViolation& e) {
    std::cerr << "algstat-calibrate: invariant violated: " << e.what() << "\n";
    return 1;
  }
}
