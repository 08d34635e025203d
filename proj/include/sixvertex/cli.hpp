// Command-line front end and the batch verification driver.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sixvertex/lattice.hpp"
#include "sixvertex/yangbaxter.hpp"

namespace sixvertex::cli {

struct CheckRecord {
  std::string check;   // record type: bijection, strategy, symmetry, ...
  std::string inputs;  // human-readable parameters, e.g. "n=2 lambda=(1,0)"
  bool pass = false;
  std::string details;
  double seconds = 0.0;
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> records;
  bool overall() const;
};

// Runs, over every partition with 1..n_max rows and first part <= first_max:
// bijection counts and round trips, enumeration-strategy agreement, symmetry,
// the degree bound, the vanishing grid (at n_max rows), the 20 star-triangle
// cases, and the main identity.  Record order is fixed; checks may run on
// several threads (SIXVERTEX_THREADS).
Report verify_all(int n_max, int first_max,
                  const RectWeightTable& rect = RectWeightTable::standard(),
                  const CrossingWeightTable& cross = CrossingWeightTable::standard());

// Entry point behind main(): returns the process exit code, 0 for
// verified/success, 1 for a falsified identity, 2 for usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sixvertex::cli
