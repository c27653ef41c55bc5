#pragma once

#include <string>
#include <vector>

#include "classa/certify.hpp"
#include "classa/document.hpp"

namespace classa {

// Bundled gallery of generator/seed pairs with known monotonicity behaviour,
// used as a regression table by the `examples` command.  Entries 15a and 15b
// share a generator and differ only in degree.
struct ExampleRecord {
  std::string id;
  SpecDocument doc{};
  MonotonicityKind expected = MonotonicityKind::MonotoneDecreasing;
  std::string note;
};

const std::vector<ExampleRecord>& example_gallery();

struct ExampleRun {
  const ExampleRecord* record = nullptr;
  MonotonicityKind actual = MonotonicityKind::DegenerateLine;
  bool pass = false;
};

// Runs the oracle on every gallery record (or those whose numeric id matches
// `filter`, when non-negative).  Throws UnknownId if the filter matches nothing.
std::vector<ExampleRun> run_gallery(int filter = -1, int grid = 2001);

} // namespace classa
