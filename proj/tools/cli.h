#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "jtube/jalg.h"
#include "jtube/rational.h"
#include "jtube/serialize.h"

namespace jtube {
namespace cli {

enum ExitCode { kPass = 0, kCheckFailure = 1, kUsageError = 2 };

// `family:size`, e.g. sym:3, herm:2, quat:2, mink:4, octonion:3, or a JSON
// descriptor object.
jalg::AlgebraDescriptor ParseAlgebra(const std::string& text);

// Comma list of coordinates, a JSON array, `diag:l1,...,lr` (the element
// sum_j l_j c_j over the canonical frame), or `@path` naming a file with
// any of these.
Element ParseElement(const jalg::JordanAlgebra& a, const std::string& text);

// `name=a..b:step`; the endpoints and step may be rationals like 1/2.
struct Scan {
  std::string name;
  std::vector<Exponent> values;
};
Scan ParseScan(const std::string& text);

// Worker count: hardware concurrency capped by the JT_THREADS variable.
int ThreadCount();
// Runs body(i) for i in [0, n) on ThreadCount() workers. Callers write to
// per-index slots so results do not depend on scheduling.
void ParallelFor(int n, const std::function<void(int)>& body);

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  // "<=": pass iff value <= tolerance; ">": pass iff value > tolerance;
  // "==": pass iff value == tolerance.
  std::string relation = "<=";
  bool pass = false;
  std::string note;
};

Check MakeCheck(std::string name, double value, double tolerance, std::string relation = "<=",
                std::string note = "");

struct Report {
  std::string command;
  Json config = Json::object();
  Json results = Json::object();
  Json tolerances = Json::object();
  uint64_t seed = 0;
  std::vector<Check> checks;

  bool passed() const;
  Json ToJson() const;
  // Plot-ready CSV: "path,value" rows over the flattened report.
  std::string ToCsv() const;
};

// Entry point shared by the executable and the Python module. Returns the
// exit code; the report (or help text) goes to `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace jtube
