#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tight/emit.hpp"
#include "tight/legendrian.hpp"

namespace tight {

/// End-to-end audit of one space: pipeline homology at every stage, the
/// closed-form count against the realization enumeration, and the spin-c
/// class bound.
struct AuditReport {
  struct Check {
    std::string name;
    bool pass;
    std::string detail;
  };

  std::string input;
  TheoremForm form;
  std::vector<std::string> stage_labels;
  std::vector<Int> h1_orders;
  Int h1_formula;
  std::vector<Rational> final_framings;
  Int count_closed_form;
  Int count_enumeration;
  Int spinc_classes;
  std::vector<Check> checks;

  bool pass() const;
};

AuditReport run_audit(const SeifertInvariants& s, const std::string& input_echo);
json report_to_json(const AuditReport& r);

namespace cli {

/// Dispatches one invocation. Returns the process exit code: 0 success,
/// 2 parse error, 3 out-of-scope e0, 4 audit failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace tight
