#ifndef IDEALGB_PROBLEM_IO_HPP
#define IDEALGB_PROBLEM_IO_HPP

#include <string>
#include <vector>

#include "idealgb/gbuilder.hpp"

namespace idealgb {

// Problem files are UTF-8 JSON:
//
//   {
//     "variables": ["x", "y"],
//     "ordering": {"kind": "grlex", "variable_priority": ["x", "y"]},
//     "conditions": [
//       {"point": ["0", "0"]},
//       {"point": ["1", "2"], "functionals": ["1", "x"]}
//     ]
//   }
//
// Coordinates are integers or "p/q" strings; "functionals" defaults to
// ["1"] (plain evaluation); "variable_priority" lists the highest-priority
// variable first and defaults to the declaration order.

struct ParsedProblem {
    std::vector<std::string> variables;
    InterpolationProblem problem;
};

/// Parses a problem document. Structural and syntax issues raise
/// ParseError; semantic issues (duplicate points etc.) are left for the
/// pipeline so they surface with their own error types.
ParsedProblem parse_problem_json(const std::string& text);

/// Reads and parses a problem file; file-system failures raise ParseError.
ParsedProblem load_problem(const std::string& path);

std::string result_to_text(const std::vector<std::string>& variables,
                           const GroebnerResult& result);

/// Self-contained result document (variables and ordering included so the
/// polynomial strings can be re-read).
std::string result_to_json(const std::vector<std::string>& variables,
                           const GroebnerResult& result);

struct LoadedResult {
    std::vector<std::string> variables;
    GroebnerResult result;
};

/// Re-reads a result document emitted by result_to_json. The embedded
/// certificate, if any, is ignored; callers re-certify.
LoadedResult parse_result_json(const std::string& text);

}  // namespace idealgb

#endif
