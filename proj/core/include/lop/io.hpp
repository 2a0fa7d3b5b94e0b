#pragma once

#include <string>

#include "lop/model.hpp"
#include "lop/solution.hpp"
#include "lop/solver.hpp"

namespace lop {

/// Instance file (versioned JSON): name, optional lambda/beta/omega, and the
/// circle list. Parsing applies the defaults lambda = beta = 0.5, omega = 1
/// and validates everything the ProblemInstance constructor enforces.
/// ParseError carries a line diagnostic; ValidationError names the field.
ProblemInstance parse_instance(const std::string& text);
std::string write_instance(const ProblemInstance& instance);

/// Solution file contents: the solution itself plus enough provenance to
/// reproduce it (instance name, solver settings, block parameter).
struct SolutionDocument {
    std::string instance_name;
    Solution solution;
    SolverConfig config;
    int block_b = 1;
};

std::string write_solution(const SolutionDocument& doc);
SolutionDocument parse_solution(const std::string& text);

}  // namespace lop
