#pragma once

#include <steenspec/groebner.hpp>
#include <steenspec/tensor_poly.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace steenspec::cli {

/// Runs one invocation. args excludes the program name. Exit status: 0 on
/// success, 1 on domain errors (error JSON on err), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "(g1, g2, ...)" over the reduced Gröbner basis, ascending; "(0)" for the
/// zero ideal and "(1)" for the unit ideal.
std::string ideal_to_string(const Ideal& I);
std::vector<std::string> ideal_generator_strings(const Ideal& I);

} // namespace steenspec::cli
