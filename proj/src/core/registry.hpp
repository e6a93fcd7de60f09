#pragma once

// Catalogue of named expansions for the command line and the golden
// fixtures: classical q-series, Jacobi seeds and weakly holomorphic
// inputs, lifts, table entries, and boundary expansions. Names follow
// object.context, e.g. chi10.L1 is the weight-10 form of the one-variable
// ring and E4.L0 the classical Eisenstein series.

#include <string>
#include <vector>

#include "core/render.hpp"

namespace omf {

struct ExpandResult {
  std::string name;
  std::string note;  // one-line description
  std::string text;
  Json json;
};

std::vector<std::string> registry_names();

// q_max and s_max are inclusive orders (s_max ignored for plain
// q-series). Unknown names throw std::invalid_argument listing the
// catalogue.
ExpandResult expand_name(const std::string& name, long q_max, long s_max);

}  // namespace omf
