#pragma once

#include <string>
#include <vector>

#include "ridgelab/activation.hpp"
#include "ridgelab/domain.hpp"
#include "ridgelab/target_function.hpp"

namespace ridgelab {

struct CatalogEntry {
  std::string id;
  std::string summary;
  TargetFunction fn;
  Domain domain;
};

/// Built-in target functions: kinks, Hoelder roots, smooth trig and
/// exponentials, polynomials, and a few two-dimensional variants.
const std::vector<CatalogEntry>& function_catalog();

/// Throws unknown-function with the offending id.
const CatalogEntry& catalog_lookup(const std::string& id);

/// "logistic", "arctan", "heaviside", "elu" / "elu:alpha",
/// "relu" / "relu-power:k". Throws unknown-activation.
Activation activation_by_name(const std::string& name);

std::vector<std::string> activation_names();

}  // namespace ridgelab
