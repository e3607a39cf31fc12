#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "omegalie/superalgebra.hpp"

namespace omegalie::catalog {

struct CatalogEntry {
  std::string id;
  OmegaSuperAlgebra algebra;
  std::string notes;
  /// The entry satisfies the graded omega-Jacobi identity.
  bool omega_lie_superalgebra = true;
};

/// Throws UnknownId.
const CatalogEntry& get(std::string_view id);
bool contains(std::string_view id);
std::vector<std::string> ids();

}  // namespace omegalie::catalog
