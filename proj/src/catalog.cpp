#include "omegalie/catalog.hpp"

#include <algorithm>

#include "omegalie/errors.hpp"

namespace omegalie::catalog {

namespace {

using Terms = std::vector<std::pair<GaussianRational, std::string>>;

// [x1,x2] = x1, [x1,y] = y, [x2,y] = [y,y] = 0, omega(x1,x2) = 1, omega(y,y) = 0.
// omega(x2,x1) = -1 completes the even part skew-symmetrically; with it the
// graded omega-Jacobi identity holds and the compatible spaces have the
// documented dimensions.
CatalogEntry make_h() {
  AlgebraBuilder b("H", {"x1", "x2"}, {"y"});
  b.bracket("x1", "x2", Terms{{1, "x1"}});
  b.bracket("x1", "y", Terms{{1, "y"}});
  b.omega("x1", "x2", 1);
  b.omega("x2", "x1", -1);
  return {"H", b.build(),
          "3-dimensional complex omega-Lie superalgebra with one odd generator; "
          "omega(x2,x1) = -1 by skew completion",
          true};
}

CatalogEntry make_abelian3() {
  AlgebraBuilder b("abelian3", {"x1", "x2"}, {"y"});
  return {"abelian3", b.build(), "abelian, omega = 0", true};
}

// Odd generators y1, y2 with [y1,y2] = z central; omega = 0.
CatalogEntry make_heisenberg() {
  AlgebraBuilder b("heisenberg-like-lie-super", {"z"}, {"y1", "y2"});
  b.bracket("y1", "y2", Terms{{1, "z"}});
  return {"heisenberg-like-lie-super", b.build(),
          "Lie superalgebra (omega = 0) with one-dimensional even center", true};
}

// [x1,x2] = x1, [x2,y] = y; trivial center, omega = 0.
CatalogEntry make_centerless() {
  AlgebraBuilder b("centerless-lie-super", {"x1", "x2"}, {"y"});
  b.bracket("x1", "x2", Terms{{1, "x1"}});
  b.bracket("x2", "y", Terms{{1, "y"}});
  return {"centerless-lie-super", b.build(),
          "Lie superalgebra (omega = 0) with trivial center", true};
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = {make_h(), make_abelian3(), make_heisenberg(),
                                                make_centerless()};
  return all;
}

}  // namespace

const CatalogEntry& get(std::string_view id) {
  for (const auto& e : entries()) {
    if (e.id == id) return e;
  }
  throw UnknownId("no catalog entry '" + std::string(id) + "'");
}

bool contains(std::string_view id) {
  const auto& all = entries();
  return std::any_of(all.begin(), all.end(), [&](const auto& e) { return e.id == id; });
}

std::vector<std::string> ids() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.push_back(e.id);
  return out;
}

}  // namespace omegalie::catalog
