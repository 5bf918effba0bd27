#include "floorcount/errors.hpp"

namespace floorcount {

const char* to_string(PolygonErrc code) {
  switch (code) {
    case PolygonErrc::not_convex: return "NotConvex";
    case PolygonErrc::not_two_dimensional: return "NotTwoDimensional";
    case PolygonErrc::not_h_transverse: return "NotHTransverse";
    case PolygonErrc::closure_violated: return "ClosureViolated";
    case PolygonErrc::width_violated: return "WidthViolated";
    case PolygonErrc::empty_height: return "EmptyHeight";
  }
  return "PolygonError";
}

const char* to_string(ConsistencyErrc code) {
  switch (code) {
    case ConsistencyErrc::non_integral_orbit_count: return "NonIntegralOrbitCount";
    case ConsistencyErrc::odd_parity: return "OddParity";
    case ConsistencyErrc::representative_dependence: return "RepresentativeDependence";
  }
  return "ConsistencyError";
}

}  // namespace floorcount
