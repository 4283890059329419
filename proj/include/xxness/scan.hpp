#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xxness/params.hpp"
#include "xxness/two_qubit.hpp"

namespace xxness {

// Which lambda_min is evaluated at a grid node.
enum class Classifier {
  boundary_pair,       // closed-form edge-pair lambda
  bulk_pair,           // closed-form bulk-pair lambda
  central_pair_oracle, // steady-state solve, central nearest-neighbor pair
  thermal,             // grand-canonical closed form over (beta, phi)
};

const char* to_string(Classifier c);
Classifier classifier_from_string(const std::string& s);

// Axis names: c, d, Gamma, gamma (dephasing), mu_bar, u (= Gamma t), and
// beta, phi for the thermal classifier.
struct GridAxis {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  int resolution = 2;  // >= 2

  double value(int i) const {
    return lo + (hi - lo) * static_cast<double>(i) / (resolution - 1);
  }
};

// Fixed parameters for everything not swept by an axis.
struct GridFixed {
  double gamma_left = 1.0;
  double gamma_right = 1.0;
  double c = 0.0;
  double d = 0.0;
  double mu_bar = 0.0;   // used with a u axis instead of (c, d)
  double u = 0.0;
  double gamma_deph = 0.0;
  int n = 6;
  double beta = 0.0;
  double phi = 0.0;
};

struct GridSpec {
  std::vector<GridAxis> axes;  // 1 to 3
  Classifier classifier = Classifier::bulk_pair;
  GridFixed fixed;
  double eps = kEntanglementEps;
  bool use_u_plane = false;  // interpret driving via (u, mu_bar), not (c, d)
  // Optional JSON cache of oracle lambdas keyed by the parameter tuple;
  // loaded before and saved after a scan, which makes big scans resumable.
  std::string oracle_cache_path;

  std::size_t node_count() const;
};

// Classified grid; node order is row-major with the last axis fastest.
struct RegionGrid {
  GridSpec spec;
  std::vector<double> lambda;      // NaN where the node is out of domain
  std::vector<std::uint8_t> entangled;
  std::vector<std::uint8_t> valid;
  std::string code_version;
  std::size_t error_nodes = 0;  // oracle failures, marked not fatal
};

// Bisected phase-boundary points along grid lines.
struct BoundaryCurve {
  std::string free_axis;
  std::string scan_axis;
  struct Point {
    double free_value;
    double root;
    double est_error;  // final bracket width
  };
  std::vector<Point> points;
};

// OpenMP-parallel scan. Nodes are independent; output is deterministic.
RegionGrid scan(const GridSpec& g);

// Serial reference implementation; must produce bit-identical results.
RegionGrid scan_serial(const GridSpec& g);

// lambda at one node with the named axis forced to a continuum value.
// Returns NaN out of domain; oracle errors propagate as exceptions.
double classify_value(const GridSpec& g, const std::string& axis_name,
                      double axis_value);

// Bisect the lambda sign change along scan_axis for every value of the other
// (free) axis; bracket width tolerance in parameter units. Lines without a
// sign change are skipped; throws NoRootError when no line has one.
BoundaryCurve trace_boundary(const GridSpec& g, const std::string& scan_axis,
                             double bracket_tol = 1e-6);

}  // namespace xxness
