#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace maxtsp {

using Vertex = int;

enum class Norm { euclidean, manhattan, chebyshev };

std::string_view to_string(Norm norm);
Norm parse_norm(std::string_view tag);

/// Coordinates the distance matrix was computed from.
struct PointSet {
  Norm norm = Norm::euclidean;
  std::size_t dim = 0;
  std::vector<std::vector<double>> coords;
};

double norm_distance(Norm norm, const std::vector<double>& a,
                     const std::vector<double>& b);

/// A complete weighted graph on n vertices given by a dense distance matrix.
///
/// Construction only checks shape and finiteness; metric axioms are checked by
/// validate_metric() and enforced by load_instance(). This lets transformed
/// (non-metric) matrices such as minmax_transform() share the type.
class Instance {
 public:
  Instance() = default;

  /// Row-major n*n matrix.
  Instance(std::size_t n, std::vector<double> dist,
           std::optional<double> dim_hint = std::nullopt);

  static Instance from_rows(const std::vector<std::vector<double>>& rows,
                            std::optional<double> dim_hint = std::nullopt);
  static Instance from_points(PointSet points,
                              std::optional<double> dim_hint = std::nullopt);

  std::size_t size() const { return n_; }
  double operator()(Vertex i, Vertex j) const {
    return dist_[static_cast<std::size_t>(i) * n_ +
                 static_cast<std::size_t>(j)];
  }
  double dist(Vertex i, Vertex j) const { return (*this)(i, j); }
  const std::vector<double>& matrix() const { return dist_; }

  double max_distance() const { return max_dist_; }

  const std::optional<PointSet>& points() const { return points_; }
  const std::optional<double>& dim_hint() const { return dim_hint_; }
  void set_dim_hint(std::optional<double> dim) { dim_hint_ = dim; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.n_ == b.n_ && a.dist_ == b.dist_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> dist_;
  double max_dist_ = 0.0;
  std::optional<PointSet> points_;
  std::optional<double> dim_hint_;
};

/// Throws InvalidArgument unless the instance has at least 3 vertices.
void require_solvable(const Instance& inst);

// ---------------------------------------------------------------------------
// Validation

struct SymmetryViolation {
  Vertex i;
  Vertex j;
  double magnitude;  // |d(i,j) - d(j,i)|
};

struct TriangleViolation {
  Vertex i;
  Vertex j;
  Vertex via;
  double magnitude;  // d(i,j) - d(i,via) - d(via,j)
};

struct ValidationReport {
  double tolerance = 0.0;  // effective tolerance after scaling
  std::vector<SymmetryViolation> symmetry;
  std::vector<Vertex> nonzero_diagonal;
  std::vector<std::pair<Vertex, Vertex>> negative_entries;
  /// Largest d(i,j) - d(i,k) - d(k,j) over all ordered triples (<= 0 when the
  /// triangle inequality holds everywhere). Absent for n < 3.
  std::optional<TriangleViolation> worst_triangle;
  bool passed = true;

  std::string describe() const;
};

inline constexpr double kDefaultMetricTolerance = 1e-9;

/// Checks symmetry, zero diagonal, non-negativity and the triangle
/// inequality. The tolerance is absolute, scaled by max(1, max distance).
ValidationReport validate_metric(const Instance& inst,
                                 double tol = kDefaultMetricTolerance);

// ---------------------------------------------------------------------------
// Text format
//
//   maxtsp v1 <n> matrix            maxtsp v1 <n> points
//   <n rows of n decimals>          norm <tag> dim <d>
//                                   <n rows of d decimals>
//   [dim_hint <value>]              [dim_hint <value>]

/// Parses and validates an instance. Throws ParseError, MetricError, or
/// InvalidArgument (n < 3).
Instance load_instance(std::string_view text,
                       double tol = kDefaultMetricTolerance);
Instance load_instance_file(const std::string& path,
                            double tol = kDefaultMetricTolerance);

/// Parses without metric validation (the `validate` command reports instead).
Instance parse_instance(std::string_view text);

std::string serialize(const Instance& inst);
void save_instance_file(const Instance& inst, const std::string& path);

/// Shortest decimal that parses back to exactly `value`.
std::string format_double(double value);

// ---------------------------------------------------------------------------
// Generators

enum class Family { line, euclidean, random_metric };

std::string_view to_string(Family family);
Family parse_family(std::string_view name);

struct GeneratorSpec {
  Family family = Family::line;
  std::size_t n = 0;
  std::size_t d = 1;  // euclidean only
  std::uint64_t seed = 0;
  double scale = 1.0;
};

/// dim_hint recorded for euclidean instances in R^d.
double euclidean_dim_bound(std::size_t d);

Instance generate(const GeneratorSpec& spec);

/// log2 of the largest greedy half-radius cover found over balls centred at
/// every point with radii max_distance / 2^l, l < levels. Diagnostic only.
double estimate_doubling(const Instance& inst, int levels = 8);

}  // namespace maxtsp
