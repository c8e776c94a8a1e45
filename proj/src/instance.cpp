#include "maxtsp/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "maxtsp/error.hpp"

namespace maxtsp {

std::string_view to_string(Norm norm) {
  switch (norm) {
    case Norm::euclidean: return "euclidean";
    case Norm::manhattan: return "manhattan";
    case Norm::chebyshev: return "chebyshev";
  }
  return "euclidean";
}

Norm parse_norm(std::string_view tag) {
  if (tag == "euclidean") return Norm::euclidean;
  if (tag == "manhattan") return Norm::manhattan;
  if (tag == "chebyshev") return Norm::chebyshev;
  throw ParseError("unknown norm tag '" + std::string(tag) + "'");
}

double norm_distance(Norm norm, const std::vector<double>& a,
                     const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    const double diff = std::abs(a[c] - b[c]);
    switch (norm) {
      case Norm::euclidean: acc += diff * diff; break;
      case Norm::manhattan: acc += diff; break;
      case Norm::chebyshev: acc = std::max(acc, diff); break;
    }
  }
  return norm == Norm::euclidean ? std::sqrt(acc) : acc;
}

Instance::Instance(std::size_t n, std::vector<double> dist,
                   std::optional<double> dim_hint)
    : n_(n), dist_(std::move(dist)), dim_hint_(dim_hint) {
  if (dist_.size() != n_ * n_) {
    throw InvalidArgument("distance matrix has " +
                          std::to_string(dist_.size()) + " entries, expected " +
                          std::to_string(n_ * n_));
  }
  for (double d : dist_) {
    if (!std::isfinite(d)) throw InvalidArgument("non-finite distance");
    max_dist_ = std::max(max_dist_, d);
  }
  if (dim_hint_ && !(*dim_hint_ >= 0.0)) {
    throw InvalidArgument("dim_hint must be non-negative");
  }
}

Instance Instance::from_rows(const std::vector<std::vector<double>>& rows,
                             std::optional<double> dim_hint) {
  const std::size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw InvalidArgument("distance matrix is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Instance(n, std::move(flat), dim_hint);
}

Instance Instance::from_points(PointSet points,
                               std::optional<double> dim_hint) {
  const std::size_t n = points.coords.size();
  for (const auto& p : points.coords) {
    if (p.size() != points.dim) {
      throw InvalidArgument("point has " + std::to_string(p.size()) +
                            " coordinates, expected " +
                            std::to_string(points.dim));
    }
  }
  std::vector<double> flat(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d =
          norm_distance(points.norm, points.coords[i], points.coords[j]);
      flat[i * n + j] = flat[j * n + i] = d;
    }
  }
  Instance inst(n, std::move(flat), dim_hint);
  inst.points_ = std::move(points);
  return inst;
}

void require_solvable(const Instance& inst) {
  if (inst.size() < 3) {
    throw InvalidArgument("instance needs at least 3 vertices, got " +
                          std::to_string(inst.size()));
  }
}

// ---------------------------------------------------------------------------

std::string ValidationReport::describe() const {
  std::ostringstream out;
  out << (passed ? "metric: ok" : "metric: VIOLATED") << " (tol "
      << format_double(tolerance) << ")\n";
  for (const auto& s : symmetry) {
    out << "symmetry violation at (" << s.i << "," << s.j << "): magnitude "
        << format_double(s.magnitude) << "\n";
  }
  for (Vertex v : nonzero_diagonal) {
    out << "nonzero diagonal at " << v << "\n";
  }
  for (const auto& [i, j] : negative_entries) {
    out << "negative distance at (" << i << "," << j << ")\n";
  }
  if (worst_triangle) {
    const auto& t = *worst_triangle;
    out << "max triangle violation " << format_double(t.magnitude) << " at ("
        << t.i << "," << t.j << " via " << t.via << ")\n";
  }
  return out.str();
}

ValidationReport validate_metric(const Instance& inst, double tol) {
  ValidationReport report;
  report.tolerance = tol * std::max(1.0, inst.max_distance());
  const auto n = static_cast<Vertex>(inst.size());

  for (Vertex i = 0; i < n; ++i) {
    if (std::abs(inst(i, i)) > report.tolerance) {
      report.nonzero_diagonal.push_back(i);
    }
    for (Vertex j = 0; j < n; ++j) {
      if (inst(i, j) < -report.tolerance) report.negative_entries.emplace_back(i, j);
    }
    for (Vertex j = i + 1; j < n; ++j) {
      const double gap = std::abs(inst(i, j) - inst(j, i));
      if (gap > report.tolerance) report.symmetry.push_back({i, j, gap});
    }
  }

  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Vertex k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double v = inst(i, j) - inst(i, k) - inst(k, j);
        if (!report.worst_triangle || v > report.worst_triangle->magnitude) {
          report.worst_triangle = TriangleViolation{i, j, k, v};
        }
      }
    }
  }

  report.passed = report.symmetry.empty() && report.nonzero_diagonal.empty() &&
                  report.negative_entries.empty() &&
                  (!report.worst_triangle ||
                   report.worst_triangle->magnitude <= report.tolerance);
  return report;
}

// ---------------------------------------------------------------------------
// Text format

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  /// Next non-blank line split on whitespace; empty at end of input.
  std::vector<std::string_view> next() {
    while (pos_ < text_.size()) {
      auto end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      auto line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      auto tokens = split(line);
      if (!tokens.empty()) return tokens;
    }
    return {};
  }

  int line_no() const { return line_no_; }

 private:
  static std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) out.push_back(line.substr(i, j - i));
      i = j;
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

double parse_number(std::string_view tok, int line) {
  double value = 0.0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto res = std::from_chars(first, tok.data() + tok.size(), value);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() ||
      !std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line) + ": bad number '" +
                     std::string(tok) + "'");
  }
  return value;
}

std::size_t parse_count(std::string_view tok, int line) {
  std::size_t value = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line) + ": bad count '" +
                     std::string(tok) + "'");
  }
  return value;
}

std::vector<double> parse_row(LineReader& reader, std::size_t width) {
  auto tokens = reader.next();
  if (tokens.empty()) throw ParseError("unexpected end of input");
  if (tokens.size() != width) {
    throw ParseError("line " + std::to_string(reader.line_no()) + ": expected " +
                     std::to_string(width) + " values, got " +
                     std::to_string(tokens.size()));
  }
  std::vector<double> row;
  row.reserve(width);
  for (auto tok : tokens) row.push_back(parse_number(tok, reader.line_no()));
  return row;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  LineReader reader(text);
  auto header = reader.next();
  if (header.size() != 4 || header[0] != "maxtsp" || header[1] != "v1") {
    throw ParseError("expected header 'maxtsp v1 <n> <mode>'");
  }
  const std::size_t n = parse_count(header[2], reader.line_no());
  const std::string_view mode = header[3];

  std::optional<Instance> inst;
  if (mode == "matrix") {
    std::vector<std::vector<double>> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(parse_row(reader, n));
    inst = Instance::from_rows(rows);
  } else if (mode == "points") {
    auto meta = reader.next();
    if (meta.size() != 4 || meta[0] != "norm" || meta[2] != "dim") {
      throw ParseError("line " + std::to_string(reader.line_no()) +
                       ": expected 'norm <tag> dim <d>'");
    }
    PointSet points;
    points.norm = parse_norm(meta[1]);
    points.dim = parse_count(meta[3], reader.line_no());
    if (points.dim == 0) throw ParseError("point dimension must be >= 1");
    points.coords.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      points.coords.push_back(parse_row(reader, points.dim));
    }
    inst = Instance::from_points(std::move(points));
  } else {
    throw ParseError("unknown mode '" + std::string(mode) + "'");
  }

  auto trailer = reader.next();
  if (!trailer.empty()) {
    if (trailer.size() != 2 || trailer[0] != "dim_hint") {
      throw ParseError("line " + std::to_string(reader.line_no()) +
                       ": unexpected trailing content");
    }
    const double hint = parse_number(trailer[1], reader.line_no());
    if (hint < 0.0) throw ParseError("dim_hint must be non-negative");
    inst->set_dim_hint(hint);
    if (!reader.next().empty()) throw ParseError("unexpected trailing content");
  }
  return std::move(*inst);
}

Instance load_instance(std::string_view text, double tol) {
  Instance inst = parse_instance(text);
  require_solvable(inst);
  auto report = validate_metric(inst, tol);
  if (!report.passed) throw MetricError(report.describe());
  return inst;
}

namespace {
std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}
}  // namespace

Instance load_instance_file(const std::string& path, double tol) {
  return load_instance(read_file(path), tol);
}

std::string serialize(const Instance& inst) {
  std::string out;
  const std::size_t n = inst.size();
  auto append_row = [&out](const std::vector<double>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ' ';
      out += format_double(row[c]);
    }
    out += '\n';
  };

  if (const auto& pts = inst.points()) {
    out += "maxtsp v1 " + std::to_string(n) + " points\n";
    out += "norm " + std::string(to_string(pts->norm)) + " dim " +
           std::to_string(pts->dim) + "\n";
    for (const auto& p : pts->coords) append_row(p);
  } else {
    out += "maxtsp v1 " + std::to_string(n) + " matrix\n";
    std::vector<double> row(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::copy_n(inst.matrix().begin() + static_cast<std::ptrdiff_t>(i * n), n,
                  row.begin());
      append_row(row);
    }
  }
  if (inst.dim_hint()) out += "dim_hint " + format_double(*inst.dim_hint()) + "\n";
  return out;
}

void save_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << serialize(inst);
}

// ---------------------------------------------------------------------------
// Generators

std::string_view to_string(Family family) {
  switch (family) {
    case Family::line: return "line";
    case Family::euclidean: return "euclidean";
    case Family::random_metric: return "random-metric";
  }
  return "line";
}

Family parse_family(std::string_view name) {
  if (name == "line") return Family::line;
  if (name == "euclidean") return Family::euclidean;
  if (name == "random-metric") return Family::random_metric;
  throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

double euclidean_dim_bound(std::size_t d) {
  return std::ceil(2.3 * static_cast<double>(d) + 1.0);
}

Instance generate(const GeneratorSpec& spec) {
  if (spec.n < 3) throw InvalidArgument("generator needs n >= 3");
  if (!(spec.scale > 0.0)) throw InvalidArgument("generator scale must be > 0");
  if (spec.family == Family::euclidean && spec.d < 1) {
    throw InvalidArgument("euclidean generator needs d >= 1");
  }

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> coord(0.0, spec.scale);

  switch (spec.family) {
    case Family::line:
    case Family::euclidean: {
      const std::size_t d = spec.family == Family::line ? 1 : spec.d;
      PointSet points{Norm::euclidean, d, {}};
      points.coords.assign(spec.n, std::vector<double>(d));
      for (auto& p : points.coords) {
        for (auto& x : p) x = coord(rng);
      }
      const double hint =
          spec.family == Family::line ? 1.0 : euclidean_dim_bound(d);
      return Instance::from_points(std::move(points), hint);
    }
    case Family::random_metric: {
      const std::size_t n = spec.n;
      std::vector<double> d(n * n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          d[i * n + j] = d[j * n + i] = coord(rng);
        }
      }
      // Shortest-path closure repairs every triangle violation.
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            const double via = d[i * n + k] + d[k * n + j];
            if (via < d[i * n + j]) d[i * n + j] = via;
          }
        }
      }
      return Instance(n, std::move(d));
    }
  }
  throw InvalidArgument("unknown family");
}

double estimate_doubling(const Instance& inst, int levels) {
  const auto n = static_cast<Vertex>(inst.size());
  const double top = inst.max_distance();
  if (n == 0 || top <= 0.0) return 0.0;

  std::size_t worst = 1;
  std::vector<Vertex> ball;
  std::vector<char> covered(inst.size());
  for (Vertex c = 0; c < n; ++c) {
    double radius = top;
    for (int level = 0; level < levels; ++level, radius /= 2.0) {
      ball.clear();
      for (Vertex v = 0; v < n; ++v) {
        if (inst(c, v) <= radius) ball.push_back(v);
      }
      if (ball.size() <= worst) break;  // balls only shrink from here
      std::fill(covered.begin(), covered.end(), 0);
      std::size_t count = 0;
      for (Vertex p : ball) {
        if (covered[p]) continue;
        ++count;
        for (Vertex q : ball) {
          if (inst(p, q) <= radius / 2.0) covered[q] = 1;
        }
      }
      worst = std::max(worst, count);
    }
  }
  return std::log2(static_cast<double>(worst));
}

}  // namespace maxtsp
