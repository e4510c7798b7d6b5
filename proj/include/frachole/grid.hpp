#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace frachole {

/// Periodic box [-L, L)^dim sampled with M points per axis, M a power of two.
/// Node k has coordinate (k - M/2) * h with h = 2L/M, so h*M = 2L exactly and
/// coordinates come in exact +/- pairs.
struct GridSpec {
  int dim = 1;
  double half_extent = 1.0;
  int points_per_dim = 8;

  double spacing() const { return 2.0 * half_extent / points_per_dim; }
  std::size_t node_count() const {
    std::size_t n = static_cast<std::size_t>(points_per_dim);
    return dim == 1 ? n : n * n;
  }
  double coord(int idx) const { return (idx - points_per_dim / 2) * spacing(); }
  double cell_measure() const {
    const double h = spacing();
    return dim == 1 ? h : h * h;
  }

  bool operator==(const GridSpec&) const = default;
};

/// Validated constructor: dim in {1,2}, L > 0, M a power of two >= 8.
GridSpec make_grid(int dim, double half_extent, int points_per_dim);

/// Real samples on a GridSpec, row-major (values[i*M + j] in 2D where i
/// indexes the first axis). Plain value semantics.
struct Field {
  GridSpec spec;
  std::vector<double> values;

  Field() = default;
  explicit Field(const GridSpec& g) : spec(g), values(g.node_count(), 0.0) {}
  Field(const GridSpec& g, std::vector<double> v) : spec(g), values(std::move(v)) {}

  double& at(int i) { return values[static_cast<std::size_t>(i)]; }
  double& at(int i, int j) {
    return values[static_cast<std::size_t>(i) * spec.points_per_dim + j];
  }
  double at(int i) const { return values[static_cast<std::size_t>(i)]; }
  double at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * spec.points_per_dim + j];
  }
};

bool all_finite(const Field& u);
double max_abs(const Field& u);

/// Periodic whole-cell shift; an exact permutation of the samples.
/// shift[1] is ignored for 1D grids.
Field translate(const Field& u, std::array<int, 2> shift);

/// Reflection x -> -x (index k -> (M-k) mod M per axis); exact permutation.
Field reflect(const Field& u);

/// Canonical rotation: the periodic shift placing the maximal sample first
/// (ties broken by lexicographic comparison of the rotated arrays). Two
/// fields that are whole-cell translates of each other canonicalize to
/// bitwise-identical arrays; deterministic reductions exploit this.
Field canonical_rotation(const Field& u);

enum class FieldIoErrorKind { malformed_header, dimension_mismatch, truncated_payload };

class FieldIoError : public std::runtime_error {
 public:
  FieldIoError(FieldIoErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  FieldIoErrorKind kind() const { return kind_; }

 private:
  FieldIoErrorKind kind_;
};

/// FRF1 format: one UTF-8 JSON header line {"magic":"FRF1","dim":N,"L":..,"M":..}
/// terminated by '\n', followed by M^N little-endian IEEE-754 doubles,
/// row-major. Roundtrip is bit-exact.
void save_field(const Field& u, const std::filesystem::path& path);
Field load_field(const std::filesystem::path& path);

}  // namespace frachole
