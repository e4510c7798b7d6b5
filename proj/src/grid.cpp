#include "frachole/grid.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "json.hpp"

namespace frachole {

GridSpec make_grid(int dim, double half_extent, int points_per_dim) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("make_grid: dim must be 1 or 2");
  if (!(half_extent > 0.0)) throw std::invalid_argument("make_grid: half_extent must be > 0");
  if (points_per_dim < 8 || !std::has_single_bit(static_cast<unsigned>(points_per_dim)))
    throw std::invalid_argument("make_grid: points_per_dim must be a power of two >= 8");
  return GridSpec{dim, half_extent, points_per_dim};
}

bool all_finite(const Field& u) {
  for (double v : u.values)
    if (!std::isfinite(v)) return false;
  return true;
}

double max_abs(const Field& u) {
  double m = 0.0;
  for (double v : u.values) m = std::max(m, std::abs(v));
  return m;
}

Field translate(const Field& u, std::array<int, 2> shift) {
  const int M = u.spec.points_per_dim;
  auto wrap = [M](int k) {
    int r = k % M;
    return r < 0 ? r + M : r;
  };
  Field out(u.spec);
  if (u.spec.dim == 1) {
    const int s0 = wrap(shift[0]);
    // out(k + s) = u(k): a sample at index k moves to index k + s.
    for (int k = 0; k < M; ++k) out.at(wrap(k + s0)) = u.at(k);
  } else {
    const int s0 = wrap(shift[0]), s1 = wrap(shift[1]);
    for (int i = 0; i < M; ++i) {
      const int ii = wrap(i + s0);
      for (int j = 0; j < M; ++j) out.at(ii, wrap(j + s1)) = u.at(i, j);
    }
  }
  return out;
}

Field reflect(const Field& u) {
  const int M = u.spec.points_per_dim;
  Field out(u.spec);
  if (u.spec.dim == 1) {
    for (int k = 0; k < M; ++k) out.at((M - k) % M) = u.at(k);
  } else {
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < M; ++j) out.at((M - i) % M, (M - j) % M) = u.at(i, j);
  }
  return out;
}

namespace {

// Lexicographic comparison of the rotations of u starting at nodes a and b.
bool rotation_less(const Field& u, std::array<int, 2> a, std::array<int, 2> b) {
  const int M = u.spec.points_per_dim;
  if (u.spec.dim == 1) {
    for (int k = 0; k < M; ++k) {
      const double va = u.at((a[0] + k) % M);
      const double vb = u.at((b[0] + k) % M);
      if (va != vb) return va < vb;
    }
    return false;
  }
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      const double va = u.at((a[0] + i) % M, (a[1] + j) % M);
      const double vb = u.at((b[0] + i) % M, (b[1] + j) % M);
      if (va != vb) return va < vb;
    }
  return false;
}

}  // namespace

Field canonical_rotation(const Field& u) {
  const int M = u.spec.points_per_dim;
  double best = -std::numeric_limits<double>::infinity();
  for (double v : u.values) best = std::max(best, v);
  std::array<int, 2> origin{0, 0};
  bool first = true;
  if (u.spec.dim == 1) {
    for (int k = 0; k < M; ++k)
      if (u.at(k) == best) {
        std::array<int, 2> cand{k, 0};
        if (first || rotation_less(u, cand, origin)) origin = cand;
        first = false;
      }
  } else {
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < M; ++j)
        if (u.at(i, j) == best) {
          std::array<int, 2> cand{i, j};
          if (first || rotation_less(u, cand, origin)) origin = cand;
          first = false;
        }
  }
  return translate(u, {-origin[0], -origin[1]});
}

namespace {

void write_le_doubles(std::ofstream& os, const std::vector<double>& v) {
  static_assert(sizeof(double) == 8);
  if constexpr (std::endian::native == std::endian::little) {
    os.write(reinterpret_cast<const char*>(v.data()),
             static_cast<std::streamsize>(v.size() * 8));
  } else {
    for (double d : v) {
      std::uint64_t bits;
      std::memcpy(&bits, &d, 8);
      char buf[8];
      for (int b = 0; b < 8; ++b) buf[b] = static_cast<char>((bits >> (8 * b)) & 0xff);
      os.write(buf, 8);
    }
  }
}

}  // namespace

void save_field(const Field& u, const std::filesystem::path& path) {
  nlohmann::ordered_json header;
  header["magic"] = "FRF1";
  header["dim"] = u.spec.dim;
  header["L"] = u.spec.half_extent;
  header["M"] = u.spec.points_per_dim;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("save_field: cannot open " + path.string());
  os << header.dump() << '\n';
  write_le_doubles(os, u.values);
  if (!os) throw std::runtime_error("save_field: write failed for " + path.string());
}

Field load_field(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FieldIoError(FieldIoErrorKind::malformed_header,
                              "load_field: cannot open " + path.string());
  std::string line;
  if (!std::getline(is, line))
    throw FieldIoError(FieldIoErrorKind::malformed_header, "load_field: missing header line");
  nlohmann::json header = nlohmann::json::parse(line, nullptr, false);
  if (header.is_discarded() || !header.is_object() || header.value("magic", "") != "FRF1")
    throw FieldIoError(FieldIoErrorKind::malformed_header, "load_field: bad FRF1 header");
  if (!header.contains("dim") || !header.contains("L") || !header.contains("M"))
    throw FieldIoError(FieldIoErrorKind::malformed_header, "load_field: incomplete header");
  const int dim = header["dim"].get<int>();
  const double L = header["L"].get<double>();
  const int M = header["M"].get<int>();
  GridSpec spec;
  try {
    spec = make_grid(dim, L, M);
  } catch (const std::invalid_argument& e) {
    throw FieldIoError(FieldIoErrorKind::dimension_mismatch, std::string("load_field: ") + e.what());
  }
  std::vector<double> values(spec.node_count());
  std::vector<char> raw(values.size() * 8);
  is.read(raw.data(), static_cast<std::streamsize>(raw.size()));
  if (static_cast<std::size_t>(is.gcount()) != raw.size())
    throw FieldIoError(FieldIoErrorKind::truncated_payload,
                       "load_field: payload shorter than M^N doubles");
  if constexpr (std::endian::native == std::endian::little) {
    std::memcpy(values.data(), raw.data(), raw.size());
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::uint64_t bits = 0;
      for (int b = 7; b >= 0; --b)
        bits = (bits << 8) | static_cast<unsigned char>(raw[i * 8 + static_cast<std::size_t>(b)]);
      std::memcpy(&values[i], &bits, 8);
    }
  }
  Field u(spec, std::move(values));
  if (!all_finite(u))
    throw FieldIoError(FieldIoErrorKind::truncated_payload, "load_field: non-finite samples");
  return u;
}

}  // namespace frachole
