#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "frachole/grid.hpp"

using namespace frachole;

namespace {

Field random_field(const GridSpec& spec, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  Field u(spec);
  for (auto& v : u.values) v = dist(rng);
  return u;
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("make_grid arithmetic and preconditions") {
  const GridSpec g = make_grid(1, 10.0, 16);
  CHECK(g.spacing() == doctest::Approx(1.25));
  CHECK(g.spacing() * g.points_per_dim == 2.0 * g.half_extent);  // exact for powers of two
  CHECK(make_grid(2, 8.0, 8).node_count() == 64);
  CHECK_THROWS_AS(make_grid(1, 10.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(3, 10.0, 16), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1, -1.0, 16), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1, 1.0, 4), std::invalid_argument);
}

TEST_CASE("node coordinates come in exact +/- pairs") {
  const GridSpec g = make_grid(1, 7.3, 64);
  for (int i = 1; i < 64; ++i) CHECK(g.coord(64 - i) == -g.coord(i));
  CHECK(g.coord(32) == 0.0);
}

TEST_CASE("translate is an exact periodic permutation") {
  const GridSpec g = make_grid(2, 5.0, 16);
  const Field u = random_field(g, 42);

  const Field same = translate(u, {0, 0});
  CHECK(same.values == u.values);

  const Field back = translate(translate(u, {3, -5}), {-3, 5});
  CHECK(back.values == u.values);

  // single-peak moves by the shift, wrapping around
  Field peak(g);
  peak.at(15, 2) = 1.0;
  const Field moved = translate(peak, {3, 0});
  CHECK(moved.at(2, 2) == 1.0);

  auto sorted = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(translate(u, {7, 11}).values) == sorted(u.values));
}

TEST_CASE("canonical rotation is invariant under translation") {
  const GridSpec g = make_grid(2, 4.0, 16);
  const Field u = random_field(g, 9);
  const Field c0 = canonical_rotation(u);
  const Field c1 = canonical_rotation(translate(u, {5, 9}));
  CHECK(c0.values == c1.values);
}

TEST_CASE("frf1 roundtrip is bit exact") {
  const GridSpec g = make_grid(2, 3.5, 16);
  const Field u = random_field(g, 1234);
  const auto path = temp_file("frachole_roundtrip.frf");
  save_field(u, path);
  const Field v = load_field(path);
  CHECK(v.spec == u.spec);
  CHECK(v.values == u.values);
  std::filesystem::remove(path);
}

TEST_CASE("frf1 error taxonomy") {
  const auto path = temp_file("frachole_bad.frf");

  {
    std::ofstream os(path, std::ios::binary);
    os << R"({"magic":"NOPE","dim":1,"L":1.0,"M":8})" << '\n';
  }
  CHECK_THROWS_WITH_AS(load_field(path), doctest::Contains("header"), FieldIoError);
  try {
    load_field(path);
  } catch (const FieldIoError& e) {
    CHECK(e.kind() == FieldIoErrorKind::malformed_header);
  }

  {
    std::ofstream os(path, std::ios::binary);
    os << R"({"magic":"FRF1","dim":3,"L":1.0,"M":8})" << '\n';
  }
  try {
    load_field(path);
    CHECK(false);
  } catch (const FieldIoError& e) {
    CHECK(e.kind() == FieldIoErrorKind::dimension_mismatch);
  }

  {
    const GridSpec g = make_grid(1, 1.0, 16);
    Field u(g);
    save_field(u, path);
    // chop the payload
    std::filesystem::resize_file(path, std::filesystem::file_size(path) - 24);
  }
  try {
    load_field(path);
    CHECK(false);
  } catch (const FieldIoError& e) {
    CHECK(e.kind() == FieldIoErrorKind::truncated_payload);
  }
  std::filesystem::remove(path);
}
