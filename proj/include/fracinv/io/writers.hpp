#pragma once
#include "fracinv/field.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fracinv::io {

std::uint64_t fnv1a(const std::string& text);

// write-to-temp + rename so readers never observe a partial file
void atomic_write(const std::string& path, const std::string& text);

// every writer returns the exact bytes written (handy for hashing / tests)

// columns t,x,y with full round-trip precision
std::string trajectory_csv(const std::vector<double>& t,
                           const std::vector<std::array<double, 2>>& x);

struct GridSpec {
  double x0 = -2, x1 = 2, y0 = -2, y1 = 2;
  int nx = 24, ny = 24;
};

// columns x,y,dx,dy over the grid
std::string quiver_csv(const PolyField2D& f, const GridSpec& g);

struct SvgOverlay {
  BiPoly g;          // curve drawn as the zero level set of g
  double level = 0;  // ... shifted to g = level
  std::string color = "#c0392b";
};

// direction field as unit arrows, plus zero-level-set overlays traced by
// marching squares on a dense sample grid, plus any trajectories
std::string field_svg(const PolyField2D& f, const GridSpec& g,
                      const std::vector<SvgOverlay>& overlays,
                      const std::vector<std::vector<std::array<double, 2>>>& trajectories = {});

// "<hex hash>  <name>\n" sidecar next to an output file
void write_hash_sidecar(const std::string& out_path, const std::string& content);

} // namespace fracinv::io
