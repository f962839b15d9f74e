#include "fracinv/io/writers.hpp"
#include "fracinv/par/kernels.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace fracinv::io {
namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

} // namespace

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void atomic_write(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string trajectory_csv(const std::vector<double>& t,
                           const std::vector<std::array<double, 2>>& x) {
  if (t.size() != x.size()) throw std::invalid_argument("trajectory_csv: length mismatch");
  std::string out = "t,x,y\n";
  for (std::size_t i = 0; i < t.size(); ++i)
    out += fmt17(t[i]) + "," + fmt17(x[i][0]) + "," + fmt17(x[i][1]) + "\n";
  return out;
}

std::string quiver_csv(const PolyField2D& f, const GridSpec& g) {
  std::string out = "x,y,dx,dy\n";
  std::vector<double> u(std::size_t(g.nx) * g.ny), v(std::size_t(g.nx) * g.ny);
  par::grid_eval(
      g.nx, g.ny, g.x0, g.x1, g.y0, g.y1,
      [&](double x, double y) { return f.eval_d(x, y); }, u.data(), v.data(), true);
  for (int iy = 0; iy < g.ny; ++iy)
    for (int ix = 0; ix < g.nx; ++ix) {
      double x = g.x0 + (g.x1 - g.x0) * ix / (g.nx - 1);
      double y = g.y0 + (g.y1 - g.y0) * iy / (g.ny - 1);
      std::size_t k = std::size_t(iy) * g.nx + ix;
      out += fmt17(x) + "," + fmt17(y) + "," + fmt17(u[k]) + "," + fmt17(v[k]) + "\n";
    }
  return out;
}

namespace {

struct Mapper {
  double x0, y0, sx, sy, h;
  double X(double x) const { return (x - x0) * sx; }
  double Y(double y) const { return h - (y - y0) * sy; } // svg y runs downward
};

// marching squares over a sampled scalar map; emits polyline segments of the
// zero crossing, one svg path per cell segment (short, but robust and cheap)
void trace_zero_set(const std::vector<double>& s, int nx, int ny, const GridSpec& g,
                    const Mapper& m, const std::string& color, std::string& out) {
  auto sx = [&](int ix) { return g.x0 + (g.x1 - g.x0) * ix / (nx - 1); };
  auto sy = [&](int iy) { return g.y0 + (g.y1 - g.y0) * iy / (ny - 1); };
  auto at = [&](int ix, int iy) { return s[std::size_t(iy) * nx + ix]; };
  auto interp = [](double a, double b) { return a / (a - b); }; // zero between samples
  for (int iy = 0; iy + 1 < ny; ++iy)
    for (int ix = 0; ix + 1 < nx; ++ix) {
      double v00 = at(ix, iy), v10 = at(ix + 1, iy);
      double v01 = at(ix, iy + 1), v11 = at(ix + 1, iy + 1);
      if (!std::isfinite(v00) || !std::isfinite(v10) || !std::isfinite(v01) ||
          !std::isfinite(v11))
        continue;
      int code = (v00 > 0 ? 1 : 0) | (v10 > 0 ? 2 : 0) | (v11 > 0 ? 4 : 0) | (v01 > 0 ? 8 : 0);
      if (code == 0 || code == 15) continue;
      double xa = sx(ix), xb = sx(ix + 1), ya = sy(iy), yb = sy(iy + 1);
      // edge crossing points: bottom(0), right(1), top(2), left(3)
      std::array<std::array<double, 2>, 4> pt{};
      std::array<bool, 4> hit{};
      if ((v00 > 0) != (v10 > 0)) {
        pt[0] = {xa + (xb - xa) * interp(v00, v10), ya};
        hit[0] = true;
      }
      if ((v10 > 0) != (v11 > 0)) {
        pt[1] = {xb, ya + (yb - ya) * interp(v10, v11)};
        hit[1] = true;
      }
      if ((v01 > 0) != (v11 > 0)) {
        pt[2] = {xa + (xb - xa) * interp(v01, v11), yb};
        hit[2] = true;
      }
      if ((v00 > 0) != (v01 > 0)) {
        pt[3] = {xa, ya + (yb - ya) * interp(v00, v01)};
        hit[3] = true;
      }
      std::array<int, 4> got{};
      int n = 0;
      for (int e = 0; e < 4; ++e)
        if (hit[e]) got[n++] = e;
      // saddle cells (n == 4) get split along the two natural pairings
      for (int k = 0; k + 1 < n; k += 2) {
        const auto& p = pt[got[k]];
        const auto& q = pt[got[k + 1]];
        out += "<line x1=\"" + fmt6(m.X(p[0])) + "\" y1=\"" + fmt6(m.Y(p[1])) + "\" x2=\"" +
               fmt6(m.X(q[0])) + "\" y2=\"" + fmt6(m.Y(q[1])) + "\" stroke=\"" + color +
               "\" stroke-width=\"1.6\"/>\n";
      }
    }
}

} // namespace

std::string field_svg(const PolyField2D& f, const GridSpec& g,
                      const std::vector<SvgOverlay>& overlays,
                      const std::vector<std::vector<std::array<double, 2>>>& trajectories) {
  const double W = 640, H = 640;
  Mapper m{g.x0, g.y0, W / (g.x1 - g.x0), H / (g.y1 - g.y0), H};
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt6(W) + "\" height=\"" +
         fmt6(H) + "\" viewBox=\"0 0 " + fmt6(W) + " " + fmt6(H) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes if they cross the window
  if (g.x0 < 0 && g.x1 > 0)
    out += "<line x1=\"" + fmt6(m.X(0)) + "\" y1=\"0\" x2=\"" + fmt6(m.X(0)) + "\" y2=\"" +
           fmt6(H) + "\" stroke=\"#ccc\"/>\n";
  if (g.y0 < 0 && g.y1 > 0)
    out += "<line x1=\"0\" y1=\"" + fmt6(m.Y(0)) + "\" x2=\"" + fmt6(W) + "\" y2=\"" +
           fmt6(m.Y(0)) + "\" stroke=\"#ccc\"/>\n";

  // unit arrows on the quiver grid
  std::vector<double> u(std::size_t(g.nx) * g.ny), v(std::size_t(g.nx) * g.ny);
  par::grid_eval(
      g.nx, g.ny, g.x0, g.x1, g.y0, g.y1,
      [&](double x, double y) { return f.eval_d(x, y); }, u.data(), v.data(), true);
  double alen = 0.38 * std::min((g.x1 - g.x0) / (g.nx - 1), (g.y1 - g.y0) / (g.ny - 1));
  for (int iy = 0; iy < g.ny; ++iy)
    for (int ix = 0; ix < g.nx; ++ix) {
      std::size_t k = std::size_t(iy) * g.nx + ix;
      double nrm = std::hypot(u[k], v[k]);
      if (!(nrm > 0) || !std::isfinite(nrm)) continue;
      double x = g.x0 + (g.x1 - g.x0) * ix / (g.nx - 1);
      double y = g.y0 + (g.y1 - g.y0) * iy / (g.ny - 1);
      double dx = alen * u[k] / nrm, dy = alen * v[k] / nrm;
      double x1 = x - dx, y1 = y - dy, x2 = x + dx, y2 = y + dy;
      // small head: two strokes rotated +-150 degrees off the shaft
      double hx = -dx * 0.45, hy = -dy * 0.45;
      double c = std::cos(0.5), s = std::sin(0.5);
      out += "<line x1=\"" + fmt6(m.X(x1)) + "\" y1=\"" + fmt6(m.Y(y1)) + "\" x2=\"" +
             fmt6(m.X(x2)) + "\" y2=\"" + fmt6(m.Y(y2)) +
             "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
      out += "<line x1=\"" + fmt6(m.X(x2)) + "\" y1=\"" + fmt6(m.Y(y2)) + "\" x2=\"" +
             fmt6(m.X(x2 + hx * c - hy * s)) + "\" y2=\"" + fmt6(m.Y(y2 + hx * s + hy * c)) +
             "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
      out += "<line x1=\"" + fmt6(m.X(x2)) + "\" y1=\"" + fmt6(m.Y(y2)) + "\" x2=\"" +
             fmt6(m.X(x2 + hx * c + hy * s)) + "\" y2=\"" + fmt6(m.Y(y2 - hx * s + hy * c)) +
             "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
    }

  // overlays sampled on a denser grid than the arrows
  const int dn = 161;
  std::vector<double> su(std::size_t(dn) * dn), sv(std::size_t(dn) * dn);
  for (const auto& ov : overlays) {
    par::grid_eval(
        dn, dn, g.x0, g.x1, g.y0, g.y1,
        [&](double x, double y) {
          return std::array<double, 2>{ov.g.eval_d(x, y) - ov.level, 0.0};
        },
        su.data(), sv.data(), true);
    trace_zero_set(su, dn, dn, g, m, ov.color, out);
  }

  for (const auto& traj : trajectories) {
    if (traj.size() < 2) continue;
    std::string pts;
    for (const auto& p : traj) {
      if (!std::isfinite(p[0]) || !std::isfinite(p[1])) break;
      pts += fmt6(m.X(p[0])) + "," + fmt6(m.Y(p[1])) + " ";
    }
    out += "<polyline points=\"" + pts +
           "\" fill=\"none\" stroke=\"#2062af\" stroke-width=\"1.8\"/>\n";
  }

  out += "</svg>\n";
  return out;
}

void write_hash_sidecar(const std::string& out_path, const std::string& content) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(content));
  std::filesystem::path p(out_path);
  atomic_write(out_path + ".hash", std::string(buf) + "  " + p.filename().string() + "\n");
}

} // namespace fracinv::io
