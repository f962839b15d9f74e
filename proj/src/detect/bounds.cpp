#include "fracinv/detect/bounds.hpp"

#include "fracinv/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fracinv::detect {

namespace {

// line as A x + B y + C = 0, normalized so max|coef| = 1 and the first
// significant coefficient is positive
struct Line {
  double A = 0, B = 0, C = 0;
  std::string label;
  void normalize() {
    double peak = std::max({std::abs(A), std::abs(B), std::abs(C)});
    if (peak == 0) return;
    A /= peak;
    B /= peak;
    C /= peak;
    for (double v : {A, B, C}) {
      if (std::abs(v) > 1e-12) {
        if (v < 0) {
          A = -A;
          B = -B;
          C = -C;
        }
        break;
      }
    }
  }
  bool same_as(const Line& o) const {
    return std::abs(A - o.A) < 1e-9 && std::abs(B - o.B) < 1e-9 && std::abs(C - o.C) < 1e-9;
  }
};

std::string num_str(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// quantized direction key; vertical lines get their own class
std::string direction_key(const Line& l) {
  if (std::abs(l.B) < 1e-12) return "vertical";
  double slope = -l.A / l.B;
  return num_str(std::round(slope * 1e9) / 1e9);
}

} // namespace

BoundReport validate_line_bounds(const PolyField2D& f, const InvariantReport& lines) {
  BoundReport out;
  int n = std::max(f.degree(), 1);

  bool family = false;
  std::vector<Line> ls;
  for (const auto& c : lines.candidates) {
    if (c.infinite_family) {
      family = true;
      continue;
    }
    Line l;
    l.label = c.label;
    switch (c.kind) {
      case CurveKind::LineOrigin:
        l.A = -c.param_num.at("m");
        l.B = 1;
        l.C = 0;
        break;
      case CurveKind::LineVertical:
        l.A = 1;
        l.B = 0;
        l.C = -c.param_num.at("k");
        break;
      case CurveKind::LineHorizontal:
        l.A = 0;
        l.B = 1;
        l.C = -c.param_num.at("k");
        break;
      case CurveKind::LineAffine: {
        double m = c.param_num.at("m");
        l.A = -m;
        l.B = 1;
        l.C = m * c.param_num.at("x0") - c.param_num.at("y0");
        break;
      }
      default:
        continue; // not a line
    }
    l.normalize();
    bool dup = false;
    for (const auto& prev : ls)
      if (prev.same_as(l)) dup = true;
    if (!dup) ls.push_back(l);
  }

  if (family) {
    out.notes.push_back(
        "an infinite family of invariant lines is present; the finiteness bounds "
        "do not constrain this field");
  } else {
    // parallel classes: at most n lines each
    std::vector<std::pair<std::string, int>> classes;
    for (const auto& l : ls) {
      std::string key = direction_key(l);
      auto it = std::find_if(classes.begin(), classes.end(),
                             [&](const auto& p) { return p.first == key; });
      if (it == classes.end())
        classes.push_back({key, 1});
      else
        ++it->second;
    }
    for (const auto& [key, count] : classes)
      if (count > n) {
        out.ok = false;
        out.violations.push_back("direction " + key + " has " + std::to_string(count) +
                                 " parallel invariant lines; at most " + std::to_string(n) +
                                 " are possible for degree " + std::to_string(n));
      }

    // concurrent directions: at most n+1 through any single point
    std::vector<std::pair<double, double>> reported;
    for (size_t i = 0; i < ls.size(); ++i) {
      for (size_t j = i + 1; j < ls.size(); ++j) {
        double det = ls[i].A * ls[j].B - ls[j].A * ls[i].B;
        if (std::abs(det) < 1e-12) continue; // parallel
        double px = (-ls[i].C * ls[j].B + ls[j].C * ls[i].B) / det;
        double py = (-ls[i].A * ls[j].C + ls[j].A * ls[i].C) / det;
        bool seen = false;
        for (const auto& [sx, sy] : reported)
          if (std::abs(sx - px) < 1e-7 && std::abs(sy - py) < 1e-7) seen = true;
        if (seen) continue;
        std::vector<std::string> dirs;
        for (const auto& l : ls) {
          if (std::abs(l.A * px + l.B * py + l.C) > 1e-7 * (1 + std::abs(px) + std::abs(py)))
            continue;
          std::string key = direction_key(l);
          if (std::find(dirs.begin(), dirs.end(), key) == dirs.end()) dirs.push_back(key);
        }
        if (static_cast<int>(dirs.size()) > n + 1) {
          reported.push_back({px, py});
          out.ok = false;
          out.violations.push_back(
              "point (" + num_str(px) + ", " + num_str(py) + ") carries " +
              std::to_string(dirs.size()) + " invariant-line directions; at most " +
              std::to_string(n + 1) + " are possible for degree " + std::to_string(n));
        }
      }
    }
  }

  EquilibriaResult eq = find_equilibria(f);
  if (eq.degenerate) {
    out.notes.push_back("equilibria are not isolated; the n^2 count does not apply");
  } else if (static_cast<int>(eq.points.size()) > n * n) {
    out.ok = false;
    out.violations.push_back("found " + std::to_string(eq.points.size()) +
                             " isolated equilibria; at most " + std::to_string(n * n) +
                             " are possible for degree " + std::to_string(n));
  }
  return out;
}

} // namespace fracinv::detect
