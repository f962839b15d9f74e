#pragma once
#include "fracinv/field.hpp"

#include <map>
#include <string>
#include <vector>

namespace fracinv::detect {

enum class CurveKind {
  LineOrigin,    // y = m x
  LineVertical,  // x = k
  LineHorizontal,// y = l
  LineAffine,    // y - y0 = m (x - x0)
  ParabolaYofX,  // y = m x^2
  ParabolaXofY,  // x = m y^2
  RotatedConic,  // m1 x^2 + m2 xy + m3 y^2 + m4 x + m5 y = 0
  CubicGraph,    // y = x^3 + m x^2 + u x
  PowerCurve,    // y = m x^k (family in m)
  ExpCurve,      // y = m e^x (family in m)
  LevelSet       // H(x,y) = c
};
const char* kind_name(CurveKind k);

struct Certificate {
  bool exact = false;
  std::string kind;     // "darboux-cofactor" | "tangency-identity" | "numeric-residual"
  std::string cofactor; // printable cofactor K for darboux certificates
  std::string detail;   // equalities used, or a witness description
  double residual = 0;  // numeric defect magnitude when exact == false
};

struct CurveCandidate {
  CurveKind kind{};
  std::map<std::string, Quad> param;       // exact named parameters
  std::map<std::string, double> param_num; // numeric view (always filled)
  bool params_exact = true;
  BiPoly g;                    // implicit polynomial form when one exists
  bool infinite_family = false;
  std::string family_desc;
  std::string clause; // theorem clause / branch that produced this candidate
  Certificate cert;
  std::string label;

  void set_param(const std::string& name, const Quad& v) {
    param[name] = v;
    param_num[name] = v.to_double();
  }
  void set_param_numeric(const std::string& name, double v) {
    param_num[name] = v;
    params_exact = false;
  }
};

struct InvariantReport {
  std::vector<CurveCandidate> candidates;
  std::string classification = "none"; // none | single | finite-set | infinite-family
  std::vector<std::string> diagnostics;
  void classify();
};

InvariantReport merge_reports(const std::vector<InvariantReport>& parts);

// exact darboux certificate helper: throws std::logic_error when the curve
// fails the exact check (detectors only call it on proven candidates)
Certificate certify_exact(const PolyField2D& f, const BiPoly& g);

} // namespace fracinv::detect
