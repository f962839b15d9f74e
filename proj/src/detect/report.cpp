#include "fracinv/detect/candidate.hpp"
#include "fracinv/detect/report.hpp"

#include <json.hpp>

namespace fracinv::detect {

const char* kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::LineOrigin: return "line-origin";
    case CurveKind::LineVertical: return "line-vertical";
    case CurveKind::LineHorizontal: return "line-horizontal";
    case CurveKind::LineAffine: return "line-affine";
    case CurveKind::ParabolaYofX: return "parabola-y-of-x";
    case CurveKind::ParabolaXofY: return "parabola-x-of-y";
    case CurveKind::RotatedConic: return "rotated-conic";
    case CurveKind::CubicGraph: return "cubic-graph";
    case CurveKind::PowerCurve: return "power-curve";
    case CurveKind::ExpCurve: return "exponential-curve";
    case CurveKind::LevelSet: return "level-set";
  }
  return "unknown";
}

void InvariantReport::classify() {
  bool family = false;
  for (const auto& c : candidates) family = family || c.infinite_family;
  if (family)
    classification = "infinite-family";
  else if (candidates.empty())
    classification = "none";
  else if (candidates.size() == 1)
    classification = "single";
  else
    classification = "finite-set";
}

InvariantReport merge_reports(const std::vector<InvariantReport>& parts) {
  InvariantReport out;
  // same geometric object can surface from several detectors (an origin line
  // is also an affine line); collapse on the implicit form when there is one
  auto key = [](const CurveCandidate& c) {
    if (!c.g.is_zero() && !c.infinite_family) return std::string("g:") + c.g.str();
    return std::string(kind_name(c.kind)) + ":" + c.label;
  };
  for (const auto& p : parts) {
    for (const auto& c : p.candidates) {
      bool dup = false;
      for (const auto& have : out.candidates)
        if (key(have) == key(c)) dup = true;
      if (!dup) out.candidates.push_back(c);
    }
    for (const auto& d : p.diagnostics) out.diagnostics.push_back(d);
  }
  out.classify();
  return out;
}

Certificate certify_exact(const PolyField2D& f, const BiPoly& g) {
  DarbouxResult dr = darboux_check(f, g);
  if (!dr.invariant)
    throw std::logic_error("internal: exact certificate failed for " + g.str() +
                           " (remainder " + dr.remainder.str() + ")");
  Certificate cert;
  cert.exact = true;
  cert.kind = "darboux-cofactor";
  cert.cofactor = dr.cofactor.str();
  return cert;
}

nlohmann::json report_json(const InvariantReport& rep) {
  nlohmann::json j;
  j["classification"] = rep.classification;
  j["diagnostics"] = rep.diagnostics;
  j["candidates"] = nlohmann::json::array();
  for (const auto& c : rep.candidates) {
    nlohmann::json cj;
    cj["kind"] = kind_name(c.kind);
    cj["label"] = c.label;
    cj["clause"] = c.clause;
    cj["infinite_family"] = c.infinite_family;
    if (!c.family_desc.empty()) cj["family"] = c.family_desc;
    cj["params_exact"] = c.params_exact;
    nlohmann::json pj = nlohmann::json::object();
    for (const auto& [name, v] : c.param) pj[name] = v.str();
    cj["param"] = pj;
    nlohmann::json pn = nlohmann::json::object();
    for (const auto& [name, v] : c.param_num) pn[name] = v;
    cj["param_numeric"] = pn;
    if (!c.g.is_zero()) cj["implicit"] = c.g.str();
    cj["certificate"] = {{"exact", c.cert.exact},
                         {"kind", c.cert.kind},
                         {"cofactor", c.cert.cofactor},
                         {"detail", c.cert.detail},
                         {"residual", c.cert.residual}};
    j["candidates"].push_back(cj);
  }
  return j;
}

} // namespace fracinv::detect
