#include "macc/bound_export.hpp"

#include <ostream>

namespace macc::bounds {

namespace {

nlohmann::ordered_json params_json(const MaccParams& p) {
  nlohmann::ordered_json j;
  j["K"] = p.K;
  j["L"] = p.L;
  j["N"] = p.N;
  return j;
}

}  // namespace

std::string witness_label(const BoundPoint& point, int b_cap) {
  std::string label = point.witness.to_string();
  if (point.witness.family == BoundFamily::hkd_lemma2 && b_cap > 0) {
    label += ";bcap=" + std::to_string(b_cap);
  }
  return label;
}

void write_curves_csv(std::ostream& os, const std::vector<BoundCurve>& curves) {
  os << kCurveCsvHeader << '\n';
  for (const BoundCurve& curve : curves) {
    if (!curve.applicable) continue;
    for (const BoundPoint& pt : curve.points) {
      const Rational shown = pt.display();
      std::string family(family_id(curve.family));
      if (curve.family == BoundFamily::best) {
        family += ":" + std::string(family_id(pt.witness.family));
      }
      os << pt.M.to_string() << ',' << shown.to_string() << ',' << family << ','
         << witness_label(pt, curve.b_cap) << ',' << pt.M.to_decimal() << ','
         << shown.to_decimal() << '\n';
    }
  }
}

nlohmann::ordered_json curves_to_json(const MaccParams& params, const std::vector<BoundCurve>& curves) {
  nlohmann::ordered_json root;
  root["params"] = params_json(params);
  root["curves"] = nlohmann::ordered_json::array();
  for (const BoundCurve& curve : curves) {
    nlohmann::ordered_json c;
    c["family"] = std::string(family_id(curve.family));
    c["applicable"] = curve.applicable;
    if (curve.b_cap > 0) c["b_cap"] = curve.b_cap;
    c["points"] = nlohmann::ordered_json::array();
    if (curve.applicable) {
      for (const BoundPoint& pt : curve.points) {
        nlohmann::ordered_json p;
        p["M"] = pt.M.to_string();
        p["M_decimal"] = pt.M.to_decimal();
        p["R"] = pt.display().to_string();
        p["R_decimal"] = pt.display().to_decimal();
        p["R_raw"] = pt.R.to_string();
        p["winner"] = std::string(family_id(pt.witness.family));
        p["witness"] = witness_label(pt, curve.b_cap);
        c["points"].push_back(std::move(p));
      }
    }
    root["curves"].push_back(std::move(c));
  }
  return root;
}

void write_dominance_csv(std::ostream& os, const DominanceReport& report) {
  os << "M,improved_thm2,cutset_thm1,hkd2_lemma3,improved_margin,cap_margin,improved_checked,ok\n";
  for (const DominanceEntry& e : report.entries) {
    os << e.M.to_string() << ',' << e.improved.to_string() << ',' << e.cutset.to_string() << ','
       << e.lemma3.to_string() << ',' << (e.improved - e.cutset).to_string() << ','
       << (e.cutset - e.lemma3).to_string() << ',' << (e.improved_checked ? 1 : 0) << ','
       << ((e.improved_ok && e.cap_ok) ? 1 : 0) << '\n';
  }
}

nlohmann::ordered_json dominance_to_json(const DominanceReport& report) {
  nlohmann::ordered_json root;
  root["params"] = params_json(report.params);
  root["ok"] = report.ok();
  root["points"] = nlohmann::ordered_json::array();
  for (const DominanceEntry& e : report.entries) {
    nlohmann::ordered_json p;
    p["M"] = e.M.to_string();
    p["improved_thm2"] = e.improved.to_string();
    p["cutset_thm1"] = e.cutset.to_string();
    p["hkd2_lemma3"] = e.lemma3.to_string();
    p["improved_margin"] = (e.improved - e.cutset).to_string();
    p["cap_margin"] = (e.cutset - e.lemma3).to_string();
    p["improved_checked"] = e.improved_checked;
    root["points"].push_back(std::move(p));
  }
  root["violations"] = nlohmann::ordered_json::array();
  for (const DominanceViolation& v : report.violations) {
    nlohmann::ordered_json j;
    j["M"] = v.M.to_string();
    j["relation"] = v.relation;
    j["lhs"] = v.lhs.to_string();
    j["rhs"] = v.rhs.to_string();
    root["violations"].push_back(std::move(j));
  }
  return root;
}

}  // namespace macc::bounds
