#pragma once

// Machine-readable reports. Field names and order are part of the CLI's
// --json contract.

#include <json.hpp>

#include "ablation.hpp"
#include "check_report.hpp"
#include "equivalence.hpp"

namespace hyperkit {

  using ordered_json = nlohmann::ordered_json;

  inline ordered_json to_json(ElemSet s) {
    return ordered_json(s.to_vector());
  }

  inline ordered_json to_json(Witness const& w) {
    ordered_json sets = ordered_json::array();
    for (auto const& s : w.sets) {
      sets.push_back(to_json(s));
    }
    return {{"elements", w.elements}, {"sets", sets}};
  }

  inline ordered_json to_json(CheckReport const& r) {
    ordered_json verdicts = ordered_json::array();
    for (auto const& v : r.verdicts()) {
      verdicts.push_back({{"axiom", v.axiom},
                          {"pass", v.pass()},
                          {"witness", v.witness ? to_json(*v.witness)
                                                : ordered_json(nullptr)}});
    }
    return {{"passed", r.passed()}, {"verdicts", verdicts}};
  }

  inline ordered_json to_json(StructureDiff const& d) {
    ordered_json details = ordered_json::array();
    for (auto const& x : d.details) {
      details.push_back({{"field", x.field},
                         {"at", x.at},
                         {"expected", x.expected},
                         {"actual", x.actual}});
    }
    return {{"kind", d.kind()}, {"details", details}};
  }

  inline ordered_json to_json(FamilySummary const& s) {
    ordered_json out = {{"size", s.size},
                        {"semilattices", s.semilattices},
                        {"nakano_valid", s.nakano_valid},
                        {"order_valid", s.order_valid},
                        {"bjoin_roundtrips", s.bjoin_roundtrips},
                        {"lmosaics_enumerated", s.lmosaics_enumerated}};
    if (s.lmosaics_enumerated) {
      out["lmosaics"]           = s.lmosaics;
      out["extract_valid"]      = s.extract_valid;
      out["lmosaic_roundtrips"] = s.lmosaic_roundtrips;
    }
    out["bijection"] = s.bijection ? ordered_json(*s.bijection)
                                   : ordered_json(nullptr);
    out["failures"] = s.failures;
    out["ok"]       = s.ok();
    return out;
  }

  inline ordered_json to_json(LMosaic const& m) {
    ordered_json table = ordered_json::array();
    for (Element x = 0; x < m.size(); ++x) {
      ordered_json row = ordered_json::array();
      for (Element y = 0; y < m.size(); ++y) {
        row.push_back(to_json(m.hyper(x, y)));
      }
      table.push_back(row);
    }
    return {{"kind", "lmosaic"},
            {"size", m.size()},
            {"e", m.e()},
            {"rho", m.rho()},
            {"table", table}};
  }

  inline ordered_json to_json(AblationResult const& r) {
    ordered_json broken = ordered_json::array();
    for (auto const& b : r.broken) {
      broken.push_back(
          {{"property", b.property}, {"witness", to_json(b.witness)}});
    }
    return {{"dropped", name(r.dropped)},
            {"structure", to_json(r.structure)},
            {"broken", broken}};
  }

}  // namespace hyperkit
