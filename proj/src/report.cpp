#include "georw/report.hpp"

namespace georw {

  char const* to_string(OverlapKind k) {
    switch (k) {
      case OverlapKind::LeftOverlap: return "left_overlap";
      case OverlapKind::RightOverlap: return "right_overlap";
      case OverlapKind::Inclusion: return "inclusion";
    }
    return "?";
  }

  char const* to_string(CompletionStatus s) {
    switch (s) {
      case CompletionStatus::Completed: return "Completed";
      case CompletionStatus::PhaseLimitReached: return "PhaseLimitReached";
      case CompletionStatus::ResourceError: return "ResourceError";
    }
    return "?";
  }

  char const* to_string(OracleVerdict v) {
    switch (v) {
      case OracleVerdict::Equal: return "Equal";
      case OracleVerdict::Distinct: return "Distinct";
      case OracleVerdict::Unknown: return "Unknown";
    }
    return "?";
  }

  char const* to_string(WeightStatus s) {
    switch (s) {
      case WeightStatus::Found: return "Found";
      case WeightStatus::Infeasible: return "Infeasible";
      case WeightStatus::BoundExhausted: return "BoundExhausted";
    }
    return "?";
  }

  char const* to_string(TriangularKind k) {
    switch (k) {
      case TriangularKind::Triangular: return "Triangular";
      case TriangularKind::AlmostTriangular: return "AlmostTriangular";
      case TriangularKind::Neither: return "Neither";
    }
    return "?";
  }

  char const* to_string(GeodesicCheckStatus s) {
    switch (s) {
      case GeodesicCheckStatus::ConsistentUpTo: return "ConsistentUpTo";
      case GeodesicCheckStatus::Counterexample: return "Counterexample";
      case GeodesicCheckStatus::Undecided: return "Undecided";
    }
    return "?";
  }

  Json words_json(Alphabet const& a, std::vector<Word> const& words) {
    Json out = Json::array();
    for (auto const& w : words) {
      out.push_back(a.format(w));
    }
    return out;
  }

  Json rule_json(Alphabet const& a, Rule const& r) {
    return Json{{"lhs", a.format(r.lhs)}, {"rhs", a.format(r.rhs)}};
  }

  Json critical_pair_json(RewriteSystem const& sys, CriticalPair const& p) {
    auto const& a = sys.alphabet();
    return Json{{"z", a.format(p.z)},
                {"x", a.format(p.x)},
                {"y", a.format(p.y)},
                {"rule1", rule_json(a, sys.rule(p.rule1))},
                {"pos1", p.pos1},
                {"rule2", rule_json(a, sys.rule(p.rule2))},
                {"pos2", p.pos2},
                {"kind", to_string(p.kind)}};
  }

  Json gp_verdict_json(RewriteSystem const& sys, GpVerdict const& v) {
    Json out{{"holds", v.holds}, {"pairs_checked", v.pairs_checked}};
    if (v.witness) {
      auto w                     = critical_pair_json(sys, v.witness->pair);
      w["x_descendant_count"]    = v.witness->x_descendants.size();
      w["y_descendant_count"]    = v.witness->y_descendants.size();
      w["x_descendants"]         = words_json(sys.alphabet(), v.witness->x_descendants);
      w["y_descendants"]         = words_json(sys.alphabet(), v.witness->y_descendants);
      out["witness"]             = std::move(w);
    } else {
      out["witness"] = nullptr;
    }
    return out;
  }

  Json completion_json(RewriteSystem const&, CompletionResult const& r) {
    auto const& a      = r.system.alphabet();
    Json        phases = Json::array();
    for (auto const& p : r.phases) {
      Json red = Json::array();
      for (auto const& x : p.added_reducing) {
        red.push_back(rule_json(a, x.rule));
      }
      Json pres = Json::array();
      for (auto const& x : p.added_preserving) {
        pres.push_back(rule_json(a, x.rule));
      }
      phases.push_back(Json{{"phase", p.index},
                            {"pairs_examined", p.pairs_examined},
                            {"added_reducing", std::move(red)},
                            {"added_preserving", std::move(pres)},
                            {"rules_after", p.rules_after}});
    }
    Json out{{"status", to_string(r.status)},
             {"phases", std::move(phases)},
             {"reducing_rules", r.system.reducing().size()},
             {"preserving_rules", r.system.preserving().size()}};
    if (!r.message.empty()) {
      out["message"] = r.message;
    }
    return out;
  }

  Json axiom_report_json(Pregroup const& p, AxiomReport const& r) {
    Json out{{"all_hold", r.all_hold()}};
    for (std::size_t i = 0; i < r.axioms.size(); ++i) {
      Json ce = nullptr;
      if (!r.axioms[i].holds) {
        ce = Json::array();
        for (auto e : r.axioms[i].counterexample) {
          ce.push_back(p.name(e));
        }
      }
      out["P" + std::to_string(i + 1)] = Json{{"holds", r.axioms[i].holds}, {"counterexample", ce}};
    }
    return out;
  }

  Json geodesic_check_json(RewriteSystem const& sys, GeodesicCheck const& c) {
    auto const& a = sys.alphabet();
    Json        out{{"status", to_string(c.status)}, {"max_len", c.max_len}};
    out["word"]    = c.word ? Json(a.format(*c.word)) : Json(nullptr);
    out["shorter"] = c.shorter ? Json(a.format(*c.shorter)) : Json(nullptr);
    return out;
  }

  Json weight_json(Alphabet const& a, WeightResult const& r) {
    Json out{{"status", to_string(r.status)}};
    if (r.weights) {
      Json w = Json::object();
      for (std::size_t i = 0; i < a.size(); ++i) {
        w[a.names()[i]] = (*r.weights)(a.symbol(i));
      }
      out["weights"] = std::move(w);
    } else {
      out["weights"] = nullptr;
    }
    return out;
  }

  Json letter_classes_json(RewriteSystem const& sys, LetterClasses const& c) {
    Json classes = Json::array();
    for (auto const& cls : c.classes) {
      Json members = Json::array();
      for (auto s : cls) {
        members.push_back(sys.alphabet().name(s));
      }
      classes.push_back(std::move(members));
    }
    return Json{{"classes", std::move(classes)}, {"eps_class", c.eps_class}};
  }

}  // namespace georw
