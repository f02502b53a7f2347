#pragma once

// Machine-readable reports. Field names are stable; see README.md.

#include <json.hpp>

#include "georw/completion.hpp"
#include "georw/confluence.hpp"
#include "georw/oracle.hpp"
#include "georw/pregroup.hpp"
#include "georw/rules.hpp"
#include "georw/triangular.hpp"
#include "georw/weights.hpp"

namespace georw {

  using Json = nlohmann::ordered_json;

  Json words_json(Alphabet const& a, std::vector<Word> const& words);
  Json rule_json(Alphabet const& a, Rule const& r);
  Json critical_pair_json(RewriteSystem const& sys, CriticalPair const& p);
  Json gp_verdict_json(RewriteSystem const& sys, GpVerdict const& v);
  Json completion_json(RewriteSystem const& input, CompletionResult const& r);
  Json axiom_report_json(Pregroup const& p, AxiomReport const& r);
  Json geodesic_check_json(RewriteSystem const& sys, GeodesicCheck const& c);
  Json weight_json(Alphabet const& a, WeightResult const& r);
  Json letter_classes_json(RewriteSystem const& sys, LetterClasses const& c);

  char const* to_string(OverlapKind k);
  char const* to_string(CompletionStatus s);
  char const* to_string(OracleVerdict v);
  char const* to_string(WeightStatus s);
  char const* to_string(TriangularKind k);
  char const* to_string(GeodesicCheckStatus s);

}  // namespace georw
