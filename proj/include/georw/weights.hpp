#pragma once

// Weight functions certifying that a rule set is weight-reducing.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "georw/rules.hpp"

namespace georw {

  // gamma: Symbol -> positive integer, extended additively to words.
  class WeightMap {
   public:
    explicit WeightMap(std::vector<std::uint64_t> weights);

    std::uint64_t operator()(Symbol s) const {
      return _weights.at(s.id);
    }
    std::uint64_t operator()(Word const& w) const;

    std::vector<std::uint64_t> const& weights() const noexcept {
      return _weights;
    }

   private:
    std::vector<std::uint64_t> _weights;
  };

  enum class WeightStatus {
    Found,
    // A nonnegative combination of the constraints is contradictory.
    Infeasible,
    // Rationally feasible (or undetermined) but no witness within the bound.
    BoundExhausted
  };

  struct WeightResult {
    WeightStatus             status = WeightStatus::BoundExhausted;
    std::optional<WeightMap> weights;
  };

  struct WeightOptions {
    std::uint64_t bound = 64;
    // Fourier-Motzkin gives up (BoundExhausted) past this many constraints.
    std::size_t max_constraints = 20000;
  };

  // Looks for gamma with gamma(lhs) >= gamma(rhs) + 1 for every relation
  // (read left to right) and 1 <= gamma(x) <= bound. Uniform weights are
  // tried first; otherwise exact Fourier-Motzkin elimination followed by
  // integer scaling.
  WeightResult weight_assignment(Alphabet const&          alphabet,
                                 std::span<Relation const> relations,
                                 WeightOptions const&      options = {});

  // True iff gamma(lhs) > gamma(rhs) for every relation.
  bool certifies(WeightMap const& gamma, std::span<Relation const> relations);

}  // namespace georw
