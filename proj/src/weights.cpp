#include "georw/weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <boost/rational.hpp>

#include "georw/errors.hpp"

namespace georw {

  WeightMap::WeightMap(std::vector<std::uint64_t> weights)
      : _weights(std::move(weights)) {
    for (auto w : _weights) {
      if (w == 0) {
        throw StructureError("weights must be positive");
      }
    }
  }

  std::uint64_t WeightMap::operator()(Word const& w) const {
    std::uint64_t total = 0;
    for (auto s : w) {
      total += (*this)(s);
    }
    return total;
  }

  bool certifies(WeightMap const& gamma, std::span<Relation const> relations) {
    return std::all_of(relations.begin(), relations.end(), [&](Relation const& r) {
      return gamma(r.lhs) > gamma(r.rhs);
    });
  }

  namespace {
    using Rational = boost::rational<std::int64_t>;

    // sum coef[i] * x[i] >= bound
    struct Constraint {
      std::vector<std::int64_t> coef;
      std::int64_t              bound = 0;

      friend auto operator<=>(Constraint const&, Constraint const&) = default;
    };

    struct Overflow {};

    std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw Overflow{};
      }
      return r;
    }

    std::int64_t checked_add(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw Overflow{};
      }
      return r;
    }

    void normalise(Constraint& c) {
      std::int64_t g = std::abs(c.bound);
      for (auto x : c.coef) {
        g = std::gcd(g, std::abs(x));
      }
      if (g > 1) {
        for (auto& x : c.coef) {
          x /= g;
        }
        c.bound /= g;
      }
    }

    // Eliminates variable v from `in`.
    std::set<Constraint> eliminate(std::set<Constraint> const& in, std::size_t v) {
      std::set<Constraint>           out;
      std::vector<Constraint const*> pos, neg;
      for (auto const& c : in) {
        if (c.coef[v] > 0) {
          pos.push_back(&c);
        } else if (c.coef[v] < 0) {
          neg.push_back(&c);
        } else {
          out.insert(c);
        }
      }
      for (auto* p : pos) {
        for (auto* n : neg) {
          std::int64_t a = -n->coef[v];  // multiplier of p
          std::int64_t b = p->coef[v];   // multiplier of n
          Constraint   c;
          c.coef.resize(p->coef.size());
          for (std::size_t i = 0; i < c.coef.size(); ++i) {
            c.coef[i] = checked_add(checked_mul(a, p->coef[i]),
                                    checked_mul(b, n->coef[i]));
          }
          c.bound = checked_add(checked_mul(a, p->bound), checked_mul(b, n->bound));
          normalise(c);
          out.insert(std::move(c));
        }
      }
      return out;
    }
  }  // namespace

  WeightResult weight_assignment(Alphabet const&           alphabet,
                                 std::span<Relation const> relations,
                                 WeightOptions const&      options) {
    if (alphabet.empty()) {
      throw PreconditionError("weight assignment over an empty alphabet");
    }
    std::size_t const n = alphabet.size();
    for (auto const& r : relations) {
      alphabet.validate(r.lhs);
      alphabet.validate(r.rhs);
    }

    WeightMap uniform(std::vector<std::uint64_t>(n, 1));
    if (certifies(uniform, relations)) {
      return WeightResult{WeightStatus::Found, uniform};
    }

    std::set<Constraint> system;
    for (std::size_t i = 0; i < n; ++i) {
      Constraint c{std::vector<std::int64_t>(n, 0), 1};
      c.coef[i] = 1;
      system.insert(c);
    }
    for (auto const& r : relations) {
      Constraint c{std::vector<std::int64_t>(n, 0), 1};
      for (auto s : r.lhs) {
        ++c.coef[s.id];
      }
      for (auto s : r.rhs) {
        --c.coef[s.id];
      }
      normalise(c);
      system.insert(std::move(c));
    }

    // stages[j] involves only variables j, ..., n - 1.
    std::vector<std::set<Constraint>> stages{system};
    try {
      for (std::size_t v = 0; v < n; ++v) {
        stages.push_back(eliminate(stages.back(), v));
        if (stages.back().size() > options.max_constraints) {
          return WeightResult{WeightStatus::BoundExhausted, std::nullopt};
        }
      }
    } catch (Overflow const&) {
      return WeightResult{WeightStatus::BoundExhausted, std::nullopt};
    }
    for (auto const& c : stages.back()) {
      if (c.bound > 0) {
        return WeightResult{WeightStatus::Infeasible, std::nullopt};
      }
    }

    // Back substitution, always taking the largest lower bound.
    std::vector<Rational> value(n, Rational(0));
    try {
      for (std::size_t j = n; j-- > 0;) {
        Rational lower(1);
        for (auto const& c : stages[j]) {
          if (c.coef[j] <= 0) {
            continue;
          }
          Rational rest(c.bound);
          for (std::size_t i = j + 1; i < n; ++i) {
            rest -= Rational(c.coef[i]) * value[i];
          }
          lower = std::max(lower, rest / Rational(c.coef[j]));
        }
        value[j] = lower;
      }
    } catch (boost::bad_rational const&) {
      return WeightResult{WeightStatus::BoundExhausted, std::nullopt};
    }

    std::int64_t scale = 1;
    for (auto const& v : value) {
      scale = std::lcm(scale, v.denominator());
    }
    std::vector<std::uint64_t> weights(n);
    std::uint64_t              g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto scaled = value[i] * Rational(scale);
      weights[i]  = static_cast<std::uint64_t>(scaled.numerator());
      g           = std::gcd(g, weights[i]);
    }
    for (auto& w : weights) {
      w /= g;
    }
    // c.(L x) >= L > 0 and c.(L x / g) is an integer, so strictness survives
    // the division.
    WeightMap gamma(weights);
    if (*std::max_element(weights.begin(), weights.end()) > options.bound
        || !certifies(gamma, relations)) {
      return WeightResult{WeightStatus::BoundExhausted, std::nullopt};
    }
    return WeightResult{WeightStatus::Found, gamma};
  }

}  // namespace georw
