#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rph/dag.hpp"
#include "rph/robust_paths.hpp"
#include "rph/route.hpp"

namespace rph {

struct LawCheck {
  enum class Relation { Equal, Contains };

  std::string law;        // e.g. "parallel.i"
  std::size_t order = 0;  // chain order p the check is about
  Relation relation = Relation::Equal;
  std::int64_t combined = 0;  // value measured on the combination
  std::int64_t expected = 0;  // value predicted from the components
  bool holds = false;
  bool asserted = true;  // false for observations that are reported only
  bool strict = false;   // Contains: the combination has strictly more elements
};

struct LawReport {
  std::vector<LawCheck> checks;

  bool all_asserted_hold() const;
};

// Compares chain dimensions of first || second with those of the components:
//   parallel.i   dim Omega_0 = sum - 2
//   parallel.ii  dim Omega_1 = sum - 1
//   parallel.iii Delta_2 of the combination contains both components' Delta_2
//   parallel.iv  dim Omega_p = sum for every p > 2 up to one past the largest order present
LawReport check_parallel_dimension_laws(const TwoTerminalDag& first, const TwoTerminalDag& second,
                                        std::size_t route_cap = kDefaultRouteCap,
                                        TriangleSemantics semantics = TriangleSemantics::Literal);

// Compares chain dimensions of first -> second with those of the components:
//   series.i     dim Omega_0 = sum - 1
//   series.ii    dim Omega_p = sum for every p >= 2 up to one past the largest order present
//   series.p1    dim Omega_1 against the sum; reported, not asserted (the
//                cross-hinge forward pairs make the combination larger)
LawReport check_series_dimension_laws(const TwoTerminalDag& first, const TwoTerminalDag& second,
                                      std::size_t route_cap = kDefaultRouteCap,
                                      TriangleSemantics semantics = TriangleSemantics::Literal);

}  // namespace rph
