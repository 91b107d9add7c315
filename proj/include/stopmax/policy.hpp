#pragma once

#include <functional>

namespace stopmax {

class Distribution;

// Decision rule adapted to the observation sequence. decide(step, x, prev_max,
// dist) is consulted for steps 1..horizon-1 with prev_max the running maximum
// of the earlier observations (-inf at step 1); the simulator forces a stop at
// step == horizon regardless of the rule.
struct StoppingPolicy {
  int horizon = 1;
  std::function<bool(int step, double x, double prev_max,
                     const Distribution& dist)>
      decide;
};

}  // namespace stopmax
