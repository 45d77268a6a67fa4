#include "entsim/xstate.hpp"

#include <cmath>
#include <sstream>

#include "entsim/errors.hpp"

namespace entsim {

void XState::check() const {
  const double pops[4] = {r1, r2, r3, r4};
  for (int i = 0; i < 4; ++i) {
    if (!(pops[i] >= -1e-9 && pops[i] <= 1.0 + 1e-9)) {
      std::ostringstream os;
      os << "XState: population r" << i + 1 << " = " << pops[i] << " outside [0, 1]";
      throw NonPhysicalState(os.str());
    }
  }
  if (std::abs(trace() - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "XState: trace = " << trace() << " deviates from 1";
    throw NonPhysicalState(os.str());
  }
  if (r2 * r3 < std::norm(c) - 1e-9) {
    std::ostringstream os;
    os << "XState: coherence bound violated, r2*r3 = " << r2 * r3
       << " < |c|^2 = " << std::norm(c);
    throw NonPhysicalState(os.str());
  }
}

} // namespace entsim
