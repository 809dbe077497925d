#pragma once

namespace hvac::nn {

// Training runs in 32-bit; the HVAC_NN_DOUBLE build is used by oracle tests.
#ifdef HVAC_NN_DOUBLE
using Real = double;
#else
using Real = float;
#endif

}  // namespace hvac::nn
