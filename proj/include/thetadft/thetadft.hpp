#ifndef THETADFT_THETADFT_HPP
#define THETADFT_THETADFT_HPP

// Umbrella header: certified theta evaluation, DFT spectral structure,
// the analytic identity suite, and the exact q-series checks.

#include "thetadft/core.hpp"
#include "thetadft/dft.hpp"
#include "thetadft/identities.hpp"
#include "thetadft/laurent.hpp"
#include "thetadft/qidentities.hpp"
#include "thetadft/rational.hpp"
#include "thetadft/report.hpp"
#include "thetadft/theta.hpp"

#endif
