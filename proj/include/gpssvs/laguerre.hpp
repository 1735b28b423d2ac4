#pragma once

#include <cstddef>
#include <vector>

#include "gpssvs/log_math.hpp"

namespace gpssvs {

/// Associated Laguerre polynomial L_n^(alpha)(x) by the three-term recurrence.
double laguerre_assoc(unsigned n, unsigned alpha, double x);

/// Same recurrence with running rescaling; safe for any n.
SignedLog laguerre_assoc_log(unsigned n, unsigned alpha, double x);

/// L_0^(alpha)(x) ... L_nmax^(alpha)(x) in one pass, log-scaled.
std::vector<SignedLog> laguerre_sequence_log(unsigned nmax, unsigned alpha, double x);

}  // namespace gpssvs
