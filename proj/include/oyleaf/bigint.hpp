#pragma once

#include <gmpxx.h>

namespace oyleaf {

using BigInt = mpz_class;
using Rational = mpq_class;

}  // namespace oyleaf
