#pragma once

#include <string>

#include <gmpxx.h>

namespace gencomp {

/// Exact nonnegative integer used for every count and coefficient.
/// Only addition and multiplication are ever applied, so values stay >= 0.
using Count = mpz_class;

/// Base-10 rendering with no separators, exponent or truncation.
inline std::string to_decimal(const Count& c) { return c.get_str(10); }

}  // namespace gencomp
