#pragma once

#include "mmsfair/types.hpp"

namespace mmsfair {

/// Reference MMS by unpruned enumeration of all d^m item-to-part
/// assignments. Shares nothing with the search in mms(); meant for tests.
/// Throws std::invalid_argument above 10 items or 6 parts.
Value brute_force_mms(const Instance& instance, Pair pair);

}  // namespace mmsfair
