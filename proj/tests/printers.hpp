#pragma once

// Readable gtest output for engine values (found by argument-dependent lookup).

#include <ostream>

#include "pncalc/calculus.hpp"

namespace pncalc {

template <Variance V>
void PrintTo(const AlternatingField<V>& a, std::ostream* os) {
  *os << a.to_string();
}

inline void PrintTo(const EndoField& n, std::ostream* os) { *os << n.to_string(); }

}  // namespace pncalc
