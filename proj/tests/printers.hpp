#pragma once

#include <ostream>

#include "mfcft/polyring.hpp"

namespace mfcft {
inline void PrintTo(const CycNum& c, std::ostream* os) { *os << c.str(); }
inline void PrintTo(const MPoly& p, std::ostream* os) { *os << p.str(); }
}  // namespace mfcft
