#pragma once

#include <cstdint>

namespace lig {

/// Three-valued truth for budgeted evaluation (strong Kleene).
enum class Tri : std::uint8_t { False = 0, True = 1, Unknown = 2 };

inline Tri tri(bool b) { return b ? Tri::True : Tri::False; }

inline Tri operator&&(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::True;
}

inline Tri operator||(Tri a, Tri b) {
  if (a == Tri::True || b == Tri::True) return Tri::True;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::False;
}

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

}  // namespace lig
