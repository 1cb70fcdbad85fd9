#include <cstdlib>

#include "lig/core/params.hpp"
#include "lig/core/types.hpp"

namespace lig {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeField: return "NonPrimeField";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::ModelTooLarge: return "ModelTooLarge";
    case ErrorCode::InvalidId: return "InvalidId";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::NotIntersecting: return "NotIntersecting";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::GuardMismatch: return "GuardMismatch";
    case ErrorCode::UnresolvedPredRef: return "UnresolvedPredRef";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::Usage: return "Usage";
  }
  return "?";
}

SpaceParams parse_space_label(const std::string& text) {
  auto bad = [&]() { return Error(ErrorCode::Usage, "bad space spec '" + text + "' (want pg:<n>:<q> or ag:<n>:<q>)"); };
  if (text.size() < 6 || text[2] != ':') throw bad();
  SpaceKind kind;
  if (text.compare(0, 2, "pg") == 0)
    kind = SpaceKind::Projective;
  else if (text.compare(0, 2, "ag") == 0)
    kind = SpaceKind::Affine;
  else
    throw bad();
  const auto colon = text.find(':', 3);
  if (colon == std::string::npos) throw bad();
  char* end = nullptr;
  const std::string ns = text.substr(3, colon - 3), qs = text.substr(colon + 1);
  if (ns.empty() || qs.empty()) throw bad();
  const unsigned long n = std::strtoul(ns.c_str(), &end, 10);
  if (*end != '\0') throw bad();
  const unsigned long q = std::strtoul(qs.c_str(), &end, 10);
  if (*end != '\0' || n > 16 || q > 64) throw bad();
  return SpaceParams::make(kind, static_cast<unsigned>(n), static_cast<unsigned>(q));
}

}  // namespace lig
