#include "einkit/qspace.hpp"

namespace einkit {

std::string to_string(Causal c) {
  switch (c) {
    case Causal::spacelike: return "spacelike";
    case Causal::timelike: return "timelike";
    case Causal::lightlike: return "lightlike";
  }
  return "?";
}

}  // namespace einkit
