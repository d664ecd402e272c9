#pragma once

#include <stdexcept>
#include <string>

namespace hanabi {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid GameConfig or experiment configuration.
struct ConfigError : Error {
  using Error::Error;
};

// Operation applied to a state that cannot accept it (e.g. moves on a
// terminal state).
struct StateError : Error {
  using Error::Error;
};

struct IllegalMoveError : Error {
  using Error::Error;
};

// A belief update emptied the support, or a private view contradicts the
// tracked counts. Signals a bug or a wrong policy assumption upstream.
struct BeliefInconsistencyError : Error {
  using Error::Error;
};

// A table policy was queried outside its key domain.
struct PolicyDomainError : Error {
  using Error::Error;
};

}  // namespace hanabi
