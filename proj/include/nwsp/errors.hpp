#pragma once

#include <stdexcept>
#include <string>

namespace nwsp {

struct InvalidInput : std::invalid_argument {
  explicit InvalidInput(const std::string& msg) : std::invalid_argument(msg) {}
};

struct NegativeWeight : std::invalid_argument {
  explicit NegativeWeight(const std::string& msg) : std::invalid_argument(msg) {}
};

struct InternalNegativeEdge : std::invalid_argument {
  explicit InternalNegativeEdge(const std::string& msg) : std::invalid_argument(msg) {}
};

struct NoCycle : std::runtime_error {
  explicit NoCycle(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotStronglyConnected : std::runtime_error {
  explicit NotStronglyConnected(const std::string& msg) : std::runtime_error(msg) {}
};

struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

struct GenerationExhausted : std::runtime_error {
  explicit GenerationExhausted(const std::string& msg) : std::runtime_error(msg) {}
};

// Retry caps exist to turn silent livelock (e.g. a violated precondition) into
// a diagnosable error. They are not expected to fire on valid inputs.
struct IterationCapExceeded : std::runtime_error {
  explicit IterationCapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfiguredCapExceeded : std::runtime_error {
  explicit ConfiguredCapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace nwsp
