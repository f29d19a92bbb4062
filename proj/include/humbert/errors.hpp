#pragma once

#include <stdexcept>
#include <string>

namespace humbert {

struct SamplingFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidVector : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInSiegel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateImage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LatticeNotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WindowTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace humbert
