#pragma once

#include <stdexcept>

namespace ctx {

// Error classes map one-to-one onto CLI exit codes (see tools/ctxtest.cpp).
struct ParseError : std::runtime_error {  // exit 2
  using std::runtime_error::runtime_error;
};

struct InvalidObject : std::runtime_error {  // exit 3
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {  // exit 4
  using std::runtime_error::runtime_error;
};

struct LimitExceeded : std::runtime_error {  // exit 5
  using std::runtime_error::runtime_error;
};

}  // namespace ctx
