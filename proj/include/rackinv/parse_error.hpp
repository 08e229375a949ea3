#pragma once

#include <string>

namespace rackinv {

// Location-tagged syntax error for the text formats (rack tables, cochains,
// Gauss codes). line/column are 1-based; 0 means the error is not tied to a
// specific spot in the input.
struct ParseError {
    int line = 0;
    int column = 0;
    std::string message;

    std::string describe() const;
};

}  // namespace rackinv
