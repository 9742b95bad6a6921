#pragma once

#include <stdexcept>
#include <string>

namespace cpnoise {

// Convergence or stability failure in a numerical routine (distinct from
// invalid input, which throws std::invalid_argument / std::domain_error).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cpnoise
