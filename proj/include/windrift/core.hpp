#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace windrift {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

/// Direction of a torus loop. Axis::X labels the winding alpha_x, which
/// changes when vortices travel along y.
enum class Axis { X, Y };

/// Thrown when an input violates an operation's preconditions. The message
/// names the offending field.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

inline void require(bool ok, const std::string& message)
{
    if (!ok) throw PreconditionError(message);
}

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace windrift
