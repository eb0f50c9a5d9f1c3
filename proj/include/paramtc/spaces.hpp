#pragma once

#include <string>

#include "paramtc/errors.hpp"

namespace paramtc {

/* The four rings the calculator works in.
 *
 * For n robots and m obstacles in R^k (k odd), the classes w(i,j) with
 * 1 <= i < j <= n+m generate the cohomology of the total space of the
 * bundle that forgets the robots; the fibre product of that bundle with
 * itself carries a second, primed copy w'(i,j) of every class whose top
 * index is a robot (j > m).  Obstacle-only classes coincide with their
 * primed versions. */
enum class Space {
    BaseB,         // obstacle configurations only: indices 1..m
    TotalE,        // obstacles and robots: indices 1..n+m, no primed classes
    FibreProduct,  // two robot copies over one obstacle configuration
    FibreX,        // robots around a fixed obstacle set (a subring of TotalE)
};

std::string space_name(Space space);

struct SpaceSpec {
    int robots;     // n >= 1
    int obstacles;  // m >= 1 (bounds on tc additionally need m >= 2)
    int dimension;  // ambient dimension k, odd and >= 3
    Space space;

    SpaceSpec(int robots, int obstacles, int dimension, Space space)
        : robots(robots), obstacles(obstacles), dimension(dimension), space(space)
    {
        if (dimension % 2 == 0 || dimension < 3)
            throw UnsupportedDimension("ambient dimension must be odd and >= 3, got " +
                                       std::to_string(dimension));
        if (robots < 1)
            throw std::invalid_argument("robot count must be >= 1");
        if (obstacles < 1)
            throw std::invalid_argument("obstacle count must be >= 1");
    }

    int point_count() const { return robots + obstacles; }

    /* Largest index a generator of this ring may mention. */
    int max_index() const { return space == Space::BaseB ? obstacles : point_count(); }

    friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

inline void require_same_spec(const SpaceSpec& a, const SpaceSpec& b)
{
    if (!(a == b))
        throw SpaceMismatch("operands live in different rings");
}

}  // namespace paramtc
