#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "digifix/maps.hpp"

namespace digifix {

struct Orbit {
    enum class Status { Stabilized, Cycle, BudgetExhausted };

    std::vector<std::size_t> points;  // point indices, points[0] is the start
    Status status = Status::BudgetExhausted;
    /// Stabilized: first n with x_{n+1} = x_n. Cycle: entry step of the cycle.
    std::size_t step = 0;
    std::size_t period = 0;  // Cycle only

    std::optional<std::size_t> fixed_point() const
    {
        if (status != Status::Stabilized) return std::nullopt;
        return points[step];
    }
};

std::string to_string(Orbit::Status status);

/// x_{n+1} = f(x_n) until x_{n+1} = x_n or a point repeats. The default
/// budget |X| + 1 always suffices.
Orbit picard(const SelfMap& f, std::size_t x0, std::optional<std::size_t> max_steps = std::nullopt);

/// x_{n+1} = least preimage of x_n. Throws PreconditionError unless f is
/// onto.
Orbit preimage_chain(const SelfMap& f, std::size_t x0, std::optional<std::size_t> max_steps = std::nullopt);

struct FixedPointClass {
    enum class Kind { None, Unique, Multiple };
    Kind kind = Kind::None;
    std::vector<std::size_t> points;
};

std::string to_string(FixedPointClass::Kind kind);

FixedPointClass unique_fixed_point(const SelfMap& f);

/// Fix(f) intersected with Fix(g). Throws InputError for different images.
std::vector<std::size_t> common_fixed_points(const SelfMap& f, const SelfMap& g);

}  // namespace digifix
