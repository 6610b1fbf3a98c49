#include "digifix/solvers.hpp"

#include <limits>

#include "digifix/errors.hpp"

namespace digifix {

std::string to_string(Orbit::Status status)
{
    switch (status) {
    case Orbit::Status::Stabilized: return "STABILIZED";
    case Orbit::Status::Cycle: return "CYCLE";
    case Orbit::Status::BudgetExhausted: return "BUDGET_EXHAUSTED";
    }
    return "?";
}

std::string to_string(FixedPointClass::Kind kind)
{
    switch (kind) {
    case FixedPointClass::Kind::None: return "NONE";
    case FixedPointClass::Kind::Unique: return "UNIQUE";
    case FixedPointClass::Kind::Multiple: return "MULTIPLE";
    }
    return "?";
}

namespace {

template <class Step>
Orbit iterate(std::size_t n, std::size_t x0, std::optional<std::size_t> max_steps, Step step)
{
    if (x0 >= n) throw InputError("start index out of range");
    const std::size_t budget = max_steps.value_or(n + 1);
    if (budget == 0) throw InputError("max_steps must be positive");

    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> seen_at(n, unseen);
    Orbit orbit;
    orbit.points.push_back(x0);
    seen_at[x0] = 0;
    for (std::size_t k = 0; k < budget; ++k) {
        const std::size_t current = orbit.points.back();
        const std::size_t next = step(current);
        orbit.points.push_back(next);
        if (next == current) {
            orbit.status = Orbit::Status::Stabilized;
            orbit.step = k;
            return orbit;
        }
        if (seen_at[next] != unseen) {
            orbit.status = Orbit::Status::Cycle;
            orbit.step = seen_at[next];
            orbit.period = k + 1 - seen_at[next];
            return orbit;
        }
        seen_at[next] = k + 1;
    }
    orbit.status = Orbit::Status::BudgetExhausted;
    return orbit;
}

}  // namespace

Orbit picard(const SelfMap& f, std::size_t x0, std::optional<std::size_t> max_steps)
{
    return iterate(f.size(), x0, max_steps, [&](std::size_t x) { return f(x); });
}

Orbit preimage_chain(const SelfMap& f, std::size_t x0, std::optional<std::size_t> max_steps)
{
    if (!is_onto(f)) throw PreconditionError("preimage chain needs an onto map");
    // points are in lexicographic order, so the first index is the least preimage
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> least(f.size(), none);
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (least[f(x)] == none) least[f(x)] = x;
    }
    return iterate(f.size(), x0, max_steps, [&](std::size_t x) { return least[x]; });
}

FixedPointClass unique_fixed_point(const SelfMap& f)
{
    FixedPointClass out;
    out.points = fixed_point_indices(f);
    if (out.points.size() == 1) out.kind = FixedPointClass::Kind::Unique;
    else if (out.points.size() > 1) out.kind = FixedPointClass::Kind::Multiple;
    return out;
}

std::vector<std::size_t> common_fixed_points(const SelfMap& f, const SelfMap& g)
{
    if (!same_image(f, g)) throw InputError("f and g live on different images");
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (f(x) == x && g(x) == x) out.push_back(x);
    }
    return out;
}

}  // namespace digifix
