#pragma once

#include <cstdint>

namespace jonq {

inline constexpr std::uint64_t kDefaultBudget = 200000;

/// Knobs read by every Groebner computation on the current thread.
struct EngineLimits {
    /// Maximum S-pair reductions per basis computation.
    std::uint64_t budget = kDefaultBudget;
    /// Re-check every S-pair of each finished basis.
    bool certify = false;
};

struct EngineStats {
    std::uint64_t bases = 0;
    std::uint64_t reductions = 0;
    std::uint64_t certified = 0;
    std::uint64_t certificate_failures = 0;
};

const EngineLimits& current_limits();
EngineStats& engine_stats();

/// Installs limits for the lifetime of the object (nests; thread-local).
class LimitScope {
public:
    explicit LimitScope(EngineLimits limits);
    ~LimitScope();
    LimitScope(const LimitScope&) = delete;
    LimitScope& operator=(const LimitScope&) = delete;

private:
    EngineLimits saved_;
};

} // namespace jonq
