#include "jonq/groebner/limits.hpp"

namespace jonq {

namespace {
thread_local EngineLimits tl_limits;
thread_local EngineStats tl_stats;
} // namespace

const EngineLimits& current_limits()
{
    return tl_limits;
}

EngineStats& engine_stats()
{
    return tl_stats;
}

LimitScope::LimitScope(EngineLimits limits) : saved_(tl_limits)
{
    tl_limits = limits;
}

LimitScope::~LimitScope()
{
    tl_limits = saved_;
}

} // namespace jonq
