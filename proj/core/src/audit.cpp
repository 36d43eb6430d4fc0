#include "klab/audit.hpp"

namespace klab::audit {

namespace {
thread_local Observer* active = nullptr;
}

Observer* current() noexcept { return active; }

Scope::Scope(Observer& observer) noexcept : previous_(active) { active = &observer; }

Scope::~Scope() { active = previous_; }

}  // namespace klab::audit
