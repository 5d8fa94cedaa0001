#pragma once

#include <optional>
#include <vector>

#include "tarb/digraph.hpp"

namespace tarb {

struct ReconfStep {
  ArcId remove;
  ArcId add;
  friend bool operator==(const ReconfStep&, const ReconfStep&) = default;
};

struct ReconfSequence {
  Arborescence start;
  std::vector<ReconfStep> steps;
  int length() const { return static_cast<int>(steps.size()); }
};

// T - remove + add, when that is again a time-respecting arborescence of d.
std::optional<Arborescence> apply_step(const TemporalDigraph& d, const Arborescence& t, ReconfStep step);

// Every arborescence visited by `s` (start included), or nullopt as soon as
// a step fails.
std::optional<std::vector<Arborescence>> replay(const TemporalDigraph& d, const ReconfSequence& s);

// True iff the start and every prefix are time-respecting arborescences of d
// and the last one has exactly the arc ids of `target`.
bool verify_sequence(const TemporalDigraph& d, const ReconfSequence& s, const Arborescence& target);

// Shortest sequence between two time-respecting arborescences with a common
// root, routed through the minimal arborescence of their union. Length is
// |A(t1) \ A(t2)|. Throws std::invalid_argument on invalid input.
ReconfSequence reconfigure_same_root(const TemporalDigraph& d, const Arborescence& t1, const Arborescence& t2);

// Throws std::invalid_argument unless `t` is a time-respecting arborescence of d.
void require_time_respecting(const TemporalDigraph& d, const Arborescence& t, const char* what);

}  // namespace tarb
