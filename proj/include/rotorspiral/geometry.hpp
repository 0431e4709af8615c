#pragma once

#include <optional>
#include <vector>

#include "rotorspiral/lattice.hpp"

namespace rotorspiral {

// Directed cycle of arrows: the arrow at sites[i] points to sites[i+1] and the
// last arrow points back to sites[0]. All sites are distinct; the edge count
// equals sites.size(). Square-lattice cycles always have even length.
struct Cycle {
    std::vector<Site> sites;

    std::size_t length() const { return sites.size(); }
};

enum class CycleClass { Dimer, Contour };

inline CycleClass classify(const Cycle& c) {
    return c.sites.size() == 2 ? CycleClass::Dimer : CycleClass::Contour;
}

enum class Orientation { Clockwise, AntiClockwise };
enum class Enclosure { Inside, Boundary, Outside };

constexpr std::uint64_t kDefaultCycleCap = 10'000'000;

// Outcome of following unique out-arrows from a start site.
struct PathOutcome {
    enum class Kind { ReachedTarget, EnteredForeignCycle, CapExceeded };

    Kind kind;
    std::vector<Site> path;      // start..target inclusive when the target was reached
    Site repeat_site{};          // first repeated site, for EnteredForeignCycle
};

// Follows arrows from `start` until `target` is reached, a site repeats
// within this traversal (a cycle not through target), or `cap` hops elapse.
PathOutcome follow_arrows(RotorConfig& config, Site start, Site target, std::uint64_t cap);

// As above, but only reports whether the target was reached; no path is
// collected. Used by checks that run against live walks.
bool arrows_reach(RotorConfig& config, Site start, Site target, std::uint64_t cap);

// Finds the unique cycle through v, if following arrows from v's successor
// returns to v within cap hops. The returned cycle starts at v. On cap
// exhaustion the search reports no cycle and bumps config.cycle_cap_hits.
// The buffer-reusing overload returns false when there is no cycle.
bool detect_cycle_at(RotorConfig& config, Site v, std::uint64_t cap, Cycle& out);
std::optional<Cycle> detect_cycle_at(RotorConfig& config, Site v,
                                     std::uint64_t cap = kDefaultCycleCap);

// Twice the shoelace signed area of the closed polyline; negative values are
// clockwise under east/north axes.
std::int64_t twice_signed_area(const Cycle& c);

// Orientation of a contour. Dimers enclose no area and are rejected.
Orientation orientation(const Cycle& c);

// Even-odd point-in-polygon test against the closed lattice polyline of a
// contour. The ray runs east from (s.x + 1/2, s.y), so it can never pass
// through a polygon vertex.
Enclosure encloses(const Cycle& c, Site s);

} // namespace rotorspiral
