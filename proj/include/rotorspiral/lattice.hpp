#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <absl/container/flat_hash_map.h>

namespace rotorspiral {

// Lattice directions, clockwise order N -> E -> S -> W -> N.
enum class Direction : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };

constexpr Direction rotate_clockwise(Direction d) {
    return static_cast<Direction>((static_cast<std::uint8_t>(d) + 1u) & 3u);
}

constexpr std::int32_t dx(Direction d) {
    constexpr std::int32_t tab[4] = {0, 1, 0, -1};
    return tab[static_cast<std::uint8_t>(d)];
}

constexpr std::int32_t dy(Direction d) {
    constexpr std::int32_t tab[4] = {1, 0, -1, 0};
    return tab[static_cast<std::uint8_t>(d)];
}

constexpr Direction opposite(Direction d) {
    return static_cast<Direction>((static_cast<std::uint8_t>(d) + 2u) & 3u);
}

char direction_char(Direction d);
Direction direction_from_char(char c);

// Lattice site, x east-positive, y north-positive.
struct Site {
    std::int32_t x = 0;
    std::int32_t y = 0;

    friend constexpr bool operator==(Site a, Site b) { return a.x == b.x && a.y == b.y; }
    friend constexpr bool operator!=(Site a, Site b) { return !(a == b); }

    constexpr Site neighbor(Direction d) const { return {x + dx(d), y + dy(d)}; }

    // L1 distance and squared Euclidean distance from the origin.
    constexpr std::int64_t l1() const {
        return (x < 0 ? -std::int64_t(x) : x) + (y < 0 ? -std::int64_t(y) : y);
    }
    constexpr std::int64_t r2() const {
        return std::int64_t(x) * x + std::int64_t(y) * y;
    }
};

constexpr Site kOrigin{0, 0};

inline std::uint64_t site_key(Site s) {
    return (std::uint64_t(std::uint32_t(s.x)) << 32) | std::uint64_t(std::uint32_t(s.y));
}

inline Site site_from_key(std::uint64_t k) {
    return {std::int32_t(std::uint32_t(k >> 32)), std::int32_t(std::uint32_t(k))};
}

std::string to_string(Site s);

// Thrown when the chip would step past the configured world half-width.
class RangeOverflowError : public std::runtime_error {
public:
    explicit RangeOverflowError(const std::string& what) : std::runtime_error(what) {}
};

// splitmix64 finalizer; full-avalanche mix for the per-site arrow hash.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

// Initial arrow of a site: a pure counter-based hash of (seed, x, y), uniform
// over the four directions. Querying never depends on visit order.
constexpr Direction initial_arrow(std::uint64_t seed, Site s) {
    std::uint64_t h = mix64(site_key(s) + 0x9E3779B97F4A7C15ull);
    h = mix64(h ^ (seed + 0xD1B54A32D192ED03ull));
    return static_cast<Direction>(h >> 62);
}

// Sparse rotor field over the infinite lattice. Only touched sites are stored;
// an untouched site reads as initial_arrow(seed, site). Each stored slot also
// carries the visit count of the walk and a scratch mark used by cycle
// searches.
class RotorConfig {
public:
    struct Slot {
        Direction dir;
        std::uint32_t visits = 0;
        std::uint32_t mark = 0;
    };

    explicit RotorConfig(std::uint64_t seed, std::int32_t half_width = kDefaultHalfWidth)
        : seed_(seed), half_width_(half_width) {}

    std::uint64_t seed() const { return seed_; }
    std::int32_t half_width() const { return half_width_; }

    Direction arrow(Site s) { return slot(s).dir; }

    // Peeks without materializing.
    Direction peek_arrow(Site s) const {
        auto it = slots_.find(site_key(s));
        return it == slots_.end() ? initial_arrow(seed_, s) : it->second.dir;
    }

    void set_arrow(Site s, Direction d) { slot(s).dir = d; }

    std::uint64_t visit_count(Site s) const {
        auto it = slots_.find(site_key(s));
        return it == slots_.end() ? 0 : it->second.visits;
    }

    bool materialized(Site s) const { return slots_.contains(site_key(s)); }
    std::size_t materialized_count() const { return slots_.size(); }

    // Rotates the arrow at s clockwise and counts the visit.
    // Returns the pre-rotation direction; first_visit reports visits 0 -> 1.
    Direction advance(Site s, bool& first_visit) {
        Slot& sl = slot(s);
        Direction old = sl.dir;
        sl.dir = rotate_clockwise(old);
        first_visit = (sl.visits++ == 0);
        return old;
    }

    // Scratch marks for arrow-following traversals. A traversal bumps the
    // epoch; marks from older traversals read as unmarked.
    void begin_traversal() {
        if (++epoch_ == 0) {       // epoch wrapped; wipe stale marks
            for (auto& [k, sl] : slots_) sl.mark = 0;
            epoch_ = 1;
        }
    }
    bool marked(Site s) const {
        auto it = slots_.find(site_key(s));
        return it != slots_.end() && it->second.mark == epoch_;
    }
    void mark(Site s) { slot(s).mark = epoch_; }

    std::uint64_t cycle_cap_hits = 0;   // bumped when a cycle search gives up

    // Deterministic ordered view of touched sites, for snapshots and scans.
    template <typename Fn>
    void for_each_materialized(Fn&& fn) const {
        for (const auto& [k, sl] : slots_) fn(site_from_key(k), sl);
    }

    static constexpr std::int32_t kDefaultHalfWidth = 0x7FFFFFFF;

private:
    Slot& slot(Site s) {
        auto [it, inserted] = slots_.try_emplace(site_key(s));
        if (inserted) it->second.dir = initial_arrow(seed_, s);
        return it->second;
    }

    std::uint64_t seed_;
    std::int32_t half_width_;
    std::uint32_t epoch_ = 0;
    absl::flat_hash_map<std::uint64_t, Slot> slots_;
};

// One rotor operation: the arrow at `site` turned old_dir -> new_dir and the
// chip moved to site.neighbor(new_dir); t is the step count after the move.
struct StepRecord {
    Site site;
    Direction old_dir;
    Direction new_dir;
    std::uint64_t t;

    Site destination() const { return site.neighbor(new_dir); }
};

// Walk state: chip position, step counter, and the rotor field. A visit is
// one rotor operation performed at a site, so the starting placement at the
// origin is counted when its first rotation happens.
class WalkState {
public:
    explicit WalkState(std::uint64_t seed, std::int32_t half_width = RotorConfig::kDefaultHalfWidth)
        : config_(seed, half_width) {}

    explicit WalkState(RotorConfig config, Site chip, std::uint64_t t)
        : config_(std::move(config)), chip_(chip), t_(t) {
        // distinct/max-radius counters are rebuilt by the snapshot loader
        config_.for_each_materialized([&](Site s, const RotorConfig::Slot& sl) {
            if (sl.visits > 0) {
                ++distinct_visited_;
                if (s.r2() > max_r2_) max_r2_ = s.r2();
            }
        });
    }

    StepRecord step() {
        Site from = chip_;
        bool first = false;
        Direction old = config_.advance(from, first);
        Direction next = rotate_clockwise(old);
        if (first) {
            ++distinct_visited_;
            if (from.r2() > max_r2_) max_r2_ = from.r2();
        }
        std::int64_t nx = std::int64_t(from.x) + dx(next);
        std::int64_t ny = std::int64_t(from.y) + dy(next);
        if (nx > config_.half_width() || nx < -std::int64_t(config_.half_width()) ||
            ny > config_.half_width() || ny < -std::int64_t(config_.half_width())) {
            throw RangeOverflowError("chip left the configured world at t=" + std::to_string(t_ + 1));
        }
        chip_ = {std::int32_t(nx), std::int32_t(ny)};
        ++t_;
        return {from, old, next, t_};
    }

    Site chip() const { return chip_; }
    std::uint64_t t() const { return t_; }
    RotorConfig& config() { return config_; }
    const RotorConfig& config() const { return config_; }

    std::uint64_t visit_count(Site s) const { return config_.visit_count(s); }
    std::uint64_t distinct_visited() const { return distinct_visited_; }
    std::int64_t max_r2() const { return max_r2_; }

private:
    RotorConfig config_;
    Site chip_ = kOrigin;
    std::uint64_t t_ = 0;
    std::uint64_t distinct_visited_ = 0;
    std::int64_t max_r2_ = 0;
};

} // namespace rotorspiral
