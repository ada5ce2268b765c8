// monoid.hpp -- left-infinite reading in the transition monoid of partial maps.
//
// Reading a past x^- from coordinate 0 leftwards composes the letter maps on
// the right: tau(c w) = tau(w) o tau(c). The image of tau(x_(-k,0]) is the set
// of points reached by paths labeled by that suffix; along a left-infinite
// past these images decrease and stabilize.

#ifndef GSHIFT_MONOID_HPP
#define GSHIFT_MONOID_HPP

#include <cstddef>
#include <vector>

#include "gshift/alphabet.hpp"
#include "gshift/presentation.hpp"

namespace gshift {

/// A partial map on {0..n-1}; entries equal to no_state are undefined.
using PartialMap = std::vector<State>;

PartialMap identity_map(std::size_t n);
/// The map s -> outer(inner(s)).
PartialMap compose(const PartialMap& outer, const PartialMap& inner);
StateSet map_image(const PartialMap& map);
StateSet map_image(const PartialMap& map, const StateSet& domain);

/// A stabilized left-limit image together with an eventually periodic past
/// realizing it.
struct LimitImage {
    StateSet image;
    EventuallyPeriodicPast witness;
};

/**
 * All sets that arise as the stabilized image along some left-infinite
 * past, i.e. images of maps lying on a cycle of the reachable part of the
 * monoid (empty images excluded). Sorted by image; one shortest witness per
 * image.
 */
std::vector<LimitImage> limit_images(std::size_t n, const std::vector<PartialMap>& letter_maps);

/// The map tau(x_(-depth,0]) at a suffix depth inside the periodic regime,
/// found by repetition of (map, cycle phase).
struct StabilizedSuffix {
    PartialMap map;
    std::size_t depth = 0;
};

StabilizedSuffix stabilize_past(std::size_t n, const std::vector<PartialMap>& letter_maps,
                                const EventuallyPeriodicPast& past);

} // namespace gshift

#endif // GSHIFT_MONOID_HPP
