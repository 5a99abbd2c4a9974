#pragma once

#include <string>
#include <vector>

#include "tvb/fan.hpp"

namespace tvb {

// One step of a decreasing filtration: the subspace held up to and including
// the listed value. Steps are sorted by strictly increasing `through` with
// strictly decreasing spans; the first span is the whole fibre and the
// filtration is zero after the last step.
struct FiltrationStep {
    long long through = 0;
    Subspace span;
};

struct Filtration {
    std::vector<FiltrationStep> steps;

    Subspace value_at(long long j) const;
    std::vector<long long> jumps() const;
    long long min_through() const;
    long long max_through() const;

    // Largest j with e inside the subspace at j; throws ValidationError on
    // the zero vector.
    long long filtration_value(const QVec& e) const;
};

struct ToricBundle {
    Fan fan;
    int rank = 0;
    std::vector<Filtration> filtrations;  // one per ray, same order
};

// Checks the filtration shape against the fan and rank; throws
// ValidationError listing every violation. Does not check compatibility.
void validate_bundle_structure(const ToricBundle& bundle);

}  // namespace tvb
