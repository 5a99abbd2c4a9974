#include "tvb/bundle.hpp"

#include <algorithm>
#include <sstream>

namespace tvb {

Subspace Filtration::value_at(long long j) const {
    if (steps.empty()) throw InternalError("filtration has no steps");
    const int ambient = steps.front().span.ambient_dim();
    // Steps are increasing in `through`; the value at j is the span of the
    // first step whose `through` is >= j.
    for (const FiltrationStep& s : steps) {
        if (j <= s.through) return s.span;
    }
    return Subspace::zero(ambient);
}

std::vector<long long> Filtration::jumps() const {
    std::vector<long long> out;
    out.reserve(steps.size());
    for (const FiltrationStep& s : steps) out.push_back(s.through);
    return out;
}

long long Filtration::min_through() const {
    if (steps.empty()) throw InternalError("filtration has no steps");
    return steps.front().through;
}

long long Filtration::max_through() const {
    if (steps.empty()) throw InternalError("filtration has no steps");
    return steps.back().through;
}

long long Filtration::filtration_value(const QVec& e) const {
    if (std::all_of(e.begin(), e.end(), [](const Rational& x) { return x == 0; })) {
        throw ValidationError("filtration_value: the zero vector has no filtration value");
    }
    long long best = steps.front().through;
    bool found = false;
    for (const FiltrationStep& s : steps) {
        if (s.span.contains(e)) {
            best = s.through;
            found = true;
        } else {
            break;
        }
    }
    if (!found) {
        throw ValidationError("filtration_value: vector " + format_vector(e) +
                              " is outside the full fibre; bundle structure is invalid");
    }
    return best;
}

void validate_bundle_structure(const ToricBundle& bundle) {
    std::vector<std::string> problems;
    if (bundle.rank < 1) problems.push_back("rank must be at least 1");
    if (bundle.filtrations.size() != bundle.fan.rays.size()) {
        std::ostringstream os;
        os << "expected " << bundle.fan.rays.size() << " filtrations (one per ray), got "
           << bundle.filtrations.size();
        problems.push_back(os.str());
    }
    for (size_t i = 0; i < bundle.filtrations.size(); i++) {
        const Filtration& f = bundle.filtrations[i];
        std::ostringstream tag;
        tag << "filtration " << (i + 1);
        if (f.steps.empty()) {
            problems.push_back(tag.str() + " has no steps");
            continue;
        }
        if (f.steps.front().span.dim() != bundle.rank ||
            f.steps.front().span.ambient_dim() != bundle.rank) {
            problems.push_back(tag.str() + " must start with the full fibre");
        }
        for (size_t k = 0; k < f.steps.size(); k++) {
            const FiltrationStep& s = f.steps[k];
            if (s.span.ambient_dim() != bundle.rank) {
                problems.push_back(tag.str() + " has a span with wrong ambient dimension");
                break;
            }
            if (k > 0) {
                const FiltrationStep& prev = f.steps[k - 1];
                if (s.through <= prev.through) {
                    problems.push_back(tag.str() + " has non-increasing step values");
                    break;
                }
                if (!(prev.span.contains(s.span) && s.span.dim() < prev.span.dim())) {
                    problems.push_back(tag.str() + " spans must strictly decrease along steps");
                    break;
                }
            }
            if (s.span.dim() == 0) {
                problems.push_back(tag.str() + " lists an explicit zero span; drop the step instead");
                break;
            }
        }
    }
    if (!problems.empty()) {
        std::ostringstream os;
        os << "invalid bundle structure:";
        for (const std::string& p : problems) os << " " << p << ";";
        throw ValidationError(os.str());
    }
}

}  // namespace tvb
