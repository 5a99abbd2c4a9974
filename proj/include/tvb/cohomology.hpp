#pragma once

#include <map>
#include <string>
#include <vector>

#include "tvb/bundle.hpp"

namespace tvb {

// The weight-u piece of the cover-by-maximal-cones complex. Index sets are
// subsets of maximal cones; the term of a subset is cut out by the rays the
// subset's cones share.
struct CechComplex {
    IntVec u;
    std::vector<std::vector<int>> subsets;  // grouped by size, each sorted
    std::vector<Subspace> terms;            // aligned with subsets
    std::vector<int> dims;                  // cohomology dimensions, one per degree
};

CechComplex cech_complex(const ToricBundle& bundle, const IntVec& u);

// Cohomology dimensions [h^0, ..., h^d] at one character. Degrees beyond the
// fan dimension must vanish; a violation raises InternalError.
std::vector<int> cohomology_at(const ToricBundle& bundle, const IntVec& u);

// Integer Laurent polynomial in d torus variables.
class LaurentPolynomial {
public:
    void add(const IntVec& exponent, long long coefficient);
    long long coefficient(const IntVec& exponent) const;
    const std::map<IntVec, long long>& terms() const { return terms_; }
    bool operator==(const LaurentPolynomial& other) const { return terms_ == other.terms_; }

    // Terms ordered by total degree and then lexicographically, both
    // descending; "1" for the zero exponent, "t1^-1" style for negatives.
    std::string to_string() const;

private:
    std::map<IntVec, long long> terms_;  // nonzero coefficients only
};

// Sum over characters of the alternating sum of cohomology dimensions. The
// scan starts from the box around every cone's candidate characters and grows
// while any boundary character still carries cohomology; exceeding
// `max_growth` rounds raises ValidationError.
LaurentPolynomial euler_characteristic(const ToricBundle& bundle, int max_growth = 16);

}  // namespace tvb
