#pragma once

#include <map>
#include <optional>

#include "tvb/analysis.hpp"

namespace tvb {

struct GgWitness {
    int cone = -1;
    IntVec u;                // character whose weight space is not covered
    QVec missing_direction;  // a fibre direction no section reaches
};

// Choice-free test: on every maximal cone, for every character u of the
// splitting, the ground-set vectors whose polytopes contain u must span
// E_u / E_{>u}.
bool is_globally_generated(const BundleAnalysis& a, GgWitness* witness = nullptr);

struct JetWitness {
    int cone = -1;
    int entry_index = -1;
    IntVec u;
    IntVec outside_point;  // vertex of the jet simplex outside the polytope
};

// True when every splitting entry's k-jet simplex sits inside its polytope;
// order 0 is global generation and order 1 is very ampleness.
bool separates_k_jets(const BundleAnalysis& a, long long k, JetWitness* witness = nullptr);

// Independent jet test on one maximal cone: expand every reachable section in
// the cone's splitting basis and check that each weight block is hit in full
// rank for every shift of total order at most k. `failure` receives the
// character and the shift multi-index of the first failing block.
bool jet_rank_oracle(const BundleAnalysis& a, int cone, long long k,
                     std::pair<IntVec, IntVec>* failure = nullptr);

struct CurvePair {
    IntVec u_left;
    IntVec u_right;
    long long degree = 0;  // u_left - u_right = degree * m_tau
};

// The splitting of the bundle restricted to the invariant curve of a wall,
// one pair per line summand, sorted by decreasing degree.
struct CurveSplitting {
    Wall wall;
    std::vector<long long> v0_coefficients;  // of the separating vector over the wall's rays
    std::vector<CurvePair> pairs;
};

// v0_coefficients, when given, must be positive and separate the character
// classes; otherwise the smallest separating choice is found automatically.
CurveSplitting restrict_to_curve(const BundleAnalysis& a, const Wall& wall,
                                 const std::vector<long long>* v0_coefficients = nullptr);

struct AmpleNef {
    bool ample = false;
    bool nef = false;
};

// Ample means every restriction degree on every wall curve is positive; nef
// means nonnegative.
AmpleNef is_ample_nef(const BundleAnalysis& a);

struct PositivityReport {
    bool globally_generated = false;
    std::optional<GgWitness> gg_witness;
    std::map<long long, bool> k_jet_ample;  // always includes orders 0 and 1
    std::map<long long, JetWitness> jet_witnesses;
    bool very_ample = false;
    bool ample = false;
    bool nef = false;
    bool splits_into_line_bundles = false;
    std::vector<CurveSplitting> restrictions;  // one per wall
};

PositivityReport positivity_report(const BundleAnalysis& a, const std::vector<long long>& jet_orders);

}  // namespace tvb
