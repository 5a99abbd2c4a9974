#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "tvb/errors.hpp"

namespace tvb {

using Rational = mpq_class;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using IntVec = std::vector<long long>;

// Accepts an optionally signed integer or "p/q" with q > 0; anything else throws ParseError.
Rational rational_from_string(const std::string& text);

// Canonical form: reduced, denominator positive, "p" when integral, else "p/q".
std::string rational_to_string(const Rational& q);

bool is_integer(const Rational& q);

// Requires an integral value that fits in long long.
long long to_int64(const Rational& q);

Rational dot(const QVec& a, const IntVec& b);
long long dot(const IntVec& a, const IntVec& b);

long long floor_of(const Rational& q);
long long ceil_of(const Rational& q);

QVec to_qvec(const IntVec& v);

std::string format_vector(const QVec& v);
std::string format_vector(const IntVec& v);

}  // namespace tvb
