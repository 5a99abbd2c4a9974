#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvb/rational.hpp"

namespace tvb {

// Reduced row echelon form in place; zero rows are removed. Returns the rank.
int rref(QMat& rows);

// A linear subspace of Q^n held in canonical form: the basis is the RREF of
// any spanning set, so equal subspaces compare equal row by row.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(int ambient);
    static Subspace full(int ambient);
    static Subspace span_of(QMat vectors, int ambient);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    bool is_zero() const { return rows_.empty(); }
    const QMat& basis() const { return rows_; }

    bool contains(const QVec& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    // Total order: ambient, then dimension, then lexicographic on basis entries.
    friend bool subspace_less(const Subspace& a, const Subspace& b);

private:
    int ambient_ = 0;
    QMat rows_;  // canonical RREF basis
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// Extends a basis of v∩w to one of v by scanning v's canonical basis rows and
// keeping those independent of what is already spanned. Returned vectors are
// primitive integer with positive leading entry.
std::vector<QVec> complement_in(const Subspace& v, const Subspace& w);

// Rank of {v + w} inside u/w. Every vector must lie in u and w must be a
// subspace of u, otherwise InternalError.
int quotient_rank_of_images(const std::vector<QVec>& vectors, const Subspace& u, const Subspace& w);

// Scales to integer entries with content 1 and positive first nonzero entry.
QVec normalize_primitive(const QVec& v);

bool lex_less(const QVec& a, const QVec& b);
bool lex_less(const IntVec& a, const IntVec& b);

// Solves x * rows = v for a set of independent rows; nullopt when v is outside
// their span.
std::optional<QVec> coordinates_in(const QMat& rows, const QVec& v);

// Solves a * x = b for square a; nullopt when a is singular.
std::optional<QVec> solve_square(const QMat& a, const QVec& b);

Rational determinant(const QMat& a);

// Primitive integer basis of {x : a * x = 0}.
QMat nullspace(const QMat& a);

}  // namespace tvb
