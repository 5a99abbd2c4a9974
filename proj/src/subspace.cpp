#include "tvb/subspace.hpp"

#include <algorithm>
#include <sstream>

namespace tvb {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    size_t pos = 0;
    if (text[pos] == '-') pos++;
    size_t digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        pos++;
        digits++;
    }
    if (digits == 0) throw ParseError("bad rational literal '" + text + "'");
    if (pos < text.size()) {
        if (text[pos] != '/') throw ParseError("bad rational literal '" + text + "'");
        pos++;
        if (pos >= text.size() || text[pos] == '0') {
            throw ParseError("bad rational literal '" + text + "': denominator must be positive");
        }
        size_t den_digits = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            pos++;
            den_digits++;
        }
        if (den_digits == 0 || pos != text.size()) {
            throw ParseError("bad rational literal '" + text + "'");
        }
    }
    Rational q(text);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

long long to_int64(const Rational& q) {
    if (!is_integer(q)) throw InternalError("expected integer, got " + rational_to_string(q));
    if (!q.get_num().fits_slong_p()) throw InternalError("integer out of range: " + rational_to_string(q));
    return q.get_num().get_si();
}

Rational dot(const QVec& a, const IntVec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); i++) s += a[i] * static_cast<long>(b[i]);
    return s;
}

long long dot(const IntVec& a, const IntVec& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); i++) s += a[i] * b[i];
    return s;
}

long long floor_of(const Rational& q) {
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!z.fits_slong_p()) throw InternalError("floor out of range");
    return z.get_si();
}

long long ceil_of(const Rational& q) {
    mpz_class z;
    mpz_cdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!z.fits_slong_p()) throw InternalError("ceil out of range");
    return z.get_si();
}

QVec to_qvec(const IntVec& v) {
    QVec out;
    out.reserve(v.size());
    for (long long x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

std::string format_vector(const QVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); i++) {
        if (i) os << ", ";
        os << rational_to_string(v[i]);
    }
    os << ")";
    return os.str();
}

std::string format_vector(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); i++) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ")";
    return os.str();
}

int rref(QMat& rows) {
    const size_t n = rows.empty() ? 0 : rows[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < n && pivot_row < rows.size(); col++) {
        size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) sel++;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        const Rational inv = 1 / rows[pivot_row][col];
        for (size_t j = col; j < n; j++) rows[pivot_row][j] *= inv;
        for (size_t i = 0; i < rows.size(); i++) {
            if (i == pivot_row || rows[i][col] == 0) continue;
            const Rational f = rows[i][col];
            for (size_t j = col; j < n; j++) rows[i][j] -= f * rows[pivot_row][j];
        }
        pivot_row++;
    }
    rows.resize(pivot_row);
    return static_cast<int>(pivot_row);
}

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    return s;
}

Subspace Subspace::full(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    for (int i = 0; i < ambient; i++) {
        QVec row(ambient, Rational(0));
        row[i] = 1;
        s.rows_.push_back(std::move(row));
    }
    return s;
}

Subspace Subspace::span_of(QMat vectors, int ambient) {
    for (const QVec& v : vectors) {
        if (static_cast<int>(v.size()) != ambient) {
            throw InternalError("span_of: vector length does not match ambient dimension");
        }
    }
    Subspace s;
    s.ambient_ = ambient;
    rref(vectors);
    s.rows_ = std::move(vectors);
    return s;
}

bool Subspace::contains(const QVec& v) const {
    if (static_cast<int>(v.size()) != ambient_) {
        throw InternalError("contains: vector length does not match ambient dimension");
    }
    QVec r = v;
    for (const QVec& row : rows_) {
        size_t pc = 0;
        while (pc < row.size() && row[pc] == 0) pc++;
        if (pc < row.size() && r[pc] != 0) {
            const Rational f = r[pc];
            for (size_t j = pc; j < r.size(); j++) r[j] -= f * row[j];
        }
    }
    for (const Rational& x : r) {
        if (x != 0) return false;
    }
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (const QVec& row : other.rows_) {
        if (!contains(row)) return false;
    }
    return true;
}

bool subspace_less(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    if (a.rows_.size() != b.rows_.size()) return a.rows_.size() < b.rows_.size();
    for (size_t i = 0; i < a.rows_.size(); i++) {
        for (size_t j = 0; j < a.rows_[i].size(); j++) {
            const int c = cmp(a.rows_[i][j], b.rows_[i][j]);
            if (c != 0) return c < 0;
        }
    }
    return false;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw InternalError("sum: ambient dimensions differ");
    QMat rows = a.basis();
    for (const QVec& r : b.basis()) rows.push_back(r);
    return Subspace::span_of(std::move(rows), a.ambient_dim());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw InternalError("intersect: ambient dimensions differ");
    const int n = a.ambient_dim();
    if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
    // Zassenhaus: reduce [A|A; B|0]; rows with zero left half carry the
    // intersection in their right half.
    QMat block;
    for (const QVec& r : a.basis()) {
        QVec row(2 * n, Rational(0));
        for (int j = 0; j < n; j++) row[j] = row[n + j] = r[j];
        block.push_back(std::move(row));
    }
    for (const QVec& r : b.basis()) {
        QVec row(2 * n, Rational(0));
        for (int j = 0; j < n; j++) row[j] = r[j];
        block.push_back(std::move(row));
    }
    rref(block);
    QMat inter;
    for (const QVec& row : block) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; j++) {
            if (row[j] != 0) left_zero = false;
        }
        if (!left_zero) continue;
        inter.emplace_back(row.begin() + n, row.end());
    }
    return Subspace::span_of(std::move(inter), n);
}

QVec normalize_primitive(const QVec& v) {
    mpz_class den_lcm = 1;
    for (const Rational& x : v) {
        mpz_class d = x.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    mpz_class content = 0;
    for (const Rational& x : v) {
        mpz_class n = x.get_num() * (den_lcm / x.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
        ints.push_back(std::move(n));
    }
    if (content == 0) throw InternalError("normalize_primitive: zero vector");
    int sign = 0;
    for (const mpz_class& n : ints) {
        if (n != 0) {
            sign = (n > 0) ? 1 : -1;
            break;
        }
    }
    QVec out;
    out.reserve(v.size());
    for (const mpz_class& n : ints) out.emplace_back(n * sign / content);
    return out;
}

std::vector<QVec> complement_in(const Subspace& v, const Subspace& w) {
    Subspace covered = intersect(v, w);
    std::vector<QVec> out;
    for (const QVec& row : v.basis()) {
        if (covered.contains(row)) continue;
        out.push_back(normalize_primitive(row));
        QMat rows = covered.basis();
        rows.push_back(row);
        covered = Subspace::span_of(std::move(rows), v.ambient_dim());
    }
    return out;
}

int quotient_rank_of_images(const std::vector<QVec>& vectors, const Subspace& u, const Subspace& w) {
    if (!u.contains(w)) throw InternalError("quotient_rank_of_images: w is not a subspace of u");
    for (const QVec& v : vectors) {
        if (!u.contains(v)) {
            throw InternalError("quotient_rank_of_images: vector " + format_vector(v) + " is outside u");
        }
    }
    QMat rows = w.basis();
    for (const QVec& v : vectors) rows.push_back(v);
    Subspace total = Subspace::span_of(std::move(rows), u.ambient_dim());
    return total.dim() - w.dim();
}

bool lex_less(const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); i++) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::optional<QVec> coordinates_in(const QMat& rows, const QVec& v) {
    // Augment each basis row with an indicator column, reduce, then read the
    // coefficients off the reduction of v.
    const size_t n = v.size();
    const size_t k = rows.size();
    QMat work;
    for (size_t i = 0; i < k; i++) {
        QVec row(n + k, Rational(0));
        for (size_t j = 0; j < n; j++) row[j] = rows[i][j];
        row[n + i] = 1;
        work.push_back(std::move(row));
    }
    // Eliminate without mixing indicator columns into pivot selection.
    size_t pivot_row = 0;
    std::vector<size_t> pivot_col(k, 0);
    for (size_t col = 0; col < n && pivot_row < k; col++) {
        size_t sel = pivot_row;
        while (sel < k && work[sel][col] == 0) sel++;
        if (sel == k) continue;
        std::swap(work[pivot_row], work[sel]);
        const Rational inv = 1 / work[pivot_row][col];
        for (size_t j = col; j < n + k; j++) work[pivot_row][j] *= inv;
        for (size_t i = 0; i < k; i++) {
            if (i == pivot_row || work[i][col] == 0) continue;
            const Rational f = work[i][col];
            for (size_t j = col; j < n + k; j++) work[i][j] -= f * work[pivot_row][j];
        }
        pivot_col[pivot_row] = col;
        pivot_row++;
    }
    if (pivot_row < k) throw InternalError("coordinates_in: rows are dependent");
    QVec remainder = v;
    QVec coeffs(k, Rational(0));
    for (size_t i = 0; i < k; i++) {
        const Rational f = remainder[pivot_col[i]];
        if (f == 0) continue;
        for (size_t j = 0; j < n; j++) remainder[j] -= f * work[i][j];
        for (size_t j = 0; j < k; j++) coeffs[j] += f * work[i][n + j];
    }
    for (const Rational& x : remainder) {
        if (x != 0) return std::nullopt;
    }
    return coeffs;
}

std::optional<QVec> solve_square(const QMat& a, const QVec& b) {
    const size_t n = a.size();
    QMat work = a;
    for (size_t i = 0; i < n; i++) work[i].push_back(b[i]);
    size_t pivot_row = 0;
    std::vector<size_t> pivot_col(n, 0);
    for (size_t col = 0; col < n && pivot_row < n; col++) {
        size_t sel = pivot_row;
        while (sel < n && work[sel][col] == 0) sel++;
        if (sel == n) continue;
        std::swap(work[pivot_row], work[sel]);
        const Rational inv = 1 / work[pivot_row][col];
        for (size_t j = col; j <= n; j++) work[pivot_row][j] *= inv;
        for (size_t i = 0; i < n; i++) {
            if (i == pivot_row || work[i][col] == 0) continue;
            const Rational f = work[i][col];
            for (size_t j = col; j <= n; j++) work[i][j] -= f * work[pivot_row][j];
        }
        pivot_col[pivot_row] = col;
        pivot_row++;
    }
    if (pivot_row < n) return std::nullopt;
    QVec x(n, Rational(0));
    for (size_t i = 0; i < n; i++) x[pivot_col[i]] = work[i][n];
    return x;
}

Rational determinant(const QMat& a) {
    const size_t n = a.size();
    QMat work = a;
    Rational det = 1;
    for (size_t col = 0; col < n; col++) {
        size_t sel = col;
        while (sel < n && work[sel][col] == 0) sel++;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(work[col], work[sel]);
            det = -det;
        }
        det *= work[col][col];
        const Rational inv = 1 / work[col][col];
        for (size_t i = col + 1; i < n; i++) {
            if (work[i][col] == 0) continue;
            const Rational f = work[i][col] * inv;
            for (size_t j = col; j < n; j++) work[i][j] -= f * work[col][j];
        }
    }
    return det;
}

QMat nullspace(const QMat& a) {
    if (a.empty()) return QMat{};
    const size_t n = a[0].size();
    QMat work = a;
    rref(work);
    std::vector<bool> is_pivot(n, false);
    std::vector<size_t> pivot_of_col(n, 0);
    for (size_t i = 0; i < work.size(); i++) {
        size_t pc = 0;
        while (pc < n && work[i][pc] == 0) pc++;
        is_pivot[pc] = true;
        pivot_of_col[pc] = i;
    }
    QMat out;
    for (size_t free_col = 0; free_col < n; free_col++) {
        if (is_pivot[free_col]) continue;
        QVec v(n, Rational(0));
        v[free_col] = 1;
        for (size_t col = 0; col < n; col++) {
            if (is_pivot[col]) v[col] = -work[pivot_of_col[col]][free_col];
        }
        out.push_back(normalize_primitive(v));
    }
    return out;
}

}  // namespace tvb
