#ifndef POLYDUAL_RATIONAL_HPP
#define POLYDUAL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "polydual/errors.hpp"

namespace polydual {

/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator) through all arithmetic, which is exactly the
/// contract every downstream closure question depends on.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) fail(Errc::ParseError, "zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p", or "p/q" with q > 0 after sign normalization.
Rat rat_parse(const std::string& text);

/// Renders as "p" or "p/q" with q > 1.
std::string rat_str(const Rat& q);

bool rat_is_integer(const Rat& q);

/// Exact rational vector of fixed dimension.
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t n) : e_(n, Rat(0)) {}
    Vec(std::initializer_list<Rat> init) : e_(init) {}
    explicit Vec(std::vector<Rat> entries) : e_(std::move(entries)) {}

    std::size_t size() const { return e_.size(); }
    bool empty() const { return e_.empty(); }

    Rat& operator[](std::size_t i) { return e_[i]; }
    const Rat& operator[](std::size_t i) const { return e_[i]; }

    const std::vector<Rat>& entries() const { return e_; }

    bool is_zero() const;

    friend bool operator==(const Vec& a, const Vec& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

    /// Lexicographic order, used only for canonical sorting.
    friend bool operator<(const Vec& a, const Vec& b);

private:
    std::vector<Rat> e_;
};

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& s, const Vec& a);
Vec neg(const Vec& a);

/// a with b appended.
Vec concat(const Vec& a, const Vec& b);
Vec append(const Vec& a, const Rat& last);

/// First n entries of a.
Vec head(const Vec& a, std::size_t n);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

/// Scales a nonzero vector by a positive rational so entries are integers
/// with gcd 1. Direction is preserved (rays keep their orientation).
Vec normalize_direction(const Vec& v);

/// normalize_direction plus a sign flip making the first nonzero entry
/// positive. For lineality generators and equality rows, where both signs
/// describe the same object.
Vec normalize_line(const Vec& v);

std::string vec_str(const Vec& v);

} // namespace polydual

#endif
