#include "polydual/rational.hpp"

#include <algorithm>
#include <sstream>

namespace polydual {

Rat rat_parse(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return c == ' '; }), s.end());
    if (s.empty()) fail(Errc::ParseError, "empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);
            return Rat(n);
        }
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty()) fail(Errc::ParseError, "malformed rational '" + text + "'");
        mpz_class n(num), d(den);
        if (d <= 0) fail(Errc::ParseError, "denominator must be positive in '" + text + "'");
        Rat q(n, d);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        fail(Errc::ParseError, "malformed rational '" + text + "'");
    }
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

bool rat_is_integer(const Rat& q) {
    return q.get_den() == 1;
}

bool Vec::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

bool operator<(const Vec& a, const Vec& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(Errc::DimensionMismatch, "dot of unequal lengths");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(Errc::DimensionMismatch, "add of unequal lengths");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(Errc::DimensionMismatch, "sub of unequal lengths");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Rat& s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Vec neg(const Vec& a) { return scale(Rat(-1), a); }

Vec concat(const Vec& a, const Vec& b) {
    std::vector<Rat> e;
    e.reserve(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) e.push_back(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) e.push_back(b[i]);
    return Vec(std::move(e));
}

Vec append(const Vec& a, const Rat& last) {
    std::vector<Rat> e;
    e.reserve(a.size() + 1);
    for (std::size_t i = 0; i < a.size(); ++i) e.push_back(a[i]);
    e.push_back(last);
    return Vec(std::move(e));
}

Vec head(const Vec& a, std::size_t n) {
    if (n > a.size()) fail(Errc::DimensionMismatch, "head beyond length");
    std::vector<Rat> e(a.entries().begin(), a.entries().begin() + static_cast<long>(n));
    return Vec(std::move(e));
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

Vec normalize_direction(const Vec& v) {
    if (v.is_zero()) return v;
    mpz_class den_lcm(1);
    for (std::size_t i = 0; i < v.size(); ++i)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v[i].get_den().get_mpz_t());
    mpz_class num_gcd(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        mpz_class scaled = v[i].get_num() * (den_lcm / v[i].get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rat factor(den_lcm, num_gcd);
    factor.canonicalize();
    return scale(factor, v);
}

Vec normalize_line(const Vec& v) {
    Vec r = normalize_direction(v);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] != 0) {
            if (r[i] < 0) r = neg(r);
            break;
        }
    }
    return r;
}

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << rat_str(v[i]);
    }
    os << ')';
    return os.str();
}

} // namespace polydual
