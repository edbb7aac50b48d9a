#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace homcolor {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown on malformed or inconsistent user input.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a result contradicts an invariant the underlying theory
// guarantees (a bug or a broken precondition upstream).
struct internal_fault : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a configurable search/enumeration budget is exhausted.
struct budget_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw validation_error("rational with zero denominator");
    return Rat(num, den);
}

inline Rat make_rat(long long num, long long den = 1) {
    return make_rat(Int(num), Int(den));
}

inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

struct Vec2 {
    Rat x, y;
    bool operator==(const Vec2& o) const = default;
};

struct Vec3 {
    Rat x, y, z;
    bool operator==(const Vec3& o) const = default;
};

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(const Rat& c, const Vec2& v) { return {c * v.x, c * v.y}; }
inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

// Lexicographic order on points, used wherever a deterministic total
// order on coordinates is needed (degenerate-case tie rules).
inline bool lex_less(const Vec2& a, const Vec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

}  // namespace homcolor
