#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdim {

// Exact rational number on 64-bit numerator/denominator. The denominator is
// always positive and gcd(|num|, den) == 1. Arithmetic goes through 128-bit
// intermediates and throws std::overflow_error if a reduced result no longer
// fits; results are never silently wrong.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value) {}
    Rational(long long num, long long den);

    // Parses a nonnegative decimal such as "2.50" (-> 5/2) or "17".
    static Rational from_decimal(std::string_view text);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }

    int compare(const Rational& o) const;  // -1, 0, 1

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.compare(b) >= 0; }

    std::string to_string() const;  // "p/q", e.g. "5/2", "4/1"

private:
    long long num_ = 0;
    long long den_ = 1;
};

Rational sum(const std::vector<Rational>& values);

// All weights rewritten over one common denominator, so hot loops can add
// plain integers. Empty when the scaling would overflow 64 bits.
struct ScaledWeights {
    std::vector<long long> num;
    long long den = 1;
};
std::optional<ScaledWeights> to_common_denominator(const std::vector<Rational>& weights);

}  // namespace mdim
