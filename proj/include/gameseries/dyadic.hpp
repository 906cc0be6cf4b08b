#pragma once

#include <cstdint>
#include <string>

namespace gameseries {

// Exact dyadic rational num / 2^exp, kept reduced (num odd or exp == 0).
// Arithmetic is exact; overflow of the int64 numerator is out of scope for
// the magnitudes this engine works at (asserted in debug builds).
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(int64_t numerator, uint32_t exponent = 0);

    static Dyadic from_int(int64_t n) { return Dyadic(n, 0); }
    // 1 / 2^k
    static Dyadic half_power(uint32_t k) { return Dyadic(1, k); }

    int64_t num() const { return num_; }
    uint32_t exp() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }
    int sign() const { return num_ < 0 ? -1 : num_ > 0 ? 1 : 0; }

    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const;
    Dyadic operator-() const { return Dyadic(-num_, exp_); }

    static int compare(const Dyadic& a, const Dyadic& b);
    bool operator==(const Dyadic& o) const { return num_ == o.num_ && exp_ == o.exp_; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }
    bool operator<(const Dyadic& o) const { return compare(*this, o) < 0; }
    bool operator<=(const Dyadic& o) const { return compare(*this, o) <= 0; }
    bool operator>(const Dyadic& o) const { return compare(*this, o) > 0; }
    bool operator>=(const Dyadic& o) const { return compare(*this, o) >= 0; }

    Dyadic abs() const { return num_ < 0 ? -*this : *this; }

    // "3", "-3", "3/8"
    std::string to_string() const;
    // parses the to_string language; denominator must be a power of two
    static Dyadic parse(const std::string& text);

private:
    int64_t num_ = 0;
    uint32_t exp_ = 0;
};

// Exact rational scratch type for strategy bound computations where a
// non-dyadic denominator appears, e.g. thresholds of the form x / (2*(h+1)).
// Not part of the game value surface.
class Rational {
public:
    Rational() = default;
    Rational(int64_t num, int64_t den);
    static Rational from_dyadic(const Dyadic& d);

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator/(int64_t k) const;
    static int compare(const Rational& a, const Rational& b);
    bool operator<(const Rational& o) const { return compare(*this, o) < 0; }
    bool operator<=(const Rational& o) const { return compare(*this, o) <= 0; }
    bool operator>(const Rational& o) const { return compare(*this, o) > 0; }

    std::string to_string() const;

private:
    int64_t num_ = 0;
    int64_t den_ = 1;  // > 0
    void reduce();
};

}  // namespace gameseries
