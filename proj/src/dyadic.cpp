#include "gameseries/dyadic.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace gameseries {

Dyadic::Dyadic(int64_t numerator, uint32_t exponent)
    : num_(numerator), exp_(exponent) {
    while (exp_ > 0 && num_ % 2 == 0) {
        num_ /= 2;
        exp_--;
    }
    if (num_ == 0) exp_ = 0;
}

namespace {
int64_t shl_checked(int64_t v, uint32_t k) {
    assert(k < 62);
    int64_t r = v << k;
    assert(k == 0 || (r >> k) == v);
    return r;
}
}  // namespace

Dyadic Dyadic::operator+(const Dyadic& o) const {
    uint32_t e = std::max(exp_, o.exp_);
    int64_t a = shl_checked(num_, e - exp_);
    int64_t b = shl_checked(o.num_, e - o.exp_);
    return Dyadic(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

int Dyadic::compare(const Dyadic& a, const Dyadic& b) {
    Dyadic d = a - b;
    return d.sign();
}

std::string Dyadic::to_string() const {
    if (exp_ == 0) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(int64_t(1) << exp_);
}

Dyadic Dyadic::parse(const std::string& text) {
    size_t slash = text.find('/');
    auto parse_int = [](const std::string& t) {
        size_t used = 0;
        long long v = std::stoll(t, &used);
        if (used != t.size()) throw std::invalid_argument("bad number: " + t);
        return static_cast<int64_t>(v);
    };
    if (slash == std::string::npos) return from_int(parse_int(text));
    int64_t n = parse_int(text.substr(0, slash));
    int64_t d = parse_int(text.substr(slash + 1));
    if (d <= 0 || (d & (d - 1)) != 0)
        throw std::invalid_argument("denominator must be a positive power of two: " + text);
    uint32_t e = 0;
    while ((int64_t(1) << e) != d) e++;
    return Dyadic(n, e);
}

Rational::Rational(int64_t num, int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    reduce();
}

Rational Rational::from_dyadic(const Dyadic& d) {
    return Rational(d.num(), int64_t(1) << d.exp());
}

void Rational::reduce() {
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator/(int64_t k) const { return Rational(num_, den_ * k); }

int Rational::compare(const Rational& a, const Rational& b) {
    // denominators positive after reduce()
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l < r ? -1 : l > r ? 1 : 0;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace gameseries
