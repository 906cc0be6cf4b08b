#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gameseries {

// Ordinals below epsilon_0 in Cantor normal form:
//   w^e1 * c1 + w^e2 * c2 + ... with e1 > e2 > ... and every ci >= 1.
// Exponents are themselves Ordinals, so the representation is a finite tree.
// Value semantics throughout; these are small objects.
class Ordinal {
public:
    struct Term {
        Ordinal exponent() const;
        // exponent stored behind a vector to keep Term default-movable while
        // Ordinal is still incomplete here
        std::vector<Ordinal> exp;  // always exactly one element
        uint64_t coeff = 0;
    };

    Ordinal() = default;  // zero
    static Ordinal from_nat(uint64_t n);
    static Ordinal omega();
    // w^e * c  (c >= 1; c == 0 gives zero)
    static Ordinal omega_power(const Ordinal& e, uint64_t c = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const;
    // valid only when is_finite()
    uint64_t as_nat() const;

    const std::vector<Term>& terms() const { return terms_; }

    // total order; returns <0, 0, >0
    static int compare(const Ordinal& a, const Ordinal& b);
    bool operator==(const Ordinal& o) const { return compare(*this, o) == 0; }
    bool operator!=(const Ordinal& o) const { return !(*this == o); }
    bool operator<(const Ordinal& o) const { return compare(*this, o) < 0; }
    bool operator<=(const Ordinal& o) const { return compare(*this, o) <= 0; }
    bool operator>(const Ordinal& o) const { return compare(*this, o) > 0; }
    bool operator>=(const Ordinal& o) const { return compare(*this, o) >= 0; }

    // Hessenberg (natural) sum: merge CNF terms, adding coefficients of
    // equal exponents. Commutative and strictly monotone in both arguments.
    static Ordinal natural_sum(const Ordinal& a, const Ordinal& b);

    // Ordinary (non-commutative) ordinal addition a + b: terms of a with
    // exponent below the leading exponent of b are absorbed.
    static Ordinal plus(const Ordinal& a, const Ordinal& b);

    // Left subtraction: the unique x with b + x == a; requires b <= a.
    static Ordinal left_subtract(const Ordinal& a, const Ordinal& b);

    // "a - b" coefficientwise on CNF terms, clamped at zero per exponent.
    // Used to build natural-sum deficits; satisfies
    // natural_sum(b, coeff_deficit(a, b)) >= a.
    static Ordinal coeff_deficit(const Ordinal& a, const Ordinal& b);

    uint64_t hash() const;

    // "0", "5", "w", "w*2+1", "w^2*3+w+1", "w^(w+1)*2" ...
    std::string to_string() const;
    // parses the to_string language; throws std::invalid_argument on junk
    static Ordinal parse(const std::string& text);

private:
    // invariant: strictly decreasing exponents, nonzero coefficients
    std::vector<Term> terms_;
    void check_invariant() const;
};

// Strictly smaller ordinals a bounded adversary may descend to: the finite
// ordinals 0..bound together with CNF-structured samples (leading-coefficient
// decrements refilled with bounded lower-order terms). Sorted ascending,
// deduplicated, every element < alpha.
std::vector<Ordinal> ordinal_descents(const Ordinal& alpha, uint32_t bound);

}  // namespace gameseries
