#include "gameseries/ordinal.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <set>
#include <stdexcept>

namespace gameseries {

Ordinal Ordinal::Term::exponent() const {
    assert(exp.size() == 1);
    return exp[0];
}

Ordinal Ordinal::from_nat(uint64_t n) {
    Ordinal o;
    if (n > 0) o.terms_.push_back(Term{{Ordinal()}, n});
    return o;
}

Ordinal Ordinal::omega() { return omega_power(from_nat(1), 1); }

Ordinal Ordinal::omega_power(const Ordinal& e, uint64_t c) {
    Ordinal o;
    if (c > 0) o.terms_.push_back(Term{{e}, c});
    return o;
}

bool Ordinal::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent().is_zero());
}

uint64_t Ordinal::as_nat() const {
    if (!is_finite()) throw std::logic_error("as_nat on infinite ordinal");
    return terms_.empty() ? 0 : terms_[0].coeff;
}

int Ordinal::compare(const Ordinal& a, const Ordinal& b) {
    size_t k = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < k; i++) {
        int c = compare(a.terms_[i].exponent(), b.terms_[i].exponent());
        if (c != 0) return c;
        if (a.terms_[i].coeff != b.terms_[i].coeff)
            return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size())
        return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

void Ordinal::check_invariant() const {
    for (size_t i = 0; i < terms_.size(); i++) {
        assert(terms_[i].coeff > 0);
        if (i + 1 < terms_.size())
            assert(compare(terms_[i].exponent(), terms_[i + 1].exponent()) > 0);
    }
}

Ordinal Ordinal::natural_sum(const Ordinal& a, const Ordinal& b) {
    Ordinal r;
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (i == a.terms_.size()) {
            r.terms_.push_back(b.terms_[j++]);
        } else if (j == b.terms_.size()) {
            r.terms_.push_back(a.terms_[i++]);
        } else {
            int c = compare(a.terms_[i].exponent(), b.terms_[j].exponent());
            if (c > 0) r.terms_.push_back(a.terms_[i++]);
            else if (c < 0) r.terms_.push_back(b.terms_[j++]);
            else {
                Term t = a.terms_[i++];
                t.coeff += b.terms_[j++].coeff;
                r.terms_.push_back(t);
            }
        }
    }
    r.check_invariant();
    return r;
}

Ordinal Ordinal::plus(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    Ordinal r;
    const Ordinal& lead = b.terms_[0].exponent();
    for (const Term& t : a.terms_) {
        int c = compare(t.exponent(), lead);
        if (c > 0) r.terms_.push_back(t);
        else if (c == 0) {
            Term merged = t;
            merged.coeff += b.terms_[0].coeff;
            r.terms_.push_back(merged);
            r.terms_.insert(r.terms_.end(), b.terms_.begin() + 1, b.terms_.end());
            r.check_invariant();
            return r;
        } else break;
    }
    r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
    r.check_invariant();
    return r;
}

Ordinal Ordinal::left_subtract(const Ordinal& a, const Ordinal& b) {
    if (compare(b, a) > 0) throw std::logic_error("left_subtract: b > a");
    // find the first position where b and a disagree
    size_t i = 0;
    while (i < b.terms_.size() && i < a.terms_.size() &&
           compare(b.terms_[i].exponent(), a.terms_[i].exponent()) == 0 &&
           b.terms_[i].coeff == a.terms_[i].coeff)
        i++;
    Ordinal r;
    if (i == b.terms_.size()) {
        // b is a prefix of a: remainder is the rest of a
        r.terms_.assign(a.terms_.begin() + i, a.terms_.end());
        return r;
    }
    assert(i < a.terms_.size());
    if (compare(b.terms_[i].exponent(), a.terms_[i].exponent()) == 0) {
        // same exponent, a's coefficient larger; b's lower terms are
        // absorbed by the leading term of the remainder
        assert(b.terms_[i].coeff < a.terms_[i].coeff);
        Term t = a.terms_[i];
        t.coeff -= b.terms_[i].coeff;
        r.terms_.push_back(t);
        r.terms_.insert(r.terms_.end(), a.terms_.begin() + i + 1, a.terms_.end());
    } else {
        // a's term at i is strictly larger, so it absorbs all of b's tail
        assert(compare(b.terms_[i].exponent(), a.terms_[i].exponent()) < 0);
        r.terms_.assign(a.terms_.begin() + i, a.terms_.end());
    }
    r.check_invariant();
    return r;
}

Ordinal Ordinal::coeff_deficit(const Ordinal& a, const Ordinal& b) {
    Ordinal r;
    size_t i = 0, j = 0;
    while (i < a.terms_.size()) {
        while (j < b.terms_.size() &&
               compare(b.terms_[j].exponent(), a.terms_[i].exponent()) > 0)
            j++;
        uint64_t have = 0;
        if (j < b.terms_.size() &&
            compare(b.terms_[j].exponent(), a.terms_[i].exponent()) == 0)
            have = b.terms_[j].coeff;
        if (a.terms_[i].coeff > have) {
            Term t = a.terms_[i];
            t.coeff -= have;
            r.terms_.push_back(t);
        }
        i++;
    }
    r.check_invariant();
    return r;
}

uint64_t Ordinal::hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (const Term& t : terms_) {
        h ^= t.exponent().hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= t.coeff + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

std::string Ordinal::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); i++) {
        if (i) s += "+";
        const Term& t = terms_[i];
        const Ordinal& e = t.exponent();
        if (e.is_zero()) {
            s += std::to_string(t.coeff);
            continue;
        }
        s += "w";
        if (!(e.is_finite() && e.as_nat() == 1)) {
            std::string es = e.to_string();
            bool simple = e.is_finite() || (e.terms_.size() == 1 && e.terms_[0].coeff == 1 &&
                                            e.terms_[0].exponent().is_finite() &&
                                            e.terms_[0].exponent().as_nat() == 1);
            s += "^";
            if (simple) s += es;
            else s += "(" + es + ")";
        }
        if (t.coeff != 1) s += "*" + std::to_string(t.coeff);
    }
    return s;
}

namespace {

struct OrdParser {
    const std::string& s;
    size_t pos = 0;

    explicit OrdParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { pos++; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("ordinal parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }
    uint64_t nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected number");
        uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<uint64_t>(s[pos] - '0');
            pos++;
        }
        return v;
    }

    Ordinal sum() {
        Ordinal acc = term();
        while (eat('+')) {
            Ordinal t = term();
            // require strictly descending input so the text is honest CNF
            if (acc.is_zero() || t.is_zero()) fail("zero term in sum");
            if (Ordinal::compare(acc.terms().back().exponent(),
                                 t.terms().front().exponent()) <= 0)
                fail("terms must be in strictly decreasing exponent order");
            acc = Ordinal::natural_sum(acc, t);
        }
        return acc;
    }

    Ordinal term() {
        skip_ws();
        if (pos < s.size() && s[pos] == 'w') {
            pos++;
            Ordinal e = Ordinal::from_nat(1);
            if (eat('^')) {
                skip_ws();
                if (eat('(')) {
                    e = sum();
                    if (!eat(')')) fail("expected ')'");
                } else if (pos < s.size() && s[pos] == 'w') {
                    // only a bare w may appear unparenthesized here, so that
                    // a following * stays with the outer term
                    pos++;
                    e = Ordinal::omega();
                } else {
                    e = Ordinal::from_nat(nat());
                }
            }
            uint64_t c = 1;
            if (eat('*')) c = nat();
            if (c == 0) fail("zero coefficient");
            return Ordinal::omega_power(e, c);
        }
        return Ordinal::from_nat(nat());
    }
};

}  // namespace

Ordinal Ordinal::parse(const std::string& text) {
    OrdParser p(text);
    Ordinal o = p.sum();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters");
    return o;
}

std::vector<Ordinal> ordinal_descents(const Ordinal& alpha, uint32_t bound) {
    std::set<std::string> seen;
    std::vector<Ordinal> out;
    auto add = [&](const Ordinal& b) {
        if (b < alpha && seen.insert(b.to_string()).second) out.push_back(b);
    };
    for (uint32_t k = 0; k <= bound; k++) add(Ordinal::from_nat(k));

    // structured samples: walk the CNF from the most significant term,
    // decrement a coefficient and refill below it with bounded material
    struct Rec {
        uint32_t bound;
        std::set<std::string>* seen;
        void gen(const Ordinal& a, std::vector<Ordinal>& out, int depth) {
            if (depth > 4 || a.is_zero()) return;
            const auto& ts = a.terms();
            Ordinal prefix;
            for (size_t k = 0; k < ts.size(); k++) {
                // prefix + w^e*(c-1) (+ filler strictly below w^e)
                Ordinal cut = prefix;
                if (ts[k].coeff > 1)
                    cut = Ordinal::natural_sum(
                        cut, Ordinal::omega_power(ts[k].exponent(), ts[k].coeff - 1));
                out.push_back(cut);
                // filler: w^e' * bound for sampled e' < e
                std::vector<Ordinal> subs;
                gen(ts[k].exponent(), subs, depth + 1);
                for (const Ordinal& e2 : subs) {
                    if (bound > 0)
                        out.push_back(Ordinal::natural_sum(
                            cut, Ordinal::omega_power(e2, bound)));
                    out.push_back(Ordinal::natural_sum(cut, Ordinal::omega_power(e2, 1)));
                }
                prefix = Ordinal::natural_sum(
                    prefix, Ordinal::omega_power(ts[k].exponent(), ts[k].coeff));
            }
            if (a.is_finite() && a.as_nat() > 0) out.push_back(Ordinal::from_nat(a.as_nat() - 1));
        }
    } rec{bound, &seen};
    std::vector<Ordinal> raw;
    rec.gen(alpha, raw, 0);
    for (const Ordinal& b : raw) add(b);

    std::sort(out.begin(), out.end(),
              [](const Ordinal& x, const Ordinal& y) { return x < y; });
    return out;
}

}  // namespace gameseries
