#include "gameseries/signseq.hpp"

#include <cassert>
#include <stdexcept>

namespace gameseries {

SignSeq SignSeq::single_run(bool plus, const Ordinal& len) {
    SignSeq s;
    if (!len.is_zero()) s.runs_.push_back(Run{plus, len});
    return s;
}

SignSeq SignSeq::parse(const std::string& text) {
    SignSeq s;
    for (char c : text) {
        if (c == '+') s.append(true, Ordinal::from_nat(1));
        else if (c == '-') s.append(false, Ordinal::from_nat(1));
        else throw std::invalid_argument(std::string("bad sign character '") + c + "'");
    }
    return s;
}

SignSeq SignSeq::from_runs(std::vector<Run> runs) {
    SignSeq s;
    for (const Run& r : runs) s.append(r.plus, r.len);
    return s;
}

void SignSeq::append(bool plus, const Ordinal& len) {
    if (len.is_zero()) return;
    if (!runs_.empty() && runs_.back().plus == plus)
        runs_.back().len = Ordinal::plus(runs_.back().len, len);
    else
        runs_.push_back(Run{plus, len});
}

void SignSeq::append_seq(const SignSeq& tail) {
    for (const Run& r : tail.runs_) append(r.plus, r.len);
}

Ordinal SignSeq::length() const {
    Ordinal total;
    for (const Run& r : runs_) total = Ordinal::plus(total, r.len);
    return total;
}

bool SignSeq::is_finite() const {
    for (const Run& r : runs_)
        if (!r.len.is_finite()) return false;
    return true;
}

std::optional<bool> SignSeq::sign_at(const Ordinal& pos) const {
    Ordinal p = pos;
    for (const Run& r : runs_) {
        if (p < r.len) return r.plus;
        p = Ordinal::left_subtract(p, r.len);
    }
    return std::nullopt;
}

SignSeq SignSeq::prefix(const Ordinal& len) const {
    SignSeq out;
    Ordinal remaining = len;
    for (const Run& r : runs_) {
        if (remaining.is_zero()) break;
        if (remaining <= r.len) {
            out.append(r.plus, remaining);
            return out;
        }
        out.append(r.plus, r.len);
        remaining = Ordinal::left_subtract(remaining, r.len);
    }
    return out;
}

SignSeq SignSeq::lcp(const SignSeq& a, const SignSeq& b) {
    SignSeq out;
    size_t i = 0, j = 0;
    Ordinal ai, bj;  // consumed inside the current runs
    while (i < a.runs_.size() && j < b.runs_.size()) {
        const Run& ra = a.runs_[i];
        const Run& rb = b.runs_[j];
        if (ra.plus != rb.plus) break;
        Ordinal left_a = Ordinal::left_subtract(ra.len, ai);
        Ordinal left_b = Ordinal::left_subtract(rb.len, bj);
        const Ordinal& take = left_a <= left_b ? left_a : left_b;
        out.append(ra.plus, take);
        ai = Ordinal::plus(ai, take);
        bj = Ordinal::plus(bj, take);
        if (ai == ra.len) { i++; ai = Ordinal(); }
        if (bj == rb.len) { j++; bj = Ordinal(); }
    }
    return out;
}

int SignSeq::compare(const SignSeq& a, const SignSeq& b) {
    size_t i = 0, j = 0;
    Ordinal ai, bj;
    while (i < a.runs_.size() && j < b.runs_.size()) {
        const Run& ra = a.runs_[i];
        const Run& rb = b.runs_[j];
        if (ra.plus != rb.plus) {
            // first divergent position has opposite signs
            return ra.plus ? 1 : -1;
        }
        Ordinal left_a = Ordinal::left_subtract(ra.len, ai);
        Ordinal left_b = Ordinal::left_subtract(rb.len, bj);
        const Ordinal& take = left_a <= left_b ? left_a : left_b;
        ai = Ordinal::plus(ai, take);
        bj = Ordinal::plus(bj, take);
        if (ai == ra.len) { i++; ai = Ordinal(); }
        if (bj == rb.len) { j++; bj = Ordinal(); }
    }
    bool a_ended = i == a.runs_.size();
    bool b_ended = j == b.runs_.size();
    if (a_ended && b_ended) return 0;
    if (a_ended) {
        // b continues: + above end, - below
        return b.runs_[j].plus ? -1 : 1;
    }
    return a.runs_[i].plus ? 1 : -1;
}

bool SignSeq::runs_eq(const SignSeq& o) const {
    if (runs_.size() != o.runs_.size()) return false;
    for (size_t k = 0; k < runs_.size(); k++)
        if (runs_[k].plus != o.runs_[k].plus || runs_[k].len != o.runs_[k].len) return false;
    return true;
}

namespace {

std::vector<bool> flatten_finite(const SignSeq& s) {
    if (!s.is_finite())
        throw std::logic_error("operation needs a finite sign sequence, got " + s.to_string());
    std::vector<bool> out;
    for (const auto& r : s.runs()) {
        uint64_t n = r.len.as_nat();
        assert(n < (1u << 20));
        for (uint64_t k = 0; k < n; k++) out.push_back(r.plus);
    }
    return out;
}

}  // namespace

Dyadic SignSeq::value() const {
    std::vector<bool> signs = flatten_finite(*this);
    Dyadic v;
    bool changed = false;
    uint32_t halvings = 0;
    for (size_t k = 0; k < signs.size(); k++) {
        if (k > 0 && signs[k] != signs[k - 1]) changed = true;
        Dyadic step = changed ? Dyadic::half_power(++halvings) : Dyadic::from_int(1);
        v = signs[k] ? v + step : v - step;
    }
    return v;
}

SignSeq SignSeq::sign_expansion(const Dyadic& d) {
    SignSeq out;
    Dyadic v;
    bool changed = false;
    uint32_t halvings = 0;
    std::optional<bool> prev;
    while (v != d) {
        bool plus = v < d;
        if (prev && *prev != plus) changed = true;
        Dyadic step = changed ? Dyadic::half_power(++halvings) : Dyadic::from_int(1);
        v = plus ? v + step : v - step;
        out.append(plus, Ordinal::from_nat(1));
        prev = plus;
    }
    return out;
}

GameId SignSeq::realize_as_game() const {
    std::vector<bool> signs = flatten_finite(*this);
    auto& k = kernel();
    std::vector<GameId> games = {k.zero()};
    std::vector<Dyadic> values = {Dyadic()};
    Dyadic v;
    bool changed = false;
    uint32_t halvings = 0;
    for (size_t n = 0; n < signs.size(); n++) {
        if (n > 0 && signs[n] != signs[n - 1]) changed = true;
        Dyadic step = changed ? Dyadic::half_power(++halvings) : Dyadic::from_int(1);
        v = signs[n] ? v + step : v - step;
        std::vector<GameId> l, r;
        for (size_t p = 0; p < games.size(); p++) {
            if (values[p] < v) l.push_back(games[p]);
            else if (values[p] > v) r.push_back(games[p]);
        }
        GameId g = k.make(std::move(l), std::move(r));
        k.register_number_value(g, v);
        games.push_back(g);
        values.push_back(v);
    }
    return games.back();
}

std::string SignSeq::to_string() const {
    std::string out;
    if (is_finite()) {
        for (const Run& r : runs_)
            for (uint64_t k = 0; k < r.len.as_nat(); k++) out += r.plus ? '+' : '-';
        return out;
    }
    for (const Run& r : runs_) {
        out += r.plus ? '+' : '-';
        if (!(r.len.is_finite() && r.len.as_nat() == 1)) {
            if (r.len.is_finite()) out += "^" + std::to_string(r.len.as_nat());
            else out += "^(" + r.len.to_string() + ")";
        }
    }
    return out;
}

}  // namespace gameseries
