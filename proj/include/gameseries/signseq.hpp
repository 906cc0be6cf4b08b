#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gameseries/dyadic.hpp"
#include "gameseries/kernel.hpp"
#include "gameseries/ordinal.hpp"

namespace gameseries {

// A sign sequence: a transfinite word over {+,-} stored as runs with ordinal
// lengths. Finite sequences code dyadic numbers (the usual binary sign
// expansion); sequences of ordinal length show up as limits of growing
// positions, e.g. the all-plus word of length w.
class SignSeq {
public:
    struct Run {
        bool plus;
        Ordinal len;  // nonzero
    };

    SignSeq() = default;  // empty word

    // finite words only, e.g. "+-+"
    static SignSeq parse(const std::string& text);
    static SignSeq from_runs(std::vector<Run> runs);
    static SignSeq plus_run(const Ordinal& len) { return single_run(true, len); }
    static SignSeq minus_run(const Ordinal& len) { return single_run(false, len); }

    // concatenates one run at the end, merging with a trailing run of the
    // same sign by ordinary ordinal addition
    void append(bool plus, const Ordinal& len);
    void append_seq(const SignSeq& tail);

    const std::vector<Run>& runs() const { return runs_; }
    bool empty() const { return runs_.empty(); }
    Ordinal length() const;
    bool is_finite() const;

    // sign at a position, counting from 0; nullopt past the end
    std::optional<bool> sign_at(const Ordinal& pos) const;

    SignSeq prefix(const Ordinal& len) const;
    static SignSeq lcp(const SignSeq& a, const SignSeq& b);

    // total order with + above running off the end and - below it, so that
    // shorter words sit between their extensions; coincides with the value
    // order on number expansions
    static int compare(const SignSeq& a, const SignSeq& b);
    bool operator==(const SignSeq& o) const { return runs_eq(o); }
    bool operator!=(const SignSeq& o) const { return !runs_eq(o); }
    bool operator<(const SignSeq& o) const { return compare(*this, o) < 0; }

    // the dyadic a finite word denotes: unit steps until the first sign
    // change, halving steps afterwards
    Dyadic value() const;
    // inverse of value(); greedy sign emission
    static SignSeq sign_expansion(const Dyadic& d);

    // game form whose options are the realizations of all proper prefixes,
    // smaller ones on the left. Equal in value to value(), usually not in
    // canonical form; the exact value is registered with the kernel for
    // every prefix, so play inside the form stays on valued positions.
    GameId realize_as_game() const;

    // flat "+-+" when finite, run notation like "+^(w)-" otherwise
    std::string to_string() const;

private:
    std::vector<Run> runs_;
    static SignSeq single_run(bool plus, const Ordinal& len);
    bool runs_eq(const SignSeq& o) const;
};

}  // namespace gameseries
