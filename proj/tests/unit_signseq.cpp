#include "gameseries/signseq.hpp"

#include <iostream>
#include <string>
#include <vector>

using gameseries::Dyadic;
using gameseries::GameId;
using gameseries::kernel;
using gameseries::Ordinal;
using gameseries::SignSeq;

namespace {

int failures = 0;

void expect(bool cond, const std::string& msg) {
    if (!cond) {
        ++failures;
        std::cerr << "[FAIL] " << msg << "\n";
    }
}

Ordinal O(const std::string& s) { return Ordinal::parse(s); }

void test_values() {
    expect(SignSeq().value().is_zero(), "empty word is 0");
    expect(SignSeq::parse("+").value() == Dyadic::from_int(1), "+ is 1");
    expect(SignSeq::parse("++").value() == Dyadic::from_int(2), "++ is 2");
    expect(SignSeq::parse("+-").value() == Dyadic(1, 1), "+- is 1/2");
    expect(SignSeq::parse("+-+").value() == Dyadic(3, 2), "+-+ is 3/4");
    expect(SignSeq::parse("+--").value() == Dyadic(1, 2), "+-- is 1/4");
    expect(SignSeq::parse("++-").value() == Dyadic(3, 1), "++- is 3/2");
    expect(SignSeq::parse("-++-").value() == Dyadic(-3, 3), "-++- is -3/8");
}

void test_sign_expansion() {
    expect(SignSeq::sign_expansion(Dyadic()) == SignSeq(), "0 has the empty expansion");
    expect(SignSeq::sign_expansion(Dyadic(1, 1)).to_string() == "+-", "1/2 expands to +-");
    expect(SignSeq::sign_expansion(Dyadic(3, 2)).to_string() == "+-+", "3/4 expands to +-+");
    const std::vector<Dyadic> samples = {
        Dyadic::from_int(3),  Dyadic::from_int(-2), Dyadic(1, 3),  Dyadic(-5, 4),
        Dyadic(7, 3),         Dyadic(9, 1),         Dyadic(-13, 2), Dyadic(1, 10),
    };
    for (const Dyadic& d : samples)
        expect(SignSeq::sign_expansion(d).value() == d,
               "expansion round trip for " + d.to_string());
}

void test_order() {
    SignSeq empty;
    expect(SignSeq::compare(SignSeq::parse("+"), empty) > 0, "+ above the empty word");
    expect(SignSeq::compare(SignSeq::parse("-"), empty) < 0, "- below the empty word");
    expect(SignSeq::compare(SignSeq::parse("+-"), SignSeq::parse("+")) < 0, "+- below +");
    expect(SignSeq::compare(SignSeq::parse("+-"), empty) > 0, "+- above the empty word");
    expect(SignSeq::compare(SignSeq::parse("+-+"), SignSeq::parse("+-")) > 0, "+-+ above +-");
    expect(SignSeq::compare(SignSeq::parse("++"), SignSeq::parse("++")) == 0, "equal words");

    // value order agrees with word order on number expansions
    const std::vector<Dyadic> ds = {Dyadic(-2, 0), Dyadic(-1, 2), Dyadic(),
                                    Dyadic(1, 3),  Dyadic(1, 1),  Dyadic(3, 2),
                                    Dyadic(1, 0),  Dyadic(5, 1)};
    for (const auto& x : ds)
        for (const auto& y : ds) {
            int vc = Dyadic::compare(x, y);
            int sc = SignSeq::compare(SignSeq::sign_expansion(x), SignSeq::sign_expansion(y));
            expect((vc < 0) == (sc < 0) && (vc == 0) == (sc == 0),
                   "orders agree for " + x.to_string() + " vs " + y.to_string());
        }
}

void test_transfinite() {
    SignSeq w_plus = SignSeq::plus_run(O("w"));
    expect(w_plus.length() == O("w"), "+^w has length w");
    expect(!w_plus.is_finite(), "+^w is not finite");
    expect(w_plus.sign_at(Ordinal::from_nat(1000)).value_or(false), "+^w is + at 1000");
    expect(!w_plus.sign_at(O("w")).has_value(), "+^w ends at w");

    SignSeq mixed = w_plus;
    mixed.append(false, Ordinal::from_nat(1));
    expect(mixed.length() == O("w+1"), "+^w- has length w+1");
    expect(mixed.sign_at(O("w")).has_value() && !*mixed.sign_at(O("w")),
           "+^w- is - at position w");
    expect(mixed.to_string() == "+^(w)-", "run rendering");

    // appending into a trailing run merges with ordinary addition
    SignSeq grower = SignSeq::plus_run(O("w"));
    grower.append(true, Ordinal::from_nat(1));
    expect(grower.runs().size() == 1 && grower.length() == O("w+1"), "run merge on append");

    for (uint32_t n = 0; n < 5; n++)
        expect(SignSeq::compare(SignSeq::plus_run(Ordinal::from_nat(n)), w_plus) < 0,
               "+^n below +^w");
    SignSeq wm = w_plus;
    wm.append(false, Ordinal::from_nat(2));
    expect(SignSeq::compare(wm, w_plus) < 0, "+^w-- below +^w");
    expect(SignSeq::compare(wm, SignSeq::plus_run(Ordinal::from_nat(7))) > 0,
           "+^w-- above +^7");
}

void test_prefix_lcp() {
    SignSeq s = SignSeq::parse("++--+");
    expect(s.prefix(Ordinal::from_nat(3)).to_string() == "++-", "finite prefix");
    expect(s.prefix(Ordinal::from_nat(9)) == s, "overlong prefix is the word");
    expect(s.prefix(Ordinal()) == SignSeq(), "empty prefix");

    SignSeq w_plus = SignSeq::plus_run(O("w"));
    expect(w_plus.prefix(Ordinal::from_nat(4)).to_string() == "++++", "prefix of +^w");

    expect(SignSeq::lcp(SignSeq::parse("++-"), SignSeq::parse("++")).to_string() == "++",
           "lcp of extensions");
    expect(SignSeq::lcp(SignSeq::parse("+-"), SignSeq::parse("-+")).empty(),
           "lcp of opposite starts");
    expect(SignSeq::lcp(w_plus, SignSeq::parse("+++")) == SignSeq::parse("+++"),
           "lcp against +^w");
    SignSeq a = w_plus;
    a.append(false, Ordinal::from_nat(1));
    expect(SignSeq::lcp(a, w_plus) == w_plus, "lcp +^w- with +^w");
}

void test_realize() {
    auto& k = kernel();
    GameId two = SignSeq::parse("++").realize_as_game();
    expect(two == k.make({k.zero(), k.integer(1)}, {}),
           "realized 2 lists both smaller prefixes");
    expect(k.number_value(two) && *k.number_value(two) == Dyadic::from_int(2),
           "realized 2 carries its value");
    expect(k.conway_eq(two, k.integer(2)), "realized 2 equals canonical 2");
    expect(k.canonical(two) == k.integer(2), "realized 2 simplifies to canonical 2");

    GameId half = SignSeq::parse("+-").realize_as_game();
    expect(half == k.make({k.zero()}, {k.integer(1)}), "realized 1/2 is {0|1}");

    GameId tq = SignSeq::parse("+-+").realize_as_game();
    expect(k.number_value(tq) && *k.number_value(tq) == Dyadic(3, 2),
           "realized 3/4 carries its value");
    expect(k.conway_eq(tq, k.make({half}, {k.integer(1)})), "3/4 == {1/2|1}");

    // every option of a realized number is again a valued position
    for (GameId o : k.left_options(tq))
        expect(k.number_value(o).has_value(), "left option of 3/4 carries a value");
    for (GameId o : k.right_options(tq))
        expect(k.number_value(o).has_value(), "right option of 3/4 carries a value");

    GameId m38 = SignSeq::sign_expansion(Dyadic(-3, 3)).realize_as_game();
    expect(k.number_value(m38) && *k.number_value(m38) == Dyadic(-3, 3),
           "realized -3/8 carries its value");
    expect(k.negate(SignSeq::sign_expansion(Dyadic(3, 3)).realize_as_game()) == m38,
           "realization commutes with negation");
}

}  // namespace

int main() {
    std::cout << "Running sign sequence tests...\n";

    test_values();
    test_sign_expansion();
    test_order();
    test_transfinite();
    test_prefix_lcp();
    test_realize();

    if (failures == 0) {
        std::cout << "All tests passed.\n";
        return 0;
    }
    std::cerr << failures << " test(s) failed.\n";
    return 1;
}
