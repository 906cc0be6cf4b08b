#include "gameseries/arena.hpp"

#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gameseries/sequences.hpp"

using namespace gameseries;

namespace {

int failures = 0;

void expect(bool cond, const std::string& msg) {
    if (!cond) {
        ++failures;
        std::cerr << "[FAIL] " << msg << "\n";
    }
}

template <typename F>
void expect_rejected(F&& f, const std::string& msg) {
    try {
        f();
        ++failures;
        std::cerr << "[FAIL] not rejected: " << msg << "\n";
    } catch (const std::invalid_argument&) {
    }
}

CompoundState series_state(SeriesVariant v, const std::string& seq, Player mover) {
    SeriesComp sc;
    sc.variant = v;
    sc.seq = make_sequence(seq);
    CompoundState st;
    st.components.push_back(sc);
    st.mover = mover;
    return st;
}

// Alternating-play win check on a compound, using only bounded move
// enumeration; valid on states whose series components are all closed.
bool compound_mover_wins(const CompoundState& st, uint32_t bound) {
    for (const Move& mv : legal_moves(st, bound)) {
        if (!compound_mover_wins(apply_move(st, mv), bound)) return true;
    }
    return false;
}

void test_unopened_enumeration() {
    // Summands 1 = {0|} offer Right nothing, so Right cannot even open.
    CompoundState st = series_state(SeriesVariant::Plain, "ones", Player::Right);
    expect(legal_moves(st, 4).empty(), "right has no opening on a sum of ones");
    TerminalCheck tc = terminal_check(st, 4);
    expect(tc.status == TerminalStatus::CertifiedLoss,
           "right's emptiness on ones is certified: " + tc.reason);

    st.mover = Player::Left;
    auto moves = legal_moves(st, 2);
    expect(moves.size() == 6, "left openings at bound 2: n<=2, i<=n, one option each");
    expect(move_to_string(moves[0]) == "c0.open(n=0,i=0,to=0)",
           "first opening move rendering: " + move_to_string(moves[0]));
    expect(move_to_string(moves[5]) == "c0.open(n=2,i=2,to=0)",
           "last opening move rendering: " + move_to_string(moves[5]));
    expect(terminal_check(st, 0).status == TerminalStatus::HasMoves,
           "left always has an opening on ones");
}

void test_open_then_close() {
    CompoundState st = series_state(SeriesVariant::Plain, "geom_half", Player::Left);
    // Left opens with horizon 2, moving the summand 1/2 to 0.
    GameId half = realized_number(Dyadic(1, 1));
    GameId zero = kernel().zero();
    CompoundState opened = apply_move(st, {0, OpenMove{2, 0, MoveTarget{zero}}});
    const auto& sc = std::get<SeriesComp>(opened.components[0]);
    expect(sc.phase == SeriesPhase::HalfOpened && sc.owner == Player::Left && sc.n == 2,
           "opening commits the horizon to the opener");
    expect(sc.head.size() == 3, "head instantiates summands 0..n");
    expect(std::get<GameId>(sc.head[0].pos) == zero, "opening move applied to summand 0");
    expect(std::get<GameId>(sc.head[1].pos) == realized_number(Dyadic(1, 2)),
           "summand 1 instantiated untouched");
    expect(opened.mover == Player::Right, "mover alternates");

    // The opener may keep playing below the horizon but can never close.
    expect_rejected(
        [&] {
            CompoundState l = opened;
            l.mover = Player::Left;
            apply_move(l, {0, CloseMove{3, 3, MoveTarget{realized_number(Dyadic(1, 3))}}});
        },
        "owner closing own series");

    // Right closes at m = 3 with a move on the fresh summand 1/16 -> 1/8.
    GameId sixteenth = realized_number(Dyadic(1, 4));
    const auto& ropts = kernel().right_options(sixteenth);
    expect(ropts.size() == 4, "1/16 in prefix form has one right option per minus sign");
    GameId eighth = 0;
    for (GameId o : ropts) {
        if (kernel().number_value(o) == Dyadic(1, 3)) eighth = o;
    }
    expect(eighth != 0, "1/8 is among the right options of 1/16");
    CompoundState closed = apply_move(opened, {0, CloseMove{3, 3, MoveTarget{eighth}}});
    const auto& cc = std::get<SeriesComp>(closed.components[0]);
    expect(cc.phase == SeriesPhase::Closed && cc.m == 3 && cc.head.size() == 4,
           "closing extends the head to 0..m");
    expect(std::get<GameId>(cc.head[3].pos) == eighth, "closing move applied");

    // After the close both players just play within the head.
    for (const Move& mv : legal_moves(closed, 5)) {
        expect(std::holds_alternative<PlayWithinMove>(mv.body),
               "closed series admits only play-within moves");
    }
    expect_rejected(
        [&] { apply_move(closed, {0, CloseMove{4, 4, MoveTarget{zero}}}); },
        "closing an already closed series");

    // Closing below the committed horizon is rejected.
    expect_rejected(
        [&] { apply_move(opened, {0, CloseMove{1, 1, MoveTarget{zero}}}); },
        "closing horizon below the committed one");
    // A move landing above the closing horizon is rejected.
    expect_rejected(
        [&] { apply_move(opened, {0, CloseMove{3, 4, MoveTarget{zero}}}); },
        "closing move above the closing horizon");
    // Target must be an actual mover option; 3/4 is not a prefix of 1/16.
    (void)half;
    expect_rejected(
        [&] { apply_move(opened, {0, CloseMove{3, 3, MoveTarget{realized_number(Dyadic(3, 2))}}}); },
        "close target that is not a right option");
}

void test_bullet_eventuality() {
    CompoundState st = series_state(SeriesVariant::Bullet, "stars", Player::Left);
    GameId zero = kernel().zero();
    CompoundState opened = apply_move(st, {0, OpenMove{1, 0, MoveTarget{zero}}});

    // The opponent may play below the horizon without closing, or close.
    auto moves = legal_moves(opened, 2);
    bool saw_within = false, saw_close = false;
    for (const Move& mv : moves) {
        saw_within |= std::holds_alternative<PlayWithinMove>(mv.body);
        saw_close |= std::holds_alternative<CloseMove>(mv.body);
    }
    expect(saw_within && saw_close, "bullet opponent can play within or close");
    expect(std::holds_alternative<PlayWithinMove>(moves[0].body),
           "play-within moves enumerate before closing moves");
    expect(move_to_string(moves[0]) == "c0.play(i=1,to=0)",
           "play-within rendering: " + move_to_string(moves[0]));

    // Eventuality moves leave the horizon alone.
    CompoundState within = apply_move(opened, {0, PlayWithinMove{1, MoveTarget{zero}}});
    const auto& sc = std::get<SeriesComp>(within.components[0]);
    expect(sc.phase == SeriesPhase::HalfOpened && sc.n == 1,
           "eventuality move keeps the series half-open");

    // Under the plain protocol the same position forbids play-within.
    CompoundState plain = series_state(SeriesVariant::Plain, "stars", Player::Left);
    CompoundState popen = apply_move(plain, {0, OpenMove{1, 0, MoveTarget{zero}}});
    expect_rejected(
        [&] { apply_move(popen, {0, PlayWithinMove{1, MoveTarget{zero}}}); },
        "plain opponent playing within instead of closing");
    for (const Move& mv : legal_moves(popen, 2)) {
        expect(std::holds_alternative<CloseMove>(mv.body),
               "plain opponent only has closing moves");
    }
}

void test_subset_protocol() {
    CompoundState st = series_state(SeriesVariant::Subset, "stars", Player::Left);
    GameId zero = kernel().zero();
    CompoundState opened =
        apply_move(st, {0, SubsetOpenMove{{0, 2}, 2, MoveTarget{zero}}});
    const auto& sc = std::get<SeriesComp>(opened.components[0]);
    expect(sc.phase == SeriesPhase::HalfOpened && sc.I == std::vector<uint32_t>({0, 2}),
           "subset opening commits the index set");
    expect(sc.head.size() == 2 && sc.head[0].index == 0 && sc.head[1].index == 2,
           "subset head instantiates exactly the chosen indexes");

    // Owner keeps playing inside I; outside is rejected.
    CompoundState own = opened;
    own.mover = Player::Left;
    expect_rejected(
        [&] { apply_move(own, {0, PlayWithinMove{1, MoveTarget{zero}}}); },
        "owner playing outside the committed index set");

    // The opponent closes with a second index set; the move must land in
    // the union.
    expect_rejected(
        [&] { apply_move(opened, {0, SubsetCloseMove{{1}, 3, MoveTarget{zero}}}); },
        "subset close landing outside the union");
    CompoundState closed =
        apply_move(opened, {0, SubsetCloseMove{{1}, 1, MoveTarget{zero}}});
    const auto& cc = std::get<SeriesComp>(closed.components[0]);
    expect(cc.phase == SeriesPhase::Closed && cc.head.size() == 3,
           "subset close merges both index sets");
    expect(cc.head[0].index == 0 && cc.head[1].index == 1 && cc.head[2].index == 2,
           "merged head is sorted by index");
    // Overlap and the empty set are both allowed.
    CompoundState closed2 =
        apply_move(opened, {0, SubsetCloseMove{{}, 0, MoveTarget{zero}}});
    expect(std::get<SeriesComp>(closed2.components[0]).head.size() == 2,
           "empty closing set leaves the opener's head");
}

void test_ordinal_components() {
    CompoundState st;
    st.components.push_back(OrdComp{Ordinal::omega(), true});
    st.mover = Player::Left;
    expect(legal_moves(st, 3).empty(), "left cannot move on a negated ordinal");
    st.mover = Player::Right;
    auto moves = legal_moves(st, 3);
    expect(!moves.empty(), "right moves on a negated ordinal");
    for (const Move& mv : moves) {
        expect(std::get<OrdMove>(mv.body).to < Ordinal::omega(), "ordinal moves descend");
    }
    CompoundState after = apply_move(st, {0, OrdMove{Ordinal::from_nat(5)}});
    expect(std::get<OrdComp>(after.components[0]).value == Ordinal::from_nat(5),
           "ordinal move applies");
    expect(std::get<OrdComp>(after.components[0]).negative, "sign is preserved");

    CompoundState nim;
    nim.components.push_back(NimberComp{Ordinal::omega()});
    nim.mover = Player::Left;
    expect(!legal_moves(nim, 2).empty(), "either player moves on a nimber");
    nim.mover = Player::Right;
    expect(!legal_moves(nim, 2).empty(), "either player moves on a nimber");
    expect(move_to_string(legal_moves(nim, 2)[0]) == "c0.nim(0)", "nim move rendering");
}

// A closed series is an ordinary disjunctive sum: alternating play on the
// compound must agree with the kernel on who wins.
void test_closed_series_is_disjunctive_sum() {
    std::mt19937 rng(20240822);
    for (int trial = 0; trial < 40; ++trial) {
        CompoundState st = series_state(
            trial % 2 ? SeriesVariant::Bullet : SeriesVariant::Plain,
            trial % 4 < 2 ? "stars" : "pm_one", Player::Left);
        uint32_t n = rng() % 3;
        const auto& sc0 = std::get<SeriesComp>(st.components[0]);
        SummandPos p0 = sc0.seq->at(0);
        const auto& open_opts = kernel().options(std::get<GameId>(p0), Player::Left);
        if (open_opts.empty()) continue;
        CompoundState opened =
            apply_move(st, {0, OpenMove{n, 0, MoveTarget{open_opts[rng() % open_opts.size()]}}});
        // Close at m = n + extension with some legal right move.
        uint32_t m = n + rng() % 3;
        CompoundState closed;
        bool ok = false;
        for (uint32_t j = 0; j <= m && !ok; ++j) {
            const auto& sco = std::get<SeriesComp>(opened.components[0]);
            SummandPos pj = j <= n ? sco.head[j].pos : sco.seq->at(j);
            const auto& opts = kernel().options(std::get<GameId>(pj), Player::Right);
            if (opts.empty()) continue;
            closed = apply_move(opened, {0, CloseMove{m, j, MoveTarget{opts[0]}}});
            ok = true;
        }
        if (!ok) continue;

        GameId total = kernel().zero();
        for (const auto& e : std::get<SeriesComp>(closed.components[0]).head) {
            total = kernel().sum(total, std::get<GameId>(e.pos));
        }
        bool compound_win = compound_mover_wins(closed, 4);
        bool kernel_win = kernel().first_player_wins(total, closed.mover);
        expect(compound_win == kernel_win,
               "closed series plays as the disjunctive sum of its head, trial " +
                   std::to_string(trial));
    }
}

void test_progress_measure() {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        CompoundState st;
        SeriesComp sc;
        sc.variant = trial % 3 == 0   ? SeriesVariant::Plain
                     : trial % 3 == 1 ? SeriesVariant::Bullet
                                      : SeriesVariant::Subset;
        sc.seq = make_sequence(trial % 2 ? "stars" : "geom_half");
        st.components.push_back(sc);
        st.components.push_back(FiniteComp{kernel().star_k(2)});
        if (trial % 5 == 0) st.components.push_back(OrdComp{Ordinal::omega(), false});
        st.mover = trial % 2 ? Player::Left : Player::Right;

        for (int step = 0; step < 60; ++step) {
            auto moves = legal_moves(st, 3);
            if (moves.empty()) break;
            ProgressMeasure before = progress_measure(st);
            CompoundState next = apply_move(st, moves[rng() % moves.size()]);
            ProgressMeasure after = progress_measure(next);
            expect(measure_decreases(before, after),
                   "every move decreases the progress measure, trial " + std::to_string(trial));
            st = next;
        }
    }
}

void test_negate_spec() {
    auto ones = make_sequence("ones");
    auto neg = negate_spec(ones);
    expect(std::get<GameId>(neg->at(3)) == realized_number(Dyadic::from_int(-1)),
           "negated sequence negates its summands");
    expect(neg->left_never_moves && !neg->right_never_moves,
           "negation swaps the never-moves certificates");
    expect(neg->dyadic_value(2) == Dyadic::from_int(-1), "negation negates values");
    expect(neg->psum_witness(0, false) == std::optional<uint32_t>(0),
           "negated partial sums flip the sign query");
    expect(negate_spec(neg) == ones, "negating twice returns the original spec");

    Component c = negate_component(Component{FiniteComp{kernel().up()}});
    expect(std::get<FiniteComp>(c).g == kernel().down(), "finite components negate via the kernel");
}

void test_sequence_oracles() {
    auto geom = make_sequence("geom_half");
    expect(*geom->classical_sum == Dyadic::from_int(1), "geometric series sums to 1");
    expect(geom->tail_threshold(Dyadic(1, 1)) == std::optional<uint32_t>(1),
           "partial sums of geom_half exceed 1/2 from index 1 on");
    expect(geom->tail_threshold(Dyadic::from_int(1)) == std::nullopt,
           "partial sums never exceed the full sum");
    expect(geom->small_terms_from(2) == std::optional<uint32_t>(2),
           "terms drop below 1/4 from index 2");
    expect(*geom->dyadic_value(3) == Dyadic(1, 4), "term 3 of geom_half is 1/16");

    auto quarter = make_sequence("quarter_geom");
    expect(*quarter->classical_sum == Dyadic(1, 1), "quarter_geom sums to 1/2");
    expect(quarter->small_terms_from(3) == std::optional<uint32_t>(2),
           "quarter_geom terms drop below 1/8 from index 2");

    auto minus = make_sequence("minusone_then_ones");
    expect(minus->psum_witness(0, false) == std::optional<uint32_t>(0), "P_0 = -1 <= 0");
    expect(minus->psum_witness(2, false) == std::nullopt, "partial sums positive from 2 on");
    expect(minus->psum_witness(0, true) == std::optional<uint32_t>(1), "P_1 = 0 >= 0");
    expect(minus->tail_threshold(Dyadic::from_int(0)) == std::optional<uint32_t>(2),
           "partial sums exceed 0 from index 2");

    auto zz = make_sequence("zerozero_then_ones");
    expect(zz->psum_witness(0, true) == std::optional<uint32_t>(0), "P_0 = 0 >= 0");
    expect(zz->psum_witness(2, false) == std::nullopt, "zerozero partials positive from 2");
    expect(zz->nonzero_indices_from(0, 3) == std::vector<uint32_t>({2, 3, 4}),
           "leading zero summands are skipped");

    auto pm = make_sequence("pm_one");
    expect(pm->psum_witness(1, false) == std::optional<uint32_t>(1), "odd partials vanish");
    expect(pm->psum_witness(2, false) == std::optional<uint32_t>(3), "next odd partial");

    auto cyc = make_cycle_sequence({realized_number(Dyadic::from_int(1)),
                                    realized_number(Dyadic::from_int(-1))});
    expect(cyc->psum_witness(2, false) == std::optional<uint32_t>(3),
           "cycle([1,-1]) has vanishing odd partials");
    expect(cyc->tail_threshold(Dyadic::from_int(-1)) == std::optional<uint32_t>(0),
           "cycle([1,-1]) partials stay above -1");
    expect(cyc->tail_threshold(Dyadic::from_int(0)) == std::nullopt,
           "cycle([1,-1]) partials do not stay above 0");

    auto lst = make_list_sequence({kernel().star_k(2), kernel().star_k(2)},
                                  make_sequence("stars"));
    expect(lst->first_winner_after(0) == std::optional<uint32_t>(1),
           "list sequence finds the next first-winner in the prefix");
    expect(lst->first_winner_after(1) == std::optional<uint32_t>(2),
           "list sequence crosses into the tail");
    expect(std::get<GameId>(lst->at(5)) == kernel().star(), "list tail reindexes");

    auto ord = make_sequence("ordpowers");
    expect(*ord->ordinal_value(2) == Ordinal::omega_power(Ordinal::from_nat(2), 1),
           "ordpowers summand 2 is w^2");
    expect(std::get<OrdSummand>(ord->at(0)).value == Ordinal::from_nat(1),
           "ordpowers summand 0 is 1");
}

void test_state_rendering() {
    CompoundState st = series_state(SeriesVariant::Bullet, "stars", Player::Left);
    st.components.push_back(FiniteComp{kernel().star()});
    CompoundState opened = apply_move(st, {0, OpenMove{1, 1, MoveTarget{kernel().zero()}}});
    std::string s = state_to_string(opened);
    expect(s.find("mover=right") == 0, "state rendering starts with the mover: " + s);
    expect(s.find("series[stars,bullet,halfopen,owner=left,n=1,head={0:{0|0},1:0}]") !=
               std::string::npos,
           "series rendering shows head positions: " + s);
    expect(s.find("c1=finite({0|0})") != std::string::npos,
           "finite component rendering: " + s);
}

}  // namespace

int main() {
    test_unopened_enumeration();
    test_open_then_close();
    test_bullet_eventuality();
    test_subset_protocol();
    test_ordinal_components();
    test_closed_series_is_disjunctive_sum();
    test_progress_measure();
    test_negate_spec();
    test_sequence_oracles();
    test_state_rendering();

    if (failures == 0) {
        std::cout << "All tests passed.\n";
        return 0;
    }
    std::cerr << failures << " test(s) failed.\n";
    return 1;
}
