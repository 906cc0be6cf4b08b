#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gameseries/dyadic.hpp"
#include "gameseries/kernel.hpp"
#include "gameseries/ordinal.hpp"

// Compound positions mixing finite game forms, ordinal games, nimbers,
// infinite series components and limit components, together with the move
// rules that make them playable. A series component represents an
// N-indexed sum whose play protocol commits finite horizons: the first
// player to touch it announces a horizon n and moves on a summand below
// it; the opponent either extends the horizon once and for all (closing
// the component to an ordinary finite sum) or, under the eventuality
// protocol, keeps playing below the committed horizon without extending.

namespace gameseries {

// Position of a single summand. Most summands are finite forms, but a
// summand may itself be an ordinal game (for sequences like i -> w^i),
// in which case we track the ordinal directly instead of materializing
// an infinite form.
struct OrdSummand {
    Ordinal value;
    bool negative = false;
};
using SummandPos = std::variant<GameId, OrdSummand>;

// An infinite sequence of summands plus whatever closed-form knowledge the
// sequence admits. Strategies consult this knowledge to pick horizons; a
// sequence built without some piece of knowledge simply leaves the
// corresponding std::function empty and strategies that need it fail fast.
//
// The never_moves flags are certificates quantifying over the whole
// sequence ("no summand ever offers this player a move"); they let the
// verifier prove a player is stuck without inspecting infinitely many
// summands. They must only be set when true of every index.
struct SequenceSpec {
    std::string name;
    std::function<SummandPos(uint32_t)> at;

    // Least m >= n such that the partial sum G_0+...+G_m is >= 0
    // (nonneg = true) resp. <= 0 (nonneg = false); nullopt when no such
    // index exists.
    std::function<std::optional<uint32_t>(uint32_t, bool)> psum_witness;

    // Least m > n such that G_m is a first-player win.
    std::function<std::optional<uint32_t>(uint32_t)> first_winner_after;

    // The first `count` indexes i >= start with G_i not equal to 0.
    // Returns fewer entries only if the tail is eventually all zero.
    std::function<std::vector<uint32_t>(uint32_t, uint32_t)> nonzero_indices_from;

    // Exact value of G_i when every summand is a dyadic number.
    std::function<std::optional<Dyadic>(uint32_t)> dyadic_value;

    // Value of the full series when the summands are numbers with a
    // dyadic limit of partial sums.
    std::optional<Dyadic> classical_sum;

    // Least n such that every partial sum P_m with m >= n satisfies
    // P_m > target; nullopt when the tail does not stay above target.
    std::function<std::optional<uint32_t>(const Dyadic&)> tail_threshold;

    // Least n such that |G_l| < 2^-p for every l >= n.
    std::function<std::optional<uint32_t>(uint32_t)> small_terms_from;

    // G_i as an ordinal (with sign) when the sequence is ordinal-valued.
    std::function<std::optional<Ordinal>(uint32_t)> ordinal_value;

    bool left_never_moves = false;
    bool right_never_moves = false;

    // Set by negate_spec on the wrapper it builds, so that negating twice
    // returns the original spec (with all its closed-form knowledge) instead
    // of stacking wrappers.
    std::shared_ptr<const SequenceSpec> negation_of;
};

SummandPos negate_pos(const SummandPos& pos);
std::shared_ptr<const SequenceSpec> negate_spec(std::shared_ptr<const SequenceSpec> spec);

// Birthday of a summand position: kernel birthday for finite forms, the
// ordinal itself for ordinal summands.
Ordinal pos_birthday(const SummandPos& pos);
bool pos_has_move(const SummandPos& pos, Player p);
std::string pos_to_string(const SummandPos& pos);

// Protocol variants for series components.
//  Plain:  the opponent's only reply on the component is to close it.
//  Bullet: the opponent may also keep playing below the horizon without
//          closing (the eventuality protocol).
//  Subset: horizons are arbitrary finite index sets instead of initial
//          segments.
enum class SeriesVariant { Plain, Bullet, Subset };
enum class SeriesPhase { Unopened, HalfOpened, Closed };

struct HeadEntry {
    uint32_t index = 0;
    SummandPos pos;
};

struct SeriesComp {
    SeriesVariant variant = SeriesVariant::Plain;
    std::shared_ptr<const SequenceSpec> seq;
    SeriesPhase phase = SeriesPhase::Unopened;
    Player owner = Player::Left;  // who committed the first horizon; valid once HalfOpened
    uint32_t n = 0;               // owner's horizon (Plain/Bullet)
    uint32_t m = 0;               // closing horizon, valid once Closed
    std::vector<HeadEntry> head;  // instantiated summands, ascending by index
    std::vector<uint32_t> I;      // Subset only: opener's index set
    std::vector<uint32_t> J;      // Subset only: closer's index set
};

// Limit components. A natural-limit move picks an option form present in
// every G_i from some index on; a monotone-limit move picks an option of
// a particular G_n that is matched-or-beaten in every later G_i. Both
// kinds of move are justified by certificates carried on the template,
// since checking a move against infinitely many summands is impossible;
// builders spot-check the certificates against a window of indexes.
struct CommonOption {
    Player side = Player::Left;
    GameId option = 0;
    uint32_t from = 0;  // option is present in G_i for every i >= from
};
struct DominanceEntry {
    Player side = Player::Left;
    uint32_t n = 0;
    GameId option = 0;  // an option of G_n; every G_i with i >= n has one at least as good
};

struct GameSequenceTemplate {
    std::string name;
    std::function<GameId(uint32_t)> at;
    std::vector<CommonOption> common;
    std::vector<DominanceEntry> dominance;
    bool left_none_ever = false;  // certificate: Left never has a limit move
    bool right_none_ever = false;
};

enum class LimitKind { Natural, Monotone };

struct LimitComp {
    LimitKind kind = LimitKind::Natural;
    std::shared_ptr<const GameSequenceTemplate> seq;
};

struct FiniteComp {
    GameId g = 0;
};
struct OrdComp {
    Ordinal value;
    bool negative = false;
};
struct NimberComp {
    Ordinal index;  // the nimber *index; both players move to any smaller one
};

using Component = std::variant<FiniteComp, OrdComp, NimberComp, SeriesComp, LimitComp>;

struct CompoundState {
    std::vector<Component> components;
    Player mover = Player::Left;
};

// Moves. A target is a finite form or, for ordinal-valued summands and
// ordinal components, an ordinal.
using MoveTarget = std::variant<GameId, Ordinal>;

struct FiniteMove {
    GameId to = 0;
};
struct OrdMove {
    Ordinal to;
};
struct NimMove {
    Ordinal to;
};
// First move on a Plain/Bullet series: commit horizon n and move on
// summand i <= n.
struct OpenMove {
    uint32_t n = 0;
    uint32_t i = 0;
    MoveTarget to;
};
// Move on an already instantiated summand without touching the horizon.
struct PlayWithinMove {
    uint32_t i = 0;
    MoveTarget to;
};
// The opponent's closing move on a Plain/Bullet series: extend the
// horizon to m >= n, move on summand j <= m; afterwards the component is
// an ordinary finite sum of summands 0..m.
struct CloseMove {
    uint32_t m = 0;
    uint32_t j = 0;
    MoveTarget to;
};
// Subset protocol: the opener picks a finite index set I and moves on
// some i in I; the closer later picks another finite set J (possibly
// empty or overlapping) and moves on some j in I union J.
struct SubsetOpenMove {
    std::vector<uint32_t> I;
    uint32_t i = 0;
    MoveTarget to;
};
struct SubsetCloseMove {
    std::vector<uint32_t> J;
    uint32_t j = 0;
    MoveTarget to;
};
// Limit component: commit to index n and continue play on the chosen
// option form.
struct LimitPickMove {
    uint32_t n = 0;
    GameId to = 0;
};

using MoveBody = std::variant<FiniteMove, OrdMove, NimMove, OpenMove, PlayWithinMove, CloseMove,
                              SubsetOpenMove, SubsetCloseMove, LimitPickMove>;

struct Move {
    uint32_t comp = 0;
    MoveBody body;
};

std::string move_to_string(const Move& mv);
std::string state_to_string(const CompoundState& st);

// All moves available to st.mover whose announced indexes stay within
// `bound`: opening horizons n <= bound, closing extensions m <= n + bound,
// subset index sets drawn from {0..bound}, limit picks with n <= bound.
// Moves on already instantiated material are not bound-restricted.
// Enumeration order is deterministic: components in order, then horizon
// ascending, then summand index ascending, then targets ascending.
std::vector<Move> legal_moves(const CompoundState& st, uint32_t bound);

// Applies a move after full validation; throws std::invalid_argument
// naming the violated play rule. The mover flips.
CompoundState apply_move(const CompoundState& st, const Move& mv);

// Can st.mover move at all, anywhere, with no bound on horizons? Series
// and limit components make this undecidable by inspection, so the answer
// is three-valued: HasMoves is exact, CertifiedLoss means emptiness is
// proved (finite material exhausted and certificates cover the infinite
// part), UncertifiedEmpty means no move was found within `bound` but
// emptiness could not be certified.
enum class TerminalStatus { HasMoves, CertifiedLoss, UncertifiedEmpty };
struct TerminalCheck {
    TerminalStatus status = TerminalStatus::HasMoves;
    std::string reason;
};
TerminalCheck terminal_check(const CompoundState& st, uint32_t bound);

// Termination measure: every move strictly decreases (fresh, open, rest)
// lexicographically, where fresh counts components whose horizon protocol
// has not started, open counts half-open series, and rest is the natural
// sum of birthdays of all instantiated material.
struct ProgressMeasure {
    uint32_t fresh = 0;
    uint32_t open = 0;
    Ordinal rest;
};
ProgressMeasure progress_measure(const CompoundState& st);
bool measure_decreases(const ProgressMeasure& before, const ProgressMeasure& after);

// Negation of components that have not started their protocol; used to
// build the mirrored side of an equivalence test. Throws on components
// mid-protocol.
Component negate_component(const Component& c);

}  // namespace gameseries
