#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gameseries/dyadic.hpp"

namespace gameseries {

// A finite partizan game form {L | R}. Forms are hash-consed into a global
// store: a GameId uniquely identifies one structurally distinct form, so
// structural equality is id equality and memo tables key on ids. Forms are
// immutable once interned; the store is meant for single-threaded use (no
// engine phase mutates it concurrently), while already-interned forms can be
// read from anywhere.
using GameId = uint32_t;

enum class Outcome : uint8_t { LeftWins, RightWins, FirstWins, SecondWins };

const char* to_string(Outcome o);

enum class Player : uint8_t { Left, Right };
inline Player opponent(Player p) { return p == Player::Left ? Player::Right : Player::Left; }
const char* to_string(Player p);

struct Classification {
    bool number = false;
    bool impartial = false;
    bool dicotic = false;
    uint32_t birthday = 0;
    std::optional<uint32_t> grundy;  // defined iff impartial
};

// Alternative ways of summing a finite list of games, used as finite
// laboratory versions of the series protocols.
enum class AltSumKind {
    Conjunctive,  // a move moves on every summand at once
    Ordinal,      // a move on summand i discards all later summands
    Sequential,   // play stays on the first summand until it has no moves
    Side,         // Left's move discards later summands, Right's earlier ones
};

class Kernel {
public:
    static Kernel& instance();

    // interning; option lists are sorted and deduplicated
    GameId make(std::vector<GameId> left, std::vector<GameId> right);
    GameId zero() const { return 0; }
    GameId star();
    GameId star_k(uint32_t k);  // nimber *k
    GameId up();                // {0|*}
    GameId down();              // {*|0}
    GameId integer(int64_t n);  // canonical integer chain

    const std::vector<GameId>& left_options(GameId g) const;
    const std::vector<GameId>& right_options(GameId g) const;
    const std::vector<GameId>& options(GameId g, Player p) const;

    uint32_t birthday(GameId g);

    // true iff the player to move has a winning strategy moving first
    bool first_player_wins(GameId g, Player mover);
    Outcome outcome(GameId g);

    bool leq(GameId g, GameId h);  // g <= h in the game preorder
    bool conway_eq(GameId g, GameId h) { return leq(g, h) && leq(h, g); }

    GameId negate(GameId g);
    GameId sum(GameId a, GameId b);
    GameId sum(const std::vector<GameId>& gs);

    // canonical form: dominated options removed, reversible options bypassed
    GameId canonical(GameId g);

    Classification classify(GameId g);
    bool is_number(GameId g);
    bool is_impartial(GameId g);
    bool is_dicotic(GameId g);
    std::optional<uint32_t> grundy(GameId g);

    // rejects an empty list for Sequential (there is no head to play on)
    GameId alt_sum(AltSumKind kind, const std::vector<GameId>& gs);

    // plain braces rendering {a,b|c}; 0 for the empty form
    std::string raw_string(GameId g);

    // exact number value when this form was built by the sign-sequence
    // realizer or registered by the integer/sum constructors
    std::optional<Dyadic> number_value(GameId g) const;
    void register_number_value(GameId g, const Dyadic& v);

    size_t node_count() const { return nodes_.size(); }

private:
    Kernel();

    struct Node {
        std::vector<GameId> left, right;
        uint32_t birthday = 0;
        // lazily computed, 0 = unknown / 1 = false / 2 = true
        uint8_t first_win_left = 0;
        uint8_t first_win_right = 0;
        uint8_t impartial = 0;
        uint8_t dicotic = 0;
        uint8_t number = 0;
        GameId negation = UINT32_MAX;
        GameId canonical = UINT32_MAX;
        std::optional<uint32_t> grundy_value;
        bool grundy_known = false;
        std::optional<Dyadic> number_value;
    };

    std::vector<Node> nodes_;

    // interning map lives in the .cpp
    struct Interner;
    Interner* interner_;

    bool leq_memo_lookup(GameId g, GameId h, bool& out) const;
    void leq_memo_store(GameId g, GameId h, bool v);
    struct PairMaps;
    PairMaps* pairs_;
};

inline Kernel& kernel() { return Kernel::instance(); }

}  // namespace gameseries
