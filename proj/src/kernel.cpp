#include "gameseries/kernel.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace gameseries {

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::LeftWins: return "LeftWins";
        case Outcome::RightWins: return "RightWins";
        case Outcome::FirstWins: return "FirstWins";
        case Outcome::SecondWins: return "SecondWins";
    }
    return "?";
}

const char* to_string(Player p) { return p == Player::Left ? "left" : "right"; }

namespace {
uint64_t mix(uint64_t h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}
}  // namespace

struct Kernel::Interner {
    struct VecPairHash {
        size_t operator()(const std::pair<std::vector<GameId>, std::vector<GameId>>& k) const {
            uint64_t h = 1469598103934665603ull;
            for (GameId g : k.first) h = mix(h, g);
            h = mix(h, 0xfeedfaceull);
            for (GameId g : k.second) h = mix(h, g);
            return static_cast<size_t>(h);
        }
    };
    std::unordered_map<std::pair<std::vector<GameId>, std::vector<GameId>>, GameId, VecPairHash>
        map;
};

struct Kernel::PairMaps {
    std::unordered_map<uint64_t, bool> leq;
    std::unordered_map<uint64_t, GameId> sum;
};

Kernel::Kernel() : interner_(new Interner), pairs_(new PairMaps) {
    GameId z = make({}, {});
    (void)z;
    assert(z == 0);
    nodes_[0].number_value = Dyadic::from_int(0);
}

Kernel& Kernel::instance() {
    static Kernel k;
    return k;
}

GameId Kernel::make(std::vector<GameId> left, std::vector<GameId> right) {
    auto tidy = [](std::vector<GameId>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    tidy(left);
    tidy(right);
    auto key = std::make_pair(left, right);
    auto it = interner_->map.find(key);
    if (it != interner_->map.end()) return it->second;

    Node n;
    uint32_t bday = 0;
    for (GameId g : left) bday = std::max(bday, nodes_[g].birthday + 1);
    for (GameId g : right) bday = std::max(bday, nodes_[g].birthday + 1);
    n.left = std::move(left);
    n.right = std::move(right);
    n.birthday = bday;
    GameId id = static_cast<GameId>(nodes_.size());
    nodes_.push_back(std::move(n));
    interner_->map.emplace(std::move(key), id);
    return id;
}

GameId Kernel::star() { return make({0}, {0}); }

GameId Kernel::star_k(uint32_t k) {
    // canonical nimber: options are all smaller nimbers, both sides
    std::vector<GameId> opts;
    GameId cur = 0;
    for (uint32_t i = 0; i < k; i++) {
        opts.push_back(cur);
        cur = make(std::vector<GameId>(opts), std::vector<GameId>(opts));
    }
    return cur;
}

GameId Kernel::up() { return make({0}, {star()}); }
GameId Kernel::down() { return make({star()}, {0}); }

GameId Kernel::integer(int64_t n) {
    GameId g = 0;
    if (n >= 0) {
        for (int64_t i = 1; i <= n; i++) {
            g = make({g}, {});
            if (!nodes_[g].number_value) nodes_[g].number_value = Dyadic::from_int(i);
        }
    } else {
        for (int64_t i = -1; i >= n; i--) {
            g = make({}, {g});
            if (!nodes_[g].number_value) nodes_[g].number_value = Dyadic::from_int(i);
        }
    }
    return g;
}

const std::vector<GameId>& Kernel::left_options(GameId g) const { return nodes_[g].left; }
const std::vector<GameId>& Kernel::right_options(GameId g) const { return nodes_[g].right; }
const std::vector<GameId>& Kernel::options(GameId g, Player p) const {
    return p == Player::Left ? nodes_[g].left : nodes_[g].right;
}

uint32_t Kernel::birthday(GameId g) { return nodes_[g].birthday; }

bool Kernel::first_player_wins(GameId g, Player mover) {
    uint8_t& slot =
        mover == Player::Left ? nodes_[g].first_win_left : nodes_[g].first_win_right;
    if (slot) return slot == 2;
    bool win = false;
    for (GameId o : options(g, mover)) {
        if (!first_player_wins(o, opponent(mover))) {
            win = true;
            break;
        }
    }
    slot = win ? 2 : 1;
    return win;
}

Outcome Kernel::outcome(GameId g) {
    bool lw = first_player_wins(g, Player::Left);
    bool rw = first_player_wins(g, Player::Right);
    if (lw && rw) return Outcome::FirstWins;
    if (!lw && !rw) return Outcome::SecondWins;
    return lw ? Outcome::LeftWins : Outcome::RightWins;
}

bool Kernel::leq_memo_lookup(GameId g, GameId h, bool& out) const {
    auto it = pairs_->leq.find((static_cast<uint64_t>(g) << 32) | h);
    if (it == pairs_->leq.end()) return false;
    out = it->second;
    return true;
}

void Kernel::leq_memo_store(GameId g, GameId h, bool v) {
    pairs_->leq[(static_cast<uint64_t>(g) << 32) | h] = v;
}

bool Kernel::leq(GameId g, GameId h) {
    bool cached;
    if (leq_memo_lookup(g, h, cached)) return cached;
    bool result = true;
    for (GameId gl : nodes_[g].left) {
        if (leq(h, gl)) {  // some g^L >= h
            result = false;
            break;
        }
    }
    if (result) {
        for (GameId hr : nodes_[h].right) {
            if (leq(hr, g)) {  // some h^R <= g
                result = false;
                break;
            }
        }
    }
    leq_memo_store(g, h, result);
    return result;
}

GameId Kernel::negate(GameId g) {
    if (nodes_[g].negation != UINT32_MAX) return nodes_[g].negation;
    std::vector<GameId> l, r;
    for (GameId o : nodes_[g].right) l.push_back(negate(o));
    for (GameId o : nodes_[g].left) r.push_back(negate(o));
    GameId ng = make(std::move(l), std::move(r));
    nodes_[g].negation = ng;
    nodes_[ng].negation = g;
    if (nodes_[g].number_value && !nodes_[ng].number_value)
        nodes_[ng].number_value = -*nodes_[g].number_value;
    return ng;
}

GameId Kernel::sum(GameId a, GameId b) {
    if (a == 0) return b;
    if (b == 0) return a;
    uint64_t key = a <= b ? ((static_cast<uint64_t>(a) << 32) | b)
                          : ((static_cast<uint64_t>(b) << 32) | a);
    auto it = pairs_->sum.find(key);
    if (it != pairs_->sum.end()) return it->second;
    std::vector<GameId> l, r;
    for (GameId o : nodes_[a].left) l.push_back(sum(o, b));
    for (GameId o : nodes_[b].left) l.push_back(sum(a, o));
    for (GameId o : nodes_[a].right) r.push_back(sum(o, b));
    for (GameId o : nodes_[b].right) r.push_back(sum(a, o));
    GameId s = make(std::move(l), std::move(r));
    pairs_->sum.emplace(key, s);
    if (nodes_[a].number_value && nodes_[b].number_value && !nodes_[s].number_value)
        nodes_[s].number_value = *nodes_[a].number_value + *nodes_[b].number_value;
    return s;
}

GameId Kernel::sum(const std::vector<GameId>& gs) {
    GameId acc = 0;
    for (GameId g : gs) acc = sum(acc, g);
    return acc;
}

GameId Kernel::canonical(GameId g) {
    if (nodes_[g].canonical != UINT32_MAX) return nodes_[g].canonical;
    std::vector<GameId> l, r;
    for (GameId o : nodes_[g].left) l.push_back(canonical(o));
    for (GameId o : nodes_[g].right) r.push_back(canonical(o));

    // simplify until fixpoint; every rewrite preserves the value of g, so
    // reversibility keeps being tested against the original form
    bool changed = true;
    while (changed) {
        changed = false;
        // bypass reversible Left options: l has a right option <= g
        for (size_t i = 0; i < l.size() && !changed; i++) {
            for (GameId lr : nodes_[l[i]].right) {
                if (leq(lr, g)) {
                    std::vector<GameId> repl = nodes_[lr].left;
                    l.erase(l.begin() + i);
                    l.insert(l.end(), repl.begin(), repl.end());
                    changed = true;
                    break;
                }
            }
        }
        if (changed) continue;
        for (size_t i = 0; i < r.size() && !changed; i++) {
            for (GameId rl : nodes_[r[i]].left) {
                if (leq(g, rl)) {
                    std::vector<GameId> repl = nodes_[rl].right;
                    r.erase(r.begin() + i);
                    r.insert(r.end(), repl.begin(), repl.end());
                    changed = true;
                    break;
                }
            }
        }
        if (changed) continue;
        // remove dominated options (keep maximal Left options, minimal Right)
        auto drop_dominated = [&](std::vector<GameId>& v, bool left_side) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            for (size_t i = 0; i < v.size(); i++) {
                for (size_t j = 0; j < v.size(); j++) {
                    if (i == j) continue;
                    bool dominated = left_side ? leq(v[i], v[j]) : leq(v[j], v[i]);
                    if (dominated) {
                        v.erase(v.begin() + i);
                        return true;
                    }
                }
            }
            return false;
        };
        if (drop_dominated(l, true) || drop_dominated(r, false)) changed = true;
    }

    GameId c = make(std::move(l), std::move(r));
    nodes_[g].canonical = c;
    nodes_[c].canonical = c;
    if (nodes_[g].number_value && !nodes_[c].number_value)
        nodes_[c].number_value = nodes_[g].number_value;
    assert(conway_eq(g, c));
    return c;
}

bool Kernel::is_number(GameId g) {
    if (nodes_[g].number) return nodes_[g].number == 2;
    bool ok = true;
    for (GameId o : nodes_[g].left)
        if (!is_number(o)) ok = false;
    for (GameId o : nodes_[g].right)
        if (!is_number(o)) ok = false;
    if (ok) {
        for (GameId gl : nodes_[g].left) {
            for (GameId gr : nodes_[g].right) {
                if (!leq(gl, gr) || leq(gr, gl)) {  // need gl < gr
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
    }
    nodes_[g].number = ok ? 2 : 1;
    return ok;
}

bool Kernel::is_impartial(GameId g) {
    if (nodes_[g].impartial) return nodes_[g].impartial == 2;
    bool ok = nodes_[g].left == nodes_[g].right;
    if (ok)
        for (GameId o : nodes_[g].left)
            if (!is_impartial(o)) {
                ok = false;
                break;
            }
    nodes_[g].impartial = ok ? 2 : 1;
    return ok;
}

bool Kernel::is_dicotic(GameId g) {
    if (nodes_[g].dicotic) return nodes_[g].dicotic == 2;
    bool ok = true;
    if (nodes_[g].left.empty() != nodes_[g].right.empty()) ok = false;
    if (ok) {
        for (GameId o : nodes_[g].left)
            if (!is_dicotic(o)) ok = false;
        for (GameId o : nodes_[g].right)
            if (!is_dicotic(o)) ok = false;
    }
    nodes_[g].dicotic = ok ? 2 : 1;
    return ok;
}

std::optional<uint32_t> Kernel::grundy(GameId g) {
    if (nodes_[g].grundy_known) return nodes_[g].grundy_value;
    std::optional<uint32_t> result;
    if (is_impartial(g)) {
        std::vector<uint32_t> vals;
        for (GameId o : nodes_[g].left) {
            auto v = grundy(o);
            assert(v);
            vals.push_back(*v);
        }
        uint32_t mex = 0;
        while (std::find(vals.begin(), vals.end(), mex) != vals.end()) mex++;
        result = mex;
    }
    nodes_[g].grundy_known = true;
    nodes_[g].grundy_value = result;
    return result;
}

Classification Kernel::classify(GameId g) {
    Classification c;
    c.number = is_number(g);
    c.impartial = is_impartial(g);
    c.dicotic = is_dicotic(g);
    c.birthday = birthday(g);
    c.grundy = grundy(g);
    return c;
}

GameId Kernel::alt_sum(AltSumKind kind, const std::vector<GameId>& gs) {
    switch (kind) {
        case AltSumKind::Conjunctive: {
            // memo on the component tuple
            std::map<std::vector<GameId>, GameId> memo;
            struct Rec {
                Kernel& k;
                std::map<std::vector<GameId>, GameId>& memo;
                GameId go(const std::vector<GameId>& pos) {
                    auto it = memo.find(pos);
                    if (it != memo.end()) return it->second;
                    auto expand = [&](Player p) {
                        std::vector<std::vector<GameId>> res;
                        res.push_back({});
                        for (GameId g : pos) {
                            const auto& opts = k.options(g, p);
                            if (opts.empty()) return std::vector<std::vector<GameId>>{};
                            std::vector<std::vector<GameId>> next;
                            for (const auto& partial : res)
                                for (GameId o : opts) {
                                    auto ext = partial;
                                    ext.push_back(o);
                                    next.push_back(std::move(ext));
                                }
                            res = std::move(next);
                        }
                        return res;
                    };
                    std::vector<GameId> l, r;
                    for (auto& t : expand(Player::Left)) l.push_back(go(t));
                    for (auto& t : expand(Player::Right)) r.push_back(go(t));
                    GameId id = k.make(std::move(l), std::move(r));
                    memo.emplace(pos, id);
                    return id;
                }
            } rec{*this, memo};
            return rec.go(gs);
        }
        case AltSumKind::Ordinal: {
            // moving on summand i discards everything after it
            std::map<std::vector<GameId>, GameId> memo;
            struct Rec {
                Kernel& k;
                std::map<std::vector<GameId>, GameId>& memo;
                GameId go(const std::vector<GameId>& pos) {
                    auto it = memo.find(pos);
                    if (it != memo.end()) return it->second;
                    std::vector<GameId> l, r;
                    for (size_t i = 0; i < pos.size(); i++) {
                        std::vector<GameId> keep(pos.begin(), pos.begin() + i);
                        for (GameId o : k.left_options(pos[i])) {
                            auto next = keep;
                            next.push_back(o);
                            l.push_back(go(next));
                        }
                        for (GameId o : k.right_options(pos[i])) {
                            auto next = keep;
                            next.push_back(o);
                            r.push_back(go(next));
                        }
                    }
                    GameId id = k.make(std::move(l), std::move(r));
                    memo.emplace(pos, id);
                    return id;
                }
            } rec{*this, memo};
            return rec.go(gs);
        }
        case AltSumKind::Sequential: {
            if (gs.empty())
                throw std::invalid_argument("sequential alt_sum of an empty list: no head to play on");
            // play remains on the head until it has no moves at all
            std::map<std::vector<GameId>, GameId> memo;
            struct Rec {
                Kernel& k;
                std::map<std::vector<GameId>, GameId>& memo;
                GameId go(std::vector<GameId> pos) {
                    size_t skip = 0;
                    while (skip < pos.size() && k.left_options(pos[skip]).empty() &&
                           k.right_options(pos[skip]).empty())
                        skip++;
                    pos.erase(pos.begin(), pos.begin() + skip);
                    if (pos.empty()) return k.zero();
                    auto it = memo.find(pos);
                    if (it != memo.end()) return it->second;
                    std::vector<GameId> l, r;
                    for (GameId o : k.left_options(pos[0])) {
                        auto next = pos;
                        next[0] = o;
                        l.push_back(go(std::move(next)));
                    }
                    for (GameId o : k.right_options(pos[0])) {
                        auto next = pos;
                        next[0] = o;
                        r.push_back(go(std::move(next)));
                    }
                    GameId id = k.make(std::move(l), std::move(r));
                    memo.emplace(pos, id);
                    return id;
                }
            } rec{*this, memo};
            return rec.go(gs);
        }
        case AltSumKind::Side: {
            // list position = increasing index; Left's move discards larger
            // indexes, Right's move discards smaller ones
            std::map<std::vector<GameId>, GameId> memo;
            struct Rec {
                Kernel& k;
                std::map<std::vector<GameId>, GameId>& memo;
                GameId go(const std::vector<GameId>& pos) {
                    auto it = memo.find(pos);
                    if (it != memo.end()) return it->second;
                    std::vector<GameId> l, r;
                    for (size_t i = 0; i < pos.size(); i++) {
                        for (GameId o : k.left_options(pos[i])) {
                            std::vector<GameId> next(pos.begin(), pos.begin() + i);
                            next.push_back(o);
                            l.push_back(go(next));
                        }
                        for (GameId o : k.right_options(pos[i])) {
                            std::vector<GameId> next;
                            next.push_back(o);
                            next.insert(next.end(), pos.begin() + i + 1, pos.end());
                            r.push_back(go(next));
                        }
                    }
                    GameId id = k.make(std::move(l), std::move(r));
                    memo.emplace(pos, id);
                    return id;
                }
            } rec{*this, memo};
            return rec.go(gs);
        }
    }
    throw std::logic_error("unknown alt_sum kind");
}

std::string Kernel::raw_string(GameId g) {
    if (g == 0) return "0";
    std::string s = "{";
    bool first = true;
    for (GameId o : nodes_[g].left) {
        if (!first) s += ",";
        first = false;
        s += raw_string(o);
    }
    s += "|";
    first = true;
    for (GameId o : nodes_[g].right) {
        if (!first) s += ",";
        first = false;
        s += raw_string(o);
    }
    s += "}";
    return s;
}

std::optional<Dyadic> Kernel::number_value(GameId g) const { return nodes_[g].number_value; }

void Kernel::register_number_value(GameId g, const Dyadic& v) {
    if (!nodes_[g].number_value) nodes_[g].number_value = v;
}

}  // namespace gameseries
