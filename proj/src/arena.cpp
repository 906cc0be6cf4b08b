#include "gameseries/arena.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gameseries {

namespace {

[[noreturn]] void reject(const std::string& what) {
    throw std::invalid_argument("illegal move: " + what);
}

std::string comp_tag(uint32_t idx) {
    return "c" + std::to_string(idx);
}

}  // namespace

SummandPos negate_pos(const SummandPos& pos) {
    if (std::holds_alternative<GameId>(pos)) {
        return kernel().negate(std::get<GameId>(pos));
    }
    OrdSummand o = std::get<OrdSummand>(pos);
    o.negative = !o.negative;
    return o;
}

std::shared_ptr<const SequenceSpec> negate_spec(std::shared_ptr<const SequenceSpec> spec) {
    if (spec->negation_of != nullptr) {
        return spec->negation_of;
    }
    auto neg = std::make_shared<SequenceSpec>();
    neg->name = "neg(" + spec->name + ")";
    auto inner = spec;
    neg->at = [inner](uint32_t i) { return negate_pos(inner->at(i)); };
    if (inner->psum_witness) {
        neg->psum_witness = [inner](uint32_t n, bool nonneg) { return inner->psum_witness(n, !nonneg); };
    }
    // First-player wins and nonzero-ness are negation invariant.
    neg->first_winner_after = inner->first_winner_after;
    neg->nonzero_indices_from = inner->nonzero_indices_from;
    if (inner->dyadic_value) {
        neg->dyadic_value = [inner](uint32_t i) -> std::optional<Dyadic> {
            auto v = inner->dyadic_value(i);
            if (!v) return std::nullopt;
            return -*v;
        };
    }
    if (inner->classical_sum) {
        neg->classical_sum = -*inner->classical_sum;
    }
    // Tail thresholds talk about lower bounds on partial sums; the mirrored
    // question has no direct answer here, so negated specs drop it. Strategy
    // code that plays Right mirrors the whole board first and therefore sees
    // the original spec again.
    neg->small_terms_from = inner->small_terms_from;
    neg->ordinal_value = inner->ordinal_value;
    neg->left_never_moves = inner->right_never_moves;
    neg->right_never_moves = inner->left_never_moves;
    neg->negation_of = inner;
    return neg;
}

Ordinal pos_birthday(const SummandPos& pos) {
    if (std::holds_alternative<GameId>(pos)) {
        return Ordinal::from_nat(kernel().birthday(std::get<GameId>(pos)));
    }
    return std::get<OrdSummand>(pos).value;
}

bool pos_has_move(const SummandPos& pos, Player p) {
    if (std::holds_alternative<GameId>(pos)) {
        return !kernel().options(std::get<GameId>(pos), p).empty();
    }
    const OrdSummand& o = std::get<OrdSummand>(pos);
    if (o.value.is_zero()) return false;
    return o.negative ? (p == Player::Right) : (p == Player::Left);
}

std::string pos_to_string(const SummandPos& pos) {
    if (std::holds_alternative<GameId>(pos)) {
        return kernel().raw_string(std::get<GameId>(pos));
    }
    const OrdSummand& o = std::get<OrdSummand>(pos);
    std::string s = "ord(" + o.value.to_string() + ")";
    return o.negative ? "-" + s : s;
}

namespace {

std::string target_to_string(const MoveTarget& t) {
    if (std::holds_alternative<GameId>(t)) {
        return kernel().raw_string(std::get<GameId>(t));
    }
    return "ord:" + std::get<Ordinal>(t).to_string();
}

std::string index_set_to_string(const std::vector<uint32_t>& v) {
    std::string s = "{";
    for (size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(v[k]);
    }
    return s + "}";
}

// Whether `p` may move the summand at `pos` to `t`, with a reason when not.
std::optional<std::string> target_error(const SummandPos& pos, Player p, const MoveTarget& t) {
    if (std::holds_alternative<GameId>(pos)) {
        if (!std::holds_alternative<GameId>(t)) {
            return "summand is a finite form but the target is an ordinal";
        }
        const auto& opts = kernel().options(std::get<GameId>(pos), p);
        GameId to = std::get<GameId>(t);
        if (std::find(opts.begin(), opts.end(), to) == opts.end()) {
            return "target is not an available option of the summand for the mover";
        }
        return std::nullopt;
    }
    const OrdSummand& o = std::get<OrdSummand>(pos);
    if (!std::holds_alternative<Ordinal>(t)) {
        return "summand is an ordinal game but the target is a finite form";
    }
    Player allowed = o.negative ? Player::Right : Player::Left;
    if (p != allowed) {
        return "only one player has moves on a signed ordinal summand";
    }
    if (!(std::get<Ordinal>(t) < o.value)) {
        return "ordinal target must be strictly smaller";
    }
    return std::nullopt;
}

SummandPos apply_target(const SummandPos& pos, const MoveTarget& t) {
    if (std::holds_alternative<GameId>(pos)) {
        return std::get<GameId>(t);
    }
    OrdSummand o = std::get<OrdSummand>(pos);
    o.value = std::get<Ordinal>(t);
    return o;
}

void emit_targets_for(const SummandPos& pos, Player p, uint32_t bound,
                      const std::function<void(const MoveTarget&)>& emit) {
    if (std::holds_alternative<GameId>(pos)) {
        for (GameId o : kernel().options(std::get<GameId>(pos), p)) {
            emit(MoveTarget{o});
        }
        return;
    }
    const OrdSummand& o = std::get<OrdSummand>(pos);
    Player allowed = o.negative ? Player::Right : Player::Left;
    if (p != allowed) return;
    for (const Ordinal& b : ordinal_descents(o.value, bound)) {
        emit(MoveTarget{b});
    }
}

const HeadEntry* head_find(const SeriesComp& sc, uint32_t index) {
    for (const auto& e : sc.head) {
        if (e.index == index) return &e;
    }
    return nullptr;
}

std::vector<uint32_t> union_sorted(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::set<uint32_t> s(a.begin(), a.end());
    s.insert(b.begin(), b.end());
    return std::vector<uint32_t>(s.begin(), s.end());
}

}  // namespace

std::string move_to_string(const Move& mv) {
    const std::string c = comp_tag(mv.comp);
    struct V {
        const std::string& c;
        std::string operator()(const FiniteMove& m) const { return c + ".to(" + kernel().raw_string(m.to) + ")"; }
        std::string operator()(const OrdMove& m) const { return c + ".ord(" + m.to.to_string() + ")"; }
        std::string operator()(const NimMove& m) const { return c + ".nim(" + m.to.to_string() + ")"; }
        std::string operator()(const OpenMove& m) const {
            return c + ".open(n=" + std::to_string(m.n) + ",i=" + std::to_string(m.i) +
                   ",to=" + target_to_string(m.to) + ")";
        }
        std::string operator()(const PlayWithinMove& m) const {
            return c + ".play(i=" + std::to_string(m.i) + ",to=" + target_to_string(m.to) + ")";
        }
        std::string operator()(const CloseMove& m) const {
            return c + ".close(m=" + std::to_string(m.m) + ",j=" + std::to_string(m.j) +
                   ",to=" + target_to_string(m.to) + ")";
        }
        std::string operator()(const SubsetOpenMove& m) const {
            return c + ".subopen(I=" + index_set_to_string(m.I) + ",i=" + std::to_string(m.i) +
                   ",to=" + target_to_string(m.to) + ")";
        }
        std::string operator()(const SubsetCloseMove& m) const {
            return c + ".subclose(J=" + index_set_to_string(m.J) + ",j=" + std::to_string(m.j) +
                   ",to=" + target_to_string(m.to) + ")";
        }
        std::string operator()(const LimitPickMove& m) const {
            return c + ".pick(n=" + std::to_string(m.n) + ",to=" + kernel().raw_string(m.to) + ")";
        }
    };
    return std::visit(V{c}, mv.body);
}

std::string state_to_string(const CompoundState& st) {
    std::ostringstream out;
    out << "mover=" << to_string(st.mover);
    for (size_t k = 0; k < st.components.size(); ++k) {
        out << " " << comp_tag(static_cast<uint32_t>(k)) << "=";
        const Component& c = st.components[k];
        if (std::holds_alternative<FiniteComp>(c)) {
            out << "finite(" << kernel().raw_string(std::get<FiniteComp>(c).g) << ")";
        } else if (std::holds_alternative<OrdComp>(c)) {
            const auto& oc = std::get<OrdComp>(c);
            out << (oc.negative ? "-ord(" : "ord(") << oc.value.to_string() << ")";
        } else if (std::holds_alternative<NimberComp>(c)) {
            out << "nim(" << std::get<NimberComp>(c).index.to_string() << ")";
        } else if (std::holds_alternative<LimitComp>(c)) {
            const auto& lc = std::get<LimitComp>(c);
            out << "limit[" << (lc.kind == LimitKind::Natural ? "natural" : "monotone") << ","
                << lc.seq->name << "]";
        } else {
            const auto& sc = std::get<SeriesComp>(c);
            out << "series[" << sc.seq->name << ",";
            switch (sc.variant) {
                case SeriesVariant::Plain: out << "plain"; break;
                case SeriesVariant::Bullet: out << "bullet"; break;
                case SeriesVariant::Subset: out << "subset"; break;
            }
            switch (sc.phase) {
                case SeriesPhase::Unopened:
                    out << ",unopened";
                    break;
                case SeriesPhase::HalfOpened:
                case SeriesPhase::Closed:
                    out << (sc.phase == SeriesPhase::HalfOpened ? ",halfopen" : ",closed");
                    out << ",owner=" << to_string(sc.owner);
                    if (sc.variant == SeriesVariant::Subset) {
                        out << ",I=" << index_set_to_string(sc.I);
                        if (sc.phase == SeriesPhase::Closed) out << ",J=" << index_set_to_string(sc.J);
                    } else {
                        out << ",n=" << sc.n;
                        if (sc.phase == SeriesPhase::Closed) out << ",m=" << sc.m;
                    }
                    out << ",head={";
                    for (size_t h = 0; h < sc.head.size(); ++h) {
                        if (h) out << ",";
                        out << sc.head[h].index << ":" << pos_to_string(sc.head[h].pos);
                    }
                    out << "}";
                    break;
            }
            out << "]";
        }
    }
    return out.str();
}

std::vector<Move> legal_moves(const CompoundState& st, uint32_t bound) {
    std::vector<Move> out;
    const Player p = st.mover;

    for (uint32_t ci = 0; ci < st.components.size(); ++ci) {
        const Component& c = st.components[ci];

        if (std::holds_alternative<FiniteComp>(c)) {
            for (GameId o : kernel().options(std::get<FiniteComp>(c).g, p)) {
                out.push_back({ci, FiniteMove{o}});
            }
            continue;
        }

        if (std::holds_alternative<OrdComp>(c)) {
            const auto& oc = std::get<OrdComp>(c);
            Player allowed = oc.negative ? Player::Right : Player::Left;
            if (p != allowed) continue;
            for (const Ordinal& b : ordinal_descents(oc.value, bound)) {
                out.push_back({ci, OrdMove{b}});
            }
            continue;
        }

        if (std::holds_alternative<NimberComp>(c)) {
            for (const Ordinal& b : ordinal_descents(std::get<NimberComp>(c).index, bound)) {
                out.push_back({ci, NimMove{b}});
            }
            continue;
        }

        if (std::holds_alternative<LimitComp>(c)) {
            const auto& lc = std::get<LimitComp>(c);
            if (lc.kind == LimitKind::Natural) {
                for (const auto& e : lc.seq->common) {
                    if (e.side == p && e.from <= bound) {
                        out.push_back({ci, LimitPickMove{e.from, e.option}});
                    }
                }
            } else {
                for (const auto& e : lc.seq->dominance) {
                    if (e.side == p && e.n <= bound) {
                        out.push_back({ci, LimitPickMove{e.n, e.option}});
                    }
                }
            }
            continue;
        }

        const auto& sc = std::get<SeriesComp>(c);

        if (sc.phase == SeriesPhase::Unopened) {
            if (sc.variant == SeriesVariant::Subset) {
                const uint32_t limit = (bound >= 31) ? 31 : bound;
                for (uint32_t mask = 1; mask < (1u << (limit + 1)); ++mask) {
                    std::vector<uint32_t> I;
                    for (uint32_t b = 0; b <= limit; ++b) {
                        if (mask & (1u << b)) I.push_back(b);
                    }
                    for (uint32_t i : I) {
                        emit_targets_for(sc.seq->at(i), p, bound, [&](const MoveTarget& t) {
                            out.push_back({ci, SubsetOpenMove{I, i, t}});
                        });
                    }
                }
            } else {
                for (uint32_t n = 0; n <= bound; ++n) {
                    for (uint32_t i = 0; i <= n; ++i) {
                        emit_targets_for(sc.seq->at(i), p, bound, [&](const MoveTarget& t) {
                            out.push_back({ci, OpenMove{n, i, t}});
                        });
                    }
                }
            }
            continue;
        }

        if (sc.phase == SeriesPhase::Closed || p == sc.owner ||
            sc.variant == SeriesVariant::Bullet) {
            // Moves on instantiated summands without touching the horizon:
            // the owner's only series moves, everyone's moves once closed,
            // and the eventuality option of the bullet protocol.
            for (const auto& e : sc.head) {
                emit_targets_for(e.pos, p, bound, [&](const MoveTarget& t) {
                    out.push_back({ci, PlayWithinMove{e.index, t}});
                });
            }
        }

        if (sc.phase == SeriesPhase::HalfOpened && p != sc.owner) {
            if (sc.variant == SeriesVariant::Subset) {
                const uint32_t limit = (bound >= 31) ? 31 : bound;
                for (uint32_t mask = 0; mask < (1u << (limit + 1)); ++mask) {
                    std::vector<uint32_t> J;
                    for (uint32_t b = 0; b <= limit; ++b) {
                        if (mask & (1u << b)) J.push_back(b);
                    }
                    for (uint32_t j : union_sorted(sc.I, J)) {
                        const HeadEntry* he = head_find(sc, j);
                        SummandPos pos = he ? he->pos : sc.seq->at(j);
                        emit_targets_for(pos, p, bound, [&](const MoveTarget& t) {
                            out.push_back({ci, SubsetCloseMove{J, j, t}});
                        });
                    }
                }
            } else {
                for (uint32_t m = sc.n; m <= sc.n + bound; ++m) {
                    for (uint32_t j = 0; j <= m; ++j) {
                        const HeadEntry* he = head_find(sc, j);
                        SummandPos pos = he ? he->pos : sc.seq->at(j);
                        emit_targets_for(pos, p, bound, [&](const MoveTarget& t) {
                            out.push_back({ci, CloseMove{m, j, t}});
                        });
                    }
                }
            }
        }
    }
    return out;
}

CompoundState apply_move(const CompoundState& st, const Move& mv) {
    if (mv.comp >= st.components.size()) {
        reject("component index out of range");
    }
    CompoundState next = st;
    Component& c = next.components[mv.comp];
    const Player p = st.mover;

    if (std::holds_alternative<FiniteMove>(mv.body)) {
        if (!std::holds_alternative<FiniteComp>(c)) reject("plain game move on a non-plain component");
        auto& fc = std::get<FiniteComp>(c);
        const auto& opts = kernel().options(fc.g, p);
        GameId to = std::get<FiniteMove>(mv.body).to;
        if (std::find(opts.begin(), opts.end(), to) == opts.end()) {
            reject("target is not an available option of the component for the mover");
        }
        fc.g = to;
    } else if (std::holds_alternative<OrdMove>(mv.body)) {
        if (!std::holds_alternative<OrdComp>(c)) reject("ordinal move on a non-ordinal component");
        auto& oc = std::get<OrdComp>(c);
        Player allowed = oc.negative ? Player::Right : Player::Left;
        if (p != allowed) reject("only one player has moves on a signed ordinal component");
        const Ordinal& to = std::get<OrdMove>(mv.body).to;
        if (!(to < oc.value)) reject("ordinal target must be strictly smaller");
        oc.value = to;
    } else if (std::holds_alternative<NimMove>(mv.body)) {
        if (!std::holds_alternative<NimberComp>(c)) reject("nim move on a non-nimber component");
        auto& nc = std::get<NimberComp>(c);
        const Ordinal& to = std::get<NimMove>(mv.body).to;
        if (!(to < nc.index)) reject("nim target must be strictly smaller");
        nc.index = to;
    } else if (std::holds_alternative<LimitPickMove>(mv.body)) {
        if (!std::holds_alternative<LimitComp>(c)) reject("limit pick on a non-limit component");
        const auto& lc = std::get<LimitComp>(c);
        const auto& m = std::get<LimitPickMove>(mv.body);
        bool certified = false;
        if (lc.kind == LimitKind::Natural) {
            for (const auto& e : lc.seq->common) {
                certified |= (e.side == p && e.from == m.n && e.option == m.to);
            }
        } else {
            for (const auto& e : lc.seq->dominance) {
                certified |= (e.side == p && e.n == m.n && e.option == m.to);
            }
        }
        if (!certified) reject("limit move is not certified on the sequence template");
        c = FiniteComp{m.to};
    } else {
        if (!std::holds_alternative<SeriesComp>(c)) reject("series move on a non-series component");
        auto& sc = std::get<SeriesComp>(c);

        if (std::holds_alternative<OpenMove>(mv.body)) {
            const auto& m = std::get<OpenMove>(mv.body);
            if (sc.variant == SeriesVariant::Subset) reject("initial-segment opening on a subset-protocol series");
            if (sc.phase != SeriesPhase::Unopened) reject("series already has a committed horizon");
            if (m.i > m.n) reject("opening move must land at or below the announced horizon");
            SummandPos pos = sc.seq->at(m.i);
            if (auto err = target_error(pos, p, m.to)) reject(*err);
            sc.phase = SeriesPhase::HalfOpened;
            sc.owner = p;
            sc.n = m.n;
            sc.head.clear();
            for (uint32_t i = 0; i <= m.n; ++i) {
                sc.head.push_back({i, i == m.i ? apply_target(pos, m.to) : sc.seq->at(i)});
            }
        } else if (std::holds_alternative<PlayWithinMove>(mv.body)) {
            const auto& m = std::get<PlayWithinMove>(mv.body);
            if (sc.phase == SeriesPhase::Unopened) reject("series has no committed horizon to play within");
            if (sc.phase == SeriesPhase::HalfOpened && p != sc.owner &&
                sc.variant != SeriesVariant::Bullet) {
                reject("the opponent of the horizon owner must extend the horizon to move here");
            }
            const HeadEntry* he = head_find(sc, m.i);
            if (he == nullptr) reject("summand index is not part of the instantiated head");
            if (auto err = target_error(he->pos, p, m.to)) reject(*err);
            for (auto& e : sc.head) {
                if (e.index == m.i) e.pos = apply_target(e.pos, m.to);
            }
        } else if (std::holds_alternative<CloseMove>(mv.body)) {
            const auto& m = std::get<CloseMove>(mv.body);
            if (sc.variant == SeriesVariant::Subset) reject("initial-segment close on a subset-protocol series");
            if (sc.phase != SeriesPhase::HalfOpened) reject("only a half-open series can be closed");
            if (p == sc.owner) reject("the horizon owner can never extend or close the series");
            if (m.m < sc.n) reject("closing horizon must be at least the committed horizon");
            if (m.j > m.m) reject("closing move must land at or below the closing horizon");
            for (uint32_t i = sc.n + 1; i <= m.m; ++i) {
                sc.head.push_back({i, sc.seq->at(i)});
            }
            HeadEntry* target = nullptr;
            for (auto& e : sc.head) {
                if (e.index == m.j) target = &e;
            }
            if (target == nullptr) reject("closing move landed outside the instantiated head");
            if (auto err = target_error(target->pos, p, m.to)) reject(*err);
            target->pos = apply_target(target->pos, m.to);
            sc.phase = SeriesPhase::Closed;
            sc.m = m.m;
        } else if (std::holds_alternative<SubsetOpenMove>(mv.body)) {
            const auto& m = std::get<SubsetOpenMove>(mv.body);
            if (sc.variant != SeriesVariant::Subset) reject("index-set opening on an initial-segment series");
            if (sc.phase != SeriesPhase::Unopened) reject("series already has a committed index set");
            if (m.I.empty()) reject("opener's index set must be nonempty");
            if (!std::is_sorted(m.I.begin(), m.I.end()) ||
                std::adjacent_find(m.I.begin(), m.I.end()) != m.I.end()) {
                reject("index set must be strictly ascending");
            }
            if (std::find(m.I.begin(), m.I.end(), m.i) == m.I.end()) {
                reject("opening move must land inside the chosen index set");
            }
            SummandPos pos = sc.seq->at(m.i);
            if (auto err = target_error(pos, p, m.to)) reject(*err);
            sc.phase = SeriesPhase::HalfOpened;
            sc.owner = p;
            sc.I = m.I;
            sc.head.clear();
            for (uint32_t i : m.I) {
                sc.head.push_back({i, i == m.i ? apply_target(pos, m.to) : sc.seq->at(i)});
            }
        } else if (std::holds_alternative<SubsetCloseMove>(mv.body)) {
            const auto& m = std::get<SubsetCloseMove>(mv.body);
            if (sc.variant != SeriesVariant::Subset) reject("index-set close on an initial-segment series");
            if (sc.phase != SeriesPhase::HalfOpened) reject("only a half-open series can be closed");
            if (p == sc.owner) reject("the index-set owner can never enlarge the index set");
            if (!std::is_sorted(m.J.begin(), m.J.end()) ||
                std::adjacent_find(m.J.begin(), m.J.end()) != m.J.end()) {
                reject("index set must be strictly ascending");
            }
            std::vector<uint32_t> all = union_sorted(sc.I, m.J);
            if (std::find(all.begin(), all.end(), m.j) == all.end()) {
                reject("closing move must land inside the combined index set");
            }
            std::vector<HeadEntry> head;
            for (uint32_t i : all) {
                const HeadEntry* he = head_find(sc, i);
                head.push_back({i, he ? he->pos : sc.seq->at(i)});
            }
            HeadEntry* target = nullptr;
            for (auto& e : head) {
                if (e.index == m.j) target = &e;
            }
            if (auto err = target_error(target->pos, p, m.to)) reject(*err);
            target->pos = apply_target(target->pos, m.to);
            sc.phase = SeriesPhase::Closed;
            sc.J = m.J;
            sc.head = std::move(head);
        } else {
            reject("move kind does not apply to a series component");
        }
    }

    next.mover = opponent(p);
    return next;
}

TerminalCheck terminal_check(const CompoundState& st, uint32_t bound) {
    const Player p = st.mover;
    std::string uncertified;

    auto note_uncertified = [&](uint32_t ci, const std::string& why) {
        if (!uncertified.empty()) uncertified += "; ";
        uncertified += comp_tag(ci) + ": " + why;
    };

    for (uint32_t ci = 0; ci < st.components.size(); ++ci) {
        const Component& c = st.components[ci];

        if (std::holds_alternative<FiniteComp>(c)) {
            if (!kernel().options(std::get<FiniteComp>(c).g, p).empty()) {
                return {TerminalStatus::HasMoves, ""};
            }
            continue;
        }
        if (std::holds_alternative<OrdComp>(c)) {
            const auto& oc = std::get<OrdComp>(c);
            Player allowed = oc.negative ? Player::Right : Player::Left;
            if (p == allowed && !oc.value.is_zero()) return {TerminalStatus::HasMoves, ""};
            continue;
        }
        if (std::holds_alternative<NimberComp>(c)) {
            if (!std::get<NimberComp>(c).index.is_zero()) return {TerminalStatus::HasMoves, ""};
            continue;
        }
        if (std::holds_alternative<LimitComp>(c)) {
            const auto& lc = std::get<LimitComp>(c);
            bool any = false;
            if (lc.kind == LimitKind::Natural) {
                for (const auto& e : lc.seq->common) any |= (e.side == p);
            } else {
                for (const auto& e : lc.seq->dominance) any |= (e.side == p);
            }
            if (any) return {TerminalStatus::HasMoves, ""};
            bool none_ever = (p == Player::Left) ? lc.seq->left_none_ever : lc.seq->right_none_ever;
            if (!none_ever) {
                note_uncertified(ci, "limit component carries no certificate that the mover never has a pick");
            }
            continue;
        }

        const auto& sc = std::get<SeriesComp>(c);
        const bool never = (p == Player::Left) ? sc.seq->left_never_moves : sc.seq->right_never_moves;

        if (sc.phase == SeriesPhase::Unopened) {
            bool found = false;
            for (uint32_t i = 0; i <= bound && !found; ++i) {
                found = pos_has_move(sc.seq->at(i), p);
            }
            if (found) return {TerminalStatus::HasMoves, ""};
            if (!never) {
                note_uncertified(ci, "unopened series emptiness depends on the bound");
            }
            continue;
        }

        // Any mover option on an instantiated summand yields a move in every
        // phase: play-within for the owner (or anyone under the bullet
        // protocol, or once closed), and a closing move landing on that
        // summand for the opponent.
        bool head_move = false;
        for (const auto& e : sc.head) {
            head_move |= pos_has_move(e.pos, p);
        }
        if (head_move) return {TerminalStatus::HasMoves, ""};

        if (sc.phase == SeriesPhase::HalfOpened && p != sc.owner) {
            bool found = false;
            if (sc.variant == SeriesVariant::Subset) {
                for (uint32_t j = 0; j <= bound && !found; ++j) {
                    if (head_find(sc, j) != nullptr) continue;
                    found = pos_has_move(sc.seq->at(j), p);
                }
            } else {
                for (uint32_t j = sc.n + 1; j <= sc.n + bound && !found; ++j) {
                    found = pos_has_move(sc.seq->at(j), p);
                }
            }
            if (found) return {TerminalStatus::HasMoves, ""};
            if (!never) {
                note_uncertified(ci, "fresh-summand emptiness depends on the bound");
            }
        }
    }

    if (uncertified.empty()) {
        return {TerminalStatus::CertifiedLoss, "mover has no move on any component"};
    }
    return {TerminalStatus::UncertifiedEmpty, uncertified};
}

ProgressMeasure progress_measure(const CompoundState& st) {
    ProgressMeasure m;
    for (const Component& c : st.components) {
        if (std::holds_alternative<FiniteComp>(c)) {
            m.rest = Ordinal::natural_sum(m.rest, Ordinal::from_nat(kernel().birthday(std::get<FiniteComp>(c).g)));
        } else if (std::holds_alternative<OrdComp>(c)) {
            m.rest = Ordinal::natural_sum(m.rest, std::get<OrdComp>(c).value);
        } else if (std::holds_alternative<NimberComp>(c)) {
            m.rest = Ordinal::natural_sum(m.rest, std::get<NimberComp>(c).index);
        } else if (std::holds_alternative<LimitComp>(c)) {
            m.fresh += 1;
        } else {
            const auto& sc = std::get<SeriesComp>(c);
            if (sc.phase == SeriesPhase::Unopened) {
                m.fresh += 1;
            } else {
                if (sc.phase == SeriesPhase::HalfOpened) m.open += 1;
                for (const auto& e : sc.head) {
                    m.rest = Ordinal::natural_sum(m.rest, pos_birthday(e.pos));
                }
            }
        }
    }
    return m;
}

bool measure_decreases(const ProgressMeasure& before, const ProgressMeasure& after) {
    if (after.fresh != before.fresh) return after.fresh < before.fresh;
    if (after.open != before.open) return after.open < before.open;
    return after.rest < before.rest;
}

Component negate_component(const Component& c) {
    if (std::holds_alternative<FiniteComp>(c)) {
        return FiniteComp{kernel().negate(std::get<FiniteComp>(c).g)};
    }
    if (std::holds_alternative<OrdComp>(c)) {
        OrdComp oc = std::get<OrdComp>(c);
        oc.negative = !oc.negative;
        return oc;
    }
    if (std::holds_alternative<NimberComp>(c)) {
        return c;  // nimbers are their own negatives
    }
    if (std::holds_alternative<SeriesComp>(c)) {
        const auto& sc = std::get<SeriesComp>(c);
        if (sc.phase != SeriesPhase::Unopened) {
            throw std::logic_error("negate_component: series mid-protocol has no negation");
        }
        SeriesComp neg = sc;
        neg.seq = negate_spec(sc.seq);
        return neg;
    }
    throw std::logic_error("negate_component: limit components have no certified negation");
}

}  // namespace gameseries
