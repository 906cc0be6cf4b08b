#include "gameseries/sequences.hpp"

#include <map>
#include <stdexcept>

#include "gameseries/signseq.hpp"

namespace gameseries {

GameId realized_number(const Dyadic& d) {
    return SignSeq::sign_expansion(d).realize_as_game();
}

namespace {

Dyadic mul_nat(const Dyadic& d, uint64_t q) {
    // Doubling keeps the scan loops below exact without a general product.
    Dyadic acc = Dyadic::from_int(0);
    Dyadic base = d;
    while (q > 0) {
        if (q & 1) acc = acc + base;
        base = base + base;
        q >>= 1;
    }
    return acc;
}

bool is_first_winner(const SummandPos& pos) {
    if (!std::holds_alternative<GameId>(pos)) return false;  // signed ordinals are one-sided
    return kernel().outcome(std::get<GameId>(pos)) == Outcome::FirstWins;
}

bool is_conway_zero(const SummandPos& pos) {
    if (std::holds_alternative<GameId>(pos)) {
        return kernel().outcome(std::get<GameId>(pos)) == Outcome::SecondWins;
    }
    return std::get<OrdSummand>(pos).value.is_zero();
}

std::function<std::vector<uint32_t>(uint32_t, uint32_t)> all_indices() {
    return [](uint32_t start, uint32_t count) {
        std::vector<uint32_t> v;
        for (uint32_t k = 0; k < count; ++k) v.push_back(start + k);
        return v;
    };
}

std::function<std::optional<uint32_t>(uint32_t)> no_first_winner() {
    return [](uint32_t) -> std::optional<uint32_t> { return std::nullopt; };
}

// Partial sums P(m) = a*m + b for m >= lo (exact affine tail), with the
// finitely many earlier values listed explicitly: covers every built-in
// integer-valued sequence here.
struct AffineTail {
    std::vector<Dyadic> early;  // P(0) .. P(lo-1)
    Dyadic slope;               // change per step beyond lo
    Dyadic at_lo;               // P(lo)
    uint32_t lo = 0;

    Dyadic at(uint32_t m) const {
        if (m < lo) return early[m];
        return at_lo + mul_nat(slope, m - lo);
    }
};

std::function<std::optional<uint32_t>(uint32_t, bool)> affine_psum(const AffineTail& t) {
    return [t](uint32_t n, bool nonneg) -> std::optional<uint32_t> {
        const Dyadic zero = Dyadic::from_int(0);
        // Scan the explicit region, then the affine tail. Once inside the
        // tail a slope moving the wrong way settles the query for good.
        for (uint32_t m = n;; ++m) {
            Dyadic p = t.at(m);
            if (nonneg ? p >= zero : p <= zero) return m;
            if (m >= t.lo) {
                bool rising = zero < t.slope;
                bool falling = t.slope < zero;
                if (nonneg && !rising) return std::nullopt;
                if (!nonneg && !falling) return std::nullopt;
            }
        }
    };
}

std::function<std::optional<uint32_t>(const Dyadic&)> affine_tail_threshold(const AffineTail& t) {
    return [t](const Dyadic& target) -> std::optional<uint32_t> {
        const Dyadic zero = Dyadic::from_int(0);
        if (t.slope < zero) return std::nullopt;
        if (!(zero < t.slope)) {
            // Flat tail: everything from lo on has the same value.
            if (!(target < t.at_lo)) return std::nullopt;
        }
        // Least n such that every P(m) with m >= n exceeds target. Find the
        // first tail index that clears the target, then walk back over the
        // explicit region as far as it stays clear.
        uint32_t n = t.lo;
        while (!(target < t.at(n))) ++n;
        while (n > 0 && target < t.at(n - 1)) --n;
        return n;
    };
}

std::shared_ptr<SequenceSpec> base(const std::string& name) {
    auto s = std::make_shared<SequenceSpec>();
    s->name = name;
    return s;
}

std::shared_ptr<const SequenceSpec> make_ones() {
    auto s = base("ones");
    GameId one = realized_number(Dyadic::from_int(1));
    s->at = [one](uint32_t) { return SummandPos{one}; };
    s->dyadic_value = [](uint32_t) { return Dyadic::from_int(1); };
    AffineTail t{{}, Dyadic::from_int(1), Dyadic::from_int(1), 0};
    s->psum_witness = affine_psum(t);
    s->tail_threshold = affine_tail_threshold(t);
    s->first_winner_after = no_first_winner();
    s->nonzero_indices_from = all_indices();
    s->right_never_moves = true;
    return s;
}

std::shared_ptr<const SequenceSpec> make_twos() {
    auto s = base("twos");
    GameId two = realized_number(Dyadic::from_int(2));
    s->at = [two](uint32_t) { return SummandPos{two}; };
    s->dyadic_value = [](uint32_t) { return Dyadic::from_int(2); };
    AffineTail t{{}, Dyadic::from_int(2), Dyadic::from_int(2), 0};
    s->psum_witness = affine_psum(t);
    s->tail_threshold = affine_tail_threshold(t);
    s->first_winner_after = no_first_winner();
    s->nonzero_indices_from = all_indices();
    s->right_never_moves = true;
    return s;
}

std::shared_ptr<const SequenceSpec> make_stars() {
    auto s = base("stars");
    GameId star = kernel().star();
    s->at = [star](uint32_t) { return SummandPos{star}; };
    s->first_winner_after = [](uint32_t n) { return std::optional<uint32_t>(n + 1); };
    s->nonzero_indices_from = all_indices();
    return s;
}

std::shared_ptr<const SequenceSpec> make_ups() {
    auto s = base("ups");
    GameId up = kernel().up();
    s->at = [up](uint32_t) { return SummandPos{up}; };
    s->first_winner_after = no_first_winner();
    s->nonzero_indices_from = all_indices();
    return s;
}

std::shared_ptr<const SequenceSpec> make_pm_one() {
    auto s = base("pm_one");
    GameId pos = realized_number(Dyadic::from_int(1));
    GameId neg = realized_number(Dyadic::from_int(-1));
    s->at = [pos, neg](uint32_t i) { return SummandPos{i % 2 == 0 ? pos : neg}; };
    s->dyadic_value = [](uint32_t i) { return Dyadic::from_int(i % 2 == 0 ? 1 : -1); };
    // Partial sums alternate 1, 0, 1, 0, ...
    s->psum_witness = [](uint32_t n, bool nonneg) -> std::optional<uint32_t> {
        if (nonneg) return n;
        return n % 2 == 1 ? n : n + 1;
    };
    s->tail_threshold = [](const Dyadic& target) -> std::optional<uint32_t> {
        if (target < Dyadic::from_int(0)) return 0;
        return std::nullopt;
    };
    s->first_winner_after = no_first_winner();
    s->nonzero_indices_from = all_indices();
    return s;
}

std::shared_ptr<const SequenceSpec> geometric(const std::string& name, uint32_t shift) {
    // Summand i has value 2^-(i+shift); the partial sums rise to the
    // classical sum 2^-(shift-1) without reaching it.
    auto s = base(name);
    s->at = [shift](uint32_t i) { return SummandPos{realized_number(Dyadic::half_power(i + shift))}; };
    s->dyadic_value = [shift](uint32_t i) { return Dyadic::half_power(i + shift); };
    const Dyadic sum = Dyadic::half_power(shift - 1);
    s->classical_sum = sum;
    s->psum_witness = [](uint32_t n, bool nonneg) -> std::optional<uint32_t> {
        if (nonneg) return n;
        return std::nullopt;
    };
    s->tail_threshold = [sum, shift](const Dyadic& target) -> std::optional<uint32_t> {
        if (!(target < sum)) return std::nullopt;
        uint32_t n = 0;
        while (!(target < sum - Dyadic::half_power(n + shift))) ++n;
        return n;
    };
    s->small_terms_from = [shift](uint32_t p) -> std::optional<uint32_t> {
        // |2^-(l+shift)| < 2^-p iff l + shift > p.
        if (p + 1 <= shift) return 0;
        return p + 1 - shift;
    };
    s->first_winner_after = no_first_winner();
    s->nonzero_indices_from = all_indices();
    return s;
}

std::shared_ptr<const SequenceSpec> make_ordpowers() {
    auto s = base("ordpowers");
    s->at = [](uint32_t i) {
        return SummandPos{OrdSummand{Ordinal::omega_power(Ordinal::from_nat(i), 1), false}};
    };
    s->ordinal_value = [](uint32_t i) -> std::optional<Ordinal> {
        return Ordinal::omega_power(Ordinal::from_nat(i), 1);
    };
    s->first_winner_after = no_first_winner();
    s->nonzero_indices_from = all_indices();
    s->right_never_moves = true;
    return s;
}

std::shared_ptr<const SequenceSpec> ones_with_head(const std::string& name,
                                                   std::vector<SummandPos> head,
                                                   std::vector<Dyadic> head_values,
                                                   bool right_never) {
    // Finitely many explicit summands, then constant 1.
    auto s = base(name);
    GameId one = realized_number(Dyadic::from_int(1));
    auto headp = std::make_shared<std::vector<SummandPos>>(std::move(head));
    s->at = [headp, one](uint32_t i) {
        return i < headp->size() ? (*headp)[i] : SummandPos{one};
    };
    auto vals = std::make_shared<std::vector<Dyadic>>(std::move(head_values));
    s->dyadic_value = [vals](uint32_t i) -> std::optional<Dyadic> {
        return i < vals->size() ? (*vals)[i] : Dyadic::from_int(1);
    };
    AffineTail t;
    Dyadic p = Dyadic::from_int(0);
    for (size_t i = 0; i + 1 < vals->size(); ++i) {
        p = p + (*vals)[i];
        t.early.push_back(p);
    }
    t.lo = vals->empty() ? 0 : static_cast<uint32_t>(vals->size() - 1);
    Dyadic full = vals->empty() ? Dyadic::from_int(0) : p + vals->back();
    t.at_lo = full;
    t.slope = Dyadic::from_int(1);
    s->psum_witness = affine_psum(t);
    s->tail_threshold = affine_tail_threshold(t);
    s->first_winner_after = no_first_winner();
    auto headp2 = headp;
    s->nonzero_indices_from = [headp2](uint32_t start, uint32_t count) {
        std::vector<uint32_t> v;
        for (uint32_t i = start; v.size() < count; ++i) {
            if (i < headp2->size() && is_conway_zero((*headp2)[i])) continue;
            v.push_back(i);
        }
        return v;
    };
    s->right_never_moves = right_never;
    return s;
}

std::map<std::string, std::shared_ptr<const SequenceSpec>>& cache() {
    static std::map<std::string, std::shared_ptr<const SequenceSpec>> m;
    return m;
}

}  // namespace

std::vector<std::string> builtin_sequence_names() {
    return {"ones",        "twos",         "stars",
            "ups",         "pm_one",       "geom_half",
            "quarter_geom", "ordpowers",   "minusone_then_ones",
            "zerozero_then_ones", "sumform_zero_then_ones", "zeroform_then_ones"};
}

std::shared_ptr<const SequenceSpec> make_sequence(const std::string& name) {
    auto& m = cache();
    auto it = m.find(name);
    if (it != m.end()) return it->second;

    std::shared_ptr<const SequenceSpec> s;
    if (name == "ones") {
        s = make_ones();
    } else if (name == "twos") {
        s = make_twos();
    } else if (name == "stars") {
        s = make_stars();
    } else if (name == "ups") {
        s = make_ups();
    } else if (name == "pm_one") {
        s = make_pm_one();
    } else if (name == "geom_half") {
        s = geometric("geom_half", 1);
    } else if (name == "quarter_geom") {
        s = geometric("quarter_geom", 2);
    } else if (name == "ordpowers") {
        s = make_ordpowers();
    } else if (name == "minusone_then_ones") {
        s = ones_with_head(name, {realized_number(Dyadic::from_int(-1))}, {Dyadic::from_int(-1)},
                           false);
    } else if (name == "zerozero_then_ones") {
        s = ones_with_head(name, {kernel().zero(), kernel().zero()},
                           {Dyadic::from_int(0), Dyadic::from_int(0)}, true);
    } else if (name == "sumform_zero_then_ones") {
        GameId g0 = kernel().sum(realized_number(Dyadic::from_int(-1)),
                                 realized_number(Dyadic::from_int(1)));
        s = ones_with_head(name, {g0}, {Dyadic::from_int(0)}, false);
    } else if (name == "zeroform_then_ones") {
        s = ones_with_head(name, {kernel().zero()}, {Dyadic::from_int(0)}, true);
    } else {
        throw std::invalid_argument("unknown sequence name: " + name);
    }
    m.emplace(name, s);
    return s;
}

std::shared_ptr<const SequenceSpec> make_const_sequence(GameId g) {
    return make_cycle_sequence({g});
}

std::shared_ptr<const SequenceSpec> make_list_sequence(std::vector<GameId> prefix,
                                                       std::shared_ptr<const SequenceSpec> tail) {
    auto s = std::make_shared<SequenceSpec>();
    std::string nm = "list([";
    for (size_t i = 0; i < prefix.size(); ++i) {
        if (i) nm += ",";
        nm += kernel().raw_string(prefix[i]);
    }
    s->name = nm + "]," + tail->name + ")";
    const uint32_t len = static_cast<uint32_t>(prefix.size());
    auto pre = std::make_shared<std::vector<GameId>>(std::move(prefix));
    auto t = tail;
    s->at = [pre, t, len](uint32_t i) -> SummandPos {
        return i < len ? SummandPos{(*pre)[i]} : t->at(i - len);
    };

    bool prefix_dyadic = true;
    for (GameId g : *pre) prefix_dyadic &= kernel().number_value(g).has_value();
    if (prefix_dyadic && t->dyadic_value) {
        s->dyadic_value = [pre, t, len](uint32_t i) -> std::optional<Dyadic> {
            return i < len ? kernel().number_value((*pre)[i]) : t->dyadic_value(i - len);
        };
    }
    if (prefix_dyadic && t->classical_sum) {
        Dyadic total = *t->classical_sum;
        for (GameId g : *pre) total = total + *kernel().number_value(g);
        s->classical_sum = total;
    }
    if (t->first_winner_after) {
        s->first_winner_after = [pre, t, len](uint32_t n) -> std::optional<uint32_t> {
            for (uint32_t i = n + 1; i < len; ++i) {
                if (kernel().outcome((*pre)[i]) == Outcome::FirstWins) return i;
            }
            // Tail region: full index len + j corresponds to tail index j.
            if (n + 1 > len) {
                auto r = t->first_winner_after(n - len);
                return r ? std::optional<uint32_t>(*r + len) : std::nullopt;
            }
            if (is_first_winner(t->at(0))) return len;
            auto r = t->first_winner_after(0);
            return r ? std::optional<uint32_t>(*r + len) : std::nullopt;
        };
    }
    if (t->nonzero_indices_from) {
        s->nonzero_indices_from = [pre, t, len](uint32_t start, uint32_t count) {
            std::vector<uint32_t> v;
            for (uint32_t i = start; i < len && v.size() < count; ++i) {
                if (!is_conway_zero(SummandPos{(*pre)[i]})) v.push_back(i);
            }
            if (v.size() < count) {
                uint32_t tstart = start > len ? start - len : 0;
                for (uint32_t i : t->nonzero_indices_from(tstart, count - static_cast<uint32_t>(v.size()))) {
                    v.push_back(i + len);
                }
            }
            return v;
        };
    }
    bool left_quiet = t->left_never_moves;
    bool right_quiet = t->right_never_moves;
    for (GameId g : *pre) {
        left_quiet &= kernel().left_options(g).empty();
        right_quiet &= kernel().right_options(g).empty();
    }
    s->left_never_moves = left_quiet;
    s->right_never_moves = right_quiet;
    return s;
}

std::shared_ptr<const SequenceSpec> make_cycle_sequence(std::vector<GameId> period) {
    if (period.empty()) {
        throw std::invalid_argument("cycle sequence needs a nonempty period");
    }
    auto s = std::make_shared<SequenceSpec>();
    std::string nm = period.size() == 1 ? "const(" + kernel().raw_string(period[0]) + ")"
                                        : "cycle([";
    if (period.size() > 1) {
        for (size_t i = 0; i < period.size(); ++i) {
            if (i) nm += ",";
            nm += kernel().raw_string(period[i]);
        }
        nm += "])";
    }
    s->name = nm;
    const uint32_t k = static_cast<uint32_t>(period.size());
    auto per = std::make_shared<std::vector<GameId>>(std::move(period));
    s->at = [per, k](uint32_t i) { return SummandPos{(*per)[i % k]}; };

    bool fw_any = false, nonzero_any = false;
    for (GameId g : *per) {
        fw_any |= kernel().outcome(g) == Outcome::FirstWins;
        nonzero_any |= kernel().outcome(g) != Outcome::SecondWins;
    }
    s->first_winner_after = [per, k, fw_any](uint32_t n) -> std::optional<uint32_t> {
        if (!fw_any) return std::nullopt;
        for (uint32_t m = n + 1;; ++m) {
            if (kernel().outcome((*per)[m % k]) == Outcome::FirstWins) return m;
        }
    };
    if (nonzero_any) {
        s->nonzero_indices_from = [per, k](uint32_t start, uint32_t count) {
            std::vector<uint32_t> v;
            for (uint32_t i = start; v.size() < count; ++i) {
                if (kernel().outcome((*per)[i % k]) == Outcome::SecondWins) continue;
                v.push_back(i);
            }
            return v;
        };
    }

    bool all_dyadic = true;
    std::vector<Dyadic> vals;
    for (GameId g : *per) {
        auto v = kernel().number_value(g);
        if (!v) {
            all_dyadic = false;
            break;
        }
        vals.push_back(*v);
    }
    if (all_dyadic) {
        s->dyadic_value = [per, k](uint32_t i) { return kernel().number_value((*per)[i % k]); };
        // One period of partial sums plus the per-period drift give exact
        // witnesses for sign and threshold queries.
        auto pp = std::make_shared<std::vector<Dyadic>>();
        Dyadic run = Dyadic::from_int(0);
        for (const Dyadic& v : vals) {
            run = run + v;
            pp->push_back(run);
        }
        const Dyadic delta = run;
        auto at_m = [pp, k, delta](uint32_t m) {
            return mul_nat(delta, m / k) + (*pp)[m % k];
        };
        const Dyadic zero = Dyadic::from_int(0);
        s->psum_witness = [pp, at_m, k, delta, zero](uint32_t n, bool nonneg) -> std::optional<uint32_t> {
            bool rising = zero < delta, falling = delta < zero;
            for (uint32_t m = n;; ++m) {
                Dyadic p = at_m(m);
                if (nonneg ? p >= zero : p <= zero) return m;
                if (m < n + k - 1 || m % k != k - 1) continue;
                // A full period has been scanned and m closes a period, so
                // every later value is delta * q + pp[r] with q > m / k.
                if (!rising && !falling) return std::nullopt;
                if (nonneg ? falling : rising) {
                    Dyadic extreme = (*pp)[0];
                    for (const Dyadic& q : *pp) {
                        if (nonneg ? extreme < q : q < extreme) extreme = q;
                    }
                    Dyadic best = mul_nat(delta, m / k + 1) + extreme;
                    if (nonneg ? best < zero : zero < best) return std::nullopt;
                }
            }
        };
        s->tail_threshold = [at_m, k, delta, zero](const Dyadic& target) -> std::optional<uint32_t> {
            if (delta < zero) return std::nullopt;
            for (uint32_t n = 0;; ++n) {
                bool ok = true;
                for (uint32_t m = n; m <= n + k && ok; ++m) ok = target < at_m(m);
                if (ok) return n;
                if (!(zero < delta) && n > k) return std::nullopt;  // flat drift never clears
            }
        };
        Dyadic biggest = vals[0].abs();
        for (const Dyadic& v : vals) {
            if (biggest < v.abs()) biggest = v.abs();
        }
        s->small_terms_from = [biggest](uint32_t p) -> std::optional<uint32_t> {
            if (biggest < Dyadic::half_power(p)) return 0;
            return std::nullopt;
        };
    }

    bool left_quiet = true, right_quiet = true;
    for (GameId g : *per) {
        left_quiet &= kernel().left_options(g).empty();
        right_quiet &= kernel().right_options(g).empty();
    }
    s->left_never_moves = left_quiet;
    s->right_never_moves = right_quiet;
    return s;
}

}  // namespace gameseries
