#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gameseries/arena.hpp"

// Built-in summand sequences. Each builder fills in exactly the
// closed-form knowledge the sequence admits; anything left empty makes
// strategies that depend on it fail fast rather than guess.

namespace gameseries {

// Form of the dyadic d with one option per proper prefix of its sign
// expansion; the form's value and those of all its subpositions are
// registered with the kernel.
GameId realized_number(const Dyadic& d);

// Named sequences: ones, twos, stars, ups, pm_one, geom_half,
// quarter_geom, ordpowers, minusone_then_ones, zerozero_then_ones,
// sumform_zero_then_ones, zeroform_then_ones. Throws std::invalid_argument
// on an unknown name.
std::shared_ptr<const SequenceSpec> make_sequence(const std::string& name);

std::vector<std::string> builtin_sequence_names();

// Every summand is the same form g.
std::shared_ptr<const SequenceSpec> make_const_sequence(GameId g);

// A finite prefix of explicit forms followed by the given tail sequence.
std::shared_ptr<const SequenceSpec> make_list_sequence(std::vector<GameId> prefix,
                                                       std::shared_ptr<const SequenceSpec> tail);

// Summands cycle through the given nonempty period.
std::shared_ptr<const SequenceSpec> make_cycle_sequence(std::vector<GameId> period);

}  // namespace gameseries
