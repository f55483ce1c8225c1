#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wmta/automaton.hpp"
#include "wmta/build.hpp"
#include "wmta/cascade.hpp"
#include "wmta/intersect.hpp"

namespace wmta {

/// Line-oriented automaton format:
///
///   # comment
///   wmta <arity> <semiring>
///   states <count>                  (optional, defaults to max id + 1)
///   initial <state> <weight>        (exactly one)
///   final <state> <weight>
///   trans <src> <dst> <weight> <f1> ... <fN>
///
/// Label fields are UTF-8 strings or `<eps>`; a field may not start with
/// `<` otherwise. Throws ParseError with the 1-based line number.
Wmta parse_wmta(std::string_view text);

/// Canonical text: header, state count, initial, finals by state,
/// transitions sorted by (src, dst, label). Throws UsageError for labels
/// the format cannot carry (whitespace, or a leading `<`).
std::string serialize_wmta(const Wmta& a);

/// "1,3" → {1, 3}. Throws UsageError.
TapeIndexList parse_tape_list(std::string_view text);

/// "1:1,2:2" → {(1,1), (2,2)}. Throws UsageError.
std::vector<TapePair> parse_tape_pairs(std::string_view text);

/// Whitespace-separated components, `<eps>` for ε.
StringTuple parse_tuple(std::string_view text);

/// Cascade configuration, one stage per line:
///
///   stage <path> intersect <j:k[,j:k]> project <t[,t]>
///
/// `load` resolves a path to an automaton. Throws ParseError.
CascadeSpec parse_cascade_config(std::string_view text,
                                 const std::function<Wmta(const std::string&)>& load);

}  // namespace wmta
