#pragma once

#include <string>

#include "ctslab/system.hpp"

namespace ctslab::testing {

// Single-character word helpers.
Word w(const std::string& chars);
std::string wstr(const Word& word);

// Counter-net system for { a^n b^n | n >= 1 }: pump one counter symbol per
// a, switch with a silent deletion, delete one per b.
CtsSystem sys_anbn_strict();

// Counter system with a bottom marker for { a^n b^n | n >= 0 }.
CtsSystem sys_anbn();

// One-state counter net for the prefix-balanced a/b words (every prefix has
// at least as many a's as b's, totals equal).
CtsSystem sys_prefix_balanced();

// Same language, with a bottom marker and a zero-marking push rule.
CtsSystem sys_prefix_balanced_marked();

// 0-sequential system for prefix-balanced a/b words closed by a single c.
CtsSystem sys_balanced_then_c();

// 0-sequential counter net for { u b | u prefix-balanced over a/b }.
CtsSystem sys_balanced_plus_b();

// One-state system with recharge, push(a), pop(b) and a silent finisher;
// its words are decided by the segment balance procedure.
CtsSystem sys_segmented_ab();

// One-state system with zero-level emitters for a and a terminal finisher b.
CtsSystem sys_flat_finisher();

}  // namespace ctslab::testing
