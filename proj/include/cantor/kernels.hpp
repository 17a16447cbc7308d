#pragma once

// Data-parallel enumeration kernels. Each kernel in `kernels` is OpenMP
// parallel; the matching function in `reference` is the plain serial loop
// it must agree with. Results are identical and deterministically ordered.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "cantor/words.hpp"

namespace cantor {

class ShiftAutomaton;
class LanguageHandle;

using WordPredicate = std::function<bool(const FiniteWord&)>;

/// Number of words of length `len` over [0, alphabet_max].
std::uint64_t word_count(Digit alphabet_max, std::size_t len);
/// The index-th word of length `len` in lexicographic order.
FiniteWord word_at(std::uint64_t index, Digit alphabet_max, std::size_t len);

namespace kernels {

/// Minimal forbidden words, ordered by length then lexicographically.
std::vector<FiniteWord> forbidden_factors(const ShiftAutomaton& a, std::size_t max_len);
/// accepts_factor for each word.
std::vector<char> classify_factors(const ShiftAutomaton& a, const std::vector<FiniteWord>& words);
/// in_pref_D(class cls) for each word.
std::vector<char> classify_prefixes(const LanguageHandle& lang, const std::vector<FiniteWord>& words,
                                    std::size_t cls = 0);
/// Words of length <= max_len on which f and g disagree (at most `limit`, in enumeration order).
std::vector<FiniteWord> disagreements(Digit alphabet_max, std::size_t max_len, const WordPredicate& f,
                                      const WordPredicate& g, std::size_t limit = 16);
int max_threads();

}  // namespace kernels

namespace reference {

std::vector<FiniteWord> forbidden_factors(const ShiftAutomaton& a, std::size_t max_len);
std::vector<char> classify_factors(const ShiftAutomaton& a, const std::vector<FiniteWord>& words);
std::vector<char> classify_prefixes(const LanguageHandle& lang, const std::vector<FiniteWord>& words,
                                    std::size_t cls = 0);
std::vector<FiniteWord> disagreements(Digit alphabet_max, std::size_t max_len, const WordPredicate& f,
                                      const WordPredicate& g, std::size_t limit = 16);

}  // namespace reference

}  // namespace cantor
