#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/bases.hpp"
#include "cantor/expansion.hpp"
#include "cantor/words.hpp"

namespace cantor {

/// q_{i,j,k}: following d*_i, at a position of class j, reading letter k of d*_i.
struct AutomatonState {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;

  friend auto operator<=>(const AutomatonState&, const AutomatonState&) = default;
  std::string id() const;     // q_i_j_k
  std::string label() const;  // q_{i,j,k}
};

/*
 * Automaton over digits with a deterministic partial transition function,
 * a set of initial states and every state final. States are stored in
 * lexicographic (i, j, k) order.
 */
class ShiftAutomaton {
 public:
  ShiftAutomaton() = default;
  ShiftAutomaton(std::size_t p, Digit alphabet_max, std::vector<AutomatonState> states,
                 std::vector<std::map<Digit, std::size_t>> delta, std::vector<std::size_t> initial);

  std::size_t p() const { return p_; }
  Digit alphabet_max() const { return alphabet_max_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<AutomatonState>& states() const { return states_; }
  const std::vector<std::size_t>& initial() const { return initial_; }
  const std::map<Digit, std::size_t>& transitions(std::size_t s) const { return delta_[s]; }
  std::optional<std::size_t> step(std::size_t s, Digit d) const;
  std::optional<std::size_t> find(const AutomatonState& q) const;

  friend bool operator==(const ShiftAutomaton&, const ShiftAutomaton&) = default;

 private:
  std::size_t p_ = 0;
  Digit alphabet_max_ = 0;
  std::vector<AutomatonState> states_;
  std::vector<std::map<Digit, std::size_t>> delta_;
  std::vector<std::size_t> initial_;
};

/// Full automaton with sum_i p (m_i + n_i) states. Throws NotAlternate, UnknownQuasiGreedy.
ShiftAutomaton build_automaton(const QuasiGreedyTable& table);
ShiftAutomaton trim_accessible(const ShiftAutomaton& a);
/// Some run from some initial state reads w.
bool accepts_factor(const ShiftAutomaton& a, const FiniteWord& w);

struct SoficVerdict {
  enum class Kind { Sofic, Undetermined };

  Kind kind = Kind::Undetermined;
  std::optional<ShiftAutomaton> automaton;  // trimmed, when Sofic
  std::size_t budget = 0;
  std::vector<bool> class_known;

  bool sofic() const { return kind == Kind::Sofic; }
};

/// Sofic when every d*_i was found ultimately periodic within budget.
SoficVerdict sofic_verdict(const UPBase& base, std::size_t budget = kDefaultMaxSteps);

/// Minimal forbidden words of length <= max_len over [0, alphabet_max].
std::vector<FiniteWord> forbidden_factors(const ShiftAutomaton& a, std::size_t max_len);

enum class ExportFormat { Dot, Json };
ExportFormat parse_export_format(std::string_view name);  // throws UnsupportedFormat
std::string export_automaton(const ShiftAutomaton& a, ExportFormat format);
/// Inverse of the JSON export. Throws Syntax.
ShiftAutomaton automaton_from_json(std::string_view text);

/// Complete deterministic automaton; state 0 is the start, `accepting` marks finals.
struct Dfa {
  Digit alphabet_max = 0;
  std::vector<std::vector<std::size_t>> next;  // next[state][digit]
  std::vector<bool> accepting;

  std::size_t size() const { return next.size(); }
};

/// Subset construction over the initial-state choice (with an explicit sink).
Dfa determinize(const ShiftAutomaton& a);
/// Hopcroft partition refinement; states renumbered in BFS order from the start.
Dfa minimize(const Dfa& d);
/// Language equality via the minimal automata.
bool same_language(const ShiftAutomaton& a, const ShiftAutomaton& b);

}  // namespace cantor
