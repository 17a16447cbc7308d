#include "cantor/automaton.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#include "cantor/error.hpp"
#include "cantor/kernels.hpp"

namespace cantor {

std::string AutomatonState::id() const {
  return "q_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
}

std::string AutomatonState::label() const {
  return "q_{" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "}";
}

ShiftAutomaton::ShiftAutomaton(std::size_t p, Digit alphabet_max, std::vector<AutomatonState> states,
                               std::vector<std::map<Digit, std::size_t>> delta,
                               std::vector<std::size_t> initial)
    : p_(p),
      alphabet_max_(alphabet_max),
      states_(std::move(states)),
      delta_(std::move(delta)),
      initial_(std::move(initial)) {
  delta_.resize(states_.size());
  std::sort(initial_.begin(), initial_.end());
  initial_.erase(std::unique(initial_.begin(), initial_.end()), initial_.end());
}

std::optional<std::size_t> ShiftAutomaton::step(std::size_t s, Digit d) const {
  auto it = delta_[s].find(d);
  if (it == delta_[s].end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ShiftAutomaton::find(const AutomatonState& q) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), q);
  if (it == states_.end() || *it != q) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

ShiftAutomaton build_automaton(const QuasiGreedyTable& table) {
  const UPBase& base = table.base();
  if (!base.is_alternate()) throw Error(ErrorKind::NotAlternate, "the shift automaton needs an alternate base");
  const std::size_t p = base.length();

  std::vector<AutomatonState> states;
  for (std::size_t i = 0; i < p; ++i) {
    const UPWord& t = table.dstar(i);
    std::size_t len = t.preperiod().size() + t.period().size();
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t k = 0; k < len; ++k) states.push_back({i, j, k});
    }
  }
  auto index = [&](const AutomatonState& q) {
    return static_cast<std::size_t>(std::lower_bound(states.begin(), states.end(), q) - states.begin());
  };

  std::vector<std::map<Digit, std::size_t>> delta(states.size());
  for (std::size_t s = 0; s < states.size(); ++s) {
    const auto [i, j, k] = states[s];
    const UPWord& t = table.dstar(i);
    const std::size_t m = t.preperiod().size();
    const std::size_t last = m + t.period().size() - 1;
    const std::size_t jn = (j + 1) % p;
    const Digit tk = t.at(k);
    delta[s][tk] = index({i, jn, k == last ? m : k + 1});
    for (Digit d = 0; d < tk; ++d) delta[s][d] = index({jn, jn, 0});
  }

  std::vector<std::size_t> initial;
  for (std::size_t i = 0; i < p; ++i) initial.push_back(index({i, i, 0}));
  return ShiftAutomaton(p, to_digit(alphabet_bound(base)), std::move(states), std::move(delta),
                        std::move(initial));
}

ShiftAutomaton trim_accessible(const ShiftAutomaton& a) {
  std::vector<bool> seen(a.size(), false);
  std::deque<std::size_t> queue;
  for (std::size_t s : a.initial()) {
    seen[s] = true;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    for (const auto& [d, t] : a.transitions(s)) {
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  std::vector<std::size_t> remap(a.size(), 0);
  std::vector<AutomatonState> states;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (seen[s]) {
      remap[s] = states.size();
      states.push_back(a.states()[s]);
    }
  }
  std::vector<std::map<Digit, std::size_t>> delta(states.size());
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (!seen[s]) continue;
    for (const auto& [d, t] : a.transitions(s)) delta[remap[s]][d] = remap[t];
  }
  std::vector<std::size_t> initial;
  for (std::size_t s : a.initial()) initial.push_back(remap[s]);
  return ShiftAutomaton(a.p(), a.alphabet_max(), std::move(states), std::move(delta), std::move(initial));
}

bool accepts_factor(const ShiftAutomaton& a, const FiniteWord& w) {
  std::vector<std::size_t> cur = a.initial();
  std::vector<std::size_t> next;
  for (Digit d : w) {
    next.clear();
    for (std::size_t s : cur) {
      if (auto t = a.step(s, d)) next.push_back(*t);
    }
    if (next.empty()) return false;
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur.swap(next);
  }
  return !cur.empty();
}

SoficVerdict sofic_verdict(const UPBase& base, std::size_t budget) {
  QuasiGreedyTable table = quasi_greedy_table(base, budget);
  SoficVerdict v;
  v.budget = budget;
  for (std::size_t c = 0; c < table.size(); ++c) v.class_known.push_back(table[c].dstar.known());
  if (!table.complete()) return v;
  v.kind = SoficVerdict::Kind::Sofic;
  v.automaton = trim_accessible(build_automaton(table));
  return v;
}

std::vector<FiniteWord> forbidden_factors(const ShiftAutomaton& a, std::size_t max_len) {
  return kernels::forbidden_factors(a, max_len);
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::Dot;
  if (name == "json") return ExportFormat::Json;
  throw Error(ErrorKind::UnsupportedFormat, "unknown export format '" + std::string(name) + "'");
}

namespace {

// Labels grouped per (from, to) pair, in state order.
std::vector<std::tuple<std::size_t, std::vector<Digit>, std::size_t>> edge_groups(const ShiftAutomaton& a) {
  std::vector<std::tuple<std::size_t, std::vector<Digit>, std::size_t>> out;
  for (std::size_t s = 0; s < a.size(); ++s) {
    std::map<std::size_t, std::vector<Digit>> by_target;
    for (const auto& [d, t] : a.transitions(s)) by_target[t].push_back(d);
    for (auto& [t, labels] : by_target) out.emplace_back(s, std::move(labels), t);
  }
  return out;
}

std::string to_dot(const ShiftAutomaton& a) {
  std::ostringstream os;
  os << "digraph shift_automaton {\n";
  os << "  rankdir=LR;\n";
  for (std::size_t s = 0; s < a.size(); ++s) {
    const auto& q = a.states()[s];
    bool init = std::binary_search(a.initial().begin(), a.initial().end(), s);
    os << "  " << q.id() << " [label=\"" << q.label() << "\"" << (init ? ", initial=true" : "") << "];\n";
  }
  for (const auto& [from, labels, to] : edge_groups(a)) {
    os << "  " << a.states()[from].id() << " -> " << a.states()[to].id() << " [label=\"";
    for (std::size_t n = 0; n < labels.size(); ++n) os << (n ? "," : "") << labels[n];
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const ShiftAutomaton& a) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["p"] = a.p();
  j["alphabet_max"] = a.alphabet_max();
  j["states"] = nlohmann::ordered_json::array();
  for (std::size_t s = 0; s < a.size(); ++s) {
    const auto& q = a.states()[s];
    nlohmann::ordered_json st;
    st["id"] = q.id();
    st["i"] = q.i;
    st["j"] = q.j;
    st["k"] = q.k;
    st["initial"] = std::binary_search(a.initial().begin(), a.initial().end(), s);
    j["states"].push_back(std::move(st));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [from, labels, to] : edge_groups(a)) {
    nlohmann::ordered_json e;
    e["from"] = a.states()[from].id();
    e["labels"] = labels;
    e["to"] = a.states()[to].id();
    j["edges"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

}  // namespace

std::string export_automaton(const ShiftAutomaton& a, ExportFormat format) {
  switch (format) {
    case ExportFormat::Dot: return to_dot(a);
    case ExportFormat::Json: return to_json(a);
  }
  throw Error(ErrorKind::UnsupportedFormat, "unknown export format");
}

ShiftAutomaton automaton_from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    if (j.at("version").get<int>() != 1) throw Error(ErrorKind::Syntax, "unsupported automaton version");
    std::vector<AutomatonState> states;
    std::vector<std::size_t> initial;
    std::map<std::string, std::size_t> ids;
    for (const auto& st : j.at("states")) {
      AutomatonState q{st.at("i").get<std::size_t>(), st.at("j").get<std::size_t>(), st.at("k").get<std::size_t>()};
      if (st.at("id").get<std::string>() != q.id()) throw Error(ErrorKind::Syntax, "state id mismatch");
      ids[q.id()] = states.size();
      if (st.value("initial", false)) initial.push_back(states.size());
      states.push_back(q);
    }
    if (!std::is_sorted(states.begin(), states.end())) throw Error(ErrorKind::Syntax, "states out of order");
    std::vector<std::map<Digit, std::size_t>> delta(states.size());
    for (const auto& e : j.at("edges")) {
      std::size_t from = ids.at(e.at("from").get<std::string>());
      std::size_t to = ids.at(e.at("to").get<std::string>());
      for (const auto& d : e.at("labels")) delta[from][d.get<Digit>()] = to;
    }
    return ShiftAutomaton(j.at("p").get<std::size_t>(), j.at("alphabet_max").get<Digit>(), std::move(states),
                          std::move(delta), std::move(initial));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Syntax, std::string("bad automaton JSON: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw Error(ErrorKind::Syntax, std::string("bad automaton JSON: ") + e.what());
  }
}

namespace {

Dfa determinize_over(const ShiftAutomaton& a, Digit alphabet_max) {
  Dfa out;
  out.alphabet_max = alphabet_max;
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::deque<std::vector<std::size_t>> queue;
  auto intern = [&](std::vector<std::size_t> set) {
    auto [it, inserted] = index.emplace(set, out.next.size());
    if (inserted) {
      out.next.emplace_back(alphabet_max + 1, 0);
      out.accepting.push_back(!set.empty());
      queue.push_back(std::move(set));
    }
    return it->second;
  };
  intern(a.initial());
  while (!queue.empty()) {
    std::vector<std::size_t> set = std::move(queue.front());
    queue.pop_front();
    std::size_t from = index.at(set);
    for (Digit d = 0; d <= alphabet_max; ++d) {
      std::vector<std::size_t> next;
      for (std::size_t s : set) {
        if (auto t = a.step(s, d)) next.push_back(*t);
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      std::size_t to = intern(std::move(next));
      out.next[from][d] = to;
    }
  }
  return out;
}

}  // namespace

Dfa determinize(const ShiftAutomaton& a) {
  return determinize_over(a, a.alphabet_max());
}

Dfa minimize(const Dfa& d) {
  const std::size_t n = d.size();
  const std::size_t sigma = d.alphabet_max + 1;
  if (n == 0) return d;

  // inverse[c][t] = states s with next[s][c] == t
  std::vector<std::vector<std::vector<std::size_t>>> inverse(sigma, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t c = 0; c < sigma; ++c) inverse[c][d.next[s][c]].push_back(s);
  }

  std::vector<std::size_t> block(n);
  std::vector<std::vector<std::size_t>> blocks;
  {
    std::vector<std::size_t> acc;
    std::vector<std::size_t> rej;
    for (std::size_t s = 0; s < n; ++s) (d.accepting[s] ? acc : rej).push_back(s);
    for (auto* part : {&acc, &rej}) {
      if (part->empty()) continue;
      for (std::size_t s : *part) block[s] = blocks.size();
      blocks.push_back(*part);
    }
  }

  std::deque<std::pair<std::size_t, std::size_t>> work;  // (block, letter)
  {
    std::size_t smallest = 0;
    for (std::size_t b = 1; b < blocks.size(); ++b) {
      if (blocks[b].size() < blocks[smallest].size()) smallest = b;
    }
    for (std::size_t c = 0; c < sigma; ++c) work.emplace_back(smallest, c);
  }

  while (!work.empty()) {
    auto [splitter, c] = work.front();
    work.pop_front();
    std::map<std::size_t, std::vector<std::size_t>> hit;
    for (std::size_t t : blocks[splitter]) {
      for (std::size_t s : inverse[c][t]) hit[block[s]].push_back(s);
    }
    for (auto& [b, members] : hit) {
      if (members.size() == blocks[b].size()) continue;
      std::set<std::size_t> moved(members.begin(), members.end());
      std::vector<std::size_t> stay;
      for (std::size_t s : blocks[b]) {
        if (!moved.count(s)) stay.push_back(s);
      }
      std::size_t fresh = blocks.size();
      blocks[b] = std::move(stay);
      blocks.emplace_back(moved.begin(), moved.end());
      for (std::size_t s : blocks[fresh]) block[s] = fresh;
      for (std::size_t l = 0; l < sigma; ++l) {
        auto pending = std::find(work.begin(), work.end(), std::make_pair(b, l));
        if (pending != work.end()) {
          work.emplace_back(fresh, l);
        } else {
          work.emplace_back(blocks[b].size() <= blocks[fresh].size() ? b : fresh, l);
        }
      }
    }
  }

  // Renumber blocks in BFS order from the start state.
  Dfa out;
  out.alphabet_max = d.alphabet_max;
  std::vector<std::optional<std::size_t>> order(blocks.size());
  std::deque<std::size_t> queue{block[0]};
  order[block[0]] = 0;
  std::vector<std::size_t> by_order{block[0]};
  while (!queue.empty()) {
    std::size_t b = queue.front();
    queue.pop_front();
    std::size_t rep = blocks[b].front();
    for (std::size_t c = 0; c < sigma; ++c) {
      std::size_t tb = block[d.next[rep][c]];
      if (!order[tb]) {
        order[tb] = by_order.size();
        by_order.push_back(tb);
        queue.push_back(tb);
      }
    }
  }
  out.next.assign(by_order.size(), std::vector<std::size_t>(sigma));
  out.accepting.assign(by_order.size(), false);
  for (std::size_t o = 0; o < by_order.size(); ++o) {
    std::size_t rep = blocks[by_order[o]].front();
    out.accepting[o] = d.accepting[rep];
    for (std::size_t c = 0; c < sigma; ++c) out.next[o][c] = *order[block[d.next[rep][c]]];
  }
  return out;
}

bool same_language(const ShiftAutomaton& a, const ShiftAutomaton& b) {
  Digit top = std::max(a.alphabet_max(), b.alphabet_max());
  Dfa x = minimize(determinize_over(a, top));
  Dfa y = minimize(determinize_over(b, top));
  return x.next == y.next && x.accepting == y.accepting;
}

}  // namespace cantor
