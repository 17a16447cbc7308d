#include "cantor/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "cantor/admissibility.hpp"
#include "cantor/automaton.hpp"
#include "cantor/error.hpp"
#include "cantor/kernels.hpp"
#include "cantor/solver.hpp"

namespace cantor::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::size_t max_steps = kDefaultMaxSteps;
  std::string base;
  std::string word;
  std::string x;
  std::size_t shift = 0;
  bool closure = false;
  bool dot = false;
  bool trim = false;
  std::size_t max_len = 0;
  std::size_t p = 1;
  std::string tol = "1e-12";
  std::vector<std::string> tail;
  std::size_t blocks = 20;
};

class Session {
 public:
  Session(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  ExactReal real(const std::string& text) {
    ParsedReal r = parse_real(text);
    for (const std::string& d : r.diagnostics) err_ << "note: " << d << '\n';
    return r.value;
  }

  // Accepts everything parse_real does, plus "1e-12".
  Rational rational(const std::string& text) {
    auto e = text.find_first_of("eE");
    ExactReal v = e == std::string::npos ? real(text) : real(text.substr(0, e));
    if (!v.is_rational()) throw Error(ErrorKind::Syntax, "expected a rational number: " + text);
    Rational q = v.rational_part();
    if (e != std::string::npos) {
      long exp = 0;
      try {
        exp = std::stol(text.substr(e + 1));
      } catch (const std::exception&) {
        throw Error(ErrorKind::Syntax, "bad exponent in " + text);
      }
      Rational scale(1);
      for (long i = 0; i < std::labs(exp); ++i) scale *= 10;
      q = exp < 0 ? Rational(q / scale) : Rational(q * scale);
    }
    return q;
  }

  UPBase up_base() {
    AnyBase b = parse_base(o_.base);
    if (!std::holds_alternative<UPBase>(b)) {
      throw Error(ErrorKind::Syntax, "this command needs an ultimately periodic base");
    }
    return std::get<UPBase>(b);
  }

  UPWord word() { return parse_word(o_.word); }

  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }
  std::ostream& out() { return out_; }
  const Options& opt() const { return o_; }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

const char* status_name(GreedyTrace::Status s) {
  switch (s) {
    case GreedyTrace::Status::Finite: return "finite";
    case GreedyTrace::Status::Periodic: return "periodic";
    case GreedyTrace::Status::Truncated: return "truncated";
  }
  return "truncated";
}

Json digits_json(const FiniteWord& w) {
  Json j = Json::array();
  for (Digit d : w) j.push_back(d);
  return j;
}

Json expansion_json(const Expansion& e) {
  Json j;
  j["known"] = e.known();
  if (e.known()) {
    j["word"] = to_notation(*e.word);
    j["display"] = to_display(*e.word);
  } else {
    j["prefix"] = digits_json(e.prefix);
  }
  return j;
}

std::string prefix_text(const FiniteWord& w) {
  constexpr std::size_t kShown = 40;
  if (w.size() <= kShown) return to_string(w) + "...";
  return to_string(FiniteWord(w.begin(), w.begin() + kShown)) + "... (" + std::to_string(w.size()) + " digits)";
}

std::string expansion_text(const Expansion& e) {
  if (e.known()) return to_display(*e.word);
  return "unknown; prefix " + prefix_text(e.prefix);
}

Json enclosure_json(const Enclosure& e) {
  Json j;
  j["enclosure"] = {{"lo", format(e.lo)}, {"hi", format(e.hi)}};
  j["certificate"] = {{"g_lo_sign", e.g_lo_sign}, {"g_hi_sign", e.g_hi_sign}};
  j["steps"] = e.steps;
  if (e.polynomial) {
    Json coeffs = Json::array();
    for (const Integer& c : *e.polynomial) coeffs.push_back(c.get_str());
    j["polynomial"] = coeffs;
  }
  return j;
}

void print_enclosure(std::ostream& os, const Enclosure& e) {
  os << "lo = " << format(e.lo) << "  (" << e.lo.get_d() << ")\n";
  os << "hi = " << format(e.hi) << "  (" << e.hi.get_d() << ")\n";
  os << "g(lo) sign " << e.g_lo_sign << ", g(hi) sign " << e.g_hi_sign << ", " << e.steps << " steps\n";
  if (e.polynomial) {
    os << "polynomial:";
    for (const Integer& c : *e.polynomial) os << ' ' << c.get_str();
    os << '\n';
  }
}

int verdict(Session& s, const char* key, bool value, const char* yes, const char* no) {
  if (s.opt().json) {
    s.emit(Json{{key, value}});
  } else {
    s.out() << (value ? yes : no) << '\n';
  }
  return value ? kOk : kNegative;
}

int cmd_expand(Session& s) {
  AnyBase base = parse_base(s.opt().base);
  ExactReal x = s.real(s.opt().x);
  GreedyTrace t = greedy_digits(base, x, s.opt().max_steps);
  std::optional<UPWord> w;
  if (t.status == GreedyTrace::Status::Finite) w = UPWord::finite(t.digits);
  if (t.status == GreedyTrace::Status::Periodic) {
    FiniteWord pre(t.digits.begin(), t.digits.begin() + t.period_start);
    FiniteWord per(t.digits.begin() + t.period_start, t.digits.end());
    w = UPWord(std::move(pre), std::move(per));
  }
  if (s.opt().json) {
    Json j;
    j["x"] = format(x);
    j["status"] = status_name(t.status);
    if (w) {
      j["word"] = to_notation(*w);
      j["display"] = to_display(*w);
    } else {
      j["prefix"] = digits_json(t.digits);
    }
    s.emit(j);
  } else if (w) {
    s.out() << to_display(*w) << '\n';
  } else {
    s.out() << "unknown; prefix " << prefix_text(t.digits) << '\n';
  }
  return w ? kOk : kUndetermined;
}

int cmd_expand1(Session& s) {
  AnyBase any = parse_base(s.opt().base);
  const std::size_t i = s.opt().shift;
  if (std::holds_alternative<StreamBase>(any)) {
    StreamBase shifted([any, i](std::size_t n) { return beta_at(any, n + i); }, true);
    GreedyTrace t = greedy_digits(shifted, ExactReal(1L), s.opt().max_steps);
    const bool finite = t.status == GreedyTrace::Status::Finite;
    Expansion e;
    e.prefix = t.digits;
    if (finite) e.word = UPWord::finite(t.digits);
    if (s.opt().json) {
      s.emit(Json{{"shift", i}, {"greedy", expansion_json(e)}});
    } else {
      s.out() << "d = " << expansion_text(e) << '\n';
    }
    return finite ? kOk : kUndetermined;
  }
  const UPBase& base = std::get<UPBase>(any);
  QuasiGreedyTable table = quasi_greedy_table(base, s.opt().max_steps);
  const QuasiGreedyEntry& e = table[base.class_of(i)];
  if (s.opt().json) {
    s.emit(Json{{"shift", i},
                {"class", base.class_of(i)},
                {"greedy", expansion_json(e.greedy)},
                {"quasi_greedy", expansion_json(e.dstar)}});
  } else {
    s.out() << "d  = " << expansion_text(e.greedy) << '\n';
    s.out() << "d* = " << expansion_text(e.dstar) << '\n';
  }
  return e.greedy.known() && e.dstar.known() ? kOk : kUndetermined;
}

int cmd_quasigreedy(Session& s) {
  UPBase base = s.up_base();
  QuasiGreedyTable table = quasi_greedy_table(base, s.opt().max_steps);
  if (s.opt().json) {
    Json rows = Json::array();
    for (std::size_t c = 0; c < table.size(); ++c) {
      rows.push_back(Json{{"class", c}, {"greedy", expansion_json(table[c].greedy)},
                          {"quasi_greedy", expansion_json(table[c].dstar)}});
    }
    s.emit(Json{{"base", to_notation(base)}, {"complete", table.complete()}, {"classes", rows}});
  } else {
    for (std::size_t c = 0; c < table.size(); ++c) s.out() << expansion_text(table[c].dstar) << '\n';
  }
  return table.complete() ? kOk : kUndetermined;
}

int cmd_val(Session& s) {
  ExactReal v = val(s.up_base(), s.word());
  if (s.opt().json) {
    s.emit(Json{{"value", format(v)}, {"approx", v.approx()}});
  } else {
    s.out() << format(v) << '\n';
  }
  return kOk;
}

int cmd_admissible(Session& s) {
  LanguageHandle lang(s.up_base(), s.opt().max_steps);
  UPWord w = s.word();
  if (s.opt().closure) return verdict(s, "in_closure", lang.in_S(w), "in closure", "not in closure");
  return verdict(s, "admissible", lang.in_D(w), "admissible", "not admissible");
}

int cmd_greedy_check(Session& s) {
  bool ok = is_greedy_expansion(s.up_base(), s.word(), s.real(s.opt().x), s.opt().max_steps);
  return verdict(s, "greedy", ok, "greedy expansion", "not the greedy expansion");
}

int cmd_parry2(Session& s) {
  bool ok = parry2_check(s.up_base(), s.word(), s.opt().max_steps);
  return verdict(s, "expansion_of_one", ok, "greedy expansion of 1", "not the greedy expansion of 1");
}

std::optional<ShiftAutomaton> sofic_automaton(Session& s, const UPBase& base) {
  SoficVerdict v = sofic_verdict(base, s.opt().max_steps);
  if (v.sofic()) return v.automaton;
  return std::nullopt;
}

int report_undetermined(Session& s) {
  if (s.opt().json) {
    s.emit(Json{{"verdict", "undetermined"}, {"budget", s.opt().max_steps}});
  } else {
    s.out() << "undetermined within " << s.opt().max_steps << " steps\n";
  }
  return kUndetermined;
}

int cmd_automaton(Session& s) {
  UPBase base = s.up_base();
  QuasiGreedyTable table = quasi_greedy_table(base, s.opt().max_steps);
  if (!table.complete()) return report_undetermined(s);
  ShiftAutomaton a = build_automaton(table);
  if (s.opt().trim) a = trim_accessible(a);
  if (s.opt().dot) {
    s.out() << export_automaton(a, ExportFormat::Dot);
  } else if (s.opt().json) {
    s.out() << export_automaton(a, ExportFormat::Json);
  } else {
    s.out() << a.size() << " states, " << a.initial().size() << " initial\n";
    for (std::size_t q = 0; q < a.size(); ++q) {
      for (const auto& [d, t] : a.transitions(q)) {
        s.out() << a.states()[q].label() << " --" << d << "--> " << a.states()[t].label() << '\n';
      }
    }
  }
  return kOk;
}

int cmd_forbidden(Session& s) {
  UPBase base = s.up_base();
  std::optional<ShiftAutomaton> a = sofic_automaton(s, base);
  if (!a) return report_undetermined(s);
  std::vector<FiniteWord> words = kernels::forbidden_factors(*a, s.opt().max_len);
  if (s.opt().json) {
    Json list = Json::array();
    for (const FiniteWord& w : words) list.push_back(to_string(w));
    s.emit(Json{{"max_len", s.opt().max_len}, {"forbidden", list}});
  } else {
    for (const FiniteWord& w : words) s.out() << to_string(w) << '\n';
  }
  return kOk;
}

int cmd_solve(Session& s) {
  UPWord a = s.word();
  Rational tol = s.rational(s.opt().tol);
  if (s.opt().p <= 1 && s.opt().tail.empty()) {
    Enclosure e = solve_single_base(a, tol, s.opt().max_steps);
    if (s.opt().json) {
      s.emit(enclosure_json(e));
    } else {
      print_enclosure(s.out(), e);
    }
    return kOk;
  }
  std::optional<std::vector<Rational>> tail;
  if (!s.opt().tail.empty()) {
    tail.emplace();
    for (const std::string& t : s.opt().tail) tail->push_back(s.rational(t));
  }
  AlternateSolution sol = construct_alternate_base(a, s.opt().p, tail, tol, s.opt().max_steps);
  if (s.opt().json) {
    Json j = enclosure_json(sol.beta0);
    Json t = Json::array();
    for (const Rational& q : sol.tail) t.push_back(format(q));
    Json c = Json::array();
    for (const Rational& q : sol.c) c.push_back(format(q));
    j["p"] = sol.p;
    j["tail"] = t;
    j["N"] = sol.N;
    j["partial_sum"] = format(sol.partial_sum);
    j["c"] = c;
    s.emit(j);
  } else {
    s.out() << "beta_0 in [lo, hi], tail (";
    for (std::size_t i = 0; i < sol.tail.size(); ++i) s.out() << (i ? ", " : "") << format(sol.tail[i]);
    s.out() << "), N = " << sol.N << '\n';
    print_enclosure(s.out(), sol.beta0);
  }
  return kOk;
}

int cmd_construct(Session& s) {
  ConstructedBase cb = construct_cantor_base(s.word(), s.opt().blocks);
  if (s.opt().json) {
    Json log = Json::array();
    for (const BlockRecord& b : cb.log) log.push_back(Json{{"n", b.n}, {"ell", b.ell}, {"alpha", format(b.alpha)}});
    s.emit(Json{{"base", to_notation(cb.up_base)}, {"log", log}});
  } else {
    s.out() << to_notation(cb.up_base) << '\n';
    for (const BlockRecord& b : cb.log) {
      s.out() << "block n=" << b.n << " ell=" << b.ell << " alpha=" << format(b.alpha) << '\n';
    }
  }
  return kOk;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotARepresentationOf1:
    case ErrorKind::SumNotGreaterThanOne:
      return kNegative;
    case ErrorKind::UnknownQuasiGreedy:
      return kUndetermined;
    case ErrorKind::BudgetExceeded:
    case ErrorKind::DigitOverflow:
      return kLimit;
    default:
      return kUsage;
  }
}

std::size_t default_budget() {
  const char* env = std::getenv("CANTOR_MAX_STEPS");
  if (env == nullptr) return kDefaultMaxSteps;
  try {
    return std::stoul(env);
  } catch (const std::exception&) {
    return kDefaultMaxSteps;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.max_steps = default_budget();

  CLI::App app{"Expansions in Cantor real bases and alternate bases", "cantor"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--max-steps", o.max_steps, "Step budget (default: $CANTOR_MAX_STEPS or 10000)");

  std::map<CLI::App*, int (*)(Session&)> handlers;
  auto command = [&](const char* name, const char* help, int (*fn)(Session&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", o.json, "Machine-readable output");
    sub->add_option("--max-steps", o.max_steps, "Step budget");
    handlers[sub] = fn;
    return sub;
  };

  auto* expand = command("expand", "Greedy expansion of x", cmd_expand);
  expand->add_option("--base", o.base)->required();
  expand->add_option("--x", o.x)->required();

  auto* expand1 = command("expand1", "Greedy and quasi-greedy expansions of 1", cmd_expand1);
  expand1->add_option("--base", o.base)->required();
  expand1->add_option("--shift", o.shift);

  auto* qg = command("quasigreedy", "Quasi-greedy expansions of 1 for every shift class", cmd_quasigreedy);
  qg->add_option("--base", o.base)->required();

  auto* v = command("val", "Value of a word", cmd_val);
  v->add_option("--base", o.base)->required();
  v->add_option("--word", o.word)->required();

  auto* adm = command("admissible", "Membership in the greedy set (or its closure)", cmd_admissible);
  adm->add_option("--base", o.base)->required();
  adm->add_option("--word", o.word)->required();
  adm->add_flag("--closure", o.closure);

  auto* gc = command("greedy-check", "Is the word the greedy expansion of x", cmd_greedy_check);
  gc->add_option("--base", o.base)->required();
  gc->add_option("--word", o.word)->required();
  gc->add_option("--x", o.x)->required();

  auto* p2 = command("parry2", "Alternate-base test for the greedy expansion of 1", cmd_parry2);
  p2->add_option("--base", o.base)->required();
  p2->add_option("--word", o.word)->required();

  auto* au = command("automaton", "Shift automaton of a sofic alternate base", cmd_automaton);
  au->add_option("--base", o.base)->required();
  au->add_flag("--dot", o.dot);
  au->add_flag("--trim", o.trim);

  auto* fb = command("forbidden", "Minimal forbidden factors", cmd_forbidden);
  fb->add_option("--base", o.base)->required();
  fb->add_option("--max-len", o.max_len)->required();

  auto* sv = command("solve", "Base in which the word represents 1", cmd_solve);
  sv->add_option("--word", o.word)->required();
  sv->add_option("--p", o.p, "Alternate base length")->check(CLI::PositiveNumber);
  sv->add_option("--tol", o.tol, "Enclosure width, e.g. 1e-12 or 1/1000");
  sv->add_option("--tail", o.tail, "beta_1 .. beta_{p-1} (rational)")->delimiter(',');

  auto* cb = command("construct-base", "Cantor base from the zero-block construction", cmd_construct);
  cb->add_option("--word", o.word)->required();
  cb->add_option("--blocks", o.blocks, "Blocks to log");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Session session(o, out, err);
  try {
    for (const auto& [sub, fn] : handlers) {
      if (sub->parsed()) return fn(session);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return kUsage;
}

}  // namespace cantor::cli
