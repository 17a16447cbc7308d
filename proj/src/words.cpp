#include "cantor/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "cantor/error.hpp"

namespace cantor {

Digit to_digit(const Integer& v) {
  if (sgn(v) < 0) throw Error(ErrorKind::NegativeInput, "negative digit " + v.get_str());
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    throw Error(ErrorKind::DigitOverflow, "digit " + v.get_str() + " exceeds 64 bits");
  }
  Digit d = 0;
  mpz_export(&d, nullptr, -1, sizeof(d), 0, 0, v.get_mpz_t());
  return d;
}

std::size_t lcm_size(std::size_t a, std::size_t b) {
  return std::lcm(a, b);
}

namespace {

std::size_t primitive_root_length(const FiniteWord& v) {
  const std::size_t n = v.size();
  for (std::size_t q = 1; q < n; ++q) {
    if (n % q != 0) continue;
    bool ok = true;
    for (std::size_t i = q; i < n && ok; ++i) ok = v[i] == v[i - q];
    if (ok) return q;
  }
  return n;
}

}  // namespace

UPWord::UPWord(FiniteWord preperiod, FiniteWord period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) per_ = {0};
  per_.resize(primitive_root_length(per_));
  // u a (v' a)^omega = u (a v')^omega
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
  }
}

UPWord canonicalize(FiniteWord preperiod, FiniteWord period) {
  return UPWord(std::move(preperiod), std::move(period));
}

FiniteWord UPWord::prefix(std::size_t n) const {
  FiniteWord out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
  return out;
}

UPWord UPWord::shift(std::size_t n) const {
  if (n <= pre_.size()) return UPWord(FiniteWord(pre_.begin() + n, pre_.end()), per_);
  std::size_t k = (n - pre_.size()) % per_.size();
  FiniteWord v = per_;
  std::rotate(v.begin(), v.begin() + k, v.end());
  return UPWord(FiniteWord{}, std::move(v));
}

UPWord shift(const UPWord& w, std::size_t n) {
  return w.shift(n);
}

Digit UPWord::max_digit() const {
  Digit m = 0;
  for (Digit d : pre_) m = std::max(m, d);
  for (Digit d : per_) m = std::max(m, d);
  return m;
}

Integer UPWord::block_sum() const {
  Integer s = 0;
  for (Digit d : pre_) s += to_integer(d);
  for (Digit d : per_) s += to_integer(d);
  return s;
}

DigitStream UPWord::stream() const {
  return [w = *this](std::size_t n) { return w.at(n); };
}

Ordering lex_compare_shifted(const UPWord& x, std::size_t n, const UPWord& y) {
  // Past max(|u_x| - n, |u_y|) both words are periodic; one common period decides.
  std::size_t px = x.preperiod().size() > n ? x.preperiod().size() - n : 0;
  std::size_t bound = std::max(px, y.preperiod().size()) +
                      lcm_size(x.period().size(), y.period().size());
  for (std::size_t k = 0; k < bound; ++k) {
    Digit a = x.at(n + k);
    Digit b = y.at(k);
    if (a < b) return Ordering::LT;
    if (a > b) return Ordering::GT;
  }
  return Ordering::EQ;
}

Ordering lex_compare(const UPWord& x, const UPWord& y) {
  return lex_compare_shifted(x, 0, y);
}

Ordering lex_compare_padded(const FiniteWord& w, std::size_t n, const UPWord& y) {
  std::size_t len = w.size() > n ? w.size() - n : 0;
  std::size_t bound = std::max(len, y.preperiod().size()) + y.period().size();
  for (std::size_t k = 0; k < bound; ++k) {
    Digit a = k < len ? w[n + k] : 0;
    Digit b = y.at(k);
    if (a < b) return Ordering::LT;
    if (a > b) return Ordering::GT;
  }
  return Ordering::EQ;
}

bool ends_in_zeros(const UPWord& w) {
  return w.ends_in_zeros();
}

std::set<FiniteWord> factors_up_to(const UPWord& w, std::size_t max_len) {
  std::set<FiniteWord> out;
  out.insert(FiniteWord{});
  // Every factor starts within the first |u| + |v| positions up to a shift by |v|.
  std::size_t starts = w.preperiod().size() + w.period().size();
  FiniteWord text = w.prefix(starts + max_len);
  for (std::size_t s = 0; s < starts; ++s) {
    for (std::size_t len = 1; len <= max_len; ++len) {
      out.emplace(text.begin() + s, text.begin() + s + len);
    }
  }
  return out;
}

namespace {

bool compact_ok(const UPWord& w) {
  return w.max_digit() <= 9;
}

std::string join(const FiniteWord& w, bool compact) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i != 0) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace

std::string to_string(const FiniteWord& w) {
  bool compact = std::all_of(w.begin(), w.end(), [](Digit d) { return d <= 9; });
  return join(w, compact);
}

std::string to_notation(const UPWord& w) {
  bool compact = compact_ok(w);
  if (w.ends_in_zeros()) {
    return w.preperiod().empty() ? "0" : join(w.preperiod(), compact);
  }
  std::string s = join(w.preperiod(), compact);
  if (!compact && !s.empty()) s += ',';
  return s + "(" + join(w.period(), compact) + ")";
}

std::string to_display(const UPWord& w) {
  bool compact = compact_ok(w);
  std::string pre = join(w.preperiod(), compact);
  if (!compact && !pre.empty()) pre += ',';
  if (w.ends_in_zeros()) return pre + "0^ω";
  std::string per = join(w.period(), compact);
  if (w.period().size() == 1 && compact) return pre + per + "^ω";
  return pre + "(" + per + ")^ω";
}

namespace {

[[noreturn]] void word_error(std::string_view text, const std::string& msg) {
  throw Error(ErrorKind::Syntax, msg + " in word \"" + std::string(text) + "\"");
}

void parse_letters(std::string_view text, std::string_view part, bool general, FiniteWord& out) {
  if (general) {
    std::size_t start = 0;
    while (start <= part.size()) {
      std::size_t comma = part.find(',', start);
      std::string_view tok = part.substr(start, comma == std::string_view::npos ? part.npos : comma - start);
      while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
      while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
      if (tok.empty()) {
        if (comma == std::string_view::npos && start == part.size()) break;
        word_error(text, "empty letter");
      }
      for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) word_error(text, "bad letter");
      }
      out.push_back(to_digit(Integer(std::string(tok))));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return;
  }
  for (char c : part) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (!std::isdigit(static_cast<unsigned char>(c))) word_error(text, "bad letter");
    out.push_back(static_cast<Digit>(c - '0'));
  }
}

}  // namespace

UPWord parse_word(std::string_view text) {
  bool general = text.find(',') != std::string_view::npos;
  std::size_t open = text.find('(');
  FiniteWord pre;
  FiniteWord per;
  if (open == std::string_view::npos) {
    if (text.find(')') != std::string_view::npos) word_error(text, "unbalanced ')'");
    parse_letters(text, text, general, pre);
    if (pre.empty()) word_error(text, "empty word");
    return UPWord::finite(std::move(pre));
  }
  std::size_t close = text.find(')', open);
  if (close == std::string_view::npos) word_error(text, "missing ')'");
  std::string_view tail = text.substr(close + 1);
  for (char c : tail) {
    if (!std::isspace(static_cast<unsigned char>(c))) word_error(text, "text after period");
  }
  std::string_view head = text.substr(0, open);
  while (!head.empty() && (head.back() == ',' || std::isspace(static_cast<unsigned char>(head.back())))) {
    head.remove_suffix(1);
  }
  parse_letters(text, head, general, pre);
  parse_letters(text, text.substr(open + 1, close - open - 1), general, per);
  if (per.empty()) word_error(text, "empty period");
  return UPWord(std::move(pre), std::move(per));
}

FiniteWord parse_finite_word(std::string_view text) {
  if (text.empty() || text == "ε" || text == "eps") return {};
  if (text.find('(') != std::string_view::npos) word_error(text, "finite word expected");
  FiniteWord w;
  parse_letters(text, text, text.find(',') != std::string_view::npos, w);
  return w;
}

}  // namespace cantor
