#include "cantor/bases.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "cantor/error.hpp"

namespace cantor {

namespace {

void check_entry(const ExactReal& b, std::size_t n) {
  if (!(b > ExactReal(1L))) {
    throw Error(ErrorKind::EntryNotGreaterThanOne,
                "base entry " + std::to_string(n) + " = " + format(b) + " is not > 1");
  }
}

}  // namespace

UPBase::UPBase(std::vector<ExactReal> preperiod, std::vector<ExactReal> period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw Error(ErrorKind::Syntax, "base period must be nonempty");
  std::size_t n = 0;
  for (const auto& b : pre_) {
    check_entry(b, n++);
    field_ = join(field_, b.field());
  }
  for (const auto& b : per_) {
    check_entry(b, n++);
    field_ = join(field_, b.field());
  }
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
  }
}

UPBase UPBase::shift(std::size_t n) const {
  if (n <= pre_.size()) {
    return UPBase(std::vector<ExactReal>(pre_.begin() + n, pre_.end()), per_);
  }
  std::size_t k = (n - pre_.size()) % per_.size();
  std::vector<ExactReal> v = per_;
  std::rotate(v.begin(), v.begin() + k, v.end());
  return UPBase({}, std::move(v));
}

ExactReal UPBase::product_prefix(std::size_t n) const {
  ExactReal p(1L);
  std::size_t i = 0;
  for (; i < n && i < pre_.size(); ++i) p *= pre_[i];
  if (i == n) return p;
  std::size_t rest = n - i;
  ExactReal block(1L);
  for (const auto& b : per_) block *= b;
  p *= pow(block, static_cast<unsigned>(rest / per_.size()));
  for (std::size_t j = 0; j < rest % per_.size(); ++j) p *= per_[j];
  return p;
}

ExactReal StreamBase::beta_at(std::size_t n) const {
  ExactReal b = producer_(n);
  check_entry(b, n);
  return b;
}

ExactReal StreamBase::product_prefix(std::size_t n) const {
  ExactReal p(1L);
  for (std::size_t i = 0; i < n; ++i) p *= beta_at(i);
  return p;
}

UPBase shift_base(const UPBase& base, std::size_t n) {
  return base.shift(n);
}

ExactReal beta_at(const AnyBase& base, std::size_t n) {
  return std::visit([n](const auto& b) { return ExactReal(b.beta_at(n)); }, base);
}

ExactReal product_prefix(const AnyBase& base, std::size_t n) {
  return std::visit([n](const auto& b) { return b.product_prefix(n); }, base);
}

Integer alphabet_bound(const UPBase& base) {
  Integer m = 0;
  for (std::size_t c = 0; c < base.num_classes(); ++c) {
    Integer f = floor(base.entry(c));
    if (f > m) m = f;
  }
  return m;
}

StreamBase thue_morse_base() {
  ExactReal root13 = ExactReal::sqrt(13);
  ExactReal alpha = (ExactReal(1L) + root13) / ExactReal(2L);
  ExactReal beta = (ExactReal(5L) + root13) / ExactReal(6L);
  return StreamBase(
      [alpha, beta](std::size_t n) { return std::popcount(n) % 2 == 0 ? alpha : beta; }, true);
}

StreamBase convergent_product_fixture() {
  return StreamBase(
      [](std::size_t n) {
        Integer den = 1;
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), n + 1);
        return ExactReal(Rational(den + 1, den));
      },
      false);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<ExactReal> parse_entries(std::string_view list) {
  std::vector<ExactReal> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= list.size(); ++i) {
    if (i == list.size() || (list[i] == ',' && depth == 0)) {
      std::string_view item = trim(list.substr(start, i - start));
      if (item.empty()) throw Error(ErrorKind::Syntax, "empty base entry");
      out.push_back(parse_real(item).value);
      start = i + 1;
    } else if (list[i] == '(') {
      ++depth;
    } else if (list[i] == ')') {
      --depth;
    }
  }
  return out;
}

// Finds "key:[...]" and returns the bracket contents.
bool section(std::string_view text, std::string_view key, std::string_view& body) {
  std::size_t at = text.find(key);
  if (at == std::string_view::npos) return false;
  std::size_t open = text.find('[', at + key.size());
  if (open == std::string_view::npos || trim(text.substr(at + key.size(), open - at - key.size())) != ":") {
    throw Error(ErrorKind::Syntax, "expected '" + std::string(key) + ":[' in base \"" + std::string(text) + "\"");
  }
  std::size_t close = text.find(']', open);
  if (close == std::string_view::npos) {
    throw Error(ErrorKind::Syntax, "missing ']' in base \"" + std::string(text) + "\"");
  }
  body = text.substr(open + 1, close - open - 1);
  return true;
}

}  // namespace

UPBase parse_up_base(std::string_view text) {
  text = trim(text);
  std::string_view pre_body;
  std::string_view per_body;
  bool has_pre = section(text, "pre", pre_body);
  if (!section(text, "per", per_body)) {
    throw Error(ErrorKind::Syntax, "base needs a 'per:[...]' section: \"" + std::string(text) + "\"");
  }
  std::vector<ExactReal> pre;
  if (has_pre && !trim(pre_body).empty()) pre = parse_entries(pre_body);
  return UPBase(std::move(pre), parse_entries(per_body));
}

AnyBase parse_base(std::string_view text) {
  std::string_view t = trim(text);
  if (t == "thue-morse") return thue_morse_base();
  return parse_up_base(t);
}

std::string to_notation(const UPBase& base) {
  auto list = [](const std::vector<ExactReal>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != 0) s += ',';
      s += format(v[i]);
    }
    return s + "]";
  };
  std::string out;
  if (!base.preperiod().empty()) out = "pre:" + list(base.preperiod()) + " ";
  return out + "per:" + list(base.period());
}

}  // namespace cantor
