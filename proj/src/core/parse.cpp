#include "waring/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "waring/errors.hpp"

namespace waring {

namespace {

struct RawTerm {
  Scalar coef;
  std::map<std::string, int> powers;
};

class PolyReader {
 public:
  explicit PolyReader(std::string_view s) : s_(s) {}

  std::vector<RawTerm> read() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      RawTerm t = read_term();
      if (sign < 0) t.coef = -t.coef;
      terms.push_back(std::move(t));
      first = false;
      skip_ws();
    }
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + what);
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  RawTerm read_term() {
    RawTerm t{Scalar(1), {}};
    bool any = false;
    while (true) {
      skip_ws();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        t.coef = mul(t.coef, read_number());
      } else if (c == '(') {
        std::size_t close = s_.find(')', pos_);
        if (close == std::string_view::npos) fail("missing ')'");
        t.coef = mul(t.coef, Scalar::parse(s_.substr(pos_, close - pos_ + 1)));
        pos_ = close + 1;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        int e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          std::size_t ds = pos_;
          while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
          if (ds == pos_) fail("expected exponent");
          e = std::stoi(std::string(s_.substr(ds, pos_ - ds)));
        }
        if (name == "i") {
          t.coef = mul(t.coef, Scalar::imag_unit(Scalar::Mode::exact).pow(e));
        } else {
          t.powers[name] += e;
        }
      } else {
        fail(any ? "expected a factor after '*'" : "expected a term");
      }
      any = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      // Implicit multiplication ("3x", "2 x y") is accepted.
      char n = peek();
      if (std::isalpha(static_cast<unsigned char>(n)) || n == '(') continue;
      break;
    }
    return t;
  }

  Scalar read_number() {
    std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
    if (peek() == 'e' || peek() == 'E') {
      std::size_t save = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      } else {
        pos_ = save;
      }
    }
    if (peek() == '/') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return Scalar::parse(s_.substr(start, pos_ - start));
  }

  static Scalar mul(const Scalar& a, const Scalar& b) {
    if (a.mode() == b.mode()) return a * b;
    return a.promoted() * b.promoted();
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

bool all_indexed(const std::set<std::string>& names, char prefix, int& max_index) {
  max_index = -1;
  for (const auto& n : names) {
    if (n.size() < 2 || n[0] != prefix) return false;
    if (!std::all_of(n.begin() + 1, n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return false;
    max_index = std::max(max_index, std::stoi(n.substr(1)));
  }
  return true;
}

MultiForm assemble(const std::vector<RawTerm>& raw, const std::vector<std::string>& vars) {
  bool floating = std::any_of(raw.begin(), raw.end(), [](const RawTerm& t) { return !t.coef.is_exact(); });
  Scalar::Mode mode = floating ? Scalar::Mode::floating : Scalar::Mode::exact;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vars.size(); ++i) index[vars[i]] = i;
  int degree = -1;
  std::vector<std::pair<Exponent, Scalar>> terms;
  for (const auto& t : raw) {
    Exponent e(vars.size(), 0);
    int deg = 0;
    for (const auto& [name, p] : t.powers) {
      auto it = index.find(name);
      if (it == index.end()) throw ParseError("unknown variable '" + name + "'");
      e[it->second] += p;
      deg += p;
    }
    if (t.coef.is_zero()) continue;
    if (degree >= 0 && deg != degree) throw ParseError("polynomial is not homogeneous");
    degree = deg;
    terms.emplace_back(std::move(e), floating ? t.coef.promoted() : t.coef);
  }
  if (degree < 0) degree = 0;
  MultiForm f(static_cast<int>(vars.size()), degree, mode);
  for (const auto& [e, c] : terms) f.add_term(e, c);
  return f;
}

}  // namespace

MultiForm parse_form(std::string_view text, const std::vector<std::string>& vars) {
  if (vars.empty()) throw ParseError("no variables given");
  return assemble(PolyReader(text).read(), vars);
}

MultiForm parse_form_auto(std::string_view text) {
  auto raw = PolyReader(text).read();
  std::set<std::string> names;
  for (const auto& t : raw)
    for (const auto& [n, p] : t.powers) names.insert(n);
  std::vector<std::string> vars;
  int max_index = -1;
  if (std::all_of(names.begin(), names.end(), [](const std::string& n) { return n == "x" || n == "y"; })) {
    vars = {"x", "y"};
  } else if (all_indexed(names, 'x', max_index)) {
    for (int i = 1; i <= std::max(max_index, 2); ++i) vars.push_back("x" + std::to_string(i));
  } else if (all_indexed(names, 'Y', max_index)) {
    for (int i = 0; i <= std::max(max_index, 1); ++i) vars.push_back("Y" + std::to_string(i));
  } else {
    throw ParseError("cannot infer variables; use x,y or x1..xn or Y0..YN consistently");
  }
  return assemble(raw, vars);
}

BinaryForm parse_binary(std::string_view text) {
  return BinaryForm::from_multi(parse_form(text, {"x", "y"}));
}

std::vector<Scalar> parse_univariate(std::string_view text) {
  auto raw = PolyReader(text).read();
  bool floating = std::any_of(raw.begin(), raw.end(), [](const RawTerm& t) { return !t.coef.is_exact(); });
  Scalar::Mode mode = floating ? Scalar::Mode::floating : Scalar::Mode::exact;
  std::vector<Scalar> c{Scalar::zero(mode)};
  for (const auto& t : raw) {
    int p = 0;
    for (const auto& [n, e] : t.powers) {
      if (n != "x") throw ParseError("univariate polynomial must use x only");
      p += e;
    }
    while (static_cast<int>(c.size()) <= p) c.push_back(Scalar::zero(mode));
    c[static_cast<std::size_t>(p)] += floating ? t.coef.promoted() : t.coef;
  }
  return c;
}

}  // namespace waring
