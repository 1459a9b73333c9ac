#include "monideal/ideal_io.hpp"

#include <cctype>
#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "monideal/error.hpp"

namespace monideal {

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// A tiny cursor over one line with 1-based column bookkeeping.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line, std::size_t column_offset)
      : text_(text), line_(line), offset_(column_offset) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }
  std::size_t pos() const { return pos_; }
  std::string_view slice(std::size_t from) const {
    return text_.substr(from, pos_ - from);
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    throw ParseError(line_, offset_ + at + 1, what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t offset_;
};

}  // namespace

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string format_monomial(const Monomial& m,
                            const std::vector<std::string>& names) {
  if (names.size() != m.size()) throw DimensionMismatch(m.size(), names.size());
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_monomial(const Monomial& m) {
  return format_monomial(m, default_variable_names(m.size()));
}

Monomial parse_monomial(std::string_view text,
                        const std::vector<std::string>& names,
                        std::size_t line, std::size_t column_offset) {
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);

  std::vector<Exponent> exps(names.size(), 0);
  Cursor cur(text, line, column_offset);
  cur.skip_space();
  if (cur.done()) cur.fail("expected a monomial");
  if (cur.peek() == '1') {
    cur.advance();
    cur.skip_space();
    if (!cur.done()) cur.fail("unexpected text after constant monomial 1");
    return Monomial(std::span<const Exponent>(exps));
  }
  while (true) {
    cur.skip_space();
    if (!is_name_start(cur.peek())) cur.fail("expected a variable name");
    const auto start = cur.pos();
    while (is_name_char(cur.peek())) cur.advance();
    const auto name = cur.slice(start);
    const auto it = index.find(name);
    if (it == index.end()) {
      cur.fail_at(start, "unknown variable '" + std::string(name) + "'");
    }
    std::int64_t power = 1;
    cur.skip_space();
    if (cur.peek() == '^') {
      cur.advance();
      cur.skip_space();
      if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        cur.fail("expected an exponent after '^'");
      }
      power = 0;
      while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        power = checked_add(checked_mul(power, 10), cur.peek() - '0');
        if (power > std::numeric_limits<Exponent>::max()) {
          cur.fail("exponent too large");
        }
        cur.advance();
      }
    }
    const auto total = std::int64_t{exps[it->second]} + power;
    if (total > std::numeric_limits<Exponent>::max()) cur.fail("exponent too large");
    exps[it->second] = static_cast<Exponent>(total);
    cur.skip_space();
    if (cur.done()) break;
    if (cur.peek() != '*') cur.fail("expected '*' between factors");
    cur.advance();
  }
  return Monomial(std::span<const Exponent>(exps));
}

MonomialIdeal parse_ideal(std::string_view text) {
  std::optional<std::vector<std::string>> names;
  std::vector<Monomial> gens;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++line_no;
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::size_t first = 0;
    while (first < line.size() &&
           std::isspace(static_cast<unsigned char>(line[first]))) {
      ++first;
    }
    if (first == line.size()) {
      if (end == text.size()) break;
      continue;
    }
    const auto body = line.substr(first);
    if (body.starts_with("vars:")) {
      if (names) throw ParseError(line_no, first + 1, "duplicate vars: header");
      names.emplace();
      std::istringstream in{std::string(body.substr(5))};
      std::string name;
      while (in >> name) {
        if (!is_name_start(name.front()) ||
            !std::all_of(name.begin(), name.end(), is_name_char)) {
          throw ParseError(line_no, first + 1, "bad variable name '" + name + "'");
        }
        if (std::find(names->begin(), names->end(), name) != names->end()) {
          throw ParseError(line_no, first + 1, "duplicate variable '" + name + "'");
        }
        names->push_back(name);
      }
      if (names->empty()) throw ParseError(line_no, first + 6, "no variables declared");
      if (names->size() > kMaxVariables) {
        throw ParseError(line_no, first + 1, "too many variables");
      }
    } else {
      if (!names) {
        throw ParseError(line_no, first + 1,
                         "monomial before the 'vars:' header");
      }
      gens.push_back(parse_monomial(body, *names, line_no, first));
    }
    if (end == text.size()) break;
  }
  if (!names) throw ParseError(line_no, 1, "missing 'vars:' header");
  const auto n = names->size();
  return MonomialIdeal(n, std::move(gens)).with_names(std::move(*names));
}

MonomialIdeal read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open ideal file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal(buf.str());
}

std::string format_ideal(const MonomialIdeal& I) {
  const auto& names = I.variable_names();
  std::string out = "vars:";
  for (const auto& n : names) out += ' ' + n;
  out += '\n';
  for (const auto& g : I.generators()) out += format_monomial(g, names) + '\n';
  return out;
}

std::string format_ideal_inline(const MonomialIdeal& I) {
  if (I.is_zero()) return "(0)";
  std::string out = "(";
  bool first = true;
  for (const auto& g : I.generators()) {
    if (!first) out += ", ";
    first = false;
    out += format_monomial(g, I.variable_names());
  }
  return out + ")";
}

std::string format_prime(const PrimeSupport& p,
                         const std::vector<std::string>& names) {
  std::string out = "(";
  bool first = true;
  for (auto i : p.indices()) {
    if (i >= names.size()) throw InvalidArgument("prime outside ambient ring");
    if (!first) out += ", ";
    first = false;
    out += names[i];
  }
  return out + ")";
}

}  // namespace monideal
