#include "ennorm/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ennorm {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int num_vars, int line_base)
      : text_(text), num_vars_(num_vars), line_(line_base) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) { throw ParseError(line_, col(), why); }

  int col() const { return static_cast<int>(pos_) - line_start_ + 1; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        line_start_ = static_cast<int>(pos_) + 1;
      }
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc(num_vars_);
    bool negate = eat('-');
    if (!negate) eat('+');
    acc += negate ? -term() : term();
    while (true) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (eat('^')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected a non-negative integer exponent after '^'");
      long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        e = e * 10 + (text_[pos_++] - '0');
      if (e > 64) fail("exponent too large");
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'i' || c == 'I') {
      ++pos_;
      return Polynomial::constant(num_vars_, GaussianRational::i());
    }
    if (c == 'z' || c == 'Z') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected a variable index after 'z'");
      long idx = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        idx = idx * 10 + (text_[pos_++] - '0');
      if (idx < 1 || idx > num_vars_)
        fail("undeclared variable z" + std::to_string(idx));
      return Polynomial::variable(num_vars_, static_cast<int>(idx) - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        num += text_[pos_++];
      std::string den = "1";
      size_t save = pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        den.clear();
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          den += text_[pos_++];
        if (den.empty()) fail("expected a denominator after '/'");
        if (mpz_class(den) == 0) fail("zero denominator");
      } else {
        pos_ = save;
      }
      mpq_class q(num + "/" + den);
      q.canonicalize();
      return Polynomial::constant(num_vars_, GaussianRational(q));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  int num_vars_;
  size_t pos_ = 0;
  int line_;
  int line_start_ = 0;
};

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, int num_vars) {
  return PolyParser(text, num_vars, 1).parse();
}

IdealFile parse_ideal_file(std::string_view text, std::string default_name) {
  IdealFile file;
  file.name = std::move(default_name);
  bool have_ring = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;

    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, 1, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    if (key == "name") {
      if (value.empty()) throw ParseError(lineno, static_cast<int>(eq) + 2, "empty name");
      file.name = value;
    } else if (key == "ring vars") {
      std::istringstream vs(value);
      std::string tok;
      int expect = 1;
      while (vs >> tok) {
        if (tok != "z" + std::to_string(expect))
          throw ParseError(lineno, 1, "ring variables must be z1 z2 ... zd in order");
        ++expect;
      }
      file.num_vars = expect - 1;
      if (file.num_vars == 0) throw ParseError(lineno, 1, "ring needs at least one variable");
      have_ring = true;
    } else if (key == "weight") {
      if (value == "hardy") {
        file.weight = WeightScheme::hardy();
        file.weight_s_text.clear();
      } else if (value.rfind("bergman", 0) == 0) {
        std::string rest = trim(value.substr(7));
        if (rest.rfind("s", 0) != 0)
          throw ParseError(lineno, 1, "expected 'bergman s = <rational>'");
        auto seq = rest.find('=');
        if (seq == std::string::npos)
          throw ParseError(lineno, 1, "expected 'bergman s = <rational>'");
        std::string sval = trim(rest.substr(seq + 1));
        try {
          mpq_class q(sval);
          q.canonicalize();
          if (q < 0) throw std::invalid_argument("negative");
          file.weight = WeightScheme::bergman(q.get_d());
          file.weight_s_text = q.get_str();
        } catch (const std::exception&) {
          throw ParseError(lineno, 1, "invalid bergman parameter '" + sval + "'");
        }
      } else {
        throw ParseError(lineno, 1, "unknown weight '" + value + "'");
      }
    } else if (key == "gen") {
      if (!have_ring) throw ParseError(lineno, 1, "'ring vars' must come before generators");
      Polynomial p = [&] {
        try {
          return parse_polynomial(value, file.num_vars);
        } catch (const ParseError& e) {
          throw ParseError(lineno, e.col, e.message);
        }
      }();
      if (p.is_zero()) throw ParseError(lineno, 1, "zero generator");
      file.generator_sources.push_back(value);
      file.generators.push_back(std::move(p));
    } else {
      throw ParseError(lineno, 1, "unknown key '" + key + "'");
    }
  }
  if (!have_ring) throw ParseError(lineno + 1, 1, "missing 'ring vars' line");
  if (file.generators.empty()) throw ParseError(lineno + 1, 1, "no generators");
  return file;
}

std::string IdealFile::to_text() const {
  std::string out;
  out += "name = " + name + "\n";
  out += "ring vars =";
  for (int i = 1; i <= num_vars; ++i) out += " z" + std::to_string(i);
  out += "\n";
  if (weight.kind() == WeightScheme::Kind::Hardy) {
    out += "weight = hardy\n";
  } else {
    out += "weight = bergman s = " + weight_s_text + "\n";
  }
  for (const auto& g : generators) out += "gen = " + g.str() + "\n";
  return out;
}

IdealFile load_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string stem = path;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
  if (auto dot = stem.find_last_of('.'); dot != std::string::npos) stem = stem.substr(0, dot);
  return parse_ideal_file(ss.str(), stem);
}

}  // namespace ennorm
