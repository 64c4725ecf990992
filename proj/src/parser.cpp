#include "involute/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <regex>
#include <set>

namespace involute {

ParseError::ParseError(SourceSpan span, std::string message, std::vector<std::string> expected)
    : std::runtime_error(span.file + ":" + std::to_string(span.line) + ":" +
                         std::to_string(span.column_begin) + ": " + message),
      span_(std::move(span)),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

namespace {

constexpr std::size_t kMaxVectorSize = 1024;
constexpr unsigned kMaxDerivativeOrder = 64;

enum class Tok { ident, word, integer, punct, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  Lexer(std::string_view text, std::string file) : text_(text), file_(std::move(file)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::end, "", line_, col_});
        return out;
      }
      const std::size_t line = line_;
      const std::size_t col = col_;
      const char c = text_[pos_];
      if (ident_start(c)) {
        out.push_back({Tok::ident, take(ident_char), line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits = take([](char d) { return std::isdigit(static_cast<unsigned char>(d)) != 0; });
        if (pos_ < text_.size() && ident_start(text_[pos_])) {
          out.push_back({Tok::word, digits + take(ident_char), line, col});
        } else {
          out.push_back({Tok::integer, digits, line, col});
        }
      } else if (std::string_view("{};,[]()=:+-*/^").find(c) != std::string_view::npos) {
        advance();
        out.push_back({Tok::punct, std::string(1, c), line, col});
      } else {
        throw ParseError({file_, line, col, col + 1},
                         "unexpected character '" + printable(c) + "'");
      }
    }
  }

 private:
  static std::string printable(char c) {
    if (std::isprint(static_cast<unsigned char>(c))) return std::string(1, c);
    static const char* hex = "0123456789abcdef";
    const auto u = static_cast<unsigned char>(c);
    return std::string("\\x") + hex[u >> 4] + hex[u & 15];
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  template <class Pred>
  std::string take(Pred pred) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && pred(text_[pos_])) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const ParseOptions& options)
      : toks_(std::move(tokens)), options_(options) {}

  ParsedFile run() {
    expect_keyword("system");
    const Token& name_tok = peek();
    if (name_tok.kind != Tok::ident && name_tok.kind != Tok::word && name_tok.kind != Tok::integer) {
      fail("expected system name", {"IDENT"});
    }
    std::string name = next().text;
    expect_punct("{");
    parse_coordinates();
    parse_fields();
    std::vector<unsigned> gammas;
    std::optional<unsigned> order;
    bool have_gammas = false;
    while (peek().kind == Tok::ident && peek().text != "eq") {
      const Token& kw = peek();
      if (kw.text == "param") {
        parse_param();
      } else if (kw.text == "gammas") {
        if (have_gammas) fail("duplicate gammas declaration");
        gammas = parse_gammas();
        have_gammas = true;
      } else if (kw.text == "order") {
        if (order) fail("duplicate order declaration");
        next();
        expect_punct("=");
        order = parse_small_int("order");
        expect_punct(";");
      } else {
        fail("unexpected '" + kw.text + "'", {"param", "gammas", "order", "eq"});
      }
    }
    for (const auto& [key, value] : options_.overrides) {
      if (!params_.count(key)) {
        throw ParseError(span_of(peek()), "override for undeclared parameter '" + key + "'");
      }
    }
    std::vector<LinearEquation> equations;
    if (!(peek().kind == Tok::ident && peek().text == "eq")) fail("expected equation", {"eq"});
    while (peek().kind == Tok::ident && peek().text == "eq") equations.push_back(parse_equation());
    expect_punct("}");
    if (peek().kind != Tok::end) fail("trailing input after system", {"end of input"});
    try {
      PDESystem system(std::move(name), coordinates_, fields_, std::move(equations),
                       std::move(gammas), order);
      return {std::move(system), params_};
    } catch (const std::invalid_argument& e) {
      throw ParseError(span_of(toks_.front()), e.what());
    } catch (const std::overflow_error& e) {
      throw ParseError(span_of(toks_.front()), e.what());
    }
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  SourceSpan span_of(const Token& t) const {
    return {options_.file, t.line, t.column, t.column + std::max<std::size_t>(1, t.text.size())};
  }

  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected = {}) const {
    throw ParseError(span_of(peek()), message, std::move(expected));
  }

  bool is_punct(const std::string& p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::punct && peek(ahead).text == p;
  }

  void expect_punct(const std::string& p) {
    if (!is_punct(p)) fail("expected '" + p + "'", {p});
    next();
  }

  void expect_keyword(const std::string& kw) {
    if (peek().kind != Tok::ident || peek().text != kw) fail("expected '" + kw + "'", {kw});
    next();
  }

  std::string expect_ident(const std::string& what) {
    if (peek().kind != Tok::ident) fail("expected " + what, {"IDENT"});
    return next().text;
  }

  unsigned parse_small_int(const std::string& what) {
    if (peek().kind != Tok::integer) fail("expected integer " + what, {"INT"});
    const std::string& text = peek().text;
    if (text.size() > 9) fail(what + " too large");
    return static_cast<unsigned>(std::stoul(next().text));
  }

  Integer parse_integer() {
    if (peek().kind != Tok::integer) fail("expected integer", {"INT"});
    return Integer(next().text, 10);
  }

  // INT ("/" INT)?
  Rational parse_unsigned_rational() {
    Integer num = parse_integer();
    Integer den = 1;
    if (is_punct("/")) {
      next();
      den = parse_integer();
      if (den == 0) {
        throw ParseError(span_of(toks_[pos_ - 1]), "zero denominator");
      }
    }
    return make_rational(num, den);
  }

  void check_fresh(const Token& t, const std::string& name) {
    if (name == "d" || name == "eq" || name == "param" || name == "gammas" || name == "order" ||
        name == "system" || name == "coordinates" || name == "fields") {
      throw ParseError(span_of(t), "reserved word '" + name + "' used as a name");
    }
    if (coord_index_.count(name) || field_index_.count(name) || params_.count(name) ||
        vector_bases_.count(name)) {
      throw ParseError(span_of(t), "duplicate name '" + name + "'");
    }
  }

  void parse_coordinates() {
    expect_keyword("coordinates");
    if (peek().kind != Tok::ident) fail("expected coordinate name", {"IDENT"});
    while (peek().kind == Tok::ident) {
      const Token& t = peek();
      check_fresh(t, t.text);
      if (coordinates_.size() == kMaxDimensions) fail("too many coordinates");
      coord_index_.emplace(t.text, coordinates_.size());
      coordinates_.push_back(next().text);
    }
    expect_punct(";");
  }

  void parse_fields() {
    expect_keyword("fields");
    while (true) {
      const Token& t = peek();
      const std::string base = expect_ident("field name");
      check_fresh(t, base);
      if (is_punct("[")) {
        next();
        const unsigned count = parse_small_int("component count");
        if (count == 0 || count > kMaxVectorSize) fail("component count out of range");
        expect_punct("]");
        vector_bases_.insert(base);
        for (unsigned k = 1; k <= count; ++k) add_field(base + "[" + std::to_string(k) + "]");
      } else {
        add_field(base);
      }
      if (is_punct(",")) {
        next();
        continue;
      }
      break;
    }
    expect_punct(";");
  }

  void add_field(const std::string& name) {
    if (fields_.size() >= kMaxVectorSize * 4) fail("too many fields");
    field_index_.emplace(name, fields_.size());
    fields_.push_back(name);
  }

  void parse_param() {
    expect_keyword("param");
    const Token& t = peek();
    const std::string name = expect_ident("parameter name");
    check_fresh(t, name);
    expect_punct("=");
    bool negative = false;
    if (is_punct("-") || is_punct("+")) negative = next().text == "-";
    Rational value = parse_unsigned_rational();
    if (negative) value = -value;
    expect_punct(";");
    auto ov = options_.overrides.find(name);
    params_.emplace(name, ov == options_.overrides.end() ? value : ov->second);
  }

  std::vector<unsigned> parse_gammas() {
    expect_keyword("gammas");
    expect_punct("=");
    expect_punct("[");
    std::vector<unsigned> out;
    out.push_back(parse_small_int("gamma"));
    while (is_punct(",")) {
      next();
      if (out.size() >= 64) fail("too many gamma entries");
      out.push_back(parse_small_int("gamma"));
    }
    expect_punct("]");
    expect_punct(";");
    if (out.back() == 0) {
      throw ParseError(span_of(toks_[pos_ - 3]), "last gamma entry must be positive");
    }
    return out;
  }

  LinearEquation parse_equation() {
    expect_keyword("eq");
    expect_punct(":");
    LinearEquation eq;
    bool negative = false;
    if (is_punct("-") || is_punct("+")) negative = next().text == "-";
    parse_term(negative, eq);
    while (is_punct("+") || is_punct("-")) {
      negative = next().text == "-";
      parse_term(negative, eq);
    }
    expect_punct("=");
    if (peek().kind != Tok::integer) fail("expected '0'", {"0"});
    if (Integer(peek().text, 10) != 0) fail("inhomogeneous term");
    next();
    expect_punct(";");
    if (eq.empty()) fail("equation vanishes identically");
    return eq;
  }

  // coefficient factor: RATIONAL | param ("^" INT)?
  bool parse_factor(Rational& coef) {
    if (peek().kind == Tok::integer) {
      coef *= parse_unsigned_rational();
      return true;
    }
    if (peek().kind != Tok::ident) return false;
    auto it = params_.find(peek().text);
    if (it == params_.end()) return false;
    next();
    Rational value = it->second;
    if (is_punct("^")) {
      next();
      const unsigned power = parse_small_int("exponent");
      if (power > 64) fail("exponent too large");
      Rational p = 1;
      for (unsigned i = 0; i < power; ++i) p *= value;
      value = p;
    }
    coef *= value;
    return true;
  }

  void parse_term(bool negative, LinearEquation& eq) {
    const Token& start = peek();
    Rational coef = negative ? -1 : 1;
    bool have_factor = false;
    bool pending_star = false;
    while (parse_factor(coef)) {
      have_factor = true;
      pending_star = false;
      if (!is_punct("*")) break;
      next();
      pending_star = true;
    }
    MultiIndex index(coordinates_.size());
    if (peek().kind == Tok::ident && peek().text == "d" && is_punct("(", 1)) {
      next();
      next();
      unsigned total = 0;
      while (true) {
        const Token& ct = peek();
        if (ct.kind != Tok::ident) fail("expected coordinate name", {"IDENT"});
        auto it = coord_index_.find(ct.text);
        if (it == coord_index_.end()) fail("unknown coordinate '" + ct.text + "'", coordinates_);
        next();
        if (++total > kMaxDerivativeOrder) fail("derivative order too large");
        index.set(it->second, index[it->second] + 1);
        if (is_punct(",")) {
          next();
          continue;
        }
        break;
      }
      expect_punct(")");
    } else if (!have_factor || pending_star) {
      if (peek().kind != Tok::ident) fail("expected term", {"RATIONAL", "IDENT", "d("});
    } else if (peek().kind != Tok::ident) {
      throw ParseError(span_of(start), "inhomogeneous term");
    }
    const Token& ft = peek();
    if (ft.kind != Tok::ident) fail("expected field name", {"IDENT"});
    std::string name = ft.text;
    if (vector_bases_.count(name)) {
      next();
      expect_punct("[");
      const unsigned k = parse_small_int("component");
      expect_punct("]");
      name += "[" + std::to_string(k) + "]";
      auto it = field_index_.find(name);
      if (it == field_index_.end()) throw ParseError(span_of(ft), "component out of range in '" + name + "'");
      eq.add({it->second, index}, coef);
      return;
    }
    auto it = field_index_.find(name);
    if (it == field_index_.end()) {
      if (coord_index_.count(name)) throw ParseError(span_of(ft), "coordinate '" + name + "' used as a field");
      throw ParseError(span_of(ft), "unknown name '" + name + "'");
    }
    next();
    eq.add({it->second, index}, coef);
  }

  std::vector<Token> toks_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
  std::vector<std::string> coordinates_;
  std::vector<std::string> fields_;
  std::map<std::string, std::size_t> coord_index_;
  std::map<std::string, std::size_t> field_index_;
  std::set<std::string> vector_bases_;
  std::map<std::string, Rational> params_;
};

const std::regex& ident_pattern() {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_]*");
  return re;
}

// Groups fields named base[1], ..., base[k] back into one declaration.
std::vector<std::string> field_declarations(const std::vector<std::string>& fields) {
  static const std::regex component("([A-Za-z_][A-Za-z0-9_]*)\\[([0-9]+)\\]");
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < fields.size()) {
    std::smatch match;
    if (std::regex_match(fields[i], match, component) && match[2] == "1") {
      const std::string base = match[1];
      std::size_t k = 1;
      while (i + k < fields.size() && fields[i + k] == base + "[" + std::to_string(k + 1) + "]") ++k;
      out.push_back(base + "[" + std::to_string(k) + "]");
      i += k;
      continue;
    }
    if (!std::regex_match(fields[i], ident_pattern())) {
      throw std::invalid_argument("field name '" + fields[i] + "' is not expressible in the DSL");
    }
    out.push_back(fields[i]);
    ++i;
  }
  return out;
}

}  // namespace

ParsedFile parse_file(std::string_view text, const ParseOptions& options) {
  try {
    Lexer lexer(text, options.file);
    Parser parser(lexer.run(), options);
    return parser.run();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError({options.file, 1, 1, 2}, e.what());
  }
}

std::string serialize(const PDESystem& s) {
  static const std::regex name_re("[A-Za-z0-9_]+");
  if (!std::regex_match(s.name(), name_re)) throw std::invalid_argument("system name is not expressible in the DSL");
  std::string out = "system " + s.name() + " {\n  coordinates";
  for (const auto& c : s.coordinates()) out += " " + c;
  out += ";\n  fields ";
  const auto decls = field_declarations(s.fields());
  for (std::size_t i = 0; i < decls.size(); ++i) out += (i ? ", " : "") + decls[i];
  out += ";\n";
  if (s.q() != s.equation_order()) out += "  order = " + std::to_string(s.q()) + ";\n";
  if (!s.gammas().empty()) {
    out += "  gammas = [";
    for (std::size_t i = 0; i < s.gammas().size(); ++i) {
      out += (i ? ", " : "") + std::to_string(s.gammas()[i]);
    }
    out += "];\n";
  }
  for (const auto& eq : s.equations()) {
    out += "  eq:";
    bool first = true;
    for (const auto& [coord, c] : eq.terms()) {
      const bool negative = c < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (first) {
        out += negative ? " -" : " ";
      } else {
        out += negative ? " - " : " + ";
      }
      if (mag != 1) out += to_string(mag) + "*";
      out += to_string(coord, s.fields(), s.coordinates());
      first = false;
    }
    out += " = 0;\n";
  }
  return out + "}\n";
}

}  // namespace involute
