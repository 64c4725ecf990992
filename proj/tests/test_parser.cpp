#include "involute/parser.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

using namespace involute;

namespace {

const char* kWave =
    "system wave { coordinates x y z t; fields Phi; "
    "eq: d(t,t)Phi - d(x,x)Phi - d(y,y)Phi - d(z,z)Phi = 0; }";

ParseError error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  return ParseError({}, "unreachable");
}

/// Either a system or a ParseError; anything else fails the test.
bool parses(const std::string& text) {
  try {
    parse(text);
    return true;
  } catch (const ParseError& e) {
    CHECK_FALSE(e.message().empty());
    CHECK(e.span().line >= 1);
    CHECK(e.span().column_end > e.span().column_begin);
    return false;
  }
}

}  // namespace

TEST_CASE("wave example") {
  const auto s = parse(kWave);
  CHECK(s.name() == "wave");
  CHECK(s.n() == 4);
  CHECK(s.m() == 1);
  CHECK(s.q() == 2);
  CHECK(s.equations().size() == 1);
  const auto& terms = s.equations().front().terms();
  CHECK(terms.size() == 4);
  CHECK(terms.at({0, MultiIndex{0, 0, 0, 2}}) == 1);
  CHECK(terms.at({0, MultiIndex{2, 0, 0, 0}}) == -1);
}

TEST_CASE("order-zero equation") {
  const auto s = parse("system c { coordinates x t; fields Phi; eq: Phi = 0; }");
  CHECK(s.q() == 0);
  CHECK(s.equations().front().order() == 0);
}

TEST_CASE("inhomogeneous term is rejected") {
  const auto e = error_of("system w { coordinates x t; fields Phi; eq: d(t)Phi + 1 = 0; }");
  CHECK(e.message() == "inhomogeneous term");
  CHECK(e.span().line == 1);
  CHECK(error_of("system w { coordinates x t; fields Phi; eq: d(t)Phi = 1; }").message() ==
        "inhomogeneous term");
}

TEST_CASE("diagnostics") {
  CHECK(error_of("system w { coordinates x t; fields Phi; eq: d(s)Phi = 0; }").message() ==
        "unknown coordinate 's'");
  CHECK(error_of("system w { coordinates x t; fields Phi; eq: d(t)Psi = 0; }").message() ==
        "unknown name 'Psi'");
  CHECK(error_of("system w { coordinates x t; fields Phi, Phi; eq: d(t)Phi = 0; }").message() ==
        "duplicate name 'Phi'");
  CHECK(error_of("system w { coordinates x t; fields x; eq: d(t)x = 0; }").message() ==
        "duplicate name 'x'");
  CHECK(error_of("system w { coordinates x t; fields Phi; eq: d(t)x = 0; }").message() ==
        "coordinate 'x' used as a field");
  CHECK(error_of("system w { coordinates x t; fields Phi; eq: 1/0*d(t)Phi = 0; }").message() ==
        "zero denominator");
  CHECK(error_of("system w { coordinates x t; fields Phi; eq: Phi - Phi = 0; }").message() ==
        "equation vanishes identically");
  CHECK(error_of("system w { coordinates x t; fields Phi; eq: k*Phi = 0; }").message() ==
        "unknown name 'k'");
  CHECK(error_of("system w { coordinates x t; fields A[2]; eq: A[3] = 0; }").message() ==
        "component out of range in 'A[3]'");
  CHECK(error_of("system w { coordinates x t; fields Phi; gammas = [1, 0]; eq: Phi = 0; }")
            .message() == "last gamma entry must be positive");
  CHECK(error_of("system w { coordinates x t; fields Phi; }").message() == "expected equation");
  CHECK(error_of("system w { coordinates x t; fields Phi; eq: Phi = 0; } extra").message() ==
        "trailing input after system");
}

TEST_CASE("spans point at the offending token") {
  const auto e = error_of("system w {\n  coordinates x t;\n  fields Phi;\n  eq: d(t)Psi = 0;\n}");
  CHECK(e.span().line == 4);
  CHECK(e.span().column_begin == 11);
  CHECK(e.span().column_end == 14);
  ParseOptions options;
  options.file = "w.pde";
  try {
    parse("system w { coordinates x t; fields Phi; eq: Phi + = 0; }", options);
    FAIL("expected error");
  } catch (const ParseError& err) {
    CHECK(err.span().file == "w.pde");
    CHECK(std::string(err.what()).rfind("w.pde:1:", 0) == 0);
    CHECK_FALSE(err.expected().empty());
  }
}

TEST_CASE("parameters, coefficients and overrides") {
  const char* text =
      "system p { coordinates x t; fields u; param m = 2; param k = -1/3;"
      " eq: d(t,t)u - m^2*u + 3/2*k*d(x)u + m*k*u = 0; }";
  const auto parsed = parse_file(text);
  const auto& terms = parsed.system.equations().front().terms();
  CHECK(terms.at({0, MultiIndex{0, 0}}) == Rational(-14, 3));
  CHECK(terms.at({0, MultiIndex{1, 0}}) == Rational(-1, 2));
  CHECK(parsed.parameters.at("m") == 2);
  ParseOptions options;
  options.overrides["m"] = 3;
  const auto over = parse_file(text, options);
  CHECK(over.system.equations().front().terms().at({0, MultiIndex{0, 0}}) == Rational(-10));
  options.overrides["nope"] = 1;
  CHECK_THROWS_AS(parse_file(text, options), ParseError);
}

TEST_CASE("vector fields, gammas and order") {
  const auto s = parse(
      "system v { coordinates x y t; fields A[2], B; gammas = [0, 1]; order = 3;"
      " eq: d(x)A[1] + d(y)A[2] = 0; eq: -B = 0; }");
  CHECK(s.fields() == std::vector<std::string>{"A[1]", "A[2]", "B"});
  CHECK(s.gammas() == std::vector<unsigned>{0, 1});
  CHECK(s.q() == 3);
  CHECK(s.equation_order() == 1);
  CHECK(parse(serialize(s)) == s);
}

TEST_CASE("round trip on every corpus file") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    const auto s = parse(entry.source);
    const auto text = serialize(s);
    const auto back = parse(text);
    CHECK(back == s);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("serialization is canonical") {
  const auto a = parse("system w { coordinates x y; fields u; eq: u + d(x)u + d(y,y)u + d(x,y)u = 0; }");
  const auto b = parse("system w { coordinates x y; fields u; eq: d(x,y)u + u + d(y,y)u + d(x)u = 0; }");
  CHECK(serialize(a) == serialize(b));
  const auto text = serialize(a);
  CHECK(text.find("d(y,y)u") < text.find("d(x,y)u"));
  CHECK(text.find("d(x,y)u") < text.find("d(x)u"));
}

TEST_CASE("grammar conformance") {
  struct Case {
    const char* text;
    bool ok;
  };
  const Case cases[] = {
      {"system a { coordinates x; fields u; eq: u = 0; }", true},
      {"system a{coordinates x;fields u;eq:u=0;}", true},
      {"# c\nsystem a { # c\n coordinates x; fields u; eq: u = 0; } # c", true},
      {"system a { coordinates x; fields u; eq: -u = 0; }", true},
      {"system a { coordinates x; fields u; eq: 2*u - 1/2 d(x)u = 0; }", true},
      {"system a { coordinates x; fields u; eq: 2 * d(x)u = 0; }", true},
      {"system a { coordinates x y; fields u, v; eq: d(x,y)u + d(y)v = 0; eq: v = 0; }", true},
      {"system a { coordinates x; fields u; param c = 3; eq: c u = 0; }", true},
      {"system a { coordinates x; fields u; param c = 3; eq: c*u = 0; }", true},
      {"system a { coordinates x; fields u; gammas = [1]; eq: u = 0; }", true},
      {"system 2a { coordinates x; fields u; eq: u = 0; }", true},
      {"system a { coordinates x; fields u[2]; eq: u[1] - u[2] = 0; }", true},
      {"system a { coordinates; fields u; eq: u = 0; }", false},
      {"system a { coordinates x; fields ; eq: u = 0; }", false},
      {"system a { coordinates x; fields u; eq: u = 0 }", false},
      {"system a { coordinates x; fields u; eq u = 0; }", false},
      {"system a { coordinates x; fields u; eq: u == 0; }", false},
      {"system a { coordinates x; fields u; eq: d()u = 0; }", false},
      {"system a { coordinates x; fields u; eq: d(x) = 0; }", false},
      {"system a { coordinates x; fields u; eq: u + + u = 0; }", false},
      {"system a { coordinates x; fields u; eq: u = 0; eq: = 0; }", false},
      {"system a { fields u; coordinates x; eq: u = 0; }", false},
      {"system a { coordinates x; fields u; eq: u = 0; param c = 1; }", false},
      {"system a { coordinates x; fields u; param c = 1; param c = 2; eq: u = 0; }", false},
      {"system a { coordinates x; fields u; gammas = []; eq: u = 0; }", false},
      {"system a { coordinates x; fields u[0]; eq: u[1] = 0; }", false},
      {"system a { coordinates x; fields eq; eq: eq = 0; }", false},
      {"system a { coordinates x; fields u; eq: u = 0; ", false},
      {"", false},
      {"system a { coordinates x; fields u; eq: u $ = 0; }", false},
  };
  for (const auto& c : cases) {
    const std::string text = c.text;
    CAPTURE(text);
    CHECK(parses(text) == c.ok);
  }
}

TEST_CASE("fuzzed inputs yield a system or a ParseError") {
  std::mt19937 rng(2024);
  std::vector<std::string> seeds;
  for (const auto& entry : corpus()) seeds.emplace_back(entry.source);
  seeds.emplace_back(kWave);
  std::uniform_int_distribution<int> byte(0, 255);
  const std::string alphabet = "{};,[]()=:+-*/^# \n\t0123456789dxyzteqAPhi_.";
  std::size_t accepted = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    std::string text = seeds[static_cast<std::size_t>(trial) % seeds.size()];
    const int edits = 1 + trial % 6;
    for (int e = 0; e < edits && !text.empty(); ++e) {
      std::uniform_int_distribution<std::size_t> at(0, text.size() - 1);
      const std::size_t pos = at(rng);
      switch (byte(rng) % 4) {
        case 0: text[pos] = static_cast<char>(byte(rng)); break;
        case 1: text.erase(pos, 1 + static_cast<std::size_t>(byte(rng) % 5)); break;
        case 2: text.insert(pos, 1, alphabet[static_cast<std::size_t>(byte(rng)) % alphabet.size()]); break;
        default: text.insert(pos, text.substr(pos, static_cast<std::size_t>(byte(rng) % 12))); break;
      }
    }
    accepted += parses(text);
  }
  // token soup
  const std::vector<std::string> tokens = {"system", "a", "{", "}", "coordinates", "fields", "param",
                                           "gammas", "order", "eq", ":", ";", ",", "=", "0", "1",
                                           "2/3", "d(", "x", ")", "u", "[", "]", "+", "-", "*", "^",
                                           "99999999999999999999", "1/0"};
  std::uniform_int_distribution<std::size_t> pick(0, tokens.size() - 1);
  for (int trial = 0; trial < 1500; ++trial) {
    std::string text = "system a { coordinates x; fields u; ";
    for (int k = 0; k < 3 + trial % 25; ++k) text += tokens[pick(rng)] + " ";
    accepted += parses(text);
  }
  CHECK(accepted > 0);
}
