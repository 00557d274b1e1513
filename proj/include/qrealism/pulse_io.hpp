// Line-oriented pulse sequence files.
//
//   # comment
//   J 215.1
//   ROT H Y pi/2
//   ROT C Y alpha
//   ROT H Y -theta
//   FREE 1/(2*J)
//
// Angles and durations are arithmetic expressions (+ - * / and parentheses)
// over numbers and the symbols pi, alpha, theta and J, so one file describes a
// whole family of circuits; `bind` fixes alpha and theta.
#pragma once

#include "qrealism/pulse.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

namespace qreal::pulse {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct Bindings {
  double alpha = 0.0;
  double theta = 0.0;
  double coupling_hz = kCouplingHz;
};

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const Bindings& b) : text_(text), bindings_(b) {}

  double evaluate() {
    const double v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("bad expression '" + std::string(text_) + "': " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      if (accept('*')) v *= unary();
      else if (accept('/')) {
        const double d = unary();
        if (d == 0.0) fail("division by zero");
        v /= d;
      } else return v;
    }
  }

  double unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  double primary() {
    skip_space();
    if (accept('(')) {
      const double v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "pi") return kPi;
      if (name == "alpha") return bindings_.alpha;
      if (name == "theta") return bindings_.theta;
      if (name == "J") return bindings_.coupling_hz;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  std::string_view text_;
  Bindings bindings_;
  std::size_t pos_ = 0;
};

inline std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace detail

inline double evaluate_expression(std::string_view text, const Bindings& bindings) {
  return detail::ExpressionParser(text, bindings).evaluate();
}

/// One parsed, not yet bound, sequence line.
struct OpTemplate {
  bool rotation = true;
  Nucleus target = Nucleus::hydrogen;
  Axis axis = Axis::x;
  std::string expression;  // angle (rad) or duration (s)
  std::size_t line = 0;
};

struct SequenceTemplate {
  double coupling_hz = kCouplingHz;
  std::vector<OpTemplate> ops;
};

inline SequenceTemplate parse_sequence(std::istream& in) {
  SequenceTemplate out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    keyword = detail::upper(keyword);
    std::string rest;
    std::getline(fields, rest);

    auto check_expression = [&](const std::string& expr) {
      try {
        (void)evaluate_expression(expr, {0.0, 0.0, out.coupling_hz});
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    };

    if (keyword == "J") {
      if (!out.ops.empty()) throw ParseError(line_no, "J header must precede all operations");
      check_expression(rest);
      out.coupling_hz = evaluate_expression(rest, {});
      if (!(out.coupling_hz > 0.0)) throw ParseError(line_no, "coupling constant must be positive");
    } else if (keyword == "ROT") {
      std::istringstream args(rest);
      std::string target, axis, expr;
      if (!(args >> target >> axis)) throw ParseError(line_no, "expected ROT <H|C> <X|Y> <angle>");
      std::getline(args, expr);
      OpTemplate op;
      target = detail::upper(target);
      axis = detail::upper(axis);
      if (target == "H") op.target = Nucleus::hydrogen;
      else if (target == "C") op.target = Nucleus::carbon;
      else throw ParseError(line_no, "rotation target must be H or C");
      if (axis == "X") op.axis = Axis::x;
      else if (axis == "Y") op.axis = Axis::y;
      else throw ParseError(line_no, "rotation axis must be X or Y");
      if (expr.find_first_not_of(" \t\r") == std::string::npos) throw ParseError(line_no, "missing rotation angle");
      check_expression(expr);
      op.expression = expr;
      op.line = line_no;
      out.ops.push_back(std::move(op));
    } else if (keyword == "FREE") {
      if (rest.find_first_not_of(" \t\r") == std::string::npos) throw ParseError(line_no, "missing duration");
      check_expression(rest);
      out.ops.push_back({false, Nucleus::hydrogen, Axis::x, rest, line_no});
    } else {
      throw ParseError(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  return out;
}

inline SequenceTemplate parse_sequence(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_sequence(in);
}

inline SequenceTemplate load_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pulse sequence file '" + path + "'");
  return parse_sequence(in);
}

/// Evaluates every expression at the given angles.
inline PulseSequence bind(const SequenceTemplate& tmpl, double alpha, double theta) {
  const Bindings b{alpha, theta, tmpl.coupling_hz};
  PulseSequence seq;
  seq.coupling_hz = tmpl.coupling_hz;
  for (const auto& op : tmpl.ops) {
    const double value = evaluate_expression(op.expression, b);
    if (op.rotation) {
      seq.ops.push_back(Rotation{op.target, op.axis, value});
    } else {
      if (value < 0.0) throw ParseError(op.line, "negative free-evolution duration");
      seq.ops.push_back(FreeEvolution{value});
    }
  }
  return seq;
}

}  // namespace qreal::pulse
