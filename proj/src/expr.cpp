#include "zlocal/expr.hpp"

#include <cctype>

#include "zlocal/error.hpp"

namespace zlocal::expr {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
    }
  }

  std::vector<Term> run() {
    if (src_.empty()) fail("empty expression");
    std::vector<Term> terms;
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    terms.push_back(term(negative));
    while (!done()) {
      char op = take();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      terms.push_back(term(op == '-'));
    }
    return terms;
  }

 private:
  Term term(bool negative) {
    Term t;
    t.coeff = negative ? -1 : 1;
    bool any = false;
    for (;;) {
      if (done()) break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= number();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        Factor f;
        f.name.push_back(take());
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) f.name.push_back(take());
        if (!done() && peek() == '^') {
          take();
          if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent expected after '^'");
          f.power = static_cast<unsigned>(number());
        }
        t.factors.push_back(std::move(f));
      } else {
        break;
      }
      any = true;
      if (!done() && peek() == '*') {
        take();
        if (done()) fail("dangling '*'");
      }
    }
    if (!any) fail("term expected");
    return t;
  }

  std::int64_t number() {
    std::int64_t v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (take() - '0');
      if (v > (std::int64_t{1} << 40)) fail("integer literal too large");
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("cannot parse expression \"" + src_ + "\": " + what);
  }

  bool done() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  char take() { return src_[pos_++]; }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Term> parse(std::string_view text) { return Parser(text).run(); }

}  // namespace zlocal::expr
