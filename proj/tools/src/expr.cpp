#include "redalg/cli/expr.hpp"

#include <cctype>
#include <string>

#include "redalg/errors.hpp"

namespace redalg::cli {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::shared_ptr<const Context> ctx) : text_(text), ctx_(std::move(ctx)) {}

  Element run() {
    Element e = sum();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(std::string_view tok) {
    skip();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  Element sum() {
    Element acc = product();
    for (;;) {
      if (accept("+")) {
        acc += product();
      } else if (accept("-")) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  Element product() {
    Element acc = unary();
    for (;;) {
      const std::size_t at = pos_;
      if (accept("<>")) {
        const Element rhs = unary();
        acc = diamond(as_coset(acc, at), as_coset(rhs, at)).element();
      } else if (accept("*")) {
        acc = acc * unary();
      } else if (accept("/")) {
        const Element d = unary();
        acc = acc * Element::scalar(ctx_, scalar_of(d, at).inverse());
      } else {
        return acc;
      }
    }
  }

  Element unary() {
    if (accept("-")) return -unary();
    Element base = atom();
    if (accept("^")) {
      skip();
      const std::size_t at = pos_;
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      if (end == at) throw ParseError("expected an exponent", at);
      const unsigned long n = std::stoul(std::string(text_.substr(at, end - at)));
      pos_ = end;
      if (n > 64) throw ParseError("exponent too large", at);
      Element r = Element::scalar(ctx_, 1);
      for (unsigned long i = 0; i < n; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Element atom() {
    skip();
    const std::size_t at = pos_;
    if (at >= text_.size()) throw ParseError("unexpected end of expression", at);
    const char c = text_[at];
    if (c == '(') {
      ++pos_;
      Element e = sum();
      if (!accept(")")) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Element::scalar(ctx_, RationalFn(mpz_class(std::string(text_.substr(at, pos_ - at)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(at, pos_ - at));
      skip();
      if (pos_ < text_.size() && text_[pos_] == '[') {
        const auto close = text_.find(']', pos_);
        if (close == std::string_view::npos) throw ParseError("unterminated generator index", pos_);
        for (std::size_t i = pos_; i <= close; ++i) {
          if (!std::isspace(static_cast<unsigned char>(text_[i]))) name += text_[i];
        }
        pos_ = close + 1;
        return generator(name, at);
      }
      const auto& names = ctx_->algebra().var_names();
      for (std::size_t v = 0; v < names.size(); ++v) {
        if (names[v] == name) return Element::scalar(ctx_, RationalFn::variable(static_cast<int>(v)));
      }
      throw ParseError("unknown variable '" + name + "'", at);
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", at);
  }

  Element generator(const std::string& name, std::size_t at) {
    const auto id = ctx_->algebra().find_letter(name);
    if (!id) throw ParseError("unknown generator " + name, at);
    if (!ctx_->allows(*id)) throw ParseError("generator " + name + " is not in context " + ctx_->name(), at);
    return Element::letter(ctx_, *id);
  }

  RationalFn scalar_of(const Element& e, std::size_t at) const {
    if (e.is_zero()) throw ParseError("division by zero", at);
    if (e.size() != 1 || !e.terms().begin()->first.empty()) throw ParseError("can only divide by a Cartan coefficient", at);
    return e.terms().begin()->second;
  }

  static CosetElement as_coset(const Element& e, std::size_t at) {
    if (!e.is_pure_b()) throw ParseError("operands of <> must be coset representatives", at);
    return CosetElement(e);
  }

  std::string_view text_;
  std::shared_ptr<const Context> ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text, const std::shared_ptr<const Context>& ctx) {
  return ExprParser(text, ctx).run();
}

CosetElement parse_coset(std::string_view text, const std::shared_ptr<const Context>& ctx) {
  return reduce(parse_element(text, ctx));
}

}  // namespace redalg::cli
