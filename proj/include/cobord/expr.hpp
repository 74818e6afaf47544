#pragma once
// Manifold expressions:
//
//   expr := term ('#' term)*
//   term := atom ('x' atom)*
//   atom := NAME INT? | '(' expr ')'
//
// 'x' binds tighter than '#', both are left-associative, whitespace is
// ignored. NAME is matched longest-first against the catalog names
// (S, T, CP, HP, RP, K3, point) and any names registered in a Catalog.

#include "cobord/error.hpp"
#include "cobord/manifold.hpp"

#include <cctype>
#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cobord {

/// Registry of user-supplied descriptors, consulted after the built-in catalog.
class Catalog {
public:
  static constexpr std::string_view builtin_names[] = {"S", "T", "CP", "HP", "RP", "K3", "point"};

  /// Registers a descriptor under its name. Names are identifiers that do not
  /// start with 'x' (the product operator) and do not collide with a
  /// built-in atom such as "S3".
  void add(ManifoldDescriptor d) {
    check_name(d.name);
    d.validate();
    if (entries_.count(d.name))
      throw Error(Errc::invalid_argument, "descriptor '" + d.name + "' is registered twice");
    d.builtin = false;
    entries_.emplace(d.name, std::move(d));
  }

  [[nodiscard]] const ManifoldDescriptor* find(std::string_view name) const {
    const auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : &it->second;
  }

  [[nodiscard]] std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
  }

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }

  static void check_name(const std::string& name) {
    auto bad = [&](const std::string& why) {
      throw Error(Errc::invalid_argument, "cannot register '" + name + "': " + why);
    };
    if (name.empty()) bad("empty name");
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) bad("names start with a letter");
    if (name[0] == 'x') bad("names may not start with 'x', the product operator");
    for (char c : name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        bad("names use letters, digits and '_' only");
    for (std::string_view b : builtin_names) {
      if (name.compare(0, b.size(), b) != 0) continue;
      const auto rest = std::string_view(name).substr(b.size());
      if (rest.find_first_not_of("0123456789") == std::string_view::npos)
        bad("clashes with the built-in atom " + std::string(b));
    }
  }

private:
  std::map<std::string, ManifoldDescriptor, std::less<>> entries_;
};

struct Expr {
  enum class Kind { atom, sum, product };

  Kind kind = Kind::atom;
  std::string name;                   ///< atoms only
  std::optional<int> parameter;       ///< atoms only
  std::shared_ptr<const Expr> lhs;    ///< binary nodes only
  std::shared_ptr<const Expr> rhs;
  std::size_t position = 0;           ///< atom start or operator offset

  static Expr atom(std::string name, std::optional<int> parameter, std::size_t pos = 0) {
    Expr e;
    e.name = std::move(name);
    e.parameter = parameter;
    e.position = pos;
    return e;
  }
  static Expr binary(Kind k, Expr a, Expr b, std::size_t pos = 0) {
    Expr e;
    e.kind = k;
    e.lhs = std::make_shared<const Expr>(std::move(a));
    e.rhs = std::make_shared<const Expr>(std::move(b));
    e.position = pos;
    return e;
  }

  /// Structural equality; positions are ignored.
  friend bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Kind::atom) return a.name == b.name && a.parameter == b.parameter;
    return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
  }
};

namespace detail {

class Parser {
public:
  Parser(std::string_view text, const Catalog* user) : s_(text), user_(user) {}

  Expr run() {
    skip_ws();
    if (i_ == s_.size()) throw PositionedError(Errc::syntax_error, i_, "empty expression");
    Expr e = expr();
    skip_ws();
    if (i_ != s_.size()) {
      if (s_[i_] == ')') throw PositionedError(Errc::syntax_error, i_, "unmatched ')'");
      throw PositionedError(Errc::syntax_error, i_,
                            "unexpected '" + std::string(1, s_[i_]) + "' after expression");
    }
    return e;
  }

private:
  std::string_view s_;
  const Catalog* user_;
  std::size_t i_ = 0;

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool at(char c) {
    skip_ws();
    return i_ < s_.size() && s_[i_] == c;
  }

  Expr expr() {
    Expr e = term();
    while (at('#')) {
      const std::size_t op = i_++;
      e = Expr::binary(Expr::Kind::sum, std::move(e), term(), op);
    }
    return e;
  }

  Expr term() {
    Expr e = atom();
    while (at('x')) {
      const std::size_t op = i_++;
      e = Expr::binary(Expr::Kind::product, std::move(e), atom(), op);
    }
    return e;
  }

  std::size_t match_name() const {
    std::size_t best = 0;
    const auto rest = s_.substr(i_);
    for (std::string_view b : Catalog::builtin_names)
      if (rest.substr(0, b.size()) == b) best = std::max(best, b.size());
    if (user_)
      for (const auto& n : user_->names())
        if (rest.substr(0, n.size()) == n) best = std::max(best, n.size());
    return best;
  }

  Expr atom() {
    skip_ws();
    if (i_ == s_.size()) throw PositionedError(Errc::syntax_error, i_, "expected a manifold, found end of input");
    const char c = s_[i_];
    if (c == '(') {
      const std::size_t open = i_++;
      skip_ws();
      if (i_ < s_.size() && s_[i_] == ')') throw PositionedError(Errc::syntax_error, i_, "empty parentheses");
      Expr e = expr();
      if (!at(')')) throw PositionedError(Errc::syntax_error, open, "unclosed '('");
      ++i_;
      return e;
    }
    if (c == 'x') throw PositionedError(Errc::syntax_error, i_, "operator 'x' needs a left operand");
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      const std::string what = c == ')' ? "unmatched ')'" : "unexpected '" + std::string(1, c) + "'";
      throw PositionedError(Errc::syntax_error, i_, what + ", expected a manifold");
    }
    const std::size_t start = i_;
    const std::size_t len = match_name();
    if (len == 0) {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
      throw PositionedError(Errc::unknown_atom, start,
                            "unknown manifold '" + std::string(s_.substr(start, j - start)) + "'");
    }
    std::string name(s_.substr(i_, len));
    i_ += len;
    const bool builtin = is_catalog_name(name) && !(user_ && user_->find(name));
    if (!builtin) return Expr::atom(std::move(name), std::nullopt, start);
    if (!catalog_takes_parameter(name)) {
      if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
        throw PositionedError(Errc::syntax_error, i_, name + " takes no parameter");
      return Expr::atom(std::move(name), std::nullopt, start);
    }
    skip_ws();
    if (i_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      throw PositionedError(Errc::syntax_error, i_, name + " needs an integer parameter");
    const std::size_t digits = i_;
    long long value = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      value = value * 10 + (s_[i_] - '0');
      if (value > 4096) throw PositionedError(Errc::syntax_error, digits, "parameter too large");
      ++i_;
    }
    return Expr::atom(std::move(name), static_cast<int>(value), start);
  }
};

inline bool needs_parens(const Expr& child, Expr::Kind parent, bool right) {
  if (child.kind == Expr::Kind::atom) return false;
  if (parent == Expr::Kind::product && child.kind == Expr::Kind::sum) return true;
  return right && child.kind == parent;
}

} // namespace detail

inline Expr parse(std::string_view text, const Catalog* user = nullptr) {
  return detail::Parser(text, user).run();
}

/// Canonical form: single spaces around operators, parentheses only where
/// the grammar needs them. parse(print(e)) == e.
inline std::string print(const Expr& e) {
  if (e.kind == Expr::Kind::atom)
    return e.name + (e.parameter ? std::to_string(*e.parameter) : std::string());
  auto side = [&](const Expr& c, bool right) {
    const std::string s = print(c);
    return detail::needs_parens(c, e.kind, right) ? "(" + s + ")" : s;
  };
  const char* op = e.kind == Expr::Kind::sum ? " # " : " x ";
  return side(*e.lhs, false) + op + side(*e.rhs, true);
}

/// Descriptor of the expression. Errors from the operations (dimension
/// mismatch, non-orientable or disconnected summands) carry the operator
/// position.
inline ManifoldDescriptor evaluate(const Expr& e, const Catalog* user = nullptr) {
  if (e.kind == Expr::Kind::atom) {
    if (user)
      if (const auto* d = user->find(e.name)) return *d;
    if (!is_catalog_name(e.name))
      throw PositionedError(Errc::unknown_atom, e.position, "unknown manifold '" + e.name + "'");
    return catalog(e.name, e.parameter);
  }
  const ManifoldDescriptor a = evaluate(*e.lhs, user);
  const ManifoldDescriptor b = evaluate(*e.rhs, user);
  ManifoldDescriptor m;
  try {
    m = e.kind == Expr::Kind::sum ? connected_sum(a, b) : product(a, b);
  } catch (const PositionedError&) {
    throw;
  } catch (const Error& err) {
    throw PositionedError(err.code(), e.position, err.what());
  }
  m.name = print(e);
  return m;
}

inline ManifoldDescriptor evaluate(std::string_view text, const Catalog* user = nullptr) {
  return evaluate(parse(text, user), user);
}

} // namespace cobord
