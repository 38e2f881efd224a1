#include "pencilkit/parse.hpp"

#include <cctype>
#include <set>

#include "pencilkit/errors.hpp"

namespace pk {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int default_arity) : text_(text), arity_(detect_arity(default_arity)) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'", pos_, 1);
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at, std::size_t len) const {
    throw SyntaxError(what + " at offset " + std::to_string(at), at, len);
  }

  int detect_arity(int fallback) const {
    std::optional<std::size_t> ternary_at;
    std::optional<std::size_t> binary_at;
    for (std::size_t i = 0; i < text_.size(); ++i) {
      const char c = text_[i];
      if (c == 'x' || c == 'y' || c == 'z') {
        if (!ternary_at) ternary_at = i;
      } else if (c == 'u' || c == 'v') {
        if (!binary_at) binary_at = i;
      }
    }
    if (ternary_at && binary_at) {
      const std::size_t at = std::max(*ternary_at, *binary_at);
      fail("variables x, y, z cannot be mixed with u, v", at, 1);
    }
    if (ternary_at) return 3;
    if (binary_at) return 2;
    return fallback;
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

  Integer integer_literal() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number", start, pos_ < text_.size() ? 1 : 0);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  MultiPoly expr() {
    MultiPoly p = signed_term();
    while (true) {
      if (accept('+')) {
        p += signed_term();
      } else if (accept('-')) {
        p -= signed_term();
      } else {
        return p;
      }
    }
  }

  MultiPoly signed_term() {
    if (accept('-')) return -signed_term();
    return product();
  }

  MultiPoly product() {
    MultiPoly p = power();
    while (true) {
      skip_space();
      if (accept('*')) {
        p *= power();
        continue;
      }
      if (pos_ < text_.size()) {
        const char c = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
          fail("implicit multiplication is not allowed; use '*'", pos_, 1);
        }
      }
      return p;
    }
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      const Integer e = integer_literal();
      if (!e.fits_uint_p() || e > 1000) fail("exponent too large", at, pos_ - at);
      if (accept('^')) fail("chained exponents need parentheses", pos_ - 1, 1);
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  MultiPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input", pos_, 0);
    const char c = text_[pos_];
    if (c == '(') {
      const std::size_t open = pos_++;
      MultiPoly p = expr();
      if (!accept(')')) fail("unbalanced '('", open, 1);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Integer num = integer_literal();
      if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        const Integer den = integer_literal();
        if (den == 0) fail("division by zero", at, pos_ - at);
        Scalar q(num, den);
        q.canonicalize();
        return MultiPoly::constant(arity_, q);
      }
      return MultiPoly::constant(arity_, Scalar(num));
    }
    static const std::string names[2][3] = {{"u", "v", ""}, {"x", "y", "z"}};
    for (int i = 0; i < arity_; ++i) {
      if (std::string(1, c) == names[arity_ - 2][i]) {
        ++pos_;
        if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
          fail("implicit multiplication is not allowed; use '*'", pos_, 1);
        }
        return MultiPoly::variable(arity_, i);
      }
    }
    fail("unexpected '" + std::string(1, c) + "'", pos_, 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int arity_;
};

struct Piece {
  std::string text;
  std::size_t offset;
};

std::vector<Piece> split_top(std::string_view text, char sep, std::size_t base = 0) {
  std::vector<Piece> out{{"", base}};
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back({"", base + i + 1});
    } else {
      out.back().text += c;
    }
  }
  return out;
}

/// Parses one piece of a larger input, reporting spans in the outer text.
MultiPoly parse_piece(const Piece& piece, int arity, bool homogeneous) {
  try {
    return parse_form(piece.text, arity, homogeneous);
  } catch (const SyntaxError& e) {
    throw SyntaxError(std::string(e.what()) + " of component '" + piece.text + "'",
                      piece.offset + e.offset(), e.length());
  }
}

}  // namespace

MultiPoly parse_poly(std::string_view text, int default_arity) {
  return Parser(text, default_arity).parse();
}

MultiPoly parse_form(std::string_view text, int arity, bool homogeneous) {
  MultiPoly p = parse_poly(text, arity);
  if (p.arity() != arity) {
    throw Error(ErrorKind::ArityMismatch, "'" + std::string(text) + "' uses " +
                                              (arity == 3 ? "u, v where x, y, z" : "x, y, z where u, v") +
                                              " are expected");
  }
  if (homogeneous) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroInput, "'" + std::string(text) + "' is zero");
    if (!p.is_homogeneous()) {
      std::set<int> degrees;
      for (const auto& [e, c] : p.terms()) degrees.insert(total_degree(e));
      std::string list;
      for (int d : degrees) list += (list.empty() ? "" : ", ") + std::to_string(d);
      throw Error(ErrorKind::NotHomogeneous,
                  "'" + std::string(text) + "' is not homogeneous (term degrees " + list + ")");
    }
  }
  return p;
}

namespace {

std::vector<Piece> split_map_pieces(std::string_view text, std::size_t count) {
  std::size_t first = text.find_first_not_of(" \t");
  std::size_t last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos || text[first] != '[') {
    throw SyntaxError("map must start with '['", first == std::string_view::npos ? 0 : first, 1);
  }
  if (text[last] != ']') throw SyntaxError("map must end with ']'", last, 1);
  auto parts = split_top(text.substr(first + 1, last - first - 1), ':', first + 1);
  if (parts.size() != count) {
    throw SyntaxError("map needs " + std::to_string(count) + " components separated by ':'", first,
                      last - first + 1);
  }
  return parts;
}

}  // namespace

std::vector<std::string> split_map(std::string_view text, std::size_t count) {
  std::vector<std::string> out;
  for (auto& piece : split_map_pieces(text, count)) out.push_back(std::move(piece.text));
  return out;
}

std::vector<MultiPoly> parse_plane_map(std::string_view text) {
  std::vector<MultiPoly> out;
  for (const auto& piece : split_map_pieces(text, 3)) out.push_back(parse_piece(piece, 3, true));
  return out;
}

std::vector<MultiPoly> parse_line_map(std::string_view text) {
  std::vector<MultiPoly> out;
  for (const auto& piece : split_map_pieces(text, 2)) out.push_back(parse_piece(piece, 2, true));
  return out;
}

std::vector<MultiPoly> parse_line(std::string_view text) {
  auto parts = split_top(text, ',');
  if (parts.size() != 3) throw SyntaxError("line needs three comma-separated linear forms", 0, text.size());
  std::vector<MultiPoly> out;
  for (const auto& piece : parts) {
    MultiPoly l = parse_piece(piece, 2, false);
    if (!l.is_zero() && (!l.is_homogeneous() || *l.degree() != 1)) {
      throw Error(ErrorKind::BadLine, "'" + piece.text + "' is not a linear form in u, v");
    }
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<Scalar> parse_scalar_list(std::string_view text) {
  std::vector<Scalar> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  for (const auto& piece : split_top(text, ',')) {
    const MultiPoly c = parse_piece(piece, 3, false);
    if (!c.is_constant()) {
      throw SyntaxError("expected a number, got '" + piece.text + "'", piece.offset, piece.text.size());
    }
    out.push_back(c.is_zero() ? Scalar(0) : c.leading_coeff());
  }
  return out;
}

}  // namespace pk
