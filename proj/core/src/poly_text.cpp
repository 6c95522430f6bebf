#include "padicres/poly_text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace padicres {

namespace {

struct Term {
  bool negative = false;
  std::string coeff;  // empty for an implicit 1
  int degree = 0;
};

std::string strip(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Term parse_term(std::string body, bool negative) {
  Term t;
  t.negative = negative;
  body = strip(body);
  if (body.empty()) throw ParseError("empty term");
  size_t x = std::string::npos;
  int depth = 0;
  for (size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')') --depth;
    if (depth == 0 && body[i] == 'X') {
      x = i;
      break;
    }
  }
  if (x == std::string::npos) {
    t.coeff = body;
    return t;
  }
  std::string head = strip(body.substr(0, x));
  if (!head.empty() && head.back() == '*') head = strip(head.substr(0, head.size() - 1));
  t.coeff = head;
  std::string tail = strip(body.substr(x + 1));
  if (tail.empty()) {
    t.degree = 1;
  } else if (tail.front() == '^') {
    try {
      t.degree = std::stoi(strip(tail.substr(1)));
    } catch (const std::logic_error&) {
      throw ParseError("bad exponent in '" + body + "'");
    }
  } else {
    throw ParseError("unexpected text after X in '" + body + "'");
  }
  if (t.degree < 0) throw ParseError("negative exponent");
  return t;
}

// Splits on top-level '+' and '-' signs.
std::vector<Term> split_terms(std::string_view text) {
  std::vector<Term> out;
  std::string cur;
  bool negative = false;
  bool sign_pending = false;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      if (!strip(cur).empty()) {
        out.push_back(parse_term(cur, negative));
        negative = false;
      } else if (sign_pending) {
        throw ParseError("two signs in a row");
      }
      sign_pending = true;
      cur.clear();
      negative = c == '-';
      continue;
    }
    cur.push_back(c);
    if (c != ' ' && c != '\t') sign_pending = false;
  }
  if (depth != 0) throw ParseError("unbalanced parentheses");
  if (strip(cur).empty()) throw ParseError("trailing sign or empty polynomial");
  out.push_back(parse_term(cur, negative));
  return out;
}

template <class T, class Conv>
std::vector<T> assemble(const std::vector<Term>& terms, const T& zero, Conv conv) {
  int deg = 0;
  for (const auto& t : terms) deg = std::max(deg, t.degree);
  std::vector<T> c(static_cast<size_t>(deg + 1), zero);
  std::vector<bool> seen(c.size(), false);
  for (const auto& t : terms) {
    const auto i = static_cast<size_t>(t.degree);
    if (seen[i]) throw ParseError("repeated monomial of degree " + std::to_string(t.degree));
    seen[i] = true;
    T v = conv(t.coeff);
    c[i] = t.negative ? T(-v) : v;
  }
  return c;
}

std::string monomial(int k) {
  if (k == 0) return "";
  if (k == 1) return "X";
  return "X^" + std::to_string(k);
}

template <class T, class Render>
std::string render(const std::vector<T>& c, Render coeff_text) {
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    std::string s = coeff_text(c[static_cast<size_t>(k)]);
    if (s.empty()) continue;  // exact zero
    bool negative = false;
    if (s.front() == '-') {
      negative = true;
      s.erase(s.begin());
    }
    if (!first) os << (negative ? " - " : " + ");
    if (first && negative) os << '-';
    const std::string m = monomial(k);
    if (m.empty()) {
      os << s;
    } else if (s == "1") {
      os << m;
    } else {
      os << s << '*' << m;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

std::string ball_text(const Ball& b) {
  if (b.is_exact()) return b.is_known_zero() ? std::string() : b.str();
  return "(" + b.str() + ")";
}

}  // namespace

std::string to_string(const BallPoly& p) { return render(p.coeffs(), ball_text); }

std::string to_string(const FlatPoly& p) { return to_string(p.balls()); }

std::string to_string(const ExactPoly& p) {
  return render(p.coeffs(), [](const mpz_class& x) { return x == 0 ? std::string() : x.get_str(); });
}

std::string to_string(const FloatPoly& p) {
  return render(p.coeffs(), [](const PadicFloat& x) { return x.is_zero() ? std::string() : "[" + x.str() + "]"; });
}

BallPoly parse_ball_poly(const Ring& ring, std::string_view text) {
  const auto terms = split_terms(text);
  return BallPoly(assemble(terms, Ball::exact(ring, 0), [&](const std::string& s) {
    return s.empty() ? Ball::exact(ring, 1) : Ball::parse(ring, s);
  }));
}

ExactPoly parse_exact_poly(std::string_view text) {
  const auto terms = split_terms(text);
  return ExactPoly(assemble(terms, mpz_class(0), [](const std::string& s) {
    if (s.empty()) return mpz_class(1);
    std::string t = s;
    while (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = strip(t.substr(1, t.size() - 2));
    mpz_class v;
    if (v.set_str(t, 10) != 0) throw ParseError("bad integer '" + s + "'");
    return v;
  }));
}

const std::string& Fixture::at(const std::string& key) const {
  auto it = entries.find(key);
  if (it == entries.end()) throw ParseError("fixture has no entry '" + key + "'");
  return it->second;
}

BallPoly Fixture::ball_poly(const std::string& key) const { return parse_ball_poly(Ring(p), at(key)); }

Fixture parse_fixture(std::istream& in) {
  Fixture f;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (strip(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value' in '" + line + "'");
    f.entries[strip(line.substr(0, eq))] = strip(line.substr(eq + 1));
  }
  if (auto it = f.entries.find("p"); it != f.entries.end()) f.p = std::stoul(it->second);
  return f;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture '" + path + "'");
  return parse_fixture(in);
}

}  // namespace padicres
