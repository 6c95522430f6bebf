#include "padicres/ball.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "padicres/errors.hpp"
#include "padicres/rng.hpp"

namespace padicres {

namespace {

void require_same_ring(const Ball& a, const Ball& b) {
  if (a.ring().prime() != b.ring().prime()) throw std::invalid_argument("Ball: operands over different rings");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_parens(std::string_view s) {
  s = trim(s);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool encloses = true;
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && i + 1 < s.size()) {
        encloses = false;
        break;
      }
    }
    if (!encloses) break;
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

mpq_class parse_rational(std::string_view s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw ParseError("empty number");
  if (t.front() == '+') t.erase(t.begin());
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw ParseError("bad number '" + t + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Ball::Ball() : ring_(), prec_(ring_.precision_cap()), val_(ring_.precision_cap()), unit_(0) {}

Ball::Ball(const Ring& ring, mpz_class unit, int64_t val, int64_t abs_prec, bool)
    : ring_(ring), prec_(abs_prec), val_(val), unit_(std::move(unit)) {
  normalize();
}

Ball::Ball(const Ring& ring, const mpz_class& center, int64_t abs_prec)
    : Ball(ring, center, 0, abs_prec, true) {}

Ball Ball::exact(const Ring& ring, const mpz_class& value) {
  return Ball(ring, value, 0, ring.precision_cap(), true);
}

Ball Ball::zero(const Ring& ring, int64_t abs_prec) { return Ball(ring, mpz_class(0), 0, abs_prec, true); }

void Ball::normalize() {
  const int64_t cap = ring_.precision_cap();
  if (prec_ >= cap) {
    prec_ = cap;
    if (unit_ == 0) {
      val_ = cap;
    } else {
      val_ += ring_.remove_p(unit_);
    }
    return;
  }
  if (unit_ == 0) {
    val_ = prec_;
    return;
  }
  val_ += ring_.remove_p(unit_);
  if (val_ >= prec_) {
    unit_ = 0;
    val_ = prec_;
    return;
  }
  ring_.reduce(unit_, prec_ - val_);
}

Ball Ball::from_rational(const Ring& ring, const mpq_class& center, int64_t abs_prec) {
  mpz_class num = center.get_num();
  mpz_class den = center.get_den();
  if (num == 0) return zero(ring, abs_prec);
  const int64_t v = ring.remove_p(num) - ring.remove_p(den);
  if (den == 1) return Ball(ring, num, v, abs_prec, true);
  if (abs_prec >= ring.precision_cap()) {
    throw std::domain_error("Ball::from_rational: exact value " + center.get_str() + " is not p-integral up to p-powers");
  }
  const int64_t k = abs_prec - v;
  if (k <= 0) return zero(ring, abs_prec);
  mpz_class m = ring.power(k);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  return Ball(ring, num * inv, v, abs_prec, true);
}

Ball Ball::parse(const Ring& ring, std::string_view text) {
  std::string_view s = strip_parens(text);
  const size_t o = s.find("O(");
  if (o == std::string_view::npos) {
    mpq_class q = parse_rational(s);
    return from_rational(ring, q, ring.precision_cap());
  }
  const size_t close = s.find(')', o);
  if (close == std::string_view::npos || !trim(s.substr(close + 1)).empty()) throw ParseError("bad O-term in '" + std::string(text) + "'");
  std::string_view inside = trim(s.substr(o + 2, close - o - 2));
  unsigned long p = 0;
  int64_t n = 1;
  const size_t caret = inside.find('^');
  try {
    p = std::stoul(std::string(trim(inside.substr(0, caret))));
    if (caret != std::string_view::npos) n = std::stoll(std::string(trim(inside.substr(caret + 1))));
  } catch (const std::logic_error&) {
    throw ParseError("bad O-term '" + std::string(inside) + "'");
  }
  if (p != ring.prime()) throw ParseError("O-term prime " + std::to_string(p) + " does not match ring prime " + std::to_string(ring.prime()));
  std::string_view head = trim(s.substr(0, o));
  if (head.empty()) return zero(ring, n);
  if (head.back() != '+') throw ParseError("expected '+' before O-term in '" + std::string(text) + "'");
  head.remove_suffix(1);
  return from_rational(ring, parse_rational(strip_parens(head)), n);
}

mpq_class Ball::center() const {
  if (unit_ == 0) return mpq_class(0);
  if (val_ >= 0) {
    mpz_class num = unit_;
    ring_.shift_up(num, val_);
    return mpq_class(num);
  }
  mpq_class q(unit_, ring_.power(-val_));
  q.canonicalize();
  return q;
}

mpz_class Ball::integer_center() const {
  if (unit_ == 0) return 0;
  if (val_ < 0) throw std::domain_error("Ball::integer_center: negative valuation");
  mpz_class num = unit_;
  ring_.shift_up(num, val_);
  return num;
}

std::vector<unsigned long> Ball::digits() const {
  std::vector<unsigned long> out;
  if (unit_ == 0) return out;
  const int64_t len = is_exact() ? std::min<int64_t>(64, prec_ - val_) : prec_ - val_;
  mpz_class u = unit_;
  ring_.reduce(u, len);
  out.reserve(static_cast<size_t>(len));
  for (int64_t i = 0; i < len; ++i) {
    out.push_back(mpz_fdiv_q_ui(u.get_mpz_t(), u.get_mpz_t(), ring_.prime()));
  }
  return out;
}

Ball Ball::truncated(int64_t n) const {
  if (n >= prec_) return *this;
  return Ball(ring_, unit_, val_, n, true);
}

Ball Ball::lifted(int64_t n) const {
  if (n <= prec_) return *this;
  return Ball(ring_, unit_, val_, n, true);
}

Ball Ball::lifted_random(int64_t n, Rng& rng) const {
  if (n <= prec_ || is_exact()) return *this;
  mpz_class noise = rng.below(ring_.power(n - prec_));
  if (unit_ == 0) return Ball(ring_, noise, prec_, n, true);
  ring_.shift_up(noise, prec_ - val_);
  return Ball(ring_, unit_ + noise, val_, n, true);
}

Ball Ball::operator-() const { return Ball(ring_, -unit_, val_, prec_, true); }

Ball operator+(const Ball& a, const Ball& b) {
  require_same_ring(a, b);
  const int64_t m = std::min(a.prec_, b.prec_);
  if (a.unit_ == 0 && b.unit_ == 0) return Ball::zero(a.ring_, m);
  if (a.unit_ == 0) return Ball(b.ring_, b.unit_, b.val_, m, true);
  if (b.unit_ == 0) return Ball(a.ring_, a.unit_, a.val_, m, true);
  const int64_t v = std::min(a.val_, b.val_);
  if (v >= m && m < a.ring_.precision_cap()) return Ball::zero(a.ring_, m);
  mpz_class s = a.unit_;
  a.ring_.shift_up(s, a.val_ - v);
  mpz_class t = b.unit_;
  b.ring_.shift_up(t, b.val_ - v);
  s += t;
  return Ball(a.ring_, std::move(s), v, m, true);
}

Ball operator-(const Ball& a, const Ball& b) { return a + (-b); }

Ball operator*(const Ball& a, const Ball& b) {
  require_same_ring(a, b);
  const int64_t cap = a.ring_.precision_cap();
  const int64_t m = std::min({a.prec_ + b.valuation(), b.prec_ + a.valuation(), cap});
  if (a.unit_ == 0 || b.unit_ == 0) return Ball::zero(a.ring_, m);
  return Ball(a.ring_, a.unit_ * b.unit_, a.val_ + b.val_, m, true);
}

Ball operator/(const Ball& a, const Ball& b) {
  require_same_ring(a, b);
  if (b.unit_ == 0) throw DivisionByUnknownZero();
  const Ring& ring = a.ring_;
  const int64_t cap = ring.precision_cap();
  if (a.is_exact() && b.is_exact()) {
    if (a.unit_ == 0) return Ball::exact(ring, 0);
    if (!mpz_divisible_p(a.unit_.get_mpz_t(), b.unit_.get_mpz_t())) {
      throw std::domain_error("Ball: quotient of exact values is not exactly representable");
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.unit_.get_mpz_t(), b.unit_.get_mpz_t());
    return Ball(ring, q, a.val_ - b.val_, cap, true);
  }
  if (a.is_exact() && a.unit_ == 0) return a;
  const int64_t vb = b.val_;
  int64_t m = std::min(a.prec_ - vb, b.prec_ + a.valuation() - 2 * vb);
  m = std::min(m, cap - 1);
  if (a.unit_ == 0) return Ball::zero(ring, m);
  const int64_t w = a.val_ - vb;
  const int64_t k = m - w;
  if (k <= 0) return Ball::zero(ring, m);
  mpz_class mod = ring.power(k);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), b.unit_.get_mpz_t(), mod.get_mpz_t());
  return Ball(ring, a.unit_ * inv, w, m, true);
}

bool operator==(const Ball& a, const Ball& b) {
  return a.ring_.prime() == b.ring_.prime() && a.prec_ == b.prec_ && a.val_ == b.val_ && a.unit_ == b.unit_;
}

bool Ball::contains(const mpq_class& x) const {
  if (is_exact()) return x == center();
  mpq_class diff = x - center();
  if (diff == 0) return true;
  mpz_class num = diff.get_num();
  mpz_class den = diff.get_den();
  const int64_t v = ring_.remove_p(num) - ring_.remove_p(den);
  return v >= prec_;
}

std::string Ball::str() const {
  std::ostringstream os;
  const bool zero = unit_ == 0;
  if (!zero) {
    if (val_ >= 0) {
      os << integer_center().get_str();
    } else {
      os << unit_.get_str() << '/' << ring_.power(-val_).get_str();
    }
  }
  if (is_exact()) {
    if (zero) os << '0';
    return os.str();
  }
  if (!zero) os << " + ";
  os << "O(" << ring_.prime();
  if (prec_ != 1) os << '^' << prec_;
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Ball& b) { return os << b.str(); }

Ball haar_sample(const Ring& ring, int64_t abs_prec, Rng& rng) {
  if (abs_prec < 1) throw std::invalid_argument("haar_sample: precision must be positive");
  return Ball(ring, rng.below(ring.power(abs_prec)), abs_prec);
}

}  // namespace padicres
