#include "padicres/prs.hpp"

#include <algorithm>
#include <stdexcept>

#include "padicres/errors.hpp"
#include "padicres/rng.hpp"
#include "prs_detail.hpp"

namespace padicres {

namespace {

using namespace detail;

SubresStep make_step(BallPoly r, int j) {
  SubresStep s;
  s.lead = r[static_cast<size_t>(j)];
  s.prec = min_abs_prec(r);
  s.lead_val = s.lead.valuation();
  s.gauss_val = gauss_valuation(r);
  s.r = std::move(r);
  return s;
}

BallPoly flat_steps(const BallPoly& prev, const BallPoly& cur, const Ball& prev_lead, int j) {
  const Ball lead = cur[static_cast<size_t>(j)];
  const Ball c1 = prev[static_cast<size_t>(j + 1)] / lead;
  BallPoly s = prev - shift(scale(cur, c1), 1);
  s.coeffs().resize(static_cast<size_t>(j + 1));
  s = flatten(s).balls();
  const Ball c2 = s[static_cast<size_t>(j)] / lead;
  BallPoly t = s - scale(cur, c2);
  t.coeffs().resize(static_cast<size_t>(j));
  t = flatten(t).balls();
  return flatten(scale(t, (lead * lead) / (prev_lead * prev_lead))).balls();
}

template <class Post>
SubresTranscript run_subres(const BallPoly& a, const BallPoly& b, PremMethod method, Post post) {
  const int d = a.degree();
  if (d < 1 || b.degree() != d) throw std::invalid_argument("subresultant PRS: inputs must have the same degree d >= 1");
  if (!is_monic(a) || !is_monic(b)) throw std::invalid_argument("subresultant PRS: inputs must be monic");
  SubresTranscript t;
  t.degree = d;
  t.input_prec = std::min(min_abs_prec(a), min_abs_prec(b));
  t.steps.resize(static_cast<size_t>(d));

  const Ring& ring = a[0].ring();
  BallPoly prev = b;
  BallPoly cur = b - a;
  cur.coeffs().resize(static_cast<size_t>(d));
  cur = post(cur);
  Ball prev_lead = Ball::exact(ring, 1);
  t.steps[static_cast<size_t>(d - 1)] = make_step(cur, d - 1);
  for (int j = d - 1; j >= 1; --j) {
    const Ball lead = cur[static_cast<size_t>(j)];
    if (lead.is_known_zero()) {
      t.failure = SubresFailure{"principal subresultant has no known nonzero digit", j};
      return t;
    }
    BallPoly next = method == PremMethod::FlatSteps ? flat_steps(prev, cur, prev_lead, j)
                                                    : divide_all(run_prem(prev, cur, method), prev_lead * prev_lead);
    next = post(next);
    t.steps[static_cast<size_t>(j - 1)] = make_step(next, j - 1);
    prev = std::move(cur);
    cur = std::move(next);
    prev_lead = lead;
  }
  return t;
}

}  // namespace

EuclidResult extended_euclid(const BallPoly& a, const BallPoly& b) {
  if (a.empty() || b.empty()) throw ZeroPolynomial();
  const Ring& ring = a[0].ring();
  const BallPoly one{Ball::exact(ring, 1)};
  EuclidResult out;
  out.trace.push_back({a, one, BallPoly{}});
  out.trace.push_back({b, BallPoly{}, one});
  for (int k = 2;; ++k) {
    const EuclidStep& cur = out.trace[static_cast<size_t>(k - 1)];
    if (cur.s.empty() || all_known_zero(cur.s)) break;
    if (cur.s.lc().is_known_zero()) throw LeadingCoefficientUnknownZero(k);
    const EuclidStep& prev = out.trace[static_cast<size_t>(k - 2)];
    auto [q, r] = euclid_divrem(prev.s, cur.s);
    EuclidStep next{std::move(r), prev.u - q * cur.u, prev.v - q * cur.v};
    out.trace.push_back(std::move(next));
  }
  const EuclidStep& last = out.trace[out.trace.size() - 2];
  out.d = last.s;
  out.u = last.u;
  out.v = last.v;
  return out;
}

void SubresTranscript::ensure_complete() const {
  if (failure) throw NotNormal(failure->index);
}

bool SubresTranscript::has_step(int j) const {
  if (j < 0 || j >= degree) return false;
  if (!failure) return true;
  return j >= failure->index;
}

const SubresStep& SubresTranscript::step(int j) const {
  if (!has_step(j)) throw IncompleteTranscript();
  return steps[static_cast<size_t>(j)];
}

SubresTranscript prs_ball(const BallPoly& a, const BallPoly& b, PremMethod method) {
  return run_subres(a, b, method, [](const BallPoly& p) { return p; });
}

SubresTranscript prs_flat(const FlatPoly& a, const FlatPoly& b, PremMethod method) {
  return run_subres(a.balls(), b.balls(), method, [](const BallPoly& p) { return flatten(p).balls(); });
}

FloatSubres prs_float(const FloatPoly& a, const FloatPoly& b) {
  const int d = a.degree();
  if (d < 1 || b.degree() != d) throw std::invalid_argument("prs_float: inputs must have the same degree d >= 1");
  FloatSubres out;
  out.r.resize(static_cast<size_t>(d));
  FloatPoly prev = b;
  FloatPoly cur = b - a;
  cur.coeffs().resize(static_cast<size_t>(d));
  PadicFloat prev_lead = CoeffTraits<PadicFloat>::one_like(a[0]);
  out.r[static_cast<size_t>(d - 1)] = cur;
  for (int j = d - 1; j >= 1; --j) {
    const PadicFloat lead = cur[static_cast<size_t>(j)];
    if (lead.is_zero()) {
      out.failure = SubresFailure{"principal subresultant vanished", j};
      return out;
    }
    FloatPoly next = divide_all(prem(prev, cur), prev_lead * prev_lead);
    out.r[static_cast<size_t>(j - 1)] = next;
    prev = std::move(cur);
    cur = std::move(next);
    prev_lead = lead;
  }
  return out;
}

std::vector<int64_t> loss_bound(const SubresTranscript& t) {
  if (!t.complete()) throw IncompleteTranscript();
  const int d = t.degree;
  std::vector<int64_t> bound(static_cast<size_t>(d));
  int64_t defects = 0;
  for (int j = d - 1; j >= 0; --j) {
    const int64_t v_next = j + 1 < d ? t.step(j + 1).lead_val : 0;
    bound[static_cast<size_t>(j)] = t.input_prec + v_next - 2 * defects;
    defects += t.step(j).defect();
  }
  return bound;
}

int64_t predicted_total_loss(const SubresTranscript& t) {
  const auto bound = loss_bound(t);
  return t.input_prec - bound[0];
}

}  // namespace padicres
