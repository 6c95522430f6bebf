#include <algorithm>
#include <stdexcept>

#include "padicres/errors.hpp"
#include "padicres/prs.hpp"
#include "padicres/rng.hpp"
#include "prs_detail.hpp"

namespace padicres {

using namespace detail;

StabilizedResult stabilized_prs(const BallPoly& a, const BallPoly& b, int64_t prec, const StabilizedOptions& opts) {
  if (prec < 1) throw std::invalid_argument("stabilized_prs: precision must be positive");
  const int da = a.degree();
  const int d = b.degree();
  if (d < 1) throw std::invalid_argument("stabilized_prs: deg B must be at least 1");
  if (opts.allow_unit_leading) {
    if (da < d) throw std::invalid_argument("stabilized_prs: deg A < deg B");
    if (b.lc().is_known_zero() || b.lc().valuation() != 0) {
      throw std::invalid_argument("stabilized_prs: leading coefficient of B is not a unit");
    }
  } else if (da != d || !is_monic(a) || !is_monic(b)) {
    throw std::invalid_argument("stabilized_prs: inputs must be monic of the same degree");
  }
  if (std::min(min_abs_prec(a), min_abs_prec(b)) < prec) {
    throw std::invalid_argument("stabilized_prs: inputs are not known at the requested precision");
  }
  const Ring& ring = b[0].ring();
  const int64_t guard = (prec + 1) / 2;

  StabilizedResult out;
  out.degree = d;
  out.prec = prec;
  out.r.resize(static_cast<size_t>(d));
  out.lead_val.assign(static_cast<size_t>(d), 0);
  out.lift.assign(static_cast<size_t>(d), 0);
  out.max_working_prec = prec;

  BallPoly prev = truncate_all(b, prec);
  BallPoly cur;
  // The first step divides by r_d^2 = 1 in the monic case and by
  // lc(B)^(deg A - deg B + 1) otherwise.
  const bool extended = opts.allow_unit_leading && !(da == d && is_monic(a) && is_monic(b));
  const int delta = da - d;
  if (extended) {
    cur = scale(truncate_all(a, prec) % prev, power(-prev.lc(), delta + 1));
  } else {
    cur = truncate_all(b, prec) - truncate_all(a, prec);
    cur.coeffs().resize(static_cast<size_t>(d));
  }
  out.r[static_cast<size_t>(d - 1)] = truncate_all(cur, prec);

  int64_t v_next = 0;
  for (int j = d - 1; j >= 1; --j) {
    const int64_t v = cur[static_cast<size_t>(j)].valuation();
    out.lead_val[static_cast<size_t>(j)] = v;
    if (v >= guard) throw HypothesisHViolated(j, v, prec);
    const int64_t m = prec + 2 * v + 2 * v_next;
    out.lift[static_cast<size_t>(j)] = m - prec;
    out.max_working_prec = std::max(out.max_working_prec, m);
    prev = set_precision(prev, m, opts.random_lift);
    cur = set_precision(cur, m, opts.random_lift);
    Ball divisor = prev[static_cast<size_t>(j + 1)] * prev[static_cast<size_t>(j + 1)];
    if (j == d - 1) divisor = extended ? power(prev.lc(), delta + 1) : Ball::exact(ring, 1);
    BallPoly next = divide_all(run_prem(prev, cur, opts.method), divisor);
    if (min_abs_prec(next) < prec) out.shortfall = true;
    out.r[static_cast<size_t>(j - 1)] = truncate_all(next, prec);
    prev = std::move(cur);
    cur = std::move(next);
    v_next = v;
  }
  out.lead_val[0] = out.r[0][0].valuation();
  return out;
}

}  // namespace padicres
