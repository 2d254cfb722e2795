#include "newmac/roots.hpp"

#include <algorithm>
#include <memory>

namespace newmac {

bool operator<(const Bound& a, const Bound& b) {
  using K = Bound::Kind;
  if (a.kind() == K::Finite && b.kind() == K::Finite) return a.value() < b.value();
  auto rank = [](K k) { return k == K::NegInf ? 0 : (k == K::Finite ? 1 : 2); };
  return rank(a.kind()) < rank(b.kind());
}

bool operator==(const Bound& a, const Bound& b) {
  if (a.kind() != b.kind()) return false;
  return a.kind() != Bound::Kind::Finite || a.value() == b.value();
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  std::vector<Polynomial> chain{p};
  Polynomial d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(std::move(d));
  while (true) {
    const std::size_t m = chain.size();
    Polynomial r = chain[m - 2].divmod(chain[m - 1]).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace {

int sign_at(const Polynomial& p, const Bound& b) {
  if (p.is_zero()) return 0;
  switch (b.kind()) {
    case Bound::Kind::Finite:
      return p.eval(b.value()).sign();
    case Bound::Kind::PosInf:
      return p.leading_coeff().sign();
    case Bound::Kind::NegInf: {
      const int s = p.leading_coeff().sign();
      return (*p.degree() % 2 == 0) ? s : -s;
    }
  }
  return 0;
}

// Sign variations with zero entries dropped; see count_real_roots.
int variations(const std::vector<Polynomial>& chain, const Bound& b) {
  int count = 0, prev = 0;
  for (const Polynomial& q : chain) {
    const int s = sign_at(q, b);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

bool is_squarefree(const Polynomial& p) {
  return *poly_gcd(p, p.derivative()).degree() == 0;
}

} // namespace

Natural count_real_roots(const Polynomial& p, const Bound& lo, const Bound& hi) {
  if (p.is_zero()) throw DomainError("root counting requires a nonzero polynomial");
  if (hi < lo) throw DomainError("root counting range has lo > hi");
  if (!is_squarefree(p)) throw DomainError("root counting requires a squarefree polynomial");
  if (lo == hi || *p.degree() == 0) return Natural(0ul);
  const auto chain = sturm_sequence(p);
  const int v = variations(chain, lo) - variations(chain, hi);
  return Natural(Integer(v));
}

Natural count_real_roots(const Polynomial& p) {
  return count_real_roots(p, Bound::neg_inf(), Bound::pos_inf());
}

SquarefreeDecomposition squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  SquarefreeDecomposition out;
  out.leading = p.leading_coeff();
  if (*p.degree() == 0) return out;

  const Polynomial q = p.monic();
  const Polynomial g = poly_gcd(q, q.derivative());
  if (*g.degree() == 0) {
    out.factors.push_back({q, 1});
    return out;
  }
  // Yun's algorithm.
  Polynomial b = q.divide_exact(g);
  Polynomial c = q.derivative().divide_exact(g);
  Polynomial d = c - b.derivative();
  for (long i = 1; *b.degree() > 0; ++i) {
    const Polynomial a = poly_gcd(b, d);
    if (*a.degree() > 0) out.factors.push_back({a, i});
    b = b.divide_exact(a);
    c = d.divide_exact(a);
    d = c - b.derivative();
  }
  return out;
}

Rational root_bound(const Polynomial& p) {
  if (p.is_zero() || *p.degree() < 1)
    throw DomainError("root bound requires degree >= 1");
  const Rational lead = p.leading_coeff().abs();
  Rational m(0);
  for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
    Rational q = p.coeffs()[i].abs() / lead;
    if (q > m) m = std::move(q);
  }
  return Rational(1) + m;
}

long RootIsolation::total_multiplicity() const {
  long total = 0;
  for (const auto& e : intervals) total += e.multiplicity;
  return total;
}

RootInterval refine_root_interval(const Polynomial& g, RootInterval e,
                                  const Rational& width) {
  if (e.is_point()) return e;
  int slo = g.eval(e.lo).sign();
  const Rational half(Integer(1), Integer(2));
  while (e.hi - e.lo > width) {
    const Rational mid = (e.lo + e.hi) * half;
    const int sm = g.eval(mid).sign();
    if (sm == 0) {
      e.lo = mid;
      e.hi = mid;
      break;
    }
    if (sm == slo) {
      e.lo = mid;
    } else {
      e.hi = mid;
    }
  }
  return e;
}

namespace {

struct WorkEntry {
  RootInterval iv;
  std::shared_ptr<const Polynomial> g; // refinement polynomial; null for points
};

void bisect_once(WorkEntry& w) {
  if (w.iv.is_point()) return;
  const Rational mid = (w.iv.lo + w.iv.hi) * Rational(Integer(1), Integer(2));
  const int sm = w.g->eval(mid).sign();
  if (sm == 0) {
    w.iv.lo = mid;
    w.iv.hi = mid;
    w.g.reset();
    return;
  }
  if (sm == w.g->eval(w.iv.lo).sign()) {
    w.iv.lo = mid;
  } else {
    w.iv.hi = mid;
  }
}

// Isolates the roots of squarefree g inside (lo, hi); both endpoints are
// guaranteed non-roots by the callers, and that invariant is preserved:
// subdivision only ever splits at non-root midpoints (a root midpoint is
// peeled off as an exact point and the quotient handled recursively).
void isolate_range(const std::shared_ptr<const Polynomial>& g,
                   const std::vector<Polynomial>& chain, const Rational& lo,
                   const Rational& hi, int vlo, int vhi, const Rational& width,
                   std::vector<WorkEntry>& out) {
  const int count = vlo - vhi;
  if (count <= 0) return;
  if (count == 1) {
    RootInterval e = refine_root_interval(*g, RootInterval{lo, hi, 1}, width);
    out.push_back({e, e.is_point() ? nullptr : g});
    return;
  }
  const Rational mid = (lo + hi) * Rational(Integer(1), Integer(2));
  if (!g->eval(mid).is_zero()) {
    const int vm = variations(chain, Bound::at(mid));
    isolate_range(g, chain, lo, mid, vlo, vm, width, out);
    isolate_range(g, chain, mid, hi, vm, vhi, width, out);
    return;
  }
  // The midpoint is an exact rational root: record it and deflate.
  out.push_back({RootInterval{mid, mid, 1}, nullptr});
  const Polynomial linear(std::vector<Rational>{-mid, Rational(1)});
  auto q = std::make_shared<const Polynomial>(g->divide_exact(linear));
  if (*q->degree() == 0) return;
  std::vector<WorkEntry> sub;
  const auto qchain = sturm_sequence(*q);
  isolate_range(q, qchain, lo, hi, variations(qchain, Bound::at(lo)),
                variations(qchain, Bound::at(hi)), width, sub);
  for (auto& w : sub) {
    // Keep the recorded point outside the quotient's intervals.
    while (!w.iv.is_point() && w.iv.lo < mid && mid < w.iv.hi) bisect_once(w);
    out.push_back(std::move(w));
  }
}

void isolate_squarefree(const Polynomial& gin, const Rational& width, long mult,
                        std::vector<WorkEntry>& out) {
  const long d = *gin.degree();
  if (d == 0) return;
  if (d == 1) {
    const Rational r = -gin.coeff(0) / gin.coeff(1);
    out.push_back({RootInterval{r, r, mult}, nullptr});
    return;
  }
  auto g = std::make_shared<const Polynomial>(gin);
  const Rational B = root_bound(gin);
  const auto chain = sturm_sequence(gin);
  std::vector<WorkEntry> found;
  isolate_range(g, chain, -B, B, variations(chain, Bound::at(-B)),
                variations(chain, Bound::at(B)), width, found);
  for (auto& w : found) {
    w.iv.multiplicity = mult;
    out.push_back(std::move(w));
  }
}

} // namespace

RootIsolation isolate_real_roots(const Polynomial& p, const Rational& width) {
  if (p.is_zero()) throw DomainError("root isolation requires a nonzero polynomial");
  if (width.sign() <= 0) throw DomainError("isolation width must be positive");

  const auto dec = squarefree_decomposition(p);
  std::vector<WorkEntry> work;
  for (const auto& f : dec.factors)
    isolate_squarefree(f.factor, width, f.multiplicity, work);

  // Roots of distinct squarefree factors are distinct, but their isolating
  // intervals may overlap; shrink overlapping pairs until all entries are
  // pairwise disjoint (points included).
  const auto lt = [](const WorkEntry& a, const WorkEntry& b) {
    return a.iv.lo < b.iv.lo || (a.iv.lo == b.iv.lo && a.iv.hi < b.iv.hi);
  };
  bool dirty = true;
  while (dirty) {
    dirty = false;
    std::sort(work.begin(), work.end(), lt);
    for (std::size_t i = 0; i < work.size(); ++i) {
      for (std::size_t j = i + 1; j < work.size(); ++j) {
        WorkEntry& a = work[i];
        WorkEntry& b = work[j];
        bool overlap;
        if (a.iv.is_point() && b.iv.is_point()) {
          overlap = a.iv.lo == b.iv.lo;
          if (overlap)
            throw DomainError("internal error: duplicate exact root during isolation");
        } else if (a.iv.is_point()) {
          overlap = b.iv.lo < a.iv.lo && a.iv.lo < b.iv.hi;
        } else if (b.iv.is_point()) {
          overlap = a.iv.lo < b.iv.lo && b.iv.lo < a.iv.hi;
        } else {
          overlap = std::max(a.iv.lo, b.iv.lo) < std::min(a.iv.hi, b.iv.hi);
        }
        if (overlap) {
          bisect_once(a);
          bisect_once(b);
          dirty = true;
        }
      }
    }
  }

  RootIsolation out;
  out.intervals.reserve(work.size());
  for (auto& w : work) out.intervals.push_back(w.iv);
  std::sort(out.intervals.begin(), out.intervals.end(),
            [](const RootInterval& a, const RootInterval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  return out;
}

RealRootednessReport check_real_rooted(const Polynomial& p, const Rational& width) {
  if (p.is_zero()) throw DomainError("reality check requires a nonzero polynomial");
  RealRootednessReport rep;
  rep.real_rooted = true;
  const auto dec = squarefree_decomposition(p);
  for (const auto& f : dec.factors) {
    const long d = *f.factor.degree();
    const long rc = static_cast<long>(count_real_roots(f.factor).to_ulong());
    rep.factors.push_back({f.factor, f.multiplicity, d, rc});
    if (rc != d) rep.real_rooted = false;
  }
  rep.roots = isolate_real_roots(p, width);
  return rep;
}

} // namespace newmac
