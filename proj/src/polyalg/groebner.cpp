#include "mfields/polyalg.hpp"

#include "mfields/error.hpp"

#include <algorithm>

namespace mfields::polyalg {

namespace {

// f - c * m * g where c * m * lm(g) is the term of f at index pos; terms
// before pos are untouched.
void subtractMultiple(std::vector<Term>& f, std::size_t pos, const Rational& c, const Monomial& m, const Poly& g,
                      const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  for (std::size_t i = 0; i < pos; ++i) out.push_back(std::move(f[i]));
  std::size_t i = pos;
  const auto& gt = g.terms();
  std::size_t j = 0;
  while (i < f.size() && j < gt.size()) {
    const Monomial prod = gt[j].monomial * m;
    const int cmp = order.compare(f[i].monomial, prod);
    if (cmp > 0) {
      out.push_back(std::move(f[i++]));
    } else if (cmp < 0) {
      out.push_back({prod, -c * gt[j].coefficient});
      ++j;
    } else {
      Rational s = f[i].coefficient - c * gt[j].coefficient;
      if (sgn(s) != 0) out.push_back({prod, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(std::move(f[i]));
  for (; j < gt.size(); ++j) out.push_back({gt[j].monomial * m, -c * gt[j].coefficient});
  f = std::move(out);
}

int findReducer(const Monomial& m, const std::vector<const Poly*>& divisors) {
  int best = -1;
  for (std::size_t k = 0; k < divisors.size(); ++k) {
    const Poly& g = *divisors[k];
    if (!g.leadingMonomial().divides(m)) continue;
    if (best < 0 || g.size() < divisors[static_cast<std::size_t>(best)]->size()) best = static_cast<int>(k);
  }
  return best;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned sugar;
};

class Engine {
 public:
  Engine(const MonomialOrder& order, const GroebnerOptions& options) : order_(order), options_(options) {}

  void insert(Poly h, unsigned sugar) {
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(false);
    update(polys_.size() - 1);
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.sugar < b.sugar || (a.sugar == b.sugar && order_.compare(a.lcm, b.lcm) < 0)) best = k;
      }
      const Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      tick();
      processPair(p);
    }
  }

  std::vector<Poly> reducedBasis() {
    // Input generators are never top-reduced, so drop redundant leading terms.
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (!active_[k]) continue;
      bool redundant = false;
      for (std::size_t l = 0; l < polys_.size() && !redundant; ++l) {
        if (l == k || !active_[l]) continue;
        const Monomial& a = polys_[l].leadingMonomial();
        const Monomial& b = polys_[k].leadingMonomial();
        if (a.divides(b) && (!(a == b) || l < k)) redundant = true;
      }
      if (!redundant) idx.push_back(k);
    }
    std::vector<Poly> out;
    for (std::size_t k : idx) {
      std::vector<const Poly*> others;
      for (std::size_t l : idx)
        if (l != k) others.push_back(&polys_[l]);
      out.push_back(monic(reduce(polys_[k], others, 1)));
    }
    std::sort(out.begin(), out.end(),
              [&](const Poly& a, const Poly& b) { return order_.compare(a.leadingMonomial(), b.leadingMonomial()) < 0; });
    return out;
  }

  // Reduces every term from index `from` on.
  Poly reduce(const Poly& f, const std::vector<const Poly*>& divisors, std::size_t from) {
    std::vector<Term> terms = f.terms();
    std::size_t pos = std::min(from, terms.size());
    while (pos < terms.size()) {
      const int k = findReducer(terms[pos].monomial, divisors);
      if (k < 0) {
        ++pos;
        continue;
      }
      tick();
      const Poly& g = *divisors[static_cast<std::size_t>(k)];
      const Rational c = terms[pos].coefficient / g.leadingCoefficient();
      const Monomial m = terms[pos].monomial / g.leadingMonomial();
      subtractMultiple(terms, pos, c, m, g, order_);
    }
    return Poly::fromSorted(std::move(terms));
  }

 private:
  void tick() {
    if (++steps_ > options_.reductionLimit)
      throw ResourceError("Groebner basis computation exceeded the reduction budget of " +
                          std::to_string(options_.reductionLimit) + " steps");
  }

  void processPair(const Pair& p) {
    const Poly& gi = polys_[p.i];
    const Poly& gj = polys_[p.j];
    const Monomial mi = p.lcm / gi.leadingMonomial();
    const Monomial mj = p.lcm / gj.leadingMonomial();
    std::vector<Term> s = multiplyTerm(gi, mi, 1 / gi.leadingCoefficient()).terms();
    subtractMultiple(s, 0, 1 / gj.leadingCoefficient(), mj, gj, order_);
    unsigned sugar = p.sugar;

    std::vector<const Poly*> divisors;
    std::vector<std::size_t> divisorIndex;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) {
        divisors.push_back(&polys_[k]);
        divisorIndex.push_back(k);
      }
    while (!s.empty()) {
      const int k = findReducer(s.front().monomial, divisors);
      if (k < 0) break;
      tick();
      const Poly& g = *divisors[static_cast<std::size_t>(k)];
      const Monomial m = s.front().monomial / g.leadingMonomial();
      sugar = std::max(sugar, sugar_[divisorIndex[static_cast<std::size_t>(k)]] + m.degree());
      const Rational c = s.front().coefficient / g.leadingCoefficient();
      subtractMultiple(s, 0, c, m, g, order_);
    }
    if (s.empty()) return;
    insert(monic(Poly::fromSorted(std::move(s))), sugar);
  }

  unsigned pairSugar(std::size_t i, std::size_t j, const Monomial& lcm) const {
    const unsigned a = sugar_[i] + lcm.degree() - polys_[i].leadingMonomial().degree();
    const unsigned b = sugar_[j] + lcm.degree() - polys_[j].leadingMonomial().degree();
    return std::max(a, b);
  }

  // Gebauer-Moeller installation of the new element h.
  void update(std::size_t h) {
    const Monomial& lh = polys_[h].leadingMonomial();
    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> c;
    for (std::size_t g = 0; g < polys_.size(); ++g)
      if (active_[g]) {
        const Monomial& lg = polys_[g].leadingMonomial();
        c.push_back({g, Monomial::lcm(lh, lg), lh.coprime(lg)});
      }

    std::vector<Candidate> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = c[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l)
          if (c[l].lcm.divides(c[k].lcm)) keep = false;
        for (std::size_t l = 0; l < d.size() && keep; ++l)
          if (d[l].lcm.divides(c[k].lcm)) keep = false;
      }
      if (keep) d.push_back(c[k]);
    }

    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + d.size());
    for (Pair& p : pairs_) {
      if (lh.divides(p.lcm)) {
        const Monomial li = Monomial::lcm(polys_[p.i].leadingMonomial(), lh);
        const Monomial lj = Monomial::lcm(polys_[p.j].leadingMonomial(), lh);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      kept.push_back(std::move(p));
    }
    for (Candidate& e : d)
      if (!e.coprime) kept.push_back({e.g, h, e.lcm, pairSugar(e.g, h, e.lcm)});
    pairs_ = std::move(kept);

    for (std::size_t g = 0; g < polys_.size(); ++g)
      if (active_[g] && lh.divides(polys_[g].leadingMonomial())) active_[g] = false;
    active_[h] = true;
  }

  const MonomialOrder& order_;
  const GroebnerOptions& options_;
  std::vector<Poly> polys_;
  std::vector<unsigned> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::uint64_t steps_ = 0;
};

}  // namespace

std::vector<Poly> buchberger(const std::vector<Poly>& generators, const MonomialOrder& order,
                             const GroebnerOptions& options) {
  Engine engine(order, options);
  std::vector<Poly> sorted;
  for (const Poly& g : generators) {
    Poly f = g.sortedBy(order);
    if (!f.isZero()) sorted.push_back(monic(f));
  }
  for (Poly& f : sorted) {
    const unsigned d = f.degree();
    engine.insert(std::move(f), d);
  }
  engine.run();
  return engine.reducedBasis();
}

Poly normalForm(const Poly& f, const std::vector<Poly>& divisors, const MonomialOrder& order) {
  GroebnerOptions unlimited;
  unlimited.reductionLimit = UINT64_MAX;
  Engine engine(order, unlimited);
  std::vector<const Poly*> ptrs;
  for (const Poly& g : divisors)
    if (!g.isZero()) ptrs.push_back(&g);
  return engine.reduce(f, ptrs, 0);
}

Ideal::Ideal(std::size_t numVariables, std::vector<Poly> generators)
    : numVariables_(numVariables), cache_(std::make_shared<Cache>()) {
  if (numVariables > kMaxVariables) throw ResourceError("too many variables (at most 64 are supported)");
  const MonomialOrder grevlex = MonomialOrder::grevlex();
  for (Poly& g : generators) {
    if (g.isZero()) continue;
    if (numVariables_ < 64 && (g.support() >> numVariables_) != 0)
      throw InputError("ideal generator uses a variable outside the ring");
    generators_.push_back(g.sortedBy(grevlex));
  }
}

const std::vector<Poly>& Ideal::groebnerBasis(const MonomialOrder& order, const GroebnerOptions& options) const {
  const std::string key = order.description();
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return it->second;
  }
  std::vector<Poly> basis = buchberger(generators_, order, options);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->bases.emplace(key, std::move(basis)).first->second;
}

Ideal canonicalIdeal(const Ideal& i, const GroebnerOptions& options) {
  return Ideal(i.numVariables(), i.groebnerBasis(MonomialOrder::grevlex(), options));
}

Ideal initialIdeal(const Ideal& i, const RatVector& w, const GroebnerOptions& options) {
  if (w.size() != i.numVariables()) throw InputError("initialIdeal: weight length differs from the variable count");
  const std::vector<Poly>& basis = i.groebnerBasis(MonomialOrder::weight(w), options);
  std::vector<Poly> forms;
  for (const Poly& g : basis) forms.push_back(initialForm(g, w));
  return Ideal(i.numVariables(), std::move(forms));
}

bool idealEquals(const Ideal& a, const Ideal& b, const MonomialOrder& order, const GroebnerOptions& options) {
  if (a.numVariables() != b.numVariables()) throw InputError("idealEquals: ideals live in different rings");
  return a.groebnerBasis(order, options) == b.groebnerBasis(order, options);
}

bool idealContains(const Ideal& a, const Ideal& b, const MonomialOrder& order, const GroebnerOptions& options) {
  if (a.numVariables() != b.numVariables()) throw InputError("idealContains: ideals live in different rings");
  const std::vector<Poly>& basis = a.groebnerBasis(order, options);
  for (const Poly& g : b.generators())
    if (!normalForm(g.sortedBy(order), basis, order).isZero()) return false;
  return true;
}

}  // namespace mfields::polyalg
