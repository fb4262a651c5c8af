#include "mfields/polyalg.hpp"

#include "mfields/error.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace mfields::polyalg {

// ---- Monomial ----

Monomial Monomial::fromExponents(const std::vector<int>& exponents) {
  if (exponents.size() > kMaxVariables) throw ResourceError("too many variables (at most 64 are supported)");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > std::numeric_limits<std::uint16_t>::max())
      throw InputError("monomial exponent out of range");
    m.exps_[i] = static_cast<std::uint16_t>(exponents[i]);
    m.degree_ += static_cast<unsigned>(exponents[i]);
    if (exponents[i]) m.support_ |= std::uint64_t{1} << i;
  }
  return m;
}

Monomial Monomial::variable(std::size_t i, unsigned power) {
  if (i >= kMaxVariables) throw ResourceError("too many variables (at most 64 are supported)");
  Monomial m;
  if (power == 0) return m;
  m.exps_[i] = static_cast<std::uint16_t>(power);
  m.degree_ = power;
  m.support_ = std::uint64_t{1} << i;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
  for (std::uint64_t s = support_; s; s &= s - 1) {
    const int i = __builtin_ctzll(s);
    if (exps_[static_cast<std::size_t>(i)] > other.exps_[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.support_ = support_ | other.support_;
  m.degree_ = degree_ + other.degree_;
  for (std::uint64_t s = m.support_; s; s &= s - 1) {
    const std::size_t i = static_cast<std::size_t>(__builtin_ctzll(s));
    const unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw ResourceError("monomial exponent overflow");
    m.exps_[i] = static_cast<std::uint16_t>(e);
  }
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  m.degree_ = degree_ - other.degree_;
  for (std::uint64_t s = support_; s; s &= s - 1) {
    const std::size_t i = static_cast<std::size_t>(__builtin_ctzll(s));
    m.exps_[i] = static_cast<std::uint16_t>(exps_[i] - other.exps_[i]);
    if (m.exps_[i]) m.support_ |= std::uint64_t{1} << i;
  }
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.support_ = a.support_ | b.support_;
  for (std::uint64_t s = m.support_; s; s &= s - 1) {
    const std::size_t i = static_cast<std::size_t>(__builtin_ctzll(s));
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

Monomial Monomial::shifted(int offset) const {
  Monomial m;
  for (std::uint64_t s = support_; s; s &= s - 1) {
    const int i = __builtin_ctzll(s);
    const int j = i + offset;
    if (j < 0 || j >= static_cast<int>(kMaxVariables)) throw ResourceError("variable shift out of range");
    m.exps_[static_cast<std::size_t>(j)] = exps_[static_cast<std::size_t>(i)];
    m.support_ |= std::uint64_t{1} << j;
  }
  m.degree_ = degree_;
  return m;
}

std::vector<int> Monomial::exponents(std::size_t numVariables) const {
  std::vector<int> e(numVariables);
  for (std::size_t i = 0; i < numVariables; ++i) e[i] = exps_[i];
  return e;
}

// ---- MonomialOrder ----

MonomialOrder MonomialOrder::grevlex() { return MonomialOrder(); }

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  return o;
}

MonomialOrder MonomialOrder::weight(const RatVector& w, const MonomialOrder& tieBreak, const std::vector<long>& grading) {
  if (w.size() > kMaxVariables) throw ResourceError("weight vector longer than the supported variable count");
  MonomialOrder o;
  o.kind_ = Kind::Weight;
  const IntVector scaled = [&] {
    // Positive rescaling to integers leaves the order unchanged.
    Integer den = 1;
    for (const Rational& q : w) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    IntVector out;
    for (const Rational& q : w) out.push_back(q.get_num() * (den / q.get_den()));
    return out;
  }();
  for (const Integer& x : scaled) {
    if (!x.fits_slong_p() || abs(x) > Integer(1) << 40) throw InputError("weight entry too large for a monomial order");
    o.weights_.push_back(x.get_si());
  }
  o.grading_ = grading;
  o.inner_ = {tieBreak};
  return o;
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> sizes, std::vector<MonomialOrder> inner) {
  if (sizes.size() != inner.size()) throw InputError("block order needs one inner order per block");
  std::size_t total = 0;
  for (std::size_t s : sizes) total += s;
  if (total > kMaxVariables) throw ResourceError("block order covers too many variables");
  MonomialOrder o;
  o.kind_ = Kind::Block;
  o.blocks_ = std::move(sizes);
  o.inner_ = std::move(inner);
  return o;
}

int MonomialOrder::compareRange(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) const {
  switch (kind_) {
    case Kind::Grevlex: {
      if (begin == 0 && end == kMaxVariables) {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (std::uint64_t s = a.support() | b.support(); s;) {
          const std::size_t i = static_cast<std::size_t>(63 - __builtin_clzll(s));
          if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
          s &= ~(std::uint64_t{1} << i);
        }
        return 0;
      }
      long da = 0, db = 0;
      for (std::size_t i = begin; i < end; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da < db ? -1 : 1;
      for (std::size_t i = end; i-- > begin;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
    }
    case Kind::Lex:
      for (std::size_t i = begin; i < end; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case Kind::Weight: {
      long ga = 0, gb = 0;
      for (std::size_t i = begin; i < end; ++i) {
        const long g = grading_.empty() ? 1 : (i - begin < grading_.size() ? grading_[i - begin] : 0);
        ga += g * a[i];
        gb += g * b[i];
      }
      if (ga != gb) return ga < gb ? -1 : 1;
      __int128 wa = 0, wb = 0;
      for (std::size_t i = begin; i < end && i - begin < weights_.size(); ++i) {
        wa += static_cast<__int128>(weights_[i - begin]) * a[i];
        wb += static_cast<__int128>(weights_[i - begin]) * b[i];
      }
      if (wa != wb) return wa < wb ? 1 : -1;
      return inner_.front().compareRange(a, b, begin, end);
    }
    case Kind::Block: {
      std::size_t start = begin;
      for (std::size_t k = 0; k < blocks_.size(); ++k) {
        const int c = inner_[k].compareRange(a, b, start, start + blocks_[k]);
        if (c != 0) return c;
        start += blocks_[k];
      }
      // Variables past the last block are compared by grevlex.
      return start < end ? MonomialOrder().compareRange(a, b, start, end) : 0;
    }
  }
  return 0;
}

std::string MonomialOrder::description() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Grevlex:
      os << "grevlex";
      break;
    case Kind::Lex:
      os << "lex";
      break;
    case Kind::Weight:
      os << "weight(";
      for (std::size_t i = 0; i < weights_.size(); ++i) os << (i ? "," : "") << weights_[i];
      os << ";";
      for (std::size_t i = 0; i < grading_.size(); ++i) os << (i ? "," : "") << grading_[i];
      os << ";" << inner_.front().description() << ")";
      break;
    case Kind::Block:
      os << "block(";
      for (std::size_t k = 0; k < blocks_.size(); ++k) os << (k ? "," : "") << blocks_[k] << ":" << inner_[k].description();
      os << ")";
      break;
  }
  return os.str();
}

// ---- Poly ----

Poly::Poly(std::vector<Term> terms, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  for (Term& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coefficient += t.coefficient;
      if (sgn(terms_.back().coefficient) == 0) terms_.pop_back();
    } else if (sgn(t.coefficient) != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Poly Poly::fromMonomial(const Monomial& m, Rational c) {
  Poly p;
  if (sgn(c) != 0) p.terms_.push_back({m, std::move(c)});
  return p;
}

Poly Poly::constant(Rational c) { return fromMonomial(Monomial(), std::move(c)); }

Poly Poly::fromSorted(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::uint64_t Poly::support() const {
  std::uint64_t s = 0;
  for (const Term& t : terms_) s |= t.monomial.support();
  return s;
}

namespace {

// Merge of two sorted term lists, b scaled by sign.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = order.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial, sign > 0 ? b[j].coefficient : Rational(-b[j].coefficient)});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coefficient + b[j].coefficient) : Rational(a[i].coefficient - b[j].coefficient);
      if (sgn(s) != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial, sign > 0 ? b[j].coefficient : Rational(-b[j].coefficient)});
  return out;
}

}  // namespace

Poly add(const Poly& a, const Poly& b, const MonomialOrder& order) {
  return Poly::fromSorted(merge(a.terms(), b.terms(), 1, order));
}

Poly subtract(const Poly& a, const Poly& b, const MonomialOrder& order) {
  return Poly::fromSorted(merge(a.terms(), b.terms(), -1, order));
}

Poly multiply(const Poly& a, const Poly& b, const MonomialOrder& order) {
  if (a.isZero() || b.isZero()) return Poly();
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& large = a.size() <= b.size() ? b : a;
  Poly acc;
  for (const Term& t : small.terms()) acc = add(acc, multiplyTerm(large, t.monomial, t.coefficient), order);
  return acc;
}

Poly multiplyTerm(const Poly& f, const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return Poly();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) out.push_back({t.monomial * m, t.coefficient * c});
  return Poly::fromSorted(std::move(out));
}

Poly scale(const Poly& f, const Rational& c) { return multiplyTerm(f, Monomial(), c); }

Poly monic(const Poly& f) {
  if (f.isZero() || f.leadingCoefficient() == 1) return f;
  return scale(f, 1 / f.leadingCoefficient());
}

Poly substitute(const Poly& f, const std::vector<Poly>& images, const MonomialOrder& order) {
  Poly acc;
  std::vector<std::vector<Poly>> powers(images.size());
  for (const Term& t : f.terms()) {
    Poly product = Poly::constant(t.coefficient);
    for (std::uint64_t s = t.monomial.support(); s; s &= s - 1) {
      const std::size_t i = static_cast<std::size_t>(__builtin_ctzll(s));
      if (i >= images.size()) throw InputError("substitute: missing image for a variable");
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(Poly::constant(1));
      while (cache.size() <= t.monomial[i]) cache.push_back(multiply(cache.back(), images[i], order));
      product = multiply(product, cache[t.monomial[i]], order);
    }
    acc = add(acc, product, order);
  }
  return acc;
}

Poly shiftVariables(const Poly& f, int offset, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) out.push_back({t.monomial.shifted(offset), t.coefficient});
  return Poly(std::move(out), order);
}

Poly initialForm(const Poly& f, const RatVector& w) {
  if (f.isZero()) return f;
  std::vector<Rational> weights;
  weights.reserve(f.size());
  for (const Term& t : f.terms()) {
    Rational s = 0;
    for (std::uint64_t b = t.monomial.support(); b; b &= b - 1) {
      const std::size_t i = static_cast<std::size_t>(__builtin_ctzll(b));
      if (i < w.size()) s += w[i] * t.monomial[i];
    }
    weights.push_back(std::move(s));
  }
  const Rational best = *std::min_element(weights.begin(), weights.end());
  std::vector<Term> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (weights[i] == best) out.push_back(f.terms()[i]);
  return Poly::fromSorted(std::move(out));
}

std::string toString(const Poly& f, const std::vector<std::string>& labels) {
  if (f.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : f.terms()) {
    const bool negative = sgn(t.coefficient) < 0;
    const Rational magnitude = abs(t.coefficient);
    if (negative) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    const bool unit = magnitude == 1;
    if (!unit || t.monomial.isOne()) os << magnitude.get_str();
    for (std::uint64_t s = t.monomial.support(); s; s &= s - 1) {
      const std::size_t i = static_cast<std::size_t>(__builtin_ctzll(s));
      os << (i < labels.size() ? labels[i] : "v_" + std::to_string(i));
      if (t.monomial[i] > 1) os << '^' << t.monomial[i];
    }
  }
  return os.str();
}

}  // namespace mfields::polyalg
