// One line per acceptance criterion. Each check runs in a child process so a
// runaway computation is killed at its time limit.

#include "mfields/error.hpp"
#include "mfields/matching_field.hpp"
#include "mfields/pluecker.hpp"
#include "mfields/polyalg.hpp"
#include "mfields/tropmatroid.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>

using namespace mfields;
using namespace mfields::pluecker;
using polyalg::Ideal;
using polyalg::Monomial;
using polyalg::MonomialOrder;
using polyalg::Poly;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Records the first failed expectation.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && v_.pass) {
      v_.pass = false;
      v_.detail = what;
    }
  }
  void note(const std::string& text) {
    if (v_.pass) v_.detail += (v_.detail.empty() ? "" : "; ") + text;
  }
  Verdict verdict() const { return v_; }

 private:
  Verdict v_;
};

std::string render(const Ideal& i, const std::vector<std::string>& labels) {
  std::string out;
  for (const Poly& g : i.generators()) out += (out.empty() ? "" : ", ") + polyalg::toString(g, labels);
  return out;
}

std::string squash(const std::string& s) { return std::regex_replace(s, std::regex("\\s+"), " "); }

RatVector rational(const IntVector& v) {
  RatVector out;
  for (const Integer& x : v) out.emplace_back(x);
  return out;
}

MatchingField hexagonal() {
  return MatchingField::fromWeightMatrix(
      WeightMatrix::fromRows({{0, 0, 0, 0, 0, 0}, {18, 3, 15, 6, 9, 12}, {35, 28, 21, 14, 7, 0}}));
}

Subset digits(const std::string& s) {
  Subset out;
  for (char c : s) out.push_back(c - '0');
  return out;
}

std::set<Subset> family(std::initializer_list<const char*> xs) {
  std::set<Subset> out;
  for (const char* x : xs) out.insert(digits(x));
  return out;
}

Verdict grassmannian24() {
  Checker c;
  const auto labels = plueckerLabels({2}, 4);
  const Ideal full = plueckerIdeal({2}, 4);
  c.expect(render(full, labels) == "p_(2,3)p_(1,4)-p_(1,3)p_(2,4)+p_(1,2)p_(3,4)", "Pluecker ideal " + render(full, labels));
  const MatchingField d = MatchingField::diagonal(2, 4);
  const Ideal toric = matchingFieldIdeal(d);
  c.expect(render(toric, labels) == "p_(2,3)p_(1,4)-p_(1,3)p_(2,4)", "matching field ideal " + render(toric, labels));
  c.expect(polyalg::idealEquals(polyalg::initialIdeal(full, rational(plueckerWeight(d))), toric), "initial ideal differs");
  for (ToricMethod m : {ToricMethod::Groebner, ToricMethod::Volume, ToricMethod::Subduction})
    c.expect(isToricDegeneration(d, m), "not toric by " + toString(m));
  return c.verdict();
}

Verdict diagonalFields() {
  Checker c;
  const std::string o3 =
      "{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 5}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5}, "
      "{1, 2, 6}, {1, 3, 6}, {2, 3, 6}, {1, 4, 6}, {2, 4, 6}, {3, 4, 6}, {1, 5, 6}, {2, 5, 6}, {3, 5, 6}, {4, 5, 6}}";
  const std::string o5 =
      "{{{1}, {2}, {3}, {4}, {5}, {6}}, \n"
      "    {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}, {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}}, \n"
      "    {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 5}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5}, "
      "{1, 2, 6}, {1, 3, 6}, {2, 3, 6}, {1, 4, 6}, {2, 4, 6}, {3, 4, 6}, {1, 5, 6}, {2, 5, 6}, {3, 5, 6}, {4, 5, 6}}}";
  const MatchingField d = MatchingField::diagonal(3, 6);
  c.expect(formatTuples(d) == o3, "Gr(3,6) tuples " + formatTuples(d));
  c.expect(d.description() == "Grassmannian Matching Field for Gr(3, 6)", d.description());
  const MatchingField f = MatchingField::diagonal(std::vector<int>{1, 2, 3}, 6);
  c.expect(squash(formatTuples(f)) == squash(o5), "Fl(1,2,3;6) tuples " + formatTuples(f));
  c.expect(f.description() == "Flag Matching Field for Fl(1, 2, 3; 6)", f.description());

  // Sorted tuple i_1 < ... < i_k has weight sum_a (a - 1)(n - i_a + 1).
  const IntVector w = plueckerWeight(d);
  const auto order = subsetOrder({3}, 6);
  for (std::size_t s = 0; s < order.size(); ++s) {
    long expected = 0;
    for (std::size_t a = 0; a < 3; ++a) expected += static_cast<long>(a) * (6 - order[s][a] + 1);
    c.expect(w[s] == expected, "weight entry " + std::to_string(s));
  }
  c.expect(w.size() == 20 && w[0] == 13 && w[1] == 11 && w[2] == 10 && w[3] == 10 && w[4] == 9 && w.back() == 4,
           "weight prefix");
  return c.verdict();
}

Verdict permutationField() {
  Checker c;
  const MatchingField b = MatchingField::fromPermutation(3, 6, {1, 2, 3, 6, 5, 4});
  c.expect(b.weight() && *b.weight() == WeightMatrix::fromRows({{0, 0, 0, 0, 0, 0}, {1, 2, 3, 6, 5, 4}, {30, 24, 18, 12, 6, 0}}),
           "weight matrix differs");
  c.expect(b.description() == "Grassmannian Matching Field for Gr(3, 6)", b.description());
  return c.verdict();
}

Verdict coherence() {
  Checker c;
  const MatchingField l3 = MatchingField::fromTuples(2, 4, {{1, 2}, {1, 3}, {4, 1}, {2, 3}, {4, 2}, {3, 4}});
  c.expect(!isCoherent(l3), "L3 reported coherent");
  try {
    getWeightMatrix(l3);
    c.expect(false, "getWeightMatrix(L3) did not fail");
  } catch (const DomainError& e) {
    c.expect(std::string(e.what()) == "expected a coherent matching field", std::string("message ") + e.what());
  }
  const MatchingField l4 = MatchingField::fromTuples({1, 2}, 3, {{{1}, {2}, {3}}, {{1, 2}, {1, 3}, {3, 2}}});
  c.expect(isCoherent(l4), "L4 reported incoherent");
  c.expect(MatchingField::fromWeightMatrix({1, 2}, getWeightMatrix(l4)).sameTuples(l4), "L4 round trip");
  return c.verdict();
}

Verdict hexagonalField() {
  Checker c;
  const MatchingField mf = hexagonal();
  const polyhedra::PolytopeV p = matchingFieldPolytope(mf);
  c.expect(p.vertices().size() == 20, "P has " + std::to_string(p.vertices().size()) + " vertices");
  const Rational vp = polyhedra::latticeNormalizedVolume(p);
  c.expect(vp == 38, "vol P = " + vp.get_str());
  const SagbiResult s = sagbi(PlueckerAlgebra({3}, 6), *mf.weight());
  c.expect(s.status == SagbiStatus::Complete, "SAGBI incomplete");
  c.expect(s.generators.size() == 21, "SAGBI has " + std::to_string(s.generators.size()) + " generators");
  const NewtonOkounkovBody q = newtonOkounkovBody(mf);
  c.expect(q.polytope.vertices().size() == 21, "Q has " + std::to_string(q.polytope.vertices().size()) + " vertices");
  const Rational vq = polyhedra::latticeNormalizedVolume(q.polytope);
  c.expect(vq == 42, "vol Q = " + vq.get_str());
  const auto& qv = q.polytope.vertices();
  for (const RatVector& v : p.vertices())
    c.expect(std::find(qv.begin(), qv.end(), v) != qv.end(), "a vertex of P is not a vertex of Q");
  for (ToricMethod m : {ToricMethod::Groebner, ToricMethod::Volume, ToricMethod::Subduction})
    c.expect(!isToricDegeneration(mf, m), "toric by " + toString(m));
  c.note("P 20 vertices vol 38, SAGBI 21, Q 21 vertices vol 42");
  return c.verdict();
}

Verdict diagonal36() {
  Checker c;
  const MatchingField d = MatchingField::diagonal(3, 6);
  const Rational v = polyhedra::latticeNormalizedVolume(matchingFieldPolytope(d));
  c.expect(v == 42, "vol = " + v.get_str());
  c.expect(isToricDegeneration(d, ToricMethod::Volume), "volume method says not toric");
  try {
    c.expect(isToricDegeneration(d, ToricMethod::Groebner), "groebner method says not toric");
    c.note("groebner method true");
  } catch (const ResourceError& e) {
    c.note(std::string("groebner method stopped at budget: ") + e.what());
  }
  return c.verdict();
}

Verdict subdivision35() {
  Checker c;
  const MatchingField mf =
      MatchingField::fromWeightMatrix(WeightMatrix::fromRows({{0, 0, 0, 0, 0}, {1, 3, 2, 5, 4}, {10, 0, 20, 40, 30}}));
  const auto cells = tropmatroid::matroidSubdivision(mf);
  std::set<std::set<Subset>> got;
  for (const auto& cell : cells) got.emplace(cell.begin(), cell.end());
  const std::set<std::set<Subset>> expected = {family({"123", "124", "125", "234", "235", "134", "135"}),
                                               family({"124", "125", "234", "235", "245", "134", "135", "145"}),
                                               family({"234", "235", "245", "134", "135", "145", "345"})};
  c.expect(cells.size() == 3 && got == expected, std::to_string(cells.size()) + " cells differ");
  for (const auto& cell : cells) c.expect(tropmatroid::isMatroidal({cell}), "cell not matroidal");
  return c.verdict();
}

Verdict matroid26() {
  Checker c;
  const tropmatroid::Matroid m = tropmatroid::algebraicMatroid(MatchingField::diagonal(2, 6));
  c.expect(m.rank() == 9 && m.size() == 15, "rank " + std::to_string(m.rank()) + " on " + std::to_string(m.size()));
  const auto bases = m.bases();
  c.expect(bases.size() == 576, std::to_string(bases.size()) + " bases");
  std::set<std::set<Subset>> circuits;
  for (const auto& x : m.circuits()) {
    const auto l = m.labelsOf(x);
    circuits.emplace(l.begin(), l.end());
  }
  for (const auto& expected : {family({"13", "14", "23", "24"}), family({"13", "15", "23", "25"}),
                               family({"14", "15", "24", "25"}), family({"14", "15", "34", "35"}),
                               family({"13", "15", "23", "24", "34", "35"}), family({"13", "14", "23", "25", "34", "35"}),
                               family({"24", "25", "34", "35"})})
    c.expect(circuits.count(expected) == 1, "missing circuit");
  return c.verdict();
}

Verdict topes() {
  Checker c;
  const MatchingField mf = MatchingField::fromTuples(
      3, 5, {{1, 3, 2}, {1, 4, 2}, {1, 5, 2}, {3, 4, 1}, {1, 3, 5}, {1, 4, 5}, {3, 4, 2}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}});
  const tropmatroid::TopeField tf = tropmatroid::topeField(mf);
  c.expect(tf.n() == 5 && tf.type() == std::vector<int>{1, 1, 1}, "tope field shape");
  c.expect(tropmatroid::isLinkage(tf), "not linkage");
  const tropmatroid::TopeField a2 = tropmatroid::amalgamation(2, tf);
  c.expect(a2.type() == std::vector<int>{1, 2, 1}, "type of the 2nd amalgamation");
  c.expect(a2.tuples() == std::vector<Tuple>{{1, 3, 4, 2}, {1, 3, 5, 2}, {1, 4, 5, 2}, {1, 3, 4, 5}, {2, 3, 4, 5}},
           "tuples of the 2nd amalgamation");
  const tropmatroid::TopeField a3 = tropmatroid::amalgamation(3, a2);
  c.expect(a3.type() == std::vector<int>{1, 2, 2}, "type of the 3rd amalgamation");
  c.expect(a3.tuples() == std::vector<Tuple>{{1, 3, 4, 2, 5}}, "tuples of the 3rd amalgamation");
  return c.verdict();
}

// Toric ideal of A against brute force: generators lie in the kernel, and
// every binomial x^u - x^v with Au = Av up to a degree bound reduces to 0.
void saturatedKernelSuite(Checker& c, std::mt19937& rng) {
  std::uniform_int_distribution<int> rows(1, 3), cols(2, 6), entry(0, 2);
  const int degreeBound = 3;
  for (int trial = 0; trial < 20; ++trial) {
    const int d = rows(rng), m = cols(rng);
    std::vector<std::vector<int>> columns(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(d)));
    for (auto& col : columns)
      for (int& x : col) x = entry(rng);
    const Ideal toric = polyalg::toricIdeal(columns, std::vector<int>(static_cast<std::size_t>(m), 1));
    auto image = [&](const Monomial& u) {
      std::vector<long> out(static_cast<std::size_t>(d));
      for (int j = 0; j < m; ++j)
        for (int r = 0; r < d; ++r) out[static_cast<std::size_t>(r)] += long{u[static_cast<std::size_t>(j)]} * columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
      return out;
    };
    for (const Poly& g : toric.generators()) {
      c.expect(g.size() == 2, "toric generator is not a binomial");
      if (g.size() == 2) c.expect(image(g.terms()[0].monomial) == image(g.terms()[1].monomial), "generator outside the kernel");
    }
    std::map<std::vector<long>, std::vector<Monomial>> fibres;
    std::vector<int> e(static_cast<std::size_t>(m));
    std::function<void(int, int)> walk = [&](int j, int left) {
      if (j == m) {
        const Monomial u = Monomial::fromExponents(e);
        fibres[image(u)].push_back(u);
        return;
      }
      for (int x = 0; x <= left; ++x) {
        e[static_cast<std::size_t>(j)] = x;
        walk(j + 1, left - x);
      }
      e[static_cast<std::size_t>(j)] = 0;
    };
    walk(0, degreeBound);
    const auto basis = toric.groebnerBasis(MonomialOrder::grevlex());
    for (const auto& [key, fibre] : fibres)
      for (std::size_t i = 1; i < fibre.size(); ++i) {
        const Poly b({{fibre[0], 1}, {fibre[i], -1}}, MonomialOrder::grevlex());
        c.expect(polyalg::normalForm(b, basis, MonomialOrder::grevlex()).isZero(), "kernel binomial not in the ideal");
      }
  }
}

Verdict propertySuites() {
  Checker c;
  std::mt19937 rng(20261014);
  saturatedKernelSuite(c, rng);

  const std::vector<std::pair<int, int>> shapes = {{2, 5}, {2, 6}, {3, 5}};
  std::uniform_int_distribution<int> entry(0, 30);
  int fields = 0, toricCount = 0;
  for (int attempt = 0; fields < 25 && attempt < 1000; ++attempt) {
    const auto [k, n] = shapes[static_cast<std::size_t>(fields % 3)];
    std::vector<std::vector<long long>> rows(static_cast<std::size_t>(k), std::vector<long long>(static_cast<std::size_t>(n)));
    for (std::size_t a = 1; a < rows.size(); ++a)
      for (long long& x : rows[a]) x = entry(rng);
    std::optional<MatchingField> mf;
    try {
      mf = MatchingField::fromWeightMatrix(WeightMatrix::fromRows(rows));
    } catch (const DomainError&) {
      continue;
    }
    ++fields;
    const Ideal initial = polyalg::initialIdeal(plueckerIdeal({k}, n), rational(plueckerWeight(*mf)));
    const Ideal toric = matchingFieldIdeal(*mf);
    c.expect(polyalg::idealContains(toric, initial), "initial ideal not inside the matching field ideal");
    const bool g = isToricDegeneration(*mf, ToricMethod::Groebner);
    const bool v = isToricDegeneration(*mf, ToricMethod::Volume);
    const bool s = isToricDegeneration(*mf, ToricMethod::Subduction);
    c.expect(g == v && v == s, "toric verdicts disagree");
    toricCount += g;
    const MatchingField bare = mf->withoutWeight();
    c.expect(MatchingField::fromWeightMatrix(getWeightMatrix(bare)).sameTuples(bare), "weight round trip");
  }
  c.expect(fields == 25, "only " + std::to_string(fields) + " coherent samples");

  const polyhedra::PolytopeV p = matchingFieldPolytope(MatchingField::diagonal(2, 4));
  const std::vector<Rational> e = polyhedra::ehrhartPolynomial(p);
  for (unsigned t = 0; t <= 4; ++t)
    c.expect(polyhedra::evaluatePolynomial(e, t) == Rational(polyhedra::latticePointCount(p, t)), "Ehrhart at " + std::to_string(t));
  c.expect(polyhedra::latticePointCount(p, 1) == 6 && polyhedra::latticePointCount(p, 2) == 20, "E(1), E(2)");
  c.note(std::to_string(fields) + " fields, " + std::to_string(toricCount) + " toric");
  return c.verdict();
}

struct Criterion {
  int id;
  const char* name;
  double limitSeconds;
  Verdict (*check)();
};

// Runs check in a child; the parent kills it at the limit.
Verdict runLimited(const Criterion& cr, double& seconds) {
  int fds[2];
  if (pipe(fds) != 0) return {false, "pipe failed"};
  const auto start = std::chrono::steady_clock::now();
  const pid_t pid = fork();
  if (pid == 0) {
    close(fds[0]);
    Verdict v;
    try {
      v = cr.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const std::string msg = std::string(v.pass ? "1" : "0") + v.detail;
    [[maybe_unused]] const ssize_t w = write(fds[1], msg.data(), msg.size());
    close(fds[1]);
    _exit(0);
  }
  close(fds[1]);
  std::string msg;
  bool timedOut = false;
  char buf[4096];
  while (true) {
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const int remaining = static_cast<int>((cr.limitSeconds - elapsed) * 1000);
    if (remaining <= 0) {
      timedOut = true;
      break;
    }
    pollfd p{fds[0], POLLIN, 0};
    if (poll(&p, 1, remaining) <= 0) continue;
    const ssize_t r = read(fds[0], buf, sizeof buf);
    if (r <= 0) break;
    msg.append(buf, static_cast<std::size_t>(r));
  }
  close(fds[0]);
  if (timedOut) kill(pid, SIGKILL);
  int status = 0;
  waitpid(pid, &status, 0);
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (timedOut) return {false, "time limit exceeded"};
  if (msg.empty()) return {false, "check crashed"};
  return {msg[0] == '1', msg.substr(1)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Gr(2,4) pipeline", 5, grassmannian24},
      {2, "diagonal fields", 10, diagonalFields},
      {3, "B_sigma construction", 1, permutationField},
      {4, "coherence", 5, coherence},
      {5, "hexagonal Gr(3,6)", 600, hexagonalField},
      {6, "diagonal Gr(3,6)", 600, diagonal36},
      {7, "matroid subdivision", 30, subdivision35},
      {8, "algebraic matroid", 120, matroid26},
      {9, "tope fields", 30, topes},
      {10, "property suites", 300, propertySuites},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    double seconds = 0;
    const Verdict v = runLimited(cr, seconds);
    failed += !v.pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", seconds, cr.limitSeconds);
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << cr.id << " " << cr.name << " (" << timing << ")"
              << (v.detail.empty() ? "" : ": " + v.detail) << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
