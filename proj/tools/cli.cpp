#include "cli.hpp"

#include "mfields/error.hpp"
#include "mfields/pluecker.hpp"
#include "mfields/tropmatroid.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace mfields::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long long parseInteger(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (t.empty() || used != t.size()) throw InputError(what + ": expected an integer, found '" + t + "'");
  return v;
}

std::vector<int> parseIntList(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const std::string& tok : split(text, ',')) out.push_back(static_cast<int>(parseInteger(tok, what)));
  return out;
}

std::string readFile(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json integerJson(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json rationalJson(const Rational& q) {
  if (q.get_den() == 1) return integerJson(q.get_num());
  return q.get_str();
}

std::string rationalText(const Rational& q) { return q.get_str(); }

std::string braceList(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "}";
}

std::string braceInts(const std::vector<int>& xs) {
  std::vector<std::string> items;
  for (int x : xs) items.push_back(std::to_string(x));
  return braceList(items);
}

std::string braceRationals(const RatVector& xs) {
  std::vector<std::string> items;
  for (const Rational& x : xs) items.push_back(rationalText(x));
  return braceList(items);
}

std::string braceSubsets(const std::vector<Subset>& xs) {
  std::vector<std::string> items;
  for (const Subset& s : xs) items.push_back(braceInts(s));
  return braceList(items);
}

// Columns padded to their widest entry, as in a printed integer matrix.
std::string matrixText(const WeightMatrix& w) {
  std::vector<std::size_t> width(w.cols(), 1);
  for (std::size_t a = 0; a < w.rows(); ++a)
    for (std::size_t j = 0; j < w.cols(); ++j) width[j] = std::max(width[j], w(a, j).get_str().size());
  std::string out;
  for (std::size_t a = 0; a < w.rows(); ++a) {
    out += "|";
    for (std::size_t j = 0; j < w.cols(); ++j) {
      const std::string e = w(a, j).get_str();
      out += " " + e + (j + 1 < w.cols() ? std::string(width[j] - e.size(), ' ') : "");
    }
    out += " |\n";
  }
  return out;
}

Json matrixJson(const WeightMatrix& w) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < w.rows(); ++a) {
    Json row = Json::array();
    for (std::size_t j = 0; j < w.cols(); ++j) row.push_back(integerJson(w(a, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::uint64_t envBudget(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  const long long x = parseInteger(v, std::string("environment variable ") + name);
  if (x <= 0) throw InputError(std::string("environment variable ") + name + " must be positive");
  return static_cast<std::uint64_t>(x);
}

struct Budgets {
  pluecker::Options pluecker;
  std::uint64_t enumeration = polyhedra::kDefaultEnumerationBudget;

  static Budgets fromEnvironment() {
    Budgets b;
    b.pluecker.groebner.reductionLimit = envBudget("MF_PAIR_LIMIT", polyalg::kDefaultReductionLimit);
    b.pluecker.degreeCap = static_cast<unsigned>(envBudget("MF_DEGREE_CAP", pluecker::kDefaultDegreeCap));
    b.enumeration = envBudget("MF_ENUM_BUDGET", polyhedra::kDefaultEnumerationBudget);
    return b;
  }
};

struct Source {
  std::vector<std::string> diagonal;
  std::vector<std::string> permutation;
  std::string weight;
  std::string weightFile;
  std::string tuples;
  std::string tuplesFile;
  std::string tuplesJson;
  std::string grades;
  int n = 0;

  void attach(CLI::App* sub) {
    sub->add_option("--diagonal", diagonal, "Diagonal field: GRADES N (GRADES like 3 or 1,2,3)")->expected(2);
    sub->add_option("--permutation", permutation, "Field B_sigma: K N SIGMA (SIGMA comma-separated)")->expected(3);
    sub->add_option("--weight", weight, "Inducing weight matrix, rows ';'-separated");
    sub->add_option("--weight-file", weightFile, "File holding a weight matrix, one row per line");
    sub->add_option("--tuples", tuples, "Tuples, grades ';'-separated, e.g. 12,13,41");
    sub->add_option("--tuples-file", tuplesFile, "File holding tuples in the --tuples syntax");
    sub->add_option("--tuples-json", tuplesJson, "JSON document with n, grades, tuples (- for stdin)");
    sub->add_option("-k,--grades", grades, "Grades of the field, comma-separated");
    sub->add_option("-n", n, "Size of the ground set");
  }

  std::vector<int> gradeList() const { return grades.empty() ? std::vector<int>{} : parseIntList(grades, "grades"); }

  MatchingField build() const {
    const int given = !diagonal.empty() + !permutation.empty() + !weight.empty() + !weightFile.empty() +
                      !tuples.empty() + !tuplesFile.empty() + !tuplesJson.empty();
    if (given != 1)
      throw InputError("exactly one matching field source is required (--diagonal, --permutation, --weight, "
                       "--weight-file, --tuples, --tuples-file or --tuples-json)");
    if (!diagonal.empty())
      return MatchingField::diagonal(parseIntList(diagonal[0], "diagonal grades"),
                                     static_cast<int>(parseInteger(diagonal[1], "diagonal n")));
    if (!permutation.empty())
      return MatchingField::fromPermutation(static_cast<int>(parseInteger(permutation[0], "permutation k")),
                                            static_cast<int>(parseInteger(permutation[1], "permutation n")),
                                            parseIntList(permutation[2], "permutation"));
    if (!weight.empty() || !weightFile.empty()) {
      std::string text = weight;
      if (!weightFile.empty()) {
        text.clear();
        for (const std::string& line : split(readFile(weightFile), '\n'))
          if (!trim(line).empty()) text += (text.empty() ? "" : ";") + trim(line);
      }
      const WeightMatrix w = parseWeightMatrix(text);
      const std::vector<int> g = gradeList();
      return g.empty() ? MatchingField::fromWeightMatrix(w) : MatchingField::fromWeightMatrix(g, w);
    }
    if (!tuplesJson.empty()) return fromJson(readFile(tuplesJson));
    const std::vector<int> g = gradeList();
    if (g.empty() || n == 0) throw InputError("tuple input needs the grades (-k) and the ground set size (-n)");
    return MatchingField::fromTuples(g, n, parseTuples(tuples.empty() ? readFile(tuplesFile) : tuples));
  }

  static MatchingField fromJson(const std::string& text) {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::exception& e) {
      throw InputError(std::string("tuples JSON: ") + e.what());
    }
    try {
      const int n = doc.at("n").get<int>();
      const auto grades = doc.at("grades").get<std::vector<int>>();
      const auto tuples = doc.at("tuples").get<std::vector<std::vector<Tuple>>>();
      const MatchingField mf = MatchingField::fromTuples(grades, n, tuples);
      if (!doc.contains("weight")) return mf;
      std::vector<IntVector> rows;
      for (const Json& row : doc.at("weight")) {
        IntVector r;
        for (const Json& x : row) r.push_back(x.is_string() ? Integer(x.get<std::string>()) : Integer(x.get<long>()));
        rows.push_back(std::move(r));
      }
      const MatchingField weighted = MatchingField::fromWeightMatrix(grades, WeightMatrix::fromIntegerRows(rows));
      if (!weighted.sameTuples(mf)) throw InputError("tuples JSON: the weight does not induce the listed tuples");
      return weighted;
    } catch (const Json::exception& e) {
      throw InputError(std::string("tuples JSON: ") + e.what());
    }
  }
};

struct Outcome {
  Json payload;
  std::string text;
};

Json tuplesJson(const MatchingField& mf) {
  Json out = Json::array();
  for (const auto& grade : mf.tuples()) out.push_back(grade);
  return out;
}

Outcome idealOutcome(const polyalg::Ideal& ideal, const std::vector<std::string>& labels) {
  Outcome o;
  Json gens = Json::array();
  for (const polyalg::Poly& g : ideal.generators()) {
    const std::string s = polyalg::toString(g, labels);
    gens.push_back(s);
    o.text += s + "\n";
  }
  if (ideal.isZero()) o.text = "0\n";
  o.payload = {{"variables", labels}, {"generators", gens}};
  return o;
}

Outcome verticesOutcome(const std::vector<RatVector>& unsorted) {
  std::vector<RatVector> vertices = unsorted;
  std::sort(vertices.begin(), vertices.end());
  Outcome o;
  Json vs = Json::array();
  for (const RatVector& v : vertices) {
    Json row = Json::array();
    for (const Rational& x : v) row.push_back(rationalJson(x));
    vs.push_back(std::move(row));
    o.text += braceRationals(v) + "\n";
  }
  o.payload = {{"vertices", vs}};
  return o;
}

Json boolJson(bool b, std::string& text) {
  text = b ? "true\n" : "false\n";
  return b;
}

}  // namespace

WeightMatrix parseWeightMatrix(const std::string& text) {
  if (trim(text).empty()) throw InputError("weight matrix: empty input");
  std::vector<std::vector<long long>> rows;
  const std::vector<std::string> parts = split(text, ';');
  for (std::size_t r = 0; r < parts.size(); ++r) {
    if (trim(parts[r]).empty()) throw InputError("weight matrix: row " + std::to_string(r + 1) + " is empty");
    std::vector<long long> row;
    const std::vector<std::string> entries = split(parts[r], ',');
    for (std::size_t c = 0; c < entries.size(); ++c)
      row.push_back(parseInteger(entries[c], "weight matrix: row " + std::to_string(r + 1) + ", column " +
                                                 std::to_string(c + 1)));
    if (!rows.empty() && row.size() != rows.front().size())
      throw InputError("weight matrix: row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  return WeightMatrix::fromRows(rows);
}

std::vector<std::vector<Tuple>> parseTuples(const std::string& text) {
  std::vector<std::vector<Tuple>> out;
  for (const std::string& grade : split(text, ';')) {
    std::string flat = grade;
    std::replace_if(flat.begin(), flat.end(), [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }, ',');
    std::vector<Tuple> tuples;
    for (const std::string& raw : split(flat, ',')) {
      if (raw.empty()) continue;
      Tuple t;
      if (raw.find('-') != std::string::npos) {
        for (const std::string& e : split(raw, '-')) t.push_back(static_cast<int>(parseInteger(e, "tuple " + raw)));
      } else {
        for (char c : raw) {
          if (c < '0' || c > '9') throw InputError("tuple '" + raw + "': expected digits");
          t.push_back(c - '0');
        }
      }
      tuples.push_back(std::move(t));
    }
    if (tuples.empty()) throw InputError("tuples: a grade has no tuples");
    out.push_back(std::move(tuples));
  }
  return out;
}

std::string fingerprint(const MatchingField& mf) {
  const Json canonical = {{"n", mf.n()}, {"grades", mf.grades()}, {"tuples", tuplesJson(mf)}};
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching fields: coherence, ideals, toric degenerations, polytopes and matroids", "mfields"};
  app.require_subcommand(1);
  Source source;
  bool json = false;
  std::string method = "groebner";
  bool vertices = false, volume = false;
  unsigned ehrhart = 0;
  unsigned degreeCap = 0;
  bool checkMatroidal = false;
  bool bases = false, circuits = false, rank = false;
  bool linkage = false;
  std::string amalgamate;

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"tuples", "List the tuples of the field"},
      {"coherent", "Test whether a weight matrix induces the field"},
      {"weight-matrix", "Print a weight matrix inducing the field"},
      {"pluecker-weight", "Print the induced weight on Pluecker variables"},
      {"ideal", "Matching field ideal"},
      {"pluecker-ideal", "Pluecker ideal for the field's grades and n"},
      {"toric", "Test whether the field gives a toric degeneration"},
      {"polytope", "Matching field polytope"},
      {"nobody", "Newton-Okounkov body from a SAGBI basis"},
      {"subdivision", "Regular subdivision of the hypersimplex"},
      {"matroid", "Algebraic matroid of the field"},
      {"tope", "Tope field, linkage and amalgamations"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    source.attach(sub);
    sub->add_flag("--json", json, "Emit a JSON document");
    subs[name] = sub;
  }
  subs["toric"]->add_option("--method", method, "groebner, volume or subduction")
      ->check(CLI::IsMember({"groebner", "volume", "subduction"}));
  auto* pv = subs["polytope"]->add_flag("--vertices", vertices, "List vertices (default)");
  auto* pvol = subs["polytope"]->add_flag("--volume", volume, "Normalized volume");
  auto* peh = subs["polytope"]->add_option("--ehrhart", ehrhart, "Ehrhart polynomial and counts up to dilate R");
  pv->excludes(pvol, peh);
  pvol->excludes(peh);
  subs["nobody"]->add_option("--degree-cap", degreeCap, "Largest x-degree of lifted relations");
  subs["subdivision"]->add_flag("--check-matroidal", checkMatroidal, "Also test every cell for basis exchange");
  auto* mb = subs["matroid"]->add_flag("--bases", bases, "List the bases");
  auto* mc = subs["matroid"]->add_flag("--circuits", circuits, "List the circuits");
  auto* mr = subs["matroid"]->add_flag("--rank", rank, "Rank and size (default)");
  mb->excludes(mc, mr);
  mc->excludes(mr);
  auto* tl = subs["tope"]->add_flag("--linkage", linkage, "Test the linkage property");
  auto* ta = subs["tope"]->add_option("--amalgamate", amalgamate, "Amalgamate at block indices i[,j,...] in turn");
  tl->excludes(ta);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  auto fail = [&](const char* kind, const std::string& message, int code) {
    err << "error: " << message << "\n";
    if (json) {
      const Json doc = {{"command", command}, {"status", "error"}, {"error", {{"kind", kind}, {"message", message}}}};
      out << doc.dump(2) << "\n";
    }
    return code;
  };

  try {
    const Budgets budgets = Budgets::fromEnvironment();
    const MatchingField mf = source.build();
    Outcome o;

    if (command == "tuples") {
      o.payload = tuplesJson(mf);
      o.text = formatTuples(mf) + "\n";
    } else if (command == "coherent") {
      o.payload = boolJson(isCoherent(mf), o.text);
    } else if (command == "weight-matrix") {
      const WeightMatrix w = getWeightMatrix(mf);
      o.payload = matrixJson(w);
      o.text = matrixText(w);
    } else if (command == "pluecker-weight") {
      const IntVector w = plueckerWeight(mf);
      o.payload = Json::array();
      std::vector<std::string> items;
      for (const Integer& x : w) {
        o.payload.push_back(integerJson(x));
        items.push_back(x.get_str());
      }
      o.text = braceList(items) + "\n";
    } else if (command == "ideal") {
      o = idealOutcome(pluecker::matchingFieldIdeal(mf, budgets.pluecker), pluecker::plueckerLabels(mf.grades(), mf.n()));
    } else if (command == "pluecker-ideal") {
      o = idealOutcome(pluecker::plueckerIdeal(mf.grades(), mf.n(), budgets.pluecker),
                       pluecker::plueckerLabels(mf.grades(), mf.n()));
    } else if (command == "toric") {
      o.payload = boolJson(pluecker::isToricDegeneration(mf, pluecker::parseToricMethod(method), budgets.pluecker), o.text);
    } else if (command == "polytope") {
      const polyhedra::PolytopeV p = pluecker::matchingFieldPolytope(mf);
      if (volume) {
        const Rational v = polyhedra::latticeNormalizedVolume(p);
        o.payload = {{"volume", rationalJson(v)}};
        o.text = rationalText(v) + "\n";
      } else if (!peh->empty()) {
        const std::vector<Rational> c = polyhedra::ehrhartPolynomial(p, budgets.enumeration);
        Json coefficients = Json::array(), counts = Json::array();
        o.text = "coefficients " + braceRationals(c) + "\n";
        for (const Rational& x : c) coefficients.push_back(rationalJson(x));
        for (unsigned t = 0; t <= ehrhart; ++t) {
          const Rational e = polyhedra::evaluatePolynomial(c, t);
          counts.push_back(rationalJson(e));
          o.text += "E(" + std::to_string(t) + ") = " + rationalText(e) + "\n";
        }
        o.payload = {{"ehrhart", coefficients}, {"counts", counts}};
      } else {
        o = verticesOutcome(p.vertices());
      }
    } else if (command == "nobody") {
      pluecker::Options options = budgets.pluecker;
      if (degreeCap > 0) options.degreeCap = degreeCap;
      const pluecker::NewtonOkounkovBody body = pluecker::newtonOkounkovBody(mf, options);
      const Rational v = polyhedra::latticeNormalizedVolume(body.polytope);
      o = verticesOutcome(body.polytope.vertices());
      o.payload["volume"] = rationalJson(v);
      o.payload["generators"] = body.sourceDegrees.size();
      o.text += "normalized volume " + rationalText(v) + "\n";
    } else if (command == "subdivision") {
      const auto cells = tropmatroid::matroidSubdivision(mf);
      Json cs = Json::array();
      for (const auto& c : cells) {
        cs.push_back(c);
        o.text += braceSubsets(c) + "\n";
      }
      o.payload = {{"cells", cs}};
      if (checkMatroidal) {
        const bool m = tropmatroid::isMatroidal(cells);
        o.payload["matroidal"] = m;
        o.text += std::string("matroidal ") + (m ? "true" : "false") + "\n";
      }
    } else if (command == "matroid") {
      const tropmatroid::Matroid m = tropmatroid::algebraicMatroid(mf);
      tropmatroid::MatroidOptions options;
      options.enumerationBudget = budgets.enumeration;
      o.payload = {{"size", m.size()}, {"rank", m.rank()}};
      o.text = "rank " + std::to_string(m.rank()) + " on " + std::to_string(m.size()) + " elements\n";
      if (bases || circuits) {
        const auto sets = bases ? m.bases(options) : m.circuits(options);
        Json js = Json::array();
        o.text.clear();
        for (const auto& s : sets) {
          const std::vector<Subset> labels = m.labelsOf(s);
          js.push_back(labels);
          o.text += braceSubsets(labels) + "\n";
        }
        o.payload[bases ? "bases" : "circuits"] = js;
      }
    } else if (command == "tope") {
      tropmatroid::TopeField tf = tropmatroid::topeField(mf);
      if (linkage) {
        o.payload = boolJson(tropmatroid::isLinkage(tf), o.text);
      } else {
        if (!amalgamate.empty())
          for (int i : parseIntList(amalgamate, "amalgamate")) tf = tropmatroid::amalgamation(i, tf);
        std::vector<std::string> items;
        for (const Tuple& t : tf.tuples()) items.push_back(braceInts(t));
        o.payload = {{"n", tf.n()}, {"type", tf.type()}, {"tuples", tf.tuples()}};
        o.text = "type " + braceInts(tf.type()) + "\n" + braceList(items) + "\n";
      }
    }

    if (json) {
      Json doc = {{"command", command}, {"fingerprint", fingerprint(mf)}, {"n", mf.n()}, {"grades", mf.grades()},
                  {"tuples", tuplesJson(mf)}};
      if (mf.weight()) doc["weight"] = matrixJson(*mf.weight());
      doc["payload"] = o.payload;
      doc["status"] = "ok";
      out << doc.dump(2) << "\n";
    } else {
      out << o.text;
    }
    return kExitOk;
  } catch (const InputError& e) {
    return fail("usage", e.what(), kExitUsage);
  } catch (const DomainError& e) {
    return fail("domain", e.what(), kExitDomain);
  } catch (const ResourceError& e) {
    return fail("resource", e.what(), kExitResource);
  } catch (const Error& e) {
    return fail("internal", e.what(), 1);
  }
}

}  // namespace mfields::cli
