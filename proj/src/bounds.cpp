#include "irrforge/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

namespace irrforge {

namespace {

Rational R(std::int64_t x) { return Rational(BigInt(x)); }
Rational R(const BigInt& x) { return Rational(x); }
Rational frac(std::int64_t num, std::int64_t den) { return Rational(BigInt(num), BigInt(den)); }

}  // namespace

// ---------------------------------------------------------------------------
// Instances

Instance Instance::from_tree(const Tree& t) {
  Instance inst;
  inst.degree_sequence = degree_sequence_of(t);
  inst.tree = t;
  inst.n = t.order();
  inst.m = t.size();
  inst.stats = inst.degree_sequence.stats();
  inst.irr = albertson_index(t);
  return inst;
}

Instance Instance::from_arrangement(const BackboneArrangement& b) {
  Instance inst = from_tree(build_caterpillar(b));
  inst.spine = b;
  return inst;
}

Instance Instance::from_sequence(const DegreeSequence& d) {
  Instance inst;
  inst.degree_sequence = d;
  inst.n = static_cast<int>(d.size());
  inst.m = inst.n - 1;
  inst.stats = d.stats();
  return inst;
}

Instance& Instance::with_extremal(const ExtremalResult& r) {
  irr_min = r.min_value;
  irr_max = r.max_value;
  interpretation = r.interpretation;
  return *this;
}

// ---------------------------------------------------------------------------
// Enum names

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEqual: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEqual: return ">=";
    case Relation::Equal: return "=";
    case Relation::Chain: return "chain";
  }
  return "?";
}

const char* to_string(Target t) {
  switch (t) {
    case Target::Irr: return "irr";
    case Target::IrrMin: return "irr_min";
    case Target::IrrMax: return "irr_max";
    case Target::Identity: return "identity";
  }
  return "?";
}

const char* to_string(Mode m) { return m == Mode::Literal ? "literal" : "proof"; }

const char* to_string(Status s) {
  switch (s) {
    case Status::Holds: return "HOLDS";
    case Status::Violated: return "VIOLATED";
    case Status::NotApplicable: return "NOT_APPLICABLE";
    case Status::Undefined: return "UNDEFINED";
  }
  return "?";
}

Mode parse_mode(const std::string& text) {
  if (text == "literal") return Mode::Literal;
  if (text == "proof") return Mode::Proof;
  throw Error(ErrorKind::ParseError, "unknown mode '" + text + "'");
}

// ---------------------------------------------------------------------------
// Quantities and verdicts

namespace {

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string Quantity::to_string() const { return exact ? exact->to_string() : decimal(approx); }

std::string Verdict::slack_string() const {
  if (!lhs || !rhs) return "";
  if (lhs->exact && rhs->exact) {
    const Surd& a = *lhs->exact;
    const Surd& b = *rhs->exact;
    if (a.is_rational()) return (b - a.rational()).to_string();
    if (b.is_rational()) return (a * Rational(-1) + b.rational()).to_string();
    if (a.radicand() == b.radicand())
      return Surd(b.base() - a.base(), b.coeff() - a.coeff(), a.radicand()).to_string();
  }
  return decimal(rhs->approx - lhs->approx);
}

std::optional<double> Verdict::slack_approx() const {
  if (!lhs || !rhs) return std::nullopt;
  return rhs->approx - lhs->approx;
}

// ---------------------------------------------------------------------------
// Fourier series check

double series_lhs(double n) { return std::floor(2.0 * n / 3.0) + std::ceil((2.0 * n + 1.0) / 3.0); }

double series_rhs(double n, long terms) {
  // sin((2πk + 4πnk)/3) = sin(2π · k(1+2n)/3); reduce the turn count mod 1
  // before scaling so large k keeps full precision.
  const double turns = std::fmod((1.0 + 2.0 * n) / 3.0, 1.0);
  double sum = 0.0, comp = 0.0;
  for (long k = 1; k <= terms; ++k) {
    double phase = std::fmod(static_cast<double>(k) * turns, 1.0);
    double term = std::sin(2.0 * std::numbers::pi * phase) / static_cast<double>(k);
    // Neumaier compensated summation
    double t = sum + term;
    comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return 5.0 / 6.0 + 2.0 * n / 3.0 + std::floor(2.0 * n / 3.0) + (sum + comp) / std::numbers::pi;
}

double distance_to_discontinuity(double n) {
  // ⌊2n/3⌋ jumps at n = 1.5j; ⌈(2n+1)/3⌉ jumps at n = 1.5j − 0.5.
  auto lattice_distance = [](double x) {
    double r = std::fmod(x, 1.5);
    if (r < 0) r += 1.5;
    return std::min(r, 1.5 - r);
  };
  return std::min(lattice_distance(n), lattice_distance(n + 0.5));
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

bool satisfies(int cmp, Relation rel) {
  switch (rel) {
    case Relation::Less: return cmp < 0;
    case Relation::LessEqual: return cmp <= 0;
    case Relation::Greater: return cmp > 0;
    case Relation::GreaterEqual: return cmp >= 0;
    case Relation::Equal: return cmp == 0;
    case Relation::Chain: break;
  }
  return false;
}

// Evaluation scratch: collects the outcome, then turns it into a Verdict.
class Eval {
 public:
  Eval(const BoundRecord& r, const Instance& inst, const EvalOptions& opt) : inst(inst), opt(opt) {
    v.bound_id = r.id;
    v.mode = opt.mode;
  }

  const Instance& inst;
  const EvalOptions& opt;
  Verdict v;
  bool finished = false;

  bool proof() const { return opt.mode == Mode::Proof; }

  void not_applicable(std::string why) {
    if (finished) return;
    v.status = Status::NotApplicable;
    v.reason = std::move(why);
    finished = true;
  }
  void undefined(std::string why) {
    if (finished) return;
    v.status = Status::Undefined;
    v.reason = std::move(why);
    finished = true;
  }

  bool need_irr() {
    if (!inst.irr) not_applicable("irr unavailable (no tree)");
    return !finished;
  }
  bool need_tree() {
    if (!inst.tree) not_applicable("tree unavailable");
    return !finished;
  }
  bool need_irr_min() {
    if (!inst.irr_min) not_applicable("irr_min unavailable (no interpretation selected)");
    return !finished;
  }
  bool need_irr_max() {
    if (!inst.irr_max) not_applicable("irr_max unavailable (no interpretation selected)");
    return !finished;
  }

  void compare(const Surd& lhs, Relation rel, const Surd& rhs) {
    if (finished) return;
    v.lhs = Quantity::of(lhs);
    v.rhs = Quantity::of(rhs);
    v.status = satisfies(Surd::compare(lhs, rhs), rel) ? Status::Holds : Status::Violated;
    finished = true;
  }

  void link(const Surd& lhs, Relation rel, const Surd& rhs) {
    v.links.push_back({Quantity::of(lhs), rel, Quantity::of(rhs), satisfies(Surd::compare(lhs, rhs), rel)});
  }

  void close_chain() {
    if (finished) return;
    auto failing = std::find_if(v.links.begin(), v.links.end(), [](const Link& l) { return !l.holds; });
    const Link& shown = failing == v.links.end() ? v.links.front() : *failing;
    v.lhs = shown.lhs;
    v.rhs = shown.rhs;
    v.status = failing == v.links.end() ? Status::Holds : Status::Violated;
    finished = true;
  }
};

using EvalFn = std::function<void(Eval&)>;

struct Entry {
  BoundRecord record;
  EvalFn eval;
};

std::span<const int> degrees(const Eval& e) { return e.inst.degree_sequence.degrees(); }

bool strictly_increasing(std::span<const int> d) {
  return std::adjacent_find(d.begin(), d.end(), [](int a, int b) { return a >= b; }) == d.end();
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;

    t.push_back({{"B01", "introduction, variance bound", "variance upper bound on irr", Relation::LessEqual,
                  "tree present; radicand m*sum(d^2) - 4m^2 must be >= 0", "", Target::Irr,
                  "irr <= sqrt(m*sum(d_i^2) - 4m^2)"},
                 [](Eval& e) {
                   if (!e.need_irr()) return;
                   const auto& s = e.inst.stats;
                   Rational rad = R(e.inst.m) * R(s.sum_sq) - 4 * R(e.inst.m) * R(e.inst.m);
                   if (rad < 0) return e.undefined("square root of a negative radicand");
                   e.compare(R(*e.inst.irr), Relation::LessEqual, Surd::sqrt(rad));
                 }});

    t.push_back({{"B02", "first theorem on general graphs", "linearity identity for nonregular graphs", Relation::Equal, "tree present",
                  "graph nonregular (Delta > delta)", Target::Identity,
                  "sum_{uv in E} (Delta-delta)|d_u - d_v| = (Delta-delta) * irr"},
                 [](Eval& e) {
                   if (!e.need_tree()) return;
                   const auto& s = e.inst.stats;
                   if (e.proof() && s.max_degree == s.min_degree) return e.not_applicable("graph is regular");
                   const std::int64_t spread = s.max_degree - s.min_degree;
                   std::int64_t lhs = 0;
                   for (const auto& [u, w] : e.inst.tree->edges())
                     lhs += spread * std::abs(e.inst.tree->degree(u) - e.inst.tree->degree(w));
                   e.compare(R(lhs), Relation::Equal, R(spread) * R(*e.inst.irr));
                 }});

    t.push_back({{"B03", "first proposition on irr_min", "normalized irr_min lies in (0, 1)", Relation::Chain,
                  "irr_min present", "", Target::IrrMin, "0 < 2*irr_min / (Delta (Delta-1)^2) < 1"},
                 [](Eval& e) {
                   if (!e.need_irr_min()) return;
                   const std::int64_t D = e.inst.stats.max_degree;
                   const std::int64_t den = D * (D - 1) * (D - 1);
                   if (den == 0) return e.undefined("Delta (Delta-1)^2 = 0");
                   Rational x = frac(2 * *e.inst.irr_min, den);
                   e.link(R(0), Relation::Less, x);
                   e.link(x, Relation::Less, R(1));
                   e.close_chain();
                 }});

    t.push_back({{"B04", "second proposition on irr_min", "irr_min against squared degrees", Relation::GreaterEqual,
                  "irr_min present; n >= 3 (uses d_3)", "", Target::IrrMin,
                  "irr_min - (sum d_i^2 + 2d_1 + d_2 - 3d_3 + 2(d_{n-1} + d_n)) >= Delta/4"},
                 [](Eval& e) {
                   if (!e.need_irr_min()) return;
                   auto d = degrees(e);
                   if (d.size() < 3) return e.not_applicable("needs d_3 (n >= 3)");
                   const std::size_t n = d.size();
                   std::int64_t inner = e.inst.stats.sum_sq + 2 * d[0] + d[1] - 3 * d[2] + 2 * (d[n - 2] + d[n - 1]);
                   e.compare(R(*e.inst.irr_min - inner), Relation::GreaterEqual,
                             frac(e.inst.stats.max_degree, 4));
                 }});

    t.push_back({{"B05", "third proposition on irr_min", "irr_min against cubed degrees", Relation::GreaterEqual, "irr_min present",
                  "alpha and beta are integers", Target::IrrMin,
                  "beta*m(m+1)/alpha + alpha*irr_min >= sum d_i^3"},
                 [](Eval& e) {
                   if (!e.need_irr_min()) return;
                   const auto& s = e.inst.stats;
                   if (e.proof() && (!is_integer(s.alpha) || !is_integer(s.beta)))
                     return e.not_applicable("alpha or beta is not an integer");
                   if (s.alpha == 0) return e.undefined("alpha = 0");
                   const Rational m = R(e.inst.m);
                   Rational lhs = s.beta * m * (m + 1) / s.alpha + s.alpha * R(*e.inst.irr_min);
                   e.compare(lhs, Relation::GreaterEqual, R(s.sum_cube));
                 }});

    t.push_back({{"B06", "irr_max proposition, first case", "irr_max against 2^alpha", Relation::Greater,
                  "irr_max present; d_n <= 20",
                  "strictly increasing degrees and d_1 >= 10 (assumed in the argument)", Target::IrrMax,
                  "irr_max > floor(2m/n) + ceil(2n/m) + 2^alpha"},
                 [](Eval& e) {
                   if (!e.need_irr_max()) return;
                   auto d = degrees(e);
                   if (d.back() > 20) return e.not_applicable("d_n > 20");
                   if (e.proof() && !(strictly_increasing(d) && d.front() >= 10))
                     return e.not_applicable("needs strictly increasing degrees with d_1 >= 10");
                   if (e.inst.m == 0) return e.undefined("m = 0 in 2n/m");
                   const auto n = e.inst.n, m = e.inst.m;
                   Rational base = R(floor_of(frac(2 * m, n))) + R(ceil_of(frac(2 * n, m)));
                   e.compare(R(*e.inst.irr_max), Relation::Greater, pow2_half_integer(e.inst.stats.alpha) + base);
                 }});

    t.push_back({{"B07", "irr_max proposition, second case", "irr_max against 2^beta", Relation::Less,
                  "irr_max present; d_n > 3", "strictly increasing degrees and d_1 > 3", Target::IrrMax,
                  "irr_max < ceil(2n/m) + 2^beta"},
                 [](Eval& e) {
                   if (!e.need_irr_max()) return;
                   auto d = degrees(e);
                   if (d.back() <= 3) return e.not_applicable("d_n <= 3");
                   if (e.proof() && !(strictly_increasing(d) && d.front() > 3))
                     return e.not_applicable("needs strictly increasing degrees with d_1 > 3");
                   if (e.inst.m == 0) return e.undefined("m = 0 in 2n/m");
                   Rational base = R(ceil_of(frac(2 * e.inst.n, e.inst.m)));
                   e.compare(R(*e.inst.irr_max), Relation::Less, pow2_half_integer(e.inst.stats.beta) + base);
                 }});

    t.push_back({{"B08", "identity relating n and lambda", "vertex count through average degree", Relation::Equal,
                  "always", "", Target::Identity, "n = sum (2 d_i - lambda)"},
                 [](Eval& e) {
                   const auto& s = e.inst.stats;
                   Rational rhs = 2 * R(s.sum) - R(e.inst.n) * s.lambda;
                   e.compare(R(e.inst.n), Relation::Equal, rhs);
                 }});

    t.push_back({{"B09", "irr_min/irr_max gap proposition", "gap between irr_min and irr_max", Relation::LessEqual,
                  "irr_min and irr_max present; D read as absolute difference", "", Target::IrrMax,
                  "|irr_min - irr_max| <= lambda"},
                 [](Eval& e) {
                   if (!e.need_irr_min() || !e.need_irr_max()) return;
                   e.compare(R(std::abs(*e.inst.irr_min - *e.inst.irr_max)), Relation::LessEqual,
                             e.inst.stats.lambda);
                 }});

    t.push_back({{"B10", "first lemma on irr_max", "three-term irr_max estimate", Relation::Less, "irr_max present",
                  "lambda > 2", Target::IrrMax, "sqrt(m (n-3)^2) * irr_max / (Delta-1)^4 < lambda"},
                 [](Eval& e) {
                   if (!e.need_irr_max()) return;
                   const auto& s = e.inst.stats;
                   if (e.proof() && !(s.lambda > 2)) return e.not_applicable("lambda <= 2");
                   const std::int64_t D1 = s.max_degree - 1;
                   const std::int64_t den = D1 * D1 * D1 * D1;
                   if (den == 0) return e.undefined("(Delta-1)^4 = 0");
                   Rational coeff = frac(std::abs(e.inst.n - 3) * *e.inst.irr_max, den);
                   e.compare(Surd(0, coeff, R(e.inst.m)), Relation::Less, s.lambda);
                 }});

    t.push_back({{"B11", "second lemma on irr", "lower chain for irr", Relation::Chain, "tree present", "",
                  Target::Irr,
                  "2n sqrt(2n)/4 < (n^2-2m) Delta sqrt(2mn) / (2m lambda sqrt(2m)) <= irr"},
                 [](Eval& e) {
                   if (!e.need_irr()) return;
                   const auto& s = e.inst.stats;
                   const std::int64_t n = e.inst.n, m = e.inst.m;
                   if (m == 0 || s.lambda == 0) return e.undefined("m = 0 or lambda = 0");
                   Surd low(0, frac(n, 2), R(2 * n));
                   // sqrt(2mn)/sqrt(2m) = sqrt(n)
                   Surd mid(0, R((n * n - 2 * m) * s.max_degree) / (2 * R(m) * s.lambda), R(n));
                   e.link(low, Relation::Less, mid);
                   e.link(mid, Relation::LessEqual, R(*e.inst.irr));
                   e.close_chain();
                 }});

    t.push_back({{"B12", "first lower-bound theorem for trees", "quadratic lower bound for irr", Relation::GreaterEqual,
                  "tree present", "delta > 2 and n >= 4", Target::Irr,
                  "irr >= sum_{i>=2} d_i^2 - d_1 + 3mn - 2 floor((3n^2-1)/2) + (3/4) lambda n - 5 delta Delta"},
                 [](Eval& e) {
                   if (!e.need_irr()) return;
                   const auto& s = e.inst.stats;
                   const std::int64_t n = e.inst.n, m = e.inst.m;
                   if (e.proof() && !(s.min_degree > 2 && n >= 4)) return e.not_applicable("needs delta > 2 and n >= 4");
                   const std::int64_t d1 = degrees(e).front();
                   Rational rhs = R(s.sum_sq - d1 * d1 - d1 + 3 * m * n) - 2 * R(floor_of(frac(3 * n * n - 1, 2))) +
                                  frac(3, 4) * s.lambda * R(n) - R(5 * s.min_degree * s.max_degree);
                   e.compare(R(*e.inst.irr), Relation::GreaterEqual, rhs);
                 }});

    t.push_back({{"B13", "second lower-bound theorem for trees", "cubic lower bound for large Delta", Relation::GreaterEqual, "tree present",
                  "Delta > 16 and delta > 4", Target::Irr,
                  "irr >= n (m(n+1) - Delta(n-Delta) + floor(2(m-Delta)^3/(n-2))) / lambda^3"},
                 [](Eval& e) {
                   if (!e.need_irr()) return;
                   const auto& s = e.inst.stats;
                   const std::int64_t n = e.inst.n, m = e.inst.m, D = s.max_degree;
                   if (e.proof() && !(D > 16 && s.min_degree > 4)) return e.not_applicable("needs Delta > 16 and delta > 4");
                   if (n == 2) return e.undefined("n - 2 = 0");
                   if (s.lambda == 0) return e.undefined("lambda = 0");
                   const std::int64_t md = m - D;
                   Rational inner = R(m * (n + 1) - D * (n - D)) + R(floor_of(frac(2 * md * md * md, n - 2)));
                   Rational rhs = R(n) * inner / (s.lambda * s.lambda * s.lambda);
                   e.compare(R(*e.inst.irr), Relation::GreaterEqual, rhs);
                 }});

    t.push_back({{"B14", "first corollary on trees", "floor/ceiling lower bound for irr", Relation::GreaterEqual, "tree present", "",
                  Target::Irr, "irr >= 4m^2/n + floor(2n/3) + ceil((2n+1)/3)"},
                 [](Eval& e) {
                   if (!e.need_irr()) return;
                   const std::int64_t n = e.inst.n, m = e.inst.m;
                   Rational rhs = frac(4 * m * m, n) + R(floor_of(frac(2 * n, 3))) + R(ceil_of(frac(2 * n + 1, 3)));
                   e.compare(R(*e.inst.irr), Relation::GreaterEqual, rhs);
                 }});

    t.push_back({{"B15", "two-sided theorem with lambda extremes", "two-sided bound using lambda_min and lambda_max", Relation::Chain,
                  "tree present; lambda_min/lambda_max default to lambda", "delta >= 2", Target::Irr,
                  "(4m^2 - 2m(Delta+lambda_min)(n-1))/(3Delta+n) <= irr <= (m alpha^3 + lambda_max(n-1))/(n + 4 lambda delta^2)"},
                 [](Eval& e) {
                   if (!e.need_irr()) return;
                   const auto& s = e.inst.stats;
                   if (e.proof() && s.min_degree < 2) return e.not_applicable("needs delta >= 2");
                   const Rational lmin = e.inst.lambda_min.value_or(s.lambda);
                   const Rational lmax = e.inst.lambda_max.value_or(s.lambda);
                   e.v.params.emplace_back("lambda_min", to_fraction_string(lmin));
                   e.v.params.emplace_back("lambda_min_source", e.inst.lambda_min ? "override" : "default");
                   e.v.params.emplace_back("lambda_max", to_fraction_string(lmax));
                   e.v.params.emplace_back("lambda_max_source", e.inst.lambda_max ? "override" : "default");
                   const Rational n = R(e.inst.n), m = R(e.inst.m), D = R(s.max_degree), dl = R(s.min_degree);
                   const Rational low_den = 3 * D + n;
                   const Rational high_den = n + 4 * s.lambda * dl * dl;
                   if (low_den == 0 || high_den == 0) return e.undefined("zero denominator");
                   Rational low = (4 * m * m - 2 * m * (D + lmin) * (n - 1)) / low_den;
                   Rational high = (m * s.alpha * s.alpha * s.alpha + lmax * (n - 1)) / high_den;
                   e.link(low, Relation::LessEqual, R(*e.inst.irr));
                   e.link(R(*e.inst.irr), Relation::LessEqual, high);
                   e.close_chain();
                 }});

    t.push_back({{"B15b", "alpha/beta upper-bound theorem", "alpha/beta weighted upper bound", Relation::LessEqual, "tree present", "",
                  Target::Irr, "irr <= alpha floor(2n/3) + beta ceil((2n+1)/3)"},
                 [](Eval& e) {
                   if (!e.need_irr()) return;
                   const auto& s = e.inst.stats;
                   const std::int64_t n = e.inst.n;
                   Rational rhs = s.alpha * R(floor_of(frac(2 * n, 3))) + s.beta * R(ceil_of(frac(2 * n + 1, 3)));
                   e.compare(R(*e.inst.irr), Relation::LessEqual, rhs);
                 }});

    t.push_back({{"B16", "second corollary, Fourier identity", "floor/ceiling sum as a Fourier series", Relation::Equal,
                  "2n/3 not an integer; n at distance >= 0.05 from a floor/ceiling jump unless "
                  "discontinuities are included; evaluated by truncated series",
                  "", Target::Identity,
                  "floor(2n/3) + ceil((2n+1)/3) = 5/6 + 2n/3 + floor(2n/3) + (1/pi) sum_k sin((2 pi k + 4 pi n k)/3)/k"},
                 [](Eval& e) {
                   const int n = e.inst.n;
                   if ((2 * n) % 3 == 0) return e.not_applicable("2n/3 is an integer");
                   const double nd = n;
                   if (!e.opt.include_discontinuities && distance_to_discontinuity(nd) < e.opt.discontinuity_margin)
                     return e.not_applicable("n sits on a floor/ceiling discontinuity");
                   const double lhs = series_lhs(nd);
                   const double rhs = series_rhs(nd, e.opt.series_terms);
                   e.v.params.emplace_back("terms", std::to_string(e.opt.series_terms));
                   e.v.params.emplace_back("tolerance", decimal(e.opt.series_tolerance));
                   e.v.lhs = Quantity::of(Surd(R(static_cast<std::int64_t>(lhs))));
                   e.v.rhs = Quantity::real(rhs);
                   e.v.status = std::fabs(lhs - rhs) <= e.opt.series_tolerance ? Status::Holds : Status::Violated;
                   e.finished = true;
                 }});

    return t;
  }();
  return table;
}

}  // namespace

const std::vector<BoundRecord>& catalog() {
  static const std::vector<BoundRecord> records = [] {
    std::vector<BoundRecord> out;
    for (const auto& e : entries()) out.push_back(e.record);
    return out;
  }();
  return records;
}

const BoundRecord& lookup(std::string_view id) {
  for (const auto& r : catalog())
    if (r.id == id) return r;
  throw Error(ErrorKind::ParseError, "unknown bound id '" + std::string(id) + "'");
}

std::vector<std::string> parse_bound_ids(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty() || text == "all") {
    for (const auto& r : catalog()) out.push_back(r.id);
    return out;
  }
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) continue;
    out.push_back(lookup(token).id);
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "no bound ids given");
  return out;
}

Verdict evaluate_bound(const BoundRecord& r, const Instance& inst, const EvalOptions& opt) {
  for (const auto& e : entries()) {
    if (e.record.id != r.id) continue;
    Eval ev(e.record, inst, opt);
    e.eval(ev);
    return ev.v;
  }
  throw Error(ErrorKind::ParseError, "unknown bound id '" + r.id + "'");
}

std::vector<Verdict> evaluate_all(const Instance& inst, const EvalOptions& opt) {
  std::vector<Verdict> out;
  for (const auto& e : entries()) {
    Eval ev(e.record, inst, opt);
    e.eval(ev);
    out.push_back(std::move(ev.v));
  }
  return out;
}

}  // namespace irrforge
