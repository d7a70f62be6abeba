#include "p3d/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "expr_parser.hpp"
#include "p3d/errors.hpp"

namespace p3d {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw ParseError("bad rational '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---- Monomial

Monomial::Monomial(int e0, int e1, int e2, int e3) {
  const int e[kNumVars] = {e0, e1, e2, e3};
  for (int i = 0; i < kNumVars; ++i) {
    if (e[i] < 0 || e[i] > 0x3fff) throw MathError("monomial exponent out of range");
    exp_[i] = static_cast<std::uint16_t>(e[i]);
    deg_ = static_cast<std::uint16_t>(deg_ + e[i]);
  }
}

Monomial Monomial::variable(int i, int power) {
  Monomial m;
  m.exp_[i] = static_cast<std::uint16_t>(power);
  m.deg_ = static_cast<std::uint16_t>(power);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.exp_[i] = static_cast<std::uint16_t>(exp_[i] + o.exp_[i]);
  r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - o.exp_[i]);
  r.deg_ = static_cast<std::uint16_t>(deg_ - o.deg_);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (int i = 0; i < kNumVars; ++i)
    if (exp_[i] > o.exp_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  int d = 0;
  for (int i = 0; i < kNumVars; ++i) {
    r.exp_[i] = std::max(exp_[i], o.exp_[i]);
    d += r.exp_[i];
  }
  r.deg_ = static_cast<std::uint16_t>(d);
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  int d = 0;
  for (int i = 0; i < kNumVars; ++i) {
    r.exp_[i] = std::min(exp_[i], o.exp_[i]);
    d += r.exp_[i];
  }
  r.deg_ = static_cast<std::uint16_t>(d);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (int i = 0; i < kNumVars; ++i)
    if (exp_[i] && o.exp_[i]) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0;
  for (int i = 0; i < kNumVars; ++i) h = (h << 16) | exp_[i];
  h ^= h >> 29;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 32;
  return static_cast<std::size_t>(h);
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (int i = kNumVars - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

// ---- TermOrder

TermOrder TermOrder::grevlex() { return TermOrder(); }

TermOrder TermOrder::grevlex_last(int var) {
  TermOrder t;
  int k = 0;
  for (int i = 0; i < kNumVars; ++i)
    if (i != var) t.perm_[k++] = i;
  t.perm_[kNumVars - 1] = var;
  return t;
}

TermOrder TermOrder::lex() {
  TermOrder t;
  t.kind_ = Kind::lex;
  return t;
}

TermOrder TermOrder::elimination(const std::vector<int>& vars) {
  if (vars.empty()) throw MathError("elimination order needs at least one variable");
  TermOrder t;
  t.kind_ = Kind::elimination;
  std::array<bool, kNumVars> chosen{};
  for (int v : vars) {
    if (v < 0 || v >= kNumVars) throw MathError("variable index out of range");
    chosen[v] = true;
  }
  int k = 0;
  for (int i = 0; i < kNumVars; ++i)
    if (chosen[i]) t.perm_[k++] = i;
  t.block_ = k;
  for (int i = 0; i < kNumVars; ++i)
    if (!chosen[i]) t.perm_[k++] = i;
  return t;
}

TermOrder TermOrder::weighted(const std::array<int, kNumVars>& weights) {
  TermOrder t;
  t.kind_ = Kind::weighted;
  for (int w : weights)
    if (w <= 0) throw MathError("weights must be positive");
  t.weights_ = weights;
  return t;
}

bool TermOrder::is_default() const { return *this == TermOrder(); }

bool TermOrder::operator==(const TermOrder& o) const {
  return kind_ == o.kind_ && perm_ == o.perm_ && block_ == o.block_ && weights_ == o.weights_;
}

int TermOrder::weight(const Monomial& m) const {
  int s = 0;
  for (int i = 0; i < kNumVars; ++i) s += weights_[i] * m[i];
  return s;
}

int TermOrder::grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) const {
  int da = 0, db = 0;
  for (int k = lo; k < hi; ++k) {
    da += a[perm_[k]];
    db += b[perm_[k]];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int k = hi - 1; k >= lo; --k) {
    int ea = a[perm_[k]], eb = b[perm_[k]];
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::grevlex:
      return grevlex_range(a, b, 0, kNumVars);
    case Kind::lex:
      for (int k = 0; k < kNumVars; ++k) {
        int ea = a[perm_[k]], eb = b[perm_[k]];
        if (ea != eb) return ea > eb ? 1 : -1;
      }
      return 0;
    case Kind::elimination: {
      int c = grevlex_range(a, b, 0, block_);
      return c != 0 ? c : grevlex_range(a, b, block_, kNumVars);
    }
    case Kind::weighted: {
      int wa = weight(a), wb = weight(b);
      if (wa != wb) return wa > wb ? 1 : -1;
      return grevlex_range(a, b, 0, kNumVars);
    }
  }
  return 0;
}

// ---- Poly

Poly::Poly(const Rational& c) {
  if (c != 0) {
    terms_.emplace_back(Monomial(), c);
    terms_.back().second.canonicalize();
  }
  set_degree_flag();
}

Poly Poly::variable(int i) { return monomial(Monomial::variable(i)); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  p.set_degree_flag();
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_compare(a.first, b.first) > 0; });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  for (auto& t : p.terms_) t.second.canonicalize();
  p.set_degree_flag();
  return p;
}

void Poly::set_degree_flag() {
  hdeg_.reset();
  if (terms_.empty()) return;
  int d = terms_.front().first.degree();
  for (const auto& t : terms_)
    if (t.first.degree() != d) return;
  hdeg_ = d;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.front().first.degree();
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
    return grevlex_compare(t.first, x) > 0;
  });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

template <class Op>
Poly merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, Op op) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = grevlex_compare(a[i].first, b[j].first);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.emplace_back(b[j].first, op(Rational(0), b[j].second));
      ++j;
    } else {
      Rational s = op(a[i].second, b[j].second);
      if (s != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return Poly::from_sorted_terms(std::move(out));
}

}  // namespace

Poly Poly::from_sorted_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  p.set_degree_flag();
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  return merge(terms_, o.terms_, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

Poly Poly::operator-(const Poly& o) const {
  return merge(terms_, o.terms_, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) acc[ma * mb] += ca * cb;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& kv : acc)
    if (kv.second != 0) out.emplace_back(kv.first, std::move(kv.second));
  return from_terms(std::move(out));
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly();
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::times_monomial(const Monomial& m, const Rational& c) const {
  if (c == 0) return Poly();
  Poly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
  r.set_degree_flag();
  return r;
}

Poly Poly::pow(int n) const {
  Poly r(1);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / terms_.front().second);
}

Rational Poly::evaluate(const std::array<Rational, kNumVars>& point) const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < kNumVars; ++i)
      for (int e = 0; e < m[i]; ++e) v *= point[i];
    s += v;
  }
  return s;
}

int Poly::min_exponent(int var) const {
  if (terms_.empty()) return 0;
  int e = 1 << 20;
  for (const auto& t : terms_) e = std::min(e, t.first[var]);
  return e;
}

Poly partial_derivative(const Poly& f, int var) {
  std::vector<Poly::Term> out;
  for (const auto& [m, c] : f.terms()) {
    int e = m[var];
    if (e == 0) continue;
    out.emplace_back(m / Monomial::variable(var), c * e);
  }
  return Poly::from_terms(std::move(out));
}

std::optional<Poly> exact_divide(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw MathError("division by zero polynomial");
  std::vector<Poly::Term> quotient;
  Poly rest = f;
  const auto& [lg, cg] = g.leading_term();
  while (!rest.is_zero()) {
    const auto& [lm, lc] = rest.leading_term();
    if (!lg.divides(lm)) return std::nullopt;
    Monomial q = lm / lg;
    Rational c = lc / cg;
    quotient.emplace_back(q, c);
    rest = rest - g.times_monomial(q, c);
  }
  return Poly::from_terms(std::move(quotient));
}

std::string variable_name(int i) {
  static const char* names[kNumVars] = {"x", "y", "z", "w"};
  return names[i];
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1);
    if (!unit || m.is_one()) {
      os << a.get_str();
      if (!m.is_one()) os << "*";
    }
    bool any = false;
    for (int i = 0; i < kNumVars; ++i) {
      if (m[i] == 0) continue;
      if (any) os << "*";
      os << variable_name(i);
      if (m[i] > 1) os << "^" << m[i];
      any = true;
    }
  }
  return os.str();
}

Poly parse_poly(const std::string& text) { return detail::parse_expression(text, false)[kNumVars]; }

long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long num_monomials(int t) { return t < 0 ? 0 : binomial(t + 3, 3); }

namespace {

constexpr int kMaxTableDegree = 40;

struct MonomialTable {
  std::vector<std::vector<Monomial>> lists;
  std::unordered_map<Monomial, int, MonomialHash> index;

  MonomialTable() {
    for (int d = 0; d <= kMaxTableDegree; ++d) {
      std::vector<Monomial> ms;
      for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b)
          for (int c = 0; a + b + c <= d; ++c) ms.emplace_back(a, b, c, d - a - b - c);
      std::sort(ms.begin(), ms.end(), [](const Monomial& x, const Monomial& y) { return grevlex_compare(x, y) > 0; });
      for (int i = 0; i < static_cast<int>(ms.size()); ++i) index.emplace(ms[i], i);
      lists.push_back(std::move(ms));
    }
  }
};

const MonomialTable& table() {
  static const MonomialTable t;
  return t;
}

}  // namespace

const std::vector<Monomial>& monomials_of_degree(int degree) {
  static const std::vector<Monomial> empty;
  if (degree < 0) return empty;
  if (degree > kMaxTableDegree) throw ResourceError("monomial table degree bound exceeded");
  return table().lists[degree];
}

int monomial_index(const Monomial& m) {
  if (m.degree() > kMaxTableDegree) throw ResourceError("monomial table degree bound exceeded");
  return table().index.at(m);
}

}  // namespace p3d
