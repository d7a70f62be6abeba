#include "p3d/groebner.hpp"

#include <algorithm>
#include <numeric>

#include "gb_engine.hpp"
#include "p3d/errors.hpp"

namespace p3d {

namespace {

gb::Vec to_vec(const Poly& f, int comp = 0) {
  gb::Vec v;
  v.reserve(f.size());
  for (const auto& [m, c] : f.terms()) v.push_back(gb::Term{m, comp, c});
  return v;
}

Poly to_poly(const gb::Vec& v) {
  std::vector<Poly::Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.emplace_back(t.m, t.c);
  return Poly::from_terms(std::move(terms));
}

gb::Vec to_vec(const ModuleElement& e, int offset = 0) {
  gb::Vec v;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (const auto& [m, c] : e[i].terms()) v.push_back(gb::Term{m, static_cast<int>(i) + offset, c});
  return v;
}

ModuleElement to_element(const gb::Vec& v, int rank, int offset = 0) {
  std::vector<std::vector<Poly::Term>> parts(rank);
  for (const auto& t : v) parts[t.comp - offset].emplace_back(t.m, t.c);
  ModuleElement e(rank);
  for (int i = 0; i < rank; ++i) e[i] = Poly::from_terms(std::move(parts[i]));
  return e;
}

gb::Order ideal_order(const TermOrder& order) {
  gb::Order o = gb::Order::top(1);
  o.mono = order;
  return o;
}

bool all_homogeneous(const std::vector<Poly>& fs) {
  for (const auto& f : fs)
    if (!f.is_zero() && !f.homogeneous_degree()) return false;
  return true;
}

// GB of the submodule of F generated by gens with components [0, k) eliminated;
// returns the basis elements living in components [k, rank), re-indexed from 0.
std::vector<ModuleElement> kernel_part(const FreeModule& F, const std::vector<ModuleElement>& gens, int k,
                                       int degree_bound = 1 << 29) {
  gb::Order o = gb::Order::top(F.rank(), F.degrees);
  for (int i = 0; i < F.rank(); ++i) o.block[i] = i < k ? 0 : 1;
  std::vector<gb::Vec> vs;
  for (const auto& g : gens) vs.push_back(to_vec(g));
  gb::Options opt;
  opt.degree_bound = degree_bound;
  auto basis = gb::groebner(vs, o, opt);
  std::vector<ModuleElement> out;
  for (const auto& b : basis)
    if (b.front().comp >= k) out.push_back(to_element(b, F.rank() - k, k));
  return out;
}

std::vector<Poly> nonzero(const std::vector<Poly>& fs) {
  std::vector<Poly> out;
  for (const auto& f : fs)
    if (!f.is_zero()) out.push_back(f);
  return out;
}

}  // namespace

// ---- Ideal

Ideal::Ideal(std::vector<Poly> generators) : gens_(std::move(generators)) {}

Ideal Ideal::unit() { return Ideal({Poly(1)}); }

bool Ideal::is_homogeneous() const { return all_homogeneous(gens_); }

const std::vector<Poly>& Ideal::basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = groebner_basis(gens_, TermOrder());
    cache_->ready = true;
  });
  return cache_->basis;
}

bool Ideal::has_cached_basis() const { return cache_->ready; }

bool Ideal::is_zero() const { return basis().empty(); }

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b[0].is_constant() && !b[0].is_zero();
}

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const TermOrder& order) {
  std::vector<gb::Vec> vs;
  for (const auto& f : gens)
    if (!f.is_zero()) vs.push_back(to_vec(f));
  auto basis = gb::groebner(vs, ideal_order(order));
  std::vector<Poly> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(to_poly(b));
  return out;
}

Ideal groebner_basis(const Ideal& I) {
  I.basis();
  return I;
}

Poly normal_form(const Poly& f, const Ideal& I) {
  std::vector<gb::Vec> basis;
  for (const auto& g : I.basis()) basis.push_back(to_vec(g));
  return to_poly(gb::normal_form(to_vec(f), basis, ideal_order(TermOrder())));
}

bool contains(const Ideal& I, const Poly& f) { return normal_form(f, I).is_zero(); }

bool contains(const Ideal& I, const Ideal& J) {
  for (const auto& g : J.generators())
    if (!contains(I, g)) return false;
  return true;
}

bool same_ideal(const Ideal& I, const Ideal& J) { return I.basis() == J.basis(); }

bool is_groebner_basis(const std::vector<Poly>& basis, const TermOrder& order) {
  std::vector<gb::Vec> vs;
  gb::Order o = ideal_order(order);
  for (const auto& f : basis) vs.push_back(gb::sort_vec(to_vec(f), o));
  return gb::is_groebner(vs, o);
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  std::vector<Poly> g = I.generators();
  g.insert(g.end(), J.generators().begin(), J.generators().end());
  return Ideal(nonzero(g));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  std::vector<Poly> g;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) {
      Poly p = a * b;
      if (!p.is_zero()) g.push_back(std::move(p));
    }
  return Ideal(std::move(g));
}

Ideal intersection(const Ideal& I, const Ideal& J) {
  auto gi = nonzero(I.generators());
  auto gj = nonzero(J.generators());
  if (gi.empty() || gj.empty()) return Ideal();
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  FreeModule F{{0, 0}};
  std::vector<ModuleElement> gens;
  for (const auto& f : gi) gens.push_back({f, f});
  for (const auto& g : gj) gens.push_back({g, Poly()});
  std::vector<Poly> out;
  for (const auto& e : kernel_part(F, gens, 1)) out.push_back(e[0]);
  return Ideal(std::move(out));
}

Ideal intersection(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) return Ideal::unit();
  Ideal acc = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) acc = intersection(acc, ideals[k]);
  return acc;
}

namespace {

int single_variable(const Poly& f) {
  if (f.size() != 1 || f.leading_term().second != 1) return -1;
  const Monomial& m = f.leading_term().first;
  if (m.degree() != 1) return -1;
  for (int i = 0; i < kNumVars; ++i)
    if (m[i] == 1) return i;
  return -1;
}

// Bayer: with var last in grevlex, var divides a homogeneous basis element
// exactly when it divides its leading term.
Ideal divide_out_variable(const Ideal& I, int var, bool once) {
  auto basis = groebner_basis(I.generators(), TermOrder::grevlex_last(var));
  std::vector<Poly> out;
  for (const auto& g : basis) {
    int e = g.min_exponent(var);
    if (once) e = std::min(e, 1);
    if (e == 0) {
      out.push_back(g);
      continue;
    }
    std::vector<Poly::Term> terms;
    Monomial q = Monomial::variable(var, e);
    for (const auto& [m, c] : g.terms()) terms.emplace_back(m / q, c);
    out.push_back(Poly::from_terms(std::move(terms)));
  }
  return Ideal(std::move(out));
}

}  // namespace

Ideal quotient(const Ideal& I, const Poly& f) {
  if (f.is_zero()) return Ideal::unit();
  auto gi = nonzero(I.generators());
  if (gi.empty()) return Ideal();
  int v = single_variable(f);
  if (v >= 0 && all_homogeneous(gi)) return divide_out_variable(I, v, true);
  std::optional<int> df = f.homogeneous_degree();
  FreeModule F{{0, df ? *df : 0}};
  std::vector<ModuleElement> gens;
  gens.push_back({f, Poly(1)});
  for (const auto& g : gi) gens.push_back({g, Poly()});
  std::vector<Poly> out;
  for (const auto& e : kernel_part(F, gens, 1)) out.push_back(e[0]);
  return Ideal(std::move(out));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  std::vector<Ideal> parts;
  for (const auto& g : nonzero(J.generators())) parts.push_back(quotient(I, g));
  if (parts.empty()) return Ideal::unit();
  return intersection(parts);
}

Ideal saturation(const Ideal& I, const Ideal& J) {
  Ideal cur = I;
  for (;;) {
    Ideal next = quotient(cur, J);
    if (contains(cur, next)) return Ideal(cur.basis());
    cur = next;
  }
}

Ideal saturation_by_variable(const Ideal& I, int var) {
  if (!I.is_homogeneous()) return saturation(I, Ideal({Poly::variable(var)}));
  return divide_out_variable(I, var, false);
}

Ideal irrelevant_ideal() {
  return Ideal({Poly::variable(0), Poly::variable(1), Poly::variable(2), Poly::variable(3)});
}

Ideal eliminate(const Ideal& I, const std::vector<int>& vars) {
  if (vars.empty()) throw MathError("eliminate: empty variable set");
  auto basis = groebner_basis(I.generators(), TermOrder::elimination(vars));
  std::vector<Poly> out;
  for (const auto& g : basis) {
    bool clean = true;
    for (const auto& t : g.terms())
      for (int v : vars)
        if (t.first[v] > 0) clean = false;
    if (clean) out.push_back(g);
  }
  return Ideal(std::move(out));
}

std::vector<Poly> minimal_generators(const Ideal& I) {
  auto gens = nonzero(I.generators());
  if (!all_homogeneous(gens)) throw MathError("minimal generators need homogeneous input");
  std::stable_sort(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) {
    return *a.homogeneous_degree() < *b.homogeneous_degree();
  });
  std::vector<Poly> kept;
  std::vector<gb::Vec> basis;
  gb::Order o = gb::Order::top(1);
  int bound = -1;
  bool stale = false;
  for (const auto& g : gens) {
    int d = *g.homogeneous_degree();
    if (stale || d > bound) {
      std::vector<gb::Vec> vs;
      for (const auto& k : kept) vs.push_back(to_vec(k));
      gb::Options opt;
      opt.degree_bound = d;
      basis = gb::groebner(vs, o, opt);
      bound = d;
      stale = false;
    }
    if (!gb::normal_form(to_vec(g), basis, o).empty()) {
      kept.push_back(g);
      stale = true;
    }
  }
  return kept;
}

Poly multivariate_gcd(const std::vector<Poly>& fs) {
  Poly g;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    if (g.is_zero()) {
      g = f.monic();
      continue;
    }
    if (g.is_constant()) break;
    Ideal l = intersection(Ideal({g}), Ideal({f}));
    const auto& b = l.basis();
    if (b.size() != 1) throw VerificationError("intersection of principal ideals is not principal");
    auto q = exact_divide(g * f, b[0]);
    if (!q) throw VerificationError("lcm does not divide the product");
    g = q->monic();
  }
  if (g.is_zero()) throw MathError("gcd of zero polynomials");
  return g;
}

// ---- modules

std::optional<int> element_degree(const FreeModule& F, const ModuleElement& v) {
  std::optional<int> d;
  for (int i = 0; i < F.rank(); ++i) {
    const Poly& p = v[i];
    if (p.is_zero()) continue;
    auto h = p.homogeneous_degree();
    if (!h) return std::nullopt;
    int e = *h + F.degrees[i];
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return d;
}

namespace {

std::vector<gb::Vec> module_gb(const Submodule& M, const gb::Order& o, int degree_bound = 1 << 29) {
  std::vector<gb::Vec> vs;
  for (const auto& g : M.generators) vs.push_back(to_vec(g));
  gb::Options opt;
  opt.degree_bound = degree_bound;
  return gb::groebner(vs, o, opt);
}

}  // namespace

std::vector<ModuleElement> module_basis(const Submodule& M) {
  gb::Order o = gb::Order::top(M.ambient.rank(), M.ambient.degrees);
  std::vector<ModuleElement> out;
  for (const auto& b : module_gb(M, o)) out.push_back(to_element(b, M.ambient.rank()));
  return out;
}

ModuleElement module_normal_form(const ModuleElement& v, const Submodule& M) {
  gb::Order o = gb::Order::top(M.ambient.rank(), M.ambient.degrees);
  auto basis = module_gb(M, o);
  return to_element(gb::normal_form(to_vec(v), basis, o), M.ambient.rank());
}

bool module_contains(const Submodule& M, const ModuleElement& v) {
  for (const auto& p : module_normal_form(v, M))
    if (!p.is_zero()) return false;
  return true;
}

SyzygyModule syzygies(const FreeModule& F, const std::vector<ModuleElement>& gens) {
  const int r = F.rank();
  const int m = static_cast<int>(gens.size());
  FreeModule target;
  for (const auto& g : gens) {
    auto d = element_degree(F, g);
    if (!d) throw MathError("syzygies need nonzero homogeneous generators");
    target.degrees.push_back(*d);
  }
  FreeModule aug;
  aug.degrees = F.degrees;
  aug.degrees.insert(aug.degrees.end(), target.degrees.begin(), target.degrees.end());
  std::vector<ModuleElement> augmented;
  for (int j = 0; j < m; ++j) {
    ModuleElement e(r + m);
    for (int i = 0; i < r; ++i) e[i] = gens[j][i];
    e[r + j] = Poly(1);
    augmented.push_back(std::move(e));
  }
  SyzygyModule out;
  out.ambient = target;
  if (m == 0) return out;
  out.generators = kernel_part(aug, augmented, r);
  return out;
}

SyzygyModule syzygy_module(const std::vector<Poly>& gens) {
  FreeModule R{{0}};
  std::vector<ModuleElement> es;
  for (const auto& g : gens) es.push_back({g});
  return syzygies(R, es);
}

Submodule minimalize(const Submodule& M) {
  std::vector<std::pair<int, ModuleElement>> items;
  for (const auto& g : M.generators) {
    auto d = element_degree(M.ambient, g);
    if (!d) {
      bool zero = std::all_of(g.begin(), g.end(), [](const Poly& p) { return p.is_zero(); });
      if (zero) continue;
      throw MathError("minimalize needs homogeneous generators");
    }
    items.emplace_back(*d, g);
  }
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  gb::Order o = gb::Order::top(M.ambient.rank(), M.ambient.degrees);
  Submodule out;
  out.ambient = M.ambient;
  std::vector<gb::Vec> basis;
  int bound = -1 << 20;
  bool stale = false;
  for (const auto& [d, g] : items) {
    if (stale || d > bound) {
      basis = module_gb(out, o, d);
      bound = d;
      stale = false;
    }
    if (gb::normal_form(to_vec(g), basis, o).empty()) continue;
    out.generators.push_back(g);
    stale = true;
  }
  return out;
}

Ideal module_quotient(const Submodule& M, const ModuleElement& v) {
  const int r = M.ambient.rank();
  auto dv = element_degree(M.ambient, v);
  if (!dv) {
    bool zero = std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
    if (zero) return Ideal::unit();
    throw MathError("module quotient needs a homogeneous element");
  }
  FreeModule aug;
  aug.degrees = M.ambient.degrees;
  aug.degrees.push_back(*dv);
  std::vector<ModuleElement> gens;
  ModuleElement first = v;
  first.push_back(Poly(1));
  gens.push_back(first);
  for (const auto& g : M.generators) {
    ModuleElement e = g;
    e.push_back(Poly());
    gens.push_back(std::move(e));
  }
  std::vector<Poly> out;
  for (const auto& e : kernel_part(aug, gens, r)) out.push_back(e[0]);
  return Ideal(std::move(out));
}

namespace {

long count_standard(const std::vector<Monomial>& leads, int t) {
  if (t < 0) return 0;
  long n = 0;
  for (const auto& m : monomials_of_degree(t)) {
    bool hit = false;
    for (const auto& l : leads)
      if (l.divides(m)) {
        hit = true;
        break;
      }
    if (!hit) ++n;
  }
  return n;
}

}  // namespace

long quotient_dimension(const Submodule& M, int p) {
  const int r = M.ambient.rank();
  gb::Order o = gb::Order::top(r, M.ambient.degrees);
  auto basis = module_gb(M, o, p);
  std::vector<std::vector<Monomial>> leads(r);
  for (const auto& b : basis) leads[b.front().comp].push_back(b.front().m);
  long n = 0;
  for (int i = 0; i < r; ++i) n += count_standard(leads[i], p - M.ambient.degrees[i]);
  return n;
}

long submodule_dimension(const Submodule& M, int p) {
  long total = 0;
  for (int d : M.ambient.degrees) total += num_monomials(p - d);
  return total - quotient_dimension(M, p);
}

// ---- resolutions

std::vector<int> Resolution::ranks() const {
  std::vector<int> r;
  for (const auto& m : maps) r.push_back(m.source.rank());
  return r;
}

std::vector<std::vector<int>> Resolution::betti() const {
  std::vector<std::vector<int>> b;
  for (const auto& m : maps) b.push_back(m.source.degrees);
  return b;
}

Resolution free_resolution(const Ideal& I, int length_bound) {
  if (!I.is_homogeneous()) throw MathError("free resolution needs homogeneous input");
  Resolution res;
  auto gens = minimal_generators(I);
  if (gens.empty()) return res;
  GradedMap first;
  first.target = FreeModule{{0}};
  for (const auto& g : gens) {
    first.source.degrees.push_back(*g.homogeneous_degree());
    first.columns.push_back({g});
  }
  res.maps.push_back(first);
  for (;;) {
    const GradedMap& last = res.maps.back();
    Submodule syz = minimalize(syzygies(last.target, last.columns));
    if (syz.generators.empty()) break;
    if (static_cast<int>(res.maps.size()) >= length_bound)
      throw ResourceError("free resolution longer than the length bound " + std::to_string(length_bound));
    GradedMap next;
    next.target = last.source;
    for (const auto& g : syz.generators) {
      next.source.degrees.push_back(*element_degree(next.target, g));
      next.columns.push_back(g);
    }
    res.maps.push_back(std::move(next));
  }
  return res;
}

// ---- Hilbert data

namespace {

using Series = std::vector<long>;

Series series_add(const Series& a, const Series& b, long sign = 1) {
  Series r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += sign * b[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

Series series_shift(const Series& a, int k) {
  if (a.empty()) return a;
  Series r(k, 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return grevlex_compare(a, b) > 0;
  });
  std::vector<Monomial> out;
  for (const auto& m : ms) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

Series numerator_rec(std::vector<Monomial> ms) {
  ms = minimal_monomials(std::move(ms));
  if (ms.empty()) return {1};
  for (const auto& m : ms)
    if (m.is_one()) return {};
  // pairwise coprime: product of (1 - t^deg)
  bool coprime = true;
  for (std::size_t i = 0; i < ms.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < ms.size() && coprime; ++j)
      if (!ms[i].coprime(ms[j])) coprime = false;
  if (coprime) {
    Series s{1};
    for (const auto& m : ms) s = series_add(s, series_shift(s, m.degree()), -1);
    return s;
  }
  // pivot on the variable shared by most generators
  std::array<int, kNumVars> count{};
  for (const auto& m : ms)
    for (int i = 0; i < kNumVars; ++i)
      if (m[i] > 0) ++count[i];
  int var = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  Monomial x = Monomial::variable(var);
  // HS(J) = HS(J + x) + t HS(J : x)
  std::vector<Monomial> plus{x}, colon;
  for (const auto& m : ms) {
    if (m[var] == 0) plus.push_back(m);
    colon.push_back(m[var] > 0 ? m / x : m);
  }
  return series_add(numerator_rec(plus), series_shift(numerator_rec(colon), 1));
}

// binomial(t + a, 3) as a cubic polynomial in t
std::vector<Rational> binom3_poly(long a) {
  // (t+a)(t+a-1)(t+a-2)/6
  Rational r0 = a, r1 = a - 1, r2 = a - 2;
  std::vector<Rational> c(4);
  c[3] = Rational(1, 6);
  c[2] = (r0 + r1 + r2) / 6;
  c[1] = (r0 * r1 + r0 * r2 + r1 * r2) / 6;
  c[0] = r0 * r1 * r2 / 6;
  return c;
}

}  // namespace

std::vector<long> hilbert_numerator(const std::vector<Monomial>& monomials) { return numerator_rec(monomials); }

long HilbertData::hf(int t) const {
  if (t < 0) return 0;
  long s = 0;
  for (std::size_t i = 0; i < series_numerator.size(); ++i) s += series_numerator[i] * num_monomials(t - static_cast<int>(i));
  return s;
}

Rational HilbertData::hp(int t) const {
  Rational s = 0, power = 1;
  for (const auto& c : hilbert_polynomial) {
    s += c * power;
    power *= t;
  }
  return s;
}

HilbertData hilbert_data(const Ideal& I) {
  if (!I.is_homogeneous()) throw MathError("Hilbert data needs homogeneous input");
  HilbertData h;
  std::vector<Monomial> leads;
  for (const auto& g : I.basis()) leads.push_back(g.leading_term().first);
  h.series_numerator = hilbert_numerator(leads);

  std::vector<Rational> hp(4, 0);
  for (std::size_t i = 0; i < h.series_numerator.size(); ++i) {
    auto b = binom3_poly(3 - static_cast<long>(i));
    for (int k = 0; k < 4; ++k) hp[k] += b[k] * h.series_numerator[i];
  }
  while (!hp.empty() && hp.back() == 0) hp.pop_back();
  h.hilbert_polynomial = hp;
  h.dimension = static_cast<int>(hp.size()) - 1;

  // cross-check: interpolate HF on a window past the numerator degree and
  // confirm four further values
  const int n = static_cast<int>(h.series_numerator.size());
  const int t0 = std::max(0, n - 1 - 3);
  const int pts = std::max(h.dimension + 1, 1);
  for (int t = t0; t < t0 + pts + 4; ++t)
    if (Rational(h.hf(t)) != h.hp(t)) throw VerificationError("Hilbert polynomial does not match the Hilbert function");

  int reg = t0;
  while (reg > 0 && Rational(h.hf(reg - 1)) == h.hp(reg - 1)) --reg;
  h.regularity_index = reg;
  for (int t = 0; t <= t0 + pts + 4; ++t) h.hilbert_function.push_back(h.hf(t));

  if (h.dimension < 0) return h;
  Rational lead = hp.back();
  for (int k = 2; k <= h.dimension; ++k) lead *= k;
  h.degree = lead.get_num().get_si();
  if (h.dimension == 0) h.genus_or_length = hp[0].get_num().get_si();
  if (h.dimension == 1) h.genus_or_length = Rational(1 - hp[0]).get_num().get_si();
  return h;
}

}  // namespace p3d
