#include "gb_engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "p3d/errors.hpp"

namespace p3d::gb {

Order Order::top(int rank, std::vector<int> shifts) {
  Order o;
  o.shift = shifts.empty() ? std::vector<int>(rank, 0) : std::move(shifts);
  o.block.assign(rank, 0);
  return o;
}

int Order::compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
  if (block[ca] != block[cb]) return block[ca] < block[cb] ? 1 : -1;
  if (pot) {
    if (ca != cb) return ca < cb ? 1 : -1;
    return mono.compare(a, b);
  }
  if (mono.kind() == TermOrder::Kind::grevlex) {
    int da = a.degree() + shift[ca], db = b.degree() + shift[cb];
    if (da != db) return da > db ? 1 : -1;
  }
  int c = mono.compare(a, b);
  if (c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

long step_limit() {
  const char* env = std::getenv("P3D_MAX_GB_STEPS");
  if (env == nullptr) return 2000000L;
  long v = std::strtol(env, nullptr, 10);
  return v > 0 ? v : 2000000L;
}

namespace {

struct Key {
  Monomial m;
  int c;
};

struct KeyCmp {
  const Order* order;
  bool operator()(const Key& a, const Key& b) const { return order->compare(a.m, a.c, b.m, b.c) > 0; }
};

using Acc = std::map<Key, Rational, KeyCmp>;

void add_multiple(Acc& acc, Vec::const_iterator first, Vec::const_iterator last, const Monomial& q,
                  const Rational& c) {
  for (; first != last; ++first) {
    const Term& t = *first;
    Key k{t.m * q, t.comp};
    auto [it, fresh] = acc.try_emplace(k);
    if (fresh) {
      it->second = c * t.c;
    } else {
      it->second += c * t.c;
      if (it->second == 0) acc.erase(it);
    }
  }
}

// Multiplies by the lcm of the denominators and divides by the gcd of the numerators.
void make_primitive(Vec& v) {
  if (v.empty()) return;
  mpz_class l = 1, g = 0;
  for (const auto& t : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
  for (auto& t : v) {
    t.c *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
  }
  if (v.front().c < 0) g = -g;
  if (g != 1)
    for (auto& t : v) t.c /= g;
}

struct Reducer {
  const Order& order;
  const std::vector<Vec>& polys;
  const std::vector<int>& active;
  // integer coefficients throughout; the result is defined up to a scalar
  bool fraction_free = false;

  const Vec* find_divisor(const Monomial& m, int comp) const {
    for (int idx : active) {
      const Term& lt = polys[idx].front();
      if (lt.comp == comp && lt.m.divides(m)) return &polys[idx];
    }
    return nullptr;
  }

  // full: reduce every term; otherwise stop once the leading term is irreducible
  Vec run(Acc& acc, bool full) const {
    Vec out;
    while (!acc.empty()) {
      auto it = acc.begin();
      const Vec* g = find_divisor(it->first.m, it->first.c);
      if (g != nullptr) {
        Monomial q = it->first.m / g->front().m;
        Rational c;
        if (fraction_free) {
          mpz_class a = it->second.get_num(), b = g->front().c.get_num(), d;
          mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
          mpz_class scale = b / d;
          if (scale < 0) scale = -scale;
          if (scale != 1) {
            for (auto& kv : acc) kv.second *= scale;
            for (auto& t : out) t.c *= scale;
          }
          c = -it->second / g->front().c;
        } else {
          c = -it->second / g->front().c;
        }
        acc.erase(it);
        add_multiple(acc, g->begin() + 1, g->end(), q, c);
      } else if (full) {
        out.push_back(Term{it->first.m, it->first.c, it->second});
        acc.erase(it);
      } else {
        for (auto& kv : acc) out.push_back(Term{kv.first.m, kv.first.c, kv.second});
        acc.clear();
      }
    }
    if (fraction_free) make_primitive(out);
    return out;
  }
};

Acc to_acc(const Vec& v, const Order& order) {
  Acc acc(KeyCmp{&order});
  for (const auto& t : v) {
    auto [it, fresh] = acc.try_emplace(Key{t.m, t.comp}, t.c);
    if (!fresh) {
      it->second += t.c;
      if (it->second == 0) acc.erase(it);
    }
  }
  return acc;
}

struct Pair {
  int i, j;
  Monomial lcm;
  int comp;
  int sugar;
};

class Buchberger {
 public:
  Buchberger(const Order& order, int rank, int degree_bound)
      : order_(order), ideal_mode_(rank == 1), degree_bound_(degree_bound) {}

  void add_input(const Vec& f) {
    Vec g = f;
    make_primitive(g);
    Acc acc = to_acc(g, order_);
    Reducer r{order_, polys_, active_, true};
    Vec h = r.run(acc, false);
    if (h.empty()) return;
    int s = 0;
    for (const auto& t : f) s = std::max(s, order_.degree(t.m, t.comp));
    insert(std::move(h), s);
  }

  void run() {
    long steps = 0;
    const long limit = step_limit();
    while (!pairs_.empty()) {
      if (++steps > limit)
        throw ResourceError("Groebner step limit exceeded (" + std::to_string(limit) +
                            " S-pairs); raise P3D_MAX_GB_STEPS");
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();

      const Vec& gi = polys_[p.i];
      const Vec& gj = polys_[p.j];
      // leading coefficients are integers; cross-multiply to stay integral
      Acc acc(KeyCmp{&order_});
      add_multiple(acc, gi.begin() + 1, gi.end(), p.lcm / gi.front().m, gj.front().c);
      add_multiple(acc, gj.begin() + 1, gj.end(), p.lcm / gj.front().m, -gi.front().c);
      Reducer r{order_, polys_, active_, true};
      Vec h = r.run(acc, false);
      if (!h.empty()) insert(std::move(h), p.sugar);
    }
  }

  std::vector<Vec> result(bool reduce_tails) const {
    std::vector<Vec> basis;
    for (int idx : active_) basis.push_back(polys_[idx]);
    std::sort(basis.begin(), basis.end(), [&](const Vec& a, const Vec& b) {
      return order_.compare(a.front().m, a.front().comp, b.front().m, b.front().comp) < 0;
    });
    if (!reduce_tails) {
      for (auto& b : basis) b = monic(std::move(b));
      return basis;
    }
    std::vector<Vec> out;
    out.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<Vec> others;
      std::vector<int> idx;
      for (std::size_t l = 0; l < basis.size(); ++l)
        if (l != k) {
          idx.push_back(static_cast<int>(others.size()));
          others.push_back(basis[l]);
        }
      // the leading term is irreducible by the others, so the whole element reduces to a multiple of the answer
      Acc acc = to_acc(basis[k], order_);
      Reducer r{order_, others, idx, true};
      out.push_back(monic(r.run(acc, true)));
    }
    return out;
  }

 private:
  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = order_.compare(a.lcm, a.comp, b.lcm, b.comp);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  int sugar_of(int idx, const Monomial& lcm) const {
    const Term& lt = polys_[idx].front();
    return sugar_[idx] + lcm.degree() - lt.m.degree();
  }

  void insert(Vec h, int sugar) {
    const int t = static_cast<int>(polys_.size());
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    const Term& lh = polys_[t].front();

    struct Cand {
      int j;
      Monomial lcm;
      bool disjoint;
    };
    std::vector<Cand> cands;
    for (int j : active_) {
      const Term& lj = polys_[j].front();
      if (lj.comp != lh.comp) continue;
      cands.push_back({j, lj.m.lcm(lh.m), ideal_mode_ && lj.m.coprime(lh.m)});
    }
    // chain criterion among the new pairs
    std::vector<std::size_t> kept_new;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool ok = true;
      if (!cands[a].disjoint) {
        for (std::size_t b = a + 1; b < cands.size() && ok; ++b)
          if (cands[b].lcm.divides(cands[a].lcm)) ok = false;
        for (std::size_t b : kept_new)
          if (ok && cands[b].lcm.divides(cands[a].lcm)) ok = false;
      }
      if (ok) kept_new.push_back(a);
    }
    // old pairs made redundant by the new leading term
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (const Pair& p : pairs_) {
      if (p.comp == lh.comp && lh.m.divides(p.lcm)) {
        Monomial li = polys_[p.i].front().m.lcm(lh.m);
        Monomial lj = polys_[p.j].front().m.lcm(lh.m);
        if (li != p.lcm && lj != p.lcm) continue;
      }
      kept.push_back(p);
    }
    pairs_ = std::move(kept);
    for (std::size_t a : kept_new) {
      const Cand& c = cands[a];
      if (c.disjoint) continue;
      int s = std::max(sugar_of(c.j, c.lcm), sugar_of(t, c.lcm));
      if (order_.degree(c.lcm, lh.comp) > degree_bound_) continue;
      pairs_.push_back(Pair{c.j, t, c.lcm, lh.comp, s});
    }
    std::vector<int> next;
    for (int j : active_) {
      const Term& lj = polys_[j].front();
      if (lj.comp == lh.comp && lh.m.divides(lj.m)) continue;
      next.push_back(j);
    }
    next.push_back(t);
    active_ = std::move(next);
  }

  const Order& order_;
  bool ideal_mode_;
  int degree_bound_;
  std::vector<Vec> polys_;
  std::vector<int> sugar_;
  std::vector<int> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

Vec sort_vec(Vec v, const Order& order) {
  Acc acc = to_acc(v, order);
  Vec out;
  out.reserve(acc.size());
  for (auto& kv : acc) out.push_back(Term{kv.first.m, kv.first.c, kv.second});
  return out;
}

Vec monic(Vec v) {
  if (v.empty() || v.front().c == 1) return v;
  Rational inv = 1 / v.front().c;
  for (auto& t : v) t.c *= inv;
  return v;
}

std::vector<Vec> groebner(const std::vector<Vec>& gens, const Order& order, const Options& opt) {
  int rank = static_cast<int>(order.shift.size());
  Buchberger bb(order, rank, opt.degree_bound);
  std::vector<Vec> sorted;
  for (const auto& g : gens) {
    Vec v = sort_vec(g, order);
    if (!v.empty()) sorted.push_back(std::move(v));
  }
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Vec& a, const Vec& b) {
    return order.compare(a.front().m, a.front().comp, b.front().m, b.front().comp) < 0;
  });
  for (const auto& v : sorted) bb.add_input(v);
  bb.run();
  return bb.result(opt.reduce_tails);
}

Vec normal_form(const Vec& f, const std::vector<Vec>& basis, const Order& order) {
  std::vector<int> idx(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) idx[k] = static_cast<int>(k);
  Acc acc = to_acc(f, order);
  Reducer r{order, basis, idx};
  return r.run(acc, true);
}

bool is_groebner(const std::vector<Vec>& basis, const Order& order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Term& a = basis[i].front();
      const Term& b = basis[j].front();
      if (a.comp != b.comp) continue;
      Monomial l = a.m.lcm(b.m);
      Acc acc(KeyCmp{&order});
      add_multiple(acc, basis[i].begin(), basis[i].end(), l / a.m, Rational(1 / a.c));
      add_multiple(acc, basis[j].begin(), basis[j].end(), l / b.m, Rational(-1 / b.c));
      Vec s;
      for (auto& kv : acc) s.push_back(Term{kv.first.m, kv.first.c, kv.second});
      if (!normal_form(s, basis, order).empty()) return false;
    }
  return true;
}

}  // namespace p3d::gb
