#include "fthresh/groebner.hpp"

#include <algorithm>
#include <map>

namespace fthresh {
namespace {

struct DescendingOrder {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

using TermMap = std::map<Monomial, Coeff, DescendingOrder>;

void subtract_multiple(TermMap& h, const Polynomial& g, const Monomial& m, Coeff c,
                       const PrimeField& field) {
  for (const auto& t : g.terms()) {
    Monomial mono = t.monomial * m;
    Coeff v = field.mul(t.coeff, c);
    auto [it, inserted] = h.try_emplace(mono, field.neg(v));
    if (!inserted) {
      it->second = field.sub(it->second, v);
      if (it->second == 0) h.erase(it);
    }
  }
}

const Polynomial* find_divisor(const Monomial& m, std::span<const Polynomial> basis) {
  for (const auto& g : basis)
    if (g.leading_monomial().divides(m)) return &g;
  return nullptr;
}

Polynomial reduce_with(const Polynomial& f, std::span<const Polynomial> basis, bool full) {
  if (f.is_zero() || basis.empty()) return f;
  const auto& ring = f.ring();
  const auto& field = ring->field();
  TermMap h(DescendingOrder{&ring->order()});
  for (const auto& t : f.terms()) h.emplace(t.monomial, t.coeff);
  std::vector<Term> rem;
  while (!h.empty()) {
    auto it = h.begin();
    const Polynomial* g = find_divisor(it->first, basis);
    if (!g) {
      if (!full) break;
      rem.push_back({it->first, it->second});
      h.erase(it);
      continue;
    }
    Monomial m = it->first / g->leading_monomial();
    Coeff c = field.mul(it->second, field.inv(g->leading_coefficient()));
    subtract_multiple(h, *g, m, c, field);
  }
  for (const auto& [mono, c] : h) rem.push_back({mono, c});
  return Polynomial::from_terms(ring, std::move(rem));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& field = f.ring()->field();
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_term(l / f.leading_monomial(), field.inv(f.leading_coefficient()));
  Polynomial b = g.times_term(l / g.leading_monomial(), field.inv(g.leading_coefficient()));
  return a - b;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(const PolyRingPtr& ring) : ring_(ring), order_(&ring->order()) {}

  // Returns false when the unit ideal was detected.
  bool add(Polynomial h) {
    h = reduce_with(h, active_polys(), true);
    if (h.is_zero()) return true;
    if (h.is_constant()) return false;
    update(h.monic());
    return true;
  }

  bool run() {
    while (!pairs_.empty()) {
      auto best = select();
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      Polynomial s = s_polynomial(polys_[p.i], polys_[p.j]);
      Polynomial h = reduce_with(s, active_polys(), true);
      if (h.is_zero()) continue;
      if (h.is_constant()) return false;
      update(h.monic());
    }
    return true;
  }

  std::vector<Polynomial> active() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(polys_[k]);
    return out;
  }

 private:
  const std::vector<Polynomial>& active_polys() {
    if (cache_dirty_) {
      active_cache_ = active();
      cache_dirty_ = false;
    }
    return active_cache_;
  }

  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k].lcm;
      const auto& b = pairs_[best].lcm;
      if (a.degree() != b.degree()) {
        if (a.degree() < b.degree()) best = k;
        continue;
      }
      int cmp = order_->compare(a, b);
      if (cmp < 0 || (cmp == 0 && std::tie(pairs_[k].i, pairs_[k].j) <
                                      std::tie(pairs_[best].i, pairs_[best].j)))
        best = k;
    }
    return best;
  }

  // Gebauer-Moeller update with the new basis element h.
  void update(Polynomial h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    cache_dirty_ = true;
    const Monomial lm_h = polys_[hi].leading_monomial();

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k])
        candidates.push_back({k, hi, Monomial::lcm(polys_[k].leading_monomial(), lm_h)});

    // Chain criterion among the new pairs.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& c = candidates[a];
      bool coprime = Monomial::coprime(polys_[c.i].leading_monomial(), lm_h);
      bool redundant = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < candidates.size() && !redundant; ++b)
          redundant = candidates[b].lcm.divides(c.lcm);
        for (std::size_t b = 0; b < kept.size() && !redundant; ++b)
          redundant = kept[b].lcm.divides(c.lcm);
      }
      if (!redundant) kept.push_back(c);
    }
    // Product criterion.
    std::vector<Pair> fresh;
    for (auto& c : kept)
      if (!Monomial::coprime(polys_[c.i].leading_monomial(), lm_h)) fresh.push_back(c);

    // Old pairs made redundant by h.
    std::vector<Pair> old;
    for (auto& p : pairs_) {
      bool drop = lm_h.divides(p.lcm) &&
                  !(Monomial::lcm(polys_[p.i].leading_monomial(), lm_h) == p.lcm) &&
                  !(Monomial::lcm(polys_[p.j].leading_monomial(), lm_h) == p.lcm);
      if (!drop) old.push_back(p);
    }
    pairs_ = std::move(old);
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());

    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && lm_h.divides(polys_[k].leading_monomial())) active_[k] = false;
  }

  PolyRingPtr ring_;
  const MonomialOrder* order_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::vector<Polynomial> active_cache_;
  bool cache_dirty_ = true;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  return reduce_with(f, basis, true);
}

std::vector<Polynomial> reduced_groebner_basis(const PolyRingPtr& ring,
                                               std::vector<Polynomial> generators) {
  std::vector<Polynomial> input;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return {Polynomial::constant(ring, 1)};
    input.push_back(g.monic());
  }
  if (input.empty()) return {};
  // Feed low leading monomials first: fewer pairs get generated early.
  std::sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->order().greater(b.leading_monomial(), a.leading_monomial());
  });

  Buchberger bb(ring);
  for (auto& g : input)
    if (!bb.add(g)) return {Polynomial::constant(ring, 1)};
  if (!bb.run()) return {Polynomial::constant(ring, 1)};

  std::vector<Polynomial> basis = bb.active();
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->order().greater(b.leading_monomial(), a.leading_monomial());
  });
  // Inter-reduce tails.
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<Polynomial> others;
    others.reserve(basis.size() - 1);
    for (std::size_t l = 0; l < basis.size(); ++l)
      if (l != k) others.push_back(basis[l]);
    const Term lt = basis[k].leading_term();
    Polynomial tail = basis[k] - Polynomial::term(ring, lt.monomial, lt.coeff);
    basis[k] = (Polynomial::term(ring, lt.monomial, lt.coeff) + normal_form(tail, others)).monic();
  }
  return basis;
}

bool is_reduced_groebner_basis(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero() || basis[i].leading_coefficient() != 1) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[i].terms())
        if (basis[j].leading_monomial().divides(t.monomial)) return false;
      if (j > i && !normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace fthresh
