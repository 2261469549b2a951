#include "fthresh/artinian.hpp"

#include <algorithm>
#include <deque>

#include "fthresh/errors.hpp"
#include "fthresh/groebner.hpp"

namespace fthresh {

ArtinianAlgebra::ArtinianAlgebra(const Ideal& ideal)
    : ring_(ideal.ring()->ambient()), gb_(ideal.groebner_basis()) {
  if (!is_zero_dimensional(ideal) && !ideal.is_unit())
    throw PreconditionError("quotient by " + ideal.to_string() + " is not finite dimensional");
  const std::size_t n = ring_->num_variables();
  auto standard = [&](const Monomial& m) {
    return std::none_of(gb_.begin(), gb_.end(),
                        [&](const Polynomial& g) { return g.leading_monomial().divides(m); });
  };
  if (!ideal.is_unit()) {
    // Standard monomials form an order ideal; walk it from 1.
    std::deque<Monomial> queue{Monomial{}};
    index_.emplace(Monomial{}, 0);
    basis_.push_back(Monomial{});
    while (!queue.empty()) {
      Monomial m = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        Monomial next = m * Monomial::variable(v);
        if (index_.count(next) || !standard(next)) continue;
        index_.emplace(next, 0);
        basis_.push_back(next);
        queue.push_back(next);
      }
    }
    const auto& order = ring_->order();
    std::sort(basis_.begin(), basis_.end(),
              [&](const Monomial& a, const Monomial& b) { return order.greater(b, a); });
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<std::uint32_t>(i);
  }

  tables_.assign(n, std::vector<Sparse>(basis_.size()));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      Monomial m = basis_[i] * Monomial::variable(v);
      auto it = index_.find(m);
      if (it != index_.end()) {
        tables_[v][i].push_back({it->second, 1});
        continue;
      }
      Polynomial nf = normal_form(Polynomial::term(ring_, m, 1), gb_);
      for (const auto& t : nf.terms()) tables_[v][i].push_back({index_.at(t.monomial), t.coeff});
    }
  }
}

Vec ArtinianAlgebra::one() const {
  Vec v = zero();
  if (!v.empty()) v[0] = 1;
  return v;
}

Vec ArtinianAlgebra::to_vector(const Polynomial& f) const {
  Vec v = zero();
  const Polynomial nf = normal_form(f, gb_);
  for (const auto& t : nf.terms()) v[index_.at(t.monomial)] = t.coeff;
  return v;
}

Polynomial ArtinianAlgebra::to_polynomial(const Vec& v) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) terms.push_back({basis_[i], v[i]});
  return Polynomial::from_terms(ring_, std::move(terms));
}

Vec ArtinianAlgebra::multiply_variable(const Vec& v, std::size_t var) const {
  const auto& f = field();
  const std::uint64_t p = f.characteristic();
  Vec out = zero();
  const auto& table = tables_[var];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    for (const auto& [j, c] : table[i])
      out[j] = static_cast<Coeff>((out[j] + static_cast<std::uint64_t>(v[i]) * c) % p);
  }
  return out;
}

Vec ArtinianAlgebra::multiply_monomial(const Vec& v, const Monomial& m) const {
  Vec out = v;
  for (std::size_t var = 0; var < ring_->num_variables(); ++var)
    for (std::uint32_t k = 0; k < m[var]; ++k) {
      out = multiply_variable(out, var);
      if (is_zero(out)) return out;
    }
  return out;
}

Vec ArtinianAlgebra::multiply(const Vec& v, const Polynomial& g) const {
  Vec out = zero();
  for (const auto& t : g.terms()) axpy(field(), out, t.coeff, multiply_monomial(v, t.monomial));
  return out;
}

std::vector<Polynomial> ArtinianAlgebra::annihilator(const std::vector<Polynomial>& gens) const {
  const std::size_t n = dimension();
  // Row (g, j) of the stacked multiplication matrix; column i is e_i.
  std::vector<Vec> rows(gens.size() * n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = zero();
    e[i] = 1;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Vec image = multiply(e, gens[k]);
      for (std::size_t j = 0; j < n; ++j) rows[k * n + j][i] = image[j];
    }
  }
  std::vector<Polynomial> out;
  for (const auto& u : nullspace(field(), rows, n)) out.push_back(to_polynomial(u));
  return out;
}

namespace {

// Sorts (index, coefficient) pairs and sums duplicates mod p.
SparseVec collapse(std::vector<std::pair<std::uint32_t, std::uint64_t>>& terms, std::uint64_t p) {
  std::sort(terms.begin(), terms.end());
  SparseVec out;
  for (std::size_t a = 0; a < terms.size();) {
    std::uint64_t sum = 0;
    std::size_t b = a;
    for (; b < terms.size() && terms[b].first == terms[a].first; ++b) sum += terms[b].second;
    if (sum % p) out.push_back({terms[a].first, static_cast<Coeff>(sum % p)});
    a = b;
  }
  return out;
}

}  // namespace

std::vector<SparseVec> ArtinianAlgebra::multiplication_matrix(const Polynomial& g) const {
  const std::uint64_t p = field().characteristic();
  std::vector<SparseVec> columns(dimension());
  std::vector<std::pair<std::uint32_t, std::uint64_t>> acc, next;
  for (std::size_t j = 0; j < dimension(); ++j) {
    acc.clear();
    for (const auto& t : g.terms()) {
      SparseVec s{{static_cast<std::uint32_t>(j), t.coeff}};
      for (std::size_t var = 0; var < ring_->num_variables() && !s.empty(); ++var)
        for (std::uint32_t k = 0; k < t.monomial[var] && !s.empty(); ++k) {
          next.clear();
          for (const auto& [i, c] : s)
            for (const auto& [target, d] : tables_[var][i])
              next.push_back({target, static_cast<std::uint64_t>(c) * d % p});
          s = collapse(next, p);
        }
      for (const auto& [i, c] : s) acc.push_back({i, c});
    }
    columns[j] = collapse(acc, p);
  }
  return columns;
}

Vec ArtinianAlgebra::apply(const std::vector<SparseVec>& columns, const SparseVec& v) const {
  const std::uint64_t p = field().characteristic();
  std::vector<std::uint64_t> acc(dimension(), 0);
  for (const auto& [j, c] : v)
    for (const auto& [i, d] : columns[j]) acc[i] = (acc[i] + static_cast<std::uint64_t>(c) * d) % p;
  Vec out(dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Coeff>(acc[i]);
  return out;
}

}  // namespace fthresh
