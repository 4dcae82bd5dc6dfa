#include "gpk/groebner.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

namespace gpk {

namespace {

// Dense numbering of monomials by (total degree, degrevlex rank within the
// degree). Index order coincides with degrevlex order, so a max-heap of
// plain integers pops terms in degrevlex order.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t nvars, std::size_t cap, std::uint32_t max_degree)
      : n_(nvars), cap_(cap), max_degree_(max_degree) {
    binom_.assign(1, std::vector<std::uint64_t>(n_ + 1, 0));
    binom_[0][0] = 1;
    offsets_ = {0, 1};  // degree 0 holds exactly the constant monomial
    monos_.resize(1);
  }

  std::uint32_t index(const Monomial& m) {
    const std::uint32_t d = m.degree();
    if (d > top_degree_) grow(d);
    std::uint64_t rank = 0;
    std::uint32_t remaining = d;
    for (std::size_t k = n_ - 1; k >= 1; --k) {
      const unsigned e = m.exponent(k);
      if (remaining > e) rank += binom(remaining - e - 1 + k, k);
      remaining -= e;
    }
    const auto idx = static_cast<std::uint32_t>(offsets_[d] + rank);
    monos_[idx] = m;
    return idx;
  }

  const Monomial& monomial(std::uint32_t idx) const { return monos_[idx]; }
  std::size_t size() const { return monos_.size(); }
  std::uint32_t top_degree() const { return top_degree_; }

  // Set by the engine so that growth can report partial statistics.
  std::function<void(const std::string&)> on_overflow;

 private:
  std::uint64_t binom(std::size_t a, std::size_t b) {
    while (binom_.size() <= a) {
      const auto& prev = binom_.back();
      std::vector<std::uint64_t> row(n_ + 1, 0);
      row[0] = 1;
      for (std::size_t j = 1; j <= n_; ++j) row[j] = std::min<std::uint64_t>(prev[j - 1] + prev[j], UINT64_MAX / 4);
      binom_.push_back(std::move(row));
    }
    return binom_[a][b];
  }

  void grow(std::uint32_t d) {
    if (d > max_degree_) on_overflow("degree " + std::to_string(d) + " exceeds the budget of " + std::to_string(max_degree_));
    if (n_ == 0) on_overflow("non-constant monomial in a ring without variables");
    while (top_degree_ < d) {
      ++top_degree_;
      // Monomials of degree <= top_degree_: C(n + top, n).
      const std::uint64_t total = binom(n_ + top_degree_, n_);
      if (total > cap_) {
        on_overflow("dense monomial index would need " + std::to_string(total) + " slots (cap " + std::to_string(cap_) + ")");
      }
      offsets_.push_back(total);
    }
    monos_.resize(offsets_.back());
  }

  std::size_t n_;
  std::size_t cap_;
  std::uint32_t max_degree_;
  std::uint32_t top_degree_ = 0;
  std::vector<std::vector<std::uint64_t>> binom_;
  std::vector<std::uint64_t> offsets_;  // offsets_[d] = number of monomials of degree < d
  std::vector<Monomial> monos_;
};

struct Element {
  std::vector<Term> terms;  // monic, decreasing
  std::uint32_t sugar = 0;
  bool active = true;
  const Monomial& lead() const { return terms.front().mono; }
};

struct Pair {
  std::uint32_t i, j;
  Monomial lcm;
  std::uint32_t sugar;
};

class Engine {
 public:
  Engine(RingPtr ring, const GroebnerOptions& opts)
      : ring_(std::move(ring)),
        field_(ring_->field()),
        p_(ring_->field().p()),
        lazy_mod_(p_ < (1u << 16)),
        order_(ring_->order()),
        opts_(opts),
        index_(std::max<std::size_t>(ring_->nvars(), 1), opts.budget.max_monomials, opts.budget.max_degree) {
    index_.on_overflow = [this](const std::string& why) { throw BudgetExceeded("Groebner budget exceeded: " + why, stats_); };
  }

  // --- accumulator -------------------------------------------------------

  void ensure_capacity() {
    const std::size_t n = index_.size();
    if (coef_.size() < n) {
      coef_.resize(n, 0);
      in_heap_.resize(n, 0);
      reducer_.resize(n, -1);
      checked_upto_.resize(n, 0);
    }
  }

  bool heap_less(std::uint32_t a, std::uint32_t b) const {
    if (order_ == MonomialOrder::DegRevLex) return a < b;
    return compare(index_.monomial(a), index_.monomial(b), order_) < 0;
  }

  void heap_push(std::uint32_t idx) {
    heap_.push_back(idx);
    std::push_heap(heap_.begin(), heap_.end(), [this](auto a, auto b) { return heap_less(a, b); });
  }

  std::uint32_t heap_pop() {
    std::pop_heap(heap_.begin(), heap_.end(), [this](auto a, auto b) { return heap_less(a, b); });
    const std::uint32_t idx = heap_.back();
    heap_.pop_back();
    return idx;
  }

  void add_term(const Monomial& m, std::uint64_t value) {
    const std::uint32_t idx = index_.index(m);
    ensure_capacity();
    if (lazy_mod_) {
      coef_[idx] += value;
    } else {
      coef_[idx] = (coef_[idx] + value) % p_;
    }
    if (!in_heap_[idx]) {
      in_heap_[idx] = 1;
      heap_push(idx);
    }
  }

  // acc += c * mult * terms[from..]
  void add_scaled(const std::vector<Term>& terms, std::size_t from, const Monomial& mult, std::uint32_t c) {
    for (std::size_t k = from; k < terms.size(); ++k) {
      add_term(terms[k].mono * mult, std::uint64_t{terms[k].coeff} * c % (lazy_mod_ ? UINT64_MAX : p_));
    }
  }

  std::int32_t find_reducer(std::uint32_t idx) {
    std::int32_t& r = reducer_[idx];
    if (r >= 0) return r;
    const Monomial& m = index_.monomial(idx);
    for (std::uint32_t k = checked_upto_[idx]; k < elems_.size(); ++k) {
      if (elems_[k].lead().divides(m)) {
        r = static_cast<std::int32_t>(k);
        break;
      }
    }
    checked_upto_[idx] = static_cast<std::uint32_t>(elems_.size());
    return r;
  }

  // Drains the accumulator, reducing every term it can. Returns the
  // remainder in decreasing order and raises `sugar` along the way.
  std::vector<Term> drain(std::uint32_t& sugar, bool reduce_terms = true) {
    std::vector<Term> out;
    while (!heap_.empty()) {
      const std::uint32_t idx = heap_pop();
      in_heap_[idx] = 0;
      const auto c = static_cast<std::uint32_t>(coef_[idx] % p_);
      coef_[idx] = 0;
      if (c == 0) continue;
      const std::int32_t r = reduce_terms ? find_reducer(idx) : -1;
      if (r < 0) {
        out.push_back({index_.monomial(idx), c});
        continue;
      }
      const Element& g = elems_[static_cast<std::size_t>(r)];
      const Monomial mult = index_.monomial(idx) / g.lead();
      sugar = std::max(sugar, mult.degree() + g.sugar);
      // Element is monic: subtract c * mult * g, i.e. add (p - c) * mult * tail.
      add_scaled(g.terms, 1, mult, p_ - c);
    }
    return out;
  }

  std::vector<Term> reduce_terms(const std::vector<Term>& terms, std::uint32_t& sugar) {
    for (const auto& t : terms) add_term(t.mono, t.coeff);
    return drain(sugar);
  }

  static void make_monic(std::vector<Term>& terms, const PrimeField& F) {
    if (terms.empty() || terms.front().coeff == 1) return;
    const FieldElement inv = F.inv({terms.front().coeff});
    for (auto& t : terms) t.coeff = F.mul({t.coeff}, inv).value;
  }

  // --- basis management --------------------------------------------------

  std::uint32_t add_element(std::vector<Term> terms, std::uint32_t sugar) {
    make_monic(terms, field_);
    elems_.push_back({std::move(terms), sugar, true});
    const auto t = static_cast<std::uint32_t>(elems_.size() - 1);
    stats_.peak_basis_size = std::max(stats_.peak_basis_size, active_count() + 0);
    if (elems_.size() > opts_.budget.max_basis_size) {
      throw BudgetExceeded("Groebner budget exceeded: basis size above " + std::to_string(opts_.budget.max_basis_size), stats_);
    }
    update_pairs(t);
    return t;
  }

  std::size_t active_count() const {
    std::size_t n = 0;
    for (const auto& e : elems_) n += e.active ? 1 : 0;
    return n;
  }

  std::uint64_t pair_key(std::uint32_t sugar, const Monomial& lcm) const {
    if (opts_.strategy == PairStrategy::Sugar) return (std::uint64_t{sugar} << 32) | lcm.degree();
    return (std::uint64_t{lcm.degree()} << 32) | sugar;
  }

  // Gebauer-Moeller update for the new element t.
  void update_pairs(std::uint32_t t) {
    const Monomial& h = elems_[t].lead();
    struct Cand {
      std::uint32_t i;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (std::uint32_t i = 0; i < t; ++i) {
      if (!elems_[i].active) continue;
      cands.push_back({i, lcm(elems_[i].lead(), h), elems_[i].lead().coprime(h)});
    }
    // A candidate is dropped when another live candidate's lcm divides its
    // lcm; among equal lcms the last survives, unless a coprime one exists.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (b == a || !cands[b].keep) continue;
        if (cands[b].lcm.divides(cands[a].lcm)) {
          cands[a].keep = false;
          break;
        }
      }
    }
    // Old pairs made redundant by h.
    for (auto& [key, bucket] : pairs_) {
      const auto before = bucket.size();
      std::erase_if(bucket, [&](const Pair& pr) {
        if (!h.divides(pr.lcm)) return false;
        const Monomial li = lcm(elems_[pr.i].lead(), h);
        const Monomial lj = lcm(elems_[pr.j].lead(), h);
        return !(li == pr.lcm) && !(lj == pr.lcm);
      });
      stats_.pairs_pruned += before - bucket.size();
      pair_count_ -= before - bucket.size();
    }
    for (const auto& c : cands) {
      if (!c.keep || c.coprime) {
        ++stats_.pairs_pruned;
        continue;
      }
      const Element& gi = elems_[c.i];
      const Element& gt = elems_[t];
      const std::uint32_t sugar = std::max(gi.sugar + (c.lcm.degree() - gi.lead().degree()),
                                           gt.sugar + (c.lcm.degree() - gt.lead().degree()));
      pairs_[pair_key(sugar, c.lcm)].push_back({c.i, t, c.lcm, sugar});
      ++pair_count_;
    }
    for (std::uint32_t i = 0; i < t; ++i) {
      if (elems_[i].active && h.divides(elems_[i].lead())) elems_[i].active = false;
    }
  }

  // --- driver ------------------------------------------------------------

  // Linear inter-reduction: Gauss-Jordan on the coefficient rows of the
  // inputs, pivoting on leading monomials. Returns rows with distinct leads.
  std::vector<std::vector<Term>> interreduce_linear(const std::vector<Polynomial>& inputs) {
    std::map<std::uint32_t, std::size_t> pivot_of;  // lead index -> row
    std::vector<std::vector<Term>> rows;
    auto eliminate = [&](const std::vector<Term>& terms) {
      for (const auto& t : terms) add_term(t.mono, t.coeff);
      std::vector<Term> out;
      while (!heap_.empty()) {
        const std::uint32_t idx = heap_pop();
        in_heap_[idx] = 0;
        const auto c = static_cast<std::uint32_t>(coef_[idx] % p_);
        coef_[idx] = 0;
        if (c == 0) continue;
        auto it = pivot_of.find(idx);
        if (it == pivot_of.end()) {
          out.push_back({index_.monomial(idx), c});
        } else {
          add_scaled(rows[it->second], 1, Monomial{}, p_ - c);
        }
      }
      return out;
    };
    for (const auto& f : inputs) {
      std::vector<Term> r = eliminate(f.terms());
      if (r.empty()) continue;
      make_monic(r, field_);
      const std::uint32_t lead = index_.index(r.front().mono);
      pivot_of.emplace(lead, rows.size());
      rows.push_back(std::move(r));
    }
    // Back-substitution so that no row contains another row's pivot.
    for (std::size_t k = 0; k < rows.size(); ++k) {
      std::vector<Term> tail(rows[k].begin() + 1, rows[k].end());
      const std::uint32_t lead_idx = index_.index(rows[k].front().mono);
      pivot_of.erase(lead_idx);
      std::vector<Term> reduced = eliminate(tail);
      pivot_of.emplace(lead_idx, k);
      reduced.insert(reduced.begin(), rows[k].front());
      rows[k] = std::move(reduced);
    }
    return rows;
  }

  // Returns false if the ideal turned out to be the unit ideal.
  bool run(const std::vector<Polynomial>& inputs) {
    std::vector<std::vector<Term>> rows = interreduce_linear(inputs);
    for (const auto& r : rows) {
      if (r.front().mono.is_one()) return false;
    }
    std::sort(rows.begin(), rows.end(),
              [this](const auto& a, const auto& b) { return compare(a.front().mono, b.front().mono, order_) < 0; });
    for (auto& r : rows) {
      stats_.max_degree = std::max(stats_.max_degree, r.front().mono.degree());
      std::uint32_t sugar = 0;
      for (const auto& t : r) sugar = std::max(sugar, t.mono.degree());
      std::vector<Term> red = reduce_terms(r, sugar);
      if (red.empty()) continue;
      if (red.front().mono.is_one()) return false;
      add_element(std::move(red), sugar);
    }

    while (pair_count_ > 0) {
      auto it = pairs_.begin();
      while (it->second.empty()) it = pairs_.erase(it);
      Pair pr = it->second.back();
      it->second.pop_back();
      --pair_count_;

      if (stats_.pairs_processed >= opts_.budget.max_pair_reductions) {
        throw BudgetExceeded("Groebner budget exceeded: more than " + std::to_string(opts_.budget.max_pair_reductions) +
                                 " pair reductions",
                             stats_);
      }
      ++stats_.pairs_processed;
      stats_.max_degree = std::max(stats_.max_degree, pr.lcm.degree());

      const Element& gi = elems_[pr.i];
      const Element& gj = elems_[pr.j];
      add_scaled(gi.terms, 1, pr.lcm / gi.lead(), 1);
      add_scaled(elems_[pr.j].terms, 1, pr.lcm / gj.lead(), p_ - 1);
      std::uint32_t sugar = pr.sugar;
      std::vector<Term> red = drain(sugar);
      if (red.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (red.front().mono.is_one()) return false;
      add_element(std::move(red), sugar);
    }
    return true;
  }

  std::vector<Polynomial> reduced_basis() {
    std::vector<Polynomial> out;
    for (const auto& e : elems_) {
      if (!e.active) continue;
      std::vector<Term> tail(e.terms.begin() + 1, e.terms.end());
      std::uint32_t sugar = 0;
      std::vector<Term> red = reduce_terms(tail, sugar);
      red.insert(red.begin(), e.terms.front());
      out.push_back(Polynomial::from_sorted_terms(ring_, std::move(red)));
    }
    std::sort(out.begin(), out.end(), [this](const Polynomial& a, const Polynomial& b) {
      return compare(a.leading_term().mono, b.leading_term().mono, order_) < 0;
    });
    return out;
  }

  // Plain division remainder against arbitrary (not necessarily Groebner) divisors.
  std::vector<Term> remainder(const Polynomial& f, std::span<const Polynomial> divisors) {
    for (const auto& d : divisors) {
      if (d.is_zero()) continue;
      std::vector<Term> terms = d.in_ring(ring_).terms();
      make_monic(terms, field_);
      elems_.push_back({std::move(terms), 0, true});
    }
    std::uint32_t sugar = 0;
    return reduce_terms(f.in_ring(ring_).terms(), sugar);
  }

  GroebnerStats& stats() {
    stats_.basis_size = active_count();
    return stats_;
  }

 private:
  RingPtr ring_;
  PrimeField field_;
  std::uint32_t p_;
  bool lazy_mod_;
  MonomialOrder order_;
  GroebnerOptions opts_;
  MonomialIndex index_;

  std::vector<std::uint64_t> coef_;
  std::vector<std::uint8_t> in_heap_;
  std::vector<std::int32_t> reducer_;
  std::vector<std::uint32_t> checked_upto_;
  std::vector<std::uint32_t> heap_;

  std::vector<Element> elems_;
  std::map<std::uint64_t, std::vector<Pair>> pairs_;
  std::size_t pair_count_ = 0;
  GroebnerStats stats_;
};

RingPtr ordered_ring(const RingPtr& ring, MonomialOrder order) {
  return ring->order() == order ? ring : ring->with_order(order);
}

}  // namespace

Polynomial GroebnerBasis::reduce(const Polynomial& f) const { return normal_form(f, gens_, order()); }

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, MonomialOrder order) {
  for (const auto& b : basis) {
    if (!b.ring()->same_shape(*f.ring())) throw InputError("normal_form: ring mismatch");
  }
  const RingPtr ring = ordered_ring(f.ring(), order);
  Engine engine(ring, GroebnerOptions{});
  std::vector<Term> r = engine.remainder(f, basis);
  return Polynomial::from_sorted_terms(ring, std::move(r)).in_ring(f.ring());
}

namespace {

GroebnerBasis compute(const RingPtr& base, std::span<const Polynomial> gens, MonomialOrder order,
                      const GroebnerOptions& opts) {
  const RingPtr ring = ordered_ring(base, order);
  std::vector<Polynomial> inputs;
  for (const auto& g : gens) {
    if (!g.ring()->same_shape(*base)) throw InputError("groebner_basis: generators live in different rings");
    if (!g.is_zero()) inputs.push_back(g.in_ring(ring));
  }
  Engine engine(ring, opts);
  const bool proper = engine.run(inputs);
  if (!proper) {
    GroebnerStats stats = engine.stats();
    stats.basis_size = 1;
    return GroebnerBasis(ring, {Polynomial::constant(ring, 1)}, stats);
  }
  std::vector<Polynomial> basis = engine.reduced_basis();
  return GroebnerBasis(ring, std::move(basis), engine.stats());
}

}  // namespace

GroebnerBasis groebner_basis(std::span<const Polynomial> gens, MonomialOrder order, const GroebnerOptions& opts) {
  if (gens.empty()) throw InputError("groebner_basis needs at least one generator to fix the ring");
  return compute(gens.front().ring(), gens, order, opts);
}

bool is_unit_ideal(std::span<const Polynomial> gens, MonomialOrder order, const GroebnerOptions& opts) {
  if (gens.empty()) return false;
  return groebner_basis(gens, order, opts).is_unit();
}

int ideal_dimension(std::span<const Polynomial> gens, MonomialOrder order, const GroebnerOptions& opts) {
  if (gens.empty()) throw InputError("ideal_dimension needs at least one generator to fix the ring");
  const GroebnerBasis gb = groebner_basis(gens, order, opts);
  std::vector<Monomial> leads;
  for (const auto& g : gb.generators()) leads.push_back(g.leading_term().mono);
  return dimension_from_leading_monomials(leads, gb.ring()->nvars());
}

int dimension_from_leading_monomials(std::span<const Monomial> leads, std::size_t nvars) {
  for (const auto& m : leads)
    if (m.is_one()) return -1;
  if (nvars > 24) throw InputError("dimension search supports at most 24 variables");
  // Support of each leading monomial as a variable bitmask.
  std::vector<std::uint32_t> supports;
  for (const auto& m : leads) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m.exponent(i)) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  const std::uint32_t full = nvars == 32 ? ~0u : ((1u << nvars) - 1);
  for (std::uint32_t subset = 0;; ++subset) {
    const int size = std::popcount(subset);
    if (size > best) {
      const bool independent =
          std::none_of(supports.begin(), supports.end(), [subset](std::uint32_t s) { return (s & ~subset) == 0; });
      if (independent) best = size;
    }
    if (subset == full) break;
  }
  return best;
}

}  // namespace gpk
