#include "gpk/grassmann.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

namespace gpk {

std::string coordinate_name(std::size_t i, std::size_t j) { return "x" + std::to_string(i) + std::to_string(j); }

PlueckerPair pair_of_coordinate(std::size_t index) {
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (pair_index(i, j, 5) == index) return {i, j};
  throw InputError("Plücker index out of range: " + std::to_string(index));
}

std::vector<std::string> pluecker_names() {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) names.push_back(coordinate_name(i, j));
  return names;
}

RingPtr pluecker_ring(const PrimeField& field, MonomialOrder order) {
  return PolyRing::make(field, pluecker_names(), order);
}

std::vector<Polynomial> pfaffian_ideal(const RingPtr& pluecker) {
  if (pluecker->nvars() != kPlueckerDim) throw InputError("pfaffian_ideal expects the 10-variable Plücker ring");
  const auto m = SkewMatrixSymbolic::generic(pluecker, 5);
  std::vector<Polynomial> out;
  for (std::size_t omit = 0; omit < 5; ++omit) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < 5; ++k)
      if (k != omit) idx.push_back(k);
    out.push_back(pfaffian(m, idx));
  }
  return out;
}

PatchChart patch_parametrization(const RingPtr& pluecker, std::size_t i, std::size_t j) {
  if (!(i < j && j < 5)) throw InputError("chart pivot must satisfy 0 <= i < j <= 4");
  PatchChart chart;
  chart.pivot = {i, j};
  std::vector<std::string> names;
  for (std::size_t k = 0; k < kPlueckerDim; ++k) {
    const auto [a, b] = pair_of_coordinate(k);
    const bool ina = a == i || a == j;
    const bool inb = b == i || b == j;
    if (ina != inb) {
      chart.free.push_back(k);
      names.push_back(pluecker->name(k));
    } else if (!ina) {
      chart.dependent.push_back(k);
    }
  }
  chart.ring = PolyRing::make(pluecker->field(), names, pluecker->order());

  const Polynomial zero(chart.ring);
  chart.images.assign(kPlueckerDim, zero);
  chart.images[pair_index(i, j, 5)] = Polynomial::constant(chart.ring, 1);
  for (std::size_t f = 0; f < chart.free.size(); ++f) chart.images[chart.free[f]] = Polynomial::variable(chart.ring, f);

  const auto generic = SkewMatrixSymbolic::generic(pluecker, 5);
  for (std::size_t dep : chart.dependent) {
    const auto [k, l] = pair_of_coordinate(dep);
    std::vector<std::size_t> idx{i, j, k, l};
    std::sort(idx.begin(), idx.end());
    const Polynomial pf = pfaffian(generic, idx);
    // pf = s * x_ij * x_kl + rest with s = ±1 and rest in the free coordinates.
    std::vector<Polynomial> at0 = chart.images;
    std::vector<Polynomial> at1 = chart.images;
    at0[dep] = zero;
    at1[dep] = Polynomial::constant(chart.ring, 1);
    const Polynomial rest = pf.substitute(at0);
    const Polynomial s = pf.substitute(at1) - rest;
    if (!s.is_nonzero_constant()) throw InvariantError("Pfaffian on " + chart.name() + " is not linear in " + pluecker->name(dep));
    const FieldElement sinv = pluecker->field().inv({s.leading_term().coeff});
    chart.images[dep] = -rest.scale(sinv);
  }

  for (const auto& pf : pfaffian_ideal(pluecker)) {
    if (!pf.substitute(chart.images).is_zero()) {
      throw InvariantError("chart " + chart.name() + " does not parametrize the Grassmannian: " + pf.to_string());
    }
  }
  return chart;
}

std::vector<PatchChart> all_patch_charts(const RingPtr& pluecker) {
  std::vector<PatchChart> out;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) out.push_back(patch_parametrization(pluecker, i, j));
  return out;
}

GPK3Instance GPK3Instance::normalized() const {
  if (g1.is_identity()) return *this;
  return {MatrixFF::identity(g1.field(), g1.rows()), mat_inverse(g1) * g2, label};
}

std::vector<Polynomial> gpk3_patch_ideal(const GPK3Instance& inst, const PatchChart& chart) {
  if (!inst.g1.is_identity()) throw InputError("gpk3_patch_ideal expects g1 = 1; normalize the instance first");
  const MatrixFF& g = inst.g2;
  if (g.rows() != kPlueckerDim || g.cols() != kPlueckerDim) throw InputError("g2 must be 10x10");
  const PrimeField& F = chart.ring->field();
  if (!(g.field() == F)) throw InputError("matrix and chart live over different fields");

  // (V*g)_k = sum_i x_i g(i,k), then each x_i goes to its chart image.
  std::vector<Polynomial> images;
  for (std::size_t k = 0; k < kPlueckerDim; ++k) {
    Polynomial acc(chart.ring);
    for (std::size_t i = 0; i < kPlueckerDim; ++i) {
      if (g(i, k).value != 0) acc = acc + chart.images[i].scale(g(i, k));
    }
    images.push_back(std::move(acc));
  }
  const RingPtr pluecker = pluecker_ring(F, chart.ring->order());
  std::vector<Polynomial> out;
  for (const auto& pf : pfaffian_ideal(pluecker)) out.push_back(pf.substitute(images));
  return out;
}

std::vector<Polynomial> singular_scheme_ideal(const std::vector<Polynomial>& cy) {
  if (cy.empty()) return {};
  std::vector<Polynomial> out = cy;
  const PolyMatrix jac = jacobian(cy);
  if (jac.rows() >= 3 && jac.cols() >= 3) {
    for (auto& m : minors(jac, 3)) out.push_back(std::move(m));
  }
  return out;
}

std::string to_string(PatchOutcome outcome) {
  switch (outcome) {
    case PatchOutcome::UnitIdeal: return "unit";
    case PatchOutcome::NotUnit: return "not-unit";
    case PatchOutcome::BudgetExceeded: return "budget-exceeded";
    case PatchOutcome::Skipped: return "skipped";
  }
  return "?";
}

PatchVerdict certify_patch(const GPK3Instance& inst, const PatchChart& chart, const GroebnerOptions& opts) {
  PatchVerdict v;
  v.pivot = chart.pivot;
  v.name = chart.name();
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto sing = singular_scheme_ideal(gpk3_patch_ideal(inst, chart));
    if (sing.empty()) {
      v.outcome = PatchOutcome::NotUnit;
      v.note = "zero ideal";
    } else {
      const GroebnerBasis gb = groebner_basis(sing, chart.ring->order(), opts);
      v.stats = gb.stats();
      v.outcome = gb.is_unit() ? PatchOutcome::UnitIdeal : PatchOutcome::NotUnit;
    }
  } catch (const BudgetExceeded& e) {
    v.outcome = PatchOutcome::BudgetExceeded;
    v.stats = e.stats();
    v.note = e.what();
  }
  v.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

SmoothnessCertificate certify_smooth_gpk3(const GPK3Instance& raw, const CertifyOptions& opts) {
  const GPK3Instance inst = raw.normalized();
  const PrimeField& F = inst.g2.field();
  const auto charts = all_patch_charts(pluecker_ring(F));

  SmoothnessCertificate cert;
  cert.prime = F.p();
  cert.matrix_sha = matrix_sha256(inst.g2);
  cert.patches.resize(charts.size());
  for (std::size_t k = 0; k < charts.size(); ++k) {
    cert.patches[k].pivot = charts[k].pivot;
    cert.patches[k].name = charts[k].name();
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t k = next++; k < charts.size(); k = next++) {
      if (opts.stop_at_first_failure && failed) continue;
      cert.patches[k] = certify_patch(inst, charts[k], opts.groebner);
      if (!cert.patches[k].unit_ideal()) failed = true;
    }
  };
  const unsigned jobs = std::clamp<unsigned>(opts.jobs, 1, static_cast<unsigned>(charts.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  cert.smooth = std::all_of(cert.patches.begin(), cert.patches.end(), [](const auto& v) { return v.unit_ideal(); });
  cert.inconclusive = !cert.smooth && std::none_of(cert.patches.begin(), cert.patches.end(), [](const auto& v) {
    return v.outcome == PatchOutcome::NotUnit;
  });
  return cert;
}

SearchResult search_orthogonal_smooth(const PrimeField& field, std::uint64_t seed, std::size_t max_attempts,
                                      const CertifyOptions& opts) {
  if (!field.is_3_mod_4()) throw InputError("search needs p = 3 mod 4");
  RandomState rng(seed);
  CertifyOptions fast = opts;
  fast.stop_at_first_failure = true;
  std::vector<SearchAttempt> attempts;
  for (std::size_t a = 1; a <= max_attempts; ++a) {
    MatrixFF t = gram_schmidt_orthogonal(field, kPlueckerDim, rng);
    SmoothnessCertificate cert = certify_smooth_gpk3(GPK3Instance::standard(t), fast);
    SearchAttempt rec{a, {}, {}};
    if (cert.smooth) {
      attempts.push_back(rec);
      return {std::move(t), std::move(cert), std::move(attempts)};
    }
    for (const auto& v : cert.patches) {
      if (v.outcome == PatchOutcome::NotUnit || v.outcome == PatchOutcome::BudgetExceeded) {
        rec.failed_patch = v.name;
        rec.reason = to_string(v.outcome);
        break;
      }
    }
    attempts.push_back(rec);
  }
  throw SearchExhausted("no smooth orthogonal instance in " + std::to_string(max_attempts) + " attempts", attempts);
}

MatrixFF skew_form(const PrimeField& field, std::span<const FieldElement> coords) {
  if (coords.size() != kPlueckerDim) throw InputError("a skew form on F^5 has 10 coordinates");
  MatrixFF m(field, 5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      const FieldElement c = coords[pair_index(i, j, 5)];
      m(i, j) = c;
      m(j, i) = field.neg(c);
    }
  return m;
}

SkewRank skew_rank(const MatrixFF& form) {
  if (!form.is_square()) throw InputError("skew_rank: square matrix expected");
  const PrimeField& F = form.field();
  const std::size_t n = form.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (form(i, i).value != 0) throw InputError("skew_rank: nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j)
      if (F.add(form(i, j), form(j, i)).value != 0) throw InputError("skew_rank: matrix is not antisymmetric");
  }
  // Row reduce to RREF, then read the null space off the free columns.
  MatrixFF a = form;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t r = row;
    while (r < n && a(r, col).value == 0) ++r;
    if (r == n) continue;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(r, c), a(row, c));
    const FieldElement inv = F.inv(a(row, col));
    for (std::size_t c = 0; c < n; ++c) a(row, c) = F.mul(a(row, c), inv);
    for (std::size_t rr = 0; rr < n; ++rr) {
      if (rr == row || a(rr, col).value == 0) continue;
      const FieldElement f = a(rr, col);
      for (std::size_t c = 0; c < n; ++c) a(rr, c) = F.sub(a(rr, c), F.mul(f, a(row, c)));
    }
    pivot_cols.push_back(col);
    ++row;
  }
  SkewRank out;
  out.rank = pivot_cols.size();
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<FieldElement> v(n, FieldElement{0});
    v[free] = {1};
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = F.neg(a(k, free));
    out.kernel.push_back(std::move(v));
  }
  return out;
}

GPK3Instance double_mirror(const GPK3Instance& inst) {
  return {mat_inverse(inst.g1).transpose(), mat_inverse(inst.g2).transpose(), inst.label};
}

namespace {

// All five 4x4 Pfaffians vanish, i.e. rank <= 2.
bool pfaffians_vanish(const PlueckerPoint& x, std::uint32_t p) {
  static constexpr std::size_t kQuads[5][4] = {{1, 2, 3, 4}, {0, 2, 3, 4}, {0, 1, 3, 4}, {0, 1, 2, 4}, {0, 1, 2, 3}};
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t { return x[pair_index(i, j, 5)]; };
  for (const auto& q : kQuads) {
    const std::uint64_t pos = at(q[0], q[1]) * at(q[2], q[3]) + at(q[0], q[3]) * at(q[1], q[2]);
    const std::uint64_t neg = at(q[0], q[2]) * at(q[1], q[3]);
    if ((pos + std::uint64_t{p} * p - neg) % p != 0) return false;
  }
  return true;
}

}  // namespace

void for_each_projective_point(const PrimeField& field, const EnumerationOptions& opts,
                               const std::function<void(const PlueckerPoint&)>& fn) {
  const std::uint32_t q = field.p();
  if (q > opts.max_prime) {
    throw ResourceError("P^9 enumeration over F_" + std::to_string(q) + " exceeds the cap q <= " +
                        std::to_string(opts.max_prime));
  }
  for (std::size_t lead = 0; lead < kPlueckerDim; ++lead) {
    PlueckerPoint x{};
    x[lead] = 1;
    // Odometer over the coordinates after the leading one.
    while (true) {
      fn(x);
      if (lead + 1 == kPlueckerDim) break;
      std::size_t k = kPlueckerDim;
      while (k > lead + 1) {
        --k;
        if (++x[k] < q) break;
        x[k] = 0;
      }
      if (k == lead + 1 && x[k] == 0) break;
    }
  }
}

bool is_rank2(const PlueckerPoint& x, std::uint32_t p) {
  return std::any_of(x.begin(), x.end(), [](std::uint32_t c) { return c != 0; }) && pfaffians_vanish(x, p);
}

std::vector<PlueckerPoint> grassmannian_points(const PrimeField& field, const EnumerationOptions& opts) {
  std::vector<PlueckerPoint> out;
  for_each_projective_point(field, opts, [&](const PlueckerPoint& x) {
    if (pfaffians_vanish(x, field.p())) out.push_back(x);
  });
  return out;
}

std::vector<PlueckerPoint> rank2_points_after(const PrimeField& field, const MatrixFF& h,
                                              const EnumerationOptions& opts) {
  std::vector<PlueckerPoint> out;
  for_each_projective_point(field, opts, [&](const PlueckerPoint& x) {
    if (is_rank2(apply_to_point(h, x), field.p())) out.push_back(x);
  });
  return out;
}

PlueckerPoint apply_to_point(const MatrixFF& h, const PlueckerPoint& x) {
  const PrimeField& F = h.field();
  PlueckerPoint out{};
  for (std::size_t r = 0; r < kPlueckerDim; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < kPlueckerDim; ++c) acc += std::uint64_t{h(r, c).value} * x[c];
    out[r] = static_cast<std::uint32_t>(acc % F.p());
  }
  return out;
}

std::uint64_t enumerate_rank2_points(const PrimeField& field, const MatrixFF& g, Side side,
                                     const EnumerationOptions& opts) {
  if (g.rows() != kPlueckerDim || g.cols() != kPlueckerDim) throw InputError("g must be 10x10");
  const MatrixFF h = side == Side::X ? mat_inverse(g) : g.transpose();
  std::uint64_t count = 0;
  for (const auto& x : grassmannian_points(field, opts)) count += is_rank2(apply_to_point(h, x), field.p());
  return count;
}

PlueckerPoint pluecker_of_rows(const PrimeField& field, std::span<const FieldElement> u,
                                                         std::span<const FieldElement> v) {
  PlueckerPoint x{};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      x[pair_index(i, j, 5)] = field.sub(field.mul(u[i], v[j]), field.mul(u[j], v[i])).value;
  return x;
}

std::vector<PlueckerPoint> grassmannian_points_rref(const PrimeField& field) {
  const std::uint32_t q = field.p();
  std::vector<PlueckerPoint> out;
  // Row u has its pivot at c0, row v at c1 > c0; u is zero left of c0 and at
  // c1, v is zero left of c1. The remaining entries run over F_q.
  for (std::size_t c0 = 0; c0 < 5; ++c0)
    for (std::size_t c1 = c0 + 1; c1 < 5; ++c1) {
      std::vector<std::size_t> slots;  // 0..4 for u, 5..9 for v
      for (std::size_t c = c0 + 1; c < 5; ++c)
        if (c != c1) slots.push_back(c);
      for (std::size_t c = c1 + 1; c < 5; ++c) slots.push_back(5 + c);
      std::vector<std::uint32_t> vals(slots.size(), 0);
      while (true) {
        std::array<FieldElement, 10> rows{};
        rows[c0] = {1};
        rows[5 + c1] = {1};
        for (std::size_t k = 0; k < slots.size(); ++k) rows[slots[k]] = {vals[k]};
        auto x = pluecker_of_rows(field, std::span(rows).subspan(0, 5), std::span(rows).subspan(5, 5));
        // x_{c0 c1} = 1 is the first nonzero coordinate, so x is normalized.
        out.push_back(x);
        std::size_t k = 0;
        while (k < vals.size() && ++vals[k] == q) vals[k++] = 0;
        if (k == vals.size()) break;
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_grassmannian_rref(const PrimeField& field) { return grassmannian_points_rref(field).size(); }

}  // namespace gpk
