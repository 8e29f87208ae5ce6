#include "overlap/expansion.hpp"

#include "overlap/errors.hpp"

#include <bit>
#include <stdexcept>

namespace overlap {

namespace {

using i128 = __int128;

// Visits every nonzero v in span(basis) together with M v, where images[i] =
// M basis[i], in Gray-code order.
template <class Visit>
void for_each_nonzero(const std::vector<BitVector>& basis, const std::vector<BitVector>& images, std::size_t n,
                      std::size_t m, Visit&& visit) {
  BitVector v(n);
  BitVector image(m);
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto j = static_cast<std::size_t>(std::countr_zero(i));
    v ^= basis[j];
    image ^= images[j];
    visit(static_cast<const BitVector&>(v), static_cast<const BitVector&>(image));
  }
}

std::vector<BitVector> standard_basis(std::size_t n) {
  std::vector<BitVector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(BitVector::unit(n, i));
  return out;
}

void check_budget(std::size_t dim, int max_dim, const std::string& what) {
  if (static_cast<int>(dim) > max_dim) throw BudgetExceeded(what, static_cast<int>(dim), max_dim);
}

void check_degree(const ComplexSkeleton& x, int k, int lo, const char* fn) {
  if (k < lo || k > x.dim())
    throw std::out_of_range(std::string(fn) + ": degree " + std::to_string(k) + " outside [" + std::to_string(lo) +
                            ", " + std::to_string(x.dim()) + "]");
}

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational power(const Rational& b, int e) {
  Rational p = 1;
  for (int i = 0; i < e; ++i) p *= b;
  return p;
}

}  // namespace

CofillingResult cofilling_constant(const ComplexSkeleton& x, const WeightedNorm& n, int k, int max_dim) {
  check_degree(x, k, 1, "cofilling_constant");
  const std::size_t lower = x.num_cells(k - 1);
  const auto cocycles = cocycle_basis(x, k - 1);
  const auto reps = complement_basis(cocycles, standard_basis(lower));
  const std::string where = "cofilling in dimension " + std::to_string(k);
  check_budget(reps.size(), max_dim, where + ": coboundaries");
  check_budget(cocycles.size(), max_dim, where + ": cocycles");

  CofillingResult out{Rational(0), BitVector(x.num_cells(k)), BitVector(lower)};
  if (reps.empty()) return out;

  const GF2Matrix& delta = x.coboundary(k);
  std::vector<BitVector> images;
  for (const auto& r : reps) images.push_back(delta.multiply(r));

  const auto& w_lo = n.scaled(k - 1);
  const auto& w_hi = n.scaled(k);
  std::int64_t best_fill = -1;
  std::int64_t best_beta = 1;
  bool infinite = false;
  for_each_nonzero(reps, images, lower, x.num_cells(k), [&](const BitVector& alpha, const BitVector& beta) {
    if (infinite) return;
    const auto fill = coset_min_weight(cocycles, alpha, w_lo, max_dim);
    const std::int64_t nb = w_hi.weight_of(beta);
    if (nb == 0) {
      if (fill.scaled_value > 0) {
        infinite = true;
        out.worst_coboundary = beta;
        out.minimal_cofilling = fill.argmin;
      }
      return;
    }
    if (best_fill < 0 || i128(fill.scaled_value) * best_beta > i128(best_fill) * nb) {
      best_fill = fill.scaled_value;
      best_beta = nb;
      out.worst_coboundary = beta;
      out.minimal_cofilling = fill.argmin;
    }
  });
  if (infinite) {
    out.value = ExtRational::infinity();
  } else {
    out.value = w_lo.to_rational(best_fill) / w_hi.to_rational(best_beta);
  }
  return out;
}

ExpansionResult expansion_constant(const ComplexSkeleton& x, const WeightedNorm& n, int k, int max_dim) {
  check_degree(x, k, 1, "expansion_constant");
  const std::size_t lower = x.num_cells(k - 1);
  const auto boundaries = coboundary_basis(x, k - 1);
  const auto reps = complement_basis(boundaries, standard_basis(lower));
  const std::string where = "expansion in dimension " + std::to_string(k);
  check_budget(reps.size(), max_dim, where + ": quotient C^{k-1}/B^{k-1}");
  check_budget(boundaries.size(), max_dim, where + ": coboundaries");

  ExpansionResult out{ExtRational::infinity(), BitVector(lower)};
  if (reps.empty()) return out;

  const GF2Matrix& delta = x.coboundary(k);
  std::vector<BitVector> images;
  for (const auto& r : reps) images.push_back(delta.multiply(r));

  const auto& w_lo = n.scaled(k - 1);
  const auto& w_hi = n.scaled(k);
  std::int64_t best_num = 0;
  std::int64_t best_den = 0;
  for_each_nonzero(reps, images, lower, x.num_cells(k), [&](const BitVector& alpha, const BitVector& dalpha) {
    const auto cls = coset_min_weight(boundaries, alpha, w_lo, max_dim);
    if (cls.scaled_value == 0) return;
    const std::int64_t num = w_hi.weight_of(dalpha);
    if (best_den == 0 || i128(num) * best_den < i128(best_num) * cls.scaled_value) {
      best_num = num;
      best_den = cls.scaled_value;
      out.witness = cls.argmin;
    }
  });
  if (best_den != 0) out.value = w_hi.to_rational(best_num) / w_lo.to_rational(best_den);
  return out;
}

CosystoleResult cosystole(const ComplexSkeleton& x, const WeightedNorm& n, int j, int max_dim) {
  check_degree(x, j, 0, "cosystole");
  const auto cocycles = cocycle_basis(x, j);
  const auto boundaries = coboundary_basis(x, j);
  const auto reps = complement_basis(boundaries, cocycles);
  const std::string where = "cosystole in dimension " + std::to_string(j);
  check_budget(reps.size(), max_dim, where + ": cohomology");
  check_budget(boundaries.size(), max_dim, where + ": coboundaries");

  CosystoleResult out{ExtRational::infinity(), BitVector(x.num_cells(j))};
  if (reps.empty()) return out;

  std::vector<BitVector> no_images(reps.size(), BitVector(0));
  const auto& w = n.scaled(j);
  bool found = false;
  CosetMin best;
  for_each_nonzero(reps, no_images, x.num_cells(j), 0, [&](const BitVector& h, const BitVector&) {
    auto c = coset_min_weight(boundaries, h, w, max_dim);
    if (!found || c.scaled_value < best.scaled_value ||
        (c.scaled_value == best.scaled_value && lex_less(c.argmin, best.argmin))) {
      best = std::move(c);
      found = true;
    }
  });
  out.value = best.value;
  out.witness = best.argmin;
  return out;
}

SparsityResult local_sparsity(const ComplexSkeleton& x, const WeightedNorm& n) {
  SparsityResult best{Rational(-1)};
  for (int td = 0; td <= x.dim(); ++td) {
    for (std::size_t t = 0; t < x.num_cells(td); ++t) {
      for (int k = 0; k <= x.dim(); ++k) {
        Rational v = n.norm(incidence_cochain(x, td, t, k));
        if (v > best.value) best = {v, td, t, k};
      }
    }
  }
  return best;
}

std::vector<int> betti_numbers(const ComplexSkeleton& x) {
  std::vector<int> out;
  for (int k = 0; k <= x.dim(); ++k) {
    const auto z = x.num_cells(k) - rank(x.coboundary(k + 1));
    const auto b = rank(x.coboundary(k));
    out.push_back(static_cast<int>(z) - static_cast<int>(b));
  }
  return out;
}

BudgetRecursion budget_recursion(int d, const Rational& L, const Rational& eps) {
  BudgetRecursion r;
  r.offset.push_back(0);
  r.slope.push_back(2 * L);
  for (int k = 1; k <= d; ++k) {
    r.offset.push_back(L * (d * eps + (k + 1) * r.offset.back()));
    r.slope.push_back(L * (k + 1) * r.slope.back());
  }
  return r;
}

Rational budget_closed_form(int d, int k, const Rational& L, const Rational& eps, const Rational& mu) {
  Rational geometric = 0;
  for (int i = 1; i <= k; ++i) geometric += power(L, i);
  return d * eps * geometric + factorial(k + 1) * power(L, k + 1) * 2 * mu;
}

MuThreshold mu_threshold(int d, const Rational& L, const ExtRational& theta, const Rational& eps) {
  if (d < 1) throw std::invalid_argument("mu_threshold: d must be >= 1");
  if (L <= 0) throw std::invalid_argument("mu_threshold: L must be positive");
  if (eps < 0) throw std::invalid_argument("mu_threshold: epsilon must be nonnegative");
  if (!theta.is_infinite() && theta.value() <= 0) throw std::invalid_argument("mu_threshold: theta must be positive");

  MuThreshold out;
  out.theta_effective = min_with(theta, Rational(1));
  const auto rec = budget_recursion(d, L, eps);
  for (int k = 1; k <= d; ++k) {
    // d eps + (k+1)(offset + slope mu) < theta'
    const auto km1 = static_cast<std::size_t>(k - 1);
    Rational bound = (out.theta_effective - d * eps - (k + 1) * rec.offset[km1]) / ((k + 1) * rec.slope[km1]);
    if (k == 1 || bound < out.mu_max) {
      out.mu_max = bound;
      out.binding_k = k;
    }
  }
  out.status = out.mu_max > 0 ? MuThreshold::Status::ok : MuThreshold::Status::not_sparse_enough;
  const Rational mu = out.mu_max > 0 ? out.mu_max : Rational(0);
  for (int k = 0; k <= d; ++k) {
    out.s_table.push_back(rec.at(static_cast<std::size_t>(k), mu));
    out.s_closed_form.push_back(budget_closed_form(d, k, L, eps, mu));
  }
  out.eps0_recursion_bound = out.theta_effective / (2 * factorial(d + 1) * power(L, d));
  out.quoted_bound = out.theta_effective / (factorial(d + 1) * power(L, d));
  return out;
}

ExpansionReport analyze(const ComplexSkeleton& x, const WeightedNorm& n, int max_dim) {
  ExpansionReport r;
  r.dim = x.dim();
  r.betti = betti_numbers(x);
  r.L = Rational(0);
  r.theta = ExtRational::infinity();
  for (int k = 1; k <= x.dim(); ++k) {
    r.cofilling.push_back(cofilling_constant(x, n, k, max_dim).value);
    r.expansion.push_back(expansion_constant(x, n, k, max_dim).value);
    if (r.cofilling.back() > r.L) r.L = r.cofilling.back();
  }
  for (int j = 0; j <= x.dim(); ++j) {
    r.cosystole.push_back(cosystole(x, n, j, max_dim).value);
    if (j < x.dim() && r.cosystole.back() < r.theta) r.theta = r.cosystole.back();
  }
  r.sparsity = local_sparsity(x, n);

  if (x.dim() < 1) {
    r.mu_note = "threshold needs dimension >= 1";
  } else if (r.L.is_infinite()) {
    r.mu_note = "cofilling constant is infinite";
  } else if (r.L.value() <= 0) {
    r.mu_note = "cofilling constant is zero";
  } else if (!r.theta.is_infinite() && r.theta.value() <= 0) {
    r.mu_note = "cosystole is zero";
  } else {
    r.mu = mu_threshold(x.dim(), r.L.value(), r.theta, r.sparsity.value);
    r.mu_note = r.mu->status == MuThreshold::Status::ok ? "ok" : "not sparse enough";
  }
  return r;
}

}  // namespace overlap
