// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinstat/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <map>

#include "spinstat/amplitudes.hpp"
#include "spinstat/errors.hpp"
#include "spinstat/oracle.hpp"
#include "spinstat/sampling.hpp"
#include "spinstat/symmetrization.hpp"

namespace spinstat::verify {

namespace {

using sampling::Rng;

// Dense matrices hold dim^2 complex numbers; 4096^2 of them is 256 MiB.
constexpr std::size_t kMatrixDenseCap = oracle::kDefaultDenseCap;
// Completeness checks sum over a full product basis of this many states.
constexpr std::size_t kBasisCap = 1024;

constexpr std::array<std::string_view, 10> kSuites = {
    "projectors", "exchange-factor", "sense-invariance", "equivalence", "chi-independence",
    "exclusion",  "case-analysis",   "breakdown",        "chained",     "all"};

class Recorder {
 public:
  void add(std::string name, Json params, Json expected, Json actual, bool pass) {
    cases_.push_back({std::move(name), std::move(params), std::move(expected), std::move(actual), pass});
  }
  std::vector<CaseRecord> take() { return std::move(cases_); }

 private:
  std::vector<CaseRecord> cases_;
};

Json bound(const char* op, double value) { return Json{{op, value}}; }

RotationSense flipped(RotationSense sense) {
  return sense == RotationSense::counterclockwise ? RotationSense::clockwise : RotationSense::counterclockwise;
}

double tol_or(const SuiteConfig& cfg, double fallback) { return cfg.tolerance.value_or(fallback); }

Json pattern_json(const ProductState& state) {
  Json out = Json::array();
  for (const auto& slot : state.slots) out.push_back(slot.spin.two_m());
  return out;
}

bool mixed_possible(const SuiteConfig& cfg) { return cfg.particles >= 2 && cfg.two_s >= 1; }

std::vector<int> any_pattern(Rng& rng, const SuiteConfig& cfg) {
  if (mixed_possible(cfg)) return sampling::random_mixed_pattern(rng, cfg.particles, cfg.two_s);
  return std::vector<int>(cfg.particles, sampling::random_two_m(rng, cfg.two_s));
}

Superposition one(ProductState state) { return Superposition::of(std::move(state)); }

// ---------------------------------------------------------------------------

void suite_projectors(const SuiteConfig& cfg, Recorder& rec) {
  const double tol = tol_or(cfg, kPhaseTolerance);
  const Json params{{"particles", cfg.particles}, {"orbital_dim", cfg.orbital_dim}, {"two_s", cfg.two_s}};
  const auto s = oracle::dense_projector(Projector::symmetrizer, cfg.particles, cfg.orbital_dim, cfg.two_s,
                                         kMatrixDenseCap);
  const auto a = oracle::dense_projector(Projector::antisymmetrizer, cfg.particles, cfg.orbital_dim, cfg.two_s,
                                         kMatrixDenseCap);
  const std::array<std::pair<const char*, double>, 4> checks = {{
      {"S^2 = S", oracle::max_abs_diff(oracle::multiply(s, s), s)},
      {"A^2 = A", oracle::max_abs_diff(oracle::multiply(a, a), a)},
      {"S^dagger = S", oracle::max_abs_diff(oracle::adjoint(s), s)},
      {"A^dagger = A", oracle::max_abs_diff(oracle::adjoint(a), a)},
  }};
  for (const auto& [name, err] : checks) rec.add(name, params, bound("<", tol), err, err < tol);

  // the term-list projector must act like the dense matrix
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = sampling::trial_rng(cfg.seed, t);
    const Superposition state = one(sampling::random_product(rng, cfg.orbital_dim, cfg.two_s, any_pattern(rng, cfg)));
    const auto dense = oracle::densify(state, kMatrixDenseCap);
    double err = 0.0;
    for (const auto which : {Projector::symmetrizer, Projector::antisymmetrizer}) {
      const auto lib = oracle::densify(apply_projector(state, which, cfg.max_particles), kMatrixDenseCap);
      const auto ref = oracle::apply(which == Projector::symmetrizer ? s : a, dense);
      for (std::size_t k = 0; k < lib.amplitudes.size(); ++k)
        err = std::max(err, std::abs(lib.amplitudes[k] - ref.amplitudes[k]));
    }
    rec.add("term projector matches dense #" + std::to_string(t), Json{{"trial", t}, {"m", pattern_json(state.terms()[0])}},
            bound("<", tol), err, err < tol);
  }
}

void suite_exchange_factor(const SuiteConfig& cfg, Recorder& rec) {
  const double tol = tol_or(cfg, kPhaseTolerance);
  const std::size_t n = std::max<std::size_t>(2, cfg.particles);
  const double expected = exchange_factor_F(cfg.two_s);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = sampling::trial_rng(cfg.seed, t);
    ProductState state = sampling::random_equal_m(rng, n, cfg.orbital_dim, cfg.two_s);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    // trial 0 pins the degenerate chi_i == chi_j case, trial 1 pins chi_i > chi_j
    if (t == 0) state.slots[j].chi = state.slots[i].chi;
    if (t == 1 && state.slots[i].chi < state.slots[j].chi) std::swap(state.slots[i].chi, state.slots[j].chi);

    const PairExchange ex = transpose_pair(state, i, j, cfg.sense);
    const double err = std::abs(ex.factor - expected);
    const double path_err = std::abs(ex.path_first + ex.path_second - kTwoPi);
    const bool sign_ok = (ex.factor.real() > 0) == (expected > 0);
    rec.add("transposition factor #" + std::to_string(t),
            Json{{"two_m", state.slots[i].spin.two_m()},
                 {"slots", {i, j}},
                 {"chi_i", state.slots[i].chi.radians()},
                 {"chi_j", state.slots[j].chi.radians()},
                 {"sense", to_string(cfg.sense)}},
            Json{{"factor", expected}, {"tolerance", tol}},
            Json{{"factor", complex_to_json(ex.factor)}, {"path_sum_error", path_err}},
            sign_ok && err < tol && path_err < tol);
  }
}

void suite_sense_invariance(const SuiteConfig& cfg, Recorder& rec) {
  const double phase_tol = tol_or(cfg, kPhaseTolerance);
  const double amp_tol = tol_or(cfg, kAmplitudeTolerance);
  const std::size_t n = std::max<std::size_t>(2, cfg.particles);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = sampling::trial_rng(cfg.seed, t);
    SuiteConfig shaped = cfg;
    shaped.particles = n;
    const auto pattern = any_pattern(rng, shaped);
    const ProductState bra = sampling::random_product(rng, cfg.orbital_dim, cfg.two_s, pattern);
    const ProductState ket = sampling::random_product(rng, cfg.orbital_dim, cfg.two_s, sampling::shuffled(rng, pattern));

    const Complex ccw = transpose_pair(bra, 0, 1, RotationSense::counterclockwise).factor;
    const Complex cw = transpose_pair(bra, 0, 1, RotationSense::clockwise).factor;
    const double factor_err = std::abs(ccw - cw);
    rec.add("factor ccw == cw #" + std::to_string(t), Json{{"m", pattern_json(bra)}}, bound("<", phase_tol),
            Json{{"ccw", complex_to_json(ccw)}, {"cw", complex_to_json(cw)}, {"difference", factor_err}},
            factor_err < phase_tol);

    if (n > cfg.max_particles) continue;
    const double p_ccw = feynman_amplitude(one(bra), one(ket), RotationSense::counterclockwise, cfg.max_particles).probability;
    const double p_cw = feynman_amplitude(one(bra), one(ket), RotationSense::clockwise, cfg.max_particles).probability;
    const double prob_err = std::abs(p_ccw - p_cw);
    rec.add("|f|^2 ccw == cw #" + std::to_string(t), Json{{"m", pattern_json(bra)}},
            bound("<", amp_tol * std::max(1.0, p_ccw)),
            Json{{"ccw", p_ccw}, {"cw", p_cw}}, prob_err < amp_tol * std::max(1.0, p_ccw));
  }
}

void suite_equivalence(const SuiteConfig& cfg, Recorder& rec) {
  const double tol = tol_or(cfg, kAmplitudeTolerance);
  const Shape shape{cfg.particles, cfg.orbital_dim, cfg.two_s};
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = sampling::trial_rng(cfg.seed, t);
    const std::vector<int> pattern(cfg.particles, sampling::random_two_m(rng, cfg.two_s));
    // two-term superpositions with random complex weights on both sides
    Superposition bra(shape), ket(shape);
    std::normal_distribution<double> gauss;
    for (int k = 0; k < 2; ++k) {
      ProductState b = sampling::random_product(rng, cfg.orbital_dim, cfg.two_s, pattern);
      b.coeff = {gauss(rng), gauss(rng)};
      bra.push_back(std::move(b));
      ProductState a = sampling::random_product(rng, cfg.orbital_dim, cfg.two_s, pattern);
      a.coeff = {gauss(rng), gauss(rng)};
      ket.push_back(std::move(a));
    }
    const Complex f_feyn = feynman_amplitude(bra, ket, cfg.sense, cfg.max_particles).f;
    const Complex f_std = standard_amplitude(bra, ket, Statistics::spin_derived(cfg.two_s), cfg.max_particles).f;
    const double err = std::abs(f_feyn - f_std);
    rec.add("feynman == standard #" + std::to_string(t), Json{{"two_m", pattern.front()}}, bound("<", tol),
            Json{{"feynman", complex_to_json(f_feyn)}, {"standard", complex_to_json(f_std)}, {"difference", err}},
            err < tol);
  }
}

void suite_chi_independence(const SuiteConfig& cfg, Recorder& rec) {
  const double tol = tol_or(cfg, kAmplitudeTolerance);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = sampling::trial_rng(cfg.seed, t);
    const auto pattern = any_pattern(rng, cfg);
    const ProductState bra = sampling::random_product(rng, cfg.orbital_dim, cfg.two_s, pattern);
    const ProductState ket = sampling::random_product(rng, cfg.orbital_dim, cfg.two_s, sampling::shuffled(rng, pattern));
    const ProductState bra2 = sampling::resample_chi(rng, bra);
    const ProductState ket2 = sampling::resample_chi(rng, ket);

    const double p0 = feynman_amplitude(one(bra), one(ket), cfg.sense, cfg.max_particles).probability;
    const double p1 = feynman_amplitude(one(bra2), one(ket2), cfg.sense, cfg.max_particles).probability;
    const double p2 = feynman_amplitude(one(bra2), one(ket2), flipped(cfg.sense), cfg.max_particles).probability;
    const double scale = std::max(1.0, p0);
    const bool pass = std::abs(p1 - p0) < tol * scale && std::abs(p2 - p0) < tol * scale;
    rec.add("|f|^2 invariant under chi resampling and sense flip #" + std::to_string(t),
            Json{{"bra_m", pattern_json(bra)}, {"ket_m", pattern_json(ket)}}, bound("<", tol * scale),
            Json{{"original", p0}, {"resampled", p1}, {"resampled_flipped", p2}}, pass);
  }
}

void suite_exclusion(const SuiteConfig& cfg, Recorder& rec) {
  if (cfg.particles < 2) return;
  const double tol = tol_or(cfg, kPhaseTolerance);
  const bool fermion = exchange_factor_F(cfg.two_s) == -1;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = sampling::trial_rng(cfg.seed, t);
    ProductState state = sampling::random_equal_m(rng, cfg.particles, cfg.orbital_dim, cfg.two_s);
    std::uniform_int_distribution<std::size_t> pick(0, cfg.particles - 1);
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    state.slots[j] = state.slots[i];
    const Json params{{"two_m", state.slots[i].spin.two_m()}, {"duplicated", {i, j}}};

    const double a_norm =
        std::sqrt(std::max(0.0, norm_squared(compact(apply_projector(one(state), Projector::antisymmetrizer,
                                                                     cfg.max_particles)))));
    rec.add("A(duplicate) vanishes #" + std::to_string(t), params, bound("<", tol), a_norm, a_norm < tol);

    const Superposition built = build_superposed(state, cfg.sense, cfg.max_particles);
    if (fermion) {
      const double norm = std::sqrt(std::max(0.0, norm_squared(compact(built))));
      rec.add("fermionic sum with duplicate vanishes #" + std::to_string(t), params, bound("<", tol), norm, norm < tol);
    } else {
      const bool sym = is_symmetric(built, kAmplitudeTolerance, cfg.max_particles);
      rec.add("bosonic sum with duplicate is symmetric #" + std::to_string(t), params, true, sym, sym);
    }
  }
}

void suite_case_analysis(const SuiteConfig& cfg, Recorder& rec) {
  const double amp_tol = tol_or(cfg, kAmplitudeTolerance);
  const double phase_tol = tol_or(cfg, kPhaseTolerance);
  const std::size_t n = cfg.particles;
  const auto allowed = allowed_two_m(cfg.two_s);
  const bool can_zero = allowed.size() >= 2;
  const bool can_distinct = n >= 2 && n <= allowed.size();
  const bool can_mixed = n >= 3 && allowed.size() >= 2;

  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = sampling::trial_rng(cfg.seed, t);
    std::vector<const char*> options{"equal"};
    if (can_zero) options.push_back("zero");
    if (can_distinct) options.push_back("distinct");
    if (can_mixed) options.push_back("mixed");
    const std::string_view kind = options[t % options.size()];

    std::vector<int> bra_m;
    std::vector<int> ket_m;
    if (kind == "equal") {
      bra_m.assign(n, sampling::random_two_m(rng, cfg.two_s));
      ket_m = bra_m;
    } else if (kind == "zero") {
      bra_m = any_pattern(rng, cfg);
      ket_m = bra_m;
      const std::size_t slot = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      do {
        ket_m[slot] = sampling::random_two_m(rng, cfg.two_s);
      } while (ket_m[slot] == bra_m[slot]);
      ket_m = sampling::shuffled(rng, ket_m);
    } else if (kind == "distinct") {
      auto pool = sampling::shuffled(rng, allowed);
      bra_m.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
      ket_m = sampling::shuffled(rng, bra_m);
    } else {
      // at least one repeated value and at least two distinct values
      auto pool = sampling::shuffled(rng, allowed);
      bra_m = {pool[0], pool[0], pool[1]};
      while (bra_m.size() < n) bra_m.push_back(sampling::random_two_m(rng, cfg.two_s));
      bra_m = sampling::shuffled(rng, bra_m);
      ket_m = sampling::shuffled(rng, bra_m);
    }

    const ProductState bra = sampling::random_product(rng, cfg.orbital_dim, cfg.two_s, bra_m);
    const ProductState ket = sampling::random_product(rng, cfg.orbital_dim, cfg.two_s, ket_m);
    const TTerm term = t_term(bra, ket, cfg.sense, cfg.max_particles);
    const Json params{{"bra_m", bra_m}, {"ket_m", ket_m}};
    const std::string id = " #" + std::to_string(t);

    if (kind == "zero") {
      const bool pass = term.kind == TermCaseKind::zero && term.value == Complex{} && term.members.empty();
      rec.add("mismatched m multisets give zero" + id, params, Json{{"kind", "zero"}, {"value", {0.0, 0.0}}},
              Json{{"kind", to_string(term.kind)}, {"value", complex_to_json(term.value)}}, pass);
    } else if (kind == "equal") {
      double worst = 0.0;
      for (const auto& m : term.members)
        worst = std::max(worst, std::abs(m.eta - std::pow(-1.0, static_cast<double>(cfg.two_s * m.transpositions))));
      const bool pass = term.kind == TermCaseKind::all_equal_m && worst < phase_tol;
      rec.add("equal m gives eta = (-1)^(2sk)" + id, params, Json{{"kind", "all_equal_m"}, {"eta_error", bound("<", phase_tol)}},
              Json{{"kind", to_string(term.kind)}, {"eta_error", worst}}, pass);
    } else if (kind == "distinct") {
      // the single matching sends each bra slot to the ket slot with its m
      double product = 1.0;
      if (term.members.size() == 1) {
        const auto& p = term.members.front().perm;
        for (std::size_t i = 0; i < n; ++i) product *= std::norm(single_inner(bra.slots[i], ket.slots[p[i]]));
      }
      const double prob = std::norm(term.value);
      const bool pass = term.kind == TermCaseKind::all_distinct_m && term.members.size() == 1 &&
                        std::abs(prob - product) < amp_tol * std::max(1.0, product);
      rec.add("all-distinct m: one member, no interference" + id, params,
              Json{{"kind", "all_distinct_m"}, {"members", 1}, {"probability", product}},
              Json{{"kind", to_string(term.kind)}, {"members", term.members.size()}, {"probability", prob}}, pass);
    } else {
      double worst = 0.0;
      if (!term.members.empty()) {
        const auto& ref = term.members.front();
        for (const auto& m : term.members) {
          const double rel = (m.transpositions + ref.transpositions) % 2 == 1 && cfg.two_s % 2 == 1 ? -1.0 : 1.0;
          worst = std::max(worst, std::abs(rel * m.eta - ref.eta));
        }
      }
      const bool pass = term.kind == TermCaseKind::mixed && term.members.size() >= 2 && worst < phase_tol;
      rec.add("mixed m: common eta_ii across members" + id, params,
              Json{{"kind", "mixed"}, {"eta_spread", bound("<", phase_tol)}},
              Json{{"kind", to_string(term.kind)}, {"members", term.members.size()}, {"eta_spread", worst}}, pass);
    }
  }
}

void suite_breakdown(const SuiteConfig& cfg, Recorder& rec) {
  if (!mixed_possible(cfg)) {
    rec.add("breakdown not applicable", Json{{"particles", cfg.particles}, {"two_s", cfg.two_s}},
            "mixed m needs N >= 2 and s >= 1/2", "every state has equal m; eta = (-1)^(2sk)", true);
    return;
  }
  const double tol = tol_or(cfg, kAmplitudeTolerance);
  const Shape shape{cfg.particles, cfg.orbital_dim, cfg.two_s};
  const auto perms = enumerate_all(cfg.particles, cfg.max_particles);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = sampling::trial_rng(cfg.seed, t);
    const auto pattern = sampling::random_mixed_pattern(rng, cfg.particles, cfg.two_s);
    const ProductState bra = sampling::random_product(rng, cfg.orbital_dim, cfg.two_s, pattern);
    const ProductState ket = sampling::random_product(rng, cfg.orbital_dim, cfg.two_s, sampling::shuffled(rng, pattern));

    std::vector<std::pair<std::vector<std::size_t>, Complex>> weighted;
    for (const auto& p : perms)
      weighted.emplace_back(std::vector<std::size_t>(p.images().begin(), p.images().end()), eta(p, bra, cfg.sense).eta);
    const auto op = oracle::dense_weighted_sum(weighted, shape, Complex{1.0 / static_cast<double>(perms.size()), 0.0},
                                               kMatrixDenseCap);
    const double violation = oracle::max_abs_diff(oracle::multiply(op, op), op);

    const double p0 = feynman_amplitude(one(bra), one(ket), cfg.sense, cfg.max_particles).probability;
    Rng resample = sampling::trial_rng(cfg.seed, t + 0x9e3779b97f4a7c15ULL);
    const double p1 = feynman_amplitude(one(sampling::resample_chi(resample, bra)),
                                        one(sampling::resample_chi(resample, ket)), cfg.sense, cfg.max_particles)
                          .probability;
    const bool physics_ok = std::abs(p1 - p0) < tol * std::max(1.0, p0);
    rec.add("eta-weighted operator is not idempotent #" + std::to_string(t), Json{{"m", pattern}},
            Json{{"idempotence_violation", bound(">", kBreakdownThreshold)}, {"probability_drift", bound("<", tol)}},
            Json{{"idempotence_violation", violation}, {"probability_drift", std::abs(p1 - p0)}},
            violation > kBreakdownThreshold && physics_ok);
  }
}

std::vector<Superposition> product_basis(const Shape& shape) {
  const std::size_t local = shape.orbital_dim * static_cast<std::size_t>(shape.two_s + 1);
  std::size_t count = 1;
  for (std::size_t k = 0; k < shape.particles; ++k) count *= local;
  std::vector<Superposition> basis;
  basis.reserve(count);
  for (std::size_t index = 0; index < count; ++index) {
    ProductState state;
    std::size_t rest = index;
    for (std::size_t k = 0; k < shape.particles; ++k) {
      const std::size_t digit = rest % local;
      rest /= local;
      SingleParticleState slot{std::vector<Complex>(shape.orbital_dim), {}, Chi(0.0)};
      slot.orbital[digit / static_cast<std::size_t>(shape.two_s + 1)] = 1.0;
      slot.spin = SpinLabel(shape.two_s, shape.two_s - 2 * static_cast<int>(digit % static_cast<std::size_t>(shape.two_s + 1)));
      state.slots.push_back(std::move(slot));
    }
    basis.push_back(Superposition::of(std::move(state)));
  }
  return basis;
}

void suite_chained(const SuiteConfig& cfg, Recorder& rec) {
  const double tol = tol_or(cfg, kAmplitudeTolerance);
  const Shape shape{cfg.particles, cfg.orbital_dim, cfg.two_s};
  const std::size_t local = cfg.orbital_dim * static_cast<std::size_t>(cfg.two_s + 1);
  std::size_t basis_size = 1;
  for (std::size_t k = 0; k < cfg.particles && basis_size <= kBasisCap; ++k) basis_size *= local;
  const bool with_basis = basis_size <= kBasisCap;
  const std::vector<Superposition> basis = with_basis ? product_basis(shape) : std::vector<Superposition>{};

  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = sampling::trial_rng(cfg.seed, t);
    const auto pattern = any_pattern(rng, cfg);
    const Superposition bra = one(sampling::random_product(rng, cfg.orbital_dim, cfg.two_s, pattern));
    const Superposition ket =
        one(sampling::random_product(rng, cfg.orbital_dim, cfg.two_s, sampling::shuffled(rng, pattern)));
    const Json params{{"m", pattern}};
    const std::string id = " #" + std::to_string(t);

    if (with_basis) {
      const Complex direct = feynman_amplitude(bra, ket, cfg.sense, cfg.max_particles).f;
      const Complex chained = chained_amplitude(bra, basis, ket, cfg.sense, Observation::unobserved, cfg.max_particles);
      const double err = std::abs(direct - chained);
      rec.add("complete intermediates reproduce f" + id, params, complex_to_json(direct),
              Json{{"chained", complex_to_json(chained)}, {"difference", err}}, err < tol);
    }

    // two orthogonal unit intermediates: the unobserved sum carries the cross term
    ProductState first = sampling::random_product(rng, cfg.orbital_dim, cfg.two_s, pattern);
    ProductState second = first;
    bool orthogonal = false;
    if (cfg.orbital_dim >= 2) {
      auto& v = second.slots[0].orbital;
      v = sampling::random_orbital(rng, cfg.orbital_dim);
      Complex overlap{0.0, 0.0};
      for (std::size_t k = 0; k < v.size(); ++k) overlap += std::conj(first.slots[0].orbital[k]) * v[k];
      double sq = 0.0;
      for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] -= overlap * first.slots[0].orbital[k];
        sq += std::norm(v[k]);
      }
      for (auto& amp : v) amp /= std::sqrt(sq);
      orthogonal = true;
    } else if (cfg.two_s >= 1) {
      const auto allowed = allowed_two_m(cfg.two_s);
      second.slots[0].spin = SpinLabel(cfg.two_s, allowed.front() == first.slots[0].spin.two_m() ? allowed.back()
                                                                                                 : allowed.front());
      orthogonal = true;
    }
    if (!orthogonal) continue;

    const std::vector<Superposition> pair{one(first), one(second)};
    const Complex unobserved = chained_amplitude(bra, pair, ket, cfg.sense, Observation::unobserved, cfg.max_particles);
    const Complex observed = chained_amplitude(bra, pair, ket, cfg.sense, Observation::observed, cfg.max_particles);
    const Superposition bra_sym = build_superposed_general(bra, cfg.sense, cfg.max_particles);
    const Complex a1 = superposition_inner(bra_sym, pair[0]) * superposition_inner(pair[0], ket);
    const Complex a2 = superposition_inner(bra_sym, pair[1]) * superposition_inner(pair[1], ket);
    const double cross = 2.0 * (a1 * std::conj(a2)).real();
    const double lhs = std::norm(unobserved) - (std::norm(a1) + std::norm(a2));
    const double err = std::abs(lhs - cross) + std::abs(observed.real() - (std::norm(a1) + std::norm(a2))) +
                       std::abs(observed.imag());
    rec.add("observed vs unobserved differ by the cross term" + id, params, Json{{"cross_term", cross}},
            Json{{"unobserved_minus_diagonal", lhs}, {"observed", observed.real()}, {"error", err}},
            err < tol * std::max(1.0, std::norm(unobserved)));
  }
}

using SuiteFn = std::function<void(const SuiteConfig&, Recorder&)>;

const std::map<std::string_view, SuiteFn>& registry() {
  static const std::map<std::string_view, SuiteFn> table = {
      {"projectors", suite_projectors},       {"exchange-factor", suite_exchange_factor},
      {"sense-invariance", suite_sense_invariance}, {"equivalence", suite_equivalence},
      {"chi-independence", suite_chi_independence}, {"exclusion", suite_exclusion},
      {"case-analysis", suite_case_analysis}, {"breakdown", suite_breakdown},
      {"chained", suite_chained},
  };
  return table;
}

bool needs_matrix(std::string_view suite) {
  return suite == "projectors" || suite == "breakdown" || suite == "all";
}

Json config_json(const SuiteConfig& cfg) {
  return Json{{"suite", cfg.suite},
              {"particles", cfg.particles},
              {"two_s", cfg.two_s},
              {"orbital_dim", cfg.orbital_dim},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"tolerance", cfg.tolerance ? Json(*cfg.tolerance) : Json("default")},
              {"sense", to_string(cfg.sense)},
              {"max_particles", cfg.max_particles}};
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

void validate(const SuiteConfig& cfg) {
  if (std::find(kSuites.begin(), kSuites.end(), cfg.suite) == kSuites.end())
    throw ConfigError("unknown suite \"" + cfg.suite + "\"");
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
  if (cfg.tolerance && !(*cfg.tolerance > 0.0)) throw ConfigError("tolerance must be > 0");
  if (cfg.particles < 1) throw ConfigError("particles must be >= 1");
  if (cfg.particles > cfg.max_particles)
    throw ConfigError("particles=" + std::to_string(cfg.particles) + " exceeds the enumeration cap of " +
                      std::to_string(cfg.max_particles));
  if (cfg.orbital_dim < 1) throw ConfigError("orbital dimension must be >= 1");
  if (cfg.two_s < 0) throw ConfigError("two_s must be >= 0");
  if (needs_matrix(cfg.suite)) {
    try {
      oracle::dense_dimension(Shape{cfg.particles, cfg.orbital_dim, cfg.two_s}, kMatrixDenseCap);
    } catch (const CapacityError& e) {
      throw ConfigError(std::string("suite \"") + cfg.suite + "\" builds dense matrices: " + e.what());
    }
  }
}

VerificationReport run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  Recorder rec;
  if (cfg.suite == "all") {
    for (const auto& name : kSuites) {
      if (name == "all") continue;
      Recorder sub;
      registry().at(name)(cfg, sub);
      for (auto& c : sub.take()) rec.add(std::string(name) + "/" + c.name, c.params, c.expected, c.actual, c.pass);
    }
  } else {
    registry().at(cfg.suite)(cfg, rec);
  }

  VerificationReport report{cfg.suite, config_json(cfg), rec.take(), {}};
  report.summary.total = report.cases.size();
  for (const auto& c : report.cases) (c.pass ? report.summary.passed : report.summary.failed)++;
  return report;
}

Json to_json(const VerificationReport& report, bool with_timestamp) {
  Json cases = Json::array();
  for (const auto& c : report.cases)
    cases.push_back(Json{{"name", c.name}, {"params", c.params}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  Json out{{"suite", report.suite},
           {"config", report.config},
           {"cases", std::move(cases)},
           {"summary", {{"total", report.summary.total}, {"passed", report.summary.passed}, {"failed", report.summary.failed}}},
           {"version", kVersion}};
  if (with_timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    out["timestamp"] = buf;
  }
  return out;
}

}  // namespace spinstat::verify
