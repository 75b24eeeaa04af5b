// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "../support.hpp"
#include "spinstat/amplitudes.hpp"
#include "spinstat/oracle.hpp"

using namespace spinstat;
using namespace spinstat::testing;

namespace {

constexpr auto kCcw = RotationSense::counterclockwise;
constexpr auto kCw = RotationSense::clockwise;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Superposition one(ProductState p) { return Superposition::of(std::move(p)); }

RotationSense other(RotationSense s) { return s == kCcw ? kCw : kCcw; }

ProductState redraw_chi(Gen& gen, ProductState p) {
  for (auto& s : p.slots) s.chi = Chi(gen.chi());
  return p;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// 1. Equal-m transposition factor is (-1)^(2s) for every s, m, angle pair and sense.
Outcome exchange_factor_law() {
  Gen gen(1001);
  std::size_t cases = 0;
  double worst = 0.0;
  bool signs = true;
  for (int two_s = 0; two_s <= 4; ++two_s)
    for (int two_m : allowed_two_m(two_s))
      for (int k = 0; k < 50; ++k) {
        auto psi = gen.product_with(2, two_s, {two_m, two_m});
        if (k == 0) psi.slots[1].chi = psi.slots[0].chi;
        if (k == 1 && psi.slots[0].chi < psi.slots[1].chi) std::swap(psi.slots[0].chi, psi.slots[1].chi);
        const double expected = exchange_factor_F(two_s);
        for (auto sense : {kCcw, kCw}) {
          const Complex f = transpose_pair(psi, 0, 1, sense).factor;
          signs = signs && (f.real() > 0) == (expected > 0);
          worst = std::max(worst, std::abs(f - expected));
          ++cases;
        }
      }
  return {signs && worst < 1e-12, std::to_string(cases) + " cases, max phase error " + fmt(worst)};
}

// 2. Closed-form F_chi against the two-rotation construction.
Outcome fchi_consistency() {
  Gen gen(1002);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const int two_s = gen.integer(1, 4);
    const auto pattern = gen.mixed_pattern(2, two_s);
    const auto psi = gen.product_with(2, two_s, pattern);
    const Complex closed =
        exchange_factor_Fchi(two_s, pattern[0], pattern[1], psi.slots[0].chi, psi.slots[1].chi);
    const Complex built = transpose_pair(psi, 0, 1, k % 2 == 0 ? kCcw : kCw).factor;
    worst = std::max(worst, std::abs(closed - built));
  }
  bool reduces = true;
  for (int two_s = 0; two_s <= 4; ++two_s)
    for (int two_m : allowed_two_m(two_s))
      for (int k = 0; k < 10; ++k)
        reduces = reduces && exchange_factor_Fchi(two_s, two_m, two_m, Chi(gen.chi()), Chi(gen.chi())) ==
                                 Complex{static_cast<double>(exchange_factor_F(two_s)), 0.0};
  return {worst < 1e-12 && reduces,
          "200 mixed-m cases, max error " + fmt(worst) + (reduces ? ", equal m reduces exactly" : ", equal m mismatch")};
}

// 3. Dense S and A are Hermitian idempotents.
Outcome projector_identities() {
  double worst = 0.0;
  std::size_t shapes = 0;
  for (std::size_t n : {2, 3, 4})
    for (std::size_t d_orb = 1; d_orb <= 3; ++d_orb)
      for (int two_s = 0; two_s <= 4; ++two_s) {
        if (d_orb * static_cast<std::size_t>(two_s + 1) > 8) continue;
        for (auto which : {Projector::symmetrizer, Projector::antisymmetrizer}) {
          const auto p = oracle::dense_projector(which, n, d_orb, two_s);
          worst = std::max(worst, oracle::max_abs_diff(oracle::multiply(p, p), p));
          worst = std::max(worst, oracle::max_abs_diff(oracle::adjoint(p), p));
        }
        ++shapes;
      }
  return {worst < 1e-12, std::to_string(shapes) + " shapes, max entry error " + fmt(worst)};
}

// 4. Feynman and standard amplitudes agree for equal m.
Outcome feynman_standard_equivalence() {
  Gen gen(1004);
  double worst = 0.0;
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (int two_s = 0; two_s <= 4; ++two_s)
      for (int k = 0; k < 100; ++k) {
        const int two_m = gen.two_m(two_s);
        const std::size_t d = gen.size(1, 3);
        const auto bra = gen.product_with(d, two_s, std::vector<int>(n, two_m));
        const auto ket = gen.product_with(d, two_s, std::vector<int>(n, two_m));
        const Complex f = feynman_amplitude(one(bra), one(ket), k % 2 == 0 ? kCcw : kCw).f;
        const Complex g = standard_amplitude(one(bra), one(ket), Statistics::spin_derived(two_s)).f;
        worst = std::max(worst, std::abs(f - g));
        ++cases;
      }
  return {worst < 1e-10, std::to_string(cases) + " instances, max |df| " + fmt(worst)};
}

// 5. Integral spin sums are symmetric, half-integral antisymmetric; duplicates vanish.
Outcome spin_statistics() {
  Gen gen(1005);
  bool ok = true;
  std::size_t checked = 0;
  for (int two_s = 0; two_s <= 4; ++two_s)
    for (int two_m : allowed_two_m(two_s))
      for (std::size_t n : {2, 3, 4}) {
        // D = N keeps the antisymmetric sum nonzero
        const auto phi = build_superposed(gen.product_with(n, two_s, std::vector<int>(n, two_m)), kCcw);
        ok = ok && (two_s % 2 == 0 ? is_symmetric(phi, 1e-10) && !is_antisymmetric(phi, 1e-10)
                                   : is_antisymmetric(phi, 1e-10) && !is_symmetric(phi, 1e-10));
        ++checked;
      }
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = gen.size(2, 4);
    const int two_s = gen.integer(0, 4);
    auto psi = gen.any(n, 2, two_s);
    const std::size_t i = gen.size(0, n - 1);
    std::size_t j = gen.size(0, n - 1);
    while (j == i) j = gen.size(0, n - 1);
    psi.slots[j] = psi.slots[i];
    worst = std::max(worst,
                     std::sqrt(norm_squared(compact(apply_projector(one(psi), Projector::antisymmetrizer)))));
  }
  return {ok && worst < 1e-12,
          std::to_string(checked) + " (s, m, N) sums classified" + (ok ? "" : " with errors") +
              ", max duplicate-slot norm " + fmt(worst)};
}

// 6. |f|^2 is unchanged by redrawing every chi and flipping the sense.
Outcome chi_sense_independence() {
  Gen gen(1006);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = gen.size(2, 3);
    const int two_s = gen.integer(1, 4);
    const auto pattern = gen.mixed_pattern(n, two_s);
    const auto bra = gen.product_with(gen.size(1, 3), two_s, pattern);
    const auto ket = gen.product_with(bra.slots[0].orbital.size(), two_s, gen.shuffle(pattern));
    const auto sense = k % 2 == 0 ? kCcw : kCw;
    const double p0 = feynman_amplitude(one(bra), one(ket), sense).probability;
    const double p1 =
        feynman_amplitude(one(redraw_chi(gen, bra)), one(redraw_chi(gen, ket)), other(sense)).probability;
    worst = std::max(worst, std::abs(p0 - p1));
  }
  return {worst < 1e-10, "100 mixed-m instances, max |d|f|^2| " + fmt(worst)};
}

// 7. Zero / all-distinct / mixed case analysis of T terms.
Outcome case_analysis() {
  Gen gen(1007);
  bool zero_ok = true;
  for (int k = 0; k < 100; ++k) {
    const int two_s = gen.integer(1, 4);
    const std::size_t n = gen.size(1, 4);
    std::vector<int> bra_m(n);
    for (auto& m : bra_m) m = gen.two_m(two_s);
    auto ket_m = bra_m;
    const std::size_t slot_k = gen.size(0, n - 1);
    while (ket_m[slot_k] == bra_m[slot_k]) ket_m[slot_k] = gen.two_m(two_s);
    const auto t = t_term(gen.product_with(2, two_s, bra_m), gen.product_with(2, two_s, gen.shuffle(ket_m)), kCcw);
    zero_ok = zero_ok && t.kind == TermCaseKind::zero && t.value == Complex{} && t.members.empty();
  }

  bool distinct_ok = true;
  double distinct_err = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int two_s = gen.integer(1, 4);
    const std::size_t n = gen.size(2, std::min<std::size_t>(4, static_cast<std::size_t>(two_s) + 1));
    auto pool = gen.shuffle(allowed_two_m(two_s));
    pool.resize(n);
    const auto bra = gen.product_with(2, two_s, pool);
    const auto ket = gen.product_with(2, two_s, gen.shuffle(pool));
    const auto t = t_term(bra, ket, k % 2 == 0 ? kCcw : kCw);
    if (t.kind != TermCaseKind::all_distinct_m || t.members.size() != 1) {
      distinct_ok = false;
      continue;
    }
    double product = 1.0;
    for (std::size_t i = 0; i < n; ++i) product *= std::norm(single_inner(bra.slots[i], ket.slots[t.members[0].perm[i]]));
    distinct_err = std::max(distinct_err, std::abs(feynman_amplitude(one(bra), one(ket), kCcw).probability - product));
  }

  bool mixed_ok = true;
  double spread = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int two_s = gen.integer(1, 4);
    const std::size_t n = gen.size(3, 4);
    const auto values = gen.shuffle(allowed_two_m(two_s));
    std::vector<int> pattern{values[0], values[0], values[1]};
    while (pattern.size() < n) pattern.push_back(gen.two_m(two_s));
    pattern = gen.shuffle(pattern);
    const auto t = t_term(gen.product_with(2, two_s, pattern), gen.product_with(2, two_s, gen.shuffle(pattern)),
                          k % 2 == 0 ? kCcw : kCw);
    mixed_ok = mixed_ok && t.kind == TermCaseKind::mixed && t.members.size() >= 2;
    // eta_alpha = eta_ii (-1)^(2s k_alpha): the leftover factor is common to all members
    const auto& ref = t.members.front();
    for (const auto& m : t.members) {
      const double rel = (two_s % 2 == 1 && (m.transpositions + ref.transpositions) % 2 == 1) ? -1.0 : 1.0;
      spread = std::max(spread, std::abs(rel * m.eta - ref.eta));
    }
  }
  const bool pass = zero_ok && distinct_ok && distinct_err < 1e-10 && mixed_ok && spread < 1e-12;
  std::ostringstream os;
  os << "zero " << (zero_ok ? "exact" : "WRONG") << "; distinct " << (distinct_ok ? "one member" : "WRONG")
     << ", |f|^2 error " << fmt(distinct_err) << "; mixed eta spread " << fmt(spread);
  return {pass, os.str()};
}

// 8. The eta-weighted operator fails idempotence for mixed m while |f|^2 stays invariant.
Outcome breakdown() {
  Gen gen(1008);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = gen.size(2, 3);
    const int two_s = gen.integer(1, 2);
    const auto pattern = gen.mixed_pattern(n, two_s);
    const auto bra = gen.product_with(2, two_s, pattern);
    const auto ket = gen.product_with(2, two_s, gen.shuffle(pattern));
    const Shape shape{n, 2, two_s};
    const auto perms = enumerate_all(n);
    std::vector<std::pair<std::vector<std::size_t>, Complex>> weighted;
    for (const auto& p : perms)
      weighted.emplace_back(std::vector<std::size_t>(p.images().begin(), p.images().end()), eta(p, bra, kCcw).eta);
    const auto op = oracle::dense_weighted_sum(weighted, shape, 1.0 / static_cast<double>(perms.size()));
    const double violation = oracle::max_abs_diff(oracle::multiply(op, op), op);
    if (violation <= 1e-6) continue;
    const double p0 = feynman_amplitude(one(bra), one(ket), kCcw).probability;
    const double p1 = feynman_amplitude(one(redraw_chi(gen, bra)), one(redraw_chi(gen, ket)), kCw).probability;
    std::ostringstream os;
    os << "instance " << k << " (N=" << n << ", 2s=" << two_s << "): idempotence violation " << fmt(violation)
       << ", |f|^2 drift " << fmt(std::abs(p0 - p1));
    return {std::abs(p0 - p1) < 1e-10, os.str()};
  }
  return {false, "no mixed-m instance violated idempotence by more than 1e-6"};
}

// 9. Step-wise rotation converges to rotate_chi; a full turn of m = 1/2 gives -1.
Outcome rotation_convergence() {
  Gen gen(1009);
  double worst = 0.0;
  std::size_t seam = 0;
  for (int k = 0; k < 100; ++k) {
    const int two_s = gen.integer(0, 4);
    const auto s = gen.slot_with(1, two_s, gen.two_m(two_s));
    const Chi target(gen.chi());
    const auto sense = k % 2 == 0 ? kCcw : kCw;
    const auto r = rotate_chi(s, target, sense);
    seam += static_cast<std::size_t>(r.winding);
    worst = std::max(worst, std::abs(oracle::incremental_rotation(s.spin.two_m(), s.chi, target, sense, 1000) - r.factor));
  }
  const Complex turn = oracle::incremental_rotation_path(1, 2.0 * std::numbers::pi, kCcw, 1000);
  const Complex turn_exact = rotate_chi(slot(unit(1, 0), 1, 1, 0.0), Chi(0.0), kCcw, ZeroPath::full_turn).factor;
  const double turn_err = std::max(std::abs(turn + 1.0), std::abs(turn_exact + 1.0));
  return {worst < 1e-9 && seam > 0 && turn_err < 1e-9,
          "100 cases (" + std::to_string(seam) + " across the seam), max error " + fmt(worst) +
              "; full turn error " + fmt(turn_err)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"exchange factor law", exchange_factor_law},
      {"F_chi consistency", fchi_consistency},
      {"projector identities", projector_identities},
      {"Feynman/standard equivalence", feynman_standard_equivalence},
      {"spin-statistics dichotomy", spin_statistics},
      {"chi and sense independence of |f|^2", chi_sense_independence},
      {"case analysis", case_analysis},
      {"breakdown of the eta-weighted projector", breakdown},
      {"rotation oracle convergence", rotation_convergence},
  };

  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %zu: %s: %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                out.detail.c_str(), secs);
    failed += out.pass ? 0 : 1;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.1fs\n", criteria.size() - static_cast<std::size_t>(failed),
              criteria.size(), total);
  return failed == 0 ? 0 : 1;
}
