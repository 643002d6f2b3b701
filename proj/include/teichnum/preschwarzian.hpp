#pragma once

// The coordinate system (A(f), f'(0)) on normalized univalent maps of the
// disc, with the composition transfer rule and refined (Bergman) membership
// classification by truncation ladders.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "teichnum/norms.hpp"
#include "teichnum/series.hpp"

namespace teichnum {

struct PreSchwarzianCoords {
  PowerSeries phi;  // A(f) = f''/f'
  cplx d;           // f'(0), nonzero

  PreSchwarzianCoords(PowerSeries phi_in, cplx d_in) : phi(std::move(phi_in)), d(d_in) {
    if (std::abs(d) < 1e-300) throw precondition_error("coords: f'(0) must be nonzero");
    if (!phi.interior()) throw precondition_error("coords: phi must be interior");
  }
};

enum class Membership { member, diverging, inconclusive };

struct MembershipVerdict {
  std::vector<std::size_t> ladder;  // truncations, typically {64,128,256,512}
  std::vector<double> norms;        // Bergman norms of A(f) at each rung
  Membership verdict = Membership::inconclusive;
  double growth_slope = 0.0;  // regression slope of squared norm vs ln N
};

// A(f) = f''/f'; requires f(0) = 0 and f'(0) != 0.
PowerSeries pre_schwarzian(const PowerSeries& f);

PreSchwarzianCoords chi(const PowerSeries& f);
// f = d * int_0^z exp(int_0^u phi); inverse of chi to truncation accuracy.
PowerSeries chi_inverse(const PreSchwarzianCoords& coords);

// A(h o f) computed from the transfer rule A(h) o f * f' + A(f).
PowerSeries transfer_compose(const PowerSeries& a_h, const PowerSeries& f);

MembershipVerdict oqco_membership(const PowerSeries& f,
                                  std::vector<std::size_t> ladder = {64, 128, 256, 512});

// Divergence threshold on the squared-norm-vs-ln N regression slope.
inline constexpr double kDivergenceSlope = 0.5;
// A rung-to-rung relative increment below this reads as stabilized.
inline constexpr double kStableIncrement = 1e-3;

enum class UnivalenceVerdict { pass, fail, inconclusive };

struct UnivalenceReport {
  UnivalenceVerdict verdict = UnivalenceVerdict::inconclusive;
  std::optional<std::pair<cplx, cplx>> witness;  // near-colliding preimages
  std::size_t samples = 0;
  double min_boundary_gap = 0.0;  // min pairwise distance of boundary images
};

// Numerical certificate: f' nonvanishing on a polar grid plus pairwise
// injectivity and winding number 1 of the boundary curve at r = 1 - 1/M.
UnivalenceReport univalence_check(const PowerSeries& f, std::size_t m = 4096);

struct OpennessReport {
  std::vector<double> deltas;
  std::vector<bool> all_pass;       // per delta: all perturbation trials stayed admissible
  double largest_passing = 0.0;
};

// Perturb coords by random Bergman-norm-delta directions and verify the
// perturbed maps stay univalent with image closure inside the disc E.
OpennessReport openness_probe(const PowerSeries& f, cplx e_center, double e_radius,
                              const std::vector<double>& deltas = {1e-3, 1e-2, 1e-1},
                              std::size_t trials = 10, unsigned seed = 1u);

}  // namespace teichnum
