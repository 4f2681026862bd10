#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "explab/complexes/cochain.hpp"
#include "explab/harness/report.hpp"

namespace explab {

struct TargetSampling {
  // Targets are A u for u in [-box, box]^n, enumerated when (2 box + 1)^n is
  // at most box_limit and otherwise drawn at random sample_count times.
  int box = 2;
  std::uint64_t box_limit = 400000;
  std::size_t sample_count = 2000;
};

// Random incidence matrices plus fixtures: integral spanning of the kernel
// and Xi_Q(A, v) = Xi_Z(A, v) at every sampled target, one target per ray.
// Also the control A = [[1, 2]], v = (1), which must show a strict gap.
CampaignReport campaign_equality(std::uint64_t seed, std::size_t count,
                                 const TargetSampling& sampling = {});

// Trees, a filled triangle, a Steinberg presentation complex, and two
// complexes with nontrivial H^1 (the circle and the B_3 presentation complex).
std::vector<CochainComplex> default_cw_complexes();

// Complexes with trivial H^1: ker d1 equals the saturated image of d0, and
// Xi_Q = Xi_Z at sampled targets of d0 and of d1. Others are skipped.
CampaignReport campaign_cw(const std::vector<CochainComplex>& complexes,
                           const TargetSampling& sampling = {});

// (q - 1) Xi_Z(A) >= Xi_Zq(A~) globally, and per image vector w:
// (q - 1) Xi_Z(A, A s(u)) >= Xi_Zq(A~, w) with u a coset leader of w.
CampaignReport campaign_modq(std::uint64_t seed, std::size_t count,
                             const std::vector<std::uint32_t>& primes);

struct FamilyRange {
  std::size_t lo = 0;
  std::size_t hi = 0;  // inclusive; lo > hi means empty
};

// Braid groups B_n and Steinberg groups St_n: row shape of d1, integral
// spanning of its kernel, per-target Xi_Q = Xi_Z, and Xi_Z(d1) >= Xi_Z2(d1).
CampaignReport campaign_presentations(FamilyRange braid, FamilyRange steinberg,
                                      const TargetSampling& sampling = {});

// Random small (A, v): LP value equals the face-enumeration value, and the
// objective is constant on each minimal face (checked at 3 random points).
CampaignReport campaign_lemma_oracle(std::uint64_t seed, std::size_t count);

// Random incidence matrices: the component kernel basis equals the Hermite
// kernel basis, and kernel and image are integrally spanned.
CampaignReport campaign_incidence_kernel(std::uint64_t seed, std::size_t count);

// Normal-form identities on random matrices, then xi_z_at against an
// exhaustive search on tiny instances.
CampaignReport campaign_substrate(std::uint64_t seed, std::size_t count,
                                  std::size_t tiny_count);

}  // namespace explab
