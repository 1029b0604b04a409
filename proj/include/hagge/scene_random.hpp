#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "hagge/rng.hpp"
#include "hagge/theorems.hpp"

namespace hagge {

struct RejectionLog {
  std::uint64_t rejected = 0;
  std::map<std::string, std::uint64_t> reasons;

  void note(const std::string& why) {
    ++rejected;
    ++reasons[why];
  }
  void merge(const RejectionLog& o) {
    rejected += o.rejected;
    for (const auto& [k, v] : o.reasons) reasons[k] += v;
  }
};

inline constexpr std::uint64_t kDefaultAttemptCap = 4096;

namespace detail {

// Scalar draws fixed by the generator contract: rationals draw numerator in
// [-bound, bound] then denominator in [1, bound]; prime fields draw a
// residue in [0, min(bound, p-1)].
inline Rat draw_scalar(SplitMix64& rng, long long bound, const ScalarMaker<Rat>&) {
  const long long num = rng.range(-bound, bound);
  const long long den = rng.range(1, bound);
  return Rat(Rat::Int(num), Rat::Int(den));
}

inline Fp draw_scalar(SplitMix64& rng, long long bound, const ScalarMaker<Fp>& mk) {
  const std::uint64_t hi = std::min<std::uint64_t>(static_cast<std::uint64_t>(bound), mk.p - 1);
  return Fp(rng.below(hi + 1), mk.p);
}

template <Field K>
ProjPoint<K> draw_affine_point(SplitMix64& rng, long long bound, const ScalarMaker<K>& mk) {
  const K x = draw_scalar(rng, bound, mk);
  const K y = draw_scalar(rng, bound, mk);
  return ProjPoint<K>::affine(x, y);
}

// draw order: A, B, C, D, then the two extra sigma support points
inline SceneT1 candidate_t1(SplitMix64& rng, long long bound) {
  const ScalarMaker<Rat> mk;
  const auto a = draw_affine_point(rng, bound, mk);
  const auto b = draw_affine_point(rng, bound, mk);
  const auto c = draw_affine_point(rng, bound, mk);
  const auto d = draw_affine_point(rng, bound, mk);
  const auto p = draw_affine_point(rng, bound, mk);
  const auto q = draw_affine_point(rng, bound, mk);
  if (d == p || d == q || p == q || are_collinear(d, p, q))
    throw Error(ErrorCode::InvalidScene, "sigma support degenerate");
  return SceneT1::make(a, b, c, d, circle_through_three(d, p, q));
}

// draw order: A, B, C, D, E, F, then the two extra sigma support points
template <Field K>
SceneT2<K> candidate_t2(SplitMix64& rng, long long bound, const ScalarMaker<K>& mk) {
  const auto a = draw_affine_point(rng, bound, mk);
  const auto b = draw_affine_point(rng, bound, mk);
  const auto c = draw_affine_point(rng, bound, mk);
  const auto d = draw_affine_point(rng, bound, mk);
  const auto e = draw_affine_point(rng, bound, mk);
  const auto f = draw_affine_point(rng, bound, mk);
  const auto g = draw_affine_point(rng, bound, mk);
  const auto h = draw_affine_point(rng, bound, mk);
  Conic<K> sigma = [&] {
    try {
      return conic_through_five(std::array<ProjPoint<K>, 5>{d, e, f, g, h});
    } catch (const Error& err) {
      if (err.code() == ErrorCode::DegeneratePosition || err.code() == ErrorCode::DuplicatePoints)
        throw Error(ErrorCode::InvalidScene, "sigma support degenerate");
      throw;
    }
  }();
  const std::array<K, 3> seed1 = {mk.from_int(1), mk.from_int(1), mk.from_int(1)};
  const std::array<K, 3> seed2 = {mk.from_int(1), mk.from_int(2), mk.from_int(3)};
  return SceneT2<K>::make(a, b, c, d, e, f, std::move(sigma), seed1, seed2);
}

}  // namespace detail

template <class SceneT, Field K>
struct GeneratedScene {
  SceneT scene;
  ConcurrencyCertificate<K> certificate;
  RejectionLog rejections;
};

/// First scene of the substream that carries all the way to a certificate;
/// degenerate candidates are rejected, counted per reason, and resampled
/// from per-attempt substreams. Attempt j of scene stream `seed` draws from
/// substream(seed, j).
inline GeneratedScene<SceneT1, Rat> random_scene_t1(std::uint64_t seed, long long bound,
                                                    std::uint64_t attempt_cap = kDefaultAttemptCap) {
  if (bound < 2) throw Error(ErrorCode::InvalidScalar, "bound must be at least 2");
  RejectionLog log;
  for (std::uint64_t attempt = 0; attempt < attempt_cap; ++attempt) {
    SplitMix64 rng = substream(seed, attempt);
    try {
      SceneT1 scene = detail::candidate_t1(rng, bound);
      auto cert = verify_theorem1(scene);
      return {std::move(scene), std::move(cert), std::move(log)};
    } catch (const Error& err) {
      if (err.code() != ErrorCode::InvalidScene) throw;
      log.note(err.what());
    } catch (const DegenerateScene& deg) {
      log.note(deg.reason());
    }
  }
  throw Error(ErrorCode::ExhaustedAttempts, "no acceptable scene in " +
                                                std::to_string(attempt_cap) + " attempts");
}

template <Field K>
GeneratedScene<SceneT2<K>, K> random_scene_t2(std::uint64_t seed, long long bound,
                                              const ScalarMaker<K>& mk,
                                              std::uint64_t attempt_cap = kDefaultAttemptCap) {
  if (bound < 2) throw Error(ErrorCode::InvalidScalar, "bound must be at least 2");
  RejectionLog log;
  for (std::uint64_t attempt = 0; attempt < attempt_cap; ++attempt) {
    SplitMix64 rng = substream(seed, attempt);
    try {
      SceneT2<K> scene = detail::candidate_t2(rng, bound, mk);
      auto cert = verify_theorem2(scene);
      return {std::move(scene), std::move(cert), std::move(log)};
    } catch (const Error& err) {
      if (err.code() != ErrorCode::InvalidScene) throw;
      log.note(err.what());
    } catch (const DegenerateScene& deg) {
      log.note(deg.reason());
    }
  }
  throw Error(ErrorCode::ExhaustedAttempts, "no acceptable scene in " +
                                                std::to_string(attempt_cap) + " attempts");
}

}  // namespace hagge
