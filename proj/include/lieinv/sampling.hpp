#pragma once

#include <cstdint>
#include <random>

#include "lieinv/scalar.hpp"

namespace lieinv {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Seeded source of integer-valued rational sample points in [-bound, bound].
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed, long bound = 10000) : engine_(seed), dist_(-bound, bound) {}

  Scalar next() { return Scalar(dist_(engine_)); }
  Vector point(std::size_t dim) {
    Vector v(dim);
    for (auto& x : v) x = next();
    return v;
  }
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::uniform_int_distribution<long> dist_;
};

}  // namespace lieinv
