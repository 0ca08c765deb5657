#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "schemoid/field.hpp"
#include "schemoid/kernels.hpp"
#include "schemoid/matrix.hpp"

using namespace schemoid;

namespace {

std::vector<std::uint32_t> residues(std::mt19937& rng, std::size_t n, std::uint32_t p) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

const std::uint32_t kPrimes[] = {2, 3, 5, 7, 101, 2039, 2053, 32749};

}  // namespace

TEST_CASE("scalar axpy and scale agree with direct modular arithmetic") {
  std::mt19937 rng(1);
  for (std::uint32_t p : kPrimes)
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 33u}) {
      auto y = residues(rng, n, p), x = residues(rng, n, p);
      const std::uint32_t c = residues(rng, 1, p)[0];
      auto expect = y;
      for (std::size_t i = 0; i < n; ++i) expect[i] = static_cast<std::uint32_t>((y[i] + std::uint64_t{c} * x[i]) % p);
      kernels::axpy_mod_scalar(y.data(), x.data(), c, n, p);
      CHECK(y == expect);
      for (std::size_t i = 0; i < n; ++i) expect[i] = static_cast<std::uint32_t>(std::uint64_t{c} * y[i] % p);
      kernels::scale_mod_scalar(y.data(), c, n, p);
      CHECK(y == expect);
    }
}

#if defined(__x86_64__) || defined(__i386__)
TEST_CASE("AVX2 kernels match the scalar reference") {
  if (!kernels::cpu_has_avx2()) {
    MESSAGE("CPU lacks AVX2; equivalence test skipped");
    return;
  }
  std::mt19937 rng(2);
  for (std::uint32_t p : kPrimes)
    for (std::size_t n : {0u, 1u, 3u, 8u, 15u, 16u, 17u, 64u, 1000u})
      for (int rep = 0; rep < 5; ++rep) {
        auto y = residues(rng, n, p), x = residues(rng, n, p);
        const std::uint32_t c = residues(rng, 1, p)[0];
        auto a = y, b = y;
        kernels::axpy_mod_scalar(a.data(), x.data(), c, n, p);
        kernels::axpy_mod_avx2(b.data(), x.data(), c, n, p);
        REQUIRE(a == b);
        kernels::scale_mod_scalar(a.data(), c, n, p);
        kernels::scale_mod_avx2(b.data(), c, n, p);
        REQUIRE(a == b);
      }
}
#endif

TEST_CASE("elimination gives the same rank under either dispatch choice") {
  std::mt19937 rng(3);
  const Field k = Field::prime(3);
  for (int rep = 0; rep < 10; ++rep) {
    Matrix m(20, 30);
    std::uniform_int_distribution<int> d(0, 2);
    for (std::size_t r = 0; r < 20; ++r)
      for (std::size_t c = 0; c < 30; ++c) m(r, c) = d(rng);
    kernels::select_isa(kernels::Isa::Scalar);
    const auto scalar = rref(k, m);
    kernels::select_isa(kernels::Isa::Avx2);
    const auto vec = rref(k, m);
    CHECK(scalar.reduced == vec.reduced);
    CHECK(scalar.pivots == vec.pivots);
  }
  kernels::select_isa(kernels::Isa::Avx2);
}

TEST_CASE("isa names") {
  CHECK(kernels::isa_name(kernels::Isa::Scalar) == "scalar");
  CHECK(kernels::select_isa(kernels::Isa::Scalar) == kernels::Isa::Scalar);
  CHECK(kernels::active_isa() == kernels::Isa::Scalar);
  kernels::select_isa(kernels::Isa::Avx2);
}
