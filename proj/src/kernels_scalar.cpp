#include "schemoid/kernels.hpp"

namespace schemoid::kernels {

void axpy_mod_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c, std::size_t n,
                     std::uint32_t p) {
  if (c == 0) return;
  for (std::size_t i = 0; i < n; ++i) y[i] = (y[i] + c * x[i]) % p;
}

void scale_mod_scalar(std::uint32_t* y, std::uint32_t c, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) y[i] = (c * y[i]) % p;
}

}  // namespace schemoid::kernels
