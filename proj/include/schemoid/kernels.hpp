#pragma once

// Inner loops of Gaussian elimination over F_p. Every kernel has a portable
// scalar reference and, where the CPU allows, an AVX2 variant. The variant is
// chosen once at runtime; tests compare both on the same inputs.
//
// All operands are canonical residues in [0, p) with p < 2^15.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace schemoid::kernels {

enum class Isa { Scalar, Avx2 };

/// y[i] = (y[i] + c * x[i]) mod p
using AxpyModFn = void (*)(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c,
                           std::size_t n, std::uint32_t p);
/// y[i] = (c * y[i]) mod p
using ScaleModFn = void (*)(std::uint32_t* y, std::uint32_t c, std::size_t n, std::uint32_t p);

void axpy_mod_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c, std::size_t n,
                     std::uint32_t p);
void scale_mod_scalar(std::uint32_t* y, std::uint32_t c, std::size_t n, std::uint32_t p);

#if defined(__x86_64__) || defined(__i386__)
void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c, std::size_t n,
                   std::uint32_t p);
void scale_mod_avx2(std::uint32_t* y, std::uint32_t c, std::size_t n, std::uint32_t p);
#endif

/// True when the running CPU can execute the AVX2 variants.
bool cpu_has_avx2();

/// The ISA currently used by the dispatching entry points below.
Isa active_isa();
std::string_view isa_name(Isa isa);

/// Force a variant (falls back to Scalar if the CPU lacks AVX2). Returns the
/// ISA actually selected.
Isa select_isa(Isa wanted);

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t c,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t p);

}  // namespace schemoid::kernels
