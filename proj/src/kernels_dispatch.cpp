#include "schemoid/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace schemoid::kernels {

namespace {

struct Table {
  Isa isa;
  AxpyModFn axpy;
  ScaleModFn scale;
};

Table table_for(Isa isa) {
#if defined(__x86_64__) || defined(__i386__)
  if (isa == Isa::Avx2 && cpu_has_avx2()) return {Isa::Avx2, &axpy_mod_avx2, &scale_mod_avx2};
#endif
  return {Isa::Scalar, &axpy_mod_scalar, &scale_mod_scalar};
}

Isa default_isa() {
  // SCHEMOID_ISA=scalar pins the reference path (useful for bisecting).
  if (const char* env = std::getenv("SCHEMOID_ISA"); env && std::strcmp(env, "scalar") == 0)
    return Isa::Scalar;
  return Isa::Avx2;
}

const Table& stored(Isa isa) {
  static const Table scalar = table_for(Isa::Scalar);
  static const Table avx2 = table_for(Isa::Avx2);
  return isa == Isa::Avx2 ? avx2 : scalar;
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> ptr{&stored(default_isa())};
  return ptr;
}

}  // namespace

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

Isa active_isa() { return current().load()->isa; }

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa select_isa(Isa wanted) {
  const Table& t = stored(wanted);
  current().store(&t);
  return t.isa;
}

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t c,
              std::uint32_t p) {
  current().load()->axpy(y.data(), x.data(), c, y.size(), p);
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t p) {
  current().load()->scale(y.data(), c, y.size(), p);
}

}  // namespace schemoid::kernels
