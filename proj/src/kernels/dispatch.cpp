#include <atomic>
#include <cstdlib>
#include <string>

#include "faiscc/kernels.hpp"
#include "faiscc/types.hpp"

namespace faiscc::kernels {

#if FAISCC_HAVE_AVX2
const Ops* avx2_ops_impl();
#endif

namespace {

bool cpu_has_avx2() {
#if FAISCC_HAVE_AVX2
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Ops* table_for(Backend b) {
  switch (b) {
    case Backend::Avx2:
#if FAISCC_HAVE_AVX2
      return avx2_ops_impl();
#else
      return nullptr;
#endif
    case Backend::Scalar:
      return &scalar_ops();
  }
  return nullptr;
}

Backend detect_backend() {
  if (const char* env = std::getenv("FAISCC_KERNEL")) {
    const std::string v(env);
    if (v == "scalar") return Backend::Scalar;
    if (v == "avx2" && cpu_has_avx2()) return Backend::Avx2;
    // unknown or unsupported value: fall through to detection
  }
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect_backend()};
  return backend;
}

}  // namespace

const char* backend_name(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool backend_supported(Backend b) {
  return b == Backend::Scalar || cpu_has_avx2();
}

void set_backend(Backend b) {
  if (!backend_supported(b)) {
    throw DomainError(std::string("kernel backend not supported on this CPU: ") +
                      backend_name(b));
  }
  current().store(b, std::memory_order_relaxed);
}

void set_backend(const std::string& name) {
  if (name == "auto") {
    current().store(detect_backend(), std::memory_order_relaxed);
    return;
  }
  if (name == "scalar") {
    set_backend(Backend::Scalar);
    return;
  }
  if (name == "avx2") {
    set_backend(Backend::Avx2);
    return;
  }
  throw ConfigError("unknown kernel backend '" + name +
                    "' (expected auto|scalar|avx2)");
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

const Ops& ops() { return *table_for(active_backend()); }

const Ops* avx2_ops() { return table_for(Backend::Avx2); }

}  // namespace faiscc::kernels
