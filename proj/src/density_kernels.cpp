#include "bclab/density_kernels.hpp"

#include <stdexcept>

namespace bclab {

// defined in density_kernel_avx2.cpp
void push_avx2(const double* src, double* dst, int n, double t, double off, double weight);
bool avx2_supported();

const std::vector<KernelEntry>& kernel_registry() {
  static const std::vector<KernelEntry> reg = {
      {"scalar", &push_scalar, true},
      {"avx2", &push_avx2, avx2_supported()},
  };
  return reg;
}

namespace {
PushKernel g_override = nullptr;
const char* g_override_name = nullptr;
}  // namespace

PushKernel active_kernel() {
  if (g_override) return g_override;
  const auto& reg = kernel_registry();
  for (auto it = reg.rbegin(); it != reg.rend(); ++it)
    if (it->available) return it->fn;
  return &push_scalar;
}

std::string active_kernel_name() {
  if (g_override_name) return g_override_name;
  const auto& reg = kernel_registry();
  for (auto it = reg.rbegin(); it != reg.rend(); ++it)
    if (it->available) return it->name;
  return "scalar";
}

void set_kernel_override(const std::string& name) {
  if (name == "auto") {
    g_override = nullptr;
    g_override_name = nullptr;
    return;
  }
  for (const auto& e : kernel_registry()) {
    if (name == e.name) {
      if (!e.available) throw std::invalid_argument("kernel not available on this CPU: " + name);
      g_override = e.fn;
      g_override_name = e.name;
      return;
    }
  }
  throw std::invalid_argument("unknown kernel: " + name);
}

}  // namespace bclab
