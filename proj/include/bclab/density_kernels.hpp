#pragma once

#include <string>
#include <vector>

namespace bclab {

// Pushforward accumulation kernel: adds weight * (image of the histogram
// `src` under y = t*x + off) into `dst`.  Both arrays are bin masses over
// [0,1] with n bins; the image is computed in gather form, each destination
// bin reading the two or three source cells it overlaps.
//
// All implementations must produce bit-identical results: the scalar kernel
// is the reference, vector variants replicate its exact operation order per
// lane.  Equivalence is enforced by tests.
using PushKernel = void (*)(const double* src, double* dst, int n, double t, double off,
                            double weight);

struct KernelEntry {
  const char* name;
  PushKernel fn;
  bool available;  // supported by the running CPU
};

// Reference kernel, always available.
void push_scalar(const double* src, double* dst, int n, double t, double off, double weight);

// All registered kernels (scalar first).
const std::vector<KernelEntry>& kernel_registry();

// The kernel used by the density engine: best available, or the one forced
// by set_kernel_override ("scalar", "avx2", "auto").
PushKernel active_kernel();
std::string active_kernel_name();
void set_kernel_override(const std::string& name);  // throws on unknown/unavailable

}  // namespace bclab
