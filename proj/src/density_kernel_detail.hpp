#pragma once

// Internal plumbing shared by the pushforward kernel variants.

namespace bclab::detail {

using CoreFn = void (*)(const double* src, double* dst, double inv_t, double c, double weight,
                        int j_begin, int j_end);

void push_edge_range(const double* src, double* dst, int n, double inv_t, double c, double weight,
                     int j_begin, int j_end);
void push_core_scalar(const double* src, double* dst, double inv_t, double c, double weight,
                      int j_begin, int j_end);
void push_driver(const double* src, double* dst, int n, double t, double off, double weight,
                 CoreFn core);

}  // namespace bclab::detail
