#pragma once

#include <cstddef>

namespace trihull::kernels {

// Vector kernels behind the geometry layer. Every backend evaluates the
// identical floating-point expression tree: reductions accumulate into four
// lane-strided partial sums combined as (s0+s2)+(s1+s3) with a sequential
// tail, and elementwise ops round each element independently. No backend may
// fuse multiply-add. Consequence: all backends return bit-identical doubles
// for the same input, so runtime dispatch never changes results.
enum class Backend { Scalar, Avx2, Neon };

// Backend in use. Resolution order: force() > TRIHULL_KERNELS env var
// (scalar|avx2|neon) > best supported on this CPU.
Backend active();

// Test hook. Throws std::invalid_argument if the backend is not usable here.
void force(Backend b);

const char* name(Backend b);

double dot(const double* a, const double* b, std::size_t n);
double squared_distance(const double* a, const double* b, std::size_t n);

// dst[i] = wa*a[i] + wb*b[i]. dst may alias a or b.
void blend(double* dst, const double* a, const double* b, double wa, double wb, std::size_t n);

// a[i] *= s
void scale(double* a, double s, std::size_t n);

}  // namespace trihull::kernels
