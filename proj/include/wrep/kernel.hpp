#pragma once

#include <cstdint>
#include <vector>

namespace wrep {

// Log-domain evaluation of f at x = g^k for k in [k_begin, k_end).
// Logs live in [0, N); N itself is the sentinel for zero.
struct KernelInput
{
	const uint32_t *zech = nullptr; // zech[t] = log(1 + g^t), N if zero
	const uint32_t *res = nullptr;  // res[l] = fiber count for log value l, res[N] = 0
	const uint32_t *coef = nullptr; // log of f_i, low-to-high, N for zero coefficients
	int degree = 0;
	uint32_t N = 0;
	uint64_t k_begin = 0, k_end = 0;
};

struct KernelOutput
{
	uint64_t sum = 0;
	std::vector<uint32_t> zeros; // k with f(g^k) = 0, ascending
};

KernelOutput kernel_scalar(const KernelInput &in);
#if defined(WREP_HAVE_AVX2)
KernelOutput kernel_avx2(const KernelInput &in);
#endif

enum class KernelKind { Scalar, Avx2 };

bool avx2_available();
KernelKind default_kernel();
// override for tests and benchmarks; Avx2 falls back to Scalar when unsupported
void set_kernel(KernelKind k);
KernelKind active_kernel();
const char *kernel_name(KernelKind k);

KernelOutput run_kernel(const KernelInput &in);

} // namespace wrep
