#include "wrep/kernel.hpp"

#include <atomic>

namespace wrep {

namespace {

std::atomic<int> g_kernel{-1};

} // namespace

bool avx2_available()
{
#if defined(WREP_HAVE_AVX2)
	static const bool ok = __builtin_cpu_supports("avx2");
	return ok;
#else
	return false;
#endif
}

KernelKind default_kernel() { return avx2_available() ? KernelKind::Avx2 : KernelKind::Scalar; }

void set_kernel(KernelKind k)
{
	if (k == KernelKind::Avx2 && !avx2_available())
		k = KernelKind::Scalar;
	g_kernel.store((int)k);
}

KernelKind active_kernel()
{
	int k = g_kernel.load();
	return k < 0 ? default_kernel() : (KernelKind)k;
}

const char *kernel_name(KernelKind k) { return k == KernelKind::Avx2 ? "avx2" : "scalar"; }

KernelOutput run_kernel(const KernelInput &in)
{
#if defined(WREP_HAVE_AVX2)
	if (active_kernel() == KernelKind::Avx2)
		return kernel_avx2(in);
#endif
	return kernel_scalar(in);
}

} // namespace wrep
