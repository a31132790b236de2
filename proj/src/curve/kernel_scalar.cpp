#include "wrep/kernel.hpp"

namespace wrep {

KernelOutput kernel_scalar(const KernelInput &in)
{
	KernelOutput out;
	const uint32_t N = in.N, Z = in.N;
	for (uint64_t k = in.k_begin; k < in.k_end; ++k)
	{
		uint32_t lr = Z;
		for (int i = in.degree; i >= 0; --i)
		{
			if (lr != Z)
			{
				uint32_t t = lr + (uint32_t)k;
				lr = t >= N ? t - N : t;
			}
			uint32_t c = in.coef[i];
			if (c == Z)
				continue;
			if (lr == Z)
			{
				lr = c;
				continue;
			}
			uint32_t d = c >= lr ? c - lr : c + N - lr;
			uint32_t z = in.zech[d];
			if (z == Z)
				lr = Z;
			else
			{
				uint32_t t = lr + z;
				lr = t >= N ? t - N : t;
			}
		}
		if (lr == Z)
			out.zeros.push_back((uint32_t)k);
		out.sum += in.res[lr];
	}
	return out;
}

} // namespace wrep
