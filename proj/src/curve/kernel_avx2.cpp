#include "wrep/kernel.hpp"

#include <immintrin.h>

namespace wrep {

KernelOutput kernel_avx2(const KernelInput &in)
{
	KernelOutput out;
	const uint32_t N = in.N, Z = in.N;
	const __m256i vN = _mm256_set1_epi32((int)N);
	const __m256i vNm1 = _mm256_set1_epi32((int)N - 1);
	const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
	const __m256i zero = _mm256_setzero_si256();
	__m256i acc = _mm256_setzero_si256(); // 4 x u64

	uint64_t k = in.k_begin;
	for (; k + 8 <= in.k_end; k += 8)
	{
		const __m256i vk = _mm256_add_epi32(_mm256_set1_epi32((int)k), lane);
		__m256i lr = vN;
		for (int i = in.degree; i >= 0; --i)
		{
			// lr *= x, zero stays zero
			__m256i isz = _mm256_cmpeq_epi32(lr, vN);
			__m256i t = _mm256_add_epi32(lr, vk);
			t = _mm256_sub_epi32(t, _mm256_and_si256(_mm256_cmpgt_epi32(t, vNm1), vN));
			lr = _mm256_blendv_epi8(t, vN, isz);

			const uint32_t c = in.coef[i];
			if (c == Z)
				continue;
			const __m256i vc = _mm256_set1_epi32((int)c);
			isz = _mm256_cmpeq_epi32(lr, vN);
			// d = c - lr mod N, forced to 0 on zero lanes so the gather stays in range
			__m256i d = _mm256_sub_epi32(vc, lr);
			d = _mm256_add_epi32(d, _mm256_and_si256(_mm256_cmpgt_epi32(zero, d), vN));
			d = _mm256_andnot_si256(isz, d);
			__m256i z = _mm256_i32gather_epi32((const int *)in.zech, d, 4);
			__m256i zz = _mm256_cmpeq_epi32(z, vN);
			__m256i s = _mm256_add_epi32(lr, z);
			s = _mm256_sub_epi32(s, _mm256_and_si256(_mm256_cmpgt_epi32(s, vNm1), vN));
			s = _mm256_blendv_epi8(s, vN, zz);
			lr = _mm256_blendv_epi8(s, vc, isz);
		}
		int zm = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(lr, vN)));
		while (zm)
		{
			int b = __builtin_ctz(zm);
			out.zeros.push_back((uint32_t)(k + b));
			zm &= zm - 1;
		}
		__m256i r = _mm256_i32gather_epi32((const int *)in.res, lr, 4);
		acc = _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(_mm256_castsi256_si128(r)));
		acc = _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(_mm256_extracti128_si256(r, 1)));
	}
	alignas(32) uint64_t parts[4];
	_mm256_store_si256((__m256i *)parts, acc);
	out.sum = parts[0] + parts[1] + parts[2] + parts[3];

	if (k < in.k_end)
	{
		KernelInput tail = in;
		tail.k_begin = k;
		KernelOutput t = kernel_scalar(tail);
		out.sum += t.sum;
		out.zeros.insert(out.zeros.end(), t.zeros.begin(), t.zeros.end());
	}
	return out;
}

} // namespace wrep
