#ifndef FACTORFORGE_GF64_H
#define FACTORFORGE_GF64_H

/* GF(2^64) multiplication with the fixed modulus x^64 + x^4 + x^3 + x + 1
 * (low part 0x1B).  The carryless-multiply version is used when the CPU
 * supports PCLMULQDQ; the shift-xor version is the portable fallback.
 * Both must match factorforge.gf2.GF2Field(64) bit for bit. */

#include <stdint.h>

static uint64_t ff_gf64_mul_soft(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    uint64_t hi;
    while (b) {
        if (b & 1ULL) r ^= a;
        b >>= 1;
        hi = a >> 63;
        a <<= 1;
        if (hi) a ^= 0x1BULL;
    }
    return r;
}

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

__attribute__((target("pclmul,sse2")))
static uint64_t ff_gf64_mul_clmul(uint64_t a, uint64_t b) {
    __m128i x = _mm_set_epi64x(0, (long long)a);
    __m128i y = _mm_set_epi64x(0, (long long)b);
    __m128i red = _mm_set_epi64x(0, 0x1BLL);
    __m128i z = _mm_clmulepi64_si128(x, y, 0x00);
    uint64_t lo = (uint64_t)_mm_cvtsi128_si64(z);
    uint64_t hi = (uint64_t)_mm_cvtsi128_si64(_mm_srli_si128(z, 8));
    /* fold the overflow through the sparse modulus twice:
     * hi has 64 bits, hi*0x1B has at most 68, its overflow at most 4 bits */
    __m128i t = _mm_clmulepi64_si128(_mm_set_epi64x(0, (long long)hi), red, 0x00);
    uint64_t tlo = (uint64_t)_mm_cvtsi128_si64(t);
    uint64_t thi = (uint64_t)_mm_cvtsi128_si64(_mm_srli_si128(t, 8));
    __m128i t2 = _mm_clmulepi64_si128(_mm_set_epi64x(0, (long long)thi), red, 0x00);
    uint64_t t2lo = (uint64_t)_mm_cvtsi128_si64(t2);
    return lo ^ tlo ^ t2lo;
}

static int ff_gf64_have_clmul(void) {
    return __builtin_cpu_supports("pclmul");
}
#else
static uint64_t ff_gf64_mul_clmul(uint64_t a, uint64_t b) {
    return ff_gf64_mul_soft(a, b);
}
static int ff_gf64_have_clmul(void) { return 0; }
#endif

#endif /* FACTORFORGE_GF64_H */
