# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled sweep kernel: count multiplication-by-b orbits on 1..n-1.

The reduction modulo n uses a precomputed 64-bit reciprocal (Barrett style)
so the inner loop avoids hardware division. The caller guarantees b >= 2,
gcd(b, n) = 1 and 3 <= n < 2^31, so b*s fits in 64 bits once b is reduced.
"""

cdef extern from *:
    ctypedef unsigned long long u128 "__uint128_t"


def coset_scan(unsigned long long b, unsigned long long n):
    """Return (r, order) where r is the number of orbits of s -> b*s mod n
    on {1, .., n-1} and order is the size of the orbit of 1 (= |b|_n)."""
    cdef unsigned long long s, t, prod, q, size, br
    cdef unsigned long long r = 0, order = 0
    cdef unsigned long long inv
    br = b % n
    inv = <unsigned long long>((<u128>1 << 64) / n)
    seen = bytearray(n)
    cdef unsigned char[::1] sv = seen
    for s in range(1, n):
        if sv[s]:
            continue
        r += 1
        size = 0
        t = s
        while not sv[t]:
            sv[t] = 1
            prod = t * br
            q = <unsigned long long>((<u128>prod * inv) >> 64)
            t = prod - q * n
            while t >= n:
                t -= n
            size += 1
        if s == 1:
            order = size
    return int(r), int(order)
