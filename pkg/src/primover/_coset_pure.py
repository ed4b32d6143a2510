"""Pure-Python twin of the compiled coset-scan kernel."""

from __future__ import annotations


def coset_scan(b: int, n: int) -> tuple[int, int]:
    """Return (r, order): orbit count of s -> b*s mod n on 1..n-1, and the
    size of the orbit of 1."""
    br = b % n
    seen = bytearray(n)
    r = 0
    order = 0
    for s in range(1, n):
        if seen[s]:
            continue
        r += 1
        size = 0
        t = s
        while not seen[t]:
            seen[t] = 1
            t = t * br % n
            size += 1
        if s == 1:
            order = size
    return r, order
