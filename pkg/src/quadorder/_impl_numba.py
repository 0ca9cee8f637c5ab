"""numba @njit implementations of the hot kernels (default backend).

Signature-compatible with `_impl_numpy`.  Ring convention: (a, b) = a + b*w
mod m with w*w = parm (half=0) or w*w = w + parm (half=1); parm is passed
pre-reduced to [0, m).  Every product is reduced pairwise so intermediates fit
in int64 for moduli up to 2**31.
"""

from __future__ import annotations

import numpy as np
from numba import njit

BACKEND_NAME = "numba"

_JIT = dict(cache=True, nogil=True)


@njit(**_JIT)
def _isqrt(n):
    if n < 0:
        return 0
    x = int(np.sqrt(np.float64(n)))
    while x > 0 and x * x > n:
        x -= 1
    while (x + 1) * (x + 1) <= n:
        x += 1
    return x


@njit(**_JIT)
def spf_sieve(limit):
    spf = np.zeros(limit + 1, dtype=np.int32)
    i = 2
    while i * i <= limit:
        if spf[i] == 0:
            spf[i] = i
            for j in range(i * i, limit + 1, i):
                if spf[j] == 0:
                    spf[j] = i
        i += 1
    for j in range(1, limit + 1):
        if spf[j] == 0:
            spf[j] = j
    return spf


@njit(**_JIT)
def splitfree_sieve(limit, split_primes):
    mask = np.ones(limit + 1, dtype=np.bool_)
    mask[0] = False
    for idx in range(len(split_primes)):
        p = split_primes[idx]
        for j in range(p, limit + 1, p):
            mask[j] = False
    return mask


@njit(**_JIT)
def omega_sieve(limit, spf):
    om = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if spf[p] == p:
            pk = p
            while pk <= limit:
                for j in range(pk, limit + 1, pk):
                    om[j] += 1
                if pk > limit // p:
                    break
                pk *= p
    return om


@njit(**_JIT)
def psi_valuation_sieve(limit, q, chi_table, spf):
    dabs = len(chi_table)
    out = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if spf[p] != p:
            continue
        if p == q:
            chi = chi_table[p % dabs]
            base = np.int64(1) if chi == 0 else np.int64(0)
            if base:
                for j in range(p, limit + 1, p):
                    out[j] += base
            pk = q * q
            while pk <= limit:
                for j in range(pk, limit + 1, pk):
                    out[j] += 1
                if pk > limit // q:
                    break
                pk *= q
        else:
            chi = chi_table[p % dabs]
            v = np.int64(p) - chi
            cnt = np.int64(0)
            while v % q == 0:
                v //= q
                cnt += 1
            if cnt:
                for j in range(p, limit + 1, p):
                    out[j] += cnt
    return out


@njit(inline="always", **_JIT)
def _mul(a1, b1, a2, b2, m, parm, half):
    bb = (b1 * b2) % m
    a = ((a1 * a2) % m + (bb * parm) % m) % m
    if half:
        b = ((a1 * b2) % m + (a2 * b1) % m + bb) % m
    else:
        b = ((a1 * b2) % m + (a2 * b1) % m) % m
    return a, b


@njit(inline="always", **_JIT)
def _pow(a, b, e, m, parm, half):
    ra = np.int64(1) % m
    rb = np.int64(0)
    ca = a % m
    cb = b % m
    while e > 0:
        if e & 1:
            ra, rb = _mul(ra, rb, ca, cb, m, parm, half)
        e >>= 1
        if e:
            ca, cb = _mul(ca, cb, ca, cb, m, parm, half)
    return ra, rb


@njit(inline="always", **_JIT)
def _modinv(x, m):
    # extended euclid; x assumed invertible mod m
    a, b = x % m, m
    u, v = np.int64(1), np.int64(0)
    while b:
        q = a // b
        a, b = b, a - q * b
        u, v = v, u - q * v
    return u % m


@njit(**_JIT)
def preclass_units(p, k, parm, half):
    """Canonical coset labels of (O_K/p^k O_K)^x modulo scaling by Z-units.

    Brute force: every (a, b) pair is enumerated, units kept (norm prime to p),
    and each is mapped to the minimal representative of its coset.
    """
    m = np.int64(p) ** k
    seen = np.zeros(m * m, dtype=np.bool_)
    seen[1 * m + 0] = True
    ppow = np.empty(k + 1, dtype=np.int64)
    ppow[0] = 1
    for i in range(1, k + 1):
        ppow[i] = ppow[i - 1] * p
    for b in range(m):
        if b == 0:
            continue
        j = 0
        t = b
        while t % p == 0:
            t //= p
            j += 1
        binv = _modinv(np.int64(t), m)
        pj = ppow[j]
        for a in range(m):
            bb = (np.int64(b) * b) % m
            if half:
                nrm = ((np.int64(a) * a) % m + (np.int64(a) * b) % m + m - (bb * parm) % m) % m
            else:
                nrm = ((np.int64(a) * a) % m + m - (bb * parm) % m) % m
            if nrm % p == 0:
                continue
            a0 = (np.int64(a) * binv) % m
            va = 0
            tt = a0
            while va < j and tt % p == 0:
                tt //= p
                va += 1
            la = a0 % ppow[k - j + va]
            seen[la * m + pj] = True
    cnt = 0
    for c in range(m * m):
        if seen[c]:
            cnt += 1
    ra = np.empty(cnt, dtype=np.int64)
    rb = np.empty(cnt, dtype=np.int64)
    i = 0
    for c in range(m * m):
        if seen[c]:
            ra[i] = c // m
            rb[i] = c % m
            i += 1
    return ra, rb


@njit(**_JIT)
def coset_orders(ra, rb, p, k, parm, half, n, fac_primes, fac_exps):
    m = np.int64(p) ** k
    parm = parm % m
    nrep = len(ra)
    orders = np.ones(nrep, dtype=np.int64)
    for i in range(nrep):
        for t in range(len(fac_primes)):
            r = fac_primes[t]
            e = fac_exps[t]
            red = n
            for _ in range(e):
                red //= r
            za, zb = _pow(ra[i], rb[i], red, m, parm, half)
            cnt = 0
            while zb != 0:
                za, zb = _pow(za, zb, np.int64(r), m, parm, half)
                orders[i] *= r
                cnt += 1
                if cnt > e:
                    raise ValueError("coset order does not divide the group order")
    return orders


@njit(**_JIT)
def unit_orders(ms, ua, ub, parms, half, ns, offs, fac_primes, fac_exps):
    out = np.ones(len(ms), dtype=np.int64)
    for i in range(len(ms)):
        m = ms[i]
        parm = parms[i] % m
        n = ns[i]
        ell = np.int64(1)
        ok = True
        for t in range(offs[i], offs[i + 1]):
            r = fac_primes[t]
            e = fac_exps[t]
            red = n
            for _ in range(e):
                red //= r
            za, zb = _pow(ua[i], ub[i], red, m, parm, half)
            cnt = 0
            while zb != 0:
                za, zb = _pow(za, zb, np.int64(r), m, parm, half)
                ell *= r
                cnt += 1
                if cnt > e:
                    ok = False
                    break
            if not ok:
                break
        out[i] = ell if ok else -1
    return out


@njit(**_JIT)
def hooley_count(ps, exps, ua, ub, parms, half):
    cnt = 0
    for i in range(len(ps)):
        m = ps[i]
        ra, rb = _pow(ua[i], ub[i], exps[i], m, parms[i] % m, half)
        if ra == 1 and rb == 0:
            cnt += 1
    return cnt


@njit(**_JIT)
def small_order_count_kernel(ps, ea, eb, parms, half, y):
    n = len(ps)
    found = np.zeros(n, dtype=np.int64)
    for i in range(n):
        m = ps[i]
        parm = parms[i] % m
        xa = ea[i] % m
        xb = eb[i] % m
        za, zb = xa, xb
        for j in range(1, y + 1):
            if zb == 0:
                found[i] = j
                break
            if j < y:
                za, zb = _mul(za, zb, xa, xb, m, parm, half)
    return found


@njit(**_JIT)
def scan_segment(lo, hi, spf, chi_table, zvals):
    n = hi - lo
    dabs = len(chi_table)
    psi = np.ones(n, dtype=np.int64)
    L = np.ones(n, dtype=np.int64)
    Lp = np.ones(n, dtype=np.int64)
    om = np.zeros(n, dtype=np.int64)
    sf = np.ones(n, dtype=np.bool_)
    rad = np.ones(n, dtype=np.int64)
    zsm = np.ones(n, dtype=np.int64)

    qbuf = np.empty(256, dtype=np.int64)
    vbuf = np.empty(256, dtype=np.int64)
    cbuf = np.empty(256, dtype=np.int64)

    for i in range(n):
        f = lo + i
        if f < 2:
            if f < 1:
                sf[i] = False
            continue
        t = np.int64(f)
        nent = 0
        comp = 0
        split_free = True
        while t > 1:
            p = np.int64(spf[t])
            e = np.int64(0)
            while t % p == 0:
                t //= p
                e += 1
            chi = chi_table[p % dabs]
            if chi == 1:
                split_free = False
            psipk = p ** (e - 1) * (p - chi)
            psi[i] *= psipk
            g = np.gcd(L[i], psipk)
            L[i] = L[i] // g * psipk
            if p > 3:
                g2 = np.gcd(Lp[i], psipk)
                Lp[i] = Lp[i] // g2 * psipk
            om[i] += e
            if split_free:
                # collect distinct prime factors of psi(p^e) for rad/zsmooth
                if e > 1 or chi == 0:
                    vq = e - 1
                    if chi == 0:
                        vq += 1
                    if nent >= 256:
                        raise ValueError("scan factor buffer overflow")
                    qbuf[nent] = p
                    vbuf[nent] = vq
                    cbuf[nent] = comp
                    nent += 1
                if chi != 0:
                    v = p - chi
                    while v > 1:
                        q = np.int64(spf[v])
                        cnt = np.int64(0)
                        while v % q == 0:
                            v //= q
                            cnt += 1
                        if nent >= 256:
                            raise ValueError("scan factor buffer overflow")
                        qbuf[nent] = q
                        vbuf[nent] = cnt
                        cbuf[nent] = comp
                        nent += 1
            comp += 1
        sf[i] = split_free
        if not split_free:
            continue
        z = zvals[i]
        rr = np.int64(1)
        zz = np.int64(1)
        for s in range(nent):
            q = qbuf[s]
            if q == 0:
                continue
            ncomp = 1
            maxv = vbuf[s]
            for u in range(s + 1, nent):
                if qbuf[u] == q:
                    if cbuf[u] != cbuf[s]:
                        ncomp += 1
                    if vbuf[u] > maxv:
                        maxv = vbuf[u]
                    qbuf[u] = 0
            if ncomp >= 2:
                rr *= q
            if np.float64(q) <= z:
                zz *= q**maxv
        rad[i] = rr
        zsm[i] = zz
    return psi, L, Lp, om, sf, rad, zsm


@njit(**_JIT)
def reduced_forms_arrays(d):
    amax = _isqrt(-d // 3)
    cnt = 0
    out = np.empty((0, 3), dtype=np.int64)
    for phase in range(2):
        if phase == 1:
            out = np.empty((cnt, 3), dtype=np.int64)
            cnt = 0
        for a in range(1, amax + 1):
            b0 = -a + 1
            if (b0 - d) % 2 != 0:
                b0 += 1
            for b in range(b0, a + 1, 2):
                num = np.int64(b) * b - d
                if num % (4 * a) != 0:
                    continue
                c = num // (4 * a)
                if c < a:
                    continue
                if b < 0 and (-b == a or c == a):
                    continue
                if np.gcd(np.gcd(np.int64(a), np.int64(b)), c) != 1:
                    continue
                if phase == 1:
                    out[cnt, 0] = a
                    out[cnt, 1] = b
                    out[cnt, 2] = c
                cnt += 1
    return out


@njit(**_JIT)
def unit_grid(f, parm, half):
    mask = np.zeros(f * f, dtype=np.bool_)
    for a in range(f):
        for b in range(f):
            bb = (np.int64(b) * b) % f
            if half:
                nrm = ((np.int64(a) * a) % f + (np.int64(a) * b) % f + f - (bb * parm) % f) % f
            else:
                nrm = ((np.int64(a) * a) % f + f - (bb * parm) % f) % f
            if np.gcd(nrm, np.int64(f)) == 1:
                mask[a * f + b] = True
    return mask
