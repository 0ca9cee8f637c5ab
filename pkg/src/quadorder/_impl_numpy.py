"""Vectorized numpy implementations of the hot kernels.

Same signatures as `_impl_numba`; selected by QUADORDER_BACKEND=numpy (or when
numba is unavailable).  Ring elements are pairs (a, b) meaning a + b*w modulo m,
where w*w = parm (sqrt-D basis, half=0) or w*w = w + parm (half-integer basis,
half=1).  All products are reduced pairwise so every intermediate fits in int64
for moduli up to 2**31.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND_NAME = "numpy"


# ---------------------------------------------------------------------------
# sieves


def spf_sieve(limit: int) -> np.ndarray:
    """Smallest-prime-factor table for 0..limit (spf[0]=0, spf[1]=1), int32."""
    spf = np.zeros(limit + 1, dtype=np.int32)
    for i in range(2, math.isqrt(limit) + 1):
        if spf[i] == 0:
            spf[i] = i
            tail = spf[i * i :: i]
            tail[tail == 0] = i
    rest = np.flatnonzero(spf == 0)
    spf[rest] = rest
    if limit >= 1:
        spf[1] = 1
    return spf


def splitfree_sieve(limit: int, split_primes: np.ndarray) -> np.ndarray:
    mask = np.ones(limit + 1, dtype=bool)
    mask[0] = False
    for p in split_primes:
        mask[p::p] = False
    return mask


def omega_sieve(limit: int, spf: np.ndarray) -> np.ndarray:
    """Omega(f) (prime divisors with multiplicity) for 0..limit."""
    om = np.zeros(limit + 1, dtype=np.int64)
    ps = np.flatnonzero(spf[2:] == np.arange(2, limit + 1, dtype=np.int32)) + 2
    for p in ps:
        pk = p
        while pk <= limit:
            om[pk::pk] += 1
            pk *= p
    return om


def psi_valuation_sieve(limit: int, q: int, chi_table: np.ndarray, spf: np.ndarray) -> np.ndarray:
    """v_q(psi(f)) for all f in 0..limit (psi multiplicative, psi(p^k)=p^(k-1)(p-chi))."""
    dabs = len(chi_table)
    out = np.zeros(limit + 1, dtype=np.int64)
    ps = (np.flatnonzero(spf[2:] == np.arange(2, limit + 1, dtype=np.int32)) + 2).astype(np.int64)
    vals = ps - chi_table[ps % dabs]
    v = np.zeros(len(ps), dtype=np.int64)
    t = vals.copy()
    live = np.flatnonzero(t % q == 0)
    while live.size:
        v[live] += 1
        t[live] //= q
        live = live[t[live] % q == 0]
    for p, vp in zip(ps, v):
        if p == q:
            continue
        if vp:
            out[p::p] += vp
    # p = q contributes v_q(psi(q^k)) = (k-1) + v_q(q - chi(q))
    if q <= limit:
        i = np.searchsorted(ps, q)
        base = v[i] if i < len(ps) and ps[i] == q else 0
        out[q::q] += base
        qk = q * q
        while qk <= limit:
            out[qk::qk] += 1
            qk *= q
    return out


# ---------------------------------------------------------------------------
# ring arithmetic on arrays (pairwise-reduced, int64-safe for m <= 2**31)


def _vmul(a1, b1, a2, b2, m, parm, half):
    bb = (b1 * b2) % m
    if half:
        a = ((a1 * a2) % m + (bb * parm) % m) % m
        b = ((a1 * b2) % m + (a2 * b1) % m + bb) % m
    else:
        a = ((a1 * a2) % m + (bb * parm) % m) % m
        b = ((a1 * b2) % m + (a2 * b1) % m) % m
    return a, b


def _vpow(a, b, e, m, parm, half):
    """Elementwise (a+bw)^e mod m for a scalar exponent e >= 0."""
    ra = np.ones_like(a)
    rb = np.zeros_like(b)
    ca, cb = a % m, b % m
    while e > 0:
        if e & 1:
            ra, rb = _vmul(ra, rb, ca, cb, m, parm, half)
        e >>= 1
        if e:
            ca, cb = _vmul(ca, cb, ca, cb, m, parm, half)
    return ra, rb


def _vpow_varexp(a, b, e, m, parm, half):
    """Elementwise (a+bw)^e mod m with per-element exponents and moduli."""
    ra = np.ones_like(a)
    rb = np.zeros_like(b)
    ca, cb = a % m, b % m
    e = e.copy()
    while (e > 0).any():
        odd = (e & 1) == 1
        if odd.any():
            na, nb = _vmul(ra[odd], rb[odd], ca[odd], cb[odd], m[odd], parm[odd], half)
            ra[odd], rb[odd] = na, nb
        e >>= 1
        live = e > 0
        if live.any():
            na, nb = _vmul(ca[live], cb[live], ca[live], cb[live], m[live], parm[live], half)
            ca[live], cb[live] = na, nb
    return ra, rb


# ---------------------------------------------------------------------------
# pre-class group brute force at prime powers


def preclass_units(p: int, k: int, parm: int, half: int):
    """Enumerate all units of O_K/p^k O_K and return canonical coset labels.

    The coset of x under scaling by integers prime to p has a unique minimal
    representative (a0 mod p^(k-j+min(v_p(a0),j)), p^j) with j = v_p(b); one
    label per coset is returned as (labels_a, labels_b).
    """
    m = p**k
    seen = np.zeros(m * m, dtype=bool)
    seen[1 * m + 0] = True  # the rational coset (1, 0); a=1,b=0 has norm 1

    avec = np.arange(m, dtype=np.int64)
    bvec = np.arange(m, dtype=np.int64)
    jv = np.zeros(m, dtype=np.int64)
    t = bvec.copy()
    for _ in range(k - 1):
        msk = (t != 0) & (t % p == 0)
        jv[msk] += 1
        t[msk] //= p
    binv = np.zeros(m, dtype=np.int64)
    for b in range(1, m):
        binv[b] = pow(int(t[b]), -1, m)
    pj = p**jv

    chunk = max(1, (1 << 21) // m)
    ppow = p ** np.arange(k + 1, dtype=np.int64)
    for b0 in range(1, m, chunk):
        b1 = min(b0 + chunk, m)
        B = bvec[b0:b1, None]
        A = avec[None, :]
        bb = (B * B) % m
        if half:
            nrm = ((A * A) % m + (A * B) % m + m - (bb * parm) % m) % m
        else:
            nrm = ((A * A) % m + m - (bb * parm) % m) % m
        unit = (nrm % p) != 0
        a0 = (A * binv[b0:b1, None]) % m
        J = jv[b0:b1, None]
        va = np.zeros_like(a0)
        tt = a0.copy()
        for _ in range(k - 1):
            msk = (va < J) & (tt % p == 0)
            va[msk] += 1
            tt[msk] //= p
        modred = ppow[(k - J + va).ravel()].reshape(a0.shape)
        la = a0 % modred
        code = la * m + pj[b0:b1, None]
        seen[code[unit]] = True

    codes = np.flatnonzero(seen)
    return codes // m, codes % m


def coset_orders(ra, rb, p, k, parm, half, n, fac_primes, fac_exps):
    """Order of each coset rep in the quotient; membership test is b == 0 mod p^k."""
    m = p**k
    parm %= m
    orders = np.ones(len(ra), dtype=np.int64)
    for r, e in zip(fac_primes, fac_exps):
        red = n
        for _ in range(e):
            red //= r
        za, zb = _vpow(ra, rb, red, m, parm, half)
        for _ in range(e):
            act = np.flatnonzero(zb != 0)
            if act.size == 0:
                break
            orders[act] *= r
            na, nb = _vpow(za[act], zb[act], r, m, parm, half)
            za[act], zb[act] = na, nb
    return orders


# ---------------------------------------------------------------------------
# batched unit-order kernels over many prime moduli (real fields)


def unit_orders(ms, ua, ub, parms, half, ns, offs, fac_primes, fac_exps):
    """Least ell >= 1 with (ua+ub*w)^ell rational mod ms[i]; ell divides ns[i]."""
    out = np.ones(len(ms), dtype=np.int64)
    for i in range(len(ms)):
        m = int(ms[i])
        parm = int(parms[i])
        xa, xb = int(ua[i]), int(ub[i])
        n = int(ns[i])
        ell = 1
        ok = True
        for t in range(offs[i], offs[i + 1]):
            r = int(fac_primes[t])
            e = int(fac_exps[t])
            red = n
            for _ in range(e):
                red //= r
            za, zb = _spow(xa, xb, red, m, parm, half)
            cnt = 0
            while zb != 0:
                za, zb = _spow(za, zb, r, m, parm, half)
                ell *= r
                cnt += 1
                if cnt > e:
                    ok = False
                    break
            if not ok:
                break
        out[i] = ell if ok else -1
    return out


def _spow(a, b, e, m, parm, half):
    ra, rb = 1 % m, 0
    ca, cb = a % m, b % m
    while e > 0:
        if e & 1:
            ra, rb = _smul(ra, rb, ca, cb, m, parm, half)
        e >>= 1
        if e:
            ca, cb = _smul(ca, cb, ca, cb, m, parm, half)
    return ra, rb


def _smul(a1, b1, a2, b2, m, parm, half):
    bb = b1 * b2 % m
    if half:
        return (a1 * a2 + bb * parm) % m, (a1 * b2 + a2 * b1 + bb) % m
    return (a1 * a2 + bb * parm) % m, (a1 * b2 + a2 * b1) % m


def hooley_count(ps, exps, ua, ub, parms, half) -> int:
    """Count of i with (ua+ub*w)^exps ≡ 1 mod ps (both coordinates)."""
    ra, rb = _vpow_varexp(ua, ub, exps.astype(np.int64), ps, parms, half)
    return int(((ra == 1) & (rb == 0)).sum())


def small_order_count_kernel(ps, ea, eb, parms, half, y: int) -> np.ndarray:
    """For each modulus: least j <= y with (ea+eb*w)^j rational, else 0."""
    n = len(ps)
    found = np.zeros(n, dtype=np.int64)
    za, zb = ea % ps, eb % ps
    live = np.arange(n)
    for j in range(1, y + 1):
        hit = zb[live] == 0
        found[live[hit]] = j
        live = live[~hit]
        if live.size == 0:
            break
        if j < y:
            na, nb = _vmul(za[live], zb[live], ea[live], eb[live], ps[live], parms[live], half)
            za[live], zb[live] = na, nb
    return found


# ---------------------------------------------------------------------------
# conductor scan


def scan_segment(lo, hi, spf, chi_table, zvals):
    """Per-f psi, L, L', Omega, split_free plus rad(psi/L), z-smooth part of L.

    zvals[i] is the smoothness threshold for f = lo+i.  rad/zsmooth are computed
    only for split-free f (others stay 1).
    """
    n = hi - lo
    dabs = len(chi_table)
    psi = np.ones(n, dtype=np.int64)
    L = np.ones(n, dtype=np.int64)
    Lp = np.ones(n, dtype=np.int64)
    om = np.zeros(n, dtype=np.int64)
    sf = np.ones(n, dtype=bool)
    rem = np.arange(lo, hi, dtype=np.int64)
    if lo == 0:
        rem[0] = 1
        sf[0] = False
    act = np.flatnonzero(rem > 1)
    while act.size:
        r = rem[act]
        p = spf[r].astype(np.int64)
        e = np.ones(act.size, dtype=np.int64)
        r = r // p
        sub = np.flatnonzero(r % p == 0)
        while sub.size:
            r[sub] //= p[sub]
            e[sub] += 1
            sub = sub[r[sub] % p[sub] == 0]
        chi = chi_table[p % dabs].astype(np.int64)
        sf[act[chi == 1]] = False
        psipk = p ** (e - 1) * (p - chi)
        psi[act] *= psipk
        g = np.gcd(L[act], psipk)
        L[act] = L[act] // g * psipk
        big = p > 3
        ib = act[big]
        if ib.size:
            pb = psipk[big]
            g2 = np.gcd(Lp[ib], pb)
            Lp[ib] = Lp[ib] // g2 * pb
        om[act] += e
        rem[act] = r
        act = act[r > 1]

    rad = np.ones(n, dtype=np.int64)
    zsm = np.ones(n, dtype=np.int64)
    spf_l = spf
    chis = chi_table
    for i in np.flatnonzero(sf):
        f = lo + i
        if f < 2:
            continue
        z = zvals[i]
        counts: dict[int, int] = {}
        maxv: dict[int, int] = {}
        t = f
        while t > 1:
            p = int(spf_l[t])
            e = 0
            while t % p == 0:
                t //= p
                e += 1
            c = int(chis[p % dabs])
            comp: dict[int, int] = {}
            if e > 1 or c == 0:
                comp[p] = (e - 1) + (1 if c == 0 else 0)
            if c != 0:
                v = p - c
                while v > 1:
                    q = int(spf_l[v])
                    cnt = 0
                    while v % q == 0:
                        v //= q
                        cnt += 1
                    comp[q] = comp.get(q, 0) + cnt
            for q, vq in comp.items():
                counts[q] = counts.get(q, 0) + 1
                if vq > maxv.get(q, 0):
                    maxv[q] = vq
        rr = 1
        zz = 1
        for q, cnt in counts.items():
            if cnt >= 2:
                rr *= q
            if q <= z:
                zz *= q ** maxv[q]
        rad[i] = rr
        zsm[i] = zz
    return psi, L, Lp, om, sf, rad, zsm


# ---------------------------------------------------------------------------
# reduced positive-definite forms


def reduced_forms_arrays(d: int):
    """All reduced primitive positive-definite forms of discriminant d < 0."""
    amax = math.isqrt(-d // 3)
    outs = []
    for a in range(1, amax + 1):
        b0 = -a + 1
        if (b0 - d) % 2 != 0:
            b0 += 1
        bs = np.arange(b0, a + 1, 2, dtype=np.int64)
        if bs.size == 0:
            continue
        num = bs * bs - d
        ok = num % (4 * a) == 0
        cs = num // (4 * a)
        ok &= cs >= a
        ok &= (bs >= 0) | ((np.abs(bs) != a) & (cs != a))
        ok &= np.gcd(np.gcd(a, bs), cs) == 1
        if ok.any():
            sel = np.flatnonzero(ok)
            outs.append(np.stack([np.full(sel.size, a, dtype=np.int64), bs[sel], cs[sel]], axis=1))
    if not outs:
        return np.empty((0, 3), dtype=np.int64)
    return np.concatenate(outs, axis=0)


def unit_grid(f: int, parm: int, half: int) -> np.ndarray:
    """Boolean mask over codes a*f+b marking units of O_K/fO_K."""
    mask = np.zeros(f * f, dtype=bool)
    bvec = np.arange(f, dtype=np.int64)
    chunk = max(1, (1 << 21) // f)
    for a0 in range(0, f, chunk):
        a1 = min(a0 + chunk, f)
        A = np.arange(a0, a1, dtype=np.int64)[:, None]
        B = bvec[None, :]
        bb = (B * B) % f
        if half:
            nrm = ((A * A) % f + (A * B) % f + f - (bb * parm) % f) % f
        else:
            nrm = ((A * A) % f + f - (bb * parm) % f) % f
        g = np.gcd(nrm, f)
        (mask.reshape(f, f)[a0:a1])[g == 1] = True
    return mask
