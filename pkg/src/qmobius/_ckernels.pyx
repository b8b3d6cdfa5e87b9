# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops; see _kernels_py for the reference semantics."""

from libc.stdlib cimport malloc, free
from math import gcd

from ._rational import from_coprime


cdef list _nonzero(seq, Py_ssize_t lo, Py_ssize_t hi):
    cdef Py_ssize_t i, top = min(hi, len(seq) - 1)
    cdef list out = []
    for i in range(lo, top + 1):
        x = seq[i]
        if x:
            out.append((i, x))
    return out


def convolve(a, b, Py_ssize_t n):
    cdef list out = [0] * (n + 1)
    cdef list nz_a = _nonzero(a, 0, n)
    cdef list nz_b = _nonzero(b, 0, n)
    cdef Py_ssize_t i, j, lim, ia, ib, na, nb
    cdef tuple ta, tb
    if len(nz_a) > len(nz_b):
        nz_a, nz_b = nz_b, nz_a
    na = len(nz_a)
    nb = len(nz_b)
    for ia in range(na):
        ta = <tuple>nz_a[ia]
        i = ta[0]
        x = ta[1]
        lim = n - i
        for ib in range(nb):
            tb = <tuple>nz_b[ib]
            j = tb[0]
            if j > lim:
                break
            out[i + j] = out[i + j] + x * tb[1]
    return out


def divide(f, g, Py_ssize_t n, inv_g0):
    cdef list h = []
    cdef list nz_g = _nonzero(g, 1, n)
    cdef Py_ssize_t k, j, idx, ng = len(nz_g), nf = len(f)
    cdef tuple t
    cdef bint unit = inv_g0 == 1
    for k in range(n + 1):
        acc = f[k] if k < nf else 0
        for idx in range(ng):
            t = <tuple>nz_g[idx]
            j = t[0]
            if j > k:
                break
            acc = acc - t[1] * h[k - j]
        h.append(acc if unit else acc * inv_g0)
    return h


def dirichlet_convolve(u, v, Py_ssize_t n):
    cdef list out = [0] * (n + 1)
    cdef Py_ssize_t d, e, m
    for d in range(1, n + 1):
        ud = u[d]
        if not ud:
            continue
        e = 1
        m = d
        while m <= n:
            ve = v[e]
            if ve:
                out[m] = out[m] + ud * ve
            e += 1
            m += d
    return out


def mobius_sieve(Py_ssize_t n):
    cdef Py_ssize_t i, k, p, ip, nprimes = 0
    cdef signed char *mu
    cdef char *composite
    cdef Py_ssize_t *primes
    if n < 1:
        return [0] * (n + 1)
    mu = <signed char *>malloc((n + 1) * sizeof(signed char))
    composite = <char *>malloc((n + 1) * sizeof(char))
    primes = <Py_ssize_t *>malloc((n + 1) * sizeof(Py_ssize_t))
    if mu == NULL or composite == NULL or primes == NULL:
        free(mu)
        free(composite)
        free(primes)
        raise MemoryError()
    try:
        for i in range(n + 1):
            mu[i] = 0
            composite[i] = 0
        mu[1] = 1
        for i in range(2, n + 1):
            if not composite[i]:
                primes[nprimes] = i
                nprimes += 1
                mu[i] = -1
            for k in range(nprimes):
                p = primes[k]
                ip = i * p
                if ip > n:
                    break
                composite[ip] = 1
                if i % p == 0:
                    mu[ip] = 0
                    break
                mu[ip] = -mu[i]
        return [mu[i] for i in range(n + 1)]
    finally:
        free(mu)
        free(composite)
        free(primes)


def pentagonal_partition_numbers(Py_ssize_t n):
    cdef list p = [0] * (n + 1)
    cdef Py_ssize_t m, k, g1, g2
    p[0] = 1
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            term = p[m - g1]
            g2 = g1 + k
            if g2 <= m:
                term = term + p[m - g2]
            if k & 1:
                total = total + term
            else:
                total = total - term
            k += 1
        p[m] = total
    return p


cdef list _nonzero_nd(seq, Py_ssize_t lo, Py_ssize_t hi):
    cdef Py_ssize_t i, top = min(hi, len(seq) - 1)
    cdef list out = []
    for i in range(lo, top + 1):
        x = seq[i]
        if x:
            out.append((i, x.numerator, x.denominator))
    return out


def rconvolve(a, b, Py_ssize_t n):
    cdef list nz_a = _nonzero_nd(a, 0, n)
    cdef list nz_b = _nonzero_nd(b, 0, n)
    cdef list nums = [0] * (n + 1)
    cdef list dens = [1] * (n + 1)
    cdef Py_ssize_t i, j, k, lim, ia, ib, na, nb
    cdef tuple ta, tb
    if len(nz_a) > len(nz_b):
        nz_a, nz_b = nz_b, nz_a
    na = len(nz_a)
    nb = len(nz_b)
    for ia in range(na):
        ta = <tuple>nz_a[ia]
        i = ta[0]
        xn = ta[1]
        xd = ta[2]
        lim = n - i
        for ib in range(nb):
            tb = <tuple>nz_b[ib]
            j = tb[0]
            if j > lim:
                break
            tn = xn * tb[1]
            td = xd * tb[2]
            k = i + j
            ad = dens[k]
            if ad == td:
                nums[k] = nums[k] + tn
            else:
                g = gcd(ad, td)
                nums[k] = nums[k] * (td // g) + tn * (ad // g)
                dens[k] = ad // g * td
    out = []
    for k in range(n + 1):
        an = nums[k]
        ad = dens[k]
        g = gcd(an, ad)
        if g != 1:
            an = an // g
            ad = ad // g
        out.append(from_coprime(an, ad))
    return out


def rdivide(f, g, Py_ssize_t n):
    cdef list nz_g = _nonzero_nd(g, 1, n)
    cdef list hn = []
    cdef list hd = []
    cdef list out = []
    cdef Py_ssize_t k, j, idx, ng = len(nz_g), nf = len(f)
    cdef tuple t
    g0 = g[0]
    inv_n = g0.denominator
    inv_d = g0.numerator
    if inv_d < 0:
        inv_n = -inv_n
        inv_d = -inv_d
    for k in range(n + 1):
        if k < nf:
            x = f[k]
            an = x.numerator
            ad = x.denominator
        else:
            an = 0
            ad = 1
        for idx in range(ng):
            t = <tuple>nz_g[idx]
            j = t[0]
            if j > k:
                break
            tn = -t[1] * hn[k - j]
            td = t[2] * hd[k - j]
            if ad == td:
                an = an + tn
            else:
                gg = gcd(ad, td)
                an = an * (td // gg) + tn * (ad // gg)
                ad = ad // gg * td
        an = an * inv_n
        ad = ad * inv_d
        gg = gcd(an, ad)
        if gg != 1:
            an = an // gg
            ad = ad // gg
        hn.append(an)
        hd.append(ad)
        out.append(from_coprime(an, ad))
    return out


def rexp(f, Py_ssize_t n):
    cdef list wf = []
    cdef list gn = [1]
    cdef list gd = [1]
    cdef list out = [from_coprime(1, 1)]
    cdef Py_ssize_t k, j, idx, nw
    cdef tuple t
    for t in _nonzero_nd(f, 1, n):
        wf.append((t[0], t[0] * t[1], t[2]))
    nw = len(wf)
    for k in range(1, n + 1):
        an = 0
        ad = 1
        for idx in range(nw):
            t = <tuple>wf[idx]
            j = t[0]
            if j > k:
                break
            tn = t[1] * gn[k - j]
            td = t[2] * gd[k - j]
            if ad == td:
                an = an + tn
            else:
                gg = gcd(ad, td)
                an = an * (td // gg) + tn * (ad // gg)
                ad = ad // gg * td
        ad = ad * k
        gg = gcd(an, ad)
        if gg != 1:
            an = an // gg
            ad = ad // gg
        gn.append(an)
        gd.append(ad)
        out.append(from_coprime(an, ad))
    return out
