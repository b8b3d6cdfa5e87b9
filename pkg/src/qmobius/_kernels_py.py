"""Pure-Python inner loops.

Every function here has an identically-named twin in ``_ckernels.pyx``.
The plain variants treat coefficients as opaque numbers (ints in practice)
and only use ``+``, ``-`` and ``*``.  The ``r``-prefixed variants take and return lists of ``Fraction`` but do the
arithmetic on raw numerator/denominator ints, reducing once per output
coefficient.  Zero coefficients are skipped, which makes sparse operands such as
``1 - q**n`` cost O(N) rather than O(N**2).
"""


from math import gcd

from ._rational import from_coprime


def _nonzero(seq, lo, hi):
    return [(i, seq[i]) for i in range(lo, min(hi, len(seq) - 1) + 1) if seq[i]]


def convolve(a, b, n):
    """Cauchy product of ``a`` and ``b``, coefficients 0..n."""
    out = [0] * (n + 1)
    nz_a = _nonzero(a, 0, n)
    nz_b = _nonzero(b, 0, n)
    if len(nz_a) > len(nz_b):
        nz_a, nz_b = nz_b, nz_a
    for i, x in nz_a:
        lim = n - i
        for j, y in nz_b:
            if j > lim:
                break
            out[i + j] += x * y
    return out


def divide(f, g, n, inv_g0):
    """Solve ``h * g = f`` for h through order n.

    ``inv_g0`` is the reciprocal of ``g[0]``, supplied by the caller so that
    integer series with a unit constant term stay in ``int``.
    """
    h = []
    nz_g = _nonzero(g, 1, n)
    unit = inv_g0 == 1
    for k in range(n + 1):
        acc = f[k] if k < len(f) else 0
        for j, gj in nz_g:
            if j > k:
                break
            acc -= gj * h[k - j]
        h.append(acc if unit else acc * inv_g0)
    return h


def dirichlet_convolve(u, v, n):
    """out[m] = sum over d*e == m of u[d] * v[e], for 1 <= m <= n.

    Inputs and output are indexed from 1; index 0 is ignored and set to 0.
    """
    out = [0] * (n + 1)
    for d in range(1, n + 1):
        ud = u[d]
        if not ud:
            continue
        e = 1
        m = d
        while m <= n:
            ve = v[e]
            if ve:
                out[m] += ud * ve
            e += 1
            m += d
    return out


def mobius_sieve(n):
    """Linear sieve returning [0, mu(1), ..., mu(n)]."""
    mu = [0] * (n + 1)
    if n < 1:
        return mu
    mu[1] = 1
    composite = bytearray(n + 1)
    primes = []
    for i in range(2, n + 1):
        if not composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            ip = i * p
            if ip > n:
                break
            composite[ip] = 1
            if i % p == 0:
                mu[ip] = 0
                break
            mu[ip] = -mu[i]
    return mu


def pentagonal_partition_numbers(n):
    """[p(0), ..., p(n)] from Euler's pentagonal-number recurrence."""
    p = [0] * (n + 1)
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
                term += p[m - g2]
            if k & 1:
                total += term
            else:
                total -= term
            k += 1
        p[m] = total
    return p


def _nonzero_nd(seq, lo, hi):
    return [(i, seq[i].numerator, seq[i].denominator)
            for i in range(lo, min(hi, len(seq) - 1) + 1) if seq[i]]


def _reduced(num, den):
    g = gcd(num, den)
    if g != 1:
        num //= g
        den //= g
    return from_coprime(num, den)


def rconvolve(a, b, n):
    """:func:`convolve` for Fraction inputs."""
    nz_a = _nonzero_nd(a, 0, n)
    nz_b = _nonzero_nd(b, 0, n)
    if len(nz_a) > len(nz_b):
        nz_a, nz_b = nz_b, nz_a
    nums = [0] * (n + 1)
    dens = [1] * (n + 1)
    for i, xn, xd in nz_a:
        lim = n - i
        for j, yn, yd in nz_b:
            if j > lim:
                break
            tn = xn * yn
            td = xd * yd
            k = i + j
            ad = dens[k]
            if ad == td:
                nums[k] += tn
            else:
                g = gcd(ad, td)
                nums[k] = nums[k] * (td // g) + tn * (ad // g)
                dens[k] = ad // g * td
    return [_reduced(nums[k], dens[k]) for k in range(n + 1)]


def rdivide(f, g, n):
    """:func:`divide` for Fraction inputs; g[0] must be nonzero."""
    nz_g = _nonzero_nd(g, 1, n)
    g0 = g[0]
    # multiply by 1/g0 = g0d/g0n with the sign carried by the numerator
    inv_n, inv_d = g0.denominator, g0.numerator
    if inv_d < 0:
        inv_n, inv_d = -inv_n, -inv_d
    hn = []
    hd = []
    out = []
    for k in range(n + 1):
        if k < len(f):
            an, ad = f[k].numerator, f[k].denominator
        else:
            an, ad = 0, 1
        for j, cn, cd in nz_g:
            if j > k:
                break
            tn = -cn * hn[k - j]
            td = cd * hd[k - j]
            if ad == td:
                an += tn
            else:
                gg = gcd(ad, td)
                an = an * (td // gg) + tn * (ad // gg)
                ad = ad // gg * td
        an *= inv_n
        ad *= inv_d
        gg = gcd(an, ad)
        if gg != 1:
            an //= gg
            ad //= gg
        hn.append(an)
        hd.append(ad)
        out.append(from_coprime(an, ad))
    return out


def rexp(f, n):
    """Coefficients of exp(f) for f[0] == 0, via g_k = (1/k) sum_{j=1..k} j f_j g_{k-j}."""
    wf = [(j, j * cn, cd) for j, cn, cd in _nonzero_nd(f, 1, n)]
    gn = [1]
    gd = [1]
    out = [from_coprime(1, 1)]
    for k in range(1, n + 1):
        an, ad = 0, 1
        for j, cn, cd in wf:
            if j > k:
                break
            tn = cn * gn[k - j]
            td = cd * gd[k - j]
            if ad == td:
                an += tn
            else:
                gg = gcd(ad, td)
                an = an * (td // gg) + tn * (ad // gg)
                ad = ad // gg * td
        ad *= k
        gg = gcd(an, ad)
        if gg != 1:
            an //= gg
            ad //= gg
        gn.append(an)
        gd.append(ad)
        out.append(from_coprime(an, ad))
    return out
