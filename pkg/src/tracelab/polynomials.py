"""Dense univariate polynomial arithmetic over Q and over F_p.

Coefficient lists are indexed by power (coeffs[k] is the x^k coefficient)
and normalized so the last entry is nonzero.  The zero polynomial is the
empty tuple.  This is deliberately small: exact division, gcd, Sturm
sequences, cyclotomic polynomials, and Berlekamp factorization mod p are
all the number-field layer needs at desk scale.
"""

from __future__ import annotations

from fractions import Fraction


def poly(coeffs) -> tuple:
    """Normalize a coefficient sequence (low power first) over Q."""
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(f) -> int:
    return len(f) - 1


def is_zero(f) -> bool:
    return len(f) == 0


def leading(f) -> Fraction:
    if not f:
        raise ValueError("zero polynomial has no leading coefficient")
    return f[-1]


def add(f, g):
    n = max(len(f), len(g))
    return poly([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)
                 for i in range(n)])


def sub(f, g):
    n = max(len(f), len(g))
    return poly([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)
                 for i in range(n)])


def mul(f, g):
    if not f or not g:
        return ()
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return poly(out)


def scale(f, c):
    return poly([Fraction(c) * a for a in f])


def divmod_exact(f, g):
    """Quotient and remainder over Q; g must be nonzero."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    lg = g[-1]
    dg = degree(g)
    while len(r) - 1 >= dg and any(c != 0 for c in r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dg:
            break
        k = len(r) - 1 - dg
        c = r[-1] / lg
        q[k] = c
        for i, b in enumerate(g):
            r[k + i] -= c * b
        r.pop()
    return poly(q), poly(r)


def monic(f):
    if not f:
        return f
    return scale(f, 1 / f[-1])


def gcd(f, g):
    """Monic gcd over Q."""
    a, b = poly(f), poly(g)
    while b:
        a, b = b, divmod_exact(a, b)[1]
    return monic(a)


def derivative(f):
    return poly([i * c for i, c in enumerate(f)][1:])


def evaluate(f, x):
    """Horner evaluation; exact when x is a Fraction or int."""
    acc = Fraction(0) if isinstance(x, (int, Fraction)) else x * 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def compose(f, g):
    """f(g(x)), exact."""
    acc = ()
    for c in reversed(f):
        acc = add(mul(acc, g), poly([c]))
    return acc


def compose_mod(f, g, m):
    """f(g(x)) reduced mod m."""
    acc = ()
    for c in reversed(f):
        acc = divmod_exact(add(mul(acc, g), poly([c])), m)[1]
    return acc


def pow_mod(f, e, m):
    """f^e mod m by binary exponentiation."""
    result = poly([1])
    base = divmod_exact(f, m)[1]
    while e > 0:
        if e & 1:
            result = divmod_exact(mul(result, base), m)[1]
        base = divmod_exact(mul(base, base), m)[1]
        e >>= 1
    return result


def is_squarefree(f) -> bool:
    return degree(gcd(f, derivative(f))) == 0


def squarefree_witness(f):
    """The nontrivial gcd(f, f') if f is not squarefree, else None."""
    g = gcd(f, derivative(f))
    return g if degree(g) > 0 else None


# -- Sturm sequences ----------------------------------------------------

def sturm_sequence(f):
    """Signed remainder sequence f, f', -rem(...), ... for squarefree f."""
    seq = [poly(f), derivative(f)]
    while seq[-1]:
        r = divmod_exact(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append(scale(r, -1))
    return [s for s in seq if s]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_variations_at(seq, x) -> int:
    signs = [_sign(evaluate(f, Fraction(x))) for f in seq]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def sign_variations_at_infinity(seq, positive: bool) -> int:
    signs = []
    for f in seq:
        s = _sign(leading(f))
        if not positive and degree(f) % 2 == 1:
            s = -s
        signs.append(s)
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def real_root_count(f, lo=None, hi=None) -> int:
    """Number of distinct real roots of squarefree f in (lo, hi].

    With both bounds omitted, counts over the whole real line.
    """
    w = squarefree_witness(f)
    if w is not None:
        raise ValueError(f"polynomial is not squarefree; gcd(f, f') = {w}")
    seq = sturm_sequence(f)
    va = (sign_variations_at_infinity(seq, positive=False) if lo is None
          else sign_variations_at(seq, lo))
    vb = (sign_variations_at_infinity(seq, positive=True) if hi is None
          else sign_variations_at(seq, hi))
    return va - vb


def root_bound(f) -> Fraction:
    """Cauchy bound: all complex roots have |z| < 1 + max|a_i / a_n|."""
    lead = abs(leading(f))
    m = max((abs(c) for c in f[:-1]), default=Fraction(0))
    return 1 + m / lead


def isolate_real_roots(f):
    """Disjoint open intervals (lo, hi), each holding one real root of the
    squarefree polynomial f, endpoints exact rationals non-roots of f."""
    total = real_root_count(f)
    if total == 0:
        return []
    seq = sturm_sequence(f)
    b = root_bound(f)
    lo, hi = -b, b
    while evaluate(f, lo) == 0:
        lo -= 1
    while evaluate(f, hi) == 0:
        hi += 1

    def count(a, c):
        return sign_variations_at(seq, a) - sign_variations_at(seq, c)

    done = []
    stack = [(lo, hi, count(lo, hi))]
    while stack:
        a, c, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            done.append((a, c))
            continue
        mid = (a + c) / 2
        while evaluate(f, mid) == 0:
            mid = (a + mid) / 2
        kl = count(a, mid)
        stack.append((a, mid, kl))
        stack.append((mid, c, k - kl))
    done.sort()
    assert len(done) == total
    return done


def refine_root_interval(f, interval, width):
    """Shrink an isolating interval by bisection until hi - lo <= width."""
    lo, hi = interval
    flo = evaluate(f, lo)
    assert flo != 0 and evaluate(f, hi) != 0
    while hi - lo > width:
        mid = (lo + hi) / 2
        fm = evaluate(f, mid)
        if fm == 0:
            # root is exactly rational; pin it in a tiny interval
            eps = min(width, hi - lo) / 4
            return (mid - eps, mid + eps)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo, hi)


def interval_evaluate(f, lo, hi):
    """Exact interval extension of f over [lo, hi] via interval Horner."""
    acc_lo, acc_hi = Fraction(0), Fraction(0)
    for c in reversed(f):
        cands = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
        acc_lo, acc_hi = min(cands) + c, max(cands) + c
    return acc_lo, acc_hi


# -- cyclotomic polynomials ----------------------------------------------

def cyclotomic(n: int):
    """n-th cyclotomic polynomial, by exact division of x^n - 1."""
    if n < 1:
        raise ValueError("n must be positive")
    num = poly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            num, rem = divmod_exact(num, cyclotomic(d))
            assert not rem
    return num


def euler_phi(n: int) -> int:
    return sum(1 for a in range(1, n + 1) if _gcd_int(a, n) == 1)


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


# -- arithmetic mod a prime p --------------------------------------------

def poly_mod_p(f, p):
    out = [int(c) % p for c in f]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _mp_add(f, g, p):
    n = max(len(f), len(g))
    out = [((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p
           for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _mp_mul(f, g, p):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _mp_divmod(f, g, p):
    if not g:
        raise ZeroDivisionError
    inv = pow(g[-1], -1, p)
    r = list(f)
    q = [0] * max(len(f) - len(g) + 1, 0)
    while len(r) >= len(g) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(g):
            break
        k = len(r) - len(g)
        c = (r[-1] * inv) % p
        q[k] = c
        for i, b in enumerate(g):
            r[k + i] = (r[k + i] - c * b) % p
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return tuple(q), tuple(r)


def _mp_gcd(f, g, p):
    a, b = poly_mod_p(f, p), poly_mod_p(g, p)
    while b:
        a, b = b, _mp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = tuple((c * inv) % p for c in a)
    return a


def _mp_deriv(f, p):
    out = [(i * c) % p for i, c in enumerate(f)][1:]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _mp_pow_mod(f, e, m, p):
    result = (1,)
    base = _mp_divmod(f, m, p)[1]
    while e > 0:
        if e & 1:
            result = _mp_divmod(_mp_mul(result, base, p), m, p)[1]
        base = _mp_divmod(_mp_mul(base, base, p), m, p)[1]
        e >>= 1
    return result


def _pth_root(f, p):
    # f with f' = 0 over F_p is g(x^p); recover g
    assert all(c == 0 for i, c in enumerate(f) if i % p != 0)
    # coefficients of F_p are fixed by the Frobenius, so just contract
    return tuple(f[i] for i in range(0, len(f), p))


def _berlekamp_split(f, p):
    """Distinct irreducible factors of a squarefree monic f over F_p."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    # rows of the Frobenius matrix: x^(p*i) mod f
    rows = []
    for i in range(n):
        xpi = _mp_pow_mod((0, 1), p * i, f, p)
        rows.append([xpi[j] if j < len(xpi) else 0 for j in range(n)])
    # kernel of (Q - I)^T over F_p: v with v(x)^p = v(x) mod f
    mat = [[(rows[i][j] - (1 if i == j else 0)) % p for i in range(n)]
           for j in range(n)]
    basis = _fp_kernel(mat, p)
    if len(basis) == 1:
        return [f]
    for v in basis:
        vp = tuple(v)
        while vp and vp[-1] == 0:
            vp = vp[:-1]
        if len(vp) <= 1:
            continue
        for c in range(p):
            shifted = _mp_add(vp, ((-c) % p,), p)
            g = _mp_gcd(f, shifted, p)
            if 0 < len(g) - 1 < n:
                q, r = _mp_divmod(f, g, p)
                assert not r
                return _berlekamp_split(g, p) + _berlekamp_split(q, p)
    raise AssertionError("Berlekamp split failed on reducible input")


def _fp_kernel(mat, p):
    n = len(mat)
    a = [row[:] for row in mat]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if a[i][c] % p), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(n):
            if i != r and a[i][c] % p:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    pivset = set(pivots)
    basis = []
    for fc in range(n):
        if fc in pivset:
            continue
        v = [0] * n
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-a[i][fc]) % p
        basis.append(v)
    return basis


def distinct_factors_mod_p(f, p):
    """Distinct monic irreducible factors of f over F_p (no multiplicity)."""
    g = poly_mod_p(f, p)
    if len(g) <= 1:
        raise ValueError("polynomial is constant mod p")
    inv = pow(g[-1], -1, p)
    g = tuple((c * inv) % p for c in g)
    d = _mp_deriv(g, p)
    if not d:
        return distinct_factors_mod_p(_pth_root(g, p), p)
    h = _mp_gcd(g, d, p)
    if len(h) - 1 == 0:
        return sorted(_berlekamp_split(g, p))
    q, r = _mp_divmod(g, h, p)
    assert not r
    factors = set(distinct_factors_mod_p(q, p)) | set(distinct_factors_mod_p(h, p))
    return sorted(factors)


def factor_multiplicity_mod_p(f, p):
    """List of (irreducible factor, multiplicity) pairs of f over F_p."""
    g = poly_mod_p(f, p)
    out = []
    for fac in distinct_factors_mod_p(f, p):
        e = 0
        while True:
            q, r = _mp_divmod(g, fac, p)
            if r:
                break
            g = q
            e += 1
        out.append((fac, e))
    return out
