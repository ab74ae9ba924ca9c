"""
Exact arithmetic in the supercommutative ring Z[x_1..x_n] (x) Lambda(w_1..w_n),
with the symmetric group action, Demazure operators, labeled odd generators
and symmetric-polynomial helpers.

A monomial is a pair (xexp, omask): xexp is a tuple of n natural exponents
and omask a bitmask over the odd generators (bit i-1 set means w_i present,
factors written in increasing index order).  The parameter m fixes the
minimal label of the odd generators: w_i carries bidegree (2(m+1-i), 2).
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from . import symgroup
from .symgroup import Perm, Word

XExp = tuple[int, ...]
Monomial = tuple[XExp, int]


def _merge_masks(a: int, b: int) -> tuple[int, int]:
    """Koszul sign and union for reordering w_A w_B into increasing order.

    Returns (sign, union); sign 0 when the masks overlap.
    """
    if a & b:
        return 0, 0
    sign = 1
    bb = b
    while bb:
        low = bb & -bb
        j = low.bit_length() - 1
        if (a >> (j + 1)).bit_count() & 1:
            sign = -sign
        bb ^= low
    return sign, a | b


def exponent_vectors(n: int, total: int):
    """All exponent tuples of length n with the given sum."""
    if n == 0:
        if total == 0:
            yield ()
        return

    def gen(remaining, slots):
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining + 1):
            for rest in gen(remaining - first, slots - 1):
                yield (first,) + rest
    yield from gen(total, n)


def mask_to_indices(mask: int) -> tuple[int, ...]:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def indices_to_mask(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


class SuperPolynomial:
    """An element of the supercommutative ring on n even and n odd generators."""

    __slots__ = ("n", "m", "terms")

    def __init__(self, n: int, m: int, terms: dict[Monomial, int] | None = None):
        self.n = n
        self.m = m
        self.terms = {k: c for k, c in (terms or {}).items() if c != 0}

    # ---- constructors -------------------------------------------------
    @classmethod
    def zero(cls, n: int, m: int) -> "SuperPolynomial":
        return cls(n, m)

    @classmethod
    def const(cls, n: int, m: int, c: int) -> "SuperPolynomial":
        if c == 0:
            return cls(n, m)
        return cls(n, m, {((0,) * n, 0): c})

    @classmethod
    def one(cls, n: int, m: int) -> "SuperPolynomial":
        return cls.const(n, m, 1)

    @classmethod
    def x(cls, n: int, m: int, i: int, power: int = 1) -> "SuperPolynomial":
        if not 1 <= i <= n:
            raise ValueError(f"x index {i} out of range 1..{n}")
        e = [0] * n
        e[i - 1] = power
        return cls(n, m, {(tuple(e), 0): 1})

    @classmethod
    def w(cls, n: int, m: int, i: int) -> "SuperPolynomial":
        """The odd generator w_i at minimal label m+1."""
        if not 1 <= i <= n:
            raise ValueError(f"w index {i} out of range 1..{n}")
        return cls(n, m, {((0,) * n, 1 << (i - 1)): 1})

    @classmethod
    def monomial(cls, n: int, m: int, xexp, omask: int, coeff: int = 1) -> "SuperPolynomial":
        return cls(n, m, {(tuple(xexp), omask): coeff})

    # ---- ring structure ------------------------------------------------
    def _check(self, other: "SuperPolynomial"):
        if self.n != other.n or self.m != other.m:
            raise ValueError(
                f"ring mismatch: ({self.n},{self.m}) vs ({other.n},{other.m})")

    def __add__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            v = terms.get(k, 0) + c
            if v:
                terms[k] = v
            else:
                terms.pop(k, None)
        return SuperPolynomial(self.n, self.m, terms)

    def __neg__(self) -> "SuperPolynomial":
        return SuperPolynomial(self.n, self.m, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        return self + (-other)

    def scale(self, c: int) -> "SuperPolynomial":
        if c == 0:
            return SuperPolynomial(self.n, self.m)
        return SuperPolynomial(self.n, self.m, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        self._check(other)
        terms: dict[Monomial, int] = {}
        for (xa, ma), ca in self.terms.items():
            for (xb, mb), cb in other.terms.items():
                sign, mask = _merge_masks(ma, mb)
                if sign == 0:
                    continue
                key = (tuple(a + b for a, b in zip(xa, xb)), mask)
                v = terms.get(key, 0) + sign * ca * cb
                if v:
                    terms[key] = v
                else:
                    terms.pop(key, None)
        return SuperPolynomial(self.n, self.m, terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SuperPolynomial) and self.n == other.n
                and self.m == other.m and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, self.m, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    # ---- grading -------------------------------------------------------
    def monomial_bidegree(self, key: Monomial) -> tuple[int, int]:
        xexp, omask = key
        q = 2 * sum(xexp) + sum(2 * (self.m + 1 - i) for i in mask_to_indices(omask))
        return q, 2 * omask.bit_count()

    def bidegree(self) -> tuple[int, int] | None:
        """Bidegree if homogeneous, else None; zero returns None."""
        degs = {self.monomial_bidegree(k) for k in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def bidegree_components(self) -> dict[tuple[int, int], "SuperPolynomial"]:
        comps: dict[tuple[int, int], dict[Monomial, int]] = {}
        for k, c in self.terms.items():
            comps.setdefault(self.monomial_bidegree(k), {})[k] = c
        return {d: SuperPolynomial(self.n, self.m, t) for d, t in comps.items()}

    def parity(self) -> int | None:
        pars = {k[1].bit_count() & 1 for k in self.terms}
        if len(pars) == 1:
            return pars.pop()
        return None

    # ---- display / serialization ----------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1]))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (xexp, omask), c in self.sorted_terms():
            factors = []
            for i, e in enumerate(xexp, start=1):
                if e == 1:
                    factors.append(f"x{i}")
                elif e > 1:
                    factors.append(f"x{i}^{e}")
            factors.extend(f"w{i}" for i in mask_to_indices(omask))
            body = "*".join(factors) if factors else "1"
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def to_json_terms(self) -> list[dict]:
        return [
            {"coeff": c, "x": list(xexp), "w": list(mask_to_indices(omask))}
            for (xexp, omask), c in self.sorted_terms()
        ]


# ---- symmetric group action ---------------------------------------------

def apply_simple(i: int, f: SuperPolynomial) -> SuperPolynomial:
    """Action of s_i: permutes x_i, x_{i+1} and sends w_i to
    w_i + (x_i - x_{i+1}) w_{i+1}, fixing the other odd generators."""
    n = f.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple index {i} out of range for n={n}")
    bit_i = 1 << (i - 1)
    bit_i1 = 1 << i
    terms: dict[Monomial, int] = {}

    def add(key: Monomial, c: int):
        v = terms.get(key, 0) + c
        if v:
            terms[key] = v
        else:
            terms.pop(key, None)

    for (xexp, omask), c in f.terms.items():
        e = list(xexp)
        e[i - 1], e[i] = e[i], e[i - 1]
        swapped = tuple(e)
        if not omask & bit_i:
            add((swapped, omask), c)
            continue
        # w_i -> w_i + (x_i - x_{i+1}) w_{i+1}; replacing w_i by w_{i+1}
        # keeps the increasing order, so no extra sign appears.
        add((swapped, omask), c)
        if not omask & bit_i1:
            nm = (omask & ~bit_i) | bit_i1
            up = list(swapped)
            up[i - 1] += 1
            add((tuple(up), nm), c)
            dn = list(swapped)
            dn[i] += 1
            add((tuple(dn), nm), -c)
    return SuperPolynomial(n, f.m, terms)


def apply_perm(p: Perm, f: SuperPolynomial) -> SuperPolynomial:
    for i in symgroup.reduced_word(tuple(p)):
        f = apply_simple(i, f)
    return f


def _divide_by_x_difference(g: SuperPolynomial, i: int) -> SuperPolynomial:
    """Exact division by (x_i - x_{i+1}); raises if the remainder is nonzero.

    Uses x_i^d x_{i+1}^e = (x_i - x_{i+1}) * sum_r x_i^{d-1-r} x_{i+1}^{e+r}
    + x_{i+1}^{d+e}; the accumulated remainder must cancel to zero.
    """
    n = g.n
    quo: dict[Monomial, int] = {}
    rem: dict[Monomial, int] = {}

    def add(target, key, c):
        v = target.get(key, 0) + c
        if v:
            target[key] = v
        else:
            target.pop(key, None)

    for (xexp, omask), c in g.terms.items():
        d, e = xexp[i - 1], xexp[i]
        for r in range(d):
            ne = list(xexp)
            ne[i - 1] = d - 1 - r
            ne[i] = e + r
            add(quo, (tuple(ne), omask), c)
        ne = list(xexp)
        ne[i - 1] = 0
        ne[i] = d + e
        add(rem, (tuple(ne), omask), c)
    if rem:
        raise ArithmeticError(
            "non-exact division by x_%d - x_%d: remainder %r" % (i, i + 1, rem))
    return SuperPolynomial(n, g.m, quo)


def demazure(i: int, f: SuperPolynomial) -> SuperPolynomial:
    """Demazure operator (f - s_i f) / (x_i - x_{i+1})."""
    return _divide_by_x_difference(f - apply_simple(i, f), i)


def demazure_word(letters: Word, f: SuperPolynomial) -> SuperPolynomial:
    for i in letters:
        f = demazure(i, f)
    return f


def demazure_perm(p: Perm, f: SuperPolynomial) -> SuperPolynomial:
    return demazure_word(symgroup.reduced_word(tuple(p)), f)


# ---- symmetric polynomials ------------------------------------------------

def complete_h(n: int, m: int, j: int, lo: int, hi: int) -> SuperPolynomial:
    """Complete homogeneous symmetric polynomial h_j in x_lo..x_hi."""
    if j < 0:
        return SuperPolynomial.zero(n, m)
    if not 1 <= lo <= hi <= n:
        raise ValueError(f"bad variable range {lo}..{hi} for n={n}")
    terms: dict[Monomial, int] = {}
    for combo in itertools.combinations_with_replacement(range(lo, hi + 1), j):
        e = [0] * n
        for i in combo:
            e[i - 1] += 1
        terms[(tuple(e), 0)] = terms.get((tuple(e), 0), 0) + 1
    return SuperPolynomial(n, m, terms)


def elementary_e(n: int, m: int, j: int, lo: int, hi: int) -> SuperPolynomial:
    """Elementary symmetric polynomial e_j in x_lo..x_hi (zero for j too big)."""
    if j < 0 or j > hi - lo + 1:
        return SuperPolynomial.zero(n, m)
    if not 1 <= lo <= hi <= n:
        raise ValueError(f"bad variable range {lo}..{hi} for n={n}")
    terms: dict[Monomial, int] = {}
    for combo in itertools.combinations(range(lo, hi + 1), j):
        e = [0] * n
        for i in combo:
            e[i - 1] = 1
        terms[(tuple(e), 0)] = 1
    return SuperPolynomial(n, m, terms)


# ---- labeled odd generators ------------------------------------------------

@lru_cache(maxsize=None)
def _labeled_omega_cached(n: int, m: int, k: int, a: int) -> SuperPolynomial:
    if k == 0:
        return SuperPolynomial.zero(n, m)
    if a == m + 1:
        return SuperPolynomial.w(n, m, k)
    below = _labeled_omega_cached(n, m, k - 1, a - 1)
    same = _labeled_omega_cached(n, m, k, a - 1)
    return below - SuperPolynomial.x(n, m, k) * same


def labeled_omega(n: int, m: int, k: int, a: int) -> SuperPolynomial:
    """The labeled generator w_k^a, a >= m+1, expanded over the minimal-label
    generators via w_k^a = w_{k-1}^{a-1} - x_k w_k^{a-1}."""
    if not 1 <= k <= n:
        raise ValueError(f"index {k} out of range 1..{n}")
    if a < m + 1:
        raise ValueError(f"label {a} below the minimal label {m + 1}")
    return _labeled_omega_cached(n, m, k, a)


def labeled_omega_closed(n: int, m: int, k: int, a: int) -> SuperPolynomial:
    """Closed form: w_k^{m+1+t} = sum_l (-1)^{t+k+l} h_{t+l-k}(l..k) w_l."""
    t = a - (m + 1)
    if t < 0:
        raise ValueError(f"label {a} below the minimal label {m + 1}")
    acc = SuperPolynomial.zero(n, m)
    for l in range(1, k + 1):
        h = complete_h(n, m, t + l - k, l, k)
        sign = -1 if (t + k + l) & 1 else 1
        acc = acc + (h * SuperPolynomial.w(n, m, l)).scale(sign)
    return acc


def omega_top_decomposition(n: int, m: int, k: int) -> list[tuple[int, SuperPolynomial]]:
    """Coefficients expressing w_k over the labeled top generators w_n^a:
    w_k = sum_l e_l(k+1..n) w_n^{m+1+n-k-l}; returns (label, coefficient) pairs."""
    if not 1 <= k <= n:
        raise ValueError(f"index {k} out of range 1..{n}")
    out = []
    for l in range(0, n - k + 1):
        coeff = (SuperPolynomial.one(n, m) if l == 0
                 else elementary_e(n, m, l, k + 1, n))
        out.append((m + 1 + n - k - l, coeff))
    return out


def omega_to_top(n: int, m: int, k: int) -> SuperPolynomial:
    """Expand the w_n^a combination from omega_top_decomposition; the result
    round-trips to the plain generator w_k."""
    acc = SuperPolynomial.zero(n, m)
    for a, coeff in omega_top_decomposition(n, m, k):
        acc = acc + coeff * labeled_omega(n, m, n, a)
    return acc
