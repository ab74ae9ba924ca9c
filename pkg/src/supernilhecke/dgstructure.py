"""
The family of differentials d_N on the superalgebra, homology over the
rationals, and the cyclotomic nilHecke comparison oracle.

d_N kills the even generators and crossings and sends the labeled odd
generator w_i^a to (-1)^{N+a-i} h_{N+a-i}(x_1..x_i), extended as an odd
derivation for the homological degree (= number of odd factors).  Its
bidegree is (2N, -2), so the chain complexes indexed by Q = qdeg + N.lamdeg
are finite in every homological degree.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import symgroup
from .algebra import AlgebraElement, basis, TermKey
from .linalg import rank
from .superring import SuperPolynomial, complete_h, exponent_vectors, mask_to_indices
from .symgroup import perms_by_length


@dataclass(frozen=True)
class DgParams:
    n: int
    m: int
    N: int

    def __post_init__(self):
        if self.m + self.N < 0:
            raise ValueError("differential requires m + N >= 0")


def generator_image(p: DgParams, i: int) -> SuperPolynomial:
    """d_N(w_i) for the minimal-label generator w_i = w_i^{m+1}:
    (-1)^{N+m+1-i} h_{N+m+1-i}(x_1..x_i)."""
    k = p.N + p.m + 1 - i
    if k < 0:
        return SuperPolynomial.zero(p.n, p.m)
    h = complete_h(p.n, p.m, k, 1, i)
    return h.scale(-1 if (p.N + p.m + 1 - i) & 1 else 1)


def derivation_extend(n: int, m: int, images: dict[int, SuperPolynomial],
                      u: AlgebraElement) -> AlgebraElement:
    """Extend a map on the odd generators (even, central images) to an odd
    derivation killing x's and T's: on x^k w_{i_1}..w_{i_h} T_p the j-th odd
    factor contributes a sign (-1)^{j-1}."""
    out = AlgebraElement.zero(n, m)
    for (xexp, omask, perm), c in u.terms.items():
        indices = mask_to_indices(omask)
        for j, i in enumerate(indices):
            img = images[i]
            if img.is_zero():
                continue
            sign = -1 if j & 1 else 1
            rest_mask = omask & ~(1 << (i - 1))
            mono = SuperPolynomial.monomial(n, m, xexp, rest_mask, sign * c)
            for (xe, om), cc in (mono * img).terms.items():
                key = (xe, om, perm)
                v = out.terms.get(key, 0) + cc
                if v:
                    out.terms[key] = v
                else:
                    out.terms.pop(key, None)
    return AlgebraElement(n, m, out.terms)


def apply_dN(p: DgParams, u: AlgebraElement) -> AlgebraElement:
    """The differential d_N on a normal-form element."""
    images = {i: generator_image(p, i) for i in range(1, p.n + 1)}
    return derivation_extend(p.n, p.m, images, u)


def homological_degree(u: AlgebraElement) -> int | None:
    degs = {key[1].bit_count() for key in u.terms}
    if len(degs) == 1:
        return degs.pop()
    return None


def verify_d_squared(p: DgParams, qcut: int, samples: int = 50, seed: int = 0,
                     images: dict[int, SuperPolynomial] | None = None) -> bool:
    """d(d(b)) = 0 for every basis monomial with q-degree <= qcut, plus the
    graded Leibniz rule against the product on all generator pairs and on
    seeded random basis pairs (this is where well-definedness on the algebra
    relations is decided).  Custom generator images may be injected; the
    default is d_N."""
    import random
    if images is None:
        images = {i: generator_image(p, i) for i in range(1, p.n + 1)}

    def d(u: AlgebraElement) -> AlgebraElement:
        return derivation_extend(p.n, p.m, images, u)

    def leibniz_ok(u: AlgebraElement, v: AlgebraElement) -> bool:
        h = homological_degree(u)
        if h is None:
            raise ValueError("inhomogeneous left factor in Leibniz check")
        rhs = d(u) * v + (u * d(v)).scale(-1 if h & 1 else 1)
        return d(u * v) == rhs

    for key in basis(p.n, p.m, qcut):
        b = AlgebraElement(p.n, p.m, {key: 1})
        if not d(d(b)).is_zero():
            return False
    E = AlgebraElement
    gens = ([E.x(p.n, p.m, i) for i in range(1, p.n + 1)]
            + [E.w(p.n, p.m, i) for i in range(1, p.n + 1)]
            + [E.T(p.n, p.m, i) for i in range(1, p.n)])
    for u in gens:
        for v in gens:
            if not leibniz_ok(u, v):
                return False
    rng = random.Random(seed)
    pool = basis(p.n, p.m, min(qcut, 6))
    for _ in range(samples if pool else 0):
        k1 = pool[rng.randrange(len(pool))]
        k2 = pool[rng.randrange(len(pool))]
        if not leibniz_ok(E(p.n, p.m, {k1: 1}), E(p.n, p.m, {k2: 1})):
            return False
    return True


# ---- homology ------------------------------------------------------------------
#
# d_N(f T_p) = d_N(f) T_p, so the complex splits over the nilCoxeter part:
# it is the polynomial-side complex tensored with the span of the T_p, with a
# q-shift of -2 l(p) per permutation.  Homology is computed exactly on the
# polynomial side and aggregated over permutation lengths.

def _poly_monomials_at(n: int, m: int, q: int, h: int):
    """Monomials of the coefficient ring with lambda-degree 2h, q-degree q."""
    import itertools
    out = []
    for subset in itertools.combinations(range(1, n + 1), h):
        omask = 0
        for i in subset:
            omask |= 1 << (i - 1)
        rem = q - sum(2 * (m + 1 - i) for i in subset)
        if rem < 0 or rem % 2:
            continue
        for xexp in exponent_vectors(n, rem // 2):
            out.append((xexp, omask))
    return out


def _poly_d_matrix(p: DgParams, domain, codomain_index):
    """Matrix of d_N from the given monomials to the indexed target monomials."""
    images = {i: generator_image(p, i) for i in range(1, p.n + 1)}
    rows = []
    for (xexp, omask) in domain:
        mono = AlgebraElement.monomial(p.n, p.m, xexp, omask, symgroup.identity(p.n))
        img = derivation_extend(p.n, p.m, images, mono)
        vec = [0] * len(codomain_index)
        for (xe, om, _), c in img.terms.items():
            vec[codomain_index[(xe, om)]] = c
        rows.append(vec)
    return rows


def poly_homology_at(p: DgParams, q: int, h: int,
                     rank_cache: dict | None = None) -> int:
    """Rational homology dimension of the polynomial-side complex at
    q-degree q, homological degree h."""
    here = _poly_monomials_at(p.n, p.m, q, h)
    if not here:
        return 0
    return len(here) - _rank_d(p, q, h, rank_cache) \
        - _rank_d(p, q - 2 * p.N, h + 1, rank_cache)


def _rank_d(p: DgParams, q: int, h: int, rank_cache: dict | None) -> int:
    """Rank of the differential out of the (q, h) component."""
    if h <= 0 or h > p.n:
        return 0
    if rank_cache is not None and (q, h) in rank_cache:
        return rank_cache[(q, h)]
    here = _poly_monomials_at(p.n, p.m, q, h)
    below = _poly_monomials_at(p.n, p.m, q + 2 * p.N, h - 1)
    r = 0
    if here and below:
        index = {mono: i for i, mono in enumerate(below)}
        r = rank(_poly_d_matrix(p, here, index))
    if rank_cache is not None:
        rank_cache[(q, h)] = r
    return r


def homology_ranks(p: DgParams, qcut: int) -> dict[tuple[int, int], int]:
    """Homology dimensions of the full dg-algebra per (qdeg, hdeg), for
    q <= qcut; complexes are finite per Q = q + 2N.h so no truncation margin
    is needed beyond enumerating the relevant Q values."""
    counts = perms_by_length(p.n)
    table: dict[tuple[int, int], int] = {}
    cache: dict[tuple[int, int], int] = {}
    rank_cache: dict[tuple[int, int], int] = {}
    shift = p.n * (p.n - 1)  # largest 2 l(perm)
    for h in range(0, p.n + 1):
        for q in range(_min_poly_q(p.n, p.m, h) - shift, qcut + 1):
            total = 0
            for plen, nperms in counts.items():
                key = (q + 2 * plen, h)
                if key not in cache:
                    cache[key] = poly_homology_at(p, key[0], key[1], rank_cache)
                total += nperms * cache[key]
            if total:
                table[(q, h)] = total
    return table


def _min_poly_q(n: int, m: int, h: int) -> int:
    """Least q-degree of a polynomial-side monomial with h odd factors."""
    degs = sorted(2 * (m + 1 - i) for i in range(1, n + 1))
    return sum(degs[:h]) if h else 0


def nilhecke_cyclotomic_oracle(n: int, M: int, qcut: int) -> dict[int, int]:
    """Graded dimension of the nilHecke algebra modulo the two-sided ideal
    generated by the M-th power of the first even generator, per q-degree up
    to qcut; computed by degreewise spanning and exact rank, independent of
    the dg machinery."""
    if M < 0:
        raise ValueError("cyclotomic exponent must be nonnegative")
    if n == 0:
        return {0: 1} if qcut >= 0 else {}
    from .algebra import push_T_through
    m = -1
    minq = -n * (n - 1)
    # nilHecke basis monomials: omask = 0, enumerated wide enough to cover
    # every factor degree: deg u + 2M + deg v = q with deg v >= minq.
    pool = [key for key in basis(n, m, max(qcut, qcut - 2 * M - minq))
            if key[1] == 0]
    by_deg: dict[int, list[TermKey]] = {}
    for key in pool:
        q = 2 * sum(key[0]) - 2 * symgroup.length(key[2])
        by_deg.setdefault(q, []).append(key)
    # T_p . x_1^M x^b expansions, cached per (p, b); the x^a prefix of the
    # left factor and the T-part of the right factor combine cheaply.
    push_cache: dict[tuple, dict] = {}

    def pushed(perm, bexp):
        kk = (perm, bexp)
        if kk not in push_cache:
            f = SuperPolynomial.monomial(n, m, bexp, 0)
            push_cache[kk] = push_T_through(symgroup.reduced_word(perm), f)
        return push_cache[kk]

    lengths = {p: symgroup.length(p) for p in symgroup.all_permutations(n)}
    composed: dict[tuple, tuple | None] = {}

    def compose_T(rho, sigma):
        kk = (rho, sigma)
        if kk not in composed:
            prod = symgroup.compose(rho, sigma)
            ok = lengths[prod] == lengths[rho] + lengths[sigma]
            composed[kk] = prod if ok else None
        return composed[kk]

    from .linalg import IntEchelon
    dims: dict[int, int] = {}
    for q in range(minq, qcut + 1):
        monos = list(by_deg.get(q, []))
        if not monos:
            continue
        col_index = {key: i for i, key in enumerate(monos)}
        ech = IntEchelon(len(monos))
        for qu, ukeys in by_deg.items():
            if ech.is_full():
                break
            qv = q - 2 * M - qu
            if qv not in by_deg:
                continue
            for (aexp, _, theta) in ukeys:
                if ech.is_full():
                    break
                for (bexp, _, sigma) in by_deg[qv]:
                    mid = list(bexp)
                    mid[0] += M
                    vec = [0] * len(monos)
                    nonzero = False
                    for rho, h in pushed(theta, tuple(mid)).items():
                        prod_perm = compose_T(rho, sigma)
                        if prod_perm is None:
                            continue
                        for (xe, om), c in h.terms.items():
                            key = (tuple(x + y for x, y in zip(aexp, xe)), om, prod_perm)
                            vec[col_index[key]] += c
                            nonzero = True
                    if nonzero and ech.add(vec) and ech.is_full():
                        break
        if len(monos) - ech.rank:
            dims[q] = len(monos) - ech.rank
    return dims
