"""
Decompositions of the (n+1)-strand algebra over the n-strand one, and the
short exact sequence splitting

  0 -> q^{-2} A_n (x)_{n-1} A_n -> A_{n+1}
                    -> (A_n (x) Z[xi]) (+) (q^{2m-4n} lam^2 Pi A_n (x) Z[xi]) -> 0

with the crossing map s(x (x) y) = x T_n y.

Free left-module decompositions in use (W_a = T_n...T_a):
  plain:   (+)_a  A_n . x_{n+1}^p . W_a . (1 (+) theta_a)
  dotted:  (+)_a  A_n . W_a . x_a^p   and   A_n . G_a^p,
with G_a^p = T_n...T_1 x_1^p w_1 T_1...T_{a-1} (= W_a . dotted theta_a).

Both decompositions reduce by triangular elimination.  Terms carrying the top
odd generator strip against the odd family, whose expansions have a unique
shortest-permutation unit-coefficient term; the remaining terms reduce
structurally through the coset factorization: a plain family element
u . x_{n+1}^p W_a is itself a basis monomial, and a dotted one u . W_a x_a^p
has that monomial as its unique longest-permutation term.  Every elimination
step asserts its own progress, and the recombination helpers give exactness
checks; an inconsistency raises instead of returning wrong coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import symgroup
from .algebra import AlgebraElement, TermKey
from .superring import SuperPolynomial
from .symgroup import Perm


def embed(u: AlgebraElement) -> AlgebraElement:
    """Inclusion adding a trivial strand on the right."""
    n1 = u.n + 1
    terms = {}
    for (xexp, omask, perm), c in u.terms.items():
        terms[(xexp + (0,), omask, perm + (n1,))] = c
    return AlgebraElement(n1, u.m, terms)


def restrict(w: AlgebraElement) -> AlgebraElement:
    """Inverse of embed; fails if the last strand is genuinely used."""
    n = w.n - 1
    terms = {}
    for (xexp, omask, perm), c in w.terms.items():
        if xexp[n] != 0 or omask >> n & 1 or perm[n] != n + 1:
            raise ValueError("element does not come from the subalgebra")
        terms[(xexp[:n], omask, perm[:n])] = c
    return AlgebraElement(n, w.m, terms)


@dataclass
class SesComponents:
    """Cokernel coordinates: lists of (n-strand element, xi-exponent)."""
    poly_part: list[tuple[AlgebraElement, int]]
    omega_part: list[tuple[AlgebraElement, int]]


class InductionContext:
    """Caches for decomposing (n+1)-strand elements over the n-strand algebra."""

    def __init__(self, n: int, m: int):
        self.n = n
        self.m = m
        self.n1 = n + 1
        self._wa_xp: dict[tuple[int, int], AlgebraElement] = {}
        self._ga_p: dict[tuple[int, int], AlgebraElement] = {}
        self._odd_exp_cache: dict[tuple, AlgebraElement] = {}

    # ---- family generators ------------------------------------------------
    def coset_T(self, a: int) -> AlgebraElement:
        """W_a = T_n ... T_a as an element (a = n+1 gives 1)."""
        return AlgebraElement.T_word(self.n1, self.m, tuple(range(a, self.n1)))

    def wa_xp(self, a: int, p: int) -> AlgebraElement:
        """Normal form of W_a . x_a^p."""
        key = (a, p)
        if key not in self._wa_xp:
            self._wa_xp[key] = self.coset_T(a) * AlgebraElement.x(self.n1, self.m, a, p)
        return self._wa_xp[key]

    def ga_p(self, a: int, p: int) -> AlgebraElement:
        """Normal form of G_a^p = T_n...T_1 x_1^p w_1 T_1...T_{a-1}."""
        key = (a, p)
        if key not in self._ga_p:
            left = AlgebraElement.T_word(self.n1, self.m, tuple(range(1, self.n1)))
            mid = AlgebraElement.from_poly(
                SuperPolynomial.x(self.n1, self.m, 1, p)
                * SuperPolynomial.w(self.n1, self.m, 1))
            right = AlgebraElement.T_word(self.n1, self.m, tuple(range(a - 1, 0, -1)))
            self._ga_p[key] = left * mid * right
        return self._ga_p[key]

    # ---- the odd block -------------------------------------------------------
    #
    # The expansion of an odd family element u . x_{n+1}^p G_a (plain) or
    # u . G_a^p (dotted), u = x^k w_S T_t a basis monomial, has a unique
    # top-odd term of minimal permutation length, with unit coefficient:
    #     ( k + p e_{n+1},  S + {n+1},  shift(t) . s_1...s_{a-1} ),
    # where shift moves t to the strands 2..n+1.  All other top-odd terms sit
    # at strictly larger length, so the odd part eliminates greedily from the
    # shortest permutation upward; every step asserts its progress.

    def _sigma(self, a: int) -> Perm:
        return symgroup.evaluate_word(self.n1, tuple(range(a - 1, 0, -1)))

    def _odd_expansion(self, ukey: TermKey, a: int, p: int,
                       with_outer_x: bool) -> AlgebraElement:
        key = (ukey, a, p, with_outer_x)
        if key not in self._odd_exp_cache:
            fam = (AlgebraElement.x(self.n1, self.m, self.n1, p) * self.ga_p(a, 0)
                   if with_outer_x else self.ga_p(a, p))
            u1 = embed(AlgebraElement(self.n, self.m, {ukey: 1}))
            self._odd_exp_cache[key] = u1 * fam
        return self._odd_exp_cache[key]

    def _eliminate_top_omega(self, w: AlgebraElement, with_outer_x: bool):
        """Strip the terms carrying the top odd generator against the odd
        family; returns (coords, remainder) with coords[(a, p)] n-strand."""
        n, m, n1 = self.n, self.m, self.n1
        top_bit = 1 << n
        coords: dict[tuple[int, int], AlgebraElement] = {}
        rem = w
        while True:
            orows = {k: c for k, c in rem.terms.items() if k[1] & top_bit}
            if not orows:
                return coords, rem
            lead = min(orows, key=lambda k: (symgroup.length(k[2]), k))
            (xexp, omask, tau) = lead
            a = tau.index(1) + 1
            sig_inv = symgroup.inverse(self._sigma(a))
            shifted = symgroup.compose(tau, sig_inv)
            if shifted[0] != 1:
                raise ArithmeticError("odd lead permutation failed to split (bug)")
            tprime = tuple(v - 1 for v in shifted[1:])
            p = xexp[n]
            ukey = (xexp[:n], omask & ~top_bit, tprime)
            exp = self._odd_expansion(ukey, a, p, with_outer_x)
            cexp = exp.terms.get(lead, 0)
            if cexp not in (1, -1):
                raise ArithmeticError("odd lead coefficient is not a unit (bug)")
            c = orows[lead] * cexp
            cur = coords.get((a, p), AlgebraElement.zero(n, m))
            coords[(a, p)] = cur + AlgebraElement(n, m, {ukey: c})
            rem = rem - exp.scale(c)
            if rem.terms.get(lead, 0):
                raise ArithmeticError("odd elimination made no progress (bug)")

    # ---- structural / triangular even parts -------------------------------------
    def _read_off_plain(self, rem: AlgebraElement):
        """Coordinates of a top-omega-free element in the plain family
        u . x_{n+1}^p W_a (each family element is a single monomial)."""
        n, m = self.n, self.m
        coords: dict[tuple[int, int], AlgebraElement] = {}
        for (xexp, omask, perm), c in rem.terms.items():
            if omask >> n & 1:
                raise ArithmeticError("top odd generator not cleared (bug)")
            pprime, a = symgroup.coset_split(perm)
            p = xexp[n]
            ukey = (xexp[:n], omask, pprime)
            cur = coords.get((a, p), AlgebraElement.zero(n, m))
            coords[(a, p)] = cur + AlgebraElement(n, m, {ukey: c})
        return coords

    def _eliminate_dotted(self, rem: AlgebraElement):
        """Coordinates of a top-omega-free element in the dotted family
        u . W_a x_a^p, by greedy elimination on descending permutation
        length (the family is triangular with unit leading coefficient)."""
        n, m = self.n, self.m
        coords: dict[tuple[int, int], AlgebraElement] = {}
        rem = AlgebraElement(self.n1, m, dict(rem.terms))
        while not rem.is_zero():
            key = max(rem.terms, key=lambda k: symgroup.length(k[2]))
            (xexp, omask, perm) = key
            if omask >> n & 1:
                raise ArithmeticError("top odd generator not cleared (bug)")
            c = rem.terms[key]
            pprime, a = symgroup.coset_split(perm)
            p = xexp[n]
            ukey = (xexp[:n], omask, pprime)
            cur = coords.get((a, p), AlgebraElement.zero(n, m))
            coords[(a, p)] = cur + AlgebraElement(n, m, {ukey: c})
            u1 = embed(AlgebraElement(n, m, {ukey: c}))
            rem = rem - u1 * self.wa_xp(a, p)
        return coords


_CONTEXTS: dict[tuple[int, int], InductionContext] = {}


def get_context(n: int, m: int) -> InductionContext:
    if (n, m) not in _CONTEXTS:
        _CONTEXTS[(n, m)] = InductionContext(n, m)
    return _CONTEXTS[(n, m)]


def decompose_left(w: AlgebraElement):
    """Coordinates of an (n+1)-strand element in the plain left decomposition
    (+)_a A_n . Z[x_{n+1}] . W_a . (1 (+) theta_a).

    Returns {(a, eps): {p: n-strand element}} with eps = 1 for the theta side.
    """
    n1, m = w.n, w.m
    if n1 < 1:
        raise ValueError("decompose_left needs at least one strand")
    ctx = get_context(n1 - 1, m)
    odd, rem = ctx._eliminate_top_omega(w, with_outer_x=True)
    even = ctx._read_off_plain(rem)
    out: dict[tuple[int, int], dict[int, AlgebraElement]] = {}
    for (a, p), u in odd.items():
        if not u.is_zero():
            out.setdefault((a, 1), {})[p] = u
    for (a, p), u in even.items():
        if not u.is_zero():
            out.setdefault((a, 0), {})[p] = u
    return out


def recombine_left(n1: int, m: int, coords) -> AlgebraElement:
    ctx = get_context(n1 - 1, m)
    acc = AlgebraElement.zero(n1, m)
    for (a, eps), per_p in coords.items():
        for p, u in per_p.items():
            fam = (AlgebraElement.x(n1, m, n1, p) * ctx.ga_p(a, 0) if eps
                   else AlgebraElement.monomial(
                       n1, m, (0,) * (n1 - 1) + (p,), 0, symgroup.identity(n1))
                   * ctx.coset_T(a))
            acc = acc + embed(u) * fam
    return acc


def ses_split(w: AlgebraElement) -> tuple[list[tuple[AlgebraElement, AlgebraElement]], SesComponents]:
    """Split an (n+1)-strand element along the short exact sequence.

    Returns (kernel pairs, cokernel): the pairs (u, v) of n-strand elements
    satisfy  w = sum u T_n v + sum (cokernel terms),  and the cokernel
    coordinates sit in the a = n+1 summands of the dotted decomposition:
    poly entries (u, p) stand for u . x_{n+1}^p, odd entries for u . G_{n+1}^p.
    """
    n1, m = w.n, w.m
    n = n1 - 1
    if n < 1:
        raise ValueError("ses_split needs at least two strands")
    ctx = get_context(n, m)
    odd, rem = ctx._eliminate_top_omega(w, with_outer_x=False)
    even = ctx._eliminate_dotted(rem)
    pairs: list[tuple[AlgebraElement, AlgebraElement]] = []
    poly: list[tuple[AlgebraElement, int]] = []
    omega: list[tuple[AlgebraElement, int]] = []
    for (a, p), u in even.items():
        if u.is_zero():
            continue
        if a == n1:
            poly.append((u, p))
        else:
            v = AlgebraElement.T_word(n, m, tuple(range(a, n))) \
                * AlgebraElement.x(n, m, a, p)
            pairs.append((u, v))
    for (a, p), u in odd.items():
        if u.is_zero():
            continue
        if a == n1:
            omega.append((u, p))
        else:
            v = AlgebraElement.T_word(n, m, tuple(range(1, n))) \
                * AlgebraElement.from_poly(
                    SuperPolynomial.x(n, m, 1, p) * SuperPolynomial.w(n, m, 1)) \
                * AlgebraElement.T_word(n, m, tuple(range(a - 1, 0, -1)))
            pairs.append((u, v))
    return pairs, SesComponents(poly_part=poly, omega_part=omega)


def crossing_map(n1: int, m: int, pairs) -> AlgebraElement:
    """s(x (x) y) = x T_n y on a list of n-strand pairs."""
    acc = AlgebraElement.zero(n1, m)
    t_n = AlgebraElement.T(n1, m, n1 - 1)
    for u, v in pairs:
        acc = acc + embed(u) * t_n * embed(v)
    return acc


def recombine_ses(n1: int, m: int, pairs, coker: SesComponents) -> AlgebraElement:
    ctx = get_context(n1 - 1, m)
    acc = crossing_map(n1, m, pairs)
    for u, p in coker.poly_part:
        acc = acc + embed(u) * AlgebraElement.x(n1, m, n1, p)
    for u, p in coker.omega_part:
        acc = acc + embed(u) * ctx.ga_p(n1, p)
    return acc


def projection_poly_part(w: AlgebraElement) -> dict[int, AlgebraElement]:
    """The xi-indexed polynomial cokernel coordinates of w."""
    _, coker = ses_split(w)
    return {p: u for u, p in coker.poly_part}
