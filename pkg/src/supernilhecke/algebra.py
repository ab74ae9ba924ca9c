"""
The enlarged nilHecke superalgebra on n strands with floating-dot parameter m:
canonical normal forms x^k w^S T_p, multiplication, the defining action on the
super polynomial ring, distinguished elements, bases and relation checks.

Normal form strategy: a product is reduced by left-multiplying generators onto
normal forms with the single twist rule T_i . f = d_i(f) + s_i(f) T_i  (f in
the coefficient ring), together with T_i T_p = T_{s_i p} when lengths add and
zero otherwise.
"""
from __future__ import annotations

import itertools

from . import symgroup
from .superring import (
    SuperPolynomial, Monomial, apply_simple, demazure, demazure_word,
    exponent_vectors, labeled_omega, mask_to_indices,
)
from .symgroup import Perm, Word

TermKey = tuple[tuple[int, ...], int, Perm]  # (xexp, omask, perm)


class AlgebraElement:
    """An element in the canonical basis x^k w^S T_p."""

    __slots__ = ("n", "m", "terms")

    def __init__(self, n: int, m: int, terms: dict[TermKey, int] | None = None):
        self.n = n
        self.m = m
        self.terms = {k: c for k, c in (terms or {}).items() if c != 0}

    # ---- constructors -------------------------------------------------
    @classmethod
    def zero(cls, n: int, m: int) -> "AlgebraElement":
        return cls(n, m)

    @classmethod
    def one(cls, n: int, m: int) -> "AlgebraElement":
        return cls.const(n, m, 1)

    @classmethod
    def const(cls, n: int, m: int, c: int) -> "AlgebraElement":
        if c == 0:
            return cls(n, m)
        return cls(n, m, {((0,) * n, 0, symgroup.identity(n)): c})

    @classmethod
    def from_poly(cls, f: SuperPolynomial) -> "AlgebraElement":
        e = symgroup.identity(f.n)
        return cls(f.n, f.m, {(x, om, e): c for (x, om), c in f.terms.items()})

    @classmethod
    def x(cls, n: int, m: int, i: int, power: int = 1) -> "AlgebraElement":
        return cls.from_poly(SuperPolynomial.x(n, m, i, power))

    @classmethod
    def w(cls, n: int, m: int, i: int) -> "AlgebraElement":
        return cls.from_poly(SuperPolynomial.w(n, m, i))

    @classmethod
    def w_labeled(cls, n: int, m: int, i: int, a: int) -> "AlgebraElement":
        return cls.from_poly(labeled_omega(n, m, i, a))

    @classmethod
    def T(cls, n: int, m: int, i: int) -> "AlgebraElement":
        if not 1 <= i <= n - 1:
            raise ValueError(f"T index {i} out of range for n={n}")
        return cls(n, m, {((0,) * n, 0, symgroup.simple(n, i)): 1})

    @classmethod
    def T_word(cls, n: int, m: int, letters: Word) -> "AlgebraElement":
        acc = cls.one(n, m)
        for i in letters:
            acc = cls.T(n, m, i) * acc
        return acc

    @classmethod
    def T_perm(cls, n: int, m: int, p: Perm) -> "AlgebraElement":
        return cls(n, m, {((0,) * n, 0, tuple(p)): 1})

    @classmethod
    def monomial(cls, n: int, m: int, xexp, omask: int, perm: Perm, coeff: int = 1) -> "AlgebraElement":
        return cls(n, m, {(tuple(xexp), omask, tuple(perm)): coeff})

    # ---- additive structure ---------------------------------------------
    def _check(self, other: "AlgebraElement"):
        if self.n != other.n or self.m != other.m:
            raise ValueError(
                f"algebra mismatch: ({self.n},{self.m}) vs ({other.n},{other.m})")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            v = terms.get(k, 0) + c
            if v:
                terms[k] = v
            else:
                terms.pop(k, None)
        return AlgebraElement(self.n, self.m, terms)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.n, self.m, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c: int) -> "AlgebraElement":
        if c == 0:
            return AlgebraElement(self.n, self.m)
        return AlgebraElement(self.n, self.m, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgebraElement) and self.n == other.n
                and self.m == other.m and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, self.m, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    # ---- multiplication --------------------------------------------------
    def _group_by_perm(self) -> dict[Perm, SuperPolynomial]:
        groups: dict[Perm, dict[Monomial, int]] = {}
        for (xexp, omask, perm), c in self.terms.items():
            groups.setdefault(perm, {})[(xexp, omask)] = c
        return {p: SuperPolynomial(self.n, self.m, t) for p, t in groups.items()}

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        n, m = self.n, self.m
        out: dict[TermKey, int] = {}
        left = self._group_by_perm()
        right = other._group_by_perm()
        for sigma, g in right.items():
            lsigma = symgroup.length(sigma)
            for theta, f in left.items():
                pushed = push_T_through(symgroup.reduced_word(theta), g)
                for rho, h in pushed.items():
                    prod_perm = symgroup.compose(rho, sigma)
                    if symgroup.length(prod_perm) != symgroup.length(rho) + lsigma:
                        continue
                    for key, c in (f * h).terms.items():
                        tk = (key[0], key[1], prod_perm)
                        v = out.get(tk, 0) + c
                        if v:
                            out[tk] = v
                        else:
                            out.pop(tk, None)
        return AlgebraElement(n, m, out)

    # ---- grading -----------------------------------------------------------
    def monomial_bidegree(self, key: TermKey) -> tuple[int, int]:
        xexp, omask, perm = key
        q = 2 * sum(xexp) + sum(2 * (self.m + 1 - i) for i in mask_to_indices(omask))
        return q - 2 * symgroup.length(perm), 2 * omask.bit_count()

    def bidegree(self) -> tuple[int, int] | None:
        degs = {self.monomial_bidegree(k) for k in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def bidegree_components(self) -> dict[tuple[int, int], "AlgebraElement"]:
        comps: dict[tuple[int, int], dict[TermKey, int]] = {}
        for k, c in self.terms.items():
            comps.setdefault(self.monomial_bidegree(k), {})[k] = c
        return {d: AlgebraElement(self.n, self.m, t) for d, t in comps.items()}

    # ---- display / serialization ----------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1]))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (xexp, omask, perm), c in self.sorted_terms():
            factors = []
            for i, e in enumerate(xexp, start=1):
                if e == 1:
                    factors.append(f"x{i}")
                elif e > 1:
                    factors.append(f"x{i}^{e}")
            factors.extend(f"w{i}" for i in mask_to_indices(omask))
            if symgroup.length(perm):
                factors.extend(f"T{i}" for i in reversed(symgroup.reduced_word(perm)))
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
            {"coeff": c, "x": list(xexp), "w": list(mask_to_indices(omask)),
             "perm": list(perm)}
            for (xexp, omask, perm), c in self.sorted_terms()
        ]


def push_T_through(letters: Word, f: SuperPolynomial) -> dict[Perm, SuperPolynomial]:
    """Normal form of T_w . f as a map perm -> coefficient, via the twist rule
    T_i . g = d_i(g) + s_i(g) T_i applied letter by letter, bottom-to-top."""
    n = f.n
    result: dict[Perm, SuperPolynomial] = {symgroup.identity(n): f}
    for i in letters:
        new: dict[Perm, SuperPolynomial] = {}

        def add(perm, poly):
            if poly.is_zero():
                return
            if perm in new:
                new[perm] = new[perm] + poly
                if new[perm].is_zero():
                    del new[perm]
            else:
                new[perm] = poly

        for rho, h in result.items():
            add(rho, demazure(i, h))
            srho = symgroup.apply_word_letter(rho, i)
            if symgroup.length(srho) == symgroup.length(rho) + 1:
                add(srho, apply_simple(i, h))
        result = new
    return result


def act(u: AlgebraElement, f: SuperPolynomial) -> SuperPolynomial:
    """Defining action on the coefficient ring: x^k w^S T_p acts as
    multiplication by x^k w^S after the Demazure word of p."""
    if u.n != f.n or u.m != f.m:
        raise ValueError("parameter mismatch between operator and argument")
    n, m = u.n, u.m
    acc = SuperPolynomial.zero(n, m)
    for (xexp, omask, perm), c in u.terms.items():
        g = demazure_word(symgroup.reduced_word(perm), f)
        if g.is_zero():
            continue
        mono = SuperPolynomial.monomial(n, m, xexp, omask, c)
        acc = acc + mono * g
    return acc


# ---- distinguished elements -------------------------------------------------

def theta(n: int, m: int, a: int) -> AlgebraElement:
    """theta_a = T_{a-1}...T_1 w_1 T_1...T_{a-1} in normal form."""
    if not 1 <= a <= n:
        raise ValueError(f"theta index {a} out of range 1..{n}")
    acc = AlgebraElement.w(n, m, 1)
    for i in range(1, a):
        t = AlgebraElement.T(n, m, i)
        acc = t * acc * t
    return acc


def theta_dotted(n: int, m: int, a: int, power: int) -> AlgebraElement:
    """T_{a-1}...T_1 x_1^power w_1 T_1...T_{a-1} (dot inside the tight word)."""
    if not 1 <= a <= n:
        raise ValueError(f"theta index {a} out of range 1..{n}")
    acc = AlgebraElement.from_poly(
        SuperPolynomial.x(n, m, 1, power) * SuperPolynomial.w(n, m, 1))
    for i in range(1, a):
        t = AlgebraElement.T(n, m, i)
        acc = t * acc * t
    return acc


def phi(n: int, m: int, i: int) -> AlgebraElement:
    """phi_1 = w_1 and phi_{i+1} = T_i phi_i T_i x_{i+1} - x_i T_i phi_i T_i;
    the normal form is the plain generator w_i."""
    if not 1 <= i <= n:
        raise ValueError(f"phi index {i} out of range 1..{n}")
    acc = AlgebraElement.w(n, m, 1)
    for j in range(1, i):
        t = AlgebraElement.T(n, m, j)
        mid = t * acc * t
        acc = mid * AlgebraElement.x(n, m, j + 1) - AlgebraElement.x(n, m, j) * mid
    return acc


def idempotent_e(n: int, m: int) -> AlgebraElement:
    """e_n = T_{w_0} x^delta with x^delta = x_1^{n-1}...x_{n-1}."""
    delta = tuple(n - k for k in range(1, n + 1))
    staircase = AlgebraElement.monomial(
        n, m, delta, 0, symgroup.identity(n))
    return AlgebraElement.T_perm(n, m, symgroup.longest_element(n)) * staircase


def tau(u: AlgebraElement) -> AlgebraElement:
    """The involutive anti-automorphism fixing the generators: reverses every
    word; computed on normal forms as T_{p^{-1}} . (reversed w's) . x^k."""
    n, m = u.n, u.m
    acc = AlgebraElement.zero(n, m)
    for (xexp, omask, perm), c in u.terms.items():
        h = omask.bit_count()
        sign = -1 if (h * (h - 1) // 2) & 1 else 1
        poly = SuperPolynomial.monomial(n, m, xexp, omask, sign * c)
        acc = acc + AlgebraElement.T_perm(n, m, symgroup.inverse(perm)) \
            * AlgebraElement.from_poly(poly)
    return acc


# ---- bases -----------------------------------------------------------------

def _xexp_iter(n: int, total_max: int):
    """All exponent tuples with sum <= total_max."""
    if n == 0:
        yield ()
        return
    for s in range(total_max + 1):
        yield from exponent_vectors(n, s)


def basis(n: int, m: int, qcut: int):
    """All basis monomials (xexp, omask, perm) with q-degree <= qcut."""
    out = []
    for perm in symgroup.all_permutations(n):
        ldeg = 2 * symgroup.length(perm)
        for omask in range(1 << n):
            odeg = sum(2 * (m + 1 - i) for i in mask_to_indices(omask))
            budget = qcut - odeg + ldeg
            if budget < 0:
                continue
            for xexp in _xexp_iter(n, budget // 2):
                out.append((xexp, omask, perm))
    return out


def basis_counts(n: int, m: int, qcut: int) -> dict[tuple[int, int, int], int]:
    """Counts of basis monomials per (qdeg, lambdadeg, parity), q <= qcut.

    Counted combinatorially (number of exponent vectors of a given total),
    not by listing monomials.
    """
    from math import comb
    counts: dict[tuple[int, int, int], int] = {}
    if n == 0:
        return {(0, 0, 0): 1} if qcut >= 0 else {}
    perms_by_len = symgroup.perms_by_length(n)
    for plen, nperms in perms_by_len.items():
        for omask in range(1 << n):
            odeg = sum(2 * (m + 1 - i) for i in mask_to_indices(omask))
            lam = 2 * omask.bit_count()
            par = omask.bit_count() & 1
            base = odeg - 2 * plen
            s = 0
            while base + 2 * s <= qcut:
                key = (base + 2 * s, lam, par)
                counts[key] = counts.get(key, 0) + nperms * comb(s + n - 1, n - 1)
                s += 1
    return counts


def tight_monomial_skeletons(n: int, m: int):
    """For each permutation and choice vector, the normal form of the tight
    word T_{f^{n+1}} theta^{l}.. T_{f^1} (without the x-prefix), together with
    its bidegree.  Returns a list of (perm, choices, AlgebraElement)."""
    out = []
    for perm in symgroup.all_permutations(n):
        word = symgroup.left_adjusted_word(perm)
        s, factors, minima = symgroup.partition_word(n, word)
        for choices in itertools.product((0, 1), repeat=n):
            acc = AlgebraElement.T_word(n, m, factors[0])
            for k in range(1, n + 1):
                if choices[k - 1]:
                    acc = theta(n, m, minima[s[k - 1] - 1]) * acc
                acc = AlgebraElement.T_word(n, m, factors[k]) * acc
            out.append((perm, choices, acc))
    return out


def tight_basis(n: int, m: int, qcut: int):
    """The tight-monomial family up to q-degree qcut, each in normal form."""
    if n > 4:
        raise ValueError("tight_basis is limited to n <= 4")
    out = []
    for perm, choices, skel in tight_monomial_skeletons(n, m):
        if skel.is_zero():
            raise ArithmeticError("tight skeleton collapsed to zero (bug)")
        qs, _ = skel.bidegree()
        budget = qcut - qs
        if budget < 0:
            continue
        for xexp in _xexp_iter(n, budget // 2):
            xmono = AlgebraElement.monomial(n, m, xexp, 0, symgroup.identity(n))
            out.append(xmono * skel)
    return out


def random_element(n: int, m: int, rng, nterms: int = 4, maxexp: int = 2,
                   maxcoeff: int = 3) -> AlgebraElement:
    """Small random element for seeded verification suites."""
    perms = list(symgroup.all_permutations(n))
    terms: dict[TermKey, int] = {}
    for _ in range(nterms):
        xe = tuple(rng.randrange(maxexp + 1) for _ in range(n))
        om = rng.randrange(1 << n)
        perm = perms[rng.randrange(len(perms))]
        c = rng.randrange(-maxcoeff, maxcoeff + 1)
        if c:
            terms[(xe, om, perm)] = terms.get((xe, om, perm), 0) + c
    return AlgebraElement(n, m, {k: c for k, c in terms.items() if c})


# ---- relation suite ----------------------------------------------------------

def verify_relations(n: int, m: int, max_extra_label: int = 3) -> list[str]:
    """Check every defining relation in normal form; returns failure messages
    (empty on success).  Labeled variants run for labels up to
    m+1+max_extra_label."""
    failures: list[str] = []
    E = AlgebraElement

    def check(name, lhs, rhs):
        if lhs != rhs:
            failures.append(name)

    one = E.one(n, m)
    xs = {i: E.x(n, m, i) for i in range(1, n + 1)}
    ws = {i: E.w(n, m, i) for i in range(1, n + 1)}
    Ts = {i: E.T(n, m, i) for i in range(1, n)}

    for i in range(1, n):
        check(f"T{i}^2 = 0", Ts[i] * Ts[i], E.zero(n, m))
        check(f"T{i} x{i} - x{i+1} T{i} = 1",
              Ts[i] * xs[i] - xs[i + 1] * Ts[i], one)
        check(f"T{i} x{i+1} - x{i} T{i} = -1",
              Ts[i] * xs[i + 1] - xs[i] * Ts[i], -one)
        for j in range(1, n + 1):
            if j - i not in (0, 1):
                check(f"T{i} x{j} = x{j} T{i}", Ts[i] * xs[j], xs[j] * Ts[i])
    for i in range(1, n - 1):
        check(f"braid T{i} T{i+1} T{i}",
              Ts[i] * Ts[i + 1] * Ts[i], Ts[i + 1] * Ts[i] * Ts[i + 1])
    for i in range(1, n):
        for j in range(i + 2, n):
            check(f"distant T{i} T{j}", Ts[i] * Ts[j], Ts[j] * Ts[i])
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            check(f"x{i} x{j} commute", xs[i] * xs[j], xs[j] * xs[i])
            check(f"x{i} w{j} commute", xs[i] * ws[j], ws[j] * xs[i])
            if i != j:
                check(f"w{i} w{j} anticommute", ws[i] * ws[j], -(ws[j] * ws[i]))
        check(f"w{i}^2 = 0", ws[i] * ws[i], E.zero(n, m))

    labels = range(m + 1, m + 2 + max_extra_label)
    for a in labels:
        was = {k: E.w_labeled(n, m, k, a) for k in range(1, n + 1)}
        for i in range(1, n):
            for k in range(1, n + 1):
                if k != i:
                    check(f"T{i} w{k}^{a} commute", Ts[i] * was[k], was[k] * Ts[i])
            combo = was[i] - xs[i + 1] * was[i + 1]
            check(f"T{i} (w{i}^{a} - x{i+1} w{i+1}^{a}) commute",
                  Ts[i] * combo, combo * Ts[i])
        # floating-dot translation across a strand
        for i in range(1, n):
            mid = Ts[i] * was[i] * Ts[i]
            check(f"translate w{i+1}^{a}",
                  was[i + 1], xs[i + 1] * mid - mid * xs[i])
            check(f"translate w{i+1}^{a} (other form)",
                  was[i + 1], mid * xs[i + 1] - xs[i] * mid)

    if n >= 2:
        lhs = Ts[1] * ws[1] * Ts[1] * ws[1]
        rhs = ws[1] * Ts[1] * ws[1] * Ts[1]
        check("T1 w1 T1 w1 = - w1 T1 w1 T1", lhs, -rhs)
    return failures


# ---- cyclotomic quotients -----------------------------------------------------

def _min_qdeg(n: int, m: int) -> int:
    """Least q-degree of a basis monomial."""
    lead = sum(min(0, 2 * (m + 1 - i)) for i in range(1, n + 1))
    return lead - n * (n - 1)


def spanning_rank_table(n: int, m: int, middle: AlgebraElement, qcut: int,
                        lcut: int | None = None) -> dict[tuple[int, int, int], int]:
    """Per-(q, lambda, parity) rank of the two-sided span { u . middle . v }
    over basis monomials u, v, for q <= qcut."""
    from .linalg import IntEchelon
    E = AlgebraElement
    mid_deg = middle.bidegree()
    if mid_deg is None:
        raise ValueError("middle element must be homogeneous and nonzero")
    dq, dl = mid_deg
    minq = _min_qdeg(n, m)
    pool = basis(n, m, qcut - dq - minq)
    by_deg: dict[tuple[int, int], list[TermKey]] = {}
    for key in pool:
        e = E(n, m, {key: 1})
        by_deg.setdefault(e.monomial_bidegree(key), []).append(key)
    lefts: dict[tuple[int, int], list[AlgebraElement]] = {}
    for deg, us in by_deg.items():
        ls = [E(n, m, {ukey: 1}) * middle for ukey in us]
        lefts[deg] = [l for l in ls if not l.is_zero()]
    dims = basis_counts(n, m, qcut)
    table: dict[tuple[int, int, int], int] = {}
    for (q, l, par), dim_full in dims.items():
        if lcut is not None and l > lcut:
            continue
        monos = basis_at_bidegree(n, m, q, l)
        index = {key: i for i, key in enumerate(monos)}
        ech = IntEchelon(len(monos))
        for (qu, lu), ls in lefts.items():
            if ech.is_full():
                break
            qv, lv = q - dq - qu, l - dl - lu
            if (qv, lv) not in by_deg:
                continue
            for left in ls:
                if ech.is_full():
                    break
                for vkey in by_deg[(qv, lv)]:
                    prod = left * E(n, m, {vkey: 1})
                    if prod.is_zero():
                        continue
                    vec = [0] * len(monos)
                    for key, c in prod.terms.items():
                        vec[index[key]] = c
                    if ech.add(vec) and ech.is_full():
                        break
        if ech.rank:
            table[(q, l, par)] = ech.rank
    return table


def basis_at_bidegree(n: int, m: int, q: int, lam: int) -> list[TermKey]:
    """Basis monomials at an exact bidegree."""
    if lam % 2 or lam < 0 or lam > 2 * n:
        return []
    out = []
    for omask in range(1 << n):
        if 2 * omask.bit_count() != lam:
            continue
        odeg = sum(2 * (m + 1 - i) for i in mask_to_indices(omask))
        for perm in symgroup.all_permutations(n):
            rem = q - odeg + 2 * symgroup.length(perm)
            if rem < 0 or rem % 2:
                continue
            for xexp in exponent_vectors(n, rem // 2):
                out.append((xexp, omask, perm))
    return out


def cyclotomic_grdim(n: int, N: int, qcut: int) -> dict[tuple[int, int, int], int]:
    """Graded dimension of the quotient by the two-sided ideal (x_1^N), at
    minimal label parameter -1, per (q, lambda, parity) with q <= qcut."""
    m = -1
    if n == 0:
        return {(0, 0, 0): 1} if qcut >= 0 else {}
    dims = basis_counts(n, m, qcut)
    ideal = spanning_rank_table(
        n, m, AlgebraElement.x(n, m, 1, N), qcut)
    out = {}
    for key, d in dims.items():
        r = d - ideal.get(key, 0)
        if r:
            out[key] = r
    return out
