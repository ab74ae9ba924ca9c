import random

import pytest

from supernilhecke import symgroup as sg
from supernilhecke.superring import (
    SuperPolynomial, apply_perm, apply_simple, complete_h, demazure,
    demazure_word, elementary_e, labeled_omega, labeled_omega_closed,
    omega_to_top,
)


def P(n, m=-1):
    return {
        "one": SuperPolynomial.one(n, m),
        "x": [None] + [SuperPolynomial.x(n, m, i) for i in range(1, n + 1)],
        "w": [None] + [SuperPolynomial.w(n, m, i) for i in range(1, n + 1)],
    }


def random_poly(n, m, rng, nterms=4, maxexp=2):
    terms = {}
    for _ in range(nterms):
        xe = tuple(rng.randrange(maxexp + 1) for _ in range(n))
        om = rng.randrange(1 << n)
        c = rng.randrange(-3, 4)
        if c:
            terms[(xe, om)] = terms.get((xe, om), 0) + c
    return SuperPolynomial(n, m, {k: c for k, c in terms.items() if c})


def test_odd_generators_anticommute():
    g = P(3)
    assert g["w"][2] * g["w"][1] == -(g["w"][1] * g["w"][2])
    assert (g["w"][1] * g["w"][1]).is_zero()
    assert (g["x"][1] + g["x"][2]) * g["x"][1] == \
        SuperPolynomial.monomial(3, -1, (2, 0, 0), 0) + SuperPolynomial.monomial(3, -1, (1, 1, 0), 0)


def test_ring_mismatch_rejected():
    with pytest.raises(ValueError):
        SuperPolynomial.x(2, -1, 1) * SuperPolynomial.x(2, 0, 1)


def test_action_on_generators():
    g = P(2)
    assert apply_simple(1, g["x"][1]) == g["x"][2]
    assert apply_simple(1, g["w"][1]) == g["w"][1] + (g["x"][1] - g["x"][2]) * g["w"][2]
    assert apply_simple(1, g["w"][2]) == g["w"][2]


def test_action_preserves_bidegree():
    rng = random.Random(1)
    for n, m in ((2, -1), (3, 0), (3, -2)):
        for _ in range(10):
            f = random_poly(n, m, rng)
            for comp in f.bidegree_components().items():
                d, part = comp
                for i in range(1, n):
                    img = apply_simple(i, part)
                    assert img.is_zero() or img.bidegree() == d


def test_symmetric_group_module_structure():
    rng = random.Random(2)
    for n in (2, 3, 4):
        m = -1
        for _ in range(34):
            f = random_poly(n, m, rng)
            for i in range(1, n):
                assert apply_simple(i, apply_simple(i, f)) == f
            for i in range(1, n - 1):
                lhs = apply_simple(i, apply_simple(i + 1, apply_simple(i, f)))
                rhs = apply_simple(i + 1, apply_simple(i, apply_simple(i + 1, f)))
                assert lhs == rhs
            for i in range(1, n):
                for j in range(i + 2, n):
                    lhs = apply_simple(i, apply_simple(j, f))
                    assert lhs == apply_simple(j, apply_simple(i, f))


def test_apply_perm_is_word_independent():
    rng = random.Random(3)
    n, m = 3, -1
    f = random_poly(n, m, rng)
    for p in sg.all_permutations(n):
        images = set()
        for w in sg.all_reduced_words(p):
            g = f
            for i in w:
                g = apply_simple(i, g)
            images.add(tuple(sorted(g.terms.items())))
        assert len(images) == 1
        assert images.pop() == tuple(sorted(apply_perm(p, f).terms.items()))


def test_demazure_values():
    g = P(2)
    assert demazure(1, g["x"][1]) == g["one"]
    assert demazure(1, g["w"][1]) == -g["w"][2]
    assert demazure(1, g["w"][2]).is_zero()


def test_demazure_bidegree_shift():
    rng = random.Random(4)
    for n, m in ((2, -1), (3, 1)):
        f = random_poly(n, m, rng)
        for (q, l), part in f.bidegree_components().items():
            for i in range(1, n):
                img = demazure(i, part)
                assert img.is_zero() or img.bidegree() == (q - 2, l)


def test_demazure_leibniz_and_twisting():
    rng = random.Random(5)
    for n, m in ((2, -1), (3, -1), (3, 0)):
        for _ in range(20):
            f = random_poly(n, m, rng)
            g = random_poly(n, m, rng)
            for i in range(1, n):
                assert demazure(i, f * g) == demazure(i, f) * g + apply_simple(i, f) * demazure(i, g)
                assert demazure(i, apply_simple(i, f)) == -demazure(i, f)
                assert apply_simple(i, demazure(i, f)) == demazure(i, f)


def test_demazure_lemma_relations():
    rng = random.Random(6)
    for n, m in ((2, -1), (3, 0)):
        for _ in range(15):
            f = random_poly(n, m, rng)
            for i in range(1, n):
                x_i = SuperPolynomial.x(n, m, i)
                x_i1 = SuperPolynomial.x(n, m, i + 1)
                w_i = SuperPolynomial.w(n, m, i)
                w_i1 = SuperPolynomial.w(n, m, i + 1)
                assert x_i * demazure(i, f) - demazure(i, x_i1 * f) == f
                assert demazure(i, x_i * f) - x_i1 * demazure(i, f) == f
                for k in range(1, n + 1):
                    if k != i:
                        w_k = SuperPolynomial.w(n, m, k)
                        assert demazure(i, w_k * f) == w_k * demazure(i, f)
                combo = w_i - x_i1 * w_i1
                assert demazure(i, combo * f) == combo * demazure(i, f)


def test_demazure_squares_to_zero_and_braid():
    rng = random.Random(7)
    n, m = 3, -1
    for _ in range(10):
        f = random_poly(n, m, rng)
        assert demazure_word((1, 1), f).is_zero()
        assert demazure_word((2, 2), f).is_zero()
        assert demazure_word((1, 2, 1), f) == demazure_word((2, 1, 2), f)
        assert demazure_word((), f) == f


def test_non_reduced_words_kill():
    rng = random.Random(8)
    for n in (2, 3, 4):
        m = -1
        f = random_poly(n, m, rng)
        words = []
        wrng = random.Random(100 + n)
        while len(words) < 25:
            length = wrng.randrange(2, 7)
            w = tuple(wrng.randrange(1, n) for _ in range(length))
            if not sg.is_reduced(n, w):
                words.append(w)
        for w in words:
            assert demazure_word(w, f).is_zero(), w


def test_symmetric_polynomials():
    n, m = 2, -1
    assert complete_h(n, m, 1, 2, 2) == SuperPolynomial.x(n, m, 2)
    assert elementary_e(n, m, 2, 1, 2) == SuperPolynomial.monomial(n, m, (1, 1), 0)
    h2 = complete_h(n, m, 2, 1, 2)
    expect = (SuperPolynomial.monomial(n, m, (2, 0), 0)
              + SuperPolynomial.monomial(n, m, (1, 1), 0)
              + SuperPolynomial.monomial(n, m, (0, 2), 0))
    assert h2 == expect
    assert complete_h(n, m, 0, 1, 2) == SuperPolynomial.one(n, m)
    assert elementary_e(n, m, 0, 1, 2) == SuperPolynomial.one(n, m)
    assert elementary_e(n, m, 3, 1, 2).is_zero()
    # symmetric sanity
    assert apply_simple(1, complete_h(n, m, 3, 1, 2)) == complete_h(n, m, 3, 1, 2)


def test_labeled_omega_paper_examples():
    n, m = 4, -1
    x3 = SuperPolynomial.x(n, m, 3)
    x4 = SuperPolynomial.x(n, m, 4)
    w = lambda i: SuperPolynomial.w(n, m, i)
    assert labeled_omega(n, m, 4, 2) == w(2) - (x3 + x4) * w(3) + x4 * x4 * w(4)
    assert labeled_omega(n, m, 4, 2).bidegree() == (-4, 2)
    n = 2
    x1 = SuperPolynomial.x(n, m, 1)
    x2 = SuperPolynomial.x(n, m, 2)
    w = lambda i: SuperPolynomial.w(n, m, i)
    assert labeled_omega(n, m, 2, 3) == \
        (x1 * x1 + x1 * x2 + x2 * x2) * w(1) - x2 * x2 * x2 * w(2)
    assert labeled_omega(n, m, 2, 3).bidegree() == (2, 2)


def test_labeled_omega_base_and_guard():
    for n, m in ((3, -1), (2, 0), (3, -2)):
        for k in range(1, n + 1):
            assert labeled_omega(n, m, k, m + 1) == SuperPolynomial.w(n, m, k)
        with pytest.raises(ValueError):
            labeled_omega(n, m, 1, m)


def test_labeled_omega_recursion_vs_closed_form():
    for n in range(1, 6):
        for m in (-2, -1, 0, 1):
            for k in range(1, n + 1):
                for t in range(0, 7):
                    a = m + 1 + t
                    lhs = labeled_omega(n, m, k, a)
                    assert lhs == labeled_omega_closed(n, m, k, a), (n, m, k, a)
                    if not lhs.is_zero():
                        assert lhs.bidegree() == (2 * (a - k), 2)


def test_omega_to_top_round_trip():
    for n in range(1, 6):
        for m in (-2, -1, 0, 1):
            for k in range(1, n + 1):
                assert omega_to_top(n, m, k) == SuperPolynomial.w(n, m, k)


def test_omega_top_decomposition_example():
    # w_1 = w_2^1 + x_2 w_2^0 on two strands at the classical parameter
    from supernilhecke.superring import omega_top_decomposition
    n, m = 2, -1
    pairs = omega_top_decomposition(n, m, 1)
    assert [(a, repr(c)) for a, c in pairs] == [(1, "1"), (0, "x2")]
    assert omega_top_decomposition(n, m, 2) == [(0, SuperPolynomial.one(n, m))]
