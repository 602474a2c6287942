import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import grid, monoid
from eer_garside.errors import NoPeriodFound
from eer_garside.garside import (
    EERGarside,
    GarsideMonoid,
    NormalForm,
    braid_circle,
    circle_make,
    classical_b_delta,
    classical_b_monoid,
    height,
    lambda_decompositions,
    lambda_word,
    phi,
    phi_order,
    psi_embed,
)
from eer_garside.presentation import (
    alternating_product,
    build_classical_a,
    build_classical_b,
    inverse,
    random_equivalent,
    random_word,
    rewrite_class,
)


def test_lambda_words(g33):
    p = g33.presentation
    assert p.format(g33.tau) == "t1 t0"
    assert p.format(g33.lambdas[3]) == "s3 t1 t0 s3"
    g35 = monoid(3, 5)
    assert g35.presentation.format(g35.lambdas[5]) == "s5 s4 s3 t1 t0 s3 s4 s5"
    assert lambda_word(1, 2) == (0, 0)


@pytest.mark.parametrize("e,r", grid(6, 5))
def test_lambda_and_delta_lengths(e, r):
    g = monoid(e, r)
    for k, lam in g.lambdas.items():
        assert len(lam) == 2 * (k - 1)
    assert len(g.delta) == r * (r - 1)


@pytest.mark.parametrize("e", range(1, 7))
def test_tau_is_every_circle_product(e):
    g = monoid(e, 3)
    for i in range(e):
        assert g.equal(g.tau, (g.t(i), g.t(i - 1)))


def test_divisibility_examples(g33):
    t0, s3 = g33.t(0), g33.s(3)
    assert g33.divides_left((t0,), g33.tau)
    assert not g33.divides_left((s3,), g33.tau)
    w = (t0, s3, g33.t(2))
    assert g33.divides_left(w, w)
    assert g33.divides_left((), w)


def test_lcm_examples(g33):
    for i in range(3):
        for j in range(3):
            if i != j:
                assert g33.equal(g33.lcm((i,), (j,)), g33.tau)
    assert g33.lcm((0,), (0,)) == (0,)
    assert g33.lcm() == ()


@pytest.mark.parametrize("e,r", grid(6, 5, e_min=2))
def test_lcm_of_atoms_is_delta(e, r):
    g = monoid(e, r)
    assert g.equal(g.lcm(*[(x,) for x in g.atoms]), g.delta)


def test_lcm_of_atoms_degenerate_circle():
    g = monoid(1, 3)
    lcm = g.lcm(*[(x,) for x in g.atoms])
    assert len(lcm) == 3 and not g.equal(lcm, g.delta)
    assert g.divides_left(lcm, g.delta)


def test_gcd_examples(g33):
    t0, s3 = g33.t(0), g33.s(3)
    assert g33.gcd_left(g33.tau, (t0, s3)) == (t0,)
    w = (s3, t0, g33.t(1))
    assert g33.equal(g33.gcd_left(w, w), w)
    assert g33.gcd_left((0,), (1,)) == ()


@pytest.mark.parametrize("e,r", [(2, 3), (3, 3), (3, 4), (4, 4)])
def test_lcm_gcd_lattice_laws(e, r):
    g = monoid(e, r)
    p = g.presentation
    rng = random.Random(e + 7 * r)
    for _ in range(80):
        a = random_word(p, rng.randint(0, 6), rng)
        b = random_word(p, rng.randint(0, 6), rng)
        m = g.lcm(a, b)
        d = g.gcd_left(a, b)
        assert g.divides_left(a, m) and g.divides_left(b, m)
        assert g.divides_left(d, a) and g.divides_left(d, b)
        # any common divisor divides the gcd, any common multiple is a multiple of the lcm
        c = g.lcm(a, b, random_word(p, 2, rng))
        assert g.divides_left(m, c)
        for x in g.atoms:
            if g.divides_left(d + (x,), a) and g.divides_left(d + (x,), b):
                pytest.fail("gcd is not maximal")


def test_equal_examples():
    for e in range(1, 7):
        g = monoid(e, 3)
        t0, t1, s3 = g.t(0), g.t(1), g.s(3)
        assert g.equal(alternating_product(t1, t0, e), alternating_product(t0, t1, e))
        assert g.equal((s3, t1, t0) * 2, (t1, t0, s3) * 2)
        if e >= 2:
            assert not g.equal((t0, t0), (t1, t1))
    assert not monoid(3, 3).equal((0,), (0, 0))


def test_equal_group_examples(g33):
    p = g33.presentation
    assert g33.equal_group(p.signed_word("t2"), p.signed_word("t1 t0 -t1"))
    w = p.signed_word("t0 -s3 t1")
    assert g33.equal_group(w, w)
    assert not g33.equal_group((0,), (1,))
    assert g33.equal_group(p.signed_word("s3 -s3"), ())


def test_reduce_fraction(g33):
    p = g33.presentation
    assert g33.reduce_fraction(p.signed_word("t1 t0 -t1")) == (2,)
    w = p.signed_word("t0 s3 -s3 -t0 t1")
    assert g33.reduce_fraction(w) == (1,)


def test_normal_form_examples(g33):
    assert g33.normal_form(()) == NormalForm(0, ())
    assert g33.normal_form((0, 0)) == NormalForm(0, ((0,), (0,)))
    assert g33.normal_form(g33.delta + (0,)) == NormalForm(1, ((0,),))
    assert g33.normal_form(g33.delta * 2).delta_power == 2
    nf = g33.normal_form((0, 3, 1, 0))
    assert g33.equal(nf.word(g33.delta), (0, 3, 1, 0))


@pytest.mark.parametrize("e,r", [(2, 3), (3, 3), (4, 3), (3, 4)])
def test_normal_form_is_greedy(e, r):
    g = monoid(e, r)
    rng = random.Random(e * r)
    for _ in range(100):
        w = random_word(g.presentation, rng.randint(0, 12), rng)
        nf = g.normal_form(w)
        assert g.equal(nf.word(g.delta), w)
        for f in nf.factors:
            assert f and g.divides_left(f, g.delta) and not g.equal(f, g.delta)
        for a, b in zip(nf.factors, nf.factors[1:]):
            # nothing of b can be moved into a while staying simple
            assert g.equal(g.gcd_left(g.left_quotient(a, g.delta), b), ())


def test_normal_form_complete_invariant_5000(g33):
    p = g33.presentation
    rng = random.Random(5000)
    for n in range(5000):
        u = random_word(p, rng.randint(0, 9), rng)
        v = random_equivalent(p, u, rng.randint(0, 10), rng) if n % 2 else random_word(p, len(u), rng)
        assert g33.equal(u, v) == (g33.normal_form(u) == g33.normal_form(v))


def test_canonical_word_is_least(g33):
    p = g33.presentation
    w = p.word("t2 t1 s3")
    assert g33.canonical_word(w) == min(rewrite_class(p, w), key=lambda x: (len(x), x))


def test_phi_examples():
    g = monoid(3, 4)
    assert g.presentation.format(g.phi((g.t(0),))) == "t1"
    assert g.phi((g.s(3),)) == (g.s(3),)
    assert phi_order(3, 3) == 1
    assert phi((0, 1, 2), 3, 3) == (0, 1, 2)


@pytest.mark.parametrize("e,r", grid(6, 5))
def test_delta_conjugation_is_phi(e, r):
    g = monoid(e, r)
    for x in g.atoms:
        assert g.equal(g.delta + (x,), g.phi((x,)) + g.delta)
    assert g.delta_conjugation_order() == phi_order(e, r)


def test_delta_central_for_33(g33):
    for x in g33.atoms:
        assert g33.equal(g33.delta + (x,), (x,) + g33.delta)


def test_height():
    g = monoid(3, 5)
    p = g.presentation
    assert height((), 3) == 1
    assert g.height(p.word("t0 s5 t2")) == 5
    for k in range(3, 6):
        assert g.height(g.lambdas[k]) == k
    assert g.height(g.tau) == 2


@pytest.mark.parametrize("e,r", grid(6, 6))
def test_height_is_relation_invariant(e, r):
    g = monoid(e, r)
    for rel in g.presentation.relations:
        assert g.height(rel.lhs) == g.height(rel.rhs)


@pytest.mark.parametrize("e,r", grid(6, 5))
def test_lambda_commutes_with_lower_height(e, r):
    g = monoid(e, r)
    for k in range(2, r + 1):
        lam = g.lambdas[k]
        for x in g.atoms:
            if g.height((x,)) < k:
                assert g.equal((x,) + lam, lam + g.down((x,)))


@pytest.mark.parametrize("e,r", grid(6, 5))
def test_lambda_commutes_with_tau_and_tail(e, r):
    g = monoid(e, r)
    assert g.equal(g.delta + g.tau, g.tau + g.delta)
    for j in range(3, r + 1):
        assert g.equal(g.delta + (g.s(j),), (g.s(j),) + g.delta)


def right_divisors_of_lambda(g: EERGarside, k: int):
    lam = g.lambdas[k]
    return [g.left_quotient(p, lam) for p in g.left_divisors(lam)]


@pytest.mark.parametrize("e,r", grid(4, 4, e_min=2))
def test_residue_of_atom_by_right_divisor(e, r):
    g = monoid(e, r)
    checked = 0
    for k in range(2, r + 1):
        for q in right_divisors_of_lambda(g, k):
            for a in g.atoms:
                if g.gcd_left((a,), q):
                    continue
                q_a, a_q = g.complement(q, (a,))
                if g.height(q_a) >= k:
                    continue
                checked += 1
                assert len(q_a) == 1
                assert g.equal(a_q, q)
    assert checked > 0 or r == 2


def test_residue_property_fails_for_degenerate_circle():
    # with e = 1, tau = t0 t0 is not square-free and the statement breaks
    g = monoid(1, 3)
    q = (0, 0, 1)  # t0 t0 s3, a right divisor of Lambda_3
    assert g.divides_right(q, g.lambdas[3])
    assert g.gcd_left((1,), q) == ()
    q_a, a_q = g.complement(q, (1,))
    assert g.height(q_a) < 3 and len(q_a) == 1
    assert not g.equal(a_q, q)


@pytest.mark.parametrize("e", range(1, 7))
def test_s3_circle_identities(e):
    g = monoid(e, 3)
    a, gam = g.s(3), g.tau
    for i in range(e):
        ti = g.t(i)
        assert g.equal_group((a, ti, a), (ti, a, ti))
    assert g.equal_group((a,) + gam + (a,) + gam, gam + (a,) + gam + (a,))


@pytest.mark.parametrize("e,r", grid(6, 5))
def test_lambda_decompositions_agree(e, r):
    g = monoid(e, r)
    words = list(lambda_decompositions(g).values())
    for w in words[1:]:
        assert g.equal(words[0], w)


@pytest.mark.parametrize("e,r", grid(6, 5))
def test_delta_is_balanced_small(e, r):
    g = monoid(e, r)
    if len(g.delta) <= 6:
        assert g.is_balanced(g.delta)


def test_balanced_examples(g33):
    assert g33.is_balanced(())
    assert g33.is_balanced((0,))
    assert len(g33.left_divisors(g33.delta)) == 35
    assert not g33.is_balanced((0, 3))


def test_psi_examples():
    b2 = build_classical_b(2)
    g = monoid(3, 3)
    assert g.presentation.format(psi_embed(b2.word("q1 q2"), 3)) == "t1 t0 s3"
    for e, r in [(2, 3), (3, 3), (3, 4), (5, 4)]:
        g = monoid(e, r)
        image = psi_embed(classical_b_delta(r - 1), e)
        assert g.equal(image, g.delta)


def test_classical_b_monoid():
    b = classical_b_monoid(3)
    assert len(b.delta) == 9
    assert b.is_balanced(b.delta)
    assert len(b.left_divisors(b.delta)) == 48


def test_classical_a_monoid():
    a = GarsideMonoid(build_classical_a(3))
    assert len(a.delta) == 6
    assert len(a.left_divisors(a.delta)) == 24


@pytest.mark.parametrize("e", range(1, 7))
def test_braid_circle_cardinality(e):
    g = monoid(e, 3)
    c = braid_circle(g, (g.t(1),), (g.t(0),), bound=4 * e)
    assert c.cardinality == e
    for i in range(e):
        assert g.equal_group(c.members[i], (g.t(i),))
    for i in c.indices:
        if i + 2 in c.members:
            assert g.equal_group(c.gamma + c.members[i], c.members[i + 2] + c.gamma)
        if i - 1 in c.members:
            assert g.equal_group(c.members[i] + c.members[i - 1], c.gamma)
            assert g.equal_group(c.members[i], c.gamma + inverse(c.members[i - 1]))


def free_reduce(w):
    out = []
    for x in w:
        if out and out[-1] == ~x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def test_circle_in_free_group_has_no_period():
    with pytest.raises(NoPeriodFound) as info:
        circle_make(
            (1,),
            (0,),
            mul=lambda a, b: free_reduce(a + b),
            inv=inverse,
            eq=lambda a, b: a == b,
            bound=10,
        )
    assert info.value.circle.cardinality is None


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 4), max_size=10), st.integers(0, 20), st.randoms(use_true_random=False))
def test_height_and_normal_form_invariant_under_rewrites(w, steps, rng):
    g = monoid(3, 4)
    u = tuple(w)
    v = random_equivalent(g.presentation, u, steps, rng)
    assert g.height(u) == g.height(v)
    assert g.normal_form(u) == g.normal_form(v)
