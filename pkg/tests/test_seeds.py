import random
from fractions import Fraction

import pytest

from qca.seeds import (
    Chamber,
    Seed,
    cluster_chamber,
    fixed_data_from_json,
    fixed_data_to_json,
    langlands_dual,
    make_fixed_data,
)


def a2_tables():
    # Table 1/2 fixture: eps = ((0,-1),(1,0))
    return make_fixed_data([[0, -1], [1, 0]])


def a23():
    # eps = ((0,-3),(2,0)): {e1,e2} = -1, d = (2,3)
    return make_fixed_data([[0, -1], [1, 0]], d=[2, 3])


def test_make_fixed_data_a2():
    fd = a2_tables()
    s = Seed(fd)
    assert s.epsilon() == ((0, -1), (1, 0))
    assert fd.session_denominator == 2


def test_make_fixed_data_a23():
    fd = a23()
    s = Seed(fd)
    assert s.epsilon() == ((0, -3), (2, 0))
    assert fd.d_lcm == 6


def test_gcd_d_rejected():
    with pytest.raises(ValueError):
        make_fixed_data([[0, -1], [1, 0]], d=[2, 2])


def test_integrality_rejected():
    with pytest.raises(ValueError):
        make_fixed_data([[0, Fraction(1, 2)], [Fraction(-1, 2), 0]], d=[1, 1])


def test_a2_mutation_table_data():
    # epsilon and C along the pentagon sequence 2,1,2,1,2 (0-indexed 1,0,...)
    fd = a2_tables()
    seq = [1, 0, 1, 0, 1]
    eps_expected = [
        ((0, -1), (1, 0)),
        ((0, 1), (-1, 0)),
        ((0, -1), (1, 0)),
        ((0, 1), (-1, 0)),
        ((0, -1), (1, 0)),
        ((0, 1), (-1, 0)),
    ]
    c_expected = [
        ((1, 0), (0, 1)),
        ((1, 0), (0, -1)),
        ((-1, 0), (0, -1)),
        ((-1, -1), (0, 1)),
        ((1, 1), (-1, 0)),
        ((0, 1), (1, 0)),
    ]
    s = Seed(fd)
    for step in range(6):
        assert s.epsilon() == eps_expected[step], step
        assert s.cvectors() == c_expected[step], step
        if step < 5:
            s = s.mutate(seq[step])


def test_mutation_restores_epsilon_and_c():
    fd = a23()
    s = Seed(fd)
    for k in (0, 1):
        s2 = s.mutate(k).mutate(k)
        assert s2.epsilon() == s.epsilon()
        assert s2.cvectors() == s.cvectors()
        assert s2.same_chamber(s)


def test_frozen_mutation_rejected():
    fd = make_fixed_data([[0, -1], [1, 0]], unfrozen=[0])
    s = Seed(fd)
    with pytest.raises(ValueError):
        s.mutate(1)


def test_langlands_dual():
    fd = a23()
    dual = langlands_dual(fd)
    assert dual.d == (3, 2)
    # abstract form scaled by 1/6, then written in the dual basis (2e1, 3e2)
    assert dual.skew[0][1] == Fraction(-1)
    s = Seed(dual)
    assert s.epsilon() == ((0, -2), (3, 0))
    # duality is an involution
    assert langlands_dual(dual) == fd
    # d = (1,1) is self-dual
    fd2 = a2_tables()
    assert langlands_dual(fd2).skew == fd2.skew
    assert langlands_dual(fd2).d == fd2.d


def test_sign_coherence_empirical():
    rng = random.Random(2)
    fixtures = [a2_tables(), a23(),
                make_fixed_data([[0, 1, -1], [-1, 0, 1], [1, -1, 0]]),
                make_fixed_data([[0, 2, 0], [-2, 0, 1], [0, -1, 0]])]
    for fd in fixtures:
        depth = 8 if fd.n == 2 else 4
        for _ in range(6):
            s = Seed(fd)
            prev = None
            for _ in range(depth):
                choices = [k for k in fd.unfrozen if k != prev]
                k = rng.choice(choices)
                s = s.mutate(k)
                prev = k
                for c in s.cvectors():
                    assert any(c), "zero c-vector"
                    assert all(x >= 0 for x in c) or all(x <= 0 for x in c), \
                        f"sign coherence fails: {c}"


def test_epsilon_integrality_along_mutations():
    fd = a23()
    s = Seed(fd)
    for k in (0, 1, 0, 1, 0):
        s = s.mutate(k)
        eps = s.epsilon()
        for i in range(2):
            for j in range(2):
                assert Fraction(eps[i][j]).denominator == 1


def test_cluster_chamber():
    fd = a2_tables()
    s = Seed(fd)
    ch = cluster_chamber(s)
    assert set(ch.gvectors) == {(1, 0), (0, 1)}
    s1 = s.mutate(1)
    ch1 = cluster_chamber(s1)
    assert set(ch1.dual_generators) == {(1, 0), (0, -1)}
    assert set(ch1.gvectors) == {(1, 0), (0, -1)}


def test_cluster_chamber_degenerate():
    fd = a2_tables()
    s = Seed(fd)

    class Fake(Seed):
        def cvector(self, k):
            return (1, 1)

    fake = Fake(fd)
    with pytest.raises(ValueError):
        cluster_chamber(fake)


def test_chamber_duality_along_pentagon():
    fd = a2_tables()
    s = Seed(fd)
    for k in (1, 0, 1, 0, 1):
        s = s.mutate(k)
        ch = cluster_chamber(s)
        for c in ch.dual_generators:
            for g in ch.gvectors:
                assert Fraction(c[0] * g[0], fd.d[0]) + Fraction(c[1] * g[1], fd.d[1]) >= 0


def test_json_roundtrip():
    fd = a23()
    data = fixed_data_to_json(fd)
    fd2 = fixed_data_from_json(data)
    assert fd2 == fd


def test_f_basis_dual():
    fd = a23()
    s = Seed(fd).mutate(0).mutate(1)
    e = s.basis
    f = s.f_basis()
    for i in range(2):
        for j in range(2):
            # <d_i e_{i;s}, f_{j;s}> = delta_ij with <e_a, f_b> = delta/d_a
            val = sum(Fraction(fd.d[i] * e[i][a] * f[j][a], fd.d[a]) for a in range(2))
            assert val == (1 if i == j else 0)
