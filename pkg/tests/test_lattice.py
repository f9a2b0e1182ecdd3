import random

import pytest

from concordance.lattice import (
    EmbeddingWitness,
    IntegralLattice,
    NotEmbeddable,
    direct_sum,
    embed,
    is_definite,
    is_standard,
    norm_shell,
    orthogonal_complement,
)
from oracles import all_small_grams, brute_force_embeddable, random_unimodular

A3 = IntegralLattice(((-2, 1, 0), (1, -2, 1), (0, 1, -2)))
E8 = IntegralLattice((
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, -1),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, -1, 0, 0, 0, 0, 2),
))


def scrambled_identity(rng, n, sign=1):
    return IntegralLattice.identity(n, sign).congruent(random_unimodular(rng, n, steps=3 * n))


def test_gram_validation():
    with pytest.raises(ValueError):
        IntegralLattice(((1, 2), (3, 1)))
    assert IntegralLattice.from_json("[[2, 1], [1, 2]]").determinant() == 3
    with pytest.raises(ValueError):
        IntegralLattice.from_json("[[2, 1.5], [1.5, 2]]")


def test_definiteness_examples():
    assert is_definite(IntegralLattice.diagonal([-2, -3]), -1)
    assert not is_definite(IntegralLattice.diagonal([1, -1]), 1)
    assert not is_definite(IntegralLattice.diagonal([1, -1]), -1)
    assert is_definite(E8, 1) and not is_definite(E8, -1)
    assert not is_definite(IntegralLattice(((0, 1), (1, 0))), 1)


def test_embed_examples():
    w = embed(IntegralLattice.diagonal([-4]), 1, -1)
    assert w.vectors == ((2,),)
    r = embed(IntegralLattice.diagonal([-3]), 1, -1)
    assert isinstance(r, NotEmbeddable) and not r
    w = embed(A3, 3, -1)
    assert w and w.verify(A3)
    spec_witness = EmbeddingWitness(((1, -1, 0), (0, 1, -1), (-1, -1, 0)), -1, 3)
    assert spec_witness.verify(A3)


def test_embed_rejects():
    with pytest.raises(ValueError):
        embed(A3, 2, -1)
    with pytest.raises(ValueError):
        embed(A3, 3, 0)
    r = embed(IntegralLattice.diagonal([1, -1]), 4, 1)
    assert not r and "definite" in r.reason


def test_norm_shell():
    s = norm_shell(2, 5)
    assert len(s) == 8 and all(int(a * a + b * b) == 5 for a, b in s)
    assert [tuple(v) for v in s] == sorted(tuple(v) for v in s)
    assert len(norm_shell(3, 3)) == 8 and len(norm_shell(2, 3)) == 0


@pytest.mark.parametrize("rank", [1, 2])
def test_agrees_with_brute_force(rank):
    for gram in all_small_grams(rank, bound=4):
        L = IntegralLattice(gram)
        for N in range(rank, 5):
            for sign in (1, -1):
                got = embed(L, N, sign)
                assert bool(got) == brute_force_embeddable(gram, N, sign), (gram, N, sign)
                if got:
                    assert got.verify(L)


def test_agrees_with_brute_force_rank3_sample():
    rng = random.Random(0)
    grams = list(all_small_grams(3, bound=4))
    for gram in rng.sample(grams, 300):
        L = IntegralLattice(gram)
        for N in (3, 4):
            sign = rng.choice((1, -1))
            assert bool(embed(L, N, sign)) == brute_force_embeddable(gram, N, sign), (gram, N, sign)


def test_search_is_deterministic():
    rng = random.Random(4)
    L = scrambled_identity(rng, 5, -1)
    assert embed(L, 5, -1) == embed(L, 5, -1)
    assert embed(A3, 4, -1) == embed(A3, 4, -1)


@pytest.mark.parametrize("seed", range(8))
def test_unimodular_rank_stable_embedding(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    sign = rng.choice((1, -1))
    L = scrambled_identity(rng, n, sign)
    assert abs(L.determinant()) == 1
    assert bool(embed(L, n, sign)) == bool(embed(L, n + 2, sign)) is True


def test_is_standard_examples():
    assert is_standard(IntegralLattice.identity(5))
    assert is_standard(IntegralLattice.identity(3, -1))
    assert not is_standard(IntegralLattice.diagonal([1, 2]))
    assert not is_standard(E8)
    assert E8.determinant() == 1


def test_orthogonal_complement_examples():
    w = embed(IntegralLattice.diagonal([1]), 3, 1)
    C = orthogonal_complement(w)
    assert C.rank == 2 and C.determinant() == 1 and is_standard(C)
    w = embed(IntegralLattice.diagonal([-4]), 1, -1)
    assert orthogonal_complement(w).rank == 0


@pytest.mark.parametrize("seed", range(6))
def test_complement_of_unimodular_same_rank_is_trivial(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 7)
    L = scrambled_identity(rng, n)
    w = embed(L, n, 1)
    assert w and orthogonal_complement(w).rank == 0


def test_complement_gram_is_orthogonal():
    w = embed(A3, 5, -1)
    C = orthogonal_complement(w)
    assert C.rank == 2
    assert is_definite(C, -1)


def test_direct_sum():
    empty = IntegralLattice(())
    assert direct_sum(A3, empty) == A3
    B = IntegralLattice.diagonal([-4, -1])
    S = direct_sum(A3, B)
    assert S.rank == 5 and S.determinant() == A3.determinant() * B.determinant()
    wa, wb = embed(A3, 3, -1), embed(B, 2, -1)
    block = EmbeddingWitness(tuple(v + (0, 0) for v in wa.vectors)
                             + tuple((0, 0, 0) + v for v in wb.vectors), -1, 5)
    assert block.verify(S)
    assert embed(S, 5, -1)


def test_congruence_preserves_determinant():
    rng = random.Random(9)
    P = random_unimodular(rng, 3)
    assert A3.congruent(P).determinant() == A3.determinant()
