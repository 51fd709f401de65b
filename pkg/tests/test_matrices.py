from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cycledeg.dihedral import Dihedral, dihedral_group
from cycledeg.errors import VerificationError
from cycledeg.linalg import matmul, rank_exact, transpose
from cycledeg.matrices import (
    CycleMatrix,
    check_block_rank,
    check_image_precondition,
    check_lowrank_contrapositive,
    check_lowrank_matrix,
    check_normal_form,
    check_reconstruction,
    decompose,
    image_basis,
    normalize_block_form,
    random_block_form,
    random_generic,
    random_subspace,
    reconstruct_from_image,
    sample_rng,
    sweep_block_rank,
    sweep_normal_form,
    sweep_reconstruct,
)


def cm(a, b):
    return CycleMatrix(tuple(a), tuple(b))


def test_dense_support():
    A = cm(range(1, 6), [1, 2, 3, 4, 5])
    m = A.to_dense()
    assert m[4][0] == m[0][4] == 5
    assert m[0][2] == 0
    assert CycleMatrix.from_dense(m) == A
    with pytest.raises(ValueError):
        CycleMatrix.from_dense([[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1]][:3] + [[0, 0, 0, 1]])


def test_decompose_wraps_first_block():
    d = decompose(cm([1] * 5, [1, 1, 0, 1, 0]))
    assert d.zeros == [3, 5]
    assert [b.indices for b in d.blocks] == [(1, 2, 3), (4, 5)]
    d = decompose(cm([1] * 5, [0, 1, 1, 1, 0]))
    assert [b.indices for b in d.blocks] == [(1,), (2, 3, 4, 5)]
    d = decompose(cm([1] * 5, [1, 0, 1, 1, 1]))
    assert [b.indices for b in d.blocks] == [(3, 4, 5, 1, 2)]


def test_decompose_trivial_cases():
    assert decompose(cm([1] * 4, [0] * 4)).sizes == [1, 1, 1, 1]
    assert decompose(cm([1] * 6, [1, 0, 1, 0, 1, 0])).sizes == [2, 2, 2]
    with pytest.raises(ValueError):
        decompose(cm([1] * 4, [1] * 4))


def test_block_rank_examples():
    rep = check_block_rank(cm([2, 3, 4, 5], [0] * 4))
    assert rep.ranks == [1, 1, 1, 1] and rep.rank == 4
    # Path block 1-2-3 with zero diagonal has rank 2.
    rep = check_block_rank(cm([0, 0, 0, 7], [1, 1, 0, 0]))
    assert rep.ranks == [2, 1] and rep.rank == 3


def test_lowrank_example():
    assert check_lowrank_matrix(cm([0] * 4, [1] * 4)) == 2
    with pytest.raises(ValueError):
        check_lowrank_matrix(cm([0] * 4, [1, 0, 1, 1]))


def test_dihedral_action_is_conjugation():
    A = cm([1, 2, 3, 4, 5, 6], [7, 8, 9, 10, 11, 12])
    dense = A.to_dense()
    for g in dihedral_group(6):
        P = [[int(g.vertex(j + 1) == i + 1) for j in range(6)] for i in range(6)]
        assert A.act(g).to_dense() == matmul(matmul(P, dense), transpose(P))


@settings(max_examples=25, deadline=None)
@given(st.integers(4, 7), st.integers(0, 10**6))
def test_dihedral_invariance(n, seed):
    A = random_block_form(n, sample_rng(seed, 0))
    d = decompose(A)
    for g in dihedral_group(n):
        B = A.act(g)
        assert B.rank() == A.rank()
        assert sorted(decompose(B).sizes) == sorted(d.sizes)


def test_normal_form_identity_when_already_in_block_form():
    A = cm([1, 1, 0, 0], [1, 0, 0, 0])
    nf = normalize_block_form(A)
    assert nf.sigma.is_identity()
    assert nf.type == [2, 1, 1]
    check_normal_form(A, nf)


def test_full_block_between_deficient_blocks_merges_left():
    half = Fraction(1, 2)
    A = cm([1, 1, 1, 2, 2, half], [1, 0, 1, 0, 1, 0])
    assert [b.rank for b in decompose(A).blocks] == [1, 2, 1]
    nf = normalize_block_form(A)
    assert nf.type == [4, 2]
    check_normal_form(A, nf)


def test_full_first_block_merges_right():
    half = Fraction(1, 2)
    A = cm([1, 2, 1, 1, 2, half], [1, 0, 1, 0, 1, 0])
    nf = normalize_block_form(A)
    assert nf.type == [4, 2]
    check_normal_form(A, nf)


def test_normal_form_rotates_to_last_zero():
    A = cm([0, 1, 1, 1, 1], [1, 1, 0, 1, 1])
    nf = normalize_block_form(A)
    assert nf.sigma == Dihedral(5, 2)
    assert nf.matrix.b[-1] == 0
    check_normal_form(A, nf)


def test_normal_form_rejects_regular_or_uncut():
    with pytest.raises(ValueError):
        normalize_block_form(cm([1] * 4, [0] * 4))
    with pytest.raises(ValueError):
        normalize_block_form(cm([1] * 4, [1] * 4))


def test_reconstruct_small_instance():
    U = random_subspace(4, sample_rng(3, 0))
    check_image_precondition(U)
    A = reconstruct_from_image(U)
    check_reconstruction(U, A)
    assert A.a[0] == 1


def test_reconstruct_is_fixed_point_on_its_image():
    for index in range(10):
        U = random_subspace(6, sample_rng(11, index))
        A = reconstruct_from_image(U)
        assert reconstruct_from_image(image_basis(A)) == A


def test_reconstruct_rejects_two_coordinate_vector():
    U = [[1, 1, 0, 0, 0], [0, 1, 2, 3, 1], [1, 0, 3, 1, 2]]
    with pytest.raises(ValueError):
        reconstruct_from_image(U)
    with pytest.raises(ValueError):
        check_image_precondition([[1, 0, 0, 0]])


def test_seeded_sweeps_are_clean_and_reproducible():
    for sweep in (sweep_block_rank, sweep_normal_form, sweep_reconstruct, check_lowrank_contrapositive):
        a = sweep(5, 40, 9)
        assert a.ok, a.failures
        assert a.failures == sweep(5, 40, 9).failures


def test_samplers_respect_requests():
    rng = sample_rng(1, 2)
    A = random_generic(6, rng, singular=True)
    assert not A.zeros() and A.rank() < 6
    B = random_block_form(6, rng, singular=True)
    assert B.zeros() and B.rank() < 6


def test_contrapositive_needs_n_four():
    with pytest.raises(ValueError):
        check_lowrank_contrapositive(3, 1, 0)


def test_detection_of_bad_block_form():
    A = cm([1, 1, 0, 2], [1, 0, 0, 0])
    nf = normalize_block_form(A)
    nf.type = [3, 1]
    with pytest.raises(VerificationError):
        check_normal_form(A, nf)
