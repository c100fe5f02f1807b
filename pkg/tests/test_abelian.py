from __future__ import annotations

from hypothesis import given, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from chordal.abelian import FgAbelianGroup, GroupRingElement, Presentation, mat_mul, smith_normal_form

small = st.integers(-6, 6)
matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=0, max_size=5).map(lambda r: (r, n)))


def _det(M):
    return Matrix(M).det()


@given(matrices)
def test_snf_factorisation(data):
    R, n = data
    U, D, V = smith_normal_form(R, n)
    if R:
        assert mat_mul(mat_mul(U, R), V) == D
        assert abs(_det(U)) == 1
    assert abs(_det(V)) == 1
    diag = [D[i][i] for i in range(min(len(D), n))]
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(n) if i != j)
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else b % a == 0


@given(matrices)
def test_snf_matches_sympy(data):
    R, n = data
    if not R:
        return
    _, D, _ = smith_normal_form(R, n)
    ref = sympy_snf(Matrix(R), domain=ZZ)
    k = min(len(R), n)
    assert sorted(abs(D[i][i]) for i in range(k)) == sorted(abs(int(ref[i, i])) for i in range(k))


def test_presentation_of_known_groups():
    # Z^2 / <(2, 0), (0, 3)> = Z_6
    P = Presentation(["a", "b"], [[2, 0], [0, 3]])
    assert P.group.order == 6 and P.group.rank == 1
    assert P.group.add(P.image("a"), P.image("b")) != P.group.zero()
    # Z^3 / <(1, -1, 0)> = Z^2 with a = b
    Q = Presentation(["a", "b", "c"], [[1, -1, 0]])
    assert Q.group == FgAbelianGroup((), 2)
    assert Q.image("a") == Q.image("b") != Q.image("c")
    # no relations at all
    assert Presentation(["x"], []).group == FgAbelianGroup((), 1)


@given(st.lists(st.integers(-20, 20), min_size=3, max_size=3))
def test_presentation_images_respect_relations(r):
    P = Presentation(["a", "b", "c"], [r])
    G = P.group
    total = G.zero()
    for k, g in zip(r, "abc"):
        total = G.add(total, G.scale(P.image(g), k))
    assert total == G.zero()


def test_group_arithmetic():
    G = FgAbelianGroup((2, 3), 1)
    assert G.moduli == (2, 3, 0)
    assert G.reduce((5, -1, -4)) == (1, 2, -4)
    assert G.add((1, 2, 3), (1, 2, 3)) == (0, 1, 6)
    assert G.neg((1, 1, 1)) == (1, 2, -1)
    assert FgAbelianGroup((2, 3)).order == 6 and len(FgAbelianGroup((2, 3)).elements()) == 6
    assert FgAbelianGroup.from_json(G.to_json()) == G


def test_group_ring_elements():
    x = GroupRingElement([(1,), (1,), (0,)])
    assert x.coeff((1,)) == 2 and x.total() == 3
    assert x - x == GroupRingElement()
    assert str(GroupRingElement()) == "0"
    assert str(x) == "1·0 + 2·1"
    assert x + GroupRingElement({(0,): -1}) == GroupRingElement({(1,): 2})
    assert hash(x) == hash(GroupRingElement({(0,): 1, (1,): 2}))
