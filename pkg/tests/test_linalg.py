import random
from fractions import Fraction

from qathin.linalg import gf2_rank, integer_det, smith_normal_form, symmetric_signature


def brute_gf2_rank(rows, width):
    span = {0}
    rank = 0
    for r in rows:
        if r not in span:
            span |= {r ^ s for s in span}
            rank += 1
    return rank


def test_gf2_rank_small():
    assert gf2_rank([]) == 0
    assert gf2_rank([0b1, 0b10, 0b11]) == 2
    assert gf2_rank([0b111, 0b110, 0b001]) == 2


def test_gf2_rank_random():
    rng = random.Random(5)
    for _ in range(50):
        rows = [rng.getrandbits(10) for _ in range(rng.randrange(1, 12))]
        assert gf2_rank(rows) == brute_gf2_rank(rows, 10)


def test_signature_diagonal_and_hyperbolic():
    assert symmetric_signature([[2, 0], [0, -3]]) == 0
    assert symmetric_signature([[5]]) == 1
    assert symmetric_signature([]) == 0
    # hyperbolic pair contributes nothing
    assert symmetric_signature([[0, 1], [1, 0]]) == 0
    assert symmetric_signature([[0, 2, 0], [2, 0, 0], [0, 0, 7]]) == 1


def test_signature_vs_jacobi_minors():
    """Independent oracle: Jacobi's leading-principal-minor rule on a
    regularized matrix, tied back to the exact signature via the nullity."""
    rng = random.Random(11)
    eps = Fraction(1, 10**9)
    for _ in range(60):
        n = rng.randrange(1, 6)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = rng.randrange(-4, 5)
        mm = [
            [Fraction(m[i][j]) + (eps if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        minors = [Fraction(1)]
        generic = True
        for k in range(1, n + 1):
            det = _frac_det([row[:k] for row in mm[:k]])
            if det == 0:
                generic = False
                break
            minors.append(det)
        if not generic:
            continue
        neg = sum(1 for k in range(1, n + 1) if minors[k] * minors[k - 1] < 0)
        jacobi_sig = (n - neg) - neg
        nullity = n - _frac_rank(m)
        assert jacobi_sig == symmetric_signature(m) + nullity


def _frac_rank(m):
    n = len(m)
    work = [[Fraction(x) for x in row] for row in m]
    rank = 0
    row_i = 0
    for col in range(n):
        piv = next((i for i in range(row_i, n) if work[i][col] != 0), None)
        if piv is None:
            continue
        work[row_i], work[piv] = work[piv], work[row_i]
        for i in range(n):
            if i != row_i and work[i][col] != 0:
                f = work[i][col] / work[row_i][col]
                for j in range(n):
                    work[i][j] -= f * work[row_i][j]
        rank += 1
        row_i += 1
    return rank


def _frac_det(m):
    n = len(m)
    m = [row[:] for row in m]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return det


def test_integer_det():
    assert integer_det([]) == 1
    assert integer_det([[7]]) == 7
    assert integer_det([[1, 2], [3, 4]]) == -2
    assert integer_det([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 30
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randrange(1, 6)
        m = [[rng.randrange(-5, 6) for _ in range(n)] for _ in range(n)]
        assert integer_det(m) == round(_frac_det([[Fraction(x) for x in r] for r in m]))


def test_smith_normal_form():
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]
    assert smith_normal_form([[1, 0], [0, 1]]) == [1, 1]
    assert smith_normal_form([[0, 0], [0, 0]]) == []
    assert smith_normal_form([[6]]) == [6]
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    rng = random.Random(9)
    for _ in range(40):
        r = rng.randrange(1, 5)
        c = rng.randrange(1, 5)
        m = [[rng.randrange(-6, 7) for _ in range(c)] for _ in range(r)]
        divs = smith_normal_form(m)
        # divisibility chain
        for a, b in zip(divs, divs[1:]):
            assert b % a == 0
        # rank matches a fraction-Gauss rank
        rank = 0
        work = [[Fraction(x) for x in row] for row in m]
        cols = list(range(c))
        row_i = 0
        for col in cols:
            piv = next((i for i in range(row_i, r) if work[i][col] != 0), None)
            if piv is None:
                continue
            work[row_i], work[piv] = work[piv], work[row_i]
            for i in range(r):
                if i != row_i and work[i][col] != 0:
                    f = work[i][col] / work[row_i][col]
                    for j in range(c):
                        work[i][j] -= f * work[row_i][j]
            rank += 1
            row_i += 1
        assert len(divs) == rank
