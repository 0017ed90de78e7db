"""Concrete Kirillov-Reshetikhin crystals.

Type A B^{r,s} is realized on rectangular semistandard tableaux with the
classical operators given by the signature rule on the column reading
word and the affine operators conjugated through Schutzenberger
promotion.  Type C supplies the one-box crystal B^{1,1} for any rank and
the two C_2 crystals transcribed from the paper-figure fixtures.
"""

from functools import lru_cache

from .cartan import build_cartan
from .crystals import (AbstractCrystal, CrystalGraph, classical_restriction,
                       explore, explore_tensor, highest_weight_node,
                       DEFAULT_NODE_CAP)
from .errors import UnsupportedFactorError

# ---------------------------------------------------------------------------
# rectangular semistandard tableaux (tuples of row tuples)


def rect_tableaux(n, r, s):
    """All SSYT of shape r x s over the alphabet 1..n+1, generated column
    by column in lexicographic order."""
    from itertools import combinations
    cols = [c for c in combinations(range(1, n + 2), r)]
    out = []

    def extend(prefix):
        if len(prefix) == s:
            rows = tuple(tuple(col[i] for col in prefix) for i in range(r))
            out.append(rows)
            return
        last = prefix[-1] if prefix else None
        for col in cols:
            if last is None or all(x >= y for x, y in zip(col, last)):
                extend(prefix + [col])

    extend([])
    return out


def is_rect_ssyt(t, n):
    rows = len(t)
    cols = len(t[0]) if rows else 0
    for row in t:
        if len(row) != cols:
            return False
        if any(not 1 <= x <= n + 1 for x in row):
            return False
        if any(row[j] > row[j + 1] for j in range(cols - 1)):
            return False
    for i in range(rows - 1):
        if any(t[i][j] >= t[i + 1][j] for j in range(cols)):
            return False
    return True


def reading_order(r, s):
    """Column reading: bottom-to-top within a column, columns left to right."""
    return [(i, j) for j in range(s) for i in range(r - 1, -1, -1)]


def _tableau_signature(t, i):
    """Surviving '-' and '+' cell positions for color i on the reading word."""
    r, s = len(t), len(t[0])
    minus, plus = [], []
    for pos in reading_order(r, s):
        x = t[pos[0]][pos[1]]
        if x == i:
            if plus:
                plus.pop()
            else:
                minus.append(pos)
        elif x == i + 1:
            plus.append(pos)
    return minus, plus


def tableau_f(t, i):
    minus, _ = _tableau_signature(t, i)
    if not minus:
        return None
    a, b = minus[-1]
    rows = [list(row) for row in t]
    rows[a][b] = i + 1
    return tuple(tuple(row) for row in rows)


def tableau_e(t, i):
    _, plus = _tableau_signature(t, i)
    if not plus:
        return None
    a, b = plus[0]
    rows = [list(row) for row in t]
    rows[a][b] = i
    return tuple(tuple(row) for row in rows)


def promotion(t, n):
    """Schutzenberger promotion on a rectangular tableau over 1..n+1.

    Entries n+1 (necessarily in the last row) are vacated, the holes are
    slid to the upper-left by reverse jeu de taquin (largest of the
    above/left neighbors moves, ties to above), remaining entries are
    incremented and holes become 1.
    """
    r = len(t)
    grid = [list(row) for row in t]
    holes = [j for j in range(len(t[0])) if grid[r - 1][j] == n + 1]
    assert all(x <= n for row in grid[:-1] for x in row), \
        "entry n+1 outside the last row"
    for j in holes:
        grid[r - 1][j] = None
    for j in holes:
        i, k = r - 1, j
        while True:
            above = grid[i - 1][k] if i > 0 else None
            left = grid[i][k - 1] if k > 0 else None
            if above is None and left is None:
                break
            if above is not None and (left is None or above >= left):
                grid[i][k] = above
                grid[i - 1][k] = None
                i -= 1
            else:
                grid[i][k] = left
                grid[i][k - 1] = None
                k -= 1
    out = tuple(tuple(1 if x is None else x + 1 for x in row) for row in grid)
    assert is_rect_ssyt(out, n), "promotion left the tableau family"
    return out


def promotion_inverse(t, n):
    """pr^{-1} = pr^n, as pr has order n+1 on rectangles."""
    for _ in range(n):
        t = promotion(t, n)
    return t


def tableau_weight(t, n):
    counts = [0] * (n + 2)
    for row in t:
        for x in row:
            counts[x] += 1
    return tuple(counts[k] - counts[k + 1] for k in range(1, n + 1))


def tableau_repr(t):
    return "[" + ",".join("[" + ",".join(str(x) for x in row) + "]"
                          for row in t) + "]"


def column_replication(t, m):
    """The similarity candidate B^{r,s} -> B^{r,ms}: repeat each column m times."""
    return tuple(tuple(x for x in row for _ in range(m)) for row in t)


class TypeAKR(AbstractCrystal):
    """Implicit affine crystal on rectangular tableaux: classical operators
    from the reading word, f_0 = pr^{-1} . f_1 . pr (orientation pinned by
    the weight rule wt(f_0 b) = wt(b) + theta)."""

    def __init__(self, n, r, s):
        self.n, self.r, self.s = n, r, s
        self.colors = tuple(range(0, n + 1))

    def weight(self, t):
        return tableau_weight(t, self.n)

    def repr_of(self, t):
        return tableau_repr(t)

    def f(self, t, color):
        if color != 0:
            return tableau_f(t, color)
        img = tableau_f(promotion(t, self.n), 1)
        return None if img is None else promotion_inverse(img, self.n)

    def e(self, t, color):
        if color != 0:
            return tableau_e(t, color)
        img = tableau_e(promotion(t, self.n), 1)
        return None if img is None else promotion_inverse(img, self.n)


@lru_cache(maxsize=None)
def kr_typeA(n, r, s, node_cap=DEFAULT_NODE_CAP):
    """The type A_n KR crystal B^{r,s} as an explored graph."""
    if not 1 <= r <= n:
        raise UnsupportedFactorError("type A%d has no node r=%d" % (n, r))
    if s < 1:
        raise UnsupportedFactorError("B^{r,s} needs s >= 1")
    cartan = build_cartan("A", n)
    seeds = rect_tableaux(n, r, s)
    if len(seeds) > node_cap:
        from .errors import ResourceLimitError
        raise ResourceLimitError("tableau count exceeds node cap")
    return explore(cartan, TypeAKR(n, r, s), seeds, node_cap,
                   affine_complete=True)


# ---------------------------------------------------------------------------
# type C one-box crystal (Kashiwara-Nakashima letters)


def kn_letters(n):
    """1 < 2 < ... < n < nbar < ... < 1bar; barred letters are negative ints."""
    return list(range(1, n + 1)) + [-k for k in range(n, 0, -1)]


def kn_weight(letter, n):
    k = abs(letter)
    w = [0] * n
    w[k - 1] = 1
    if k >= 2:
        w[k - 2] = -1
    if letter < 0:
        w = [-x for x in w]
    return tuple(w)


class TypeCOneBox(AbstractCrystal):
    """B^{1,1} in type C_n: f_i: i -> i+1 and (i+1)bar -> ibar for i < n,
    f_n: n -> nbar, f_0: 1bar -> 1."""

    def __init__(self, n):
        self.n = n
        self.colors = tuple(range(0, n + 1))

    def weight(self, b):
        return kn_weight(b, self.n)

    def repr_of(self, b):
        return str(b)

    def f(self, b, color):
        n = self.n
        if color == 0:
            return 1 if b == -1 else None
        if color == n:
            return -n if b == n else None
        if b == color:
            return color + 1
        if b == -(color + 1):
            return -color
        return None

    def e(self, b, color):
        n = self.n
        if color == 0:
            return -1 if b == 1 else None
        if color == n:
            return n if b == -n else None
        if b == color + 1:
            return color
        if b == -color:
            return -(color + 1)
        return None


@lru_cache(maxsize=None)
def kr_C_onebox(n):
    """The type C_n KR crystal B^{1,1} (2n letters)."""
    assert n >= 2
    cartan = build_cartan("C", n)
    return explore(cartan, TypeCOneBox(n), kn_letters(n),
                   affine_complete=True)


# ---------------------------------------------------------------------------
# the two C_2 crystals transcribed from the paper figure; both are the
# level-1 Demazure-filtered objects, so they carry prefiltered = ("head", 1)

_TENSOR11_NODES = [
    (1, 1), (1, 2), (1, -2), (1, -1),
    (2, 1), (2, 2), (2, -2), (2, -1),
    (-2, 1), (-2, 2), (-2, -2), (-2, -1),
    (-1, 1), (-1, 2), (-1, -2), (-1, -1),
]

_TENSOR11_EDGES = [
    (7, 2, 11), (2, 1, 3), (1, 1, 5), (6, 2, 10), (8, 1, 9), (1, 2, 2),
    (4, 2, 8), (12, 0, 0), (13, 2, 14), (11, 1, 15), (9, 1, 13), (0, 1, 1),
    (10, 1, 11), (5, 2, 6), (3, 1, 7),
]

_B12_NODES = [
    (), (1, 1), (1, 2), (1, -2), (1, -1), (2, 2),
    (2, -2), (2, -1), (-2, -2), (-2, -1), (-1, -1),
]

_B12_EDGES = [
    (2, 2, 3), (4, 1, 7), (9, 1, 10), (8, 1, 9), (1, 1, 2), (0, 0, 1),
    (3, 1, 4), (7, 2, 9), (2, 1, 5), (5, 2, 6), (6, 2, 8),
]


def _kn_row_weight(row, n):
    w = (0,) * n
    from .cartan import vec_add
    for letter in row:
        w = vec_add(w, kn_weight(letter, n))
    return w


@lru_cache(maxsize=None)
def fixture_C2(which):
    """The two C_2 crystals of the paper figure, transcribed verbatim:
    'tensor11' is the level-1 Demazure filtration of B^{1,1} (x) B^{1,1},
    'B12' the one of B^{1,2}."""
    cartan = build_cartan("C", 2)
    if which == "tensor11":
        nodes = list(_TENSOR11_NODES)
        edges = _TENSOR11_EDGES
        weights = [_kn_row_weight(b, 2) for b in nodes]
        reprs = ["%d (x) %d" % b for b in nodes]
    elif which == "B12":
        nodes = list(_B12_NODES)
        edges = _B12_EDGES
        weights = [_kn_row_weight(b, 2) for b in nodes]
        reprs = ["[[" + ",".join(str(x) for x in b) + "]]" if b else "[]"
                 for b in nodes]
    else:
        raise ValueError("unknown fixture %r" % (which,))
    f_edges = {(src, c): dst for (src, c, dst) in edges}
    graph = CrystalGraph(cartan, (0, 1, 2), nodes, f_edges, weights, reprs,
                         affine_complete=False)
    graph.prefiltered = ("head", 1)
    return graph


# ---------------------------------------------------------------------------
# classical fundamental crystals, used to assemble finite-type B(lambda)


@lru_cache(maxsize=None)
def classical_fundamental(cartan, i):
    """B(pi_i) as a classical crystal graph (type A any node; C_2 both)."""
    if cartan.family == "A":
        return classical_restriction(kr_typeA(cartan.rank, i, 1))
    if cartan.family == "C" and i == 1:
        return classical_restriction(kr_C_onebox(cartan.rank))
    if cartan.family == "C" and cartan.rank == 2 and i == 2:
        box = classical_restriction(kr_C_onebox(2))
        tensor = explore_tensor(cartan, [box, box])
        hw = [j for j in range(len(tensor))
              if tensor.weights[j] == (0, 1)
              and all(tensor.e(j, c) is None for c in tensor.colors)]
        assert len(hw) == 1
        comp = tensor.component_of(hw[0])
        assert comp.weights[highest_weight_node(comp)] == (0, 1)
        return comp
    raise UnsupportedFactorError(
        "no classical fundamental crystal for node %d in %s" %
        (i, cartan.type_name))


def fundamentals(cartan):
    return {i: classical_fundamental(cartan, i)
            for i in cartan.classical_index_set}
