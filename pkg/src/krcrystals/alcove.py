"""The quantum alcove model: lambda-chains, foldings, admissible subsets,
and the level-l crystal operators.

Heights are exact integers; the piecewise-linear height profile is kept
in doubled integer arithmetic and cross-checked against the folded
hyperplane levels at every evaluation, so the two routes to the heights
(affine reflections vs slope accumulation) must always agree.
"""

from dataclasses import dataclass
from fractions import Fraction

from .cartan import (identity_matrix, mat_mul, mat_vec, vec_add, vec_neg,
                     vec_scale, vec_sub)
from .crystals import AbstractCrystal, explore, DEFAULT_NODE_CAP
from .errors import NonDominantWeightError
from .weyl import build_qbg, build_weyl_group


class LambdaChain:
    """A lambda-chain: the sequence of positive roots crossed by a reduced
    alcove path from the fundamental alcove to its translate by -lambda.

    The chain is the lexicographic one: crossings (beta, k) sorted by
    (k/p, beta^vee_1/p, ..., beta^vee_n/p) with p = <lambda, beta^vee>,
    in simple-coroot coordinates.  order='revlex' reverses the coordinate
    significance, giving a second valid chain for independence tests.
    """

    def __init__(self, cartan, lam, order="lex"):
        lam = tuple(lam)
        if not cartan.is_dominant(lam):
            raise NonDominantWeightError("lambda must be dominant: %r" % (lam,))
        if order not in ("lex", "revlex"):
            raise ValueError("order must be 'lex' or 'revlex'")
        self.cartan = cartan
        self.lam = lam
        self.order = order
        items = []
        for beta in cartan.positive_roots_list:
            p = cartan.pairing(beta, lam)
            if p <= 0:
                continue
            cor = cartan.coroot_coords(beta)
            if order == "revlex":
                cor = tuple(reversed(cor))
            for k in range(p):
                key = (Fraction(k, p),) + tuple(Fraction(c, p) for c in cor)
                items.append((key, beta))
        items.sort(key=lambda t: t[0])
        self.roots = tuple(beta for _, beta in items)
        self.m = len(self.roots)
        counts = {}
        l = []
        for beta in self.roots:
            l.append(counts.get(beta, 0))
            counts[beta] = l[-1] + 1
        self.l = tuple(l)
        self.l_tilde = tuple(cartan.pairing(beta, lam) - li
                             for beta, li in zip(self.roots, self.l))
        for beta, total in counts.items():
            assert total == cartan.pairing(beta, lam), "multiplicity invariant"
        self._fold_cache = {}
        self._ggraph_cache = {}


def build_lambda_chain(cartan, lam, order="lex"):
    return LambdaChain(cartan, lam, order)


@dataclass(frozen=True)
class Folding:
    """The folded chain Gamma(J): signed roots, hyperplane levels, the
    image of rho under the folding reflections, and wt(J)."""
    gamma: tuple
    levels: tuple
    gamma_inf: tuple
    weight: tuple
    final_dir: object


def fold(chain, J):
    """Fold the chain at the positions of J (admissibility not required)."""
    J = tuple(sorted(J))
    cached = chain._fold_cache.get(J)
    if cached is not None:
        return cached
    ct = chain.cartan
    n = ct.rank
    jset = set(J)
    w_root = identity_matrix(n)
    w_wt = identity_matrix(n)
    v = (0,) * n
    gamma = []
    levels = []
    for k in range(1, chain.m + 1):
        beta = chain.roots[k - 1]
        g = mat_vec(w_root, beta)
        gamma.append(g)
        sign = ct.root_sign(g)
        base = g if sign > 0 else vec_neg(g)
        pv = ct.pairing(base, v)
        if sign > 0:
            levels.append(chain.l[k - 1] - pv)
        else:
            levels.append(-chain.l[k - 1] - pv)
        if k in jset:
            beta_wt = ct.root_to_weight(beta)
            shift = vec_scale(-chain.l[k - 1], beta_wt)
            v = vec_add(mat_vec(w_wt, shift), v)
            w_wt = mat_mul(w_wt, ct.reflection_weight_matrix(beta))
            w_root = mat_mul(w_root, ct.reflection_root_matrix(beta))
    gamma_inf = mat_vec(w_wt, ct.rho)
    weight = vec_sub(mat_vec(w_wt, chain.lam), v)
    group = build_weyl_group(ct)
    final_dir = group.elements[group.index[w_wt]]
    out = Folding(tuple(gamma), tuple(levels), gamma_inf, weight, final_dir)
    chain._fold_cache[J] = out
    return out


class AdmissibleSubset:
    """A set of folding positions whose induced walk follows QBG edges."""

    def __init__(self, chain, positions):
        self.chain = chain
        self.positions = tuple(sorted(positions))

    @property
    def folding(self):
        return fold(self.chain, self.positions)

    @property
    def weight(self):
        return self.folding.weight

    @property
    def final_direction(self):
        return self.folding.final_dir

    def sign_partition(self):
        """(J+, J-): folding positions with positive/negative gamma."""
        fol = self.folding
        ct = self.chain.cartan
        plus, minus = [], []
        for j in self.positions:
            (plus if ct.root_sign(fol.gamma[j - 1]) > 0 else minus).append(j)
        return tuple(plus), tuple(minus)

    def __repr__(self):
        return "J%r" % (list(self.positions),)


def _chain_root_indices(chain):
    ct = chain.cartan
    idx = getattr(chain, "_root_indices", None)
    if idx is None:
        idx = tuple(ct._root_index[beta] for beta in chain.roots)
        chain._root_indices = idx
    return idx


def is_admissible(chain, J):
    """Does 1 -> r_{j_1} -> ... walk along quantum Bruhat graph edges?"""
    qbg = build_qbg(chain.cartan)
    cur = qbg.group.id_of(qbg.group.identity)
    indices = _chain_root_indices(chain)
    for j in sorted(J):
        edge = qbg.has_edge(cur, indices[j - 1])
        if edge is None:
            return False
        cur = edge[0]
    return True


def enumerate_admissible(chain):
    """All admissible subsets, in DFS order with positions ascending."""
    qbg = build_qbg(chain.cartan)
    indices = _chain_root_indices(chain)
    start = qbg.group.id_of(qbg.group.identity)
    out = []

    def rec(next_pos, w_id, prefix):
        out.append(tuple(prefix))
        for j in range(next_pos, chain.m + 1):
            edge = qbg.has_edge(w_id, indices[j - 1])
            if edge is not None:
                prefix.append(j)
                rec(j + 1, edge[0], prefix)
                prefix.pop()

    rec(1, start, [])
    return out


# ---------------------------------------------------------------------------
# the height profile g_alpha and the operators


@dataclass(frozen=True)
class GGraph:
    """Height data of g_{alpha_p} for a folded chain: the positions I_alpha,
    their integer heights sgn(alpha) l_i^J, the endpoint height, the slope
    sequence of the piecewise-linear profile, and the maximum M."""
    p: int
    base_root: tuple
    sign: int
    positions: tuple      # I_alpha, ascending; infinity is implicit
    heights: tuple        # sgn(alpha) * l_i^J along positions
    h_inf: int            # <wt(J), alpha_p^vee> = height at the right end
    l_inf: int            # <wt(J), sgn(alpha) alpha^vee>
    M: int
    steps: tuple          # slopes of g_{|alpha|} on successive half-steps


def g_graph(chain, J, p):
    """The height profile for color p (p = 0 uses alpha_0 = -theta and the
    graph reflected in the x-axis)."""
    J = tuple(sorted(J))
    key = (J, p)
    cached = chain._ggraph_cache.get(key)
    if cached is not None:
        return cached
    ct = chain.cartan
    fol = fold(chain, J)
    if p == 0:
        base = ct.theta
        sign = -1
    else:
        base = tuple(1 if j == p - 1 else 0 for j in range(ct.rank))
        sign = 1
    positions = tuple(i for i in range(1, chain.m + 1)
                      if fol.gamma[i - 1] == base
                      or fol.gamma[i - 1] == vec_neg(base))
    heights = tuple(sign * fol.levels[i - 1] for i in positions)
    l_inf = ct.pairing(base, fol.weight)
    h_inf = sign * l_inf

    # slope accumulation for g_{|alpha|}, doubled integers; cross-checks
    # the reflection-computed levels against the defining slope rule
    jset = set(J)
    val2 = -1
    steps = []
    for i in positions:
        s1 = ct.root_sign(fol.gamma[i - 1])
        val2 += s1
        assert val2 == 2 * fol.levels[i - 1], \
            "height/slope mismatch at position %d" % i
        s2 = s1 * (-1 if i in jset else 1)
        val2 += s2
        steps.append(s1)
        steps.append(s2)
    end_pair = ct.pairing(base, fol.gamma_inf)
    assert end_pair != 0, "gamma_inf orthogonal to alpha"
    s_end = 1 if end_pair > 0 else -1
    val2 += s_end
    steps.append(s_end)
    assert val2 == 2 * l_inf, "endpoint height mismatch"

    M = max(heights + (h_inf,))
    out = GGraph(p, base, sign, positions, heights, h_inf, l_inf, M,
                 tuple(steps))
    chain._ggraph_cache[key] = out
    return out


def alcove_f(chain, J, p, level=1):
    """The level-l lowering operator f_p on an admissible subset; None when
    the maximum M fails M > l * delta_{p,0}."""
    J = tuple(sorted(J))
    gg = g_graph(chain, J, p)
    threshold = level if p == 0 else 0
    if not gg.M > threshold:
        return None
    assert gg.M >= 0, "negative maximum on an admissible subset"
    jset = set(J)
    m_pos = None  # None encodes infinity
    for i, h in zip(gg.positions, gg.heights):
        if h == gg.M:
            m_pos = i
            break
    if m_pos is None:
        assert gg.h_inf == gg.M
        assert gg.positions, "no predecessor of infinity although M > delta"
        k_pos = gg.positions[-1]
    else:
        assert m_pos in jset, "minimum-position element not a folding position"
        idx = gg.positions.index(m_pos)
        assert idx > 0, "no predecessor although M > delta"
        k_pos = gg.positions[idx - 1]
    assert k_pos not in jset, "predecessor already a folding position"
    new = jset - {m_pos} | {k_pos}
    return tuple(sorted(new))


def alcove_e(chain, J, p, level=1):
    """The level-l raising operator e_p; None unless M > <wt(J), alpha_p^vee>
    and M >= l * delta_{p,0}."""
    J = tuple(sorted(J))
    gg = g_graph(chain, J, p)
    threshold = level if p == 0 else 0
    if not (gg.M > gg.h_inf and gg.M >= threshold):
        return None
    assert gg.M >= 0
    jset = set(J)
    k_pos = None
    for i, h in zip(gg.positions, gg.heights):
        if h == gg.M:
            k_pos = i
    assert k_pos is not None, "M exceeds the endpoint but is never attained"
    assert k_pos in jset, "maximum-position element not a folding position"
    idx = gg.positions.index(k_pos)
    m_pos = gg.positions[idx + 1] if idx + 1 < len(gg.positions) else None
    if m_pos is not None:
        assert m_pos not in jset, "successor already a folding position"
    new = jset - {k_pos}
    if m_pos is not None:
        new |= {m_pos}
    return tuple(sorted(new))


def phi0(chain, J):
    """phi_0(J) = max(M - 1, 0) for the p = 0 height profile."""
    return max(g_graph(chain, tuple(sorted(J)), 0).M - 1, 0)


# ---------------------------------------------------------------------------
# the crystal A_l(Gamma)


class AlcoveCrystal(AbstractCrystal):
    def __init__(self, chain, level):
        self.chain = chain
        self.level = level
        self.colors = tuple(range(0, chain.cartan.rank + 1))

    def weight(self, J):
        return fold(self.chain, J).weight

    def repr_of(self, J):
        return "[" + ",".join(str(j) for j in J) + "]"

    def f(self, J, color):
        return alcove_f(self.chain, J, color, self.level)

    def e(self, J, color):
        return alcove_e(self.chain, J, color, self.level)


def alcove_crystal(cartan, lam, level=1, order="lex",
                   node_cap=DEFAULT_NODE_CAP):
    """The crystal A_l(Gamma) on all admissible subsets of the lexicographic
    lambda-chain, as an explored CrystalGraph."""
    chain = build_lambda_chain(cartan, lam, order)
    subsets = enumerate_admissible(chain)
    source = AlcoveCrystal(chain, level)
    graph = explore(cartan, source, subsets, node_cap)
    assert len(graph) == len(subsets), \
        "crystal operators left the admissible family"
    graph.chain = chain
    return graph
