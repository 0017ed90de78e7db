"""Finite Weyl groups, Bruhat order, the quantum Bruhat graph, and the
level-l affine dominantization used by the Demazure decomposition checks."""

from functools import lru_cache

from .cartan import identity_matrix, mat_mul, mat_vec, vec_add, vec_scale, vec_sub
from .errors import ResourceLimitError

DEFAULT_WEYL_CAP = 10 ** 5


class WeylElement:
    """A finite Weyl group element, canonicalized by its action on the
    fundamental-weight basis.  Also carries the simple-root-basis matrix,
    so roots and weights are both moved with integer arithmetic only."""

    __slots__ = ("wt_mat", "root_mat", "length", "_hash", "group_key")

    def __init__(self, wt_mat, root_mat, length, group_key):
        self.wt_mat = wt_mat
        self.root_mat = root_mat
        self.length = length
        self.group_key = group_key
        self._hash = hash((group_key, wt_mat))

    def apply_weight(self, weight):
        return mat_vec(self.wt_mat, weight)

    def apply_root(self, root):
        return mat_vec(self.root_mat, root)

    def __eq__(self, other):
        return (isinstance(other, WeylElement)
                and self.group_key == other.group_key
                and self.wt_mat == other.wt_mat)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "W[len=%d]" % self.length


class WeylGroup:
    """The full finite Weyl group of a CartanData, enumerated once.

    Elements are indexed 0..|W|-1, sorted by (length, weight matrix), so
    the identity is element 0 and w0 is the last element.
    """

    def __init__(self, cartan, cap=DEFAULT_WEYL_CAP):
        self.cartan = cartan
        n = cartan.rank
        key = (cartan.family, cartan.rank)
        pos = cartan.positive_roots_list

        def make(wt_mat, root_mat):
            length = 0
            for beta in pos:
                img = mat_vec(root_mat, beta)
                if all(x <= 0 for x in img):
                    length += 1
            return WeylElement(wt_mat, root_mat, length, key)

        ident = make(identity_matrix(n), identity_matrix(n))
        simples = {}
        for i in range(1, n + 1):
            alpha = tuple(1 if j == i - 1 else 0 for j in range(n))
            simples[i] = make(cartan.reflection_weight_matrix(alpha),
                              cartan.reflection_root_matrix(alpha))

        seen = {ident.wt_mat: ident}
        frontier = [ident]
        while frontier:
            new = []
            for w in frontier:
                for i in range(1, n + 1):
                    s = simples[i]
                    wt = mat_mul(w.wt_mat, s.wt_mat)
                    if wt not in seen:
                        if len(seen) >= cap:
                            raise ResourceLimitError(
                                "Weyl group larger than cap %d" % cap)
                        elem = make(wt, mat_mul(w.root_mat, s.root_mat))
                        seen[wt] = elem
                        new.append(elem)
            frontier = new

        elements = sorted(seen.values(), key=lambda w: (w.length, w.wt_mat))
        self.elements = elements
        self.index = {w.wt_mat: i for i, w in enumerate(elements)}
        self.identity = elements[0]
        self.simple = simples
        maxlen = elements[-1].length
        longest = [w for w in elements if w.length == maxlen]
        assert len(longest) == 1, "longest element not unique"
        self.w0 = longest[0]
        self._bruhat_cache = {}

    def __len__(self):
        return len(self.elements)

    def id_of(self, w):
        return self.index[w.wt_mat]

    def mul(self, v, w):
        wt = mat_mul(v.wt_mat, w.wt_mat)
        return self.elements[self.index[wt]]

    def reflect(self, root):
        """s_beta as a group element, for any root beta."""
        wt = self.cartan.reflection_weight_matrix(root)
        return self.elements[self.index[wt]]

    def descent(self, w):
        """Smallest i with w(alpha_i) < 0, or None for the identity."""
        for i in range(1, self.cartan.rank + 1):
            img = tuple(row[i - 1] for row in w.root_mat)
            if all(x <= 0 for x in img):
                return i
        return None

    def reduced_word(self, w):
        """One reduced word of w, recovered by greedy descent."""
        word = []
        cur = w
        while cur.length > 0:
            i = self.descent(cur)
            word.append(i)
            cur = self.mul(cur, self.simple[i])
        word.reverse()
        assert len(word) == w.length
        return tuple(word)

    def from_word(self, word):
        w = self.identity
        for i in word:
            w = self.mul(w, self.simple[i])
        return w

    def all_reduced_words(self, w):
        """Every reduced word of w (exhaustive; fine at desk scale)."""
        if w.length == 0:
            return [()]
        out = []
        for i in range(1, self.cartan.rank + 1):
            ws = self.mul(w, self.simple[i])
            if ws.length == w.length - 1:
                out.extend(word + (i,) for word in self.all_reduced_words(ws))
        return out

    def bruhat_leq(self, v, w):
        """Strong Bruhat order via the lifting property."""
        key = (v.wt_mat, w.wt_mat)
        cached = self._bruhat_cache.get(key)
        if cached is not None:
            return cached
        if v.length > w.length:
            res = False
        elif w.length == 0:
            res = v.length == 0
        else:
            i = None
            for j in range(1, self.cartan.rank + 1):
                if self.mul(self.simple[j], w).length < w.length:
                    i = j
                    break
            sw = self.mul(self.simple[i], w)
            sv = self.mul(self.simple[i], v)
            if sv.length < v.length:
                res = self.bruhat_leq(sv, sw)
            else:
                res = self.bruhat_leq(v, sw)
        self._bruhat_cache[key] = res
        return res


@lru_cache(maxsize=None)
def build_weyl_group(cartan, cap=DEFAULT_WEYL_CAP):
    return WeylGroup(cartan, cap)


def reflect(cartan, root):
    """The reflection s_beta in the finite Weyl group."""
    return build_weyl_group(cartan).reflect(root)


def bruhat_leq(cartan, v, w):
    return build_weyl_group(cartan).bruhat_leq(v, w)


class QuantumBruhatGraph:
    """Directed graph on W_0 with up (Bruhat cover) and down (quantum) edges,
    each labeled by the positive root of its reflection."""

    def __init__(self, cartan, cap=DEFAULT_WEYL_CAP):
        self.cartan = cartan
        self.group = build_weyl_group(cartan, cap)
        pos = cartan.positive_roots_list
        self._rho_pairings = [cartan.pairing(beta, cartan.rho) for beta in pos]

        edges = {}        # (src_id, root_idx) -> (dst_id, is_down)
        out = [[] for _ in self.group.elements]
        for src_id, w in enumerate(self.group.elements):
            for root_idx, beta in enumerate(pos):
                ws = self.group.mul(w, self.group.reflect(beta))
                delta = ws.length - w.length
                if delta == 1:
                    down = False
                elif delta == 1 - 2 * self._rho_pairings[root_idx]:
                    down = True
                else:
                    continue
                dst_id = self.group.id_of(ws)
                edges[(src_id, root_idx)] = (dst_id, down)
                out[src_id].append((root_idx, dst_id, down))
        for lst in out:
            lst.sort(key=lambda t: pos[t[0]])
        self.edges = edges
        self.out = out

    @property
    def vertex_count(self):
        return len(self.group)

    @property
    def edge_count(self):
        return len(self.edges)

    def has_edge(self, src_id, root_idx):
        return self.edges.get((src_id, root_idx))

    def is_strongly_connected(self):
        n = len(self.group)

        def sweep(adj):
            seen = {0}
            stack = [0]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            return len(seen) == n

        fwd = [[dst for (_, dst, _) in lst] for lst in self.out]
        back = [[] for _ in range(n)]
        for src, lst in enumerate(self.out):
            for (_, dst, _) in lst:
                back[dst].append(src)
        return sweep(fwd) and sweep(back)

    def to_dot(self):
        pos = self.cartan.positive_roots_list
        lines = ["digraph qbg {"]
        for i, w in enumerate(self.group.elements):
            word = self.group.reduced_word(w)
            label = "e" if not word else "".join("s%d" % j for j in word)
            lines.append('  n%d [label="%s"];' % (i, label))
        for src_id, lst in enumerate(self.out):
            for root_idx, dst_id, down in lst:
                beta = ",".join(str(x) for x in pos[root_idx])
                style = ', style=dashed' if down else ""
                lines.append('  n%d -> n%d [label="%s"%s];'
                             % (src_id, dst_id, beta, style))
        lines.append("}")
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def build_qbg(cartan, cap=DEFAULT_WEYL_CAP):
    """The quantum Bruhat graph, built once per Cartan type and memoized."""
    return QuantumBruhatGraph(cartan, cap)


def dominantize(cartan, mu, level):
    """Run the level-l affine action until the weight is dominant.

    Simple reflections for i in I_0 act classically; s_0 sends mu to
    s_theta(mu) + l*theta.  Returns (Lambda, word) where Lambda is the
    dominant pair (classical part, level) and word = (i_1, ..., i_k)
    gives the minimal-length w = s_{i_1} ... s_{i_k} with w . Lambda = mu.
    """
    if level < 1:
        raise ValueError("level must be >= 1")
    cur = tuple(mu)
    word = []
    guard = 0
    while True:
        neg = None
        for i in range(0, cartan.rank + 1):
            if i == 0:
                p = level - cartan.pairing(cartan.theta, cur)
            else:
                p = cur[i - 1]
            if p < 0:
                neg = i
                break
        if neg is None:
            return (cur, level), tuple(word)
        cur = affine_simple_reflection(cartan, neg, cur, level)
        word.append(neg)
        guard += 1
        if guard > 10 ** 6:
            raise ResourceLimitError("dominantize failed to terminate")


def affine_simple_reflection(cartan, i, mu, level):
    """The level-l action of s_i on a classical weight."""
    if i == 0:
        p = cartan.pairing(cartan.theta, mu)
        s_theta = vec_sub(mu, vec_scale(p, cartan.theta_weight))
        return vec_add(s_theta, vec_scale(level, cartan.theta_weight))
    return vec_sub(mu, vec_scale(mu[i - 1], cartan.simple_root_weight(i)))
