"""Abstract crystal graphs: exploration, the signature rule for tensor
products, Demazure-edge filtrations, components, isomorphism checking,
finite-type Demazure subsets, and the Kashiwara Weyl-group action.

A crystal graph is an edge-colored weighted digraph; an f_i-edge b -> b'
means f_i(b) = b'.  Colors are 0..n with 0 the affine node.  Weights are
classical (fundamental-weight coordinates); the 0-edge weight rule uses
cl(alpha_0) = -theta.
"""

import json

from .cartan import vec_add, vec_sub
from .errors import (AmbiguousAnchorError, NonReducedWordError,
                     ResourceLimitError)
from .weyl import build_weyl_group

DEFAULT_NODE_CAP = 10 ** 6

DOT_EDGE_COLORS = {0: "black", 1: "blue", 2: "red"}


class CrystalGraph:
    """A fully explored crystal: nodes, f-edges by color, cached weights."""

    def __init__(self, cartan, colors, nodes, f_edges, weights, reprs,
                 affine_complete=False):
        self.cartan = cartan
        self.colors = tuple(colors)
        self.nodes = list(nodes)
        self.index = {b: i for i, b in enumerate(self.nodes)}
        assert len(self.index) == len(self.nodes), "duplicate payloads"
        self.f_edges = dict(f_edges)
        self.e_edges = {}
        for (src, c), dst in self.f_edges.items():
            key = (dst, c)
            assert key not in self.e_edges, "two f_%d-edges into one node" % c
            self.e_edges[key] = src
        self.weights = list(weights)
        self.reprs = list(reprs)
        self.affine_complete = affine_complete
        self._stats = {}

    # -- basic queries -------------------------------------------------------

    def __len__(self):
        return len(self.nodes)

    @property
    def edge_count(self):
        return len(self.f_edges)

    def f(self, node_id, color):
        return self.f_edges.get((node_id, color))

    def e(self, node_id, color):
        return self.e_edges.get((node_id, color))

    def weight(self, node_id):
        return self.weights[node_id]

    def edges_sorted(self):
        return sorted((src, c, dst) for (src, c), dst in self.f_edges.items())

    def edges_of_color(self, color):
        return [(src, dst) for (src, c), dst in self.f_edges.items()
                if c == color]

    # -- string statistics -----------------------------------------------------

    def _string_stats(self, color):
        stats = self._stats.get(color)
        if stats is None:
            n = len(self.nodes)
            eps = [0] * n
            phi = [0] * n
            for top in range(n):
                if (top, color) in self.e_edges:
                    continue
                chain = [top]
                cur = top
                while True:
                    nxt = self.f_edges.get((cur, color))
                    if nxt is None:
                        break
                    chain.append(nxt)
                    cur = nxt
                last = len(chain) - 1
                for depth, node in enumerate(chain):
                    eps[node] = depth
                    phi[node] = last - depth
            stats = (eps, phi)
            self._stats[color] = stats
        return stats

    def eps(self, node_id, color):
        return self._string_stats(color)[0][node_id]

    def phi(self, node_id, color):
        return self._string_stats(color)[1][node_id]

    def f_max(self, node_id, color):
        cur = node_id
        while True:
            nxt = self.f_edges.get((cur, color))
            if nxt is None:
                return cur
            cur = nxt

    def e_max(self, node_id, color):
        cur = node_id
        while True:
            nxt = self.e_edges.get((cur, color))
            if nxt is None:
                return cur
            cur = nxt

    # -- structural checks -------------------------------------------------------

    def seminormal(self):
        """Return a list of axiom violations (empty iff the graph is fine).

        Checks the edge/weight rule for every color (with cl(alpha_0) =
        -theta), and phi_i = eps_i + <alpha_i^vee, wt> for the classical
        colors; the i = 0 pairing is checked only on affine-complete
        graphs, since head/tail filtration deliberately breaks it.
        """
        bad = []
        ct = self.cartan
        for (src, c), dst in sorted(self.f_edges.items()):
            if c == 0:
                expect = vec_add(self.weights[src], ct.theta_weight)
            else:
                expect = vec_sub(self.weights[src], ct.simple_root_weight(c))
            if self.weights[dst] != expect:
                bad.append("weight rule fails on %d -%d-> %d" % (src, c, dst))
        for c in self.colors:
            if c == 0 and not self.affine_complete:
                continue
            eps, phi = self._string_stats(c)
            for i in range(len(self.nodes)):
                if c == 0:
                    pair = -ct.pairing(ct.theta, self.weights[i])
                else:
                    pair = self.weights[i][c - 1]
                if phi[i] - eps[i] != pair:
                    bad.append("axiom (1) fails at node %d color %d" % (i, c))
        return bad

    # -- anchors ---------------------------------------------------------------

    def extremal(self, mode):
        """The unique weight-extremal node id ('max' or 'min'), or an error."""
        leq = self.cartan.dominance_leq
        candidates = []
        for i, wi in enumerate(self.weights):
            if mode == "max":
                ok = all(leq(wj, wi) for wj in self.weights)
            else:
                ok = all(leq(wi, wj) for wj in self.weights)
            if ok:
                candidates.append(i)
            if len(candidates) > 1:
                break
        if len(candidates) != 1:
            raise AmbiguousAnchorError(
                "no unique %s-weight element (%d candidates)"
                % (mode, len(candidates)))
        return candidates[0]

    def anchors(self):
        out = {}
        for mode in ("max", "min"):
            try:
                out[mode] = self.extremal(mode)
            except AmbiguousAnchorError:
                pass
        return out

    # -- derived graphs -----------------------------------------------------------

    def subgraph(self, node_ids):
        ids = sorted(node_ids)
        idset = set(ids)
        remap = {old: new for new, old in enumerate(ids)}
        f_edges = {}
        for (src, c), dst in self.f_edges.items():
            if src in idset and dst in idset:
                f_edges[(remap[src], c)] = remap[dst]
        return CrystalGraph(
            self.cartan, self.colors,
            [self.nodes[i] for i in ids], f_edges,
            [self.weights[i] for i in ids], [self.reprs[i] for i in ids],
            affine_complete=False)

    def component_ids(self, start):
        adj = {}
        for (src, _), dst in self.f_edges.items():
            adj.setdefault(src, []).append(dst)
            adj.setdefault(dst, []).append(src)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def component_of(self, node_id):
        return self.subgraph(self.component_ids(node_id))

    def is_connected(self):
        return len(self.component_ids(0)) == len(self.nodes) if self.nodes else True

    def node_of_weight(self, weight):
        """The unique node of the given weight (asserts uniqueness)."""
        hits = [i for i, w in enumerate(self.weights) if w == tuple(weight)]
        if len(hits) != 1:
            raise AmbiguousAnchorError(
                "%d nodes of weight %r" % (len(hits), tuple(weight)))
        return hits[0]

    # -- serialization ---------------------------------------------------------------

    def to_json(self):
        data = {
            "nodes": [{"id": i, "repr": self.reprs[i], "wt": list(self.weights[i])}
                      for i in range(len(self.nodes))],
            "edges": [{"src": s, "dst": d, "color": c}
                      for (s, c, d) in self.edges_sorted()],
            "anchors": self.anchors(),
        }
        return json.dumps(data, separators=(",", ":"), ensure_ascii=False) + "\n"

    def to_dot(self):
        lines = ["digraph crystal {"]
        for i in range(len(self.nodes)):
            label = self.reprs[i].replace('"', r'\"')
            lines.append('  n%d [label="%s"];' % (i, label))
        for (src, c, dst) in self.edges_sorted():
            color = DOT_EDGE_COLORS.get(c)
            attr = ', color=%s' % color if color else ""
            lines.append('  n%d -> n%d [label="%d"%s];' % (src, dst, c, attr))
        lines.append("}")
        return "\n".join(lines) + "\n"


def graphs_equal(g1, g2):
    """Node-for-node equality: same payloads, weights, and colored edges."""
    if set(g1.nodes) != set(g2.nodes):
        return False
    for b in g1.nodes:
        if g1.weights[g1.index[b]] != g2.weights[g2.index[b]]:
            return False
    e1 = {(g1.nodes[s], c, g1.nodes[d]) for (s, c, d) in g1.edges_sorted()}
    e2 = {(g2.nodes[s], c, g2.nodes[d]) for (s, c, d) in g2.edges_sorted()}
    return e1 == e2


# ---------------------------------------------------------------------------
# exploration


class AbstractCrystal:
    """Protocol for implicit crystals handed to explore(): subclasses
    provide colors, f, e, weight, and optionally repr_of."""

    def repr_of(self, b):
        return str(b)


def explore(cartan, source, seeds, node_cap=DEFAULT_NODE_CAP,
            affine_complete=False, colors=None):
    """Close the seeds under all e_i and f_i of the generator set (default:
    every color of the source); deterministic BFS numbering (seed order
    first, then discovery order with colors ascending)."""
    if not seeds:
        raise ValueError("explore needs at least one seed")
    colors = tuple(source.colors if colors is None else colors)
    nodes = []
    index = {}
    for b in seeds:
        if b not in index:
            index[b] = len(nodes)
            nodes.append(b)
    f_edges = {}
    queue = list(range(len(nodes)))
    qpos = 0
    while qpos < len(queue):
        cur = queue[qpos]
        qpos += 1
        b = nodes[cur]
        for c in colors:
            for is_f in (True, False):
                img = source.f(b, c) if is_f else source.e(b, c)
                if img is None:
                    continue
                j = index.get(img)
                if j is None:
                    if len(nodes) >= node_cap:
                        raise ResourceLimitError(
                            "exploration exceeded node cap %d" % node_cap)
                    j = len(nodes)
                    index[img] = j
                    nodes.append(img)
                    queue.append(j)
                key = (cur, c) if is_f else (j, c)
                val = j if is_f else cur
                old = f_edges.get(key)
                assert old is None or old == val, "source violates f/e inverse"
                f_edges[key] = val
    weights = [source.weight(b) for b in nodes]
    reprs = [source.repr_of(b) for b in nodes]
    return CrystalGraph(cartan, colors, nodes, f_edges, weights, reprs,
                        affine_complete=affine_complete)


# ---------------------------------------------------------------------------
# tensor products via the signature rule


class TensorProduct(AbstractCrystal):
    """Tensor product of explored crystals, leftmost factor first.

    Elements are tuples (b_L, ..., b_1); the signature rule decides which
    factor an operator acts on.
    """

    def __init__(self, factors):
        assert factors
        self.factors = list(factors)
        self.colors = self.factors[0].colors
        for g in self.factors:
            assert g.colors == self.colors, "factors with different color sets"

    def all_elements(self):
        import itertools
        pools = [g.nodes for g in self.factors]
        return [tuple(t) for t in itertools.product(*pools)]

    def weight(self, b):
        total = self.factors[0].weight(self.factors[0].index[b[0]])
        for g, part in zip(self.factors[1:], b[1:]):
            total = vec_add(total, g.weight(g.index[part]))
        return total

    def repr_of(self, b):
        return " (x) ".join(g.reprs[g.index[part]]
                            for g, part in zip(self.factors, b))

    def _signature(self, b, color):
        """(surviving minus positions, surviving plus positions), each a
        list of factor indices, after cancelling +- pairs."""
        minus = []
        plus = []
        for k, (g, part) in enumerate(zip(self.factors, b)):
            node = g.index[part]
            for _ in range(g.phi(node, color)):
                # a '-' cancels the most recent surviving '+'
                if plus:
                    plus.pop()
                else:
                    minus.append(k)
            for _ in range(g.eps(node, color)):
                plus.append(k)
        return minus, plus

    def eps(self, b, color):
        return len(self._signature(b, color)[1])

    def phi(self, b, color):
        return len(self._signature(b, color)[0])

    def f(self, b, color):
        minus, _ = self._signature(b, color)
        if not minus:
            return None
        k = minus[-1]
        g = self.factors[k]
        img = g.f(g.index[b[k]], color)
        assert img is not None
        return b[:k] + (g.nodes[img],) + b[k + 1:]

    def e(self, b, color):
        _, plus = self._signature(b, color)
        if not plus:
            return None
        k = plus[0]
        g = self.factors[k]
        img = g.e(g.index[b[k]], color)
        assert img is not None
        return b[:k] + (g.nodes[img],) + b[k + 1:]


def tensor_f(tensor, b, color):
    """Apply f_i to a tensor tuple by the signature rule (None if killed)."""
    return tensor.f(b, color)


def tensor_e(tensor, b, color):
    return tensor.e(b, color)


def two_factor_f(g2, g1, b, color):
    """Closed-form f_i on b = (b2, b1): acts left iff eps(b2) >= phi(b1)."""
    b2, b1 = b
    i2, i1 = g2.index[b2], g1.index[b1]
    if g2.eps(i2, color) >= g1.phi(i1, color):
        img = g2.f(i2, color)
        return None if img is None else (g2.nodes[img], b1)
    img = g1.f(i1, color)
    return None if img is None else (b2, g1.nodes[img])


def two_factor_e(g2, g1, b, color):
    """Closed-form e_i on b = (b2, b1): acts left iff eps(b2) > phi(b1)."""
    b2, b1 = b
    i2, i1 = g2.index[b2], g1.index[b1]
    if g2.eps(i2, color) > g1.phi(i1, color):
        img = g2.e(i2, color)
        return None if img is None else (g2.nodes[img], b1)
    img = g1.e(i1, color)
    return None if img is None else (b2, g1.nodes[img])


def explore_tensor(cartan, factors, node_cap=DEFAULT_NODE_CAP,
                   affine_complete=None):
    """Explore the full tensor product of explored factor crystals."""
    tensor = TensorProduct(factors)
    if affine_complete is None:
        affine_complete = all(g.affine_complete for g in factors)
    graph = explore(cartan, tensor, tensor.all_elements(), node_cap,
                    affine_complete=affine_complete)
    expected = 1
    for g in factors:
        expected *= len(g)
    assert len(graph) == expected
    return graph


# ---------------------------------------------------------------------------
# Demazure-edge filtrations


def demazure_filter(graph, level, mode):
    """Drop the 0-edges in the length-l head (mode='head', giving the
    level-l Demazure subcrystal) or keep only those at depth >= l from the
    bottom of their 0-string (mode='tail', the dual version).  Nodes are
    never removed; statistics come from the unfiltered graph."""
    if mode not in ("head", "tail"):
        raise ValueError("mode must be 'head' or 'tail'")
    if level < 1:
        raise ValueError("level must be >= 1")
    eps0, phi0 = graph._string_stats(0)
    f_edges = {}
    for (src, c), dst in graph.f_edges.items():
        if c == 0:
            if mode == "head" and eps0[dst] <= level:
                continue
            if mode == "tail" and phi0[dst] < level:
                continue
        f_edges[(src, c)] = dst
    return CrystalGraph(graph.cartan, graph.colors, list(graph.nodes),
                        f_edges, list(graph.weights), list(graph.reprs),
                        affine_complete=False)


def components(graph):
    """Weakly connected components, sorted by (size, weight multiset)."""
    n = len(graph.nodes)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        ids = graph.component_ids(start)
        for i in ids:
            seen[i] = True
        comps.append(sorted(ids))
    def key(ids):
        return (len(ids), sorted(graph.weights[i] for i in ids), ids[0])
    comps.sort(key=key)
    return [graph.subgraph(ids) for ids in comps]


# ---------------------------------------------------------------------------
# isomorphism checking


def verify_isomorphism(g1, g2, mapping):
    """Second-pass audit: mapping is a bijection commuting with every f_i
    and e_i and preserving weights."""
    if len(mapping) != len(g1) or len(set(mapping.values())) != len(g2):
        return False
    for x, y in mapping.items():
        if g1.weights[x] != g2.weights[y]:
            return False
        for c in g1.colors:
            fx, fy = g1.f(x, c), g2.f(y, c)
            if (fx is None) != (fy is None):
                return False
            if fx is not None and mapping[fx] != fy:
                return False
            ex, ey = g1.e(x, c), g2.e(y, c)
            if (ex is None) != (ey is None):
                return False
            if ex is not None and mapping[ex] != ey:
                return False
    return True


def iso_check(g1, g2, anchor_mode="min"):
    """Forced-map isomorphism between connected crystals.

    The unique extremal-weight anchors are matched and the map is grown
    edge-by-edge (at most one i-edge leaves a node, so it is forced).
    Returns the id-level bijection, or None if the graphs differ.
    Ambiguous anchors raise AmbiguousAnchorError.
    """
    a1 = g1.extremal(anchor_mode)
    a2 = g2.extremal(anchor_mode)
    if len(g1) != len(g2) or g1.colors != g2.colors:
        return None
    mapping = {a1: a2}
    reverse = {a2: a1}
    queue = [(a1, a2)]
    while queue:
        x, y = queue.pop()
        for c in g1.colors:
            for step1, step2 in ((g1.f, g2.f), (g1.e, g2.e)):
                x1 = step1(x, c)
                y1 = step2(y, c)
                if (x1 is None) != (y1 is None):
                    return None
                if x1 is None:
                    continue
                if x1 in mapping:
                    if mapping[x1] != y1:
                        return None
                elif y1 in reverse:
                    return None
                else:
                    mapping[x1] = y1
                    reverse[y1] = x1
                    queue.append((x1, y1))
    if not verify_isomorphism(g1, g2, mapping):
        return None
    return mapping


def match_components(comps1, comps2, anchor_mode):
    """Pair up two lists of components by forced-map isomorphism.

    Candidates are grouped by (size, anchor weight, weight multiset),
    which almost always separates components at desk scale; inside each
    group a full bipartite matching over the isomorphism relation removes
    any false negatives a greedy pairing could produce.  Returns the list
    of index pairs, or None when no perfect matching exists.
    """
    if len(comps1) != len(comps2):
        return None

    def key(g):
        try:
            anchor = tuple(g.weight(g.extremal(anchor_mode)))
        except AmbiguousAnchorError:
            anchor = None
        return (len(g), anchor, tuple(sorted(g.weights)))

    groups1 = {}
    for idx, g in enumerate(comps1):
        groups1.setdefault(key(g), []).append(idx)
    groups2 = {}
    for idx, g in enumerate(comps2):
        groups2.setdefault(key(g), []).append(idx)
    if set(groups1) != set(groups2):
        return None

    pairs = []
    for k in sorted(groups1, key=repr):
        left, right = groups1[k], groups2[k]
        if len(left) != len(right):
            return None
        compat = {i: [j for j in right
                      if iso_check(comps1[i], comps2[j], anchor_mode)
                      is not None]
                  for i in left}
        assignment = {}

        def augment(i, seen):
            for j in compat[i]:
                if j in seen:
                    continue
                seen.add(j)
                if j not in assignment or augment(assignment[j], seen):
                    assignment[j] = i
                    return True
            return False

        for i in left:
            if not augment(i, set()):
                return None
        pairs.extend(sorted((i, j) for j, i in assignment.items()))
    pairs.sort()
    return pairs


# ---------------------------------------------------------------------------
# Demazure subsets of finite-type highest weight crystals


def highest_weight_node(graph):
    """The unique node annihilated by every e_i of the graph's colors."""
    hits = [i for i in range(len(graph))
            if all(graph.e(i, c) is None for c in graph.colors)]
    if len(hits) != 1:
        raise AmbiguousAnchorError("%d highest weight nodes" % len(hits))
    return hits[0]


def demazure_subset(graph, word):
    """Node ids b with e_{i_1}^max ... e_{i_k}^max b = u_lambda, for a
    reduced word (i_1, ..., i_k)."""
    group = build_weyl_group(graph.cartan)
    if group.from_word(word).length != len(word):
        raise NonReducedWordError("word %r is not reduced" % (word,))
    top = highest_weight_node(graph)
    out = []
    for b in range(len(graph)):
        cur = b
        for i in reversed(word):
            cur = graph.e_max(cur, i)
        if cur == top:
            out.append(b)
    return out


# ---------------------------------------------------------------------------
# miscellaneous crystal operations


def weyl_action(graph, node_id, color):
    """Kashiwara's s_i: reflect the node within its i-string."""
    k = graph.phi(node_id, color) - graph.eps(node_id, color)
    cur = node_id
    if k > 0:
        for _ in range(k):
            cur = graph.f(cur, color)
    else:
        for _ in range(-k):
            cur = graph.e(cur, color)
    return cur


def similarity_check(sigma, m, small, big):
    """Do the five similarity-map conditions hold for sigma: small -> big?

    e_i maps to e_i^m, f_i to f_i^m, and eps, phi, wt all scale by m.
    """
    def power(graph, op, node, color, count):
        cur = node
        for _ in range(count):
            if cur is None:
                return None
            cur = op(cur, color)
        return cur

    for b in small.nodes:
        ib = small.index[b]
        img = sigma(b)
        if img not in big.index:
            return False
        jb = big.index[img]
        if tuple(big.weights[jb]) != tuple(x * m for x in small.weights[ib]):
            return False
        for c in small.colors:
            if big.eps(jb, c) != m * small.eps(ib, c):
                return False
            if big.phi(jb, c) != m * small.phi(ib, c):
                return False
            fb = small.f(ib, c)
            fimg = power(big, big.f, jb, c, m)
            if (fb is None) != (fimg is None):
                return False
            if fb is not None and big.index[sigma(small.nodes[fb])] != fimg:
                return False
            eb = small.e(ib, c)
            eimg = power(big, big.e, jb, c, m)
            if (eb is None) != (eimg is None):
                return False
            if eb is not None and big.index[sigma(small.nodes[eb])] != eimg:
                return False
    return True


def hw_census(graph, index_set):
    """Sorted multiset of weights of nodes killed by e_i for all i given."""
    out = []
    for i in range(len(graph)):
        if all(graph.e(i, c) is None for c in index_set):
            out.append(tuple(graph.weights[i]))
    return sorted(out)


def weight_multiset(graph):
    """The classical character as a Counter of weight tuples."""
    from collections import Counter
    return Counter(tuple(w) for w in graph.weights)


def hw_crystal(cartan, lam, fundamentals, node_cap=DEFAULT_NODE_CAP):
    """The finite-type highest weight crystal B(lambda), realized as the
    component of the top element in a tensor of fundamental crystals.

    fundamentals maps each needed classical node i to an explored crystal
    whose colors are the classical index set.
    """
    factor_graphs = []
    for i in cartan.classical_index_set:
        factor_graphs.extend([fundamentals[i]] * lam[i - 1])
    if not factor_graphs:
        triv = trivial_crystal(cartan, cartan.classical_index_set)
        return triv
    tensor = TensorProduct(factor_graphs)
    top = tuple(g.nodes[highest_weight_node(g)] for g in factor_graphs)
    graph = explore(cartan, tensor, [top], node_cap)
    hw = highest_weight_node(graph)
    assert tuple(graph.weights[hw]) == tuple(lam)
    return graph


def trivial_crystal(cartan, colors):
    """The one-node crystal of weight 0."""
    return CrystalGraph(cartan, colors, [()], {}, [(0,) * cartan.rank],
                        ["[]"], affine_complete=False)


def classical_restriction(graph):
    """The same nodes with all 0-edges dropped and colors I_0 only."""
    f_edges = {(src, c): dst for (src, c), dst in graph.f_edges.items()
               if c != 0}
    return CrystalGraph(graph.cartan, graph.cartan.classical_index_set,
                        list(graph.nodes), f_edges, list(graph.weights),
                        list(graph.reprs), affine_complete=False)


def ground_state(factors):
    """Diagnostic: the candidate ground-state tensor element, found by
    matching eps of each factor element to phi of its right neighbor;
    None when it does not exist or is not unique."""
    if not factors:
        return None
    colors = factors[0].colors
    right = factors[-1]
    try:
        cur = right.extremal("max")
    except AmbiguousAnchorError:
        return None
    chosen = [right.nodes[cur]]
    target = [right.phi(cur, c) for c in colors]
    for g in reversed(factors[:-1]):
        hits = [i for i in range(len(g))
                if [g.eps(i, c) for c in colors] == target]
        if len(hits) != 1:
            return None
        chosen.append(g.nodes[hits[0]])
        target = [g.phi(hits[0], c) for c in colors]
    chosen.reverse()
    return tuple(chosen)
