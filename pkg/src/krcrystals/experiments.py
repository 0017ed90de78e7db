"""Named verifications of the isomorphism, decomposition, and Q-system
statements, each returning a machine-readable Report."""

import time
from collections import Counter
from dataclasses import dataclass, field

from .cartan import build_cartan, c_value, vec_add, vec_scale
from .crystals import (components, demazure_filter, explore_tensor,
                       graphs_equal, hw_census, iso_check, match_components,
                       trivial_crystal, weight_multiset, DEFAULT_NODE_CAP)
from .errors import (AmbiguousAnchorError, LevelBoundError,
                     MaxWeightMismatchError, UnsupportedFactorError)
from .kr import fixture_C2, kr_C_onebox, kr_typeA
from .weyl import build_weyl_group, dominantize


@dataclass
class Report:
    """Outcome of one named check; a failing report always carries a
    concrete counterexample witness."""
    name: str
    parameters: dict
    status: str
    witnesses: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self, include_elapsed=False):
        data = {
            "name": self.name,
            "parameters": self.parameters,
            "status": self.status,
            "witnesses": self.witnesses,
        }
        if include_elapsed:
            data["elapsed_sec"] = self.elapsed
        return data

    def to_json(self, include_elapsed=False):
        import json
        return json.dumps(self.to_dict(include_elapsed),
                          separators=(",", ":"), sort_keys=False) + "\n"


def to_junit(reports):
    """JUnit-style XML for a list of reports (no timing attributes, so the
    output is byte-stable)."""
    from xml.sax.saxutils import escape, quoteattr
    failures = sum(1 for r in reports if not r.passed)
    lines = ['<?xml version="1.0" encoding="UTF-8"?>',
             '<testsuite name="krcrystals" tests="%d" failures="%d">'
             % (len(reports), failures)]
    for r in reports:
        name = quoteattr("%s %r" % (r.name, r.parameters))
        if r.passed:
            lines.append("  <testcase name=%s/>" % name)
        else:
            lines.append("  <testcase name=%s>" % name)
            lines.append("    <failure message=%s/>"
                         % quoteattr(escape(str(r.witnesses))))
            lines.append("  </testcase>")
    lines.append("</testsuite>")
    return "\n".join(lines) + "\n"


def _parallel_map(fn, items, threads=None):
    # order-preserving, so results are deterministic at any thread count
    if not threads or threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# tensor-spec plumbing


def factor_name(r, s):
    return "B^{%d,%d}" % (r, s)


def max_weight(cartan, factors):
    total = (0,) * cartan.rank
    for r, s in factors:
        total = vec_add(total, vec_scale(s, cartan.fundamental_weight(r)))
    return total


def check_level_bound(cartan, factors, level):
    for r, s in factors:
        if s <= 0:
            continue
        c = c_value(cartan, r)
        need = -(-s // c)
        if need > level:
            raise LevelBoundError(
                "factor %s has level ceil(%d/%d) = %d > %d"
                % (factor_name(r, s), s, c, need, level))


def build_factor(cartan, r, s, node_cap=DEFAULT_NODE_CAP):
    """One KR factor as an explored affine crystal graph."""
    if s == 0:
        g = trivial_crystal(cartan, cartan.index_set)
        g.affine_complete = True
        return g
    if r not in cartan.classical_index_set or s < 0:
        raise UnsupportedFactorError("no factor %s in type %s"
                                     % (factor_name(r, s), cartan.type_name))
    if cartan.family == "A":
        return kr_typeA(cartan.rank, r, s, node_cap)
    if cartan.family == "C" and (r, s) == (1, 1):
        return kr_C_onebox(cartan.rank)
    raise UnsupportedFactorError(
        "factor %s is not constructible in type %s"
        % (factor_name(r, s), cartan.type_name))


def build_tensor(cartan, factors, node_cap=DEFAULT_NODE_CAP, threads=None):
    """The unfiltered tensor product of KR factors, leftmost factor first."""
    if not factors:
        g = trivial_crystal(cartan, cartan.index_set)
        g.affine_complete = True
        return g
    graphs = _parallel_map(
        lambda rs: build_factor(cartan, rs[0], rs[1], node_cap),
        list(factors), threads)
    if len(graphs) == 1:
        return graphs[0]
    return explore_tensor(cartan, graphs, node_cap)


def build_filtered(cartan, factors, level, mode,
                   node_cap=DEFAULT_NODE_CAP, threads=None):
    """The filtered tensor; the C_2 B^{1,2} fixture stands in for its own
    level-1 Demazure filtration and cannot be combined or refiltered."""
    factors = list(factors)
    if (cartan.family, cartan.rank) == ("C", 2) and (1, 2) in factors:
        if factors == [(1, 2)] and level == 1 and mode == "head":
            return fixture_C2("B12")
        raise UnsupportedFactorError(
            "C2 B^{1,2} exists only as the level-1 Demazure fixture "
            "(single factor, level 1, head mode)")
    full = build_tensor(cartan, factors, node_cap, threads)
    return demazure_filter(full, level, mode)


# ---------------------------------------------------------------------------
# the checks


def check_reduction(cartan, factors_b, factors_bp, level, mode="head",
                    node_cap=DEFAULT_NODE_CAP, threads=None):
    """After filtering, are the components holding the minimal (head) or
    maximal (tail) elements of B and B' isomorphic?"""
    t0 = time.perf_counter()
    lam = max_weight(cartan, factors_b)
    lam2 = max_weight(cartan, factors_bp)
    if lam != lam2:
        raise MaxWeightMismatchError(
            "maximal weights differ: %r vs %r" % (lam, lam2))
    check_level_bound(cartan, factors_b, level)
    check_level_bound(cartan, factors_bp, level)

    graphs = _parallel_map(
        lambda fs: build_filtered(cartan, fs, level, mode, node_cap),
        [factors_b, factors_bp], threads)
    if mode == "head":
        anchor_wt = build_weyl_group(cartan).w0.apply_weight(lam)
        anchor_mode = "min"
    else:
        anchor_wt = lam
        anchor_mode = "max"

    comps = []
    sizes = []
    for g in graphs:
        node = g.node_of_weight(anchor_wt)
        comp = g.component_of(node)
        comps.append(comp)
        sizes.append([len(c) for c in components(g)])
    mapping = iso_check(comps[0], comps[1], anchor_mode)
    status = "pass" if mapping is not None else "fail"
    witnesses = {
        "component_sizes": [len(comps[0]), len(comps[1])],
        "anchor_weight": list(anchor_wt),
        "all_component_sizes": sizes,
    }
    if mapping is None:
        witnesses["counterexample"] = {
            "weights_b": sorted(map(list, comps[0].weights)),
            "weights_bp": sorted(map(list, comps[1].weights)),
        }
    return Report("reduction",
                  {"type": cartan.type_name, "factors": list(map(list, factors_b)),
                   "factors2": list(map(list, factors_bp)),
                   "level": level, "mode": mode},
                  status, witnesses, time.perf_counter() - t0)


def check_bmin(cartan, factors, level, node_cap=DEFAULT_NODE_CAP,
               threads=None):
    """Every component of the level-l Demazure filtration has a unique
    minimal element with weight gaps in Q_0^+, and dominantizing the
    minima reproduces the affine highest-weight census."""
    t0 = time.perf_counter()
    check_level_bound(cartan, factors, level)
    filtered = build_filtered(cartan, factors, level, "head", node_cap,
                              threads)
    comps = components(filtered)
    minima = []
    lambdas = []
    words = []
    counterexample = None
    for k, comp in enumerate(comps):
        try:
            bmin = comp.extremal("min")
        except AmbiguousAnchorError as err:
            counterexample = {"component": k, "reason": str(err)}
            break
        mu = comp.weight(bmin)
        minima.append(list(mu))
        (dom, _), word = dominantize(cartan, mu, level)
        lambdas.append(tuple(dom))
        words.append(list(word))
    census = hw_census(filtered, filtered.colors)
    status = "pass"
    witnesses = {
        "component_sizes": [len(c) for c in comps],
        "minima": minima,
        "lambda_classical": sorted(map(list, lambdas)),
        "words": words,
        "census": [list(w) for w in census],
    }
    if counterexample is not None:
        status = "fail"
        witnesses["counterexample"] = counterexample
    elif sorted(lambdas) != census:
        status = "fail"
        witnesses["counterexample"] = {
            "reason": "census mismatch",
            "from_dominantize": sorted(map(list, lambdas)),
            "census": [list(w) for w in census],
        }
    return Report("bmin",
                  {"type": cartan.type_name,
                   "factors": list(map(list, factors)), "level": level},
                  status, witnesses, time.perf_counter() - t0)


def _neighbors_typeA(n, a):
    return [b for b in (a - 1, a + 1) if 1 <= b <= n]


def check_qsystem_typeA(n, a, m, level, node_cap=DEFAULT_NODE_CAP,
                        threads=None):
    """Crystal-level Q-system instance: the filtered (B^{a,m-1})^(x)2 has
    the same component multiset as the filtered B^{a,m} (x) B^{a,m-2}
    together with the filtered product over the neighbors of a."""
    t0 = time.perf_counter()
    if not 1 <= a <= n:
        raise UnsupportedFactorError("node a=%d out of range" % a)
    if m < 1:
        raise ValueError("m must be >= 1")
    if level < m:
        raise LevelBoundError("need level >= m = %d, got %d" % (m, level))
    cartan = build_cartan("A", n)

    lhs_factors = [(a, m - 1), (a, m - 1)]
    rhs1_factors = [(a, m), (a, m - 2)]
    rhs2_factors = [(b, m - 1) for b in _neighbors_typeA(n, a)]

    def build(fs):
        if any(s < 0 for _, s in fs):
            return None  # an s = -1 factor kills the whole summand
        return build_filtered(cartan, fs, level, "head", node_cap)

    lhs, rhs1, rhs2 = _parallel_map(
        build, [lhs_factors, rhs1_factors, rhs2_factors], threads)

    lhs_size = len(lhs)
    rhs_sizes = [len(g) for g in (rhs1, rhs2) if g is not None]
    comps_lhs = components(lhs)
    comps_rhs = []
    for g in (rhs1, rhs2):
        if g is not None:
            comps_rhs.extend(components(g))
    comps_rhs.sort(key=lambda c: (len(c), sorted(c.weights)))
    pairs = match_components(comps_lhs, comps_rhs, "min")
    sizes_ok = lhs_size == sum(rhs_sizes)
    status = "pass" if (pairs is not None and sizes_ok) else "fail"
    witnesses = {
        "size_ledger": [lhs_size, rhs_sizes],
        "lhs_component_sizes": [len(c) for c in comps_lhs],
        "rhs_component_sizes": [len(c) for c in comps_rhs],
    }
    if status == "fail":
        witnesses["counterexample"] = {
            "unmatched": "no perfect component matching" if pairs is None
            else "size ledger %d != %r" % (lhs_size, rhs_sizes),
        }
    else:
        witnesses["pairs"] = pairs
    return Report("qsystem",
                  {"type": "A%d~" % n, "a": a, "m": m, "level": level},
                  status, witnesses, time.perf_counter() - t0)


def _char(n, a, m):
    zero = Counter({(0,) * n: 1})
    if a == 0 or a == n + 1 or m == 0:
        return zero
    return weight_multiset(kr_typeA(n, a, m))


def _char_product(c1, c2):
    out = Counter()
    for w1, k1 in c1.items():
        for w2, k2 in c2.items():
            out[vec_add(w1, w2)] += k1 * k2
    return out


def check_character_qsystem(n, a, m):
    """Monomial-exact classical character identity
    (Q_m^a)^2 = Q_{m+1}^a Q_{m-1}^a + Q_m^{a-1} Q_m^{a+1} in type A_n."""
    t0 = time.perf_counter()
    lhs = _char_product(_char(n, a, m), _char(n, a, m))
    rhs = _char_product(_char(n, a, m + 1), _char(n, a, m - 1)) \
        + _char_product(_char(n, a - 1, m), _char(n, a + 1, m))
    status = "pass" if lhs == rhs else "fail"
    witnesses = {"monomials_lhs": sum(lhs.values()),
                 "monomials_rhs": sum(rhs.values())}
    if status == "fail":
        diff = (lhs - rhs) + (rhs - lhs)
        w = sorted(diff)[0]
        witnesses["counterexample"] = {
            "weight": list(w), "lhs": lhs.get(w, 0), "rhs": rhs.get(w, 0)}
    return Report("qchar", {"type": "A%d~" % n, "a": a, "m": m},
                  status, witnesses, time.perf_counter() - t0)


def check_alcove_correspondence(cartan, lam, level=1,
                                node_cap=DEFAULT_NODE_CAP, threads=None):
    """A_l(Gamma) against the dual filtration of the matching single-column
    tensor product, component by component with maximal anchors."""
    t0 = time.perf_counter()
    if cartan.family != "A":
        raise UnsupportedFactorError(
            "alcove correspondence implemented for type A only")
    from .alcove import alcove_crystal
    lam = tuple(lam)
    cols = [i for i in cartan.classical_index_set
            for _ in range(lam[i - 1])]
    alc, dual = _parallel_map(
        lambda which: alcove_crystal(cartan, lam, level, node_cap=node_cap)
        if which == 0
        else build_filtered(cartan, [(p, 1) for p in cols], level, "tail",
                            node_cap),
        [0, 1], threads)
    comps_a = components(alc)
    comps_b = components(dual)
    pairs = match_components(comps_a, comps_b, "max")
    status = "pass" if pairs is not None else "fail"
    witnesses = {
        "alcove_size": len(alc),
        "tensor_size": len(dual),
        "alcove_component_sizes": [len(c) for c in comps_a],
        "tensor_component_sizes": [len(c) for c in comps_b],
    }
    if pairs is None:
        witnesses["counterexample"] = {
            "alcove_weights": sorted(map(list, alc.weights)),
            "tensor_weights": sorted(map(list, dual.weights)),
        }
    return Report("alcove",
                  {"type": cartan.type_name, "lambda": list(lam),
                   "level": level},
                  status, witnesses, time.perf_counter() - t0)


def check_figure(node_cap=DEFAULT_NODE_CAP, threads=None):
    """Reconstruct both paper-figure crystals exactly: the computed level-1
    filtration of B^{1,1} (x) B^{1,1} must equal the transcribed fixture
    node-for-node, and the B^{1,2} fixture must carry the figure's node,
    edge, and 0-edge data."""
    t0 = time.perf_counter()
    cartan = build_cartan("C", 2)
    box = kr_C_onebox(2)
    computed = demazure_filter(explore_tensor(cartan, [box, box]), 1, "head")
    fix_t = fixture_C2("tensor11")
    fix_b = fixture_C2("B12")

    problems = []
    if not graphs_equal(computed, fix_t):
        problems.append("computed filtration differs from tensor11 fixture")
    if not (len(fix_t) == 16 and fix_t.edge_count == 15):
        problems.append("tensor11 fixture counts")
    zt = fix_t.edges_of_color(0)
    if not (len(zt) == 1
            and fix_t.nodes[zt[0][0]] == (-1, 1)
            and fix_t.nodes[zt[0][1]] == (1, 1)):
        problems.append("tensor11 zero-edge")
    if not (len(fix_b) == 11 and fix_b.edge_count == 11):
        problems.append("B12 fixture counts")
    zb = fix_b.edges_of_color(0)
    if not (len(zb) == 1
            and fix_b.nodes[zb[0][0]] == ()
            and fix_b.nodes[zb[0][1]] == (1, 1)):
        problems.append("B12 zero-edge")
    if fix_t.seminormal() or fix_b.seminormal():
        problems.append("fixture seminormality")

    comp = computed.component_of(computed.node_of_weight((-2, 0)))
    iso = iso_check(comp, fix_b, "min")
    if iso is None:
        problems.append("11-node component not isomorphic to B12 fixture")

    status = "pass" if not problems else "fail"
    witnesses = {
        "tensor11": {"nodes": len(fix_t), "edges": fix_t.edge_count,
                     "zero_edges": len(zt)},
        "B12": {"nodes": len(fix_b), "edges": fix_b.edge_count,
                "zero_edges": len(zb)},
        "min_component_size": len(comp),
    }
    if problems:
        witnesses["counterexample"] = problems
    return Report("figure", {}, status, witnesses,
                  time.perf_counter() - t0)
