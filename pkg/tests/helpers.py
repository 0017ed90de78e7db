"""Independent oracles shared by the test modules.

Everything here recomputes results from first principles (alcove-walk
geometry with exact Fractions, inversion counting, subword products),
deliberately avoiding the package's own code paths wherever a statement
is being checked against it.
"""

import math
from fractions import Fraction

from krcrystals.cartan import (identity_matrix, mat_mul, mat_vec, vec_add,
                               vec_neg, vec_scale, vec_sub)
from krcrystals.crystals import (CrystalGraph, components, demazure_subset,
                                 hw_crystal, iso_check)


# ---------------------------------------------------------------------------
# Weyl-group oracles


def length_by_inversions(cartan, word):
    """Length of s_{i_1}...s_{i_k} = number of positive roots sent negative,
    computed through repeated simple reflections on root coordinates."""
    count = 0
    for beta in cartan.positive_roots_list:
        img = beta
        for i in reversed(word):
            img = cartan.simple_reflection_on_root(i, img)
        if all(x <= 0 for x in img):
            count += 1
    return count


def subword_products(group, w):
    """All subword products of one reduced word of w; this set is the
    Bruhat lower interval [e, w]."""
    word = group.reduced_word(w)
    out = {group.identity}
    for i in word:
        out |= {group.mul(v, group.simple[i]) for v in out}
    return out


# ---------------------------------------------------------------------------
# alcove-walk validation of lambda-chains


def interior_point(cartan):
    """A generic rational point of the fundamental alcove."""
    big = max(sum(cartan.coroot_coords(b))
              for b in cartan.positive_roots_list)
    return tuple(Fraction(1, (big + 1) * (2 ** (j + 2)))
                 for j in range(cartan.rank))


def frac_pairing(cartan, root, point):
    return sum(c * x for c, x in zip(cartan.coroot_coords(root), point))


def hyperplane_image(cartan, pair, w_root, w_wt, v):
    """Image of H_{gamma,k} under the affine map x -> W x + v, normalized
    to a positive root."""
    gamma, k = pair
    g = mat_vec(w_root, gamma)
    sign = cartan.root_sign(g)
    base = g if sign > 0 else vec_neg(g)
    kk = k + sign * cartan.pairing(base, v)
    return (base, kk if sign > 0 else -kk)


def validate_chain(chain):
    """Walk the alcove path step by step: every crossing must use a wall
    of the current alcove, move against the crossing root, and the walk
    must end in the alcove translated by -lambda."""
    ct = chain.cartan
    n = ct.rank
    base_walls = [(tuple(1 if j == i else 0 for j in range(n)), 0)
                  for i in range(n)]
    # the upper wall of A0 in the arrangement <x, beta^vee> = k is the
    # hyperplane of the highest coroot, i.e. of the highest short root
    top = max(ct.positive_roots_list,
              key=lambda b: sum(ct.coroot_coords(b)))
    base_walls.append((top, 1))
    w_root = identity_matrix(n)
    w_wt = identity_matrix(n)
    v = (0,) * n
    p0 = interior_point(ct)

    def current_point():
        return vec_add(mat_vec(w_wt, p0), v)

    for pos in range(chain.m):
        beta = chain.roots[pos]
        level = chain.l[pos]
        walls = {hyperplane_image(ct, bw, w_root, w_wt, v)
                 for bw in base_walls}
        assert (beta, -level) in walls, \
            "step %d does not cross a wall of the current alcove" % (pos + 1)
        before = frac_pairing(ct, beta, current_point())
        s_wt = ct.reflection_weight_matrix(beta)
        v = vec_add(mat_vec(s_wt, v), vec_scale(-level, ct.root_to_weight(beta)))
        w_wt = mat_mul(s_wt, w_wt)
        w_root = mat_mul(ct.reflection_root_matrix(beta), w_root)
        after = frac_pairing(ct, beta, current_point())
        assert after < before, "step %d crosses in the wrong direction" % (pos + 1)

    end = current_point()
    for gamma in ct.positive_roots_list:
        assert math.floor(frac_pairing(ct, gamma, end)) == \
            -ct.pairing(gamma, chain.lam), "endpoint is not A_{-lambda}"
    return True


def folding_weight_oracle(chain, J):
    """wt(J) = -r-hat_{j_1} ... r-hat_{j_s}(-lambda), applied reflection by
    reflection from the inside out."""
    ct = chain.cartan
    x = vec_neg(chain.lam)
    for j in sorted(J, reverse=True):
        beta = chain.roots[j - 1]
        bw = ct.root_to_weight(beta)
        x = vec_sub(x, vec_scale(ct.pairing(beta, x) + chain.l[j - 1], bw))
    return vec_neg(x)


# ---------------------------------------------------------------------------
# the combinatorial excellent filtration


def demazure_tensor_object(cartan, funds, mu, lam, word):
    """The full subcrystal on B_w(mu) (x) u_lambda inside B(mu) (x) B(lambda):
    an f_i-edge survives iff the signature rule keeps the operator on the
    left factor (eps_i(b) >= <alpha_i^vee, lambda>) and the image stays in
    the Demazure subset."""
    graph = hw_crystal(cartan, mu, funds)
    subset = sorted(demazure_subset(graph, word))
    remap = {b: k for k, b in enumerate(subset)}
    f_edges = {}
    for b in subset:
        for i in cartan.classical_index_set:
            if graph.eps(b, i) >= lam[i - 1]:
                img = graph.f(b, i)
                if img is not None and img in remap:
                    f_edges[(remap[b], i)] = remap[img]
    weights = [vec_add(graph.weights[b], lam) for b in subset]
    reprs = [graph.reprs[b] for b in subset]
    return CrystalGraph(cartan, cartan.classical_index_set,
                        list(range(len(subset))), f_edges, weights, reprs)


def decomposes_into_demazure(cartan, funds, group, mu, lam, word):
    """Is every component of the filtered object isomorphic to some Demazure
    crystal B_v(kappa), searched over v and with kappa read off the source?"""
    obj = demazure_tensor_object(cartan, funds, mu, lam, word)
    for comp in components(obj):
        sources = [i for i in range(len(comp))
                   if all(comp.e(i, c) is None for c in comp.colors)]
        if len(sources) != 1:
            return False
        kappa = comp.weights[sources[0]]
        if not cartan.is_dominant(kappa):
            return False
        ambient = hw_crystal(cartan, kappa, funds)
        for v in group.elements:
            cand = ambient.subgraph(
                demazure_subset(ambient, group.reduced_word(v)))
            if len(cand) == len(comp) and \
                    iso_check(comp, cand, "max") is not None:
                break
        else:
            return False
    return True
