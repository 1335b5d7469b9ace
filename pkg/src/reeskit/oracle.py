"""Brute-force membership oracle for the rewriting congruence of Taylor
relations.

A rewrite rule is an unordered pair of RT-monomials (the two terms of a
binomial relation).  A step replaces a whole-monomial occurrence of one side
inside a monomial by the other side.  Two monomials are congruent modulo a
rule set exactly when a chain of such steps connects them, which for pure
binomial ideals is the same as the difference lying in the ideal the rules
generate.

member_lower decides whether a degree-s binomial pair reduces modulo all
relation layers up to k without materializing those layers: every monomial
reachable from (f_beta/g) T_alpha has the shape (M / f_delta) T_delta with
M = lcm(f_alpha, f_beta) and f_delta dividing M, and a move between fiber
nodes delta, delta' exists under some layer-<=k rule precisely when their
multiset distance is at most k.  The search therefore runs on the fiber
universe {delta : f_delta | M}, which stays small even where the raw rule
count is astronomical.  Since every fiber node has the same substituted
degree, the degree cap never prunes there and a negative answer is exact.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence as Seq

from .monomials import SquareFreeIdeal, mono_divides, mono_lcm
from .taylor import (
    ReesBinomial,
    RTMonomial,
    Sequence,
    enumerate_sequences,
    multiset_distance,
    product_of,
    rt_div_exact,
    rt_divides,
    rt_mul,
    run_lengths,
    seq_intersection,
    seq_remove,
    taylor_binomial,
    taylor_layer,
    weighted_degree,
)


@dataclass(frozen=True)
class RewriteRule:
    """Unordered two-sided rewrite rule; sides are the terms of a binomial."""

    left: RTMonomial
    right: RTMonomial

    @staticmethod
    def from_binomial(b: ReesBinomial) -> "RewriteRule":
        u, v = b.terms()
        return RewriteRule(u, v)


class ChainStep(NamedTuple):
    rule: RewriteRule
    forward: bool  # True: left side matched and was replaced by right


@dataclass(frozen=True)
class Verdict:
    status: str  # "yes" | "no" | "unknown"
    chain: tuple[ChainStep, ...] = ()
    note: str = ""

    @property
    def is_yes(self) -> bool:
        return self.status == "yes"

    @property
    def is_no(self) -> bool:
        return self.status == "no"

    @property
    def is_unknown(self) -> bool:
        return self.status == "unknown"


def apply_step(w: RTMonomial, step: ChainStep) -> RTMonomial:
    src = step.rule.left if step.forward else step.rule.right
    dst = step.rule.right if step.forward else step.rule.left
    if not rt_divides(src, w):
        raise ValueError("chain step does not apply")
    return rt_mul(rt_div_exact(w, src), dst)


def replay_chain(u: RTMonomial, chain: Iterable[ChainStep]) -> RTMonomial:
    w = u
    for step in chain:
        w = apply_step(w, step)
    return w


def rewrite_step(w: RTMonomial, rule: RewriteRule) -> tuple[RTMonomial, ...]:
    """All single-step rewrites of w by the rule, forward results first."""
    out = []
    if rt_divides(rule.left, w):
        out.append(rt_mul(rt_div_exact(w, rule.left), rule.right))
    if rt_divides(rule.right, w):
        cand = rt_mul(rt_div_exact(w, rule.right), rule.left)
        if cand not in out:
            out.append(cand)
    return tuple(out)


def congruent(ideal: SquareFreeIdeal, rules: Seq[RewriteRule], u: RTMonomial,
              v: RTMonomial, cap: Optional[int] = None) -> Verdict:
    """Bidirectional breadth-first search for a rewrite chain from u to v.

    cap bounds the substituted total degree of intermediate monomials and
    defaults to deg(u) + 4.  A "no" is only reported when the search space
    under the cap is exhausted without any pruned expansion.
    """
    du = weighted_degree(ideal, u)
    if cap is None:
        cap = du + 4
    if cap < du:
        raise ValueError(f"cap {cap} below the degree {du} of the start monomial")
    if u == v:
        return Verdict("yes")

    # parent[w] = (previous, step applied at previous to reach w)
    parent_u: dict[RTMonomial, Optional[tuple[RTMonomial, ChainStep]]] = {u: None}
    parent_v: dict[RTMonomial, Optional[tuple[RTMonomial, ChainStep]]] = {v: None}
    frontier_u, frontier_v = [u], [v]
    pruned = 0

    def build_chain(meet: RTMonomial) -> tuple[ChainStep, ...]:
        fwd = []
        node = meet
        while parent_u[node] is not None:
            prev, step = parent_u[node]
            fwd.append(step)
            node = prev
        fwd.reverse()
        back = []
        node = meet
        while parent_v[node] is not None:
            prev, step = parent_v[node]
            back.append(ChainStep(step.rule, not step.forward))
            node = prev
        return tuple(fwd + back)

    while frontier_u and frontier_v:
        grow_u = len(frontier_u) <= len(frontier_v)
        frontier = frontier_u if grow_u else frontier_v
        mine = parent_u if grow_u else parent_v
        other = parent_v if grow_u else parent_u
        nxt = []
        for w in frontier:
            for rule in rules:
                for idx, res in enumerate(rewrite_step(w, rule)):
                    if res in mine:
                        continue
                    if weighted_degree(ideal, res) > cap:
                        pruned += 1
                        continue
                    fwd_dir = rt_divides(rule.left, w) and idx == 0
                    mine[res] = (w, ChainStep(rule, fwd_dir))
                    if res in other:
                        return Verdict("yes", build_chain(res))
                    nxt.append(res)
        if grow_u:
            frontier_u = nxt
        else:
            frontier_v = nxt

    if pruned == 0:
        return Verdict("no", note="search space exhausted")
    return Verdict("unknown",
                   note=f"cap {cap} exhausted with {pruned} pruned expansions")


# --- fiber-based layered membership ---------------------------------------

def _fiber_step(ideal: SquareFreeIdeal, delta: Sequence,
                delta2: Sequence) -> ChainStep:
    common = seq_intersection(delta, delta2)
    d = seq_remove(delta, common)
    d2 = seq_remove(delta2, common)
    rule = RewriteRule.from_binomial(taylor_binomial(ideal, d, d2))
    return ChainStep(rule, True)


def _chain_from_path(ideal: SquareFreeIdeal,
                     path: Seq[Sequence]) -> tuple[ChainStep, ...]:
    return tuple(_fiber_step(ideal, a, b) for a, b in zip(path, path[1:]))


def _bfs_path(start: Sequence, goal: Sequence, universe: list[Sequence],
              neighbors) -> Optional[list[Sequence]]:
    parent: dict[Sequence, Optional[Sequence]] = {start: None}
    frontier = [start]
    while frontier:
        nxt = []
        for node in frontier:
            for other in neighbors(node):
                if other in parent:
                    continue
                parent[other] = node
                if other == goal:
                    path = [other]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                nxt.append(other)
        frontier = nxt
    return None


def member_lower(ideal: SquareFreeIdeal, b: ReesBinomial, k: int,
                 cap: Optional[int] = None) -> Verdict:
    """Does the layer-s pair of b rewrite into one another modulo all
    relation layers of degree at most k?  Exact yes/no on the lcm fiber."""
    if k < 1:
        raise ValueError("layer bound k must be at least 1")
    s = b.degree
    u, _ = b.terms()
    du = weighted_degree(ideal, u)
    if cap is not None and cap < du:
        raise ValueError(f"cap {cap} below the degree {du} of the start monomial")

    if multiset_distance(b.alpha, b.beta) <= k:
        return Verdict("yes", (_fiber_step(ideal, b.alpha, b.beta),),
                       note="single move")

    big = mono_lcm(product_of(ideal, b.alpha), product_of(ideal, b.beta))
    universe = [delta for delta in enumerate_sequences(ideal.n, s)
                if mono_divides(product_of(ideal, delta), big)]
    note = f"fiber universe {len(universe)} nodes"

    if k >= s - 1:
        # Edges are exactly "supports intersect": connectivity first via
        # union-find over generator indices, path reconstruction only on yes.
        uf = list(range(ideal.n + 1))

        def find(a: int) -> int:
            while uf[a] != a:
                uf[a] = uf[uf[a]]
                a = uf[a]
            return a

        for delta in universe:
            sup = sorted(set(delta))
            for a in sup[1:]:
                uf[find(a)] = find(sup[0])
        if find(b.alpha[0]) != find(b.beta[0]):
            return Verdict("no", note=note)
        masks = {delta: _support_mask(delta) for delta in universe}

        def neighbors(node: Sequence):
            mask = masks[node]
            return [o for o in universe if o != node and masks[o] & mask]

        path = _bfs_path(b.alpha, b.beta, universe, neighbors)
        assert path is not None
        return Verdict("yes", _chain_from_path(ideal, path), note=note)

    if k == 1:
        uni_set = set(universe)

        def neighbors(node: Sequence):
            out = []
            for a, _mult in run_lengths(node):
                rest = seq_remove(node, (a,))
                for c in range(1, ideal.n + 1):
                    if c == a:
                        continue
                    cand = tuple(sorted(rest + (c,)))
                    if cand in uni_set:
                        out.append(cand)
            return out
    else:
        counters = {delta: Counter(delta) for delta in universe}

        def neighbors(node: Sequence):
            cn = counters[node]
            out = []
            for o in universe:
                if o == node:
                    continue
                if s - sum((cn & counters[o]).values()) <= k:
                    out.append(o)
            return out

    path = _bfs_path(b.alpha, b.beta, universe, neighbors)
    if path is None:
        return Verdict("no", note=note)
    return Verdict("yes", _chain_from_path(ideal, path), note=note)


def _support_mask(seq: Sequence) -> int:
    mask = 0
    for a in set(seq):
        mask |= 1 << a
    return mask


# --- layered relation-type estimation --------------------------------------

@dataclass
class RtReport:
    certified_lower: int
    witness: Optional[ReesBinomial]
    verified_upper_through: int
    layer_tallies: dict[int, tuple[int, int, int]] = field(default_factory=dict)
    unknown_count: int = 0
    s_max: int = 1


def relation_type_estimate(ideal: SquareFreeIdeal, s_max: int,
                           cap: Optional[int] = None) -> RtReport:
    """Test every layer 2..s_max against all strictly lower layers.

    certified_lower starts at the vacuous floor 1 and becomes the largest
    layer containing a pair that does not reduce (with a witness binomial).
    verified_upper_through is the largest s' <= s_max such that every layer
    strictly between certified_lower and s' reduced completely.
    """
    assert s_max >= 1
    tallies: dict[int, tuple[int, int, int]] = {}
    certified_lower = 1
    witness: Optional[ReesBinomial] = None
    unknown_total = 0
    for s in range(2, s_max + 1):
        yes = no = unknown = 0
        first_no: Optional[ReesBinomial] = None
        for b in taylor_layer(ideal, s):
            verdict = member_lower(ideal, b, s - 1, cap)
            if verdict.is_yes:
                yes += 1
            elif verdict.is_no:
                no += 1
                if first_no is None:
                    first_no = b
            else:
                unknown += 1
        tallies[s] = (yes, no, unknown)
        unknown_total += unknown
        if no > 0:
            certified_lower = s
            witness = first_no
    upper = s_max
    for d in range(certified_lower + 1, s_max + 1):
        if tallies[d][2] > 0:
            upper = d - 1
            break
    upper = max(upper, certified_lower)
    return RtReport(certified_lower, witness, upper, tallies, unknown_total,
                    s_max)


def fiber_witness(ideal: SquareFreeIdeal, b: ReesBinomial,
                  cap: Optional[int] = None) -> bool:
    """True when b both fails to reduce modulo all strictly lower layers and
    carries a non-unit coefficient on at least one side (so it witnesses a
    minimal generator outside the linear-plus-fiber part)."""
    if b.lhs_coef.is_one and b.rhs_coef.is_one:
        return False
    if b.degree == 1:
        return True
    return not member_lower(ideal, b, b.degree - 1, cap).is_yes


def minimal_linear_generators(ideal: SquareFreeIdeal,
                              cap: Optional[int] = None) -> list[ReesBinomial]:
    """Greedy pruning of the degree-1 layer: drop a binomial whenever it is
    congruent to zero modulo the others that are still kept."""
    kept = list(taylor_layer(ideal, 1))
    for b in list(kept):
        others = [x for x in kept if x is not b]
        rules = [RewriteRule.from_binomial(x) for x in others]
        u, v = b.terms()
        if congruent(ideal, rules, u, v, cap).is_yes:
            kept.remove(b)
    return kept
