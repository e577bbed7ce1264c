"""Global irreducibility classifier with machine-checkable witness traces.

classify_global decides whether the Weyl module of a dominant weight stays
irreducible at every root of unity.  The negative answers come with a trace:
a chain of reduction steps (rank-one restriction, descent to a subdiagram,
an end-node wall-crossing fact, or a determinant leaf) ending at a concrete
order.  verify_witness replays a trace from scratch, recomputing every
restriction and every leaf condition.

The `twist` parameter threading through this module is the ratio between
ambient and local symmetrizers: a subdiagram whose nodes are long roots of
the ambient system sees the quantum parameter raised to that power.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qarith import InternalCheckError
from .rootsystem import RootSystem, Weight, format_weight
from .weylmods import (
    adjoint_short_reducible_at,
    g2_omega2_reducible_at,
    sl2_irreducible,
)


class TraceError(ValueError):
    """A witness trace is structurally malformed (not merely unsound)."""


@dataclass(frozen=True)
class Sl2Node:
    """Leaf: the coordinate at `node` fails the rank-one criterion at ell."""

    node: int
    ell: int


@dataclass(frozen=True)
class LeviDescent:
    """Restrict to the subdiagram `nodes` and continue with `inner`.

    nodes are ambient indices in the component's own Bourbaki order;
    component names the relabeled type; twist is the component's
    symmetrizer ratio relative to the system the step lives in.
    """

    nodes: tuple
    component: str
    twist: int
    restricted: tuple
    inner: tuple


@dataclass(frozen=True)
class EndNode:
    """Leaf: two end-of-diagram coordinates, settled by wall-crossing.

    Cases: a = chain type A, b = odd orthogonal, c = symplectic,
    d = the rank-4 doubly-laced system, e = the rank-2 triply-laced one.
    The reflection arithmetic is replayed for a and b; c, d, e record the
    known reducibility fact and are checked structurally.
    """

    case: str
    ell: int


@dataclass(frozen=True)
class FundWeight:
    """Leaf for a fundamental weight, settled by the named scalar test."""

    node: int
    ell: int
    tag: str


@dataclass(frozen=True)
class AdjointShortRoot:
    """Leaf: the weight is alpha0 and the short-root determinant vanishes."""

    ell: int


@dataclass(frozen=True)
class G2Omega2:
    """Leaf: the 14-dimensional module's scalar vanishes at ell."""

    ell: int


@dataclass(frozen=True)
class Decision:
    verdict: str            # "globally_irreducible" | "reducible"
    reason: str | None      # "minuscule" | "E8_adjoint"
    trace: tuple
    witness_ell: int | None


_LEAF_TYPES = (Sl2Node, EndNode, FundWeight, AdjointShortRoot, G2Omega2)

_ENDNODE_CASE = {"A": "a", "B": "b", "C": "c", "F": "d", "G": "e"}

CITATIONS = {
    "sl2_node": "rank-one divided-power criterion at a single node",
    "levi_descent": "reducibility lifts through subdiagram restriction "
                    "at a fixed order",
    "end_node_arith": "end-node wall-crossing; reflection identity and "
                      "alcove membership replayed",
    "end_node_fact": "end-node wall-crossing; recorded fact, structural "
                     "parameters checked",
    "adjoint_short_root": "zero-weight invariant detected by the "
                          "short-root matrix determinant",
    "g2_omega2": "relation determinant of the 14-dimensional module",
}


def _is_e8_adjoint(rs: RootSystem, lam: Weight) -> bool:
    return rs.kind == "E" and rs.rank == 8 and lam == rs.fundamental(8)


def _alpha0_order(rs: RootSystem) -> int:
    """Smallest order >= 3 at which the short-root determinant vanishes."""
    for ell in range(3, 2 * rs.rank + 6):
        if adjoint_short_reducible_at(rs, ell):
            return ell
    raise InternalCheckError(f"{rs.name}: no small vanishing order found")


def _fundamental_route(rs: RootSystem, i: int):
    """Subdiagram used to reduce a non-minimal fundamental weight."""
    kind, n = rs.kind, rs.rank
    if kind == "B":
        return tuple(range(i, n + 1))
    if kind == "C":
        if i == n:
            return (n - 1, n)
        return tuple(range(i - 1, n + 1))
    if kind == "D":
        return tuple(range(i - 1, n + 1))
    if kind == "E":
        if n == 6:
            return (2, 3, 4, 5, 6) if i == 5 else (1, 2, 3, 4, 5)
        if n == 7:
            return (2, 3, 4, 5, 6, 7) if i == 6 else (1, 2, 3, 4, 5, 6)
        return (2, 3, 4, 5, 6, 7, 8) if i == 7 else (1, 2, 3, 4, 5, 6, 7)
    if kind == "F":
        return (2, 3, 4) if i == 3 else (1, 2, 3)
    raise InternalCheckError(f"{rs.name}: no route for w{i}")


def _descend(rs: RootSystem, lam: Weight, J, twist: int):
    comps = rs.levi_subsystem(J)
    if len(comps) != 1:
        raise InternalCheckError(
            f"{rs.name}: route {J} is not connected")
    comp = comps[0]
    restricted = comp.restrict(lam)
    inner = find_witness(comp.system, restricted, twist * comp.twist)
    if inner is None:
        raise InternalCheckError(
            f"{rs.name}: descent to {comp.system.name} lost the witness "
            f"for {format_weight(lam)}")
    return (LeviDescent(comp.nodes, comp.system.name, comp.twist,
                        restricted, inner),)


def find_witness(rs: RootSystem, lam: Weight, twist: int = 1):
    """A reduction trace certifying reducibility at some order, or None.

    None is returned exactly for the globally irreducible weights: the
    minuscule ones, and the highest root in rank 8 type E.
    """
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise ValueError("weight: must be dominant")
    if rs.is_minuscule(lam) or _is_e8_adjoint(rs, lam):
        return None
    for i, c in enumerate(lam, 1):
        if c >= 2:
            return (Sl2Node(i, 2 * c * rs.symm[i - 1] * twist),)
    support = [i for i, c in enumerate(lam, 1) if c == 1]
    if len(support) == 1:
        i = support[0]
        if lam == rs.alpha0_weight:
            return (FundWeight(i, _alpha0_order(rs) * twist,
                               "adjoint_short_root"),)
        if rs.kind == "G" and i == 2:
            return (FundWeight(2, 3 * twist, "g2_omega2"),)
        return _descend(rs, lam, _fundamental_route(rs, i), twist)
    path = rs.tree_path(support[0], support[1])
    if len(path) < rs.rank:
        return _descend(rs, lam, path, twist)
    # the two lowest supports span the whole diagram: must be a chain
    # with exactly the two ends marked, one of the five end-node shapes
    if (len(support) != 2 or support != [1, rs.rank]
            or rs.kind not in _ENDNODE_CASE or rs.rank < 2):
        raise InternalCheckError(
            f"{rs.name}: unexpected two-node configuration "
            f"{format_weight(lam)}")
    case = _ENDNODE_CASE[rs.kind]
    if case == "a":
        return (EndNode("a", (rs.rank + 1) * twist),)
    if twist != 1:
        raise InternalCheckError(
            f"{rs.name}: twisted end-node case {case} cannot occur")
    ell = {"b": 2 * rs.rank + 1, "c": 4, "d": 4, "e": 4}[case]
    return (EndNode(case, ell),)


def endnode_witness(rs: RootSystem):
    """(weight, ell, case) settled by wall-crossing for the chain types."""
    if rs.kind not in _ENDNODE_CASE:
        raise ValueError(f"type: {rs.name} has no end-node case")
    if rs.kind == "A" and rs.rank < 2:
        raise ValueError("type: the chain case needs rank >= 2")
    lam = tuple(int(i in (0, rs.rank - 1)) for i in range(rs.rank))
    case = _ENDNODE_CASE[rs.kind]
    ell = {"a": rs.rank + 1, "b": 2 * rs.rank + 1,
           "c": 4, "d": 4, "e": 4}[case]
    return lam, ell, case


def fundamental_weight_witness(rs: RootSystem, i: int):
    """(ell, leaf tag) for the i-th fundamental weight, or None."""
    lam = rs.fundamental(i)
    trace = find_witness(rs, lam)
    if trace is None:
        return None
    leaf = leaf_step(trace)
    if isinstance(leaf, FundWeight):
        tag = leaf.tag
    elif isinstance(leaf, EndNode):
        tag = "endnode_" + leaf.case
    elif isinstance(leaf, Sl2Node):
        tag = "sl2"
    elif isinstance(leaf, AdjointShortRoot):
        tag = "adjoint_short_root"
    else:
        tag = "g2_omega2"
    return leaf.ell, tag


def leaf_step(trace):
    """The unique leaf of a chain trace."""
    if not isinstance(trace, tuple) or len(trace) != 1:
        raise TraceError("trace must be a one-step chain at every level")
    step = trace[0]
    if isinstance(step, LeviDescent):
        return leaf_step(step.inner)
    if isinstance(step, _LEAF_TYPES):
        return step
    raise TraceError(f"unknown trace step {type(step).__name__}")


def witness_ell(trace) -> int:
    return leaf_step(trace).ell


def _check_step(rs: RootSystem, lam: Weight, step, twist: int):
    """Replay one step.  Returns (holds, recursion) where recursion is
    (system, weight, inner trace, twist) for descent steps, else None."""
    if isinstance(step, Sl2Node):
        if not 1 <= step.node <= rs.rank:
            raise TraceError(f"node {step.node} out of range for {rs.name}")
        if step.ell < 1:
            raise TraceError("ell must be positive")
        c = lam[step.node - 1]
        d = rs.symm[step.node - 1] * twist
        return not sl2_irreducible(c, step.ell, d), None

    if isinstance(step, LeviDescent):
        if not step.nodes or len(set(step.nodes)) != len(step.nodes):
            raise TraceError("descent nodes must be distinct and nonempty")
        if any(not isinstance(i, int) or not 1 <= i <= rs.rank
               for i in step.nodes):
            raise TraceError(f"descent nodes invalid for {rs.name}")
        comps = rs.levi_subsystem(step.nodes)
        if len(comps) != 1:
            return False, None
        comp = comps[0]
        ok = (comp.nodes == tuple(step.nodes)
              and comp.system.name == step.component
              and comp.twist == step.twist
              and comp.restrict(lam) == tuple(step.restricted))
        if not ok:
            return False, None
        return True, (comp.system, comp.restrict(lam), step.inner,
                      twist * comp.twist)

    if isinstance(step, EndNode):
        if step.case not in ("a", "b", "c", "d", "e"):
            raise TraceError(f"unknown end-node case {step.case!r}")
        kind = {"a": "A", "b": "B", "c": "C", "d": "F", "e": "G"}[step.case]
        if rs.kind != kind or rs.rank < 2:
            return False, None
        two_ends = tuple(int(i in (0, rs.rank - 1)) for i in range(rs.rank))
        if lam != two_ends:
            return False, None
        if step.case == "a":
            base = rs.rank + 1
            if step.ell != base * twist:
                return False, None
            zero = rs.zero_weight()
            ok = (rs.dot_reflect_alpha0(base, zero) == rs.alpha0_weight
                  and rs.alpha0_weight == lam
                  and rs.in_bottom_alcove_closure(base, zero))
            return ok, None
        if twist != 1:
            return False, None
        if step.case == "b":
            if step.ell != 2 * rs.rank + 1:
                return False, None
            source = rs.fundamental(rs.rank)
            ok = (rs.dot_reflect_alpha0(step.ell, source) == lam
                  and rs.in_bottom_alcove_closure(step.ell, source))
            return ok, None
        return step.ell == 4, None

    if isinstance(step, FundWeight):
        if not 1 <= step.node <= rs.rank:
            raise TraceError(f"node {step.node} out of range for {rs.name}")
        if lam != rs.fundamental(step.node):
            return False, None
        if step.tag == "adjoint_short_root":
            ok = (lam == rs.alpha0_weight
                  and adjoint_short_reducible_at(rs, step.ell, twist))
            return ok, None
        if step.tag == "g2_omega2":
            ok = (rs.kind == "G" and step.node == 2
                  and g2_omega2_reducible_at(step.ell, twist))
            return ok, None
        raise TraceError(f"unknown leaf tag {step.tag!r}")

    if isinstance(step, AdjointShortRoot):
        return (lam == rs.alpha0_weight
                and adjoint_short_reducible_at(rs, step.ell, twist)), None

    if isinstance(step, G2Omega2):
        return (rs.kind == "G"
                and lam == rs.fundamental(2)
                and g2_omega2_reducible_at(step.ell, twist)), None

    raise TraceError(f"unknown trace step {type(step).__name__}")


def verify_witness(rs: RootSystem, lam: Weight, trace,
                   twist: int = 1) -> bool:
    """Replay a trace from scratch; True iff every step holds."""
    lam = tuple(lam)
    if not isinstance(trace, tuple) or len(trace) != 1:
        raise TraceError("trace must be a one-step chain at every level")
    holds, recursion = _check_step(rs, lam, trace[0], twist)
    if not holds:
        return False
    if recursion is None:
        return True
    sub_rs, sub_lam, inner, sub_twist = recursion
    return verify_witness(sub_rs, sub_lam, inner, sub_twist)


def classify_global(rs: RootSystem, lam: Weight) -> Decision:
    """The top-level decision: irreducible at every order, or a witness."""
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise ValueError("weight: must be dominant")
    trace = find_witness(rs, lam)
    if trace is None:
        reason = "E8_adjoint" if _is_e8_adjoint(rs, lam) else "minuscule"
        return Decision("globally_irreducible", reason, (), None)
    if not verify_witness(rs, lam, trace):
        raise InternalCheckError(
            f"{rs.name}: generated witness for {format_weight(lam)} "
            f"failed replay")
    return Decision("reducible", None, trace, witness_ell(trace))


def _step_json(rs: RootSystem, lam: Weight, step, twist: int):
    holds, recursion = _check_step(rs, lam, step, twist)
    if isinstance(step, Sl2Node):
        name, citation = "sl2_node", CITATIONS["sl2_node"]
        params = {"node": step.node,
                  "coordinate": lam[step.node - 1],
                  "symmetrizer": rs.symm[step.node - 1] * twist,
                  "ell": step.ell}
    elif isinstance(step, LeviDescent):
        name, citation = "levi_descent", CITATIONS["levi_descent"]
        params = {"nodes": list(step.nodes),
                  "component": step.component,
                  "twist": step.twist,
                  "restricted_weight": format_weight(step.restricted)}
    elif isinstance(step, EndNode):
        name = "end_node"
        key = "end_node_arith" if step.case in ("a", "b") else "end_node_fact"
        citation = CITATIONS[key]
        params = {"case": step.case, "ell": step.ell,
                  "arithmetic_replayed": step.case in ("a", "b")}
    elif isinstance(step, FundWeight):
        name, citation = "fundamental_weight", CITATIONS[step.tag]
        params = {"node": step.node, "ell": step.ell, "test": step.tag}
    elif isinstance(step, AdjointShortRoot):
        name = "adjoint_short_root"
        citation = CITATIONS["adjoint_short_root"]
        params = {"ell": step.ell}
    else:
        name, citation = "g2_omega2", CITATIONS["g2_omega2"]
        params = {"ell": step.ell}
    node = {"step": name, "params": params, "citation": citation,
            "verified": bool(holds)}
    if recursion is not None:
        sub_rs, sub_lam, inner, sub_twist = recursion
        node["inner"] = [_step_json(sub_rs, sub_lam, s, sub_twist)
                         for s in inner]
    return node


def trace_json(rs: RootSystem, lam: Weight, trace):
    """JSON-shaped tree for a trace, with per-step replay flags."""
    return [_step_json(rs, lam, step, 1) for step in trace]


def trace_citations(trace):
    """Citation strings in outer-to-inner order, deduplicated."""
    out = []

    def walk(steps):
        for step in steps:
            if isinstance(step, Sl2Node):
                key = "sl2_node"
            elif isinstance(step, LeviDescent):
                key = "levi_descent"
            elif isinstance(step, EndNode):
                key = ("end_node_arith" if step.case in ("a", "b")
                       else "end_node_fact")
            elif isinstance(step, FundWeight):
                key = step.tag
            elif isinstance(step, AdjointShortRoot):
                key = "adjoint_short_root"
            elif isinstance(step, G2Omega2):
                key = "g2_omega2"
            else:
                raise TraceError(f"unknown trace step {type(step).__name__}")
            text = CITATIONS[key]
            if text not in out:
                out.append(text)
            if isinstance(step, LeviDescent):
                walk(step.inner)

    walk(trace)
    return out
