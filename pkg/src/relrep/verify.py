"""Two independent verifiers for relation-algebra representation candidates.

``verify_sumsets`` checks a group (Cayley) candidate through the sumset
identities its algebra requires; ``verify_bruteforce`` checks an arbitrary
finite edge coloring by exhaustive witness search.  On Cayley colorings the
two must agree, which the test suite exercises as an oracle-equivalence
property.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Mapping, Sequence

import numpy as np

from .algebra import IDENTITY, RaSpec
from .groups import ElementSet, GroupSpec, sumset

MISSING_WITNESS = "missing_witness"
FORBIDDEN_REALIZED = "forbidden_realized"
EMPTY_ATOM = "empty_atom"

DEFAULT_VIOLATION_CAP = 100


class StructuralError(ValueError):
    """The candidate is malformed; distinct from a reject verdict."""


@dataclass(frozen=True)
class Violation:
    kind: str
    cycle: tuple[str, str, str] | None  # (i, j, k) atom names; None for empty-atom
    where: str  # offending element, edge or atom, already formatted

    def to_dict(self) -> dict:
        return {"kind": self.kind,
                "cycle": list(self.cycle) if self.cycle else None,
                "where": self.where}


@dataclass(frozen=True)
class PairCheck:
    """Outcome of one required identity for the unordered atom pair (left, right)."""

    left: str
    right: str
    expected_atoms: tuple[str, ...]
    include_zero: bool
    actual_atoms: tuple[str, ...]
    actual_has_zero: bool
    ok: bool

    def to_dict(self) -> dict:
        return {"pair": [self.left, self.right],
                "expected_atoms": list(self.expected_atoms),
                "include_zero": self.include_zero,
                "actual_atoms": list(self.actual_atoms),
                "actual_has_zero": self.actual_has_zero,
                "ok": self.ok}


@dataclass
class VerificationReport:
    method: str
    accepted: bool
    pair_checks: list[PairCheck]
    violations: list[Violation]
    violation_count: int
    counts_by_kind: dict[str, int]
    counts_by_cycle: dict[str, int]
    truncated: bool

    @property
    def verdict(self) -> str:
        return "accept" if self.accepted else "reject"

    def to_dict(self) -> dict:
        return {"verdict": self.verdict,
                "method": self.method,
                "pairs": [p.to_dict() for p in self.pair_checks],
                "violations": [v.to_dict() for v in self.violations],
                "violation_count": self.violation_count,
                "counts_by_kind": dict(sorted(self.counts_by_kind.items())),
                "counts_by_cycle": dict(sorted(self.counts_by_cycle.items())),
                "truncated": self.truncated}


class _Collector:
    """Accumulates violations under a recording cap and an early-exit flag."""

    def __init__(self, early_exit: bool, max_recorded: int):
        self.early_exit = early_exit
        self.max_recorded = max_recorded
        self.violations: list[Violation] = []
        self.count = 0
        self.by_kind: dict[str, int] = {}
        self.by_cycle: dict[str, int] = {}
        self.stop = False

    def add(self, kind: str, cycle: tuple[str, str, str] | None, where: str) -> None:
        self.add_bulk(kind, cycle, [where], 1)

    def add_bulk(self, kind, cycle, wheres, total: int) -> None:
        if total <= 0:
            return
        self.count += total
        self.by_kind[kind] = self.by_kind.get(kind, 0) + total
        if cycle is not None:
            key = ",".join(cycle)
            self.by_cycle[key] = self.by_cycle.get(key, 0) + total
        room = self.max_recorded - len(self.violations)
        if room > 0:
            for where in islice(wheres, room):
                self.violations.append(Violation(kind, cycle, where))
        if self.early_exit:
            self.stop = True

    def report(self, method: str, pair_checks: list[PairCheck]) -> VerificationReport:
        return VerificationReport(
            method=method,
            accepted=self.count == 0,
            pair_checks=pair_checks,
            violations=self.violations,
            violation_count=self.count,
            counts_by_kind=self.by_kind,
            counts_by_cycle=self.by_cycle,
            truncated=self.stop or self.count > len(self.violations),
        )


class ColoredPartition:
    """Diversity atom names assigned to symmetric subsets partitioning G minus 0."""

    def __init__(self, group: GroupSpec, assignment: Mapping[str, ElementSet],
                 check: bool = True):
        self.group = group
        self.assignment = dict(assignment)
        if check:
            self.validate()

    def validate(self) -> None:
        cover = np.zeros(self.group.order, dtype=np.int32)
        for name, es in self.assignment.items():
            if not isinstance(es, ElementSet) or es.group != self.group:
                raise StructuralError(f"set for atom {name!r} does not live in {self.group}")
            if 0 in es:
                raise StructuralError(f"atom {name!r} contains the group zero")
            if not es.is_symmetric:
                bad = int(np.flatnonzero(es.mask & ~es.negated().mask)[0])
                raise StructuralError(
                    f"atom {name!r} is not symmetric: contains "
                    f"{self.group.format_element(bad)} but not its negation")
            cover[es.mask] += 1
        overlap = np.flatnonzero(cover > 1)
        if overlap.size:
            raise StructuralError(
                f"element {self.group.format_element(int(overlap[0]))} is assigned "
                f"to more than one atom")
        gaps = np.flatnonzero(cover == 0)
        gaps = gaps[gaps != 0]
        if gaps.size:
            raise StructuralError(
                f"element {self.group.format_element(int(gaps[0]))} is not assigned to any atom")

    def atom_names(self) -> tuple[str, ...]:
        return tuple(sorted(self.assignment))

    def set_for(self, name: str) -> ElementSet:
        try:
            return self.assignment[name]
        except KeyError:
            raise StructuralError(f"partition has no atom {name!r}") from None

    def __repr__(self) -> str:
        sizes = ", ".join(f"{n}:{len(s)}" for n, s in sorted(self.assignment.items()))
        return f"<ColoredPartition over {self.group.describe()} [{sizes}]>"


class EdgeColoring:
    """A total symmetric coloring of ordered point pairs by atom names.

    ``colors[x, y]`` is an index into ``atom_names``; code 0 must be the
    identity and appears exactly on the diagonal.
    """

    def __init__(self, atom_names: Sequence[str], colors: np.ndarray, check: bool = True):
        self.atom_names = tuple(atom_names)
        colors = np.asarray(colors)
        self.colors = colors.copy()
        self.colors.setflags(write=False)
        if check:
            self.validate()

    @property
    def point_count(self) -> int:
        return self.colors.shape[0]

    def validate(self) -> None:
        if self.atom_names[:1] != (IDENTITY,):
            raise StructuralError(f"atom code 0 must be the identity {IDENTITY!r}")
        if len(set(self.atom_names)) != len(self.atom_names):
            raise StructuralError("duplicate atom names in coloring")
        c = self.colors
        if c.ndim != 2 or c.shape[0] != c.shape[1]:
            raise StructuralError(f"color matrix must be square, got shape {c.shape}")
        if c.size == 0:
            raise StructuralError("coloring needs at least one point")
        if c.min() < 0 or c.max() >= len(self.atom_names):
            raise StructuralError("color codes out of range")
        if not np.array_equal(c, c.T):
            x, y = np.argwhere(c != c.T)[0]
            raise StructuralError(f"coloring is not symmetric at pair ({x}, {y})")
        diag = np.diagonal(c)
        if (diag != 0).any():
            x = int(np.flatnonzero(diag != 0)[0])
            raise StructuralError(f"diagonal point ({x}, {x}) is not identity-colored")
        off = c.copy()
        np.fill_diagonal(off, 1)
        if (off == 0).any():
            x, y = np.argwhere(off == 0)[0]
            raise StructuralError(f"off-diagonal pair ({x}, {y}) is identity-colored")

    def atom_mask(self, name: str) -> np.ndarray:
        try:
            code = self.atom_names.index(name)
        except ValueError:
            raise StructuralError(f"coloring has no atom {name!r}") from None
        return self.colors == code


def cayley_coloring(part: ColoredPartition) -> EdgeColoring:
    """The coloring with points G and edge (x, y) colored by the atom of y - x."""
    part.validate()
    group = part.group
    names = (IDENTITY,) + part.atom_names()
    code_of = np.zeros(group.order, dtype=np.int16)
    for code, name in enumerate(names[1:], start=1):
        code_of[part.assignment[name].mask] = code
    colors = code_of[group.difference_table()]
    return EdgeColoring(names, colors, check=False)


def _check_atoms_match(spec: RaSpec, names: Sequence[str]) -> list[str]:
    spec_names = [a.name for a in spec.diversity_atoms]
    if set(names) != set(spec_names):
        raise StructuralError(
            f"candidate atoms {sorted(names)} do not match algebra atoms {sorted(spec_names)}")
    return spec_names


def verify_sumsets(spec: RaSpec, part: ColoredPartition, *,
                   early_exit: bool = False,
                   max_recorded: int = DEFAULT_VIOLATION_CAP) -> VerificationReport:
    """Check every sumset identity the algebra imposes on a group partition.

    Accepts iff for each unordered diversity pair (j, k) the sumset
    S_j + S_k equals the union of the profile atoms' sets, with 0 included
    exactly when j = k, and every atom is nonempty (faithfulness).
    """
    part.validate()
    names = _check_atoms_match(spec, list(part.assignment))
    group = part.group
    collector = _Collector(early_exit, max_recorded)
    sets = part.assignment

    for name in names:
        if len(sets[name]) == 0:
            collector.add(EMPTY_ATOM, None, name)

    pair_checks: list[PairCheck] = []
    for j_pos in range(len(names)):
        if collector.stop:
            break
        for k_pos in range(j_pos, len(names)):
            if collector.stop:
                break
            j, k = names[j_pos], names[k_pos]
            profile, include_zero = spec.required_sumset_profile(j, k)
            profile_names = sorted(a.name for a in profile)
            actual = sumset(sets[j], sets[k])
            has_zero = 0 in actual
            if sets[j] and sets[k]:
                # structurally guaranteed; a failure here is a sumset bug
                assert has_zero == include_zero, "zero membership inconsistent with structure"
            expected = np.zeros(group.order, dtype=bool)
            for name in profile_names:
                expected |= sets[name].mask
            if include_zero:
                expected[0] = True
            actual_atoms = tuple(n for n in names if bool(sets[n] & actual))
            ok = bool(np.array_equal(expected, actual.mask))
            pair_checks.append(PairCheck(j, k, tuple(profile_names), include_zero,
                                         actual_atoms, has_zero, ok))
            if ok:
                continue
            for i in profile_names:
                missing = sets[i].mask & ~actual.mask
                collector.add_bulk(
                    MISSING_WITNESS, (i, j, k),
                    (group.format_element(int(e)) for e in np.flatnonzero(missing)),
                    int(missing.sum()))
                if collector.stop:
                    break
            if not collector.stop:
                for i in (n for n in names if n not in profile_names):
                    extra = sets[i].mask & actual.mask
                    collector.add_bulk(
                        FORBIDDEN_REALIZED, (i, j, k),
                        (group.format_element(int(e)) for e in np.flatnonzero(extra)),
                        int(extra.sum()))
                    if collector.stop:
                        break
            if not collector.stop:
                if include_zero and not has_zero:
                    collector.add(MISSING_WITNESS, (IDENTITY, j, k), group.format_element(0))
                elif has_zero and not include_zero:
                    collector.add(FORBIDDEN_REALIZED, (IDENTITY, j, k), group.format_element(0))
    return collector.report("sumsets", pair_checks)


def verify_bruteforce(spec: RaSpec, coloring: EdgeColoring, *,
                      early_exit: bool = False,
                      max_recorded: int = DEFAULT_VIOLATION_CAP) -> VerificationReport:
    """Exhaustively check witness existence and forbidden triangles.

    For each unordered diversity pair (j, k), a boolean matrix product gives
    the set of edges (x, y) admitting a point z with (x, z) colored j and
    (z, y) colored k.  Every edge colored by a profile atom of (j, k) must be
    such an edge; no edge colored outside the profile may be.  Every atom
    must color at least one edge (faithfulness).  Identity cycles need no
    check: z = x or z = y witnesses them on any well-formed coloring.
    """
    coloring.validate()
    names = _check_atoms_match(
        spec, [n for n in coloring.atom_names if n != IDENTITY])
    collector = _Collector(early_exit, max_recorded)
    masks = {n: coloring.atom_mask(n) for n in names}
    floats = {n: masks[n].astype(np.float64) for n in names}

    for name in names:
        if not masks[name].any():
            collector.add(EMPTY_ATOM, None, name)

    witness_cache: dict[tuple[str, str], np.ndarray] = {}

    def witnessed(j: str, k: str) -> np.ndarray:
        key = (j, k) if j <= k else (k, j)
        if key not in witness_cache:
            witness_cache[key] = (floats[key[0]] @ floats[key[1]]) > 0.5
        return witness_cache[key]

    def edge_labels(bad: np.ndarray, cap: int):
        for x, y in islice(np.argwhere(bad), cap):
            yield f"({int(x)},{int(y)})"

    def triangle_labels(bad: np.ndarray, j: str, k: str, cap: int):
        for x, y in islice(np.argwhere(bad), cap):
            z = int(np.flatnonzero(masks[j][int(x)] & masks[k][:, int(y)])[0])
            yield f"({int(x)},{z},{int(y)})"

    pair_checks: list[PairCheck] = []
    for j_pos in range(len(names)):
        if collector.stop:
            break
        for k_pos in range(j_pos, len(names)):
            if collector.stop:
                break
            j, k = names[j_pos], names[k_pos]
            profile, include_zero = spec.required_sumset_profile(j, k)
            profile_names = sorted(a.name for a in profile)
            reach = witnessed(j, k)
            actual_atoms = tuple(n for n in names if (masks[n] & reach).any())
            has_zero = bool(np.diagonal(reach).any())
            ok = True
            for i in names:
                if collector.stop:
                    break
                if i in profile_names:
                    bad = masks[i] & ~reach
                    if bad.any():
                        ok = False
                        collector.add_bulk(MISSING_WITNESS, (i, j, k),
                                           edge_labels(bad, max_recorded),
                                           int(bad.sum()))
                else:
                    bad = masks[i] & reach
                    if bad.any():
                        ok = False
                        collector.add_bulk(FORBIDDEN_REALIZED, (i, j, k),
                                           triangle_labels(bad, j, k, max_recorded),
                                           int(bad.sum()))
            if not collector.stop and include_zero and not has_zero:
                # only possible when S_j is empty; mirror the sumset verifier
                ok = False
                collector.add(MISSING_WITNESS, (IDENTITY, j, k), "(diagonal)")
            pair_checks.append(PairCheck(j, k, tuple(profile_names), include_zero,
                                         actual_atoms, has_zero, ok))
    return collector.report("bruteforce", pair_checks)


@dataclass(frozen=True)
class EquivalenceResult:
    """Either the classes of (atom or identity), or a transitivity witness."""

    classes: tuple[tuple[int, ...], ...] | None
    witness: tuple[int, int, int] | None  # (x, z, y): x~z and z~y but not x~y

    @property
    def is_equivalence(self) -> bool:
        return self.witness is None

    def class_sizes(self) -> list[int]:
        if self.classes is None:
            raise ValueError("relation is not an equivalence")
        return [len(c) for c in self.classes]


def equivalence_classes(coloring: EdgeColoring, atom_name: str) -> EquivalenceResult:
    """Partition points by (atom_name or identity) if transitive, else witness."""
    relation = coloring.atom_mask(atom_name).copy()
    np.fill_diagonal(relation, True)
    rel_f = relation.astype(np.float64)
    two_step = (rel_f @ rel_f) > 0.5
    bad = two_step & ~relation
    if bad.any():
        x, y = (int(v) for v in np.argwhere(bad)[0])
        z = int(np.flatnonzero(relation[x] & relation[:, y])[0])
        return EquivalenceResult(None, (x, z, y))
    n = coloring.point_count
    seen = np.zeros(n, dtype=bool)
    classes = []
    for x in range(n):
        if seen[x]:
            continue
        members = np.flatnonzero(relation[x])
        seen[members] = True
        classes.append(tuple(int(m) for m in members))
    return EquivalenceResult(tuple(classes), None)
