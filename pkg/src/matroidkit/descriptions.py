"""The ten subset-list description formats.

A :class:`Description` is the persistent artifact: a kind tag, a ground
set size, a canonically ordered list of subset masks, and where the kind
requires it a rank per set or a matroid rank in the header.  This module
owns the text format, the decoding rules that turn a description into a
queryable :class:`~matroidkit.core.MatroidView`, exhaustive re-encoding,
size measurement and semantic equality.

Text format (UTF-8, LF)::

    matroid <kind> n=<n>[ r=<r>]
    <bitstring>[:<rank>]
    ...

``#`` starts a comment line, blank lines are ignored, and the leftmost
bitstring character is element 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import tables
from .bitsets import check_ground, check_mask, elements, format_bits, full_mask, parse_bits
from .core import MatroidView

KINDS = (
    "rank",
    "independent",
    "spanning",
    "bases",
    "flats",
    "circuits",
    "hyperplanes",
    "nsc",
    "dephyp",
    "cyclicflats",
)

#: Kinds whose lines carry a per-set rank annotation.
PER_SET_RANK_KINDS = frozenset({"rank", "cyclicflats"})
#: Kinds whose header carries the matroid rank.
HEADER_RANK_KINDS = frozenset({"nsc", "dephyp"})


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Description:
    kind: str
    n: int
    sets: Tuple[int, ...]
    set_ranks: Optional[Tuple[int, ...]] = None
    r: Optional[int] = None


@dataclass(frozen=True)
class SizeMeasure:
    listed_sets: int
    cells: int
    header_bits: int


def description(
    kind: str,
    n: int,
    sets: Sequence[int],
    set_ranks: Optional[Sequence[int]] = None,
    r: Optional[int] = None,
) -> Description:
    """Build a structurally checked, canonically ordered description.

    Sets are sorted by (cardinality, numeric mask value); rank
    annotations follow their sets.  Duplicates and missing or spurious
    rank data are structural errors.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown description kind {kind!r}")
    check_ground(n)
    sets = [int(m) for m in sets]
    for m in sets:
        check_mask(m, n)
    if len(set(sets)) != len(sets):
        raise ValueError("duplicate set in description")
    if kind in PER_SET_RANK_KINDS:
        if set_ranks is None or len(set_ranks) != len(sets):
            raise ValueError(f"kind {kind!r} needs one rank per listed set")
        set_ranks = [int(v) for v in set_ranks]
        for v in set_ranks:
            if not 0 <= v <= n:
                raise ValueError(f"set rank {v} outside [0, {n}]")
    elif set_ranks is not None:
        raise ValueError(f"kind {kind!r} does not take per-set ranks")
    if kind in HEADER_RANK_KINDS:
        if r is None or not 0 <= r <= n:
            raise ValueError(f"kind {kind!r} needs a matroid rank in [0, {n}]")
    elif r is not None:
        raise ValueError(f"kind {kind!r} does not take a header rank")
    if kind == "rank" and len(sets) != 1 << n:
        raise ValueError(
            f"rank table lists {len(sets)} subsets, expected {1 << n}"
        )

    order = sorted(range(len(sets)), key=lambda i: (sets[i].bit_count(), sets[i]))
    canon_sets = tuple(sets[i] for i in order)
    canon_ranks = tuple(set_ranks[i] for i in order) if set_ranks is not None else None
    return Description(kind, n, canon_sets, canon_ranks, r)


# -- text format ---------------------------------------------------------


def parse(text) -> Description:
    """Parse the text format; structural validation only."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    header = None
    kind = n = r = None
    sets: List[int] = []
    ranks: List[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            fields = line.split()
            if len(fields) < 3 or fields[0] != "matroid":
                raise ParseError("expected header 'matroid <kind> n=<n>[ r=<r>]'", lineno)
            kind = fields[1]
            if kind not in KINDS:
                raise ParseError(f"unknown kind {kind!r}", lineno)
            opts = {}
            for field in fields[2:]:
                key, _, value = field.partition("=")
                if key not in ("n", "r") or not value:
                    raise ParseError(f"bad header field {field!r}", lineno)
                try:
                    opts[key] = int(value)
                except ValueError:
                    raise ParseError(f"bad header field {field!r}", lineno) from None
            if "n" not in opts:
                raise ParseError("header is missing n=<n>", lineno)
            n = opts["n"]
            r = opts.get("r")
            if (r is not None) != (kind in HEADER_RANK_KINDS):
                raise ParseError(f"kind {kind!r} and header rank do not match", lineno)
            header = lineno
            continue
        bits, sep, annot = line.partition(":")
        bits = bits.strip()
        if len(bits) != n:
            raise ParseError(f"bitstring of length {len(bits)}, expected {n}", lineno)
        try:
            mask = parse_bits(bits)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if mask in sets:
            raise ParseError(f"duplicate set {bits}", lineno)
        if kind in PER_SET_RANK_KINDS:
            if not sep:
                raise ParseError(f"kind {kind!r} requires '<bits>:<rank>' lines", lineno)
            try:
                ranks.append(int(annot.strip()))
            except ValueError:
                raise ParseError(f"bad rank annotation {annot!r}", lineno) from None
        elif sep:
            raise ParseError(f"kind {kind!r} lines must not carry ranks", lineno)
        sets.append(mask)
    if header is None:
        raise ParseError("empty input", 1)
    try:
        return description(kind, n, sets, ranks if kind in PER_SET_RANK_KINDS else None, r)
    except ValueError as exc:
        raise ParseError(str(exc), header) from None


def serialize(desc: Description) -> str:
    """Canonical text; ``parse(serialize(d)) == d`` bit-exactly."""
    header = f"matroid {desc.kind} n={desc.n}"
    if desc.r is not None:
        header += f" r={desc.r}"
    lines = [header]
    for i, mask in enumerate(desc.sets):
        line = format_bits(mask, desc.n)
        if desc.set_ranks is not None:
            line += f":{desc.set_ranks[i]}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def size_of(desc: Description) -> SizeMeasure:
    """Listed-set count and the n*i cell measure; the header is costed
    separately and excluded from the cells."""
    header = f"matroid {desc.kind} n={desc.n}"
    if desc.r is not None:
        header += f" r={desc.r}"
    i = len(desc.sets)
    return SizeMeasure(listed_sets=i, cells=desc.n * i, header_bits=8 * len(header))


# -- decoding ------------------------------------------------------------


def _minimal(sets: Sequence[int]) -> List[int]:
    return [c for c in sets if not any(o != c and o & c == o for o in sets)]


def _maximal(sets: Sequence[int]) -> List[int]:
    return [c for c in sets if not any(o != c and o & c == c for o in sets)]


def _subset_of_some(a: int, family: Sequence[int]) -> bool:
    return any(a & b == a for b in family)


def _contains_some(a: int, family: Sequence[int]) -> bool:
    return any(a & c == c for c in family)


def _flat_heights(flat_list: Sequence[int]) -> Dict[int, int]:
    # longest chain below each flat; equals its rank in a matroid lattice
    heights: Dict[int, int] = {}
    for f in sorted(flat_list, key=lambda m: (m.bit_count(), m)):
        below = [heights[g] for g in heights if g != f and g & f == g]
        heights[f] = 1 + max(below) if below else 0
    return heights


def to_view(desc: Description) -> MatroidView:
    """Decode a description into a queryable view.

    Each kind gets its own decoding rule; hyperplane-side kinds are
    routed through the dual (the circuits of the dual are the
    complements of the hyperplanes).
    """
    n = desc.n
    full = full_mask(n)
    name = f"{desc.kind}[n={n}]"
    kind = desc.kind

    if kind == "rank":
        table = np.zeros(1 << n, dtype=np.int8)
        for mask, rk in zip(desc.sets, desc.set_ranks):
            table[mask] = rk
        return MatroidView(n, rank=lambda a: int(table[a]), desc=desc, name=name)

    if kind == "independent":
        listed = frozenset(desc.sets)
        return MatroidView(n, indep=lambda a: a in listed, desc=desc, name=name)

    if kind in ("spanning", "bases"):
        if not desc.sets:
            raise ValueError(f"{kind} description lists no sets")
        bases = _minimal(desc.sets) if kind == "spanning" else list(desc.sets)
        return MatroidView(
            n, indep=lambda a: _subset_of_some(a, bases), desc=desc, name=name
        )

    if kind == "flats":
        if full not in desc.sets:
            raise ValueError("flats description does not list the ground set")
        flat_list = list(desc.sets)
        heights = _flat_heights(flat_list)

        def close(a: int) -> int:
            out = full
            for f in flat_list:
                if a & f == a:
                    out &= f
            return out

        return MatroidView(
            n, rank=lambda a: heights[close(a)], desc=desc, name=name
        )

    if kind == "circuits":
        circuits = list(desc.sets)
        return MatroidView(
            n, indep=lambda a: not _contains_some(a, circuits), desc=desc, name=name
        )

    if kind == "nsc":
        circuits = list(desc.sets)
        r = desc.r
        return MatroidView(
            n,
            indep=lambda a: a.bit_count() <= r and not _contains_some(a, circuits),
            desc=desc,
            name=name,
        )

    if kind in ("hyperplanes", "dephyp"):
        dual_circuits = [full & ~h for h in desc.sets]
        if kind == "hyperplanes":
            dual = MatroidView(
                n, indep=lambda a: not _contains_some(a, dual_circuits)
            )
        else:
            dual_r = n - desc.r
            dual = MatroidView(
                n,
                indep=lambda a: a.bit_count() <= dual_r
                and not _contains_some(a, dual_circuits),
            )
        dual_rank = dual.full_rank

        def indep(a: int) -> bool:
            # A is independent iff E - A spans the dual
            return dual.rank(full & ~a) == dual_rank

        return MatroidView(n, indep=indep, desc=desc, name=name)

    if kind == "cyclicflats":
        pairs = list(zip(desc.sets, desc.set_ranks))
        if not pairs:
            raise ValueError("cyclic-flats description lists no sets")

        def rank(a: int) -> int:
            return min(rz + (a & ~z).bit_count() for z, rz in pairs)

        return MatroidView(n, rank=rank, desc=desc, name=name)

    raise ValueError(f"unknown description kind {kind!r}")


def encode_from_oracle(view: MatroidView, kind: str) -> Description:
    """Exhaustively re-encode a view as any kind, by classifying every
    subset against the kind's defining predicate."""
    if kind not in KINDS:
        raise ValueError(f"unknown description kind {kind!r}")
    masks = tables.family_masks(view, "independent" if kind == "rank" else kind)
    if kind == "rank":
        rank = tables.rank_table(view)
        all_masks = list(range(1 << view.n))
        all_masks.sort(key=lambda m: (m.bit_count(), m))
        return description(kind, view.n, all_masks, [int(rank[m]) for m in all_masks])
    if kind == "cyclicflats":
        rank = tables.rank_table(view)
        return description(kind, view.n, masks, [int(rank[m]) for m in masks])
    if kind in HEADER_RANK_KINDS:
        return description(kind, view.n, masks, r=view.full_rank)
    return description(kind, view.n, masks)


def semantically_equal(a: Description, b: Description) -> bool:
    """True iff the two descriptions induce the same rank function."""
    if a.n != b.n:
        raise ValueError(f"ground sets differ: {a.n} vs {b.n}")
    return tables.views_equal(to_view(a), to_view(b))


# -- validation ----------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    checks: Tuple[Tuple[str, bool, str], ...]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    @property
    def failures(self) -> Tuple[str, ...]:
        return tuple(f"{name}: {detail}" for name, passed, detail in self.checks if not passed)

    def __str__(self) -> str:
        lines = []
        for name, passed, detail in self.checks:
            status = "ok" if passed else "FAIL"
            lines.append(f"{status:4} {name}" + (f" ({detail})" if detail else ""))
        return "\n".join(lines)


def _antichain_check(sets: Sequence[int], n: int):
    for i, a in enumerate(sets):
        for b in sets[i + 1 :]:
            if a & b == a or a & b == b:
                return False, f"{format_bits(a, n)} comparable with {format_bits(b, n)}"
    return True, ""


def validate(desc: Description) -> ValidationReport:
    """Kind-specific axiom checks plus a decode/re-encode round trip.

    Never raises; every problem becomes a failed check in the report.
    """
    checks: List[Tuple[str, bool, str]] = []
    n, full = desc.n, full_mask(desc.n)
    sets = desc.sets

    def add(name: str, passed: bool, detail: str = ""):
        checks.append((name, bool(passed), detail if not passed else ""))

    kind = desc.kind
    if kind == "bases":
        add("bases-nonempty", bool(sets))
        if sets:
            cards = {b.bit_count() for b in sets}
            add("bases-equicardinal", len(cards) == 1, f"cardinalities {sorted(cards)}")
            ok, witness = True, ""
            listed = set(sets)
            for b1 in sets:
                for b2 in sets:
                    for e in elements(b1 & ~b2):
                        if not any(
                            (b1 & ~(1 << e)) | (1 << f) in listed
                            for f in elements(b2 & ~b1)
                        ):
                            ok, witness = False, (
                                f"no exchange for {e} out of {format_bits(b1, n)}"
                                f" into {format_bits(b2, n)}"
                            )
                if not ok:
                    break
            add("bases-exchange", ok, witness)
    elif kind in ("circuits", "nsc"):
        add("circuits-nonempty-sets", all(c for c in sets))
        ok, witness = _antichain_check(sets, n)
        add("circuits-antichain", ok, witness)
        if kind == "nsc":
            add(
                "nsc-sizes",
                all(c.bit_count() <= desc.r for c in sets),
                f"listed circuit larger than rank {desc.r}",
            )
    elif kind in ("hyperplanes", "dephyp"):
        add("hyperplanes-proper", all(h != full for h in sets) or n == 0)
        ok, witness = _antichain_check(sets, n)
        add("hyperplanes-antichain", ok, witness)
    elif kind == "flats":
        add("flats-contain-ground-set", full in sets)
        ok, witness = True, ""
        listed = set(sets)
        for i, f1 in enumerate(sets):
            for f2 in sets[i + 1 :]:
                if f1 & f2 not in listed:
                    ok, witness = False, (
                        f"intersection of {format_bits(f1, n)} and"
                        f" {format_bits(f2, n)} not listed"
                    )
                    break
            if not ok:
                break
        add("flats-intersection-closed", ok, witness)
    elif kind == "independent":
        add("independent-contains-empty", 0 in sets)
        listed = set(sets)
        ok = all(a & ~(1 << e) in listed for a in sets for e in elements(a))
        add("independent-hereditary", ok)
        ok, witness = True, ""
        for a in sets:
            for b in sets:
                if a.bit_count() < b.bit_count():
                    if not any((a | (1 << e)) in listed for e in elements(b & ~a)):
                        ok, witness = False, (
                            f"no augmentation of {format_bits(a, n)} from {format_bits(b, n)}"
                        )
        add("independent-exchange", ok, witness)
    elif kind == "spanning":
        add("spanning-contains-ground-set", full in sets)
        listed = set(sets)
        ok = all(
            a | (1 << e) in listed for a in sets for e in elements(full & ~a)
        )
        add("spanning-upward-closed", ok)
    elif kind == "rank":
        table = {m: rk for m, rk in zip(sets, desc.set_ranks)}
        add("rank-complete", len(table) == 1 << n)
        if len(table) == 1 << n:
            add("rank-empty-set", table[0] == 0)
            ok, witness = True, ""
            for a in range(1 << n):
                for e in range(n):
                    if a >> e & 1:
                        continue
                    step = table[a | (1 << e)] - table[a]
                    if step not in (0, 1):
                        ok, witness = False, (
                            f"rank step {step} adding {e} to {format_bits(a, n)}"
                        )
                        break
                if not ok:
                    break
            add("rank-unit-increase", ok, witness)
            ok, witness = True, ""
            for a in range(1 << n):
                outside = [e for e in range(n) if not a >> e & 1]
                for i, e in enumerate(outside):
                    for f in outside[i + 1 :]:
                        be, bf = 1 << e, 1 << f
                        if table[a | be] + table[a | bf] < table[a | be | bf] + table[a]:
                            ok, witness = False, (
                                f"submodularity fails at {format_bits(a, n)}"
                                f" with elements {e}, {f}"
                            )
                            break
                    if not ok:
                        break
                if not ok:
                    break
            add("rank-submodular", ok, witness)
    elif kind == "cyclicflats":
        table = dict(zip(desc.sets, desc.set_ranks))
        ok = all(rk <= z.bit_count() for z, rk in table.items())
        add("cyclicflats-rank-bounds", ok)
        try:
            view = to_view(desc)
            ok, witness = True, ""
            for z, rk in table.items():
                if view.rank(z) != rk:
                    ok, witness = False, (
                        f"listed rank {rk} of {format_bits(z, n)} is not reproduced"
                    )
                    break
            add("cyclicflats-ranks-consistent", ok, witness)
            ok, witness = True, ""
            for z1 in desc.sets:
                for z2 in desc.sets:
                    join = view.closure(z1 | z2)
                    if join not in table:
                        ok, witness = False, (
                            f"join of {format_bits(z1, n)} and"
                            f" {format_bits(z2, n)} not listed"
                        )
                        break
                if not ok:
                    break
            add("cyclicflats-join-closed", ok, witness)
        except Exception as exc:  # report, never abort
            add("cyclicflats-decodable", False, str(exc))

    try:
        view = to_view(desc)
        round_trip = encode_from_oracle(view, kind)
        add(
            "round-trip",
            round_trip == desc,
            "decode/re-encode does not reproduce the description",
        )
    except Exception as exc:
        add("round-trip", False, f"decoding failed: {exc}")

    return ValidationReport(tuple(checks))
