"""Dimension-preserving extensions of Fuchsian signatures.

A Fuchsian group whose signature admits no proper finite-index extension of
equal Teichmueller dimension is *finitely maximal*: its generic deformations
are not contained in any larger Fuchsian group.  The signatures that do
admit such an extension form a classical finite list of shapes (normal
inclusions plus a handful of sporadic and parametric non-normal ones).
This module embeds that list.

The table is data, not a theorem we re-prove: its provenance is the
standard classification of non-maximal signatures (see README).  For
auditability it can be overridden with an explicit pair file, one record
per line::

    h;m1,...,mr -> h';n1,...,ns ; index

with ``#`` comments and blank lines ignored.

Entries are consumed as plain ``(h, periods)`` tuples so this module has no
dependency on the rest of the package.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction


def _area(h: int, periods: tuple[int, ...]) -> Fraction:
    a = Fraction(2 * h - 2)
    for m in periods:
        a += Fraction(m - 1, m)
    return a


def _hyperbolic(h: int, periods: tuple[int, ...]) -> bool:
    return _area(h, periods) > 0


def _dim(h: int, periods: tuple[int, ...]) -> int:
    return 6 * h - 6 + 2 * len(periods)


@dataclass(frozen=True)
class Extension:
    """One extension pair: ``smaller`` is generically contained in ``larger``."""

    smaller: tuple[int, tuple[int, ...]]
    larger: tuple[int, tuple[int, ...]]
    index: int
    normal: bool
    rule: str

    def check(self) -> None:
        hs, ps = self.smaller
        hl, pl = self.larger
        if not (_hyperbolic(hs, ps) and _hyperbolic(hl, pl)):
            raise ValueError("non-hyperbolic side in extension %s" % (self,))
        if _dim(hs, ps) != _dim(hl, pl):
            raise ValueError("extension %s does not preserve dimension" % (self,))
        if _area(hs, ps) != self.index * _area(hl, pl):
            raise ValueError("index of %s is inconsistent with areas" % (self,))


def _sig(h: int, *periods: int) -> tuple[int, tuple[int, ...]]:
    return (h, tuple(sorted(periods)))


def _instantiations(h: int, periods: tuple[int, ...]) -> list[Extension]:
    """All table rows whose smaller member matches ``(h; periods)``."""
    out: list[Extension] = []
    ps = tuple(sorted(periods))
    r = len(ps)

    def emit(larger_h: int, larger_periods: tuple[int, ...], index: int, normal: bool, rule: str) -> None:
        ext = Extension((h, ps), (larger_h, tuple(sorted(larger_periods))), index, normal, rule)
        ext.check()
        out.append(ext)

    if h == 2 and r == 0:
        emit(0, (2, 2, 2, 2, 2, 2), 2, True, "2;_in_0;2^6")
    if h == 1 and r == 2 and ps[0] == ps[1]:
        t = ps[0]
        emit(0, (2, 2, 2, 2, t), 2, True, "1;t,t_in_0;2,2,2,2,t")
    if h == 1 and r == 1:
        t = ps[0]
        emit(0, (2, 2, 2, 2 * t), 2, True, "1;t_in_0;2,2,2,2t")
    if h == 0 and r == 4 and len(set(ps)) == 1 and ps[0] >= 3:
        t = ps[0]
        emit(0, (2, 2, 2, t), 4, True, "0;t^4_in_0;2,2,2,t")
    if h == 0 and r == 4:
        # shape (t,t,u,u), including t == u
        if ps[0] == ps[1] and ps[2] == ps[3]:
            t, u = ps[0], ps[2]
            if _hyperbolic(0, (2, 2, t, u)):
                emit(0, (2, 2, t, u), 2, True, "0;t,t,u,u_in_0;2,2,t,u")
    if h == 0 and r == 3:
        counts: dict[int, int] = {}
        for m in ps:
            counts[m] = counts.get(m, 0) + 1
        # (t,t,u) -> (2,t,2u), u may equal t
        for t, c in counts.items():
            if c >= 2:
                u = ps[0] + ps[1] + ps[2] - 2 * t
                if _hyperbolic(0, (2, t, 2 * u)):
                    emit(0, (2, t, 2 * u), 2, True, "0;t,t,u_in_0;2,t,2u")
        if len(set(ps)) == 1:
            t = ps[0]
            if t >= 4:
                emit(0, (3, 3, t), 3, True, "0;t,t,t_in_0;3,3,t")
                emit(0, (2, 3, 2 * t), 6, True, "0;t,t,t_in_0;2,3,2t")
        # sporadic non-normal rows
        sporadic = {
            (7, 7, 7): ((2, 3, 7), 24),
            (2, 7, 7): ((2, 3, 7), 9),
            (3, 3, 7): ((2, 3, 7), 8),
            (4, 8, 8): ((2, 3, 8), 12),
            (3, 8, 8): ((2, 3, 8), 10),
            (9, 9, 9): ((2, 3, 9), 12),
            (4, 4, 5): ((2, 4, 5), 6),
        }
        if ps in sporadic:
            larger, idx = sporadic[ps]
            emit(0, larger, idx, False, "sporadic_%s" % ",".join(map(str, ps)))
        # parametric non-normal families
        a, b, c = ps
        if b == c and b == 4 * a and a >= 2:
            emit(0, (2, 3, 4 * a), 6, False, "0;n,4n,4n_in_0;2,3,4n")
        if b == c and b == 2 * a and a >= 3:
            emit(0, (2, 4, 2 * a), 4, False, "0;n,2n,2n_in_0;2,4,2n")
        if a == 3 and c == 3 * b and b >= 3:
            emit(0, (2, 3, 3 * b), 4, False, "0;3,n,3n_in_0;2,3,3n")
        if a == 2 and c == 2 * b and b >= 4:
            emit(0, (2, 3, 2 * b), 3, False, "0;2,n,2n_in_0;2,3,2n")

    # dedupe (same larger signature and index may arise from two shapes)
    seen: set[tuple] = set()
    uniq = []
    for ext in out:
        key = (ext.larger, ext.index)
        if key not in seen:
            seen.add(key)
            uniq.append(ext)
    return uniq


class ExtensionTable:
    """Query interface over the embedded (or an explicit) extension list."""

    def __init__(self, explicit: list[Extension] | None = None):
        self._explicit = explicit

    def extensions_of(self, h: int, periods: tuple[int, ...]) -> list[Extension]:
        key = (h, tuple(sorted(periods)))
        if self._explicit is not None:
            return [e for e in self._explicit if e.smaller == key]
        return _instantiations(*key)

    def tower(self, h: int, periods: tuple[int, ...], max_multiplier: int) -> list[tuple[tuple[int, tuple[int, ...]], int]]:
        """Transitive closure of extensions: ``(signature, cumulative index)`` pairs.

        Indices along a chain multiply; nodes whose cumulative index exceeds
        ``max_multiplier`` are pruned, which keeps the walk finite.
        """
        start = (h, tuple(sorted(periods)))
        seen: dict[tuple[int, tuple[int, ...]], int] = {}
        work = [(start, 1)]
        while work:
            node, mult = work.pop()
            for ext in self.extensions_of(*node):
                nxt = ext.larger
                m = mult * ext.index
                if m > max_multiplier:
                    continue
                if nxt in seen and seen[nxt] <= m:
                    continue
                seen[nxt] = m
                work.append((nxt, m))
        return sorted(seen.items())

    def content_hash(self) -> str:
        if self._explicit is None:
            return "builtin-v1"
        blob = "\n".join(
            "%s->%s;%d" % (e.smaller, e.larger, e.index) for e in sorted(
                self._explicit, key=lambda e: (e.smaller, e.larger, e.index)
            )
        )
        return hashlib.sha256(blob.encode()).hexdigest()


_DEFAULT = ExtensionTable()


def default_table() -> ExtensionTable:
    return _DEFAULT


def _parse_side(text: str) -> tuple[int, tuple[int, ...]]:
    head, sep, tail = text.strip().partition(";")
    if not sep:
        raise ValueError("bad signature %r (expected 'h;m1,...')" % text)
    tail = tail.strip()
    periods = tuple(int(p) for p in tail.split(",")) if tail else ()
    return (int(head), tuple(sorted(periods)))


def load_table(path: str) -> ExtensionTable:
    """Parse an override file into an explicit extension table."""
    rows: list[Extension] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                left, right = line.split("->")
                sig_part, index_part = right.rsplit(";", 1)
                ext = Extension(
                    smaller=_parse_side(left),
                    larger=_parse_side(sig_part),
                    index=int(index_part),
                    normal=False,
                    rule="override:%d" % lineno,
                )
                ext.check()
            except ValueError as exc:
                raise ValueError("%s:%d: %s" % (path, lineno, exc)) from exc
            rows.append(ext)
    return ExtensionTable(rows)
