from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .graph import bits


class SetFamily:
    """A finite family of vertex sets over ``0..ground_n-1``.

    Members are bitmasks, deduplicated and kept in ascending numeric order.
    ``0`` (the empty set) is a member only if it was supplied.
    """

    __slots__ = ("ground_n", "members", "_index")

    def __init__(self, ground_n: int, members: Iterable[int]):
        uniq = frozenset(members)
        full = (1 << ground_n) - 1
        for m in uniq:
            if m < 0 or m & ~full:
                raise ValueError(f"set {bits(m)} is not within 0..{ground_n - 1}")
        self.ground_n = ground_n
        self.members: tuple[int, ...] = tuple(sorted(uniq))
        self._index = uniq

    @classmethod
    def from_lists(cls, ground_n: int, sets: Iterable[Iterable[int]]) -> SetFamily:
        out = []
        for s in sets:
            mask = 0
            for v in s:
                mask |= 1 << v
            out.append(mask)
        return cls(ground_n, out)

    def __contains__(self, mask: int) -> bool:
        return mask in self._index

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.ground_n == other.ground_n and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.ground_n, self.members))

    def __repr__(self) -> str:
        return f"SetFamily({self.ground_n}, {[bits(m) for m in self.members]})"

    def by_size(self) -> dict[int, list[int]]:
        levels: dict[int, list[int]] = {}
        for m in self.members:
            levels.setdefault(m.bit_count(), []).append(m)
        return levels

    def as_lists(self) -> list[list[int]]:
        return [bits(m) for m in self.members]

    def serialize(self, labels: Optional[list[str]] = None) -> str:
        """One set per line, sorted, comma separated; the empty set is an
        empty line."""
        lines = []
        for m in self.members:
            vs = bits(m)
            lines.append(",".join(labels[v] if labels else str(v) for v in vs))
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def parse(cls, ground_n: int, text: str, labels: Optional[list[str]] = None) -> SetFamily:
        index = {lab: i for i, lab in enumerate(labels)} if labels else None
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        sets = []
        for line in lines:
            items = [x for x in line.split(",") if x != ""]
            sets.append([index[x] if index else int(x) for x in items])
        return cls.from_lists(ground_n, sets)
