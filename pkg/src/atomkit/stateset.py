"""Fixed-width bitsets over state indices."""

from __future__ import annotations

from typing import Iterable, Iterator


class StateSet:
    """An immutable set of state indices ``0 <= i < width`` stored as an int.

    Bit ``i`` of :attr:`bits` is set iff state ``i`` is a member.  Sets with
    the same bits but different widths compare unequal, because complement
    depends on the ambient width.
    """

    __slots__ = ("bits", "width")

    def __init__(self, bits: int, width: int):
        if width < 0:
            raise ValueError(f"negative width {width}")
        if bits < 0 or bits >> width:
            raise ValueError(f"bits {bits:#x} do not fit width {width}")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "width", width)

    def __setattr__(self, name, value):
        raise AttributeError("StateSet is immutable")

    def __reduce__(self):
        return (StateSet, (self.bits, self.width))

    @classmethod
    def of(cls, members: Iterable[int], width: int) -> "StateSet":
        bits = 0
        for i in members:
            if not 0 <= i < width:
                raise ValueError(f"state {i} outside width {width}")
            bits |= 1 << i
        return cls(bits, width)

    @classmethod
    def empty(cls, width: int) -> "StateSet":
        return cls(0, width)

    @classmethod
    def full(cls, width: int) -> "StateSet":
        return cls((1 << width) - 1, width)

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.width and (self.bits >> i) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check(self, other: "StateSet") -> None:
        if not isinstance(other, StateSet):
            raise TypeError(f"expected StateSet, got {type(other).__name__}")
        if other.width != self.width:
            raise ValueError(f"width mismatch: {self.width} vs {other.width}")

    def __or__(self, other: "StateSet") -> "StateSet":
        self._check(other)
        return StateSet(self.bits | other.bits, self.width)

    def __and__(self, other: "StateSet") -> "StateSet":
        self._check(other)
        return StateSet(self.bits & other.bits, self.width)

    def __sub__(self, other: "StateSet") -> "StateSet":
        self._check(other)
        return StateSet(self.bits & ~other.bits, self.width)

    def complement(self) -> "StateSet":
        return StateSet(((1 << self.width) - 1) & ~self.bits, self.width)

    def issubset(self, other: "StateSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, StateSet):
            return NotImplemented
        return self.bits == other.bits and self.width == other.width

    def __hash__(self) -> int:
        return hash((self.bits, self.width))

    def __lt__(self, other: "StateSet") -> bool:
        # Ordering by encoding, used for deterministic report order.
        self._check(other)
        return self.bits < other.bits

    def label(self) -> str:
        """Subscript string as used for atom names: ``"012"``, or ``"{}"`` when empty.

        Indices above 9 are joined with dots so that the string stays unambiguous.
        """
        members = list(self)
        if not members:
            return "{}"
        if self.width <= 10:
            return "".join(str(i) for i in members)
        return ".".join(str(i) for i in members)

    def __repr__(self) -> str:
        return f"StateSet({{{', '.join(map(str, self))}}}, width={self.width})"
