"""Words in a free group, stored as sequences of signed generator indices.

A letter ``i > 0`` stands for the generator ``X_i`` and ``-i`` for its
inverse.  Three input syntaxes are accepted by :func:`parse_word`:

* letter syntax over ``a..z``, uppercase meaning inverse: ``"aabBc"``
* bracketed integer lists: ``"[1, 2, -3, 1]"``
* the same with a ``Word`` prefix: ``"Word[1,2,-3,1]"``

Words are stored verbatim on parse; free reduction is a separate,
caller-visible operation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "FreeWord",
    "DegreeVector",
    "WordError",
    "parse_word",
    "to_letters",
    "invert",
    "free_reduce",
    "concat",
    "cyclic_min",
    "degree",
]

_LETTER_RE = re.compile(r"[a-zA-Z]+\Z")
_INT_LIST_RE = re.compile(r"\s*(?:Word)?\s*\[(?P<body>[^\]]*)\]\s*\Z")


class WordError(ValueError):
    """Raised for malformed word text or out-of-range letters."""


@dataclass(frozen=True)
class FreeWord:
    """A word in the free group of rank ``rank``.

    ``letters`` is a tuple of nonzero integers with ``|letter| <= rank``.
    Instances are immutable and hashable.
    """

    letters: tuple[int, ...]
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise WordError(f"rank must be positive, got {self.rank}")
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if x == 0:
                raise WordError("letter 0 is not a generator index")
            if abs(x) > self.rank:
                raise WordError(f"letter {x} exceeds rank {self.rank}")

    def __len__(self):
        return len(self.letters)

    def is_reduced(self) -> bool:
        return all(a != -b for a, b in zip(self.letters, self.letters[1:]))

    def __str__(self):
        if self.rank <= 26:
            return to_letters(self) or "<empty>"
        return "[" + ",".join(str(x) for x in self.letters) + "]"


@dataclass(frozen=True)
class DegreeVector:
    """Abelianized exponent vector of a word, with its mod-2 reduction."""

    entries: tuple[int, ...]
    mod2: tuple[int, ...]

    def __post_init__(self):
        if tuple(e % 2 for e in self.entries) != tuple(self.mod2):
            raise ValueError("mod2 vector inconsistent with entries")

    def __add__(self, other: "DegreeVector") -> "DegreeVector":
        entries = tuple(a + b for a, b in zip(self.entries, other.entries))
        return DegreeVector(entries, tuple(e % 2 for e in entries))

    def is_even(self) -> bool:
        return not any(self.mod2)


def parse_word(text: str, rank: int) -> FreeWord:
    """Parse a word in any of the three supported syntaxes.

    The word is returned verbatim (no free reduction).

    >>> parse_word("Word[1,2,-3,1]", 3).letters
    (1, 2, -3, 1)
    >>> parse_word("aabbaaBaB", 2).letters
    (1, 1, 2, 2, 1, 1, -2, 1, -2)
    >>> parse_word("", 2).letters
    ()
    """
    stripped = text.strip()
    if stripped == "":
        return FreeWord((), rank)
    m = _INT_LIST_RE.match(stripped)
    if m is not None:
        body = m.group("body").strip()
        letters = []
        if body:
            for piece in body.split(","):
                piece = piece.strip()
                try:
                    letters.append(int(piece))
                except ValueError:
                    raise WordError(f"bad integer {piece!r} in {text!r}") from None
        return FreeWord(tuple(letters), rank)
    if "[" in stripped or "]" in stripped:
        raise WordError(f"malformed brackets in {text!r}")
    if _LETTER_RE.match(stripped):
        letters = []
        for ch in stripped:
            idx = ord(ch.lower()) - ord("a") + 1
            if idx > rank:
                raise WordError(f"letter {ch!r} exceeds rank {rank}")
            letters.append(idx if ch.islower() else -idx)
        return FreeWord(tuple(letters), rank)
    bad = next(ch for ch in stripped if not ch.isalpha())
    raise WordError(f"unknown character {bad!r} in word {text!r}")


def to_letters(w: FreeWord) -> str:
    """Render a word in letter syntax (rank must be at most 26)."""
    if w.rank > 26:
        raise WordError("letter syntax supports rank <= 26 only")
    out = []
    for x in w.letters:
        ch = chr(ord("a") + abs(x) - 1)
        out.append(ch if x > 0 else ch.upper())
    return "".join(out)


def invert(w: FreeWord) -> FreeWord:
    """Group inverse: reversed sequence with negated letters."""
    return FreeWord(tuple(-x for x in reversed(w.letters)), w.rank)


def free_reduce(w: FreeWord) -> FreeWord:
    """Delete adjacent inverse pairs until none remain."""
    stack: list[int] = []
    for x in w.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return FreeWord(tuple(stack), w.rank)


def concat(u: FreeWord, v: FreeWord) -> FreeWord:
    """Concatenate two words of equal rank and freely reduce the result."""
    if u.rank != v.rank:
        raise WordError(f"rank mismatch: {u.rank} != {v.rank}")
    return free_reduce(FreeWord(u.letters + v.letters, u.rank))


def _min_rotation(letters: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically minimal rotation; earliest offset wins ties."""
    if len(letters) < 2:
        return letters
    best = letters
    for i in range(1, len(letters)):
        rot = letters[i:] + letters[:i]
        if rot < best:
            best = rot
    return best


def cyclic_min(w: FreeWord) -> FreeWord:
    """Canonical cyclic rotation of a positive word.

    Returns the rotation that is lexicographically minimal on letter
    values; all rotations of ``w`` map to the same output.

    >>> cyclic_min(FreeWord((3, 1, 2), 3)).letters
    (1, 2, 3)
    """
    if any(x < 0 for x in w.letters):
        raise WordError("cyclic_min requires a positive word")
    return FreeWord(_min_rotation(w.letters), w.rank)


def degree(w: FreeWord, rank: int | None = None) -> DegreeVector:
    """Abelianized degree vector of ``w`` (length ``rank``)."""
    r = w.rank if rank is None else rank
    if r < w.rank:
        raise WordError(f"rank {r} below word rank {w.rank}")
    entries = [0] * r
    for x in w.letters:
        entries[abs(x) - 1] += 1 if x > 0 else -1
    return DegreeVector(tuple(entries), tuple(e % 2 for e in entries))
