"""Free-group words: parsing, free reduction, admissibility, evaluation.

Surface syntax: a word is a whitespace- (or ``*``-) separated sequence of
terms ``x<i>`` or ``x<i>^<e>`` with generator index i >= 1 and nonzero
exponent e, e.g. ``"x1 x2 x1^-1 x2^-1"``.  Parsed words are kept freely
reduced; the empty word is the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError

MAX_EXPONENT = 2**63 - 1

_TOKEN = re.compile(r"x(\d+)(?:\^([+-]?\d+))?", re.ASCII)


def reduce_letters(letters) -> tuple[tuple[int, int], ...]:
    """Freely reduce a (generator, exponent) sequence by merging neighbours."""
    stack: list[list[int]] = []
    for gen, exp in letters:
        if gen < 1:
            raise ValueError(f"generator index must be >= 1, got {gen}")
        if exp == 0:
            raise ValueError("zero exponent")
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return tuple((g, e) for g, e in stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; ``letters`` are (generator, exponent) pairs."""

    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        reduced = reduce_letters(self.letters)
        if reduced != tuple(self.letters):
            object.__setattr__(self, "letters", reduced)
        for _, e in self.letters:
            if abs(e) > MAX_EXPONENT:
                raise ValueError("exponent exceeds 63-bit range")

    @property
    def rank(self) -> int:
        return max((g for g, _ in self.letters), default=0)

    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self) -> str:
        return " ".join(
            f"x{g}" if e == 1 else f"x{g}^{e}" for g, e in self.letters
        )

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)


IDENTITY_WORD = Word(())


def parse(text: str) -> Word:
    """Parse the surface syntax; raises ParseError with the offending position."""
    letters = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace() or ch == "*":
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected input at position {pos}: {text[pos:pos+8]!r}", pos)
        gen = int(m.group(1))
        if gen < 1:
            raise ParseError(f"generator index must be >= 1 at position {pos}", pos)
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp == 0:
            raise ParseError(f"zero exponent at position {pos}", pos)
        if abs(exp) > MAX_EXPONENT:
            raise ParseError(f"exponent out of range at position {pos}", pos)
        letters.append((gen, exp))
        pos = m.end()
    return Word(tuple(letters))


def commutator_word() -> Word:
    return parse("x1 x2 x1^-1 x2^-1")


def power_word(m1: int, m2: int) -> Word:
    return Word(((1, m1), (2, m2)))


def is_admissible(w: Word) -> bool:
    """Every occurring generator appears exactly twice: once with exponent
    +1 and once with exponent -1 (checked on the reduced form)."""
    seen: dict[int, list[int]] = {}
    for g, e in w.letters:
        seen.setdefault(g, []).append(e)
    return bool(seen) and all(sorted(v) == [-1, 1] for v in seen.values())


def power_word_exponents(w: Word) -> tuple[int, int] | None:
    """(m1, m2) when w is literally x1^m1 x2^m2 with positive exponents."""
    if (
        len(w.letters) == 2
        and w.letters[0][0] == 1
        and w.letters[1][0] == 2
        and w.letters[0][1] > 0
        and w.letters[1][1] > 0
    ):
        return w.letters[0][1], w.letters[1][1]
    return None


def evaluate(w: Word, assignment: dict, group):
    """Image of w under the substitution homomorphism into ``group``.

    ``assignment`` maps generator indices to group elements and must cover
    every generator occurring in w.
    """
    acc = group.identity
    for g, e in w.letters:
        if g not in assignment:
            raise KeyError(f"no assignment for generator x{g}")
        acc = group.mult(acc, group.power(assignment[g], e))
    return acc
