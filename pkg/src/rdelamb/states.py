"""Quantum numbers for hydrogenlike bound states."""

from __future__ import annotations

from dataclasses import dataclass

ORBITAL_LETTERS = "SPDFGHIK"  # l = 0 .. 7


@dataclass(frozen=True)
class State:
    """(n, l, j) with j stored as the integer 2j to avoid half-integer floats."""

    n: int
    l: int
    two_j: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0 <= self.l <= self.n - 1:
            raise ValueError("l must satisfy 0 <= l <= n-1")
        if self.two_j < 1 or self.two_j % 2 == 0:
            raise ValueError("two_j must be a positive odd integer")
        if abs(self.two_j - 2 * self.l) != 1:
            raise ValueError("j must equal l +- 1/2")

    @property
    def j(self) -> float:
        return self.two_j / 2.0

    @property
    def label(self) -> str:
        letter = ORBITAL_LETTERS[self.l] if self.l < len(ORBITAL_LETTERS) else f"(l={self.l})"
        return f"{self.n}{letter}{self.two_j}/2"


def parse_state(text: str) -> State:
    """Parse spectroscopic notation: '2S', '2P1/2', '4D5/2'.

    S states need no j suffix (j = 1/2 is forced); higher l requires one.
    """
    s = text.strip().upper().replace(" ", "")
    i = 0
    while i < len(s) and s[i].isdigit():
        i += 1
    if i == 0 or i == len(s):
        raise ValueError(f"cannot parse state {text!r}")
    n = int(s[:i])
    letter = s[i]
    if letter not in ORBITAL_LETTERS:
        raise ValueError(f"unknown orbital letter {letter!r} in {text!r}")
    l = ORBITAL_LETTERS.index(letter)
    rest = s[i + 1:]
    if not rest:
        if l != 0:
            raise ValueError(f"state {text!r} needs a j suffix, e.g. {n}{letter}{2*l+1}/2")
        two_j = 1
    else:
        if not rest.endswith("/2"):
            raise ValueError(f"j suffix must look like '3/2' in {text!r}")
        two_j = int(rest[:-2])
    return State(n, l, two_j)
