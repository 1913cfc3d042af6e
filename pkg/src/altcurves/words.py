"""Cyclic curve words over the augmented dual graph, and their constraints.

A curve on either sphere of the standard position is recorded as a cyclic
word: letter P{arc} when the curve punctures an arc, letter S{crossing}{side}
when it passes a saddle channel.  A word is stored with its face trace
(faces[i] is the face occupied before letters[i] is played), so a word is a
closed walk in the dual graph.

Words are compared up to rotation and reversal; `canonicalize` picks the
lexicographically least representative (P letters sort before S letters, then
by arc / (crossing, side)).

The executable constraints are numbered the way the count arguments use them:

  2  no channel is used twice by one curve
  3  no two consecutive saddles (applied only when every curve is treated as
     innermost; see `check_configuration`)
  4  at each crossing, equally many passages through the two channels
  5  no two cyclically consecutive punctures on the same arc
  6  no saddle passage cyclically adjacent to a puncture of an arc that ends
     at that crossing
  7  no word of the form P^i S^j with j > 0
  8  at least two punctures per word
  9  word length at least 4 and even

Property 1 (each curve bounds a disk) is a modeling assumption and has no
check; property 3 is never applied by the general word check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dualgraph import AugmentedDualGraph, SaddleChannel
from .errors import PreconditionError

__all__ = [
    "Letter",
    "CurveWord",
    "CanonicalWord",
    "Violation",
    "Configuration",
    "canonicalize",
    "is_canonical",
    "word_pattern",
    "serialize_word",
    "check_word",
    "check_configuration",
    "make_configuration",
    "complexity",
    "has_consecutive_saddles",
]


@dataclass(frozen=True)
class Letter:
    """kind 'P' with an arc ref, or kind 'S' with a SaddleChannel ref."""

    kind: str
    ref: int | SaddleChannel

    @property
    def sort_key(self) -> tuple:
        if self.kind == "P":
            return (0, self.ref)
        return (1, self.ref.crossing, self.ref.side)

    def __str__(self) -> str:
        return f"{self.kind}{self.ref}"


@dataclass(frozen=True)
class CurveWord:
    """A cyclic decorated word together with its face trace."""

    letters: tuple[Letter, ...]
    faces: tuple[int, ...]

    def __post_init__(self):
        if not self.letters or len(self.letters) != len(self.faces):
            raise ValueError("a curve word needs one face per letter")

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def p_count(self) -> int:
        return sum(1 for l in self.letters if l.kind == "P")

    @property
    def s_count(self) -> int:
        return sum(1 for l in self.letters if l.kind == "S")

    def rotated(self, r: int) -> "CurveWord":
        return CurveWord(self.letters[r:] + self.letters[:r], self.faces[r:] + self.faces[:r])

    def reversed(self) -> "CurveWord":
        # walking the cycle backwards: letters in reverse order, trace
        # starting from the same face
        letters = tuple(reversed(self.letters))
        faces = (self.faces[0],) + tuple(reversed(self.faces[1:]))
        return CurveWord(letters, faces)


CanonicalWord = CurveWord  # a CurveWord fixed by `canonicalize`


def _word_key(w: CurveWord) -> tuple:
    return (tuple(l.sort_key for l in w.letters), w.faces)


def canonicalize(w: CurveWord) -> CanonicalWord:
    """Least representative over all rotations of both directions."""
    candidates = []
    for base in (w, w.reversed()):
        for r in range(len(base)):
            candidates.append(base.rotated(r))
    return min(candidates, key=_word_key)


def is_canonical(w: CurveWord) -> bool:
    return w == canonicalize(w)


def word_pattern(w: CurveWord) -> str:
    """The P/S skeleton, e.g. 'PSPS'."""
    return "".join(l.kind for l in w.letters)


def serialize_word(w: CurveWord) -> str:
    """Space-separated letters, e.g. 'P1 S3A P4 S5B'."""
    return " ".join(str(l) for l in w.letters)


@dataclass(frozen=True)
class Violation:
    """A failed constraint: property number, letter/word position, detail."""

    prop: int
    position: int
    message: str


def _assert_walk(g: AugmentedDualGraph, w: CurveWord) -> None:
    for i, letter in enumerate(w.letters):
        here, there = w.faces[i], w.faces[(i + 1) % len(w)]
        edge = g.p_edges.get(letter.ref) if letter.kind == "P" else g.s_edges.get(letter.ref)
        if edge is None or tuple(sorted((here, there))) != edge:
            raise PreconditionError(
                f"letter {letter} at position {i} does not join faces {here},{there}"
            )


def check_word(g: AugmentedDualGraph, w: CurveWord) -> list[Violation]:
    """All word-level constraint failures, in property order.

    The word must be a closed walk in `g` (PreconditionError otherwise).
    """
    _assert_walk(g, w)
    out: list[Violation] = []
    n = len(w)

    seen: dict[SaddleChannel, int] = {}
    for i, letter in enumerate(w.letters):
        if letter.kind != "S":
            continue
        if letter.ref in seen:
            out.append(Violation(2, i, f"channel {letter.ref} reused "
                                       f"(first use at {seen[letter.ref]})"))
        else:
            seen[letter.ref] = i

    for i, letter in enumerate(w.letters):
        nxt = w.letters[(i + 1) % n]
        if letter.kind == "P" and nxt.kind == "P" and letter.ref == nxt.ref:
            out.append(Violation(5, i, f"arc {letter.ref} punctured twice in a row"))

    for i, letter in enumerate(w.letters):
        nxt = w.letters[(i + 1) % n]
        pair = None
        if letter.kind == "S" and nxt.kind == "P":
            pair = (letter.ref, nxt.ref)
        elif letter.kind == "P" and nxt.kind == "S":
            pair = (nxt.ref, letter.ref)
        if pair is not None:
            channel, arc = pair
            if channel.crossing in g.arc_crossings(arc):
                out.append(Violation(6, i, f"saddle at crossing {channel.crossing} "
                                           f"adjacent to puncture of arc {arc}"))

    s_total = w.s_count
    if s_total:
        blocks = sum(
            1
            for i in range(n)
            if w.letters[i].kind == "P" and w.letters[(i + 1) % n].kind == "S"
        )
        if blocks <= 1:
            first_s = next(i for i, l in enumerate(w.letters) if l.kind == "S")
            out.append(Violation(7, first_s, "word has the shape P^i S^j"))

    if w.p_count < 2:
        out.append(Violation(8, 0, f"only {w.p_count} puncture letters"))

    if n < 4 or n % 2 == 1:
        out.append(Violation(9, 0, f"length {n} is below 4 or odd"))

    return sorted(out, key=lambda v: (v.prop, v.position))


def has_consecutive_saddles(w: CurveWord) -> bool:
    """True when some cyclically adjacent pair of letters is S,S."""
    n = len(w)
    return any(
        w.letters[i].kind == "S" and w.letters[(i + 1) % n].kind == "S"
        for i in range(n)
    )


@dataclass(frozen=True)
class Configuration:
    """Curve words on the two spheres of the standard position.

    p and s count puncture and saddle letters on the plus sphere only; c
    counts curves on both spheres.  |F| = p + s + c is the complexity.
    """

    words_plus: tuple[CanonicalWord, ...]
    words_minus: tuple[CanonicalWord, ...] = field(default=())

    @property
    def p(self) -> int:
        return sum(w.p_count for w in self.words_plus)

    @property
    def s(self) -> int:
        return sum(w.s_count for w in self.words_plus)

    @property
    def c(self) -> int:
        return len(self.words_plus) + len(self.words_minus)

    @property
    def complexity(self) -> int:
        return self.p + self.s + self.c


def complexity(cfg: Configuration) -> int:
    return cfg.complexity


def make_configuration(
    words_plus, words_minus=None, mirror: bool = False
) -> Configuration:
    """Canonical configuration: words canonicalized and sorted.

    With mirror=True the minus sphere repeats the plus words, the convention
    used by the enumerators (every saddle passes to the other sphere, and a
    disk-bounding curve family closes up symmetrically).
    """
    plus = tuple(sorted((canonicalize(w) for w in words_plus), key=_word_key))
    if mirror:
        minus = plus
    else:
        minus = tuple(sorted((canonicalize(w) for w in words_minus or ()), key=_word_key))
    return Configuration(plus, minus)


def _channel_counts(words) -> dict[int, dict[str, int]]:
    counts: dict[int, dict[str, int]] = {}
    for w in words:
        for letter in w.letters:
            if letter.kind == "S":
                per = counts.setdefault(letter.ref.crossing, {"A": 0, "B": 0})
                per[letter.ref.side] += 1
    return counts


def check_configuration(
    g: AugmentedDualGraph, cfg: Configuration, innermost_all: bool = False
) -> list[Violation]:
    """Configuration-level failures: channel balance, optional innermost rule.

    Balance (property 4) is required on each sphere separately: the two
    channels of a crossing carry one passage per saddle each.  With
    innermost_all=True, every word is additionally required to avoid
    consecutive saddles (property 3), the rule available when each curve of
    the family can be taken innermost.
    """
    out: list[Violation] = []
    for side_name, words in (("plus", cfg.words_plus), ("minus", cfg.words_minus)):
        for crossing, per in sorted(_channel_counts(words).items()):
            if per["A"] != per["B"]:
                out.append(Violation(
                    4, crossing,
                    f"{side_name} sphere: crossing {crossing} has {per['A']} passages "
                    f"through channel A but {per['B']} through B",
                ))
        if innermost_all:
            for i, w in enumerate(words):
                if has_consecutive_saddles(w):
                    out.append(Violation(3, i, f"{side_name} word {i} has consecutive saddles"))
    return out
