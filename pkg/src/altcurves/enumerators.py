"""Curve-configuration enumerators over the augmented dual graph.

Three layers, kept deliberately separate:

* specialized genus-2 enumerators for the two word families a genus-2 splitting
  allows: a single all-puncture 4-letter curve (PPPP) or a pair of
  puncture-saddle curves (PSPS) through opposite channels of two crossings;
* a budget-driven general enumerator for closed even words subject to the
  word and balance constraints;
* a brute-force oracle that walks every closed path up to a small length and
  filters with the public checks only, used to confirm the specialized
  results on fixtures.

Counting quotients ("three punctures determine the fourth", "two saddles
determine the pair") are applied as dedup relations after generation, never
as generation shortcuts, so the oracle can verify them.

The minus sphere of every emitted configuration mirrors the plus sphere:
each saddle passes to the other sphere and the curve family closes up
symmetrically, so the mirror is the unique completion with the same letters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .dualgraph import AugmentedDualGraph, SaddleChannel, Step
from .errors import GuardAbort, TractabilityError
from .words import (
    Configuration,
    CurveWord,
    Letter,
    canonicalize,
    check_configuration,
    check_word,
    make_configuration,
    serialize_word,
    word_pattern,
    _word_key,
)

__all__ = [
    "DEFAULT_GUARD_CAP",
    "EnumerationBudget",
    "EnumerationResult",
    "enumerate_pppp",
    "enumerate_psps_pairs",
    "enumerate_genus2",
    "enumerate_general",
    "oracle_enumerate",
    "classify_family",
    "puncture_class_representatives",
    "saddle_pair_class_representatives",
]

DEFAULT_GUARD_CAP = 10_000_000


@dataclass(frozen=True)
class EnumerationBudget:
    """Search limits for a genus-g run.

    max_punctures caps total plus-sphere punctures (also the length cap for
    all-puncture words), max_curves caps curves per sphere, max_word_length
    caps any single word, max_compressions is carried for reporting.
    """

    genus: int
    max_punctures: int
    max_curves: int
    max_word_length: int
    max_compressions: int


@dataclass(frozen=True)
class EnumerationResult:
    """Configurations plus family counts and per-property rejection tallies."""

    configurations: tuple[Configuration, ...]
    counts: dict[str, int]
    diagnostics: dict[int, int]
    visited: int

    @property
    def total(self) -> int:
        return self.counts["total"]


class _Guard:
    """Counts visited partial walks; aborts past the cap."""

    def __init__(self, cap: int):
        self.cap = cap
        self.visited = 0

    def tick(self) -> None:
        self.visited += 1
        if self.visited > self.cap:
            raise GuardAbort(self.visited, self.cap)


def _config_key(cfg: Configuration) -> tuple:
    return (
        tuple(_word_key(w) for w in cfg.words_plus),
        tuple(_word_key(w) for w in cfg.words_minus),
    )


def _channels(w: CurveWord) -> frozenset[SaddleChannel]:
    return frozenset(l.ref for l in w.letters if l.kind == "S")


def _flip(ch: SaddleChannel) -> SaddleChannel:
    return SaddleChannel(ch.crossing, "B" if ch.side == "A" else "A")


def classify_family(cfg: Configuration) -> str:
    """'pppp', 'psps_pair', or 'other' (genus-2 family shapes)."""
    if len(cfg.words_plus) == 1 and word_pattern(cfg.words_plus[0]) == "PPPP":
        return "pppp"
    if len(cfg.words_plus) == 2:
        w1, w2 = cfg.words_plus
        if word_pattern(w1) == word_pattern(w2) == "PSPS":
            ch1, ch2 = _channels(w1), _channels(w2)
            crossings = {c.crossing for c in ch1}
            if (
                len(crossings) == 2
                and {c.crossing for c in ch2} == crossings
                and ch2 == frozenset(_flip(c) for c in ch1)
            ):
                return "psps_pair"
    return "other"


# ----------------------------------------------------------------------------
# dedup quotients
# ----------------------------------------------------------------------------


def _union_find_classes(items: list, related) -> list[list]:
    parent = list(range(len(items)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if related(items[i], items[j]):
                parent[find(i)] = find(j)

    groups: dict[int, list] = {}
    for i, item in enumerate(items):
        groups.setdefault(find(i), []).append(item)
    return list(groups.values())


def puncture_class_representatives(words: list[CurveWord]) -> list[CurveWord]:
    """Quotient PPPP words by "three shared punctures determine the fourth".

    Words whose arc multisets agree in at least three of four positions are
    identified; each class is returned by its least member.
    """
    items = sorted(words, key=_word_key)

    def shares_three(w1: CurveWord, w2: CurveWord) -> bool:
        m1 = Counter(l.ref for l in w1.letters)
        m2 = Counter(l.ref for l in w2.letters)
        return sum(min(m1[a], m2[a]) for a in m1) >= 3

    classes = _union_find_classes(items, shares_three)
    return sorted((min(cls, key=_word_key) for cls in classes), key=_word_key)


def saddle_pair_class_representatives(pairs: list[tuple[CurveWord, CurveWord]]):
    """Quotient PSPS pairs by "two saddles determine the curve".

    Pairs containing words with identical channel sets are identified; each
    class is returned by its least member.
    """
    items = sorted(
        (tuple(sorted(pair, key=_word_key)) for pair in pairs),
        key=lambda p: (_word_key(p[0]), _word_key(p[1])),
    )

    def shares_channel_set(p1, p2) -> bool:
        sets1 = {_channels(w) for w in p1}
        sets2 = {_channels(w) for w in p2}
        return bool(sets1 & sets2)

    pair_key = lambda p: (_word_key(p[0]), _word_key(p[1]))
    classes = _union_find_classes(items, shares_channel_set)
    return sorted((min(cls, key=pair_key) for cls in classes), key=pair_key)


def _tally(diagnostics: dict[int, int], violations) -> None:
    for prop in {v.prop for v in violations}:
        diagnostics[prop] = diagnostics.get(prop, 0) + 1


# ----------------------------------------------------------------------------
# specialized genus-2 enumerators
# ----------------------------------------------------------------------------


def enumerate_pppp(g: AugmentedDualGraph) -> EnumerationResult:
    """All-puncture 4-letter curves, up to symmetry and the 3-puncture rule."""
    diagnostics: dict[int, int] = {}
    seen: dict[tuple, CurveWord] = {}
    for start in g.nodes:
        stack = [((), (start,))]
        while stack:
            letters, faces = stack.pop()
            here = faces[-1]
            for step in g.steps_from(here):
                if step.kind != "P":
                    continue
                if letters and letters[-1].ref == step.ref:
                    continue  # immediate re-puncture, pruned by property 5
                new_letters = letters + (Letter("P", step.ref),)
                if len(new_letters) == 4:
                    if step.dest != start or new_letters[0].ref == step.ref:
                        continue
                    word = canonicalize(CurveWord(new_letters, faces))
                    bad = check_word(g, word)
                    if bad:
                        _tally(diagnostics, bad)
                        continue
                    seen.setdefault(_word_key(word), word)
                else:
                    stack.append((new_letters, faces + (step.dest,)))

    reps = puncture_class_representatives(list(seen.values()))
    configs = tuple(make_configuration([w], mirror=True) for w in reps)
    counts = {"pppp": len(configs), "psps_pair": 0, "other": 0, "total": len(configs)}
    return EnumerationResult(configs, counts, diagnostics, visited=0)


def _psps_words(g: AugmentedDualGraph, diagnostics: dict[int, int]) -> list[CurveWord]:
    seen: dict[tuple, CurveWord] = {}
    for start in g.nodes:
        for p1 in g.steps_from(start):
            if p1.kind != "P":
                continue
            for s1 in g.steps_from(p1.dest):
                if s1.kind != "S":
                    continue
                for p2 in g.steps_from(s1.dest):
                    if p2.kind != "P":
                        continue
                    for s2 in g.steps_from(p2.dest):
                        if s2.kind != "S" or s2.dest != start:
                            continue
                        word = canonicalize(CurveWord(
                            (Letter("P", p1.ref), Letter("S", s1.ref),
                             Letter("P", p2.ref), Letter("S", s2.ref)),
                            (start, p1.dest, s1.dest, p2.dest),
                        ))
                        bad = check_word(g, word)
                        if bad:
                            _tally(diagnostics, bad)
                            continue
                        seen.setdefault(_word_key(word), word)
    return sorted(seen.values(), key=_word_key)


def enumerate_psps_pairs(g: AugmentedDualGraph) -> EnumerationResult:
    """Balanced pairs of PSPS curves through opposite channels of two crossings.

    A curve using the saddles of two distinct crossings forces its partner
    through the remaining channels; pairs are quotiented by the two-saddle
    rule after generation.
    """
    diagnostics: dict[int, int] = {}
    words = _psps_words(g, diagnostics)
    by_channel_set: dict[frozenset, list[CurveWord]] = {}
    for w in words:
        by_channel_set.setdefault(_channels(w), []).append(w)

    pairs = []
    pair_seen: set[tuple] = set()
    for w1 in words:
        ch = _channels(w1)
        if len({c.crossing for c in ch}) != 2:
            continue  # both saddles at one crossing never pair up
        partner_set = frozenset(_flip(c) for c in ch)
        for w2 in by_channel_set.get(partner_set, ()):
            cfg = make_configuration([w1, w2], mirror=True)
            bad = check_configuration(g, cfg, innermost_all=True)
            if bad:
                _tally(diagnostics, bad)
                continue
            key = _config_key(cfg)
            if key not in pair_seen:
                pair_seen.add(key)
                pairs.append(tuple(cfg.words_plus))

    reps = saddle_pair_class_representatives(pairs)
    configs = tuple(make_configuration(list(pair), mirror=True) for pair in reps)
    counts = {"pppp": 0, "psps_pair": len(configs), "other": 0, "total": len(configs)}
    return EnumerationResult(configs, counts, diagnostics, visited=0)


def enumerate_genus2(g: AugmentedDualGraph) -> EnumerationResult:
    """Union of the two genus-2 families, checked against the cubic cap."""
    pppp = enumerate_pppp(g)
    psps = enumerate_psps_pairs(g)
    configs = pppp.configurations + psps.configurations
    n = g.diagram.n
    total = len(configs)
    if total >= 2 * n**3:
        raise AssertionError(
            f"genus-2 configuration count {total} reached the 2n^3 cap "
            f"({2 * n**3}) on an {n}-crossing diagram"
        )
    diagnostics = dict(pppp.diagnostics)
    for prop, k in psps.diagnostics.items():
        diagnostics[prop] = diagnostics.get(prop, 0) + k
    counts = {
        "pppp": pppp.counts["pppp"],
        "psps_pair": psps.counts["psps_pair"],
        "other": 0,
        "total": total,
    }
    return EnumerationResult(configs, counts, diagnostics, visited=0)


# ----------------------------------------------------------------------------
# general budget-driven enumerator
# ----------------------------------------------------------------------------


def _pattern_rotations(patterns) -> set[str] | None:
    if patterns is None:
        return None
    out: set[str] = set()
    for pat in patterns:
        for r in range(len(pat)):
            out.add(pat[r:] + pat[:r])
    return out


def _general_words(
    g: AugmentedDualGraph,
    budget: EnumerationBudget,
    rotations: set[str] | None,
    guard: _Guard,
    diagnostics: dict[int, int],
) -> list[CurveWord]:
    max_len = budget.max_word_length
    if rotations is not None:
        max_len = min(max_len, max(len(p) for p in rotations))
    seen: dict[tuple, CurveWord] = {}

    def extend(start: int, letters: tuple, faces: tuple, used: frozenset, p_used: int):
        guard.tick()
        here = faces[-1]
        length = len(letters)
        if length and here == start and length >= 4 and length % 2 == 0:
            # p_used is pruned at the budget below, so all-puncture words are
            # already capped at max_punctures letters here; faces carries the
            # closing repeat of the start face, dropped for the word
            word = CurveWord(letters, faces[:-1])
            if rotations is None or word_pattern(word) in rotations:
                bad = check_word(g, word)
                if bad:
                    _tally(diagnostics, bad)
                else:
                    word = canonicalize(word)
                    seen.setdefault(_word_key(word), word)
        if length == max_len:
            return
        kinds_prefix = "".join(l.kind for l in letters)
        for step in g.steps_from(here):
            if rotations is not None:
                want = kinds_prefix + step.kind
                if not any(r.startswith(want) for r in rotations):
                    continue
            if step.kind == "P":
                if p_used + 1 > budget.max_punctures:
                    continue
                if letters and letters[-1].kind == "P" and letters[-1].ref == step.ref:
                    continue  # property 5
                if letters and letters[-1].kind == "S" and \
                        letters[-1].ref.crossing in g.arc_crossings(step.ref):
                    continue  # property 6
                extend(start, letters + (Letter("P", step.ref),),
                       faces + (step.dest,), used, p_used + 1)
            else:
                if step.ref in used:
                    continue  # property 2
                if letters and letters[-1].kind == "P" and \
                        step.ref.crossing in g.arc_crossings(letters[-1].ref):
                    continue  # property 6
                extend(start, letters + (Letter("S", step.ref),),
                       faces + (step.dest,), used | {step.ref}, p_used)

    for start in g.nodes:
        extend(start, (), (start,), frozenset(), 0)
    return sorted(seen.values(), key=_word_key)


def enumerate_general(
    g: AugmentedDualGraph,
    budget: EnumerationBudget,
    patterns=None,
    guard_cap: int = DEFAULT_GUARD_CAP,
) -> EnumerationResult:
    """Every configuration within the budget, deduped canonically only.

    Words are closed even walks of length 4..max_word_length passing the word
    checks (all-puncture words are further capped at max_punctures letters);
    configurations take up to max_curves words per sphere with total plus
    punctures within budget and balanced channels.  `patterns` optionally
    restricts the P/S skeletons (up to rotation).  Search effort is capped by
    `guard_cap` visited partial walks; exceeding it raises GuardAbort.
    """
    guard = _Guard(guard_cap)
    diagnostics: dict[int, int] = {}
    rotations = _pattern_rotations(patterns)
    pool = _general_words(g, budget, rotations, guard, diagnostics)

    configs: dict[tuple, Configuration] = {}

    def assemble(index: int, chosen: list[CurveWord], p_total: int):
        guard.tick()
        if chosen:
            cfg = make_configuration(chosen, mirror=True)
            bad = check_configuration(g, cfg)
            if bad:
                _tally(diagnostics, bad)
            else:
                configs.setdefault(_config_key(cfg), cfg)
        if len(chosen) == budget.max_curves:
            return
        for i in range(index, len(pool)):
            w = pool[i]
            if p_total + w.p_count > budget.max_punctures:
                continue
            chosen.append(w)
            assemble(i, chosen, p_total + w.p_count)
            chosen.pop()

    assemble(0, [], 0)

    ordered = sorted(configs.values(), key=_config_key)
    counts = {"pppp": 0, "psps_pair": 0, "other": 0}
    for cfg in ordered:
        counts[classify_family(cfg)] += 1
    counts["total"] = len(ordered)
    return EnumerationResult(tuple(ordered), counts, diagnostics, guard.visited)


# ----------------------------------------------------------------------------
# brute-force oracle
# ----------------------------------------------------------------------------


def oracle_enumerate(g: AugmentedDualGraph, max_len: int) -> EnumerationResult:
    """Plain walk enumeration filtered by the public checks only.

    Every closed walk of length <= max_len is generated letter by letter with
    no determination rules and no budget pruning; surviving words form all
    one- and two-word balanced configurations.  Kept deliberately independent
    of the specialized enumerators so fixtures can confirm them.
    """
    if max_len > 8:
        raise TractabilityError(f"oracle supports max_len <= 8, got {max_len}")

    diagnostics: dict[int, int] = {}
    words: dict[tuple, CurveWord] = {}

    def grow(start: int, letters: list[Letter], faces: list[int]):
        here = faces[-1]
        if letters and here == start:
            word = CurveWord(tuple(letters), tuple(faces[:-1]))
            bad = check_word(g, word)
            if bad:
                _tally(diagnostics, bad)
            else:
                word = canonicalize(word)
                words.setdefault(_word_key(word), word)
        if len(letters) == max_len:
            return
        for step in g.steps_from(here):
            letters.append(Letter(step.kind, step.ref))
            faces.append(step.dest)
            grow(start, letters, faces)
            letters.pop()
            faces.pop()

    for start in g.nodes:
        grow(start, [], [start])

    pool = sorted(words.values(), key=_word_key)
    configs: dict[tuple, Configuration] = {}
    for i, w1 in enumerate(pool):
        single = make_configuration([w1], mirror=True)
        if not check_configuration(g, single):
            configs.setdefault(_config_key(single), single)
        for w2 in pool[i:]:
            cfg = make_configuration([w1, w2], mirror=True)
            if not check_configuration(g, cfg):
                configs.setdefault(_config_key(cfg), cfg)

    ordered = sorted(configs.values(), key=_config_key)
    counts = {"pppp": 0, "psps_pair": 0, "other": 0}
    for cfg in ordered:
        counts[classify_family(cfg)] += 1
    counts["total"] = len(ordered)
    return EnumerationResult(tuple(ordered), counts, diagnostics, visited=0)
