"""Eight bijective encodings of staircase words (or their ranks) as permutations.

Four base encodings consume a word w of length n:

* ``f1`` builds one-line notation by inserting the value i at the w[i]-th
  position counted from the right of the partial sequence.
* ``f2`` reads the word backwards and repeatedly appends the w[i]-th
  smallest value not used yet; the first appended value ends up at
  position 1.
* ``f3`` builds cycle notation reading the word backwards: letter 1 closes
  the open cycle and seeds a new one with the smallest unused value, any
  other letter appends the (w[i]-1)-th smallest unused value.
* ``f4`` builds cycle notation reading the word forwards: letter 1 opens
  the new cycle (i), any other letter splices i in right after the element
  w[i]-1.

``g1`` and ``g2`` are the mirror images of f1 and f2 (insert/prepend from
the left instead of the right).  ``h1`` and ``h2`` consume an integer rank
in [1, n!] instead of a word: h1 feeds g1 with words in lexicographic
order, h2 feeds g2 with words in right-to-left lexicographic order, which
is the left-to-right order of the leaves in each map's branching tree.

Every encoding is a bijection onto the n! permutations, and each has an
exact inverse here.
"""

from __future__ import annotations

from enum import Enum
from typing import Union

from .perm_core import (
    CycleForm,
    Permutation,
    Word,
    from_cycle_form,
    rank_lex,
    rank_revlex,
    to_cycle_form,
    unrank_lex,
    unrank_revlex,
)


class EncodingId(Enum):
    F1 = "f1"
    F2 = "f2"
    F3 = "f3"
    F4 = "f4"
    G1 = "g1"
    G2 = "g2"
    H1 = "h1"
    H2 = "h2"


WORD_ENCODINGS = frozenset(
    {EncodingId.F1, EncodingId.F2, EncodingId.F3, EncodingId.F4, EncodingId.G1, EncodingId.G2}
)
RANK_ENCODINGS = frozenset({EncodingId.H1, EncodingId.H2})


def f1(w: Word) -> Permutation:
    """Insert each value i at position w[i] from the right of the partial line."""
    seq = [1]
    for i in range(2, w.n + 1):
        seq.insert(len(seq) + 1 - w.letters[i - 1], i)
    return Permutation(tuple(seq))


def f1_inv(p: Permutation) -> Word:
    seq = list(p.images)
    letters = [0] * p.n
    letters[0] = 1
    for i in range(p.n, 1, -1):
        idx = seq.index(i)
        letters[i - 1] = len(seq) - idx
        del seq[idx]
    return Word(tuple(letters))


def g1(w: Word) -> Permutation:
    """Insert each value i at position w[i] from the left of the partial line."""
    seq = [1]
    for i in range(2, w.n + 1):
        seq.insert(w.letters[i - 1] - 1, i)
    return Permutation(tuple(seq))


def g1_inv(p: Permutation) -> Word:
    seq = list(p.images)
    letters = [0] * p.n
    letters[0] = 1
    for i in range(p.n, 1, -1):
        idx = seq.index(i)
        letters[i - 1] = idx + 1
        del seq[idx]
    return Word(tuple(letters))


def f2(w: Word) -> Permutation:
    """Reading backwards, append the w[i]-th smallest unused value to the right."""
    unused = list(range(1, w.n + 1))
    seq = []
    for i in range(w.n, 0, -1):
        seq.append(unused.pop(w.letters[i - 1] - 1))
    return Permutation(tuple(seq))


def f2_inv(p: Permutation) -> Word:
    n = p.n
    letters = [0] * n
    for q in range(1, n + 1):
        # rank of p(q) among the values at positions q..n
        letters[n - q] = 1 + sum(1 for r in range(q + 1, n + 1) if p.images[r - 1] < p.images[q - 1])
    return Word(tuple(letters))


def g2(w: Word) -> Permutation:
    """Reading backwards, prepend the w[i]-th smallest unused value to the left."""
    unused = list(range(1, w.n + 1))
    seq = []
    for i in range(w.n, 0, -1):
        seq.insert(0, unused.pop(w.letters[i - 1] - 1))
    return Permutation(tuple(seq))


def g2_inv(p: Permutation) -> Word:
    n = p.n
    letters = [0] * n
    for i in range(1, n + 1):
        letters[i - 1] = 1 + sum(1 for r in range(1, i) if p.images[r - 1] < p.images[i - 1])
    return Word(tuple(letters))


def _freeze_canonical(cycles: list[list[int]]) -> CycleForm:
    built = tuple(tuple(c) for c in cycles)
    form = CycleForm(built)
    # both cycle constructions open every cycle on its minimum, in ascending
    # order, so canonicalization must be a no-op
    assert form.cycles == built, f"construction emitted a non-canonical form {built}"
    return form


def f3(w: Word) -> CycleForm:
    """Cycle construction driven by the word read backwards.

    Letter 1 closes the open cycle and seeds a new one with the smallest
    unused value; letter v > 1 appends the (v-1)-th smallest unused value.
    """
    n = w.n
    unused = list(range(2, n + 1))
    cycles: list[list[int]] = []
    cur = [1]
    for i in range(n, 1, -1):
        # one value is consumed per step, so exactly i-1 remain here and the
        # request w[i]-1 <= i-1 is always satisfiable
        assert len(unused) == i - 1
        v = w.letters[i - 1]
        if v == 1:
            cycles.append(cur)
            cur = [unused.pop(0)]
        else:
            cur.append(unused.pop(v - 2))
    cycles.append(cur)
    return _freeze_canonical(cycles)


def f3_inv(p: Permutation) -> Word:
    n = p.n
    letters = [0] * n
    letters[0] = 1
    unused = list(range(2, n + 1))
    i = n
    for ci, cyc in enumerate(to_cycle_form(p).cycles):
        for vi, v in enumerate(cyc):
            if ci == 0 and vi == 0:
                continue  # the opening 1 consumes no letter
            if vi == 0:
                letters[i - 1] = 1
                unused.remove(v)
            else:
                letters[i - 1] = 2 + unused.index(v)
                unused.remove(v)
            i -= 1
    return Word(tuple(letters))


def f4(w: Word) -> CycleForm:
    """Cycle construction driven by the word read forwards.

    Letter 1 opens the new cycle (i); letter v > 1 splices i in immediately
    after the element v-1.
    """
    n = w.n
    cycles: list[list[int]] = [[1]]
    where = [0] * (n + 1)  # value -> index of its cycle
    for i in range(2, n + 1):
        v = w.letters[i - 1]
        if v == 1:
            cycles.append([i])
            where[i] = len(cycles) - 1
        else:
            c = cycles[where[v - 1]]
            c.insert(c.index(v - 1) + 1, i)
            where[i] = where[v - 1]
    return _freeze_canonical(cycles)


def f4_inv(p: Permutation) -> Word:
    n = p.n
    succ = list(p.images)  # succ[x-1] = image of x; spliced down as values retire
    pred = [0] * (n + 1)
    for x in range(1, n + 1):
        pred[succ[x - 1]] = x
    letters = [0] * n
    letters[0] = 1
    for i in range(n, 1, -1):
        if succ[i - 1] == i:
            letters[i - 1] = 1
        else:
            before, after = pred[i], succ[i - 1]
            letters[i - 1] = before + 1
            succ[before - 1] = after
            pred[after] = before
    return Word(tuple(letters))


def h1(k: int, n: int) -> Permutation:
    """g1 fed with the k-th word in lexicographic order."""
    return g1(unrank_lex(k, n))


def h1_inv(p: Permutation) -> int:
    return rank_lex(g1_inv(p))


def h2(k: int, n: int) -> Permutation:
    """g2 fed with the k-th word in right-to-left lexicographic order."""
    return g2(unrank_revlex(k, n))


def h2_inv(p: Permutation) -> int:
    return rank_revlex(g2_inv(p))


_WORD_FORWARD = {
    EncodingId.F1: f1,
    EncodingId.F2: f2,
    EncodingId.F3: f3,
    EncodingId.F4: f4,
    EncodingId.G1: g1,
    EncodingId.G2: g2,
}
_WORD_INVERSE = {
    EncodingId.F1: f1_inv,
    EncodingId.F2: f2_inv,
    EncodingId.F3: f3_inv,
    EncodingId.F4: f4_inv,
    EncodingId.G1: g1_inv,
    EncodingId.G2: g2_inv,
}
_RANK_FORWARD = {EncodingId.H1: h1, EncodingId.H2: h2}
_RANK_INVERSE = {EncodingId.H1: h1_inv, EncodingId.H2: h2_inv}


def encode(enc: EncodingId, value: Union[Word, int], n: int | None = None) -> Union[Permutation, CycleForm]:
    """Apply an encoding to its native input (Word, or rank plus n for h1/h2)."""
    if enc in RANK_ENCODINGS:
        if not isinstance(value, int) or n is None:
            raise ValueError(f"{enc.value} expects an integer rank and an explicit n")
        return _RANK_FORWARD[enc](value, n)
    if not isinstance(value, Word):
        raise ValueError(f"{enc.value} expects a Word")
    return _WORD_FORWARD[enc](value)


def encode_oneline(enc: EncodingId, value: Union[Word, int], n: int | None = None) -> Permutation:
    """Like encode, with cycle-form outputs normalized to one-line notation."""
    out = encode(enc, value, n)
    return from_cycle_form(out) if isinstance(out, CycleForm) else out


def decode(enc: EncodingId, p: Permutation) -> Union[Word, int]:
    """Invert an encoding: a Word for the word encodings, a rank for h1/h2."""
    if enc in RANK_ENCODINGS:
        return _RANK_INVERSE[enc](p)
    return _WORD_INVERSE[enc](p)
