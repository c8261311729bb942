"""Set partitions in canonical sequential form and their record statistics.

A set partition of {1, ..., n} is encoded as a restricted growth string
(RGS): a word w1 .. wn where wi is the index of the block containing i,
blocks numbered in order of their minimal elements.  Valid words start
with 1 and never jump more than one above the running maximum.

A *record* of a word is a strict left-to-right maximum.  The statistics
computed here:

    rec_count  -- number of records
    srec       -- sum of record positions (1-based)
    swrec      -- sum of position * value over all records

For a valid RGS with k blocks the records turn out to be exactly the
first occurrences of 1 .. k; the functions below nevertheless compute
records from the general definition, and the test-suite checks the
first-occurrence characterisation by enumeration instead of assuming it.

Everything here is exhaustive enumeration and direct counting: this
module is the independent oracle the generating-function and
closed-form layers are verified against.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator, NamedTuple, Sequence

Word = tuple[int, ...]

# Full enumeration of P_12 is ~4.2M words; anything larger needs an
# explicit opt-in via the cap argument.
DEFAULT_ENUMERATION_CAP = 12


class RecordEntry(NamedTuple):
    position: int  # 1-based
    value: int


def sum_of_squares(n: int) -> int:
    """1^2 + 2^2 + ... + n^2 = n(n+1)(2n+1)/6."""
    return n * (n + 1) * (2 * n + 1) // 6


def is_valid_rgs(word: Sequence[int]) -> bool:
    """True iff ``word`` is a restricted growth string (the empty word is)."""
    if len(word) == 0:
        return True
    if word[0] != 1:
        return False
    top = 1
    for v in word[1:]:
        if not 1 <= v <= top + 1:
            return False
        if v > top:
            top = v
    return True


def enumerate_rgs(n: int, k: int | None = None) -> Iterator[Word]:
    """All restricted growth strings of length n, in lexicographic order.

    With ``k`` given, only words with exactly k blocks (maximum letter k)
    are produced; ``k > n`` yields an empty stream.  ``n = 0`` yields the
    single empty word.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if k is not None and k < 1:
        raise ValueError("k must be >= 1 when given")
    if k is not None and k > n:
        return
    if n == 0:
        yield ()
        return
    w = [1] * n
    m = [1] * n  # m[i] = max(w[0..i]), kept in lockstep with w
    while True:
        if k is None or m[-1] == k:
            yield tuple(w)
        # Rightmost position that can still grow: w[i] may be bumped iff
        # w[i] <= m[i-1] (it is not already the prefix maximum + 1).
        i = n - 1
        while i > 0 and w[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return
        w[i] += 1
        m[i] = m[i - 1] if w[i] <= m[i - 1] else w[i]
        for j in range(i + 1, n):
            w[j] = 1
            m[j] = m[i]


def records(word: Sequence[int]) -> list[RecordEntry]:
    """Strict left-to-right maxima of any word, with 1-based positions."""
    out: list[RecordEntry] = []
    top = 0
    for pos, v in enumerate(word, 1):
        if v > top:
            top = v
            out.append(RecordEntry(pos, v))
    return out


def swrec(word: Sequence[int]) -> int:
    """Sum of position * value over the records of ``word``."""
    total = 0
    top = 0
    for pos, v in enumerate(word, 1):
        if v > top:
            top = v
            total += pos * v
    return total


def srec(word: Sequence[int]) -> int:
    """Sum of the record positions of ``word``."""
    total = 0
    top = 0
    for pos, v in enumerate(word, 1):
        if v > top:
            top = v
            total += pos
    return total


def rec_count(word: Sequence[int]) -> int:
    """Number of records of ``word``."""
    count = 0
    top = 0
    for v in word:
        if v > top:
            top = v
            count += 1
    return count


def blocks_from_rgs(word: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Convert a valid RGS to its blocks, ordered by minimal element."""
    if not is_valid_rgs(word):
        raise ValueError(f"not a restricted growth string: {word!r}")
    k = max(word) if word else 0
    blocks: list[list[int]] = [[] for _ in range(k)]
    for i, v in enumerate(word, 1):
        blocks[v - 1].append(i)
    return tuple(tuple(b) for b in blocks)


def rgs_from_blocks(blocks: Sequence[Sequence[int]]) -> Word:
    """Convert blocks (disjoint, nonempty, covering 1..n, ordered by
    minima) back to the canonical word; malformed input raises ValueError."""
    seen: dict[int, int] = {}
    prev_min: int | None = None
    for idx, block in enumerate(blocks, 1):
        elems = sorted(block)
        if not elems:
            raise ValueError("blocks must be nonempty")
        if prev_min is not None and elems[0] <= prev_min:
            raise ValueError("blocks must be ordered by strictly increasing minima")
        prev_min = elems[0]
        for e in elems:
            if not isinstance(e, int) or e < 1:
                raise ValueError(f"block elements must be positive integers, got {e!r}")
            if e in seen:
                raise ValueError(f"element {e} appears in more than one block")
            seen[e] = idx
    n = len(seen)
    if set(seen) != set(range(1, n + 1)):
        raise ValueError("blocks must cover 1..n with no gaps")
    return tuple(seen[i] for i in range(1, n + 1))


def swrec_histogram(n: int, k: int | None = None) -> Counter[int]:
    """Exact histogram {swrec value: count} over all partitions of [n]
    (restricted to k blocks when ``k`` is given)."""
    hist: Counter[int] = Counter()
    for w in enumerate_rgs(n, k):
        if w:
            hist[swrec(w)] += 1
    return hist


def total_swrec_bruteforce(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Sum of swrec over every partition of [n], by full enumeration."""
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}")
    total = 0
    for w in enumerate_rgs(n):
        top = 0
        s = 0
        for pos, v in enumerate(w, 1):
            if v > top:
                top = v
                s += pos * v
        total += s
    return total
