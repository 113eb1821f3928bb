"""Structures living inside rich words.

Switches (a·u·b with palindromic core u and a != b), complete returns,
grouping of switch cores by longest proper palindromic suffix, the
compression map that squeezes a palindrome v with a long palindromic
prefix u down to a short fragment, palindromic closure, sentinel
augmentation, and Rauzy graphs.

Window palindromicity uses precomputed center radii, so scanning all
windows of one length is linear in the word length.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .paltree import lps, lpps
from .records import SwitchPair, SwitchRecord
from .words import MAX_ALPHABET, Word, is_palindrome, reverse


class _PalSpans:
    """O(1) palindromicity of any substring after an O(|w|) radius pass."""

    __slots__ = ("_odd", "_even")

    def __init__(self, s: str):
        n = len(s)
        d1 = [0] * n
        l, r = 0, -1
        for i in range(n):
            k = 1 if i > r else min(d1[l + r - i], r - i + 1)
            while i - k >= 0 and i + k < n and s[i - k] == s[i + k]:
                k += 1
            d1[i] = k
            if i + k - 1 > r:
                l, r = i - k + 1, i + k - 1
        d2 = [0] * n
        l, r = 0, -1
        for i in range(n):
            k = 0 if i > r else min(d2[l + r - i + 1], r - i + 1)
            while i - k - 1 >= 0 and i + k < n and s[i - k - 1] == s[i + k]:
                k += 1
            d2[i] = k
            if i + k - 1 > r:
                l, r = i - k, i + k - 1
        self._odd = d1
        self._even = d2

    def is_palindrome_span(self, i: int, j: int) -> bool:
        """Whether s[i..j] (0-based, inclusive) is a palindrome."""
        length = j - i + 1
        if length <= 1:
            return length >= 0
        if length % 2:
            return self._odd[(i + j) // 2] >= (length + 1) // 2
        return self._even[(i + j) // 2 + 1] >= length // 2


# Radii depend only on the character string; repeated window scans over
# one word (switch sweeps per length, core partitions) share one pass.
@functools.lru_cache(maxsize=512)
def _spans_of(chars: str) -> _PalSpans:
    return _PalSpans(chars)


def complete_returns(w: Word, u: Word) -> frozenset[Word]:
    """Factors of w containing u exactly twice: as prefix and as suffix.

    Consecutive occurrence pairs of u in w are exactly these factors.
    Empty set when u does not occur at least twice; empty u is rejected.
    """
    if len(u) == 0:
        raise ValueError("returns to the empty word are undefined")
    s, pat, q = w.chars, u.chars, w.alphabet_size
    out = set()
    prev = s.find(pat)
    while prev != -1:
        nxt = s.find(pat, prev + 1)
        if nxt == -1:
            break
        out.add(Word(s[prev : nxt + len(pat)], q))
        prev = nxt
    return frozenset(out)


def switches(w: Word, n: int) -> frozenset[SwitchRecord]:
    """All length-n factors a·u·b of w with u a palindrome and a != b."""
    if n <= 2:
        return frozenset()
    s, q = w.chars, w.alphabet_size
    spans = _spans_of(s)
    out = set()
    for i in range(len(s) - n + 1):
        a, b = s[i], s[i + n - 1]
        if a != b and spans.is_palindrome_span(i + 1, i + n - 2):
            out.add(SwitchRecord(ord(a), Word(s[i + 1 : i + n - 1], q), ord(b)))
    return frozenset(out)


def switch_pairs(w: Word, n: int) -> frozenset[SwitchPair]:
    """Core/letter pairs (u, a): both end letters of every switch count."""
    out = set()
    for rec in switches(w, n):
        out.add(SwitchPair(rec.core, rec.left))
        out.add(SwitchPair(rec.core, rec.right))
    return frozenset(out)


def switch_cores(w: Word, n: int) -> frozenset[Word]:
    """Distinct palindromic cores of the length-n switches."""
    return frozenset(rec.core for rec in switches(w, n))


def cores_with_lpps(w: Word, n: int, r: Word) -> frozenset[Word]:
    """Length-n switch cores whose longest proper palindromic suffix is r."""
    return frozenset(
        u for u in switch_cores(w, n + 2) if lpps(u).chars == r.chars
    )


def max_switch_count(w: Word, n: int) -> int:
    """Largest switch-set size over lengths up to n, floored at 1."""
    if n < 0:
        raise ValueError("length bound must be >= 0")
    s = w.chars
    spans = _spans_of(s)
    best = 1
    for m in range(3, min(n, len(s)) + 1):
        seen = set()
        for i in range(len(s) - m + 1):
            a, b = s[i], s[i + m - 1]
            if a != b and spans.is_palindrome_span(i + 1, i + m - 2):
                seen.add(s[i : i + m])
        best = max(best, len(seen))
    return best


class CompressionDomainError(ValueError):
    """Compression preconditions violated; code names the failed one."""

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(message)


@dataclass(frozen=True)
class CompressedPalindrome:
    """Fragment from which a palindrome v with palindromic prefix u rebuilds.

    window_start/window_end are the 1-based inclusive positions (k, n) of v
    whose letters the fragment stores; every other letter of v follows by
    reflecting about the centers of u and of v.  prefix_odd records |u|'s
    parity, which equals the fragment's length parity.
    """

    fragment: Word
    half: Word
    window_start: int
    window_end: int
    v_length: int
    prefix_odd: bool


def pal_compress(u: Word, v: Word) -> CompressedPalindrome:
    """Compress palindrome v given a palindromic prefix u with |u| >= |v|/2."""
    if not is_palindrome(u):
        raise CompressionDomainError("not-palindrome", "u is not a palindrome")
    if not is_palindrome(v):
        raise CompressionDomainError("not-palindrome", "v is not a palindrome")
    if not v.chars.startswith(u.chars):
        raise CompressionDomainError("not-prefix", "u is not a prefix of v")
    if not (2 * len(u) >= len(v) and len(u) < len(v)):
        raise CompressionDomainError(
            "length-window", f"|u|={len(u)} outside [{len(v)}/2, {len(v)})"
        )
    n = (len(v) + 1) // 2
    odd = len(u) % 2 == 1
    k = (len(u) + 1) // 2 if odd else len(u) // 2 + 1
    half = v[k - 1 : n]
    rev = half.chars[::-1]
    fragment = rev + half.chars[1:] if odd else rev + half.chars
    return CompressedPalindrome(
        fragment=Word(fragment, v.alphabet_size),
        half=half,
        window_start=k,
        window_end=n,
        v_length=len(v),
        prefix_odd=odd,
    )


def pal_reconstruct(fragment: Word, v_length: int) -> Word:
    """Rebuild the unique palindrome of the given length from a fragment.

    Inverse of pal_compress in the sense that the fragment plus the target
    length determine v; inputs that no compression could have produced are
    rejected rather than mapped to junk.
    """
    if v_length < 2:
        raise ValueError("target length must be at least 2")
    if len(fragment) == 0:
        raise ValueError("fragment must be nonempty")
    if not is_palindrome(fragment):
        raise ValueError("fragment is not a palindrome")
    n = (v_length + 1) // 2
    odd = len(fragment) % 2 == 1
    m = (len(fragment) + 1) // 2  # window width n - k + 1
    k = n - m + 1
    u_len = 2 * k - 1 if odd else 2 * k - 2
    if not (k >= 1 and 2 * u_len >= v_length and 0 < u_len < v_length):
        raise ValueError(
            f"fragment length {len(fragment)} incompatible with target {v_length}"
        )
    half = fragment.chars[m - 1 :] if odd else fragment.chars[m:]
    out = []
    for j in range(1, v_length + 1):
        p = j
        hops = 0
        while not k <= p <= n:
            if p > n:
                p = v_length - p + 1
            else:
                p = u_len - p + 1
            hops += 1
            if hops > 2 * v_length + 4:  # cannot happen for consistent inputs
                raise ValueError("fragment inconsistent with target length")
        out.append(half[p - k])
    v = Word("".join(out), fragment.alphabet_size)
    u = v[:u_len]
    if not is_palindrome(v) or not is_palindrome(u):
        raise ValueError("fragment does not encode a palindrome of this length")
    if pal_compress(u, v).fragment != fragment:
        raise ValueError("fragment does not round-trip at this length")
    return v


def palindromic_closure(w: Word) -> Word:
    """Shortest palindrome with w as a prefix: w followed by reverse(p), w = p·lps(w)."""
    if len(w) == 0:
        return w
    p_len = len(w) - len(lps(w))
    return Word(w.chars + w.chars[:p_len][::-1], w.alphabet_size)


def sentinel_augment(w: Word) -> Word:
    """w, a fresh sentinel letter, then reverse(w); always a palindrome."""
    q = w.alphabet_size
    if q + 1 > MAX_ALPHABET:
        raise ValueError("no room for a sentinel symbol in the alphabet")
    return Word(w.chars + chr(q) + w.chars[::-1], q + 1)


@dataclass(frozen=True)
class RauzyGraph:
    """Directed graph on length-n factors; edges realized by length-(n+1) factors."""

    order: int
    vertices: frozenset[Word]
    edges: frozenset[tuple[Word, Word]]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def rauzy_graph(w: Word, n: int) -> RauzyGraph:
    """Graph of length-n factors; each length-(n+1) factor z adds prefix->suffix."""
    if n < 1:
        raise ValueError("graph order must be >= 1")
    if len(w) < n + 1:
        raise ValueError(f"need |w| >= {n + 1} to have any transitions")
    s, q = w.chars, w.alphabet_size
    vertices = {Word(s[i : i + n], q) for i in range(len(s) - n + 1)}
    edges = set()
    for i in range(len(s) - n):
        z = s[i : i + n + 1]
        edges.add((Word(z[:-1], q), Word(z[1:], q)))
    return RauzyGraph(order=n, vertices=frozenset(vertices), edges=frozenset(edges))


def is_strongly_connected(g: RauzyGraph) -> bool:
    """Every vertex reaches every other along directed edges."""
    verts = list(g.vertices)
    if len(verts) <= 1:
        return True
    fwd: dict[Word, list[Word]] = {v: [] for v in verts}
    bwd: dict[Word, list[Word]] = {v: [] for v in verts}
    for a, b in g.edges:
        fwd[a].append(b)
        bwd[b].append(a)

    def reaches_all(adj: dict[Word, list[Word]]) -> bool:
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            for nxt in adj[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return len(seen) == len(verts)

    return reaches_all(fwd) and reaches_all(bwd)
