"""Reduced words in W_n = <x_1, ..., x_n | x_i^2>.

Every generator is an involution, so a word is reduced exactly when no two
adjacent letters agree, and the inverse of a word is its reversal.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels


class RankError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Word:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise RankError(f"rank must be positive, got {self.n}")
        prev = 0
        for a in self.letters:
            if not 1 <= a <= self.n:
                raise ValueError(f"letter {a} out of range 1..{self.n}")
            if a == prev:
                raise ValueError(f"word {self.letters} is not reduced")
            prev = a

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __str__(self):
        return format_word(self)

    def __mul__(self, other: Word) -> Word:
        return multiply(self, other)

    def inverse(self) -> Word:
        return inverse(self)

    def is_identity(self) -> bool:
        return not self.letters


@dataclass(frozen=True, slots=True)
class Involution:
    """The element u x_j u^-1, stored as (u, j) with u not ending in j."""

    conjugator: Word
    core_letter: int

    def __post_init__(self):
        u = self.conjugator
        if not 1 <= self.core_letter <= u.n:
            raise ValueError(f"letter {self.core_letter} out of range 1..{u.n}")
        if u.letters and u.letters[-1] == self.core_letter:
            raise ValueError("conjugator must not end with the core letter")

    @property
    def n(self):
        return self.conjugator.n

    @property
    def word(self) -> Word:
        u = self.conjugator.letters
        return Word(self.n, u + (self.core_letter,) + u[::-1])

    def __str__(self):
        return format_word(self.word)


def _check_rank(w: Word, v: Word):
    if w.n != v.n:
        raise RankError(f"rank mismatch: {w.n} vs {v.n}")


def identity(n: int) -> Word:
    return Word(n, ())


def gen(n: int, i: int) -> Word:
    return Word(n, (i,))


def reduce(n: int, seq) -> Word:
    seq = tuple(seq)
    for a in seq:
        if not 1 <= a <= n:
            raise ValueError(f"letter {a} out of range 1..{n}")
    return Word(n, kernels.reduce_letters(seq))


def multiply(w: Word, v: Word) -> Word:
    _check_rank(w, v)
    return Word(w.n, kernels.concat_reduce(w.letters, v.letters))


def product(n: int, words) -> Word:
    out: tuple[int, ...] = ()
    for w in words:
        if w.n != n:
            raise RankError(f"rank mismatch: {w.n} vs {n}")
        out = kernels.concat_reduce(out, w.letters)
    return Word(n, out)


def inverse(w: Word) -> Word:
    return Word(w.n, w.letters[::-1])


def conjugate(g: Word, w: Word) -> Word:
    """g w g^-1."""
    return product(w.n, (g, w, inverse(g)))


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split w as c * core * c^-1 with core cyclically reduced."""
    a = w.letters
    lo, hi = 0, len(a)
    while hi - lo >= 2 and a[lo] == a[hi - 1]:
        lo += 1
        hi -= 1
    return Word(w.n, a[lo:hi]), Word(w.n, a[:lo])


def _rotation(core: tuple[int, ...], k: int) -> tuple[int, ...]:
    return core[k:] + core[:k]


def are_conjugate(w: Word, v: Word) -> Word | None:
    """Return g with g w g^-1 = v, or None when w and v are not conjugate."""
    _check_rank(w, v)
    core_w, c = cyclic_reduce(w)
    core_v, d = cyclic_reduce(v)
    a, b = core_w.letters, core_v.letters
    if len(a) != len(b):
        return None
    for k in range(max(len(a), 1)):
        if _rotation(a, k) == b:
            # core_v = p^-1 core_w p with p the first k letters
            p = Word(w.n, a[:k])
            return product(w.n, (d, inverse(p), inverse(c)))
    return None


def conjugacy_key(w: Word) -> tuple[int, ...]:
    """Lexicographically least rotation of the cyclically reduced core."""
    core = cyclic_reduce(w)[0].letters
    if not core:
        return ()
    return min(_rotation(core, k) for k in range(len(core)))


def as_involution(w: Word) -> Involution | None:
    a = w.letters
    if len(a) % 2 == 0 or a != a[::-1]:
        return None
    h = len(a) // 2
    return Involution(Word(w.n, a[:h]), a[h])


def involution(w: Word) -> Involution:
    t = as_involution(w)
    if t is None:
        raise ValueError(f"{format_word(w)} is not an involution")
    return t


def format_word(w: Word) -> str:
    if not w.letters:
        return "e"
    return ".".join(str(a) for a in w.letters)


def parse_word(text: str, n: int | None = None, *, reduce_input: bool = True) -> Word:
    """Parse "1.2.3" (or "e"); the rank defaults to max(2, largest letter)."""
    text = text.strip()
    if text in ("", "e", "ε"):
        letters: tuple[int, ...] = ()
    else:
        try:
            letters = tuple(int(tok) for tok in text.split("."))
        except ValueError:
            raise ValueError(f"cannot parse word {text!r}") from None
    if n is None:
        n = max((2,) + letters)
    if reduce_input:
        return reduce(n, letters)
    return Word(n, letters)
