"""Binary linear code algebra on int bitsets.

Words are fixed-length bit vectors packed into Python ints (coordinate j of a
word is bit j of the int; text renderings read coordinates left to right).
Codes carry their generators plus an eagerly computed reduced row-echelon
form, which is the canonical representation used for equality, containment,
and duals.  Exhaustive codeword sweeps walk the message space in Gray-code
order so each step is a single generator XOR.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_LENGTH = 128
ENUM_CAP = 26  # refuse exhaustive sweeps beyond 2^26 codewords


class EnumerationCapError(RuntimeError):
    """Raised when an exhaustive sweep would exceed the enumeration cap."""


class CodeFileError(ValueError):
    """Malformed generator-matrix file; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True, order=True)
class Word:
    """Length-n bit vector over GF(2)."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if not 0 < self.n <= MAX_LENGTH:
            raise ValueError(f"word length must be in 1..{MAX_LENGTH}, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError("bits set beyond the word length")

    @staticmethod
    def from_string(text: str) -> "Word":
        bits = 0
        for j, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << j
            elif ch != "0":
                raise ValueError(f"invalid bit character {ch!r}")
        return Word(len(text), bits)

    @staticmethod
    def from_support(n: int, support: Iterable[int]) -> "Word":
        bits = 0
        for j in support:
            if not 0 <= j < n:
                raise ValueError(f"support position {j} outside 0..{n - 1}")
            bits |= 1 << j
        return Word(n, bits)

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if self.bits >> j & 1)

    def _check_same_length(self, other: "Word"):
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")

    def __xor__(self, other: "Word") -> "Word":
        self._check_same_length(other)
        return Word(self.n, self.bits ^ other.bits)

    def __and__(self, other: "Word") -> "Word":
        self._check_same_length(other)
        return Word(self.n, self.bits & other.bits)

    def pair(self, other: "Word") -> int:
        """Bilinear pairing <u, v> = sum u_i v_i over GF(2)."""
        self._check_same_length(other)
        return (self.bits & other.bits).bit_count() & 1

    def __str__(self) -> str:
        return "".join("1" if self.bits >> j & 1 else "0" for j in range(self.n))


def add(u: Word, v: Word) -> Word:
    return u ^ v


def intersect(u: Word, v: Word) -> Word:
    return u & v


def weight(v: Word) -> int:
    return v.weight()


@dataclass(frozen=True)
class DesignSet:
    """A finite subset of the Hamming sphere B_w, the raw material of a design."""

    n: int
    w: int
    words: tuple[Word, ...]

    def __post_init__(self):
        seen = set()
        for word in self.words:
            if word.n != self.n:
                raise ValueError("design word of wrong length")
            if word.weight() != self.w:
                raise ValueError(f"design word of weight {word.weight()}, expected {self.w}")
            if word.bits in seen:
                raise ValueError("duplicate word in design set")
            seen.add(word.bits)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)


def _rref(rows: Sequence[int], n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Reduced row-echelon form over GF(2): (rows sorted by pivot, pivot columns)."""
    work: list[int] = []
    pivots: list[int] = []
    for row in rows:
        for p, r in zip(pivots, work):
            if row >> p & 1:
                row ^= r
        if row == 0:
            continue
        p = (row & -row).bit_length() - 1
        for i, r in enumerate(work):
            if r >> p & 1:
                work[i] ^= row
        work.append(row)
        pivots.append(p)
    order = sorted(range(len(work)), key=lambda i: pivots[i])
    return tuple(work[i] for i in order), tuple(pivots[i] for i in order)


def _gray_sweep(rows: Sequence[int], lo: int, hi: int) -> Iterator[int]:
    """Codewords for message indices lo..hi-1, one generator XOR per step."""
    acc = 0
    g = lo ^ (lo >> 1)
    for i, row in enumerate(rows):
        if g >> i & 1:
            acc ^= row
    yield acc
    for m in range(lo + 1, hi):
        acc ^= rows[(m & -m).bit_length() - 1]
        yield acc


def _sweep_worker(args) -> tuple[list[int], list[int]]:
    rows, n, lo, hi, target = args
    dist = [0] * (n + 1)
    hits: list[int] = []
    for bits in _gray_sweep(rows, lo, hi):
        w = bits.bit_count()
        dist[w] += 1
        if w == target:
            hits.append(bits)
    return dist, hits


class Code:
    """Binary linear code held as a generator matrix with cached RREF."""

    __slots__ = ("n", "generators", "rref_rows", "pivots", "k")

    def __init__(self, n: int, generators: Iterable[Word | int | str]):
        if not 0 < n <= MAX_LENGTH:
            raise ValueError(f"code length must be in 1..{MAX_LENGTH}, got {n}")
        rows: list[int] = []
        for g in generators:
            if isinstance(g, Word):
                if g.n != n:
                    raise ValueError("generator of wrong length")
                rows.append(g.bits)
            elif isinstance(g, str):
                w = Word.from_string(g)
                if w.n != n:
                    raise ValueError("generator of wrong length")
                rows.append(w.bits)
            else:
                if g < 0 or g >> n:
                    raise ValueError("generator bits beyond code length")
                rows.append(int(g))
        rref_rows, pivots = _rref(rows, n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "generators", tuple(Word(n, r) for r in rows))
        object.__setattr__(self, "rref_rows", rref_rows)
        object.__setattr__(self, "pivots", pivots)
        object.__setattr__(self, "k", len(rref_rows))

    def __setattr__(self, name, value):
        raise AttributeError("Code is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.n == other.n and self.rref_rows == other.rref_rows

    def __hash__(self):
        return hash((self.n, self.rref_rows))

    def __repr__(self) -> str:
        return f"Code(n={self.n}, k={self.k})"

    # -- membership and span ------------------------------------------------

    def reduce(self, bits: int) -> int:
        """Residue of a word after reduction by the code's RREF rows."""
        for p, r in zip(self.pivots, self.rref_rows):
            if bits >> p & 1:
                bits ^= r
        return bits

    def contains(self, word: Word | int) -> bool:
        bits = word.bits if isinstance(word, Word) else word
        return self.reduce(bits) == 0

    def is_subcode_of(self, other: "Code") -> bool:
        if self.n != other.n:
            return False
        return all(other.contains(r) for r in self.rref_rows)

    def basis(self) -> tuple[Word, ...]:
        return tuple(Word(self.n, r) for r in self.rref_rows)

    # -- duals ----------------------------------------------------------------

    def dual(self) -> "Code":
        """Nullspace basis: dim(dual) = n - k and every cross pairing is 0."""
        pivot_set = set(self.pivots)
        free = [j for j in range(self.n) if j not in pivot_set]
        rows = []
        for f in free:
            bits = 1 << f
            for p, r in zip(self.pivots, self.rref_rows):
                if r >> f & 1:
                    bits |= 1 << p
            rows.append(bits)
        return Code(self.n, rows)

    # -- exhaustive sweeps -----------------------------------------------------

    def _check_cap(self, cap: int):
        if self.k > cap:
            raise EnumerationCapError(
                f"2^{self.k} codewords exceed the enumeration cap 2^{cap}"
            )

    def words(self, cap: int = ENUM_CAP) -> Iterator[Word]:
        self._check_cap(cap)
        for bits in _gray_sweep(self.rref_rows, 0, 1 << self.k):
            yield Word(self.n, bits)

    def _sweep(self, target: int = -1, threads: int = 1,
               cap: int = ENUM_CAP) -> tuple[list[int], list[int]]:
        """One pass over all codewords: weight distribution plus the words of
        weight `target` (if target >= 0).  Message space may be sharded across
        processes; collected words are sorted afterwards."""
        self._check_cap(cap)
        total = 1 << self.k
        rows = self.rref_rows
        if threads <= 1 or total < (1 << 16):
            dist, hits = _sweep_worker((rows, self.n, 0, total, target))
        else:
            bounds = [total * t // threads for t in range(threads + 1)]
            chunks = [(rows, self.n, bounds[t], bounds[t + 1], target)
                      for t in range(threads)]
            dist = [0] * (self.n + 1)
            hits = []
            with ProcessPoolExecutor(max_workers=threads) as pool:
                for d, h in pool.map(_sweep_worker, chunks):
                    for w, c in enumerate(d):
                        dist[w] += c
                    hits.extend(h)
        hits.sort()
        return dist, hits

    def weight_distribution(self, threads: int = 1, cap: int = ENUM_CAP) -> list[int]:
        return self._sweep(threads=threads, cap=cap)[0]

    def min_weight(self, threads: int = 1, cap: int = ENUM_CAP) -> int:
        dist = self.weight_distribution(threads=threads, cap=cap)
        return next(w for w in range(1, self.n + 1) if dist[w])

    def shell(self, w: int, threads: int = 1, cap: int = ENUM_CAP) -> DesignSet:
        """All codewords of weight exactly w."""
        if not 0 <= w <= self.n:
            raise ValueError(f"shell weight {w} outside 0..{self.n}")
        _, hits = self._sweep(target=w, threads=threads, cap=cap)
        return DesignSet(self.n, w, tuple(Word(self.n, b) for b in hits))

    def span_of_shell(self, w: int, threads: int = 1, cap: int = ENUM_CAP) -> "Code":
        return Code(self.n, (word.bits for word in self.shell(w, threads=threads, cap=cap)))

    # -- cosets -----------------------------------------------------------------

    def coset_min_weight(self, sub: "Code", cap: int = ENUM_CAP) -> dict[int, int]:
        """Minimal weight of each coset of `sub` in this code, keyed by the
        coset label (bit i of the label selects the i-th extension basis row)."""
        if not sub.is_subcode_of(self):
            raise ValueError("coset quotient requires sub to be a subcode")
        ext: list[int] = []
        ext_pivots: list[int] = []
        for row in self.rref_rows:
            r = sub.reduce(row)
            for p, e in zip(ext_pivots, ext):
                if r >> p & 1:
                    r ^= e
            if r:
                ext.append(r)
                ext_pivots.append((r & -r).bit_length() - 1)
        q = len(ext)
        if q > 20:
            raise EnumerationCapError(f"quotient dimension {q} exceeds 20")
        sub._check_cap(cap)
        out: dict[int, int] = {}
        for label in range(1 << q):
            rep = 0
            for i in range(q):
                if label >> i & 1:
                    rep ^= ext[i]
            out[label] = min(
                (rep ^ bits).bit_count()
                for bits in _gray_sweep(sub.rref_rows, 0, 1 << sub.k)
            )
        return out

    # -- structural flags ----------------------------------------------------------

    def properties(self, threads: int = 1, cap: int = ENUM_CAP) -> "CodeProperties":
        rows = self.rref_rows
        even = all(r.bit_count() % 2 == 0 for r in rows)
        pair_even = all(
            (rows[i] & rows[j]).bit_count() % 2 == 0
            for i in range(len(rows))
            for j in range(i, len(rows))
        )
        doubly_even = pair_even and all(r.bit_count() % 4 == 0 for r in rows)
        self_orthogonal = pair_even and even
        self_dual = self_orthogonal and 2 * self.k == self.n
        return CodeProperties(
            is_even=even,
            is_doubly_even=doubly_even,
            is_self_orthogonal=self_orthogonal,
            is_self_dual=self_dual,
            min_weight=self.min_weight(threads=threads, cap=cap) if self.k else 0,
        )


@dataclass(frozen=True)
class CodeProperties:
    is_even: bool
    is_doubly_even: bool
    is_self_orthogonal: bool
    is_self_dual: bool
    min_weight: int


# -- generator-matrix files ------------------------------------------------------

def parse_generator_text(text: str) -> Code:
    """Parse the generator-matrix format: 'n k' then k rows of n bits.

    Blank lines and lines starting with '#' are ignored.  Errors report the
    offending 1-based line number.
    """
    header: tuple[int, int] | None = None
    rows: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2:
                raise CodeFileError("expected header 'n k'", lineno)
            try:
                n, k = int(parts[0]), int(parts[1])
            except ValueError:
                raise CodeFileError("non-integer header fields", lineno) from None
            if not 0 < n <= MAX_LENGTH or not 0 <= k <= n:
                raise CodeFileError(f"invalid dimensions n={n} k={k}", lineno)
            header = (n, k)
            continue
        n, k = header
        if len(rows) == k:
            raise CodeFileError(f"more than the {k} declared generator rows", lineno)
        if len(line) != n or any(ch not in "01" for ch in line):
            raise CodeFileError(f"expected exactly {n} characters from {{0,1}}", lineno)
        rows.append(line)
    if header is None:
        raise CodeFileError("missing header 'n k'", 1)
    n, k = header
    if len(rows) != k:
        raise CodeFileError(f"expected {k} generator rows, found {len(rows)}", 1)
    return Code(n, rows)


def format_generator_text(code: Code, comment: str | None = None) -> str:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.append(f"{code.n} {code.k}")
    lines.extend(str(word) for word in code.basis())
    return "\n".join(lines) + "\n"


def load_code(path) -> Code:
    with open(path, "r", encoding="ascii") as fh:
        return parse_generator_text(fh.read())
