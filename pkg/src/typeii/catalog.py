"""Deterministic constructions of the concrete codes used for verification.

Catalog names: e8, e8e8, d16plus, golay24, rm32, qr48.  Each entry records
the properties the built code must have; `build(name, check=True)` asserts
them (the qr48 check sweeps 2^24 codewords, so it is opt-in via `check`).
Every entry is also shipped as a generator-matrix text file under data/.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Callable

from .gf2 import Code, load_code


def _qr_set(p: int) -> set[int]:
    return {pow(x, 2, p) for x in range(1, p)}


def _gf2poly_mod(a: int, b: int) -> int:
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def _gf2poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _gf2poly_mod(a, b)
    return a


def _build_e8() -> Code:
    # extended Hamming [8,4,4]: all-ones plus the three coordinate hyperplanes
    return Code(8, ["11111111", "01010101", "00110011", "00001111"])


def _build_e8e8() -> Code:
    left = _build_e8()
    rows = [w.bits for w in left.basis()]
    return Code(16, [r for r in rows] + [r << 8 for r in rows])


def _build_d16plus() -> Code:
    # seven overlapping tetrads 1111 at positions {2i..2i+3} plus the glue (10)^8
    rows = [0b1111 << (2 * i) for i in range(7)]
    rows.append(sum(1 << (2 * j) for j in range(8)))
    return Code(16, rows)


def _build_golay24() -> Code:
    # standard bordered-circulant form [I | B]: for i, j <= 10,
    # B[i][j] = 1 iff (i - j) mod 11 is 0 or a quadratic residue mod 11;
    # twelfth row and column all ones, corner 0.
    hits = _qr_set(11) | {0}
    rows = []
    for i in range(12):
        bits = 1 << i
        for j in range(12):
            if i < 11 and j < 11:
                on = (i - j) % 11 in hits
            else:
                on = not (i == 11 and j == 11)
            if on:
                bits |= 1 << (12 + j)
        rows.append(bits)
    return Code(24, rows)


def _build_rm32() -> Code:
    # Reed-Muller RM(2,5): evaluation vectors of all monomials of degree <= 2
    def ev(f: Callable[[int], int]) -> int:
        return sum(1 << t for t in range(32) if f(t))

    gens = [ev(lambda t: 1)]
    gens += [ev(lambda t, i=i: t >> i & 1) for i in range(5)]
    gens += [
        ev(lambda t, i=i, j=j: (t >> i & 1) & (t >> j & 1))
        for i in range(5)
        for j in range(i + 1, 5)
    ]
    return Code(32, gens)


def _build_extended_qr(p: int) -> Code:
    # cyclic quadratic-residue code of prime length p from the generator
    # polynomial gcd(x^p + 1, sum_{r in QR(p)} x^r), extended by a parity bit
    theta = sum(1 << r for r in _qr_set(p))
    g = _gf2poly_gcd((1 << p) | 1, theta)
    k = p - (g.bit_length() - 1)
    rows = []
    for i in range(k):
        poly = g << i
        rows.append(poly | ((poly.bit_count() & 1) << p))
    return Code(p + 1, rows)


def _build_qr48() -> Code:
    return _build_extended_qr(47)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    n: int
    k: int
    builder: Callable[[], Code]
    min_weight: int
    shell_count: int  # number of minimal-weight codewords
    self_dual: bool
    deep: bool = False  # property check requires a 2^k sweep past desk scale


CATALOG: dict[str, CatalogEntry] = {
    e.name: e
    for e in (
        CatalogEntry("e8", 8, 4, _build_e8, 4, 14, True),
        CatalogEntry("e8e8", 16, 8, _build_e8e8, 4, 28, True),
        CatalogEntry("d16plus", 16, 8, _build_d16plus, 4, 28, True),
        CatalogEntry("golay24", 24, 12, _build_golay24, 8, 759, True),
        CatalogEntry("rm32", 32, 16, _build_rm32, 8, 620, True),
        CatalogEntry("qr48", 48, 24, _build_qr48, 12, 17296, True, deep=True),
    )
}


def build(name: str, check: bool = False, threads: int = 1) -> Code:
    """Construct a catalog code; with check=True assert its expected record."""
    try:
        entry = CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog code {name!r}; known: {sorted(CATALOG)}") from None
    code = entry.builder()
    if code.n != entry.n or code.k != entry.k:
        raise AssertionError(f"{name}: built [{code.n},{code.k}], expected [{entry.n},{entry.k}]")
    if check:
        dist = code.weight_distribution(threads=threads)
        min_weight = next(w for w in range(1, code.n + 1) if dist[w])
        if (code.dual() == code) != entry.self_dual:
            raise AssertionError(f"{name}: self-dual flag mismatch")
        if min_weight != entry.min_weight:
            raise AssertionError(
                f"{name}: min weight {min_weight}, expected {entry.min_weight}"
            )
        if dist[entry.min_weight] != entry.shell_count:
            raise AssertionError(
                f"{name}: {dist[entry.min_weight]} minimal words, expected {entry.shell_count}"
            )
    return code


def data_file_text(name: str) -> str:
    """Contents of the shipped generator-matrix file for a catalog code."""
    from .gf2 import format_generator_text

    entry = CATALOG[name]
    code = build(name)
    comment = (
        f"{name}: [{entry.n},{entry.k},{entry.min_weight}] "
        f"{'self-dual ' if entry.self_dual else ''}binary code (canonical RREF rows)"
    )
    return format_generator_text(code, comment=comment)


def resolve(name_or_path: str) -> Code:
    """A catalog name, a shipped data file name, or a path to a matrix file."""
    if name_or_path in CATALOG:
        return build(name_or_path)
    return load_code(name_or_path)


def shipped_file(name: str):
    """Path-like handle to the generator-matrix file shipped under data/."""
    return resources.files(__package__).joinpath("data", f"{name}.txt")
