"""
The 24-row S_4 reference table: loading, validation and regeneration.

File format: UTF-8, tab separated, one permutation per row with columns
``sigma Ic El.Ic Mc El.Mc Sc El.Sc``. Permutations and code words are digit
strings, position sets are concatenated digits with ``-`` for the empty set.
A leading ``#`` line is the header; a blank line separates consecutive
inverse-descent-set classes. The Sc column is data only: it is never
recomputed, but its El column is.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import groupby, permutations
from pathlib import Path

from .codes import check_subdiagonal, format_code, ic, mc, parse_code
from .perm import Perm, PositionSet, format_perm, iligne, parse_perm
from .setstats import el_set

__all__ = [
    "GoldenRow", "FixtureError", "HEADER", "fixture_text",
    "load_golden_fixture", "parse_fixture", "emit_table", "sc_code",
]

HEADER = "# sigma\tIc\tEl.Ic\tMc\tEl.Mc\tSc\tEl.Sc"
N = 4


class FixtureError(ValueError):
    pass


@dataclass(frozen=True)
class GoldenRow:
    sigma: Perm
    ic: tuple[int, ...]
    el_ic: PositionSet
    mc: tuple[int, ...]
    el_mc: PositionSet
    sc: tuple[int, ...]
    el_sc: PositionSet
    block: int = 0

    def cells(self) -> list[str]:
        return [
            format_perm(self.sigma, compact=True),
            format_code(self.ic), str(self.el_ic),
            format_code(self.mc), str(self.el_mc),
            format_code(self.sc), str(self.el_sc),
        ]


def fixture_text() -> str:
    return resources.files("permstats").joinpath("data/golden_s4.tsv").read_text(encoding="utf-8")


def parse_fixture(text: str) -> list[GoldenRow]:
    """Parse and validate fixture text; every problem names its row."""
    rows = []
    block = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.startswith("#"):
            continue
        if not line.strip():
            if rows and rows[-1].block == block:
                block += 1
            continue
        cells = line.split("\t")
        where = f"line {lineno} ({cells[0].strip()})"
        if len(cells) != 7:
            raise FixtureError(f"{where}: expected 7 columns, got {len(cells)}")
        try:
            sigma = parse_perm(cells[0])
            codes = [check_subdiagonal(parse_code(cells[i])) for i in (1, 3, 5)]
            sets = [PositionSet.parse(cells[i], N) for i in (2, 4, 6)]
        except ValueError as exc:
            raise FixtureError(f"{where}: {exc}") from None
        if len(sigma) != N or any(len(c) != N for c in codes):
            raise FixtureError(f"{where}: entries must have length {N}")
        rows.append(GoldenRow(sigma, codes[0], sets[0], codes[1], sets[1], codes[2], sets[2], block))
    _validate(rows)
    return rows


def _validate(rows: list[GoldenRow]):
    if len(rows) != 24:
        raise FixtureError(f"expected 24 rows, found {len(rows)}")
    if sorted(r.sigma for r in rows) != list(permutations(range(1, N + 1))):
        raise FixtureError("sigma column is not S_4")
    for r in rows:
        where = format_perm(r.sigma, compact=True)
        checks = [
            ("Ic", format_code(r.ic), format_code(ic(r.sigma))),
            ("El.Ic", str(r.el_ic), str(el_set(ic(r.sigma)))),
            ("Mc", format_code(r.mc), format_code(mc(r.sigma))),
            ("El.Mc", str(r.el_mc), str(el_set(mc(r.sigma)))),
            ("El.Sc", str(r.el_sc), str(el_set(r.sc))),
        ]
        for col, stored, fresh in checks:
            if stored != fresh:
                raise FixtureError(f"row {where}: {col} column has {stored}, recomputed {fresh}")
    seen = set()
    for block, members in groupby(rows, key=lambda r: r.block):
        classes = {iligne(r.sigma) for r in members}
        if len(classes) != 1:
            raise FixtureError(f"block {block} mixes Iligne classes {sorted(map(str, classes))}")
        cls = classes.pop()
        if cls in seen:
            raise FixtureError(f"Iligne class {cls} is split across blocks")
        seen.add(cls)


def load_golden_fixture(path: str | Path | None = None) -> list[GoldenRow]:
    text = fixture_text() if path is None else Path(path).read_text(encoding="utf-8")
    return parse_fixture(text)


@lru_cache(maxsize=None)
def _sc_map() -> dict[Perm, tuple[int, ...]]:
    return {r.sigma: r.sc for r in load_golden_fixture()}


def sc_code(p: Perm) -> tuple[int, ...]:
    """Sc-code looked up in the shipped table; only n = 4 is available."""
    if len(p) != N:
        raise ValueError(f"Sc is only tabulated for n = {N}, not n = {len(p)}")
    return _sc_map()[tuple(p)]


def emit_table(rows: list[GoldenRow] | None = None) -> str:
    """
    Regenerate the table in fixture format. Row order (and so the block
    order) is taken from the fixture; every column except Sc is recomputed.
    """
    if rows is None:
        rows = load_golden_fixture()
    lines = [HEADER]
    prev = None
    for r in rows:
        cls = iligne(r.sigma)
        if prev is not None and cls != prev:
            lines.append("")
        prev = cls
        fresh = GoldenRow(r.sigma, ic(r.sigma), el_set(ic(r.sigma)),
                          mc(r.sigma), el_set(mc(r.sigma)), r.sc, el_set(r.sc))
        lines.append("\t".join(fresh.cells()))
    return "\n".join(lines) + "\n"
