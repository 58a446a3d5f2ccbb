"""OEIS b-file loading, caching and cross-checking.

Fully operable offline: b-files for the cross-checked sequences ship with the
package under ``fixtures/oeis``.  Lookup order for the fixture directory is
the CATALAN_OEIS_DIR environment variable, then ./fixtures/oeis if it exists,
then the bundled data.  Network fetches (against https://oeis.org) only happen
when explicitly enabled and no fixture is present; fetched files are cached
atomically next to the fixtures.
"""

from __future__ import annotations

import os
import re
import tempfile
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import AlignmentError, BFileParseError, FixtureNotFoundError

ENV_VAR = "CATALAN_OEIS_DIR"
_ID_RE = re.compile(r"^A\d{6}$")
_NETWORK_URL = "https://oeis.org/{id}/b{digits}.txt"


@dataclass(frozen=True)
class OeisSeq:
    id: str
    offset: int
    values: tuple[int, ...]
    source: str  # "fixture" or "network"

    def __len__(self) -> int:
        return len(self.values)


def _validate_id(seq_id: str) -> str:
    if not _ID_RE.match(seq_id):
        raise ValueError(f"malformed OEIS id {seq_id!r} (expected A followed by 6 digits)")
    return seq_id


def fixture_directory(explicit: str | os.PathLike | None = None) -> Path:
    """Resolve the fixture directory (see module docstring for the order)."""
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    local = Path("fixtures/oeis")
    if local.is_dir():
        return local
    return Path(str(resources.files("catalan_ops") / "fixtures" / "oeis"))


def parse_b_file(text: str, seq_id: str) -> OeisSeq:
    """Parse b-file text: one "n a(n)" pair per line, '#' comments ignored."""
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(f"{seq_id} line {lineno}: expected 'n value', got {raw!r}")
        try:
            n, value = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise BFileParseError(f"{seq_id} line {lineno}: non-integer field in {raw!r}") from exc
        pairs.append((n, value))
    if not pairs:
        raise BFileParseError(f"{seq_id}: empty b-file")
    offset = pairs[0][0]
    for i, (n, _) in enumerate(pairs):
        if n != offset + i:
            raise BFileParseError(f"{seq_id}: indices not consecutive at n={n}")
    return OeisSeq(id=seq_id, offset=offset, values=tuple(v for _, v in pairs), source="fixture")


def _fetch(seq_id: str) -> str:
    import requests

    url = _NETWORK_URL.format(id=seq_id, digits=seq_id[1:])
    response = requests.get(url, timeout=30)
    if response.status_code != 200:
        raise FixtureNotFoundError(f"{seq_id}: HTTP {response.status_code} from {url}")
    return response.text


def _cache_write(directory: Path, seq_id: str, text: str) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=f".b{seq_id[1:]}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, directory / f"b{seq_id[1:]}.txt")
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load(
    seq_id: str,
    count: int,
    offline_only: bool = True,
    fixture_dir: str | os.PathLike | None = None,
) -> OeisSeq:
    """Load at least ``count`` values of a sequence, preferring fixtures.

    Raises FixtureNotFoundError when no fixture exists and the network is
    disabled (or the fetch fails), and BFileParseError on malformed content.
    """
    _validate_id(seq_id)
    if count < 1:
        raise ValueError("count must be >= 1")
    directory = fixture_directory(fixture_dir)
    path = directory / f"b{seq_id[1:]}.txt"
    if path.is_file():
        seq = parse_b_file(path.read_text(), seq_id)
    elif offline_only:
        raise FixtureNotFoundError(f"no fixture for {seq_id} in {directory} and network disabled")
    else:
        text = _fetch(seq_id)
        seq = parse_b_file(text, seq_id)
        seq = OeisSeq(id=seq.id, offset=seq.offset, values=seq.values, source="network")
        _cache_write(directory, seq_id, text)
    if len(seq) < count:
        raise FixtureNotFoundError(
            f"{seq_id}: only {len(seq)} values available, {count} requested"
        )
    return seq


def local_values(seq_id: str, count: int) -> list[int]:
    """Locally computed values for the cross-checked sequence ids.

    Raises KeyError for ids this library does not generate.
    """
    from . import combinatorics as comb
    from .combinatorics import TriangleKind

    if count < 1:
        raise ValueError("count must be >= 1")
    if seq_id == "A086347":
        return [comb.alpha(k) for k in range(1, count + 1)]
    if seq_id in ("A039598", "A039599"):
        kind = TriangleKind.B if seq_id == "A039598" else TriangleKind.A
        out: list[int] = []
        n = 1 if kind is TriangleKind.B else 0
        while len(out) < count:
            out.extend(comb.triangle_row(kind, n))
            n += 1
        return out[:count]
    if seq_id in ("A194725", "A051550"):
        sums = [comb.quarter_weighted_row_sums(n) for n in range(1, count + 1)]
        return [s.a for s in sums] if seq_id == "A194725" else [s.d for s in sums]
    if seq_id in ("A130970", "A132863"):
        sums = [comb.quarter_weighted_row_sums(n) for n in range(count)]
        return [s.b for s in sums] if seq_id == "A130970" else [s.e for s in sums]
    raise KeyError(seq_id)


@dataclass(frozen=True)
class CompareReport:
    id: str
    shift: int
    match_length: int
    first_mismatch: int | None  # index into the computed values
    full_match: bool


def compare(
    seq_id: str,
    computed: list[int],
    offline_only: bool = True,
    fixture_dir: str | os.PathLike | None = None,
    align: int | None = None,
) -> CompareReport:
    """Compare locally computed values against the reference sequence.

    The first computed value is aligned with reference index ``offset + shift``
    for the best shift within +-3 (or the explicit ``align``); an alignment is
    accepted when the first five overlapping values agree.  Reports the match
    length and the first mismatching computed index, raising AlignmentError if
    every candidate shift disagrees within the first five entries.
    """
    if not computed:
        raise ValueError("computed values must be nonempty")
    seq = load(seq_id, 1, offline_only=offline_only, fixture_dir=fixture_dir)
    shifts = [align] if align is not None else [0, 1, -1, 2, -2, 3, -3]
    best: CompareReport | None = None
    for shift in shifts:
        if shift < 0 or shift >= len(seq.values):
            continue
        overlap = min(len(computed), len(seq.values) - shift)
        if overlap < 1:
            continue
        probe = min(5, overlap)
        if any(computed[i] != seq.values[shift + i] for i in range(probe)):
            continue
        length = 0
        mismatch: int | None = None
        for i in range(overlap):
            if computed[i] != seq.values[shift + i]:
                mismatch = i
                break
            length += 1
        report = CompareReport(
            id=seq_id,
            shift=shift,
            match_length=length,
            first_mismatch=mismatch,
            full_match=mismatch is None,
        )
        if mismatch is None:
            return report
        if best is None or length > best.match_length:
            best = report
    if best is None:
        raise AlignmentError(
            f"{seq_id}: no shift in +-3 matches the first five computed values"
        )
    return best
