#!/usr/bin/env python3
"""Regenerate the bundled OEIS b-file fixtures.

The values are derived here from first principles, independently of the
library code the fixtures later cross-check: both Catalan triangles are grown
with their additive recurrences (never the binomial closed forms), and the
weighted row sums are exact Fraction arithmetic.  A handful of well-known
leading values are asserted as anchors before anything is written.

Sequences produced:

    A039598  Catalan triangle B (rows 1, 21, 541, ...) flattened row-major
    A039599  Catalan triangle A (rows 1, 11, 231, ...) flattened row-major
    A086347  alpha(k) = 4 (alpha(k-1) + alpha(k-2)), alpha(1) = 1, alpha(2) = 5
    A194725  a(n) = 4^n     sum_k B[n][k] (1/4)^k,  n >= 1
    A130970  b(n) = 4^(n+1) sum_k A[n][k] (1/4)^k,  n >= 0
    A051550  d(n) = -(-4)^n sum_k B[n][k] (-1/4)^k, n >= 1 (alternating signs)
    A132863  e(n) = -4^(n+1) sum_k A[n][k] (-1/4)^k, n >= 0

Usage: python tools/gen_oeis_fixtures.py [output_dir]
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

TERMS = 120  # > 50 required by the offline checks; cheap to keep generous
DEFAULT_OUT = Path(__file__).resolve().parent.parent / "src" / "catalan_ops" / "fixtures" / "oeis"


def grow_triangle(kind: str, rows: int) -> list[list[int]]:
    """Rows of the B (seed [1] at n=1) or A (seed [1] at n=0) triangle.

    X[n][k] = X[n-1][k-1] + 2 X[n-1][k] + X[n-1][k+1] for k >= 2 with
    out-of-range entries 0; the first column doubles the entry above for B
    (2 X[n-1][1] + X[n-1][2]) but not for A (X[n-1][1] + X[n-1][2]).
    """
    out = [[1]]
    for _ in range(rows - 1):
        prev = out[-1]

        def at(k: int) -> int:
            return prev[k - 1] if 1 <= k <= len(prev) else 0

        row = []
        for k in range(1, len(prev) + 2):
            if k == 1 and kind == "A":
                row.append(at(1) + at(2))
            else:
                row.append(at(k - 1) + 2 * at(k) + at(k + 1))
        out.append(row)
    return out


def weighted(rows: list[list[int]], x: Fraction) -> list[Fraction]:
    return [sum(v * x**k for k, v in enumerate(row, start=1)) for row in rows]


def to_int(value: Fraction, what: str) -> int:
    assert value.denominator == 1, f"{what} did not clear denominators: {value}"
    return int(value)


def b_file(seq_id: str, offset: int, values: list[int]) -> str:
    lines = [f"# b-file for {seq_id}, generated by tools/gen_oeis_fixtures.py"]
    lines += [f"{offset + i} {v}" for i, v in enumerate(values)]
    return "\n".join(lines) + "\n"


def main() -> None:
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else DEFAULT_OUT
    out_dir.mkdir(parents=True, exist_ok=True)

    rows_needed = 20  # 20 rows flatten to 210 entries for B, 230 for A
    b_rows = grow_triangle("B", rows_needed)
    a_rows = grow_triangle("A", rows_needed)
    assert b_rows[4] == [42, 48, 27, 8, 1]
    assert b_rows[5] == [132, 165, 110, 44, 10, 1]
    assert a_rows[5] == [42, 90, 75, 35, 9, 1]
    assert a_rows[6] == [132, 297, 275, 154, 54, 11, 1]

    flat_b = [v for row in b_rows for v in row]
    flat_a = [v for row in a_rows for v in row]

    alpha = [1, 5]
    while len(alpha) < TERMS:
        alpha.append(4 * (alpha[-1] + alpha[-2]))
    assert alpha[:5] == [1, 5, 24, 116, 560]

    big_b = grow_triangle("B", TERMS)
    big_a = grow_triangle("A", TERMS + 1)
    q = Fraction(1, 4)
    a_seq = [to_int(4**n * s, f"a({n})")
             for n, s in enumerate(weighted(big_b, q), start=1)]
    d_seq = [to_int(-((-4) ** n) * s, f"d({n})")
             for n, s in enumerate(weighted(big_b, -q), start=1)]
    b_seq = [to_int(4 ** (n + 1) * s, f"b({n})")
             for n, s in enumerate(weighted(big_a, q), start=0)]
    e_seq = [to_int(-(4 ** (n + 1)) * s, f"e({n})")
             for n, s in enumerate(weighted(big_a, -q), start=0)]
    assert a_seq[:4] == [1, 9, 97, 1145]
    assert b_seq[:4] == [1, 5, 45, 485]
    assert d_seq[:4] == [-1, 7, -65, 695]
    assert e_seq[:4] == [1, 3, 21, 195]
    # cross identities: the A sums are (1 +- 1/4)-multiples of the B sums
    assert all(b_seq[n] == 5 * a_seq[n - 1] for n in range(1, TERMS))
    assert all(e_seq[n] == 3 * abs(d_seq[n - 1]) for n in range(1, TERMS))

    files = {
        "A039598": (0, flat_b),
        "A039599": (0, flat_a),
        "A086347": (1, alpha),
        "A194725": (1, a_seq),
        "A130970": (0, b_seq),
        "A051550": (1, d_seq),
        "A132863": (0, e_seq),
    }
    for seq_id, (offset, values) in files.items():
        path = out_dir / f"b{seq_id[1:]}.txt"
        path.write_text(b_file(seq_id, offset, values))
        print(f"wrote {path} ({len(values)} terms)")


if __name__ == "__main__":
    main()
