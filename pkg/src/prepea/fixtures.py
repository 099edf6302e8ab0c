"""Built-in models, addressable from the command line as ``fixture:<name>``.

Tables are transcribed cell by cell from their printed form.  Two printed
tables need a repair, noted next to them.
"""

from __future__ import annotations

from .errors import ParseError
from .serialize import Bundle, loads_text

_SQUARE_LEQ = """\
leq:
  0: a b
  a: 1
  b: 1
"""

FIXTURES: dict[str, str] = {}

# Left-minus candidate on the square 0 < a, b < 1; the order comes from the table.
FIXTURES["ex-4-1-lminus"] = """\
kind: tables
elements: 0 a b 1
zero: 0
table /
     0 a b 1
  0  0 . . .
  a  a 0 . .
  b  b . 0 .
  1  1 a a 0
"""

# The sum generated from ex-4-1-lminus, with the square order.
FIXTURES["ex-4-1-plus"] = """\
kind: tables
elements: 0 a b 1
zero: 0
table +
     0 a b 1
  0  0 a b 1
  a  a 1 . .
  b  b 1 . .
  1  1 . . .
""" + _SQUARE_LEQ

# a, b < c, d with c, d incomparable; b + a has no infimum.
FIXTURES["ex-4-2-lminus"] = """\
kind: tables
elements: 0 a b c d
zero: 0
table /
     0 a b c d
  0  0 . . . .
  a  a 0 . . .
  b  b . 0 . .
  c  c 0 a 0 .
  d  d 0 a . 0
"""

# Left minus with the sum and right minus computed from it; 0 < a < b, c.
FIXTURES["ex-4-3-triple"] = """\
kind: gppea
elements: 0 a b c
zero: 0
table /
     0 a b c
  0  0 . . .
  a  a 0 . .
  b  b a 0 .
  c  c a . 0
table +
     0 a b c
  0  0 a b c
  a  a a . .
  b  b . . .
  c  c . . .
table \\
     0 a b c
  0  0 . . .
  a  a 0 . .
  b  b a 0 .
  c  c a . 0
"""

# Sums: only with 0, plus b + a = 1.  The printed "1/b = 0" must read
# "1\b = 0": 1/b = a is stated one clause earlier.
FIXTURES["strict-gwppea-4"] = """\
kind: gppea
elements: 0 a b 1
zero: 0
table +
     0 a b 1
  0  0 a b 1
  a  a . . .
  b  b 1 . .
  1  1 . . .
table /
     0 a b 1
  0  0 . . .
  a  a 0 . .
  b  b . 0 .
  1  1 0 a 0
table \\
     0 a b 1
  0  0 . . .
  a  a 0 . .
  b  b . 0 .
  1  1 b 0 0
"""

FIXTURES["ex-6-1"] = """\
kind: gppea
elements: 0 1 2 3
zero: 0
table +
     0 1 2 3
  0  0 1 2 3
  1  1 . . .
  2  2 . 3 .
  3  3 . . .
table /
     0 1 2 3
  0  0 . . .
  1  1 0 . .
  2  2 . 0 .
  3  3 0 2 0
table \\
     0 1 2 3
  0  0 . . .
  1  1 0 . .
  2  2 . 0 .
  3  3 0 2 0
"""

FIXTURES["ex-6-2"] = """\
kind: gppea
elements: 0 1 2 3
zero: 0
table +
     0 1 2 3
  0  0 1 2 3
  1  1 3 . .
  2  2 . . .
  3  3 . . .
table /
     0 1 2 3
  0  0 . . .
  1  1 0 . .
  2  2 0 0 .
  3  3 1 0 0
table \\
     0 1 2 3
  0  0 . . .
  1  1 0 . .
  2  2 0 0 .
  3  3 1 0 0
"""

# The printed sum table drops the x+0 column in rows 1-4 (row 1 reads
# "3 4 . . ."); the column is restored here, which also matches the minus
# table and the order 0 < 1 < 2 < 4, 1 < 3 < 4.
FIXTURES["ex-6-3-rip-not-rdp"] = """\
kind: gppea
elements: 0 1 2 3 4
zero: 0
table +
     0 1 2 3 4
  0  0 1 2 3 4
  1  1 3 4 . .
  2  2 4 4 . .
  3  3 . . . .
  4  4 . . . .
table /
     0 1 2 3 4
  0  0 . . . .
  1  1 0 . . .
  2  2 0 0 . .
  3  3 1 . 0 .
  4  4 2 2 0 0
table \\
     0 1 2 3 4
  0  0 . . . .
  1  1 0 . . .
  2  2 0 0 . .
  3  3 1 . 0 .
  4  4 2 2 0 0
"""

FIXTURES["ex-6-4-lmodrip"] = """\
kind: gppea
elements: 0 1 2 3 4 5 6
zero: 0
table +
     0 1 2 3 4 5 6
  0  0 1 2 3 4 5 6
  1  1 . 5 6 6 . .
  2  2 . 4 4 . . .
  3  3 . . . . . .
  4  4 . . . . . .
  5  5 . 6 6 . . .
  6  6 . . . . . .
table /
     0 1 2 3 4 5 6
  0  0 . . . . . .
  1  1 0 . . . . .
  2  2 . 0 . . . .
  3  3 . 0 0 . . .
  4  4 . 3 0 0 . .
  5  5 2 0 . . 0 .
  6  6 4 3 0 0 3 0
table \\
     0 1 2 3 4 5 6
  0  0 . . . . . .
  1  1 0 . . . . .
  2  2 . 0 . . . .
  3  3 . 0 0 . . .
  4  4 . 2 2 0 . .
  5  5 0 1 . . 0 .
  6  6 0 5 5 1 0 0
"""

FIXTURES["ex-6-5-rmodrip"] = """\
kind: gppea
elements: 0 1 2 3 4 5 6
zero: 0
table +
     0 1 2 3 4 5 6
  0  0 1 2 3 4 5 6
  1  1 . . . . . .
  2  2 5 4 . . 6 .
  3  3 6 4 . . 6 .
  4  4 6 . . . . .
  5  5 . . . . . .
  6  6 . . . . . .
table /
     0 1 2 3 4 5 6
  0  0 . . . . . .
  1  1 0 . . . . .
  2  2 . 0 . . . .
  3  3 . 0 0 . . .
  4  4 . 2 2 0 . .
  5  5 0 1 . . 0 .
  6  6 0 5 5 1 0 0
table \\
     0 1 2 3 4 5 6
  0  0 . . . . . .
  1  1 0 . . . . .
  2  2 . 0 . . . .
  3  3 . 0 0 . . .
  4  4 . 3 0 0 . .
  5  5 2 0 . . 0 .
  6  6 4 3 0 0 3 0
"""

FIXTURES["two-chain-wppea"] = """\
kind: wppea
elements: 0 1
zero: 0
unit: 1
table +
     0 1
  0  0 1
  1  1 .
L: 1 0
R: 1 0
"""

FIXTURES["square-poset"] = """\
kind: poset
elements: 0 a b 1
zero: 0
""" + _SQUARE_LEQ

FIXTURES["square-docposet"] = """\
kind: docposet
elements: 0 a b 1
zero: 0
unit: 1
L: 1 b a 0
R: 1 b a 0
""" + _SQUARE_LEQ

# Fixtures that are complete generalized models.
GPPEA_FIXTURES = ("ex-4-3-triple", "strict-gwppea-4", "ex-6-1", "ex-6-2",
                  "ex-6-3-rip-not-rdp", "ex-6-4-lmodrip", "ex-6-5-rmodrip")


def names() -> list[str]:
    return sorted(FIXTURES)


def fixture(name: str) -> Bundle:
    if name not in FIXTURES:
        raise ParseError(f"unknown fixture {name!r}; known: {', '.join(names())}")
    return loads_text(FIXTURES[name])


def fixture_model(name: str):
    return fixture(name).to_model()
