"""
Kronecker coefficients with one hook, g(lam, mu, (n-k, 1^k)), counted with
barred tableaux.

Entries are ``(value, barred)`` pairs.  Two total orders are used:

* natural:       1b < 1 < 2b < 2 < ...
* small barred:  1b < 2b < ... < 1 < 2 < ...

A tableau is semistandard in a given order when rows and columns weakly
increase, no row holds two equal barred entries and no column holds two equal
unbarred entries.  Small-barred tableaux are converted to natural ones by
tableau switching: unbarred letters are slid up/left through the larger
barred letters, smallest value first.

The count: small-barred semistandard tableaux of shape lam, content mu, with
k barred entries, whose reading word is a ballot sequence and whose switched
tableau has an unbarred entry in its lower-left cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import InputError, InvariantError
from .partitions import Partition

NATURAL = "natural"
SMALL_BARRED = "small_barred"
ORDER_MODES = (NATURAL, SMALL_BARRED)

DEFAULT_MAX_N = 20

Entry = tuple  # (value: int, barred: bool)


def natural_key(e: Entry) -> tuple:
    return (e[0], 0 if e[1] else 1)


def small_barred_key(e: Entry) -> tuple:
    return (0 if e[1] else 1, e[0])


_KEYS = {NATURAL: natural_key, SMALL_BARRED: small_barred_key}


def format_entry(e: Entry) -> str:
    return f"{e[0]}b" if e[1] else str(e[0])


def parse_entry(tok: str) -> Entry:
    tok = tok.strip()
    barred = tok.endswith("b")
    try:
        value = int(tok[:-1] if barred else tok)
    except ValueError:
        raise InputError(f"bad tableau entry {tok!r}") from None
    if value <= 0:
        raise InputError(f"tableau entries must be positive, got {tok!r}")
    return (value, barred)


@dataclass(frozen=True)
class BarredTableau:
    shape: Partition
    rows: tuple                 # tuple of rows, each a tuple of entries
    order_mode: str = SMALL_BARRED

    @classmethod
    def from_rows(cls, rows, order_mode: str = SMALL_BARRED) -> "BarredTableau":
        rows = tuple(tuple((int(v), bool(b)) for v, b in row) for row in rows)
        shape = Partition(len(r) for r in rows)
        return cls(shape, rows, order_mode)

    @classmethod
    def parse(cls, text: str, order_mode: str = SMALL_BARRED) -> "BarredTableau":
        """Parse ``"1b 1 2 / 2"``: rows split by '/', entries by whitespace, 'b' marks a bar."""
        rows = [[parse_entry(tok) for tok in chunk.split()] for chunk in text.split("/")]
        return cls.from_rows([r for r in rows if r], order_mode)

    def __str__(self) -> str:
        return " / ".join(" ".join(format_entry(e) for e in row) for row in self.rows)

    def with_mode(self, order_mode: str) -> "BarredTableau":
        return BarredTableau(self.shape, self.rows, order_mode)

    def content(self) -> tuple:
        top = max((e[0] for row in self.rows for e in row), default=0)
        counts = [0] * top
        for row in self.rows:
            for v, _ in row:
                counts[v - 1] += 1
        return tuple(counts)

    def barred_count(self) -> int:
        return sum(1 for row in self.rows for e in row if e[1])

    def lower_left(self) -> Optional[Entry]:
        return self.rows[-1][0] if self.rows else None


def _check_grid(T: BarredTableau) -> None:
    if T.order_mode not in ORDER_MODES:
        raise InputError(f"unknown order mode {T.order_mode!r}")
    if tuple(len(r) for r in T.rows) != tuple(T.shape):
        raise InputError(f"grid rows {[len(r) for r in T.rows]} do not match shape {T.shape}")


def _semistandard(rows, key) -> bool:
    for r, row in enumerate(rows):
        seen_barred = set()
        for c, e in enumerate(row):
            if e[1]:
                if e[0] in seen_barred:
                    return False
                seen_barred.add(e[0])
            if c and key(row[c - 1]) > key(e):
                return False
            if r:
                above = rows[r - 1][c]
                if key(above) > key(e):
                    return False
                if not e[1] and not above[1] and above[0] == e[0]:
                    return False
    return True


def is_valid(T: BarredTableau) -> bool:
    _check_grid(T)
    return _semistandard(T.rows, _KEYS[T.order_mode])


def reading_word(T: BarredTableau) -> tuple:
    """
    Unbarred letters column by column from the right, each column read top to
    bottom; then the barred letters column by column from the left, each
    column read bottom to top.

    With the barred part stored conjugated (its columns as rows), the second
    half is that conjugate read right to left, top row first.  Putting the
    unbarred half first is the order that reproduces the character values.
    """
    if T.order_mode != SMALL_BARRED or not is_valid(T):
        raise InputError(f"reading word needs a valid small-barred tableau, got {T}")
    width = T.shape.part(1)
    columns = [[row[c] for row in T.rows if len(row) > c] for c in range(width)]
    word = []
    for col in reversed(columns):
        word.extend(e[0] for e in col if not e[1])
    for col in columns:
        word.extend(e[0] for e in reversed(col) if e[1])
    return tuple(word)


def is_ballot(word: Sequence[int]) -> bool:
    counts = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


# -- tableau switching ---------------------------------------------------------

def _out_of_order(grid, r, c) -> bool:
    e = grid[r][c]
    k = natural_key(e)
    if c and natural_key(grid[r][c - 1]) > k:
        return True
    if r and natural_key(grid[r - 1][c]) > k:
        return True
    return False


def switch_naive(T: BarredTableau) -> BarredTableau:
    """
    Reference switching: repeatedly take the smallest, then left-most, unbarred
    entry that is out of order in the natural order and slide it one cell at a
    time, swapping with the larger of its left and upper neighbours.
    """
    if T.order_mode != SMALL_BARRED or not is_valid(T):
        raise InputError(f"switching needs a valid small-barred tableau, got {T}")
    grid = [list(row) for row in T.rows]
    while True:
        candidates = [(grid[r][c][0], c, r)
                      for r in range(len(grid)) for c in range(len(grid[r]))
                      if not grid[r][c][1] and _out_of_order(grid, r, c)]
        if not candidates:
            break
        _, c, r = min(candidates)
        while _out_of_order(grid, r, c):
            a = grid[r][c - 1] if c else None
            b = grid[r - 1][c] if r else None
            if a is None:
                go_up = True
            elif b is None:
                go_up = False
            else:
                ka, kb = natural_key(a), natural_key(b)
                go_up = kb > ka or (kb == ka and not b[1])
            if go_up:
                grid[r][c], grid[r - 1][c] = grid[r - 1][c], grid[r][c]
                r -= 1
            else:
                grid[r][c], grid[r][c - 1] = grid[r][c - 1], grid[r][c]
                c -= 1
    return BarredTableau(T.shape, tuple(tuple(row) for row in grid), NATURAL)


def _colour_classes_ok(grid) -> bool:
    # each colour class on its own: unbarred rows weak / columns strict,
    # barred rows strict / columns weak
    for r, row in enumerate(grid):
        for c, e in enumerate(row):
            for nb in ([row[c - 1]] if c else []):
                if nb[1] == e[1] and (nb[0] > e[0] or (e[1] and nb[0] == e[0])):
                    return False
            if r:
                up = grid[r - 1][c]
                if up[1] == e[1] and (up[0] > e[0] or (not e[1] and up[0] == e[0])):
                    return False
    return True


def tableau_switch(T: BarredTableau) -> BarredTableau:
    """
    Switch a small-barred tableau into natural order.

    Letters are handled one unbarred value j at a time.  The unbarred j's form
    a horizontal strip lying outside the barred letters larger than j; those
    barred letters are pushed out through the strip, largest first (lowest
    first among equals).  A barred letter with a j directly below drops one
    row; otherwise, if a run of j's starts to its right, it jumps to the end
    of the run in one move, the run shifting one cell left.
    """
    if T.order_mode != SMALL_BARRED or not is_valid(T):
        raise InputError(f"switching needs a valid small-barred tableau, got {T}")
    grid = [list(row) for row in T.rows]
    nrows = len(grid)

    def is_j(r, c, j):
        return 0 <= r < nrows and 0 <= c < len(grid[r]) and grid[r][c] == (j, False)

    values = sorted({e[0] for row in grid for e in row if not e[1]})
    for j in values:
        movers = sorted(((e[0], r, c) for r, row in enumerate(grid)
                         for c, e in enumerate(row) if e[1] and e[0] > j),
                        key=lambda t: (t[0], t[1]), reverse=True)
        for _, r, c in movers:
            while True:
                if is_j(r + 1, c, j):
                    grid[r][c], grid[r + 1][c] = grid[r + 1][c], grid[r][c]
                    r += 1
                elif is_j(r, c + 1, j):
                    end = c + 1
                    while is_j(r, end + 1, j):
                        end += 1
                    x = grid[r][c]
                    grid[r][c:end] = grid[r][c + 1:end + 1]
                    grid[r][end] = x
                    c = end
                else:
                    break
            if not _colour_classes_ok(grid):
                raise InvariantError(f"switching {T} broke semistandardness at value {j}")
    out = BarredTableau(T.shape, tuple(tuple(row) for row in grid), NATURAL)
    if not is_valid(out) or out.content() != T.content():
        raise InvariantError(f"switching {T} produced {out}, not a natural tableau")
    return out


# -- enumeration and the counting rule ----------------------------------------

def small_barred_tableaux(shape, content, k: int) -> Iterator[BarredTableau]:
    """All small-barred semistandard tableaux of the given shape/content with k bars."""
    shape, content = Partition(shape), tuple(content)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    if sum(content) != len(cells):
        return
    grid = [[None] * length for length in shape]
    left = list(content)
    alphabet = [(v, True) for v in range(1, len(content) + 1)] + \
               [(v, False) for v in range(1, len(content) + 1)]
    bars_left = k

    def rec(pos):
        nonlocal bars_left
        if pos == len(cells):
            if bars_left == 0:
                yield BarredTableau(shape, tuple(tuple(row) for row in grid), SMALL_BARRED)
            return
        if bars_left > len(cells) - pos:
            return
        r, c = cells[pos]
        lo_keys = []
        if c:
            lo_keys.append(grid[r][c - 1])
        if r:
            lo_keys.append(grid[r - 1][c])
        for e in alphabet:
            v, barred = e
            if not left[v - 1] or (barred and not bars_left):
                continue
            key = small_barred_key(e)
            if any(small_barred_key(x) > key for x in lo_keys):
                continue
            if barred and c and grid[r][c - 1] == e:
                continue
            if not barred and r and grid[r - 1][c] == e:
                continue
            grid[r][c] = e
            left[v - 1] -= 1
            bars_left -= barred
            yield from rec(pos + 1)
            bars_left += barred
            left[v - 1] += 1
        grid[r][c] = None

    yield from rec(0)


def _hook_args(lam, mu, k, max_n):
    lam, mu = Partition(lam), Partition(mu)
    n = lam.size()
    if mu.size() != n:
        raise InputError(f"|lam| = {n} but |mu| = {mu.size()}")
    if n == 0 or not 0 <= k < n:
        raise InputError(f"hook needs 0 <= k < n, got n = {n}, k = {k}")
    if n > max_n:
        raise InputError(f"n = {n} exceeds the enumeration cap {max_n}")
    return lam, mu, n


def hook_tableaux(lam, mu, k: int, max_n: int = DEFAULT_MAX_N,
                  switch=tableau_switch) -> Iterator[BarredTableau]:
    """The tableaux counted by ``count_hook_kron``."""
    lam, mu, n = _hook_args(lam, mu, k, max_n)
    for T in small_barred_tableaux(lam, mu, k):
        if not is_ballot(reading_word(T)):
            continue
        corner = switch(T).lower_left()
        if not corner[1]:
            yield T


def count_hook_kron(lam, mu, k: int, max_n: int = DEFAULT_MAX_N) -> int:
    """g(lam, mu, (n-k, 1^k))."""
    lam, mu, n = _hook_args(lam, mu, k, max_n)
    if len(lam) * len(mu) < k + 1:
        return 0
    return sum(1 for _ in hook_tableaux(lam, mu, k, max_n))
