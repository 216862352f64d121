"""Search engine for integers that are palindromes in two bases at once.

The engine enumerates palindromes in one base (chosen by exact count
comparison so the sparser stream drives) and tests each candidate in the
other base with an early-exit digit comparison.  Long runs persist a
resumable checkpoint; resuming yields output identical to an
uninterrupted run.
"""

from __future__ import annotations

import json
import os
import tempfile
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .palgen import _half_range, _least_half_reaching, count_palindromes_upto, mirror_half
from .radix import DomainError, check_base, digit_count

CHECKPOINT_VERSION = "simulpal-checkpoint-v1"

# halves per work unit; one unit is the parallelism and mid-block checkpoint grain
CHUNK_HALVES = 400_000

# fixed-width digit-reversal tables are capped at this many entries
_REV_TABLE_CAP = 65536


class CheckpointMismatchError(RuntimeError):
    """Checkpoint on disk does not belong to the requested search."""


def is_palindrome_early_exit(n: int, h: int) -> bool:
    """Palindrome test in base ``h`` that stops at the first digit mismatch.

    Walks the digit string from both ends at once: the i-th highest digit
    comes from dividing a running upper remainder by the stored power
    h**(k-i) (the power itself is divided down, never re-exponentiated),
    the i-th lowest from reducing a running lower remainder mod h.
    Equivalent to ``radix.is_palindrome(n, h)`` but usually far cheaper on
    non-palindromes.
    """
    check_base(h)
    if n < 1:
        raise DomainError("palindrome test is defined for positive integers only")
    if n < h:
        return True
    k = digit_count(n, h) - 1
    p = h**k
    top = n
    bot = n
    i = 0
    while i < k - i:
        d_top = top // p
        bot, d_bot = divmod(bot, h)
        if d_top != d_bot:
            return False
        top -= d_top * p
        p //= h
        i += 1
    return True


def plan_enumeration_base(g: int, h: int, bound: int) -> int:
    """The base of ``g, h`` with fewer palindromes in [1, bound].

    Counts are exact (per-digit-length counts plus a bisected partial top
    length); ties go to the larger base.
    """
    check_base(g)
    check_base(h)
    if g == h:
        raise DomainError("the two bases must differ")
    cg = count_palindromes_upto(g, bound)
    ch = count_palindromes_upto(h, bound)
    if cg != ch:
        return g if cg < ch else h
    return max(g, h)


def _is_power_of(x: int, b: int) -> bool:
    p = b
    while p < x:
        p *= b
    return p == x


def _warn_if_power_related(g: int, h: int) -> None:
    lo, hi = min(g, h), max(g, h)
    if _is_power_of(hi, lo):
        warnings.warn(
            f"base {hi} is a perfect power of base {lo}; infinitely many integers are "
            f"palindromes in both bases (e.g. every {hi}**n + 1), so a finite search "
            "is only a sample",
            stacklevel=3,
        )


def _scan_chunk(driver: int, tested: int, d: int, half_lo: int, half_hi: int) -> list[int]:
    """Simultaneous palindromes among d-digit base-``driver`` palindromes
    built from half-values in [half_lo, half_hi)."""
    hits: list[int] = []
    t = (d + 1) // 2
    odd = d % 2 == 1
    # when tested | driver, a candidate's residue mod tested equals its leading
    # digit, so leading digits divisible by tested can never give a palindrome
    prune = driver % tested == 0
    lead_pow = driver ** (t - 1)
    shift_pow = driver ** (t - 1) if odd else driver**t
    h2 = tested == 2

    u = 0
    while u + 1 <= t - 1 and driver ** (u + 1) <= _REV_TABLE_CAP:
        u += 1

    cur_k = 0
    cur_pow = 1

    def check(n: int) -> bool:
        nonlocal cur_k, cur_pow
        if h2:
            if not n & 1:
                return False
            k = n.bit_length() - 1
            p = 1 << k
            top = n
            bot = n
            i = 0
            while i < k - i:
                d_top = top >= p
                if d_top != bot & 1:
                    return False
                if d_top:
                    top -= p
                p >>= 1
                bot >>= 1
                i += 1
            return True
        # candidates arrive ascending, so the digit-count window only moves up
        while n >= cur_pow * tested:
            cur_pow *= tested
            cur_k += 1
        k = cur_k
        p = cur_pow
        top = n
        bot = n
        i = 0
        while i < k - i:
            d_top = top // p
            bot, d_bot = divmod(bot, tested)
            if d_top != d_bot:
                return False
            top -= d_top * p
            p //= tested
            i += 1
        return True

    if u == 0:
        for half in range(half_lo, half_hi):
            if prune and (half // lead_pow) % tested == 0:
                continue
            x = half // driver if odd else half
            rev = 0
            while x:
                x, dd = divmod(x, driver)
                rev = rev * driver + dd
            n = half * shift_pow + rev
            if check(n):
                hits.append(n)
        return hits

    gu = driver**u
    mul = driver ** (t - u)
    lead_div = lead_pow // gu
    # value reversal of the low u digits (even blocks) or of those digits with
    # the last one dropped (odd blocks share the middle digit)
    table = [0] * gu
    for x in range(gu):
        v = x // driver if odd else x
        r = 0
        for _ in range(u - 1 if odd else u):
            v, dd = divmod(v, driver)
            r = r * driver + dd
        table[x] = r

    hi0, lo0 = divmod(half_lo, gu)
    hi1, lo1 = divmod(half_hi, gu)
    for hi in range(hi0, hi1 + (1 if lo1 else 0)):
        if prune and (hi // lead_div) % tested == 0:
            continue
        v = hi
        rhi = 0
        while v:
            v, dd = divmod(v, driver)
            rhi = rhi * driver + dd
        base_half = hi * gu
        a = lo0 if hi == hi0 else 0
        b = lo1 if hi == hi1 and lo1 else gu
        for lo in range(a, b):
            n = (base_half + lo) * shift_pow + table[lo] * mul + rhi
            if check(n):
                hits.append(n)
    return hits


@dataclass
class SearchCheckpoint:
    """Resumable state of a two-base palindrome search.

    ``cursor`` is the (digit_length, parity, half_value) of the last fully
    processed palindrome; ``found`` lists every simultaneous palindrome
    discovered so far, ascending.
    """

    g: int
    h: int
    bound: int
    enumeration_base: int
    cursor: tuple[int, str, int] | None = None
    found: list[int] = field(default_factory=list)
    complete: bool = False
    version: str = CHECKPOINT_VERSION

    def to_json(self) -> str:
        doc = {
            "version": self.version,
            "g": self.g,
            "h": self.h,
            "bound": self.bound,
            "enumeration_base": self.enumeration_base,
            "cursor": None
            if self.cursor is None
            else {
                "digit_length": self.cursor[0],
                "parity": self.cursor[1],
                "half_value": self.cursor[2],
            },
            "complete": self.complete,
            "found": self.found,
        }
        return json.dumps(doc, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "SearchCheckpoint":
        doc = json.loads(text)
        cursor = doc.get("cursor")
        if cursor is not None:
            cursor = (int(cursor["digit_length"]), cursor["parity"], int(cursor["half_value"]))
        return cls(
            g=int(doc["g"]),
            h=int(doc["h"]),
            bound=int(doc["bound"]),
            enumeration_base=int(doc["enumeration_base"]),
            cursor=cursor,
            found=[int(x) for x in doc["found"]],
            complete=bool(doc.get("complete", False)),
            version=doc.get("version", "?"),
        )

    def save(self, path: str) -> None:
        """Atomic write: temp file in the same directory, then rename."""
        directory = os.path.dirname(os.path.abspath(path))
        fd, tmp = tempfile.mkstemp(prefix=".simulpal-cp-", dir=directory)
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(self.to_json())
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    @classmethod
    def load(cls, path: str) -> "SearchCheckpoint":
        try:
            with open(path) as fh:
                return cls.from_json(fh.read())
        except FileNotFoundError as exc:
            raise CheckpointMismatchError(f"no checkpoint at {path}") from exc

    def require_match(self, g: int, h: int, bound: int, enumeration_base: int | None) -> None:
        if self.version != CHECKPOINT_VERSION:
            raise CheckpointMismatchError(f"unsupported checkpoint version {self.version!r}")
        if (self.g, self.h, self.bound) != (g, h, bound):
            raise CheckpointMismatchError(
                f"checkpoint is for ({self.g}, {self.h}, bound {self.bound}), "
                f"requested ({g}, {h}, bound {bound})"
            )
        if enumeration_base is not None and enumeration_base != self.enumeration_base:
            raise CheckpointMismatchError(
                f"checkpoint enumerates base {self.enumeration_base}, requested {enumeration_base}"
            )


def search(
    g: int,
    h: int,
    bound: int,
    *,
    enumeration_base: int | None = None,
    checkpoint_path: str | None = None,
    resume: bool = False,
    threads: int = 1,
    checkpoint_interval: float = 300.0,
    progress: Callable[[dict], None] | None = None,
) -> list[int]:
    """All N in [1, bound] palindromic in both base ``g`` and base ``h``, ascending.

    One base drives the enumeration (``enumeration_base`` forces the
    choice); candidates are tested in the other base with early exit.
    With ``checkpoint_path`` set, progress is persisted atomically after
    every completed digit-length block and every ``checkpoint_interval``
    seconds at chunk granularity; ``resume=True`` continues from such a
    file and refuses to resume a checkpoint for different parameters.
    ``threads`` > 1 fans chunks out to worker processes; results are
    merged in chunk order, so output does not depend on the worker count.
    ``progress`` is called after each chunk with a status dict; an
    exception raised from it aborts the run after a final checkpoint
    write.
    """
    check_base(g)
    check_base(h)
    if g == h:
        raise DomainError("the two bases must differ")
    if bound < 1:
        raise DomainError("search bound must be >= 1")
    if enumeration_base is not None and enumeration_base not in (g, h):
        raise DomainError(f"enumeration base must be {g} or {h}")
    _warn_if_power_related(g, h)

    if resume:
        if checkpoint_path is None:
            raise CheckpointMismatchError("resume requested without a checkpoint path")
        state = SearchCheckpoint.load(checkpoint_path)
        state.require_match(g, h, bound, enumeration_base)
    else:
        driver = enumeration_base or plan_enumeration_base(g, h, bound)
        state = SearchCheckpoint(g=g, h=h, bound=bound, enumeration_base=driver)
    if state.complete:
        return list(state.found)

    driver = state.enumeration_base
    tested = h if driver == g else g
    last_save = time.monotonic()

    def persist(force: bool) -> None:
        nonlocal last_save
        if checkpoint_path is None:
            return
        if force or time.monotonic() - last_save >= checkpoint_interval:
            state.save(checkpoint_path)
            last_save = time.monotonic()

    pool = ProcessPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        d = 1
        while True:
            h0, h1, t, odd = _half_range(driver, d)
            if mirror_half(h0, driver, t, odd) > bound:
                break
            parity = "odd" if d % 2 else "even"
            h1e = _least_half_reaching(driver, d, bound + 1)
            start = h0
            if state.cursor is not None:
                cur_d, _, cur_half = state.cursor
                if d < cur_d or (d == cur_d and cur_half >= h1e - 1):
                    d += 1
                    continue
                if d == cur_d:
                    start = cur_half + 1
            if start >= h1e:
                d += 1
                continue

            edges = list(range(start, h1e, CHUNK_HALVES)) + [h1e]
            chunks = list(zip(edges[:-1], edges[1:]))
            if pool is not None and len(chunks) > 1:
                futures = [pool.submit(_scan_chunk, driver, tested, d, c0, c1) for c0, c1 in chunks]
                results = (f.result() for f in futures)
            else:
                results = (_scan_chunk(driver, tested, d, c0, c1) for c0, c1 in chunks)
            for (c0, c1), hits in zip(chunks, results):
                state.found.extend(hits)
                state.cursor = (d, parity, c1 - 1)
                persist(force=False)
                if progress is not None:
                    progress(
                        {
                            "digit_length": d,
                            "parity": parity,
                            "half_value": c1 - 1,
                            "half_end": h1e,
                            "found": len(state.found),
                        }
                    )
            persist(force=True)
            d += 1
        state.complete = True
        persist(force=True)
        return list(state.found)
    except BaseException:
        persist(force=True)
        raise
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)


def count(
    g: int,
    h: int,
    bound: int,
    *,
    enumeration_base: int | None = None,
    checkpoint_path: str | None = None,
    resume: bool = False,
    threads: int = 1,
    checkpoint_interval: float = 300.0,
    progress: Callable[[dict], None] | None = None,
) -> int:
    """Number of simultaneous palindromes in [1, bound]; same checkpoint
    semantics as :func:`search` (the hit list such searches retain is tiny)."""
    return len(
        search(
            g,
            h,
            bound,
            enumeration_base=enumeration_base,
            checkpoint_path=checkpoint_path,
            resume=resume,
            threads=threads,
            checkpoint_interval=checkpoint_interval,
            progress=progress,
        )
    )
