"""Closed forms and upper bounds for distinguishing numbers and indices.

Pure integer arithmetic on family parameters; nothing here looks at a
graph.  Every ceiling of a radical is evaluated through an equivalent
least-integer predicate or an exact integer root, never through floats.
The float versions exist only in :func:`friendship_radicals`, as a
cross-check whose disagreements get reported.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

from .errors import BadParams, NoSolutionBelowLimit, OutOfTheoremScope, UnknownFamily

SEARCH_LIMIT = 10**9


@dataclass(frozen=True)
class FormulaResult:
    D: int | None
    Dprime: int | None
    kind: str = "exact"  # or "upper_bound"
    source: str = ""
    notes: tuple = field(default=())

    def to_dict(self) -> dict:
        return {"D": self.D, "Dprime": self.Dprime, "kind": self.kind, "source": self.source, "notes": list(self.notes)}


def min_r(pred: Callable[[int], bool], lo: int = 1, limit: int = SEARCH_LIMIT, guess: int | None = None) -> int:
    """Least ``r >= lo`` with ``pred(r)``, for ``pred`` monotone nondecreasing.

    Gallops upward from ``lo`` then bisects.  ``lo`` must be a lower bound
    (every ``r < lo`` fails).  ``guess`` is only a starting point: the
    answer is exact however bad it is, it just costs more calls.
    """
    if lo < 1:
        lo = 1
    if guess is not None and lo < guess <= limit:
        if pred(guess):
            # gallop down to a failing point, then bisect
            hi, step = guess, 1
            while True:
                bad = hi - step
                if bad < lo:
                    if pred(lo):
                        return lo
                    bad = lo
                    break
                if not pred(bad):
                    break
                hi, step = bad, step * 2
            while hi - bad > 1:
                mid = (bad + hi) // 2
                if pred(mid):
                    hi = mid
                else:
                    bad = mid
            return hi
        lo = guess + 1
    if lo > limit:
        raise NoSolutionBelowLimit(f"predicate false for every r <= {limit}")
    if pred(lo):
        return lo
    bad, step = lo, 1
    while True:
        hi = bad + step
        if hi > limit:
            hi = limit
            if hi <= bad or not pred(hi):
                raise NoSolutionBelowLimit(f"predicate false for every r <= {limit}")
            break
        if pred(hi):
            break
        bad, step = hi, step * 2
    while hi - bad > 1:
        mid = (bad + hi) // 2
        if pred(mid):
            hi = mid
        else:
            bad = mid
    return hi


_FLOAT_SAFE = 1 << 1000


def _float_guess(x: int, e: int) -> int | None:
    """Rounded float e-th root of x, or None when x is too large for floats."""
    if x >= _FLOAT_SAFE:
        return None
    return int(x ** (1.0 / e) + 0.5)


def iroot(x: int, e: int) -> int:
    """floor(x ** (1/e)) for integers ``x >= 0``, ``e >= 1``."""
    if x < 0 or e < 1:
        raise BadParams(f"iroot needs x >= 0 and e >= 1, got x={x}, e={e}")
    if x < 2 or e == 1:
        return x
    if e == 2:
        return math.isqrt(x)
    r = 1 << -(-x.bit_length() // e)
    while True:
        s = ((e - 1) * r + x // r ** (e - 1)) // e
        if s >= r:
            return r
        r = s


def ceil_root(x: int, e: int) -> int:
    """Least integer ``r >= 0`` with ``r ** e >= x``."""
    r = iroot(x, e)
    return r if r**e >= x else r + 1


# -- Q(m, n) ------------------------------------------------------------------

def d_q(m: int, n: int) -> int:
    """min{r : r * C(r, n-1) >= m}."""
    if m < 2 or n < 2:
        raise BadParams(f"Q(m,n) needs m >= 2 and n >= 2, got m={m}, n={n}")
    return min_r(lambda r: r * math.comb(r, n - 1) >= m, lo=max(1, n - 1))


def dprime_q(m: int, n: int) -> int:
    if m < 2 or n < 3:
        raise BadParams(f"the index of Q(m,n) is only known for m >= 2 and n >= 3, got m={m}, n={n}")
    return 2


# -- windmills ----------------------------------------------------------------

def d_dutch(n: int, k: int) -> int:
    """min{r : (r^(k-1) - r^ceil((k-1)/2)) / 2 >= n}."""
    if n < 2 or k < 3:
        raise BadParams(f"windmill needs n >= 2 and k >= 3, got n={n}, k={k}")
    top, half, target = k - 1, k // 2, 2 * n  # k // 2 == ceil((k-1)/2)
    # the numerator r^(k-1) - r^half is always even, so compare against 2n
    g = _float_guess(target, top)
    if g is not None:
        # fast path: the guess is usually exact, and two checks certify it
        r = g + 1
        if r**top - r**half >= target and (r - 1) ** top - (r - 1) ** half < target:
            return r
    return min_r(lambda r: r**top - r**half >= target, guess=None if g is None else g + 1)


def dprime_dutch(n: int, k: int) -> int:
    """Index of the windmill: the number of the windmill with one more vertex per blade."""
    if n < 2 or k < 3:
        raise BadParams(f"windmill needs n >= 2 and k >= 3, got n={n}, k={k}")
    return d_dutch(n, k + 1)


def _friendship_d(n: int) -> int:
    # ceil((1 + sqrt(8n+1)) / 2) == ceil((1 + t) / 2) with t = ceil(sqrt(8n+1))
    s = 8 * n + 1
    t = math.isqrt(s)
    if t * t != s:
        t += 1
    return (t + 2) // 2


def d_dutch_odd_closed(n: int, m: int) -> int:
    """ceil( ((1 + sqrt(8n+1)) / 2) ^ (1/m) ), for blades of length 2m + 1.

    For integer r, ``r^m >= x`` iff ``r^m >= ceil(x)``, so the nested
    ceiling is the exact ceiling m-th root of the friendship value.
    """
    if n < 2 or m < 1:
        raise BadParams(f"need n >= 2 and m >= 1, got n={n}, m={m}")
    return ceil_root(_friendship_d(n), m)


class FriendshipValues(NamedTuple):
    D: int
    Dprime: int


def friendship_closed(n: int) -> FriendshipValues:
    """Exact (D, D') of the friendship graph F_n.

    D is the ceiling of (1 + sqrt(8n+1)) / 2 via an integer square root.
    D' is the ceiling of the real root of x^3 - x^2 = 2n (the radical
    expression in ``a_n = 1 + 27n + 3 sqrt(81n^2 + 6n)`` is Cardano's
    formula for that root); as x^3 - x^2 increases past x = 1, the ceiling
    is the least integer r with r^2 (r - 1) >= 2n.
    """
    if n < 2:
        raise BadParams(f"friendship graph needs n >= 2, got {n}")
    target = 2 * n
    g = _float_guess(target, 3)
    if g is not None and g * g * (g - 1) < target <= (g + 1) * (g + 1) * g:
        dprime = g + 1
    else:
        dprime = min_r(lambda r: r * r * (r - 1) >= target, guess=g)
    return FriendshipValues(_friendship_d(n), dprime)


def friendship_radicals(n: int) -> tuple[int, int]:
    """Naive float evaluation of both published radical forms, ceilings included."""
    d = math.ceil((1 + math.sqrt(8 * n + 1)) / 2)
    a = 1 + 27 * n + 3 * math.sqrt(81 * n * n + 6 * n)
    c = a ** (1 / 3)
    return d, math.ceil(c / 3 + 1 / (3 * c) + 1 / 3)


def friendship_result(n: int) -> FormulaResult:
    exact = friendship_closed(n)
    notes = []
    fd, fdp = friendship_radicals(n)
    if fd != exact.D:
        notes.append(f"float evaluation of the D radical gives {fd}, exact value {exact.D}")
    if fdp != exact.Dprime:
        notes.append(f"float evaluation of the D' radical gives {fdp}, exact value {exact.Dprime}")
    return FormulaResult(exact.D, exact.Dprime, "exact", "friendship-closed-form", tuple(notes))


# -- chemical families ----------------------------------------------------------

def chemical_constants(kind: str, params: Sequence[int]) -> FormulaResult:
    """Constant (D, D') for spiro chains, polyphenylenes and nanostar dendrimers."""
    params = tuple(params)
    if kind in ("spiro", "poly"):
        if len(params) != 3:
            raise BadParams(f"{kind} takes (q, h, k), got {params}")
        q, h, k = params
        if q < 3 or not 1 <= h <= q // 2 or k < 1:
            raise BadParams(f"need q >= 3, 1 <= h <= q//2, k >= 1; got {params}")
        if k < 2:
            raise OutOfTheoremScope(f"{kind} with a single ring is not covered (k={k})")
        if kind == "spiro":
            d = 3 if params == (3, 1, 2) else 2
            return FormulaResult(d, 2, "exact", "spiro-chain-constant")
        return FormulaResult(2, 2, "exact", "polyphenylene-constant")
    if kind == "nanostar":
        if len(params) != 1 or params[0] < 1:
            raise BadParams(f"nanostar takes (k) with k >= 1, got {params}")
        return FormulaResult(2, 2, "exact", "nanostar-constant")
    raise UnknownFamily(f"no constant known for {kind!r}")


# -- composition bounds ---------------------------------------------------------

def composition_bound(
    kind: str,
    part_D: Sequence[int],
    part_Dprime: Sequence[int],
    *,
    contact_degrees: Sequence[int] = (),
    cycle_D: int | None = None,
    cycle_Dprime: int | None = None,
) -> FormulaResult:
    """Upper bounds on D and D' of a composition from exact values of its parts.

    ``contact_degrees`` (chain only) are the degrees, in the composed graph,
    of the identified contacts x_2..x_k.  ``cycle_D``/``cycle_Dprime``
    (circuit only) are the values for the underlying cycle C_k.
    """
    part_D, part_Dprime = list(part_D), list(part_Dprime)
    if not part_D or len(part_D) != len(part_Dprime):
        raise BadParams("need one D and one D' value per part")
    if kind == "bouquet":
        return FormulaResult(sum(part_D), sum(part_Dprime), "upper_bound", "bouquet-sum")
    if kind == "circuit":
        if cycle_D is None or cycle_Dprime is None:
            raise BadParams("circuit bound needs the cycle's D and D'")
        return FormulaResult(max(max(part_D), cycle_D), max(max(part_Dprime), cycle_Dprime), "upper_bound", "circuit-max")
    if kind == "chain":
        if len(contact_degrees) != len(part_D) - 1:
            raise BadParams(f"chain of {len(part_D)} parts needs {len(part_D) - 1} contact degrees")
        deg = max(contact_degrees, default=0)
        return FormulaResult(max(max(part_D), deg), max(max(part_Dprime), deg), "upper_bound", "chain-max")
    if kind == "link":
        return FormulaResult(max(part_D), max(part_Dprime), "upper_bound", "link-max")
    raise BadParams(f"unknown composition {kind!r}")


# -- dispatch for the CLI -----------------------------------------------------------

FORMULA_FAMILIES = ("q", "q_graph", "dutch", "friendship", "spiro", "poly", "nanostar")


def formula_for(family: str, params: Sequence[int]) -> FormulaResult:
    params = tuple(int(p) for p in params)

    def arity(k):
        if len(params) != k:
            raise BadParams(f"{family} takes {k} parameter(s), got {list(params)}")

    if family in ("q", "q_graph"):
        arity(2)
        m, n = params
        d = d_q(m, n)
        if n < 3:
            return FormulaResult(d, None, "exact", "q-graph", ("index not covered for n = 2",))
        return FormulaResult(d, dprime_q(m, n), "exact", "q-graph")
    if family == "dutch":
        arity(2)
        return FormulaResult(d_dutch(*params), dprime_dutch(*params), "exact", "windmill-min-r")
    if family == "friendship":
        arity(1)
        return friendship_result(params[0])
    if family in ("spiro", "poly", "nanostar"):
        return chemical_constants(family, params)
    raise UnknownFamily(f"no formula for family {family!r}")
