"""Block parameters of classical groups at a prime p.

Covers the orders d and e, the exponent a, linear/unitary primes, group
orders, p-element classes as Frobenius orbits of residues, the runner
gap condition on a core, and the block context everything downstream runs on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import factorial, isqrt

from .partitions import (
    BetaSet,
    Partition,
    as_partition,
    beta_of_partition,
    is_e_core,
    partition_of_beta,
    runner_counts,
    shift,
)
from .symbols import (
    Symbol,
    canonical_symbol,
    defect_and_rank,
    is_symbol_e_core,
    smn_relabel,
)


class Family(enum.Enum):
    GL = "gl"
    U = "u"
    Sp = "sp"
    CSp = "csp"
    SO_odd = "so-odd"
    SO_plus = "so-plus"
    SO_minus = "so-minus"
    CSO_plus = "cso-plus"
    CSO_minus = "cso-minus"

    @classmethod
    def parse(cls, text: str) -> "Family":
        key = text.strip().lower().replace("_", "-")
        aliases = {"so+": "so-plus", "so-": "so-minus", "cso+": "cso-plus", "cso-": "cso-minus",
                   "so2n+1": "so-odd", "so-2n+1": "so-odd"}
        key = aliases.get(key, key)
        for fam in cls:
            if fam.value == key:
                return fam
        raise ValueError(f"unknown group family {text!r}; expected one of {[f.value for f in cls]}")

    @property
    def case(self) -> str | None:
        """The case tag 1, 2a, 2b, 3, 4a or 4b of the Morita theorem (None for GL)."""
        return {
            Family.GL: None,
            Family.U: "1",
            Family.Sp: "2a",
            Family.CSp: "2b",
            Family.SO_odd: "3",
            Family.SO_plus: "4a",
            Family.SO_minus: "4a",
            Family.CSO_plus: "4b",
            Family.CSO_minus: "4b",
        }[self]

    @property
    def case_number(self) -> int | None:
        return None if self.case is None else int(self.case[0])

    @property
    def conformal(self) -> bool:
        return self in (Family.CSp, Family.CSO_plus, Family.CSO_minus)

    @property
    def uses_symbols(self) -> bool:
        return self not in (Family.GL, Family.U)

    @property
    def type_d(self) -> bool:
        return self in (Family.SO_plus, Family.CSO_plus)

    def defect_ok(self, defect: int) -> bool:
        if self in (Family.Sp, Family.CSp, Family.SO_odd):
            return defect % 2 == 1
        if self in (Family.SO_plus, Family.CSO_plus):
            return defect % 4 == 0
        if self in (Family.SO_minus, Family.CSO_minus):
            return defect % 4 == 2
        return True


# ---------------------------------------------------------------------------
# elementary number theory


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while n % f:
        f += 1
    while n % f == 0:
        n //= f
    return n == 1


def mult_order(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ValueError(f"{x} is not a unit mod {p}")
    k, y = 1, x
    while y != 1:
        y = y * x % p
        k += 1
    return k


def p_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    return a


def p_part(n: int, p: int) -> int:
    return p ** p_valuation(n, p)


# ---------------------------------------------------------------------------
# d, e, a


@dataclass(frozen=True)
class PrimeParams:
    d: int
    e: int
    a: int
    linear: bool
    q0: int | None = None


def _check_q(family: Family, q: int) -> int | None:
    if not is_prime_power(q):
        raise ValueError(f"q={q} is not a prime power")
    if family is Family.U:
        q0 = isqrt(q)
        if q0 * q0 != q:
            raise ValueError(f"the unitary family needs q to be a square, got q={q}")
        return q0
    if family is not Family.GL and q % 2 == 0:
        raise ValueError(f"{family.value} needs q odd, got q={q}")
    return None


def derive_params(family: Family, q: int, p: int) -> PrimeParams:
    q0 = _check_q(family, q)
    if p == 2 or not is_prime(p):
        raise ValueError(f"p={p} must be an odd prime")
    if q % p == 0:
        raise ValueError(f"p={p} divides q={q}")
    d = mult_order(q, p)
    a = p_valuation(q**d - 1, p)
    if family is Family.GL:
        return PrimeParams(d, d, a, True)
    if family is Family.U:
        e = mult_order(-q0, p)
        return PrimeParams(d, e, a, e != d, q0)
    e = mult_order(q * q, p)
    return PrimeParams(d, e, a, e == d)


# ---------------------------------------------------------------------------
# group orders


def group_order(family: Family, q: int, m: int) -> int:
    """|G_m(q)| from the standard order formulas; m is the matrix dimension (n for GL and U)."""
    q0 = _check_q(family, q)
    if m < 0:
        raise ValueError("m must be non-negative")

    def prod(f, lo, hi):
        out = 1
        for i in range(lo, hi + 1):
            out *= f(i)
        return out

    if family is Family.GL:
        return q ** (m * (m - 1) // 2) * prod(lambda i: q**i - 1, 1, m)
    if family is Family.U:
        return q0 ** (m * (m - 1) // 2) * prod(lambda i: q0**i - (-1) ** i, 1, m)
    if family is Family.SO_odd:
        if m % 2 != 1:
            raise ValueError(f"SO_m needs m odd here, got m={m}")
        n = m // 2
        return q ** (n * n) * prod(lambda i: q ** (2 * i) - 1, 1, n)
    if m % 2:
        raise ValueError(f"{family.value} needs m even, got m={m}")
    n = m // 2
    if family in (Family.Sp, Family.CSp):
        order = q ** (n * n) * prod(lambda i: q ** (2 * i) - 1, 1, n)
        return order * (q - 1) if family is Family.CSp else order
    if n == 0:
        base = 1
    else:
        sign = -1 if family in (Family.SO_plus, Family.CSO_plus) else 1
        base = q ** (n * (n - 1)) * (q**n + sign) * prod(lambda i: q ** (2 * i) - 1, 1, n - 1)
    return base * (q - 1) if family.conformal else base


# ---------------------------------------------------------------------------
# p-element classes


@dataclass(frozen=True)
class PClassSet:
    """Frobenius orbits of non-zero residues mod p^a, with the bar involution."""

    modulus: int
    classes: tuple[tuple[int, ...], ...]
    involution: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    def class_of(self, u: int) -> int:
        u %= self.modulus
        for i, c in enumerate(self.classes):
            if u in c:
                return i
        raise KeyError(u)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Class pairs {t, t-bar} as (smaller index, larger index)."""
        return tuple(sorted({tuple(sorted((i, j))) for i, j in enumerate(self.involution)}))

    def pair_of(self, i: int) -> int:
        key = tuple(sorted((i, self.involution[i])))
        return self.pairs.index(key)


def p_element_classes(family: Family, q: int, p: int) -> PClassSet:
    params = derive_params(family, q, p)
    modulus = p**params.a
    seen: set[int] = set()
    classes = []
    for u in range(1, modulus):
        if u in seen:
            continue
        orbit = []
        v = u
        while v not in orbit:
            orbit.append(v)
            v = v * q % modulus
        if len(orbit) != params.d:
            raise AssertionError(f"orbit {orbit} mod {modulus} has size {len(orbit)}, not d={params.d}")
        seen.update(orbit)
        classes.append(tuple(sorted(orbit)))
    classes.sort()
    if len(classes) != (modulus - 1) // params.d:
        raise AssertionError("class count disagrees with (p^a - 1)/d")
    twist = -params.q0 if family is Family.U else -1
    index = {u: i for i, c in enumerate(classes) for u in c}
    involution = tuple(index[c[0] * twist % modulus] for c in classes)
    for i, j in enumerate(involution):
        if involution[j] != i:
            raise AssertionError("bar map on classes is not an involution")
        if i == j:
            raise ValueError(
                f"class {classes[i]} mod {modulus} is its own bar image; "
                "self-paired p-classes are outside what the verifier handles"
            )
    return PClassSet(modulus, tuple(classes), involution)


# ---------------------------------------------------------------------------
# cores and the runner gap condition

Core = Partition | Symbol


def _gap_ok(counts: tuple[int, ...], pairs, w: int) -> bool:
    return all(counts[j] - counts[i] >= w - 1 for i, j in pairs)


def _gap_pairs(case: int, d: int) -> list[tuple[int, int]]:
    if case == 1:
        return [(i, i + 2) for i in range(0, 2 * d - 2)]
    return [(i, i + 1) for i in range(0, d - 1)] + [(i, i + 1) for i in range(d, 2 * d - 1)]


def core_config(case: int, rho: Core, k: int) -> tuple[BetaSet, ...]:
    """The beta-sets of ``rho`` after a simultaneous k-shift of its minimal form."""
    if case == 1:
        return (shift(beta_of_partition(rho), k),)
    return rho.shifted(k)


def config_runner_counts(case: int, d: int, config: tuple[BetaSet, ...]) -> tuple[int, ...]:
    if case == 1:
        return runner_counts(config[0], 2 * d)
    return runner_counts(config[0], d) + runner_counts(config[1], d)


def gap_condition(case: int, d: int, w: int, config: tuple[BetaSet, ...]) -> bool:
    return _gap_ok(config_runner_counts(case, d, config), _gap_pairs(case, d), w)


def first_rows_full(case: int, d: int, w: int, config: tuple[BetaSet, ...]) -> bool:
    width = 2 * d if case == 1 else d
    return all(set(range(width * w)) <= set(b) for b in config)


def _core_checks(family: Family, d: int, rho: Core) -> str | None:
    """Reason ``rho`` cannot label a block of ``family`` at this d, or None."""
    case = family.case_number
    if case is None:
        return "GL is not one of the Morita cases"
    if case == 1:
        if not isinstance(rho, tuple):
            return "case 1 cores are partitions"
        if not is_e_core(rho, 2 * d):
            return f"{rho} is not a {2 * d}-core"
        return None
    if not isinstance(rho, Symbol):
        return "cases 2-4 cores are symbols"
    if not is_symbol_e_core(rho, d):
        return f"{rho} is not a {d}-core"
    defect, rank = defect_and_rank(rho)
    if rank == 0:
        return "the core must have non-zero rank"
    if not family.defect_ok(defect):
        return f"defect {defect} does not fit {family.value}"
    return None


def admissible_core(family: Family, d: int, w: int, rho: Core, shift_by: int | None = None) -> bool:
    """Whether ``rho`` satisfies the runner gap condition for weight ``w``.

    With ``shift_by`` the given representation is tested; otherwise any
    representation is allowed (gaps repeat with period 2d, resp. d, in the shift).
    """
    case = family.case_number
    if _core_checks(family, d, rho) is not None:
        return False
    if shift_by is not None:
        return gap_condition(case, d, w, core_config(case, rho, shift_by))
    period = 2 * d if case == 1 else d
    return any(gap_condition(case, d, w, core_config(case, rho, k)) for k in range(period))


def pinned_shift(family: Family, d: int, w: int, rho: Core) -> int:
    """Smallest shift that satisfies the gap condition and fills the first w rows."""
    case = family.case_number
    # rows fill once k >= period * w, and gap counts repeat with period in k
    period = 2 * d if case == 1 else d
    for k in range(period * (w + 1) + 1):
        config = core_config(case, rho, k)
        if gap_condition(case, d, w, config) and first_rows_full(case, d, w, config):
            return k
    raise ValueError(f"{rho} has no admissible representation for w={w}")


def _chains(length: int, w: int, first_max: int, slack: int):
    """Count vectors starting at most ``first_max`` with gaps in [w-1, w-1+slack]."""
    if length == 0:
        yield ()
        return
    for first in range(first_max + 1):
        stack = [(first,)]
        while stack:
            vec = stack.pop()
            if len(vec) == length:
                yield vec
                continue
            for g in range(w - 1, w + slack):
                stack.append(vec + (vec[-1] + g,))


def _beads_from_counts(counts: tuple[int, ...]) -> BetaSet:
    width = len(counts)
    return tuple(sorted(width * i + j for j, c in enumerate(counts) for i in range(c)))


def core_sort_key(rho: Core):
    """The order in which :func:`minimal_admissible_core` prefers cores."""
    if isinstance(rho, Symbol):
        lab = smn_relabel(rho)
        return (core_rank(rho), lab.s, lab.mu, lab.nu)
    return (sum(rho), tuple(-x for x in rho))


@lru_cache(maxsize=None)
def _symbol_candidates(d: int, w: int, first_max: int, slack: int) -> frozenset[Symbol]:
    xs = [_beads_from_counts(c) for c in _chains(d, w, first_max, slack)]
    # canonical_symbol orders the two rows, so unordered pairs suffice
    found = set()
    for i, X in enumerate(xs):
        for Y in xs[i:]:
            sym = canonical_symbol(X, Y)
            if core_rank(sym):
                found.add(sym)
    return frozenset(found)


@lru_cache(maxsize=None)
def minimal_admissible_core(family: Family, d: int, w: int) -> Core:
    """The admissible core of least rank (ties: smaller defect, then (mu, nu)).

    Candidates come straight from runner bead counts obeying the gap
    condition, so each is a core by construction.  Runner 0 holds at most
    2d+5 beads and each later runner d more than the gap forces; the minimum
    sits well inside that window (the tests compare with a full scan by rank).
    """
    case = family.case_number
    if case is None:
        raise ValueError("GL is not one of the Morita cases")
    first_max, slack = 2 * d + 5, d
    found = set()
    if case == 1:
        for even in _chains(d, w, first_max, slack):
            for odd in _chains(d, w, first_max, slack):
                counts = tuple(x for pair in zip(even, odd) for x in pair)
                found.add(partition_of_beta(_beads_from_counts(counts)))
    else:
        found = {sym for sym in _symbol_candidates(d, w, first_max, slack) if family.defect_ok(sym.defect)}
    if not found:
        raise ValueError(f"no admissible core found for {family.value}, d={d}, w={w}")
    best = min(found, key=core_sort_key)
    assert admissible_core(family, d, w, best)
    return best


def core_rank(rho: Core) -> int:
    if isinstance(rho, Symbol):
        return defect_and_rank(rho)[1]
    return sum(rho)


def m_of_w(case: int, r: int, d: int, w: int) -> int:
    if case == 1:
        return r + 2 * d * w
    if case == 3:
        return 2 * (r + d * w) + 1
    return 2 * (r + d * w)


# ---------------------------------------------------------------------------
# block context


@dataclass(frozen=True)
class BlockContext:
    family: Family
    q: int
    p: int
    w: int
    rho: Core
    params: PrimeParams = field(repr=False)
    shift: int = 0

    @property
    def case(self) -> int:
        return self.family.case_number

    @property
    def d(self) -> int:
        return self.params.d

    @property
    def e(self) -> int:
        return self.params.e

    @property
    def a(self) -> int:
        return self.params.a

    @property
    def degenerate(self) -> bool:
        return isinstance(self.rho, Symbol) and self.rho.degenerate

    @property
    def rank(self) -> int:
        return core_rank(self.rho)

    @property
    def m(self) -> int:
        return m_of_w(self.case, self.rank, self.d, self.w)

    @cached_property
    def config(self) -> tuple[BetaSet, ...]:
        """The pinned abacus of rho: one beta-set (case 1) or the halves (X, Y)."""
        return core_config(self.case, self.rho, self.shift)

    @property
    def bead_counts(self) -> tuple[int, ...]:
        return config_runner_counts(self.case, self.d, self.config)

    @cached_property
    def classes(self) -> PClassSet:
        return p_element_classes(self.family, self.q, self.p)

    @property
    def z_p(self) -> int:
        """Order of the p-part of F_q^x for conformal families, 1 otherwise."""
        return p_part(self.q - 1, self.p) if self.family.conformal else 1

    @property
    def kappa_range(self) -> range:
        return range(self.z_p)

    @property
    def defect_group_order(self) -> int:
        return self.z_p * self.p ** (self.a * self.w)

    @property
    def normaliser_index(self) -> int:
        """[N : L] = 2^w w!."""
        return 2**self.w * factorial(self.w)

    @property
    def group_order(self) -> int:
        return group_order(self.family, self.q, self.m)


def block_context(family: Family | str, q: int, p: int, w: int, rho: Core | None = None,
                  d: int | None = None) -> BlockContext:
    """Validate (G, q, p, w, rho) and pin the abacus representation of rho."""
    if isinstance(family, str):
        family = Family.parse(family)
    if family.case is None:
        raise ValueError("GL is not one of the Morita cases")
    params = derive_params(family, q, p)
    if d is not None and d != params.d:
        raise ValueError(f"d={d} does not match the multiplicative order {params.d} of q mod p")
    if not params.linear:
        raise ValueError(f"p={p} is not a linear prime for {family.value} at q={q}")
    if not 0 <= w < p:
        raise ValueError(f"weight w={w} must satisfy 0 <= w < p={p}")
    if rho is None:
        rho = minimal_admissible_core(family, params.d, w)
    elif isinstance(rho, Symbol):
        rho = canonical_symbol(rho.X, rho.Y)
    else:
        rho = as_partition(rho)
    reason = _core_checks(family, params.d, rho)
    if reason is not None:
        raise ValueError(f"inadmissible core: {reason}")
    if not admissible_core(family, params.d, w, rho):
        raise ValueError(f"inadmissible core: {rho} fails the runner gap condition for w={w}")
    k = pinned_shift(family, params.d, w, rho)
    return BlockContext(family, q, p, w, rho, params, k)
