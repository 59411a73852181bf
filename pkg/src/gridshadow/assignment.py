"""Selection of the pair primes p_ij and the vertex products P_k.

Each vertex k gets ``P_k = 2**(M + k + n_k) * (product of the n-1 primes on
pairs containing k)``, scaled so that ``2**(nM+2k) <= P_k < 2**(nM+2k+1)``.
The primes are chosen so that, for every pair k < l, the only assigned prime
dividing ``P_l - P_k`` is ``p_kl``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, prod

from .errors import InvariantViolation
from .numbers import MR_DETERMINISTIC_LIMIT, PrimeRange, finsler_bound, is_prime, primes_in_dyadic_interval

Pair = tuple[int, int]


def pair_order(n: int) -> list[Pair]:
    """Pairs in selection order: (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n)."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def incident_pairs(n: int, k: int) -> list[Pair]:
    return [(i, k) for i in range(1, k)] + [(k, j) for j in range(k + 1, n + 1)]


@dataclass(frozen=True)
class PrimeAssignment:
    n: int
    M: int
    p: dict[Pair, int]
    n_exp: dict[int, int]
    P: dict[int, int]
    scans: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def exponent(self, k: int) -> int:
        """Power of two in P_k, i.e. M + k + n_k."""
        return self.M + k + self.n_exp[k]

    def incident_product(self, k: int) -> int:
        return prod(self.p[pr] for pr in incident_pairs(self.n, k))

    def owner(self, q: int) -> Pair | None:
        for pr, v in self.p.items():
            if v == q:
                return pr
        return None


def choose_modulus(n: int) -> int:
    """Smallest M >= 2n+1 whose certified prime count exceeds 2n^3."""
    if n < 2:
        raise ValueError("choose_modulus needs at least 2 vertices")
    M = 2 * n + 1
    while finsler_bound(M) <= 2 * n ** 3:
        M += 1
    return M


def normalize_exponent(n: int, M: int, k: int, prime_product: int) -> int:
    """The n_k placing 2**(M+k+n_k) * prime_product in [2**(nM+2k), 2**(nM+2k+1))."""
    if prime_product < 1:
        raise ValueError("prime product must be positive")
    n_k = (n - 1) * M + k - (prime_product.bit_length() - 1)
    e = M + k + n_k
    if e < 1 or e >= n * M:
        raise InvariantViolation(f"exponent M+k+n_k = {e} for k={k} falls outside [1, nM)")
    return n_k


def selection_limit(n: int) -> int:
    """Most pool candidates a single pick may scan: n^3 + C(n, 2)."""
    return n ** 3 + comb(n, 2)


def select_primes(n: int, M: int, prime_pool: PrimeRange | None = None) -> PrimeAssignment:
    """Pick p_12, p_13, ..., p_(n-1)n in order from the ascending pool.

    A candidate q for pair (i, j) is rejected when it was already used, when
    it divides a difference of two complete products, or (once the pick
    completes some P_k) when any assigned prime other than p_kr divides a
    new difference P_k - P_r. A product is complete once all its n-1 primes
    are chosen.
    """
    if n < 2:
        raise ValueError("select_primes needs at least 2 vertices")
    pool = primes_in_dyadic_interval(M) if prime_pool is None else prime_pool
    if pool.M != M:
        raise ValueError(f"pool is for M={pool.M}, not M={M}")
    if len(pool) <= 2 * n ** 3:
        raise ValueError(f"pool of {len(pool)} primes is not larger than 2n^3 = {2 * n ** 3}")
    limit = selection_limit(n)

    chosen: dict[Pair, int] = {}
    used: set[int] = set()
    complete: dict[int, int] = {}
    n_exp: dict[int, int] = {}
    diffs: list[int] = []  # P_a - P_b over complete a > b
    scans = []

    def remaining(k: int) -> int:
        return sum(1 for pr in incident_pairs(n, k) if pr not in chosen)

    for i, j in pair_order(n):
        finishing = [k for k in (i, j) if remaining(k) == 1]
        scanned = 0
        for q in pool:
            scanned += 1
            if scanned > limit:
                raise InvariantViolation(f"pick ({i},{j}) scanned more than {limit} candidates")
            if q in used:
                continue
            if any(d % q == 0 for d in diffs):
                continue
            if finishing:
                chosen[(i, j)] = q
                new_P = {}
                new_exp = {}
                for k in finishing:
                    prime_product = prod(chosen[pr] for pr in incident_pairs(n, k))
                    new_exp[k] = normalize_exponent(n, M, k, prime_product)
                    new_P[k] = prime_product << (M + k + new_exp[k])
                if not _new_differences_clean(chosen, complete, new_P):
                    del chosen[(i, j)]
                    continue
                complete_before = dict(complete)
                complete.update(new_P)
                n_exp.update(new_exp)
                for k in finishing:
                    for r, Pr in complete_before.items():
                        diffs.append(abs(new_P[k] - Pr))
                if len(finishing) == 2:
                    diffs.append(abs(new_P[i] - new_P[j]))
            else:
                chosen[(i, j)] = q
            used.add(q)
            scans.append(scanned)
            break
        else:
            raise InvariantViolation(f"prime pool exhausted at pick ({i},{j})")
    return PrimeAssignment(n, M, chosen, n_exp, complete, tuple(scans))


def _new_differences_clean(chosen: dict[Pair, int], complete: dict[int, int], new_P: dict[int, int]) -> bool:
    """No assigned prime divides a new difference unless it belongs to that pair."""
    everything = {**complete, **new_P}
    checked = set()
    for k in new_P:
        for r in everything:
            pair = (min(k, r), max(k, r))
            if r == k or pair in checked:
                continue
            checked.add(pair)
            d = everything[k] - everything[r]
            for pr, q in chosen.items():
                if pr != pair and d % q == 0:
                    return False
    return True


def build_assignment(n: int, M: int | None = None) -> PrimeAssignment:
    """Choose M (unless given) and run the selection.

    A single vertex has no pairs; its product is the bare power 2**(M+2).
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if n == 1:
        M = 3 if M is None else M
        return PrimeAssignment(1, M, {}, {1: 1}, {1: 1 << (M + 2)})
    M = choose_modulus(n) if M is None else M
    return select_primes(n, M)


@dataclass
class Failure:
    check: str
    where: tuple
    detail: str

    def __str__(self) -> str:
        return f"{self.check} at {self.where}: {self.detail}"


@dataclass
class AssignmentReport:
    failures: list[Failure] = field(default_factory=list)
    counterexample: Pair | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, check: str, where: tuple, detail: str) -> None:
        self.failures.append(Failure(check, where, detail))


def verify_assignment(a: PrimeAssignment) -> AssignmentReport:
    """Re-derive every assignment invariant from scratch.

    The uniqueness check is exhaustive trial division of each difference
    ``P_l - P_k`` by every assigned prime. ``counterexample`` is the first
    pair whose difference is divided by a foreign prime, or failing that the
    first pair whose own prime does not divide it.
    """
    rep = AssignmentReport()
    n, M = a.n, a.M
    pairs = pair_order(n)
    if n < 1 or M < 1:
        rep.fail("shape", (), f"n={n}, M={M} must be positive")
        return rep
    if set(a.p) != set(pairs):
        rep.fail("shape", (), "prime map does not cover exactly the pairs i<j")
        return rep
    if set(a.P) != set(range(1, n + 1)) or set(a.n_exp) != set(range(1, n + 1)):
        rep.fail("shape", (), "P or n_exp does not cover exactly the vertices 1..n")
        return rep

    lo, hi = 1 << M, 1 << (M + 1)
    for pr in pairs:
        q = a.p[pr]
        if not lo < q < hi:
            rep.fail("range", pr, f"p={q} outside (2^{M}, 2^{M + 1})")
        elif q >= MR_DETERMINISTIC_LIMIT:
            rep.fail("prime", pr, f"p={q} too large to certify")
        elif not is_prime(q):
            rep.fail("prime", pr, f"p={q} is composite")
    values = list(a.p.values())
    if len(set(values)) != len(values):
        rep.fail("distinct", (), "assigned primes are not distinct")

    for k in range(1, n + 1):
        e = a.exponent(k)
        if e < 0:
            rep.fail("product", (k,), f"negative exponent {e}")
            continue
        if a.P[k] != a.incident_product(k) << e:
            rep.fail("product", (k,), "P_k differs from 2^(M+k+n_k) times its incident primes")
        if not (1 << (n * M + 2 * k)) <= a.P[k] < (1 << (n * M + 2 * k + 1)):
            rep.fail("normalization", (k,), f"P_k has {a.P[k].bit_length()} bits, expected {n * M + 2 * k + 1}")
        if n >= 2 and not 1 <= e < n * M:
            rep.fail("exponent", (k,), f"M+k+n_k = {e} outside [1, nM)")

    foreign_first = missing_first = None
    for k, l in pairs:
        d = a.P[l] - a.P[k]
        for pr in pairs:
            divides = d % a.p[pr] == 0
            if pr == (k, l) and not divides:
                rep.fail("uniqueness", (k, l), f"own prime p_{k}{l} does not divide P_{l}-P_{k}")
                missing_first = missing_first or (k, l)
            elif pr != (k, l) and divides:
                rep.fail("uniqueness", (k, l), f"foreign prime p_{pr[0]}{pr[1]} divides P_{l}-P_{k}")
                foreign_first = foreign_first or (k, l)
    rep.counterexample = foreign_first or missing_first

    for i in range(1, n):
        gap = a.P[i + 1] - a.P[i]
        if not (1 << (n * M + 2 * i + 1)) <= gap < (1 << (n * M + 2 * i + 3)):
            rep.fail("sandwich", (i, i + 1), "P_(i+1) - P_i outside [2^(nM+2i+1), 2^(nM+2i+3))")
    return rep
