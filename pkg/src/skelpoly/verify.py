"""Named, exhaustively checked identities over desk-scale ranges.

Every check returns a `CheckResult`: pass/fail, the first counterexample in
canonical order when failing, and wall time.  Checks are deterministic and
side-effect free, so they can run concurrently; `run_checks` is the single
entry point used by the command line.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable

from .compositions import (
    Composition,
    Partition,
    compositions,
    conjugate,
    depth,
    dominance_covers,
    dominance_leq,
    is_hook,
    is_regular,
    lambda_bar,
    partitions,
)
from .poly import (
    MultiPoly,
    bifactorial,
    bifactorial_q_slice,
    fake_degree,
    internal_zeros,
    q_factorial,
    qsym_fundamental,
    quasi_kostka_matrix,
    schur_poly,
    skeleton_poly,
    deep_skeleton,
)
from .rsk import (
    all_permutations,
    charge,
    inverse,
    inversions,
    perm_stats,
    word_descent_composition,
)
from .tableaux import descent_composition, standard_tableaux


@dataclass
class CheckResult:
    name: str
    params: dict
    passed: bool
    witness: object | None
    elapsed: float
    data: dict | None = field(default=None)

    def to_json(self, include_timing: bool = False) -> dict:
        out: dict = {
            "name": self.name,
            "params": self.params,
            "passed": self.passed,
            "witness": self.witness,
        }
        if self.data is not None:
            out["data"] = self.data
        if include_timing:
            out["elapsed"] = self.elapsed
        return out


def _finish(
    name: str,
    params: dict,
    witness: object | None,
    started: float,
    data: dict | None = None,
) -> CheckResult:
    return CheckResult(
        name=name,
        params=params,
        passed=witness is None,
        witness=witness,
        elapsed=time.perf_counter() - started,
        data=data,
    )


def _poly_witness(lhs: MultiPoly, rhs: MultiPoly) -> dict | None:
    """First differing term in canonical order, or None when equal."""
    if lhs == rhs:
        return None
    diff = lhs - rhs
    (exps, p, q), _ = diff.sorted_terms()[0]
    return {
        "exponents": list(exps),
        "p": p,
        "q": q,
        "lhs": lhs.coefficient(exps, p, q),
        "rhs": rhs.coefficient(exps, p, q),
    }


def _pad(alpha: Composition, arity: int) -> tuple[int, ...]:
    return tuple(alpha) + (0,) * (arity - len(alpha))


def _involutions(n: int) -> list[tuple[int, ...]]:
    return [w for w in all_permutations(n) if inverse(w) == w]


def check_skeleton_r(n: int, graded: bool = False) -> CheckResult:
    """Sum of skeleton polynomials over shapes of n = descent sum over involutions."""
    started = time.perf_counter()
    lhs = MultiPoly.zero(n)
    for shape in partitions(n):
        poly = deep_skeleton(shape, "p") if graded else skeleton_poly(shape)
        lhs = lhs + poly.embed(n)
    rhs = MultiPoly.zero(n)
    for w in _involutions(n):
        des = word_descent_composition(w)
        rhs = rhs + MultiPoly.monomial(
            _pad(des, n), p=depth(des) if graded else 0
        )
    return _finish(
        "skeleton-r", {"n": n, "graded": graded}, _poly_witness(lhs, rhs), started
    )


def check_skeleton_rs(
    n: int, graded: bool = False, report_support: bool = False
) -> CheckResult:
    """Paired skeleton sum = two-sided descent sum over all permutations."""
    started = time.perf_counter()
    arity = 2 * n
    lhs = MultiPoly.zero(arity)
    for shape in partitions(n):
        x_side = deep_skeleton(shape, "p") if graded else skeleton_poly(shape)
        y_side = deep_skeleton(shape, "q") if graded else skeleton_poly(shape)
        lhs = lhs + x_side.embed(arity, 0) * y_side.embed(arity, n)
    rhs = MultiPoly.zero(arity)
    monomial_groups: dict[tuple[int, ...], list[list[int]]] = {}
    for w in all_permutations(n):
        des_w = word_descent_composition(w)
        des_inv = word_descent_composition(inverse(w))
        exps = _pad(des_inv, n) + _pad(des_w, n)
        rhs = rhs + MultiPoly.monomial(
            exps,
            p=depth(des_inv) if graded else 0,
            q=depth(des_w) if graded else 0,
        )
        if report_support:
            monomial_groups.setdefault(exps, []).append(list(w))
    data = None
    if report_support:
        collisions = sorted(group for group in monomial_groups.values() if len(group) > 1)
        data = {"support_size": len(monomial_groups), "collisions": collisions}
    return _finish(
        "skeleton-rs",
        {"n": n, "graded": graded},
        _poly_witness(lhs, rhs),
        started,
        data,
    )


def check_skeleton_rsk(n: int, k: int | None = None, graded: bool = False) -> CheckResult:
    """Schur-times-skeleton sum = fundamental-times-descent sum over permutations."""
    started = time.perf_counter()
    if k is None:
        k = n
    arity = k + n
    lhs = MultiPoly.zero(arity)
    for shape in partitions(n):
        y_side = deep_skeleton(shape, "q") if graded else skeleton_poly(shape)
        lhs = lhs + schur_poly(shape, k).embed(arity, 0) * y_side.embed(arity, k)
    rhs = MultiPoly.zero(arity)
    for w in all_permutations(n):
        des_w = word_descent_composition(w)
        fundamental = qsym_fundamental(word_descent_composition(inverse(w)), k)
        y_mono = MultiPoly.monomial(
            (0,) * k + _pad(des_w, n), q=depth(des_w) if graded else 0
        )
        rhs = rhs + fundamental.embed(arity, 0) * y_mono
    return _finish(
        "skeleton-rsk", {"n": n, "k": k, "graded": graded}, _poly_witness(lhs, rhs), started
    )


def check_counting(n: int, i: int | None = None, j: int | None = None) -> CheckResult:
    """Prefix-of-ones skeleton evaluations count descent-length-bounded permutations."""
    started = time.perf_counter()
    skeletons = [skeleton_poly(shape) for shape in partitions(n)]
    inv_lengths = [len(word_descent_composition(w)) for w in _involutions(n)]
    pair_lengths = [
        (
            len(word_descent_composition(inverse(w))),
            len(word_descent_composition(w)),
        )
        for w in all_permutations(n)
    ]
    single_range = [i] if i is not None else list(range(1, n + 1))
    if i is not None and j is not None:
        pair_range = [(i, j)]
    elif i is None:
        pair_range = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    else:
        pair_range = []

    witness = None
    for a in single_range:
        lhs = sum(poly.eval_ones_prefix(a) for poly in skeletons)
        rhs = sum(1 for length in inv_lengths if length <= a)
        if lhs != rhs:
            witness = {"i": a, "lhs": lhs, "rhs": rhs}
            break
    if witness is None:
        for a, b in pair_range:
            lhs = sum(
                poly.eval_ones_prefix(a) * poly.eval_ones_prefix(b)
                for poly in skeletons
            )
            rhs = sum(1 for la, lb in pair_lengths if la <= a and lb <= b)
            if lhs != rhs:
                witness = {"i": a, "j": b, "lhs": lhs, "rhs": rhs}
                break
    if witness is None:
        total_f = sum(poly.evaluate() for poly in skeletons)
        total_f2 = sum(poly.evaluate() ** 2 for poly in skeletons)
        if total_f != len(inv_lengths):
            witness = {"identity": "sum f = involutions", "lhs": total_f, "rhs": len(inv_lengths)}
        elif total_f2 != factorial(n):
            witness = {"identity": "sum f^2 = n!", "lhs": total_f2, "rhs": factorial(n)}
    return _finish("counting", {"n": n, "i": i, "j": j}, witness, started)


def check_hook_sum(n: int) -> CheckResult:
    """The skeleton polynomials of hooks sum to all monomials x^alpha, alpha of n."""
    started = time.perf_counter()
    witness = None
    lhs = MultiPoly.zero(n)
    for shape in partitions(n):
        if is_hook(shape):
            lhs = lhs + skeleton_poly(shape).embed(n)
    rhs = MultiPoly.zero(n)
    for alpha in compositions(n):
        rhs = rhs + MultiPoly.monomial(_pad(alpha, n))
    witness = _poly_witness(lhs, rhs)
    if witness is None:
        # refinement: the hook with k rows carries each length-k composition once
        for k in range(1, n + 1):
            hook = (n - k + 1,) + (1,) * (k - 1)
            expected = MultiPoly.zero(k)
            for alpha in compositions(n):
                if len(alpha) == k:
                    expected = expected + MultiPoly.monomial(tuple(alpha))
            if skeleton_poly(hook) != expected:
                witness = {"hook": list(hook), "detail": "length-restricted sum differs"}
                break
    return _finish("hook-sum", {"n": n}, witness, started)


def check_mahonian(n: int) -> CheckResult:
    """maj, depth, charge, and inversions all distribute as the q-factorial."""
    started = time.perf_counter()
    target = q_factorial(n)
    dists: dict[str, dict[int, int]] = {
        "maj": {},
        "depth": {},
        "charge": {},
        "inversions": {},
    }
    for w in all_permutations(n):
        stats = perm_stats(w)
        for key, value in (
            ("maj", stats.maj),
            ("depth", stats.depth),
            ("charge", stats.charge),
            ("inversions", stats.inversions),
        ):
            dists[key][value] = dists[key].get(value, 0) + 1
    witness = None
    for key, dist in dists.items():
        for degree in range(target.degree() + 1):
            if dist.get(degree, 0) != target.coefficient(degree):
                witness = {
                    "statistic": key,
                    "degree": degree,
                    "count": dist.get(degree, 0),
                    "expected": target.coefficient(degree),
                }
                break
        if witness:
            break
    return _finish("mahonian", {"n": n}, witness, started)


def check_bks(shape: Partition) -> CheckResult:
    """Internal-zero dichotomy of the fake degree polynomial of one shape."""
    started = time.perf_counter()
    n = sum(shape)
    f = fake_degree(shape)
    lo = depth(shape)
    hi = comb(n, 2) - depth(conjugate(shape))
    witness = None
    if f.coefficient(lo) != 1 or f.coefficient(hi) != 1:
        witness = {
            "detail": "endpoint coefficients",
            "low": [lo, f.coefficient(lo)],
            "high": [hi, f.coefficient(hi)],
        }
    elif is_regular(shape):
        support = f.support()
        if internal_zeros(f).count != 0 or support[0] != lo or support[-1] != hi:
            witness = {
                "detail": "regular shape must have contiguous support",
                "support": list(support),
            }
    else:
        for k in range(comb(n, 2) + 1):
            should_vanish = k < lo or k == lo + 1 or k == hi - 1 or k > hi
            if (f.coefficient(k) == 0) != should_vanish:
                witness = {"degree": k, "coefficient": f.coefficient(k)}
                break
        if witness is None and not 1 <= internal_zeros(f).count <= 2:
            witness = {"detail": "internal zero count", "count": internal_zeros(f).count}
    return _finish("bks", {"shape": list(shape)}, witness, started)


def check_schur_family(shape: Partition) -> CheckResult:
    """Skeleton support lies in the dominance interval [lambda_bar, shape].

    Also reports whether the support induces a connected subgraph of the
    dominance Hasse diagram; disconnectedness is asserted for rectangles.
    """
    started = time.perf_counter()
    n = sum(shape)
    poly = skeleton_poly(shape)
    support = sorted(poly.support())
    lbar = lambda_bar(shape)
    witness = None
    for alpha in support:
        if not (dominance_leq(lbar, alpha) and dominance_leq(alpha, shape)):
            witness = {"alpha": list(alpha), "detail": "outside interval"}
            break
    if witness is None:
        if poly.coefficient(_pad(shape, poly.arity)) != 1:
            witness = {"detail": "top endpoint coefficient", "alpha": list(shape)}
        elif poly.coefficient(_pad(lbar, poly.arity)) != 1:
            witness = {"detail": "bottom endpoint coefficient", "alpha": list(lbar)}
    support_set = set(support)
    neighbors: dict[Composition, set[Composition]] = {a: set() for a in support_set}
    for lower, upper in dominance_covers(n):
        if lower in support_set and upper in support_set:
            neighbors[lower].add(upper)
            neighbors[upper].add(lower)
    seen: set[Composition] = set()
    stack = [support[0]] if support else []
    while stack:
        node = stack.pop()
        if node in seen:
            continue
        seen.add(node)
        stack.extend(neighbors[node])
    connected = len(seen) == len(support_set)
    if witness is None and not is_regular(shape) and connected:
        witness = {"detail": "rectangle support should be disconnected"}
    return _finish(
        "schur-family",
        {"shape": list(shape)},
        witness,
        started,
        {"support_size": len(support), "connected": connected},
    )


def check_charge_depth(n: int) -> CheckResult:
    """charge(w) equals the depth of the inverse for every permutation."""
    started = time.perf_counter()
    witness = None
    for w in all_permutations(n):
        lhs = charge(w)
        rhs = depth(word_descent_composition(inverse(w)))
        if lhs != rhs:
            witness = {"w": list(w), "charge": lhs, "depth_of_inverse": rhs}
            break
    return _finish("charge-depth", {"n": n}, witness, started)


def check_s6_inversion_count() -> CheckResult:
    """The 49 permutations of S_6 with four inversions, reproduced three ways."""
    started = time.perf_counter()
    witness = None
    direct = sum(1 for w in all_permutations(6) if inversions(w) == 4)
    from_q_factorial = q_factorial(6).coefficient(4)
    deep_targets = {(2, 4), (3, 2, 1)}
    admitting: dict[tuple[int, ...], int] = {}
    weighted = 0
    for shape in partitions(6):
        count = sum(
            1 for t in standard_tableaux(shape) if descent_composition(t) in deep_targets
        )
        if count:
            admitting[shape] = count
            weighted += count * len(standard_tableaux(shape))
    f_values = {
        shape: len(standard_tableaux(shape))
        for shape in ((5, 1), (4, 2), (4, 1, 1), (3, 2, 1))
    }
    if direct != 49:
        witness = {"detail": "direct count", "count": direct}
    elif from_q_factorial != 49:
        witness = {"detail": "q-factorial coefficient", "count": from_q_factorial}
    elif weighted != 49:
        witness = {"detail": "weighted shape sum", "count": weighted}
    elif set(admitting) != {(5, 1), (4, 2), (4, 1, 1), (3, 2, 1)}:
        witness = {"detail": "admitting shapes", "shapes": sorted(map(list, admitting))}
    elif [f_values[s] for s in ((5, 1), (4, 2), (4, 1, 1), (3, 2, 1))] != [5, 9, 10, 16]:
        witness = {"detail": "f values", "values": {str(k): v for k, v in f_values.items()}}
    return _finish("s6-inversions", {}, witness, started, {"count": direct})


def _rank_over_rationals(matrix: list[list[int]]) -> int:
    rows = [[Fraction(x) for x in row] for row in matrix if any(row)]
    rank = 0
    ncols = len(matrix[0]) if matrix else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col] != 0:
                scale = rows[r][col] / lead
                rows[r] = [a - scale * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def check_linear_independence(n: int) -> CheckResult:
    """The skeleton coefficient matrix over shapes of n has full row rank."""
    started = time.perf_counter()
    shapes, _, matrix = quasi_kostka_matrix(n)
    rank = _rank_over_rationals(matrix)
    witness = None
    if rank != len(shapes):
        witness = {"rank": rank, "rows": len(shapes)}
    return _finish("linear-independence", {"n": n}, witness, started)


def check_bifactorial(n: int) -> CheckResult:
    """The two-variable factorial matches the (charge, depth) distribution."""
    started = time.perf_counter()
    bi = bifactorial(n)
    observed: dict[tuple[int, int], int] = {}
    for w in all_permutations(n):
        key = (charge(w), depth(word_descent_composition(w)))
        observed[key] = observed.get(key, 0) + 1
    expected = {(p, q): c for ((_, p, q), c) in bi.terms.items()}
    witness = None
    if observed != expected:
        diff = sorted(set(observed) ^ set(expected) | {
            k for k in set(observed) & set(expected) if observed[k] != expected[k]
        })
        key = diff[0]
        witness = {
            "p": key[0],
            "q": key[1],
            "observed": observed.get(key, 0),
            "expected": expected.get(key, 0),
        }
    if witness is None:
        at_p1 = {}
        for (_, _, qe), coeff in bi.specialize(p=1).terms.items():
            at_p1[qe] = at_p1.get(qe, 0) + coeff
        target = q_factorial(n)
        if any(at_p1.get(d, 0) != target.coefficient(d) for d in range(target.degree() + 1)):
            witness = {"detail": "p=1 specialization differs from q-factorial"}
    if witness is None and _is_prime(n):
        for k in range(comb(n, 2) + 1):
            slice_p = bifactorial_q_slice(bi, k)
            if internal_zeros(slice_p).count != 0:
                witness = {"detail": "prime-slice internal zero", "k": k}
                break
    return _finish("bifactorial", {"n": n}, witness, started)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


DEFAULT_BOUNDS: dict[str, int | None] = {
    "skeleton-r": 6,
    "skeleton-rs": 6,
    "skeleton-rsk": 6,
    "counting": 7,
    "hook-sum": 7,
    "mahonian": 8,
    "bks": 8,
    "schur-family": 7,
    "charge-depth": 7,
    "s6-inversions": None,
    "linear-independence": 6,
    "bifactorial": 7,
}

CHECK_NAMES = tuple(DEFAULT_BOUNDS)


def _jobs_for(
    name: str, bound: int, report_support: bool
) -> list[Callable[[], CheckResult]]:
    if name == "skeleton-r":
        return [
            (lambda n=n, g=g: check_skeleton_r(n, g))
            for n in range(1, bound + 1)
            for g in (False, True)
        ]
    if name == "skeleton-rs":
        return [
            (lambda n=n, g=g: check_skeleton_rs(n, g, report_support))
            for n in range(1, bound + 1)
            for g in (False, True)
        ]
    if name == "skeleton-rsk":
        return [
            (lambda n=n, g=g: check_skeleton_rsk(n, graded=g))
            for n in range(1, bound + 1)
            for g in (False, True)
        ]
    if name == "counting":
        return [(lambda n=n: check_counting(n)) for n in range(1, bound + 1)]
    if name == "hook-sum":
        return [(lambda n=n: check_hook_sum(n)) for n in range(1, bound + 1)]
    if name == "mahonian":
        return [(lambda n=n: check_mahonian(n)) for n in range(1, bound + 1)]
    if name == "bks":
        return [
            (lambda s=s: check_bks(s))
            for n in range(1, bound + 1)
            for s in partitions(n)
        ]
    if name == "schur-family":
        return [
            (lambda s=s: check_schur_family(s))
            for n in range(1, bound + 1)
            for s in partitions(n)
        ]
    if name == "charge-depth":
        return [(lambda n=n: check_charge_depth(n)) for n in range(1, bound + 1)]
    if name == "s6-inversions":
        return [check_s6_inversion_count]
    if name == "linear-independence":
        return [(lambda n=n: check_linear_independence(n)) for n in range(1, bound + 1)]
    if name == "bifactorial":
        return [(lambda n=n: check_bifactorial(n)) for n in range(1, bound + 1)]
    raise ValueError(f"unknown check: {name}")


def run_checks(
    names: Iterable[str],
    max_n: int | None = None,
    threads: int = 1,
    report_support: bool = False,
) -> list[CheckResult]:
    """Run the selected checks (or all of them) and return results in order."""
    selected = list(names)
    if "all" in selected or not selected:
        selected = list(CHECK_NAMES)
    jobs: list[Callable[[], CheckResult]] = []
    for name in selected:
        if name not in DEFAULT_BOUNDS:
            raise ValueError(f"unknown check: {name}")
        bound = DEFAULT_BOUNDS[name]
        if bound is not None and max_n is not None:
            bound = max_n
        jobs.extend(_jobs_for(name, bound if bound is not None else 0, report_support))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(job) for job in jobs]
            return [future.result() for future in futures]
    return [job() for job in jobs]
