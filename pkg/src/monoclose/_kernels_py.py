"""Pure-Python implementations of the combinatorial hot loops.

These functions mirror the compiled versions in ``monoclose._speedups``.
They are the reference implementation: the compiled module must produce
identical output on every input it accepts.  All arithmetic here is on
native Python integers, so there is no overflow anywhere on this path.

Vectors are plain tuples of nonnegative ints; antichains are lists of such
tuples.  Output order is always lexicographic so results are canonical.
"""

from __future__ import annotations

from .errors import GeneratorBudgetError

BACKEND_NAME = "python"


def minimal_antichain(vectors):
    """Return the componentwise-minimal elements of ``vectors``, lex-sorted.

    Duplicates are dropped.  A vector can only be dominated by one of
    strictly smaller total degree (equal degree + componentwise <= means
    equal), so candidates are processed in degree order and each is checked
    against the lower-degree part of the antichain built so far.
    """
    distinct = sorted(set(vectors), key=lambda v: (sum(v), v))
    kept = []
    kept_degs = []
    out = []
    for v in distinct:
        dv = sum(v)
        dominated = False
        for g, dg in zip(kept, kept_degs):
            if dg >= dv:
                break
            ok = True
            for a, b in zip(g, v):
                if a > b:
                    ok = False
                    break
            if ok:
                dominated = True
                break
        if not dominated:
            kept.append(v)
            kept_degs.append(dv)
            out.append(v)
    out.sort()
    return out


def pair_sums_antichain(left, right):
    """Minimal antichain of all pairwise sums ``a + b``."""
    sums = {tuple(x + y for x, y in zip(a, b)) for a in left for b in right}
    return minimal_antichain(sums)


def dominates_any(gens, v):
    """True if some g in gens satisfies g <= v componentwise."""
    for g in gens:
        ok = True
        for a, b in zip(g, v):
            if a > b:
                ok = False
                break
        if ok:
            return True
    return False


def box_closure_scan(bounds, seeds, member, budget=None):
    """Find the minimal lattice points of an up-closed region inside a box.

    ``bounds``: inclusive upper corner of the box.
    ``seeds``: points already known to be in the region (their multiples are
    skipped without consulting ``member``).
    ``member(v)``: exact membership oracle.  Returns ``(True, None)`` or
    ``(False, sep)`` where ``sep`` is either ``None`` or an integer-scaled
    separating functional ``(nums, den)`` proving ``sum(nums*u) < den`` for
    u = v and ``>= den`` for every point of the region.  Separators are
    cached and reused so the oracle is only consulted when no cached
    separator excludes the point.
    ``budget``: optional cap on the number of found points; exceeding it
    raises GeneratorBudgetError instead of grinding on.

    Returns the list of newly found minimal region points, in lex order.
    The union of ``seeds`` and the result generates region ∩ N^n; points
    returned are exactly the minimal region points not dominated by a seed.

    The scan walks the box in lexicographic depth-first order, which visits
    every divisor of a point before the point itself; a point that reaches
    the oracle and is inside is therefore a minimal region point.
    """
    n = len(bounds)
    found = []
    # Domination list with move-to-front: consecutive box points tend to be
    # dominated by the same generator.
    dom = [tuple(s) for s in seeds]
    seps = []  # list of (nums tuple, den, suffix_max list)

    def sep_suffix(nums):
        # suffix_max[d] = max contribution of coordinates d..n-1
        suf = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            suf[i] = suf[i + 1] + nums[i] * bounds[i]
        return suf

    def dominated(v):
        for idx, g in enumerate(dom):
            ok = True
            for a, b in zip(g, v):
                if a > b:
                    ok = False
                    break
            if ok:
                if idx:
                    dom.insert(0, dom.pop(idx))
                return True
        return False

    def outside_by_cache(v):
        for idx, (nums, den, _suf) in enumerate(seps):
            acc = 0
            for c, x in zip(nums, v):
                acc += c * x
            if acc < den:
                if idx:
                    seps.insert(0, seps.pop(idx))
                return True
        return False

    prefix = [0] * n

    def walk(depth):
        if depth == n - 1:
            for t in range(bounds[depth] + 1):
                prefix[depth] = t
                v = tuple(prefix)
                if dominated(v):
                    break  # larger t stays dominated
                if outside_by_cache(v):
                    continue
                inside, sep = member(v)
                if inside:
                    found.append(v)
                    if budget is not None and len(found) > budget:
                        raise GeneratorBudgetError(
                            f"more than {budget} new generators in box scan"
                        )
                    dom.insert(0, v)
                    break  # larger t dominated by v
                if sep is not None:
                    nums, den = sep
                    seps.append((tuple(nums), den, sep_suffix(nums)))
            return
        for t in range(bounds[depth] + 1):
            prefix[depth] = t
            # Whole-subtree exclusion: even the box corner cannot reach den.
            skip = False
            for nums, den, suf in seps:
                acc = 0
                for i in range(depth + 1):
                    acc += nums[i] * prefix[i]
                if acc + suf[depth + 1] < den:
                    skip = True
                    break
            if not skip:
                walk(depth + 1)

    if n == 0:
        return []
    walk(0)
    found.sort()
    return found
