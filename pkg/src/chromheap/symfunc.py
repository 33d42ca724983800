"""Chromatic symmetric function in the power-sum basis.

X_G is stored as a map from integer partitions to exact coefficients; the
omega involution and the q-specialization act on that map directly, so the
e/h bases never materialize.  Finite-alphabet expansions produce
exponent-map polynomials, which lets every identity compare its algebraic
side against an orientation-side enumeration in exact arithmetic.

Alphabet slot layout for the multi-alphabet identities: the y variables
come first, then z, then the primed alphabet.  The orientation side colors
vertices with integers whose order matches that layout (negative colors
for y, zero for the block weighted in the primed alphabet, positive for z).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import factorial
from typing import Callable, Mapping, Sequence

from .config import DEFAULT_BUDGET, Budget, charge
from .errors import (
    InternalInvariantViolation,
    NonIntegerResult,
    ResourceBudgetExceeded,
    TooManyEdges,
)
from .graphs import Graph, blowup, independence_table, induced_subgraph
from .orientations import (
    Orientation,
    acyclic_orientation_list,
    is_descent_free,
    lambda_histogram,
    lambda_partition,
    restrict_orientation,
    source_components,
    subgraph_acyclic_count,
    subgraph_lambda_tally,
)
from .polynomials import Poly
from .reports import IdentityReport

MAX_CSF_EDGES = 20
MAX_EXPAND_VARS = 8
MAX_EXPAND_DEGREE = 8
MAX_COLORING_VARS = 5
MAX_COLORING_VERTICES = 8
MAX_SPLIT_VARS = 3  # per alphabet in the two-alphabet identities
MAX_SPLIT_VERTICES = 6
MAX_COMBINED_VARS = 2  # per alphabet in the three-alphabet identity
MAX_COMBINED_VERTICES = 5
MAX_MULTICOLOR_WEIGHT = 8


def _exact(c):
    """Collapse integral Fractions to int; leave everything else alone."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _coeff_json(c) -> dict:
    f = Fraction(c)
    return {"num": str(f.numerator), "den": str(f.denominator)}


# ---------------------------------------------------------------------------
# power-sum representation


class PPoly:
    """Homogeneous symmetric function written in the power-sum basis.

    ``terms`` maps a weakly decreasing partition tuple to a nonzero exact
    coefficient; every key partitions the same integer (``degree``).
    """

    __slots__ = ("terms", "degree")

    def __init__(self, terms: Mapping[tuple[int, ...], object] | None = None):
        clean: dict[tuple[int, ...], object] = {}
        degrees: set[int] = set()
        for lam, c in (terms or {}).items():
            c = _exact(c)
            if c == 0:
                continue
            key = tuple(lam)
            if any(part <= 0 for part in key) or any(
                key[i] < key[i + 1] for i in range(len(key) - 1)
            ):
                raise InternalInvariantViolation(f"not a partition: {key}")
            degrees.add(sum(key))
            clean[key] = c
        if len(degrees) > 1:
            raise InternalInvariantViolation("mixed homogeneous degrees in one PPoly")
        self.terms = clean
        self.degree = degrees.pop() if degrees else 0

    def coefficient(self, lam: Sequence[int]):
        return self.terms.get(tuple(lam), 0)

    def scale(self, c) -> "PPoly":
        if c == 0:
            return PPoly()
        return PPoly({lam: v * c for lam, v in self.terms.items()})

    def __add__(self, other: "PPoly") -> "PPoly":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return PPoly(out)

    def __sub__(self, other: "PPoly") -> "PPoly":
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        return isinstance(other, PPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def sum_of_coefficients(self):
        return _exact(sum(self.terms.values()))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        return sorted(self.terms.items())

    def to_json_dict(self) -> dict:
        terms = [
            {"partition": list(lam), **_coeff_json(c)}
            for lam, c in self.sorted_terms()
        ]
        return {"basis": "p", "degree": self.degree, "terms": terms}

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for lam, c in self.sorted_terms():
            name = "p[%s]" % ",".join(map(str, lam)) if lam else "1"
            bits.append(f"{c}*{name}")
        return " + ".join(bits).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"PPoly({self.pretty()})"


def omega(X: PPoly) -> PPoly:
    """Duality involution: p_k picks up (-1)^(k-1), so p_lambda is scaled
    by (-1)^(|lambda| - len(lambda))."""
    return PPoly(
        {
            lam: c if (sum(lam) - len(lam)) % 2 == 0 else -c
            for lam, c in X.terms.items()
        }
    )


def csf_powersum(G: Graph, budget: Budget = DEFAULT_BUDGET) -> PPoly:
    """X_G in the p-basis via the edge-subset expansion.

    A subset S of E contributes (-1)^|S| p_lambda, where lambda lists the
    component sizes of (V, S).  Components are tracked by a union-find with
    rollback so the 2^|E| subsets share work along the inclusion tree.
    """
    edges = G.edges
    if len(edges) > MAX_CSF_EDGES:
        raise TooManyEdges(
            f"{len(edges)} edges; the subset expansion stops at {MAX_CSF_EDGES}"
        )
    charge("enumeration", 1 << len(edges), budget.enumeration_limit)
    n = G.n
    parent = list(range(n + 1))
    size = [1] * (n + 1)
    comp: dict[int, int] = {1: n} if n else {}
    terms: dict[tuple[int, ...], int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def bump(s: int, d: int) -> None:
        c = comp.get(s, 0) + d
        if c:
            comp[s] = c
        else:
            del comp[s]

    def rec(i: int, sign: int) -> None:
        if i == len(edges):
            lam: list[int] = []
            for s in sorted(comp, reverse=True):
                lam.extend([s] * comp[s])
            key = tuple(lam)
            terms[key] = terms.get(key, 0) + sign
            return
        rec(i + 1, sign)
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru == rv:
            rec(i + 1, -sign)
            return
        if size[ru] < size[rv]:
            ru, rv = rv, ru
        bump(size[ru], -1)
        bump(size[rv], -1)
        parent[rv] = ru
        size[ru] += size[rv]
        bump(size[ru], 1)
        rec(i + 1, -sign)
        bump(size[ru], -1)
        size[ru] -= size[rv]
        parent[rv] = rv
        bump(size[ru], 1)
        bump(size[rv], 1)

    rec(0, 1)
    return PPoly(terms)


def specialize_p_to_q(X: PPoly) -> Poly:
    """Substitute every generator p_k by the indeterminate q, sending
    p_lambda to q^len(lambda); the result must have integer coefficients."""
    top = max((len(lam) for lam in X.terms), default=0)
    coeffs = [Fraction(0)] * (top + 1)
    for lam, c in X.terms.items():
        coeffs[len(lam)] += Fraction(c)
    if any(f.denominator != 1 for f in coeffs):
        raise NonIntegerResult("q-specialization has non-integer coefficients")
    return Poly(tuple(int(f) for f in coeffs))


def specialize_p_to_value(X: PPoly, t):
    """Substitute every generator p_k by the exact value t."""
    return _exact(sum(c * t ** len(lam) for lam, c in X.terms.items()))


# ---------------------------------------------------------------------------
# finite-alphabet polynomials


class MultiPoly:
    """Polynomial in a fixed tuple of alphabet variables, exponent-map form.

    ``terms`` maps an exponent tuple (one slot per variable) to a nonzero
    exact coefficient.  Variable slots are 0-based; identity checks lay out
    their alphabets as contiguous slot ranges.
    """

    __slots__ = ("nvars", "terms")

    def __init__(
        self, nvars: int, terms: Mapping[tuple[int, ...], object] | None = None
    ):
        self.nvars = nvars
        clean: dict[tuple[int, ...], object] = {}
        for exps, c in (terms or {}).items():
            c = _exact(c)
            if c == 0:
                continue
            key = tuple(exps)
            if len(key) != nvars or any(e < 0 for e in key):
                raise InternalInvariantViolation(
                    f"bad exponent tuple {key} for {nvars} variables"
                )
            clean[key] = c
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, c=1) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def power_sum(cls, nvars: int, k: int, lo: int, hi: int) -> "MultiPoly":
        """x_lo^k + ... + x_{hi-1}^k over 0-based variable slots."""
        terms = {}
        for i in range(lo, hi):
            e = [0] * nvars
            e[i] = k
            terms[tuple(e)] = 1
        return cls(nvars, terms)

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), 0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_compatible(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.nvars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def scale(self, c) -> "MultiPoly":
        if c == 0:
            return MultiPoly(self.nvars)
        return MultiPoly(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_compatible(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple[int, ...], object] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def _check_compatible(self, other: "MultiPoly") -> None:
        if not isinstance(other, MultiPoly) or self.nvars != other.nvars:
            raise InternalInvariantViolation("alphabet size mismatch")

    def evaluate(self, values: Sequence[object]):
        if len(values) != self.nvars:
            raise InternalInvariantViolation("value tuple length mismatch")
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(values, e):
                if k:
                    term *= x**k
            total += term
        return _exact(total)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        return sorted(self.terms.items())

    def to_json_list(self) -> list[dict]:
        return [
            {"exponents": list(e), **_coeff_json(c)} for e, c in self.sorted_terms()
        ]

    def __repr__(self) -> str:
        return f"MultiPoly(nvars={self.nvars}, terms={len(self.terms)})"


def substitute_power_sums(
    X: PPoly, nvars: int, image: Callable[[int], MultiPoly]
) -> MultiPoly:
    """Apply p_k -> image(k) to every term of X and expand exactly."""
    img_cache: dict[int, MultiPoly] = {}
    lam_cache: dict[tuple[int, ...], MultiPoly] = {}

    def expand_lam(lam: tuple[int, ...]) -> MultiPoly:
        if lam not in lam_cache:
            if not lam:
                lam_cache[lam] = MultiPoly.constant(nvars, 1)
            else:
                k = lam[-1]
                if k not in img_cache:
                    img_cache[k] = image(k)
                lam_cache[lam] = expand_lam(lam[:-1]) * img_cache[k]
        return lam_cache[lam]

    acc: dict[tuple[int, ...], object] = {}
    for lam, c in X.terms.items():
        for e, v in expand_lam(lam).terms.items():
            s = acc.get(e, 0) + c * v
            if s:
                acc[e] = s
            else:
                del acc[e]
    return MultiPoly(nvars, acc)


def expand_finite(X: PPoly, N: int) -> MultiPoly:
    """Expand X in variables z_1..z_N: substitute p_k -> z_1^k + ... + z_N^k."""
    if N > MAX_EXPAND_VARS or X.degree > MAX_EXPAND_DEGREE:
        raise ResourceBudgetExceeded(
            f"finite expansion capped at {MAX_EXPAND_VARS} variables"
            f" and degree {MAX_EXPAND_DEGREE}"
        )
    return substitute_power_sums(X, N, lambda k: MultiPoly.power_sum(N, k, 0, N))


def csf_from_colorings(G: Graph, N: int, budget: Budget = DEFAULT_BUDGET) -> MultiPoly:
    """X_G truncated to N colors by direct enumeration of proper colorings;
    each coloring f contributes the monomial prod_v z_{f(v)}."""
    if N > MAX_COLORING_VARS or G.n > MAX_COLORING_VERTICES:
        raise ResourceBudgetExceeded(
            f"direct coloring expansion capped at {MAX_COLORING_VARS} colors"
            f" and {MAX_COLORING_VERTICES} vertices"
        )
    charge("enumeration", max(N, 1) ** G.n, budget.enumeration_limit)
    n = G.n
    lower = [G.adj[i] & ((1 << i) - 1) for i in range(n)]
    acc: dict[tuple[int, ...], int] = {}
    colors = [0] * n
    hist = [0] * N

    def rec(i: int) -> None:
        if i == n:
            key = tuple(hist)
            acc[key] = acc.get(key, 0) + 1
            return
        banned = 0
        low = lower[i]
        while low:
            b = low & -low
            banned |= 1 << colors[b.bit_length() - 1]
            low ^= b
        for c in range(N):
            if banned >> c & 1:
                continue
            colors[i] = c
            hist[c] += 1
            rec(i + 1)
            hist[c] -= 1

    rec(0)
    return MultiPoly(N, acc)


# ---------------------------------------------------------------------------
# orientation-side building blocks


@lru_cache(maxsize=None)
def _expand_partition(
    lam: tuple[int, ...], nvars: int, lo: int, hi: int
) -> MultiPoly:
    """p_lam expanded in variable slots lo..hi-1 of an nvars alphabet."""
    if not lam:
        return MultiPoly.constant(nvars, 1)
    return _expand_partition(lam[:-1], nvars, lo, hi) * MultiPoly.power_sum(
        nvars, lam[-1], lo, hi
    )


@lru_cache(maxsize=None)
def _lambda_weight(G: Graph, mask: int, nvars: int, lo: int, hi: int) -> MultiPoly:
    """Sum of p_{lambda(gamma)} over acyclic orientations of G[mask],
    expanded in variable slots lo..hi-1."""
    acc: dict[tuple[int, ...], object] = {}
    for lam, cnt in subgraph_lambda_tally(G, mask):
        for e, v in _expand_partition(lam, nvars, lo, hi).terms.items():
            s = acc.get(e, 0) + cnt * v
            if s:
                acc[e] = s
            else:
                del acc[e]
    return MultiPoly(nvars, acc)


def _restriction_lambda(G: Graph, o: Orientation, mask: int) -> tuple[int, ...]:
    """Source-component size partition of an orientation restricted to G[mask]."""
    if mask == 0:
        return ()
    H, _ = induced_subgraph(G, mask)
    return lambda_partition(source_components(H, restrict_orientation(G, o, mask)))


def _add_shifted(
    acc: dict, weight: MultiPoly, base: Sequence[int], factor: int
) -> None:
    """acc += factor * weight * monomial(base), written into a plain dict."""
    if factor == 0:
        return
    base = tuple(base)
    for e, v in weight.terms.items():
        key = tuple(x + y for x, y in zip(e, base))
        s = acc.get(key, 0) + factor * v
        if s:
            acc[key] = s
        else:
            del acc[key]


def _class_masks(f: Sequence[int], colors: Sequence[int]) -> dict[int, int]:
    masks = {c: 0 for c in colors}
    for pos, c in enumerate(f):
        masks[c] |= 1 << pos
    return masks


# ---------------------------------------------------------------------------
# identity checks: orientation tally and descent-free expansion


def orientation_lambda_tally(G: Graph) -> PPoly:
    """Tally of p_{lambda(gamma)} over all acyclic orientations of G."""
    return PPoly(lambda_histogram(G))


def verify_orientation_expansion(
    G: Graph, budget: Budget = DEFAULT_BUDGET
) -> IdentityReport:
    """The orientation tally of p_{lambda(gamma)} should equal omega(X_G)."""
    lhs = omega(csf_powersum(G, budget))
    rhs = orientation_lambda_tally(G)
    return IdentityReport(
        identity="orientation_expansion",
        params={"n": G.n},
        equal=lhs == rhs,
        details=(f"omega side {lhs.pretty()}", f"tally side {rhs.pretty()}"),
    )


def descent_expansion_sides(
    G: Graph, N: int, budget: Budget = DEFAULT_BUDGET
) -> tuple[MultiPoly, MultiPoly]:
    """omega(X_G) in N variables against the descent-free pair enumeration.

    The orientation side groups pairs by the coloring: descent-freeness
    forces every arc between distinct color classes, so a coloring f admits
    exactly prod_c a(G[f^{-1}(c)]) compatible acyclic orientations.
    """
    lhs = expand_finite(omega(csf_powersum(G, budget)), N)
    charge("enumeration", max(N, 1) ** G.n, budget.enumeration_limit)
    acc: dict[tuple[int, ...], int] = {}
    for f in product(range(N), repeat=G.n):
        masks = _class_masks(f, range(N))
        w = 1
        for c in range(N):
            w *= subgraph_acyclic_count(G, masks[c])
        key = tuple(masks[c].bit_count() for c in range(N))
        acc[key] = acc.get(key, 0) + w
    return lhs, MultiPoly(N, acc)


def verify_descent_expansion(
    G: Graph, N: int, budget: Budget = DEFAULT_BUDGET
) -> IdentityReport:
    lhs, rhs = descent_expansion_sides(G, N, budget)
    return IdentityReport(
        identity="descent_expansion",
        params={"n": G.n, "colors": N},
        equal=lhs == rhs,
        details=(f"{len(lhs.terms)} monomials algebraic side",
                 f"{len(rhs.terms)} monomials orientation side"),
    )


def descent_expansion_rhs_naive(G: Graph, N: int) -> MultiPoly:
    """Literal sum over descent-free (orientation, coloring) pairs; cross
    checks the grouped route on small graphs."""
    acc: dict[tuple[int, ...], int] = {}
    for o in acyclic_orientation_list(G):
        for f in product(range(N), repeat=G.n):
            if not is_descent_free(G, o, f):
                continue
            key = tuple(f.count(c) for c in range(N))
            acc[key] = acc.get(key, 0) + 1
    return MultiPoly(N, acc)


# ---------------------------------------------------------------------------
# split-alphabet refinement


def _check_split_caps(G: Graph, sizes: Sequence[int], cap: int, nmax: int) -> None:
    if any(s > cap for s in sizes) or G.n > nmax:
        raise ResourceBudgetExceeded(
            f"alphabets capped at {cap} variables and {nmax} vertices here"
        )


def split_alphabet_sides(
    G: Graph, Ny: int, Nz: int, budget: Budget = DEFAULT_BUDGET
) -> tuple[MultiPoly, MultiPoly]:
    """omega(X_G)(y+z) against the two-level descent-free enumeration.

    Orientation side: colorings f with values in {0, 1..Nz}, descent-free;
    the color-0 block keeps a free acyclic orientation recorded as
    p_{lambda} in the y alphabet, while each positive class c contributes
    a(G[f^{-1}(c)]) and the monomial z_c^{|f^{-1}(c)|}.
    """
    _check_split_caps(G, (Ny, Nz), MAX_SPLIT_VARS, MAX_SPLIT_VERTICES)
    nv = Ny + Nz
    lhs = substitute_power_sums(
        omega(csf_powersum(G, budget)),
        nv,
        lambda k: MultiPoly.power_sum(nv, k, 0, nv),
    )
    charge("enumeration", (Nz + 1) ** G.n, budget.enumeration_limit)
    acc: dict[tuple[int, ...], object] = {}
    for f in product(range(Nz + 1), repeat=G.n):
        masks = _class_masks(f, range(Nz + 1))
        w = 1
        for c in range(1, Nz + 1):
            w *= subgraph_acyclic_count(G, masks[c])
        base = [0] * nv
        for c in range(1, Nz + 1):
            base[Ny + c - 1] = masks[c].bit_count()
        _add_shifted(acc, _lambda_weight(G, masks[0], nv, 0, Ny), base, w)
    return lhs, MultiPoly(nv, acc)


def verify_split_alphabet(
    G: Graph, Ny: int, Nz: int, budget: Budget = DEFAULT_BUDGET
) -> IdentityReport:
    lhs, rhs = split_alphabet_sides(G, Ny, Nz, budget)
    return IdentityReport(
        identity="split_alphabet",
        params={"n": G.n, "y_vars": Ny, "z_vars": Nz},
        equal=lhs == rhs,
        details=(f"{len(lhs.terms)} monomials algebraic side",
                 f"{len(rhs.terms)} monomials orientation side"),
    )


def split_alphabet_rhs_naive(G: Graph, Ny: int, Nz: int) -> MultiPoly:
    """Literal pair enumeration for the split-alphabet identity."""
    nv = Ny + Nz
    acc: dict[tuple[int, ...], object] = {}
    for o in acyclic_orientation_list(G):
        for f in product(range(Nz + 1), repeat=G.n):
            if not is_descent_free(G, o, f):
                continue
            mask0 = 0
            for pos, c in enumerate(f):
                if c == 0:
                    mask0 |= 1 << pos
            lam = _restriction_lambda(G, o, mask0)
            base = [0] * nv
            for c in range(1, Nz + 1):
                base[Ny + c - 1] = f.count(c)
            _add_shifted(acc, _expand_partition(lam, nv, 0, Ny), base, 1)
    return MultiPoly(nv, acc)


# ---------------------------------------------------------------------------
# signed-alphabet (super) refinements


def _is_independent(G: Graph, mask: int) -> bool:
    return bool(independence_table(G)[mask])


def superfication_sides(
    G: Graph, Ny: int, Nz: int, budget: Budget = DEFAULT_BUDGET
) -> tuple[MultiPoly, MultiPoly]:
    """X_G(y-z) against the signed coloring enumeration.

    Algebraic side substitutes p_k -> p_k(y) - (-1)^k p_k(z).  Orientation
    side: descent-free colorings with values in {-Ny..-1} u {1..Nz} where
    every negative class is independent; color -i maps to y_i, color i to
    z_i, and each positive class keeps a free acyclic orientation.
    """
    _check_split_caps(G, (Ny, Nz), MAX_SPLIT_VARS, MAX_SPLIT_VERTICES)
    nv = Ny + Nz

    def image(k: int) -> MultiPoly:
        y = MultiPoly.power_sum(nv, k, 0, Ny)
        z = MultiPoly.power_sum(nv, k, Ny, nv)
        return y + z.scale(-((-1) ** k))

    lhs = substitute_power_sums(csf_powersum(G, budget), nv, image)
    palette = list(range(-Ny, 0)) + list(range(1, Nz + 1))
    charge("enumeration", max(len(palette), 1) ** G.n, budget.enumeration_limit)
    acc: dict[tuple[int, ...], int] = {}
    for f in product(palette, repeat=G.n):
        masks = _class_masks(f, palette)
        if any(not _is_independent(G, masks[-i]) for i in range(1, Ny + 1)):
            continue
        w = 1
        for c in range(1, Nz + 1):
            w *= subgraph_acyclic_count(G, masks[c])
        key = [0] * nv
        for i in range(1, Ny + 1):
            key[i - 1] = masks[-i].bit_count()
        for c in range(1, Nz + 1):
            key[Ny + c - 1] = masks[c].bit_count()
        key = tuple(key)
        acc[key] = acc.get(key, 0) + w
    return lhs, MultiPoly(nv, acc)


def verify_superfication(
    G: Graph, Ny: int, Nz: int, budget: Budget = DEFAULT_BUDGET
) -> IdentityReport:
    lhs, rhs = superfication_sides(G, Ny, Nz, budget)
    return IdentityReport(
        identity="superfication",
        params={"n": G.n, "y_vars": Ny, "z_vars": Nz},
        equal=lhs == rhs,
        details=(f"{len(lhs.terms)} monomials algebraic side",
                 f"{len(rhs.terms)} monomials orientation side"),
    )


def superfication_rhs_naive(G: Graph, Ny: int, Nz: int) -> MultiPoly:
    """Literal pair enumeration for the signed-coloring identity."""
    nv = Ny + Nz
    palette = list(range(-Ny, 0)) + list(range(1, Nz + 1))
    acc: dict[tuple[int, ...], int] = {}
    for o in acyclic_orientation_list(G):
        for f in product(palette, repeat=G.n):
            if not is_descent_free(G, o, f):
                continue
            masks = _class_masks(f, palette)
            if any(not _is_independent(G, masks[-i]) for i in range(1, Ny + 1)):
                continue
            key = [0] * nv
            for i in range(1, Ny + 1):
                key[i - 1] = masks[-i].bit_count()
            for c in range(1, Nz + 1):
                key[Ny + c - 1] = masks[c].bit_count()
            key = tuple(key)
            acc[key] = acc.get(key, 0) + 1
    return MultiPoly(nv, acc)


def combined_sides(
    G: Graph, Ny: int, Nz: int, Nw: int, budget: Budget = DEFAULT_BUDGET
) -> tuple[MultiPoly, MultiPoly]:
    """X_G(y-(z+w)) against the full signed enumeration with a zero block.

    Algebraic side substitutes p_k -> p_k(y) - (-1)^k (p_k(z) + p_k(w)).
    Orientation side: descent-free colorings with values in {-Ny..Nz},
    negative classes independent (mapped to y), the color-0 block weighted
    p_{lambda} in the w alphabet, positive classes free acyclic (mapped to
    z).  Variable slots: y first, then z, then w.
    """
    _check_split_caps(G, (Ny, Nz, Nw), MAX_COMBINED_VARS, MAX_COMBINED_VERTICES)
    nv = Ny + Nz + Nw

    def image(k: int) -> MultiPoly:
        y = MultiPoly.power_sum(nv, k, 0, Ny)
        zw = MultiPoly.power_sum(nv, k, Ny, nv)
        return y + zw.scale(-((-1) ** k))

    lhs = substitute_power_sums(csf_powersum(G, budget), nv, image)
    palette = list(range(-Ny, Nz + 1))
    charge("enumeration", len(palette) ** G.n, budget.enumeration_limit)
    acc: dict[tuple[int, ...], object] = {}
    for f in product(palette, repeat=G.n):
        masks = _class_masks(f, palette)
        if any(not _is_independent(G, masks[-i]) for i in range(1, Ny + 1)):
            continue
        w = 1
        for c in range(1, Nz + 1):
            w *= subgraph_acyclic_count(G, masks[c])
        base = [0] * nv
        for i in range(1, Ny + 1):
            base[i - 1] = masks[-i].bit_count()
        for c in range(1, Nz + 1):
            base[Ny + c - 1] = masks[c].bit_count()
        _add_shifted(acc, _lambda_weight(G, masks[0], nv, Ny + Nz, nv), base, w)
    return lhs, MultiPoly(nv, acc)


def verify_combined(
    G: Graph, Ny: int, Nz: int, Nw: int, budget: Budget = DEFAULT_BUDGET
) -> IdentityReport:
    lhs, rhs = combined_sides(G, Ny, Nz, Nw, budget)
    return IdentityReport(
        identity="combined_alphabets",
        params={"n": G.n, "y_vars": Ny, "z_vars": Nz, "w_vars": Nw},
        equal=lhs == rhs,
        details=(f"{len(lhs.terms)} monomials algebraic side",
                 f"{len(rhs.terms)} monomials orientation side"),
    )


def combined_rhs_naive(G: Graph, Ny: int, Nz: int, Nw: int) -> MultiPoly:
    """Literal pair enumeration for the three-alphabet identity."""
    nv = Ny + Nz + Nw
    palette = list(range(-Ny, Nz + 1))
    acc: dict[tuple[int, ...], object] = {}
    for o in acyclic_orientation_list(G):
        for f in product(palette, repeat=G.n):
            if not is_descent_free(G, o, f):
                continue
            masks = _class_masks(f, palette)
            if any(not _is_independent(G, masks[-i]) for i in range(1, Ny + 1)):
                continue
            lam = _restriction_lambda(G, o, masks[0])
            base = [0] * nv
            for i in range(1, Ny + 1):
                base[i - 1] = masks[-i].bit_count()
            for c in range(1, Nz + 1):
                base[Ny + c - 1] = masks[c].bit_count()
            _add_shifted(acc, _expand_partition(lam, nv, Ny + Nz, nv), base, 1)
    return MultiPoly(nv, acc)


# ---------------------------------------------------------------------------
# multicoloring refinement


def multicolor_csf(
    G: Graph, m: Sequence[int], budget: Budget = DEFAULT_BUDGET
) -> PPoly:
    """Type-m refinement: X of the blown-up graph divided by prod_v m_v!."""
    if sum(m) > MAX_MULTICOLOR_WEIGHT:
        raise ResourceBudgetExceeded(
            f"multicolor expansion capped at weight {MAX_MULTICOLOR_WEIGHT}"
        )
    scale = Fraction(1)
    for k in m:
        scale /= factorial(k)
    return csf_powersum(blowup(G, m), budget).scale(scale)


def multicolor_csf_from_colorings(
    G: Graph, m: Sequence[int], N: int, budget: Budget = DEFAULT_BUDGET
) -> MultiPoly:
    """Direct type-m multicoloring enumeration with colors in [N].

    A multicoloring assigns vertex v a set of m_v colors with adjacent
    vertices using disjoint sets; each occurrence of a color contributes
    one power of its variable.
    """
    if N > 3 or sum(m) > MAX_MULTICOLOR_WEIGHT:
        raise ResourceBudgetExceeded("direct multicoloring capped at 3 colors")
    if len(m) != G.n:
        raise InternalInvariantViolation("type vector length mismatch")
    n = G.n
    charge("enumeration", (2**N) ** n, budget.enumeration_limit)
    options = [
        [sum(1 << c for c in combo) for combo in combinations(range(N), mv)]
        for mv in m
    ]
    lower = [G.adj[i] & ((1 << i) - 1) for i in range(n)]
    chosen = [0] * n
    hist = [0] * N
    acc: dict[tuple[int, ...], int] = {}

    def rec(i: int) -> None:
        if i == n:
            key = tuple(hist)
            acc[key] = acc.get(key, 0) + 1
            return
        forbidden = 0
        low = lower[i]
        while low:
            b = low & -low
            forbidden |= chosen[b.bit_length() - 1]
            low ^= b
        for mask in options[i]:
            if mask & forbidden:
                continue
            chosen[i] = mask
            mm = mask
            while mm:
                bb = mm & -mm
                hist[bb.bit_length() - 1] += 1
                mm ^= bb
            rec(i + 1)
            mm = mask
            while mm:
                bb = mm & -mm
                hist[bb.bit_length() - 1] -= 1
                mm ^= bb
            chosen[i] = 0

    rec(0)
    return MultiPoly(N, acc)
