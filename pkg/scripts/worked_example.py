#!/usr/bin/env python3
"""Walk the 4-cycle through every layer of the library, printing the
values along the way.  Useful as a quick visual sanity pass; everything
printed here is also pinned by the test suite."""

from __future__ import annotations

import argparse

from chromheap.chromatic import chi_hat, chromatic_polynomial
from chromheap.families import cycle_graph
from chromheap.orientations import (
    acyclic_orientation_list,
    lambda_histogram,
    source_component_histogram,
)
from chromheap.reciprocity import check_derivative_reciprocity
from chromheap.series import heap_series, pyramid_series, trivial_series
from chromheap.symfunc import csf_powersum, expand_finite, omega, specialize_p_to_q


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cycle", type=int, default=4, help="cycle length (default 4)")
    parser.add_argument("--bound", type=int, default=4, help="series truncation degree")
    args = parser.parse_args()

    g = cycle_graph(args.cycle)
    print(f"== cycle on {g.n} vertices, {g.num_edges} edges ==\n")

    chi = chromatic_polynomial(g)
    print(f"chromatic polynomial:  {chi.pretty()}")
    print(f"chi(-1) * (-1)^n:      {(-1) ** g.n * chi.evaluate(-1)}")
    print(f"chi'(-1):              {chi.derivative(1).evaluate(-1)}")
    if g.n >= 2:
        print(f"quotient by edge 1-2:  {chi_hat(g, 2).pretty()}")
    print()

    orientations = acyclic_orientation_list(g)
    print(f"acyclic orientations:  {len(orientations)}")
    print(f"by source components:  {source_component_histogram(g)}")
    print(f"by partition:          {lambda_histogram(g)}")
    r = check_derivative_reciprocity(g, 1, 1)
    print(f"block tuples (1,1):    {r.count} (strata {r.strata}, equal={r.equal})")
    print()

    bound = args.bound
    print(f"series truncated at total degree {bound}:")
    print(f"  T = {trivial_series(g, bound)!r}")
    print(f"  H = {heap_series(g, bound)!r}")
    print(f"  P = {pyramid_series(g, bound)!r}")
    print()

    x = csf_powersum(g)
    print(f"X in the p-basis:      {x.pretty()}")
    print(f"omega(X):              {omega(x).pretty()}")
    print(f"p_k -> q:              {specialize_p_to_q(x).pretty()}")
    two = expand_finite(x, 2)
    print(f"two-variable expansion: {dict(two.terms)}")


if __name__ == "__main__":
    main()
