"""Transfers along finite free algebras through symmetric tensors, checked against the classical maps."""

import random

from wittkit.exact import GF, parse_ring, product_algebra
from wittkit.suites import random_free_algebra, random_unit
from wittkit.transfers import (norm_oracle, orbit_basis, trace_oracle, transfer_Ga, transfer_Gm,
                               transfer_Witt, u_on_orbit, witt_norm_oracle)
from wittkit.witt.big import BigWittVector


def main():
    A2 = product_algebra([GF(5), GF(5)])
    print("u on A x A, orbit basis", orbit_basis(2), "->", [u_on_orbit(A2, o) for o in orbit_basis(2)])

    B = parse_ring("F5[x]/(x^2-2)")
    x = B.parse_element("x")
    print("Ga(x) =", transfer_Ga(B, x), " Gm(x) =", transfer_Gm(B, x),
          " W([x]) =", transfer_Witt(B, BigWittVector.teichmuller(B, x, 2)).coeffs)

    rng = random.Random(3)
    for tag in ("F5", "Z/9", "F3[y]/(y^2)"):
        C = random_free_algebra(parse_ring(tag), 3, rng)
        g = random_unit(C, rng)
        w = BigWittVector(C, [C.random(rng, 5) for _ in range(3)])
        ok = (transfer_Ga(C, g) == trace_oracle(C, g) and transfer_Gm(C, g) == norm_oracle(C, g)
              and transfer_Witt(C, w) == witt_norm_oracle(C, w))
        print(f"rank 3 algebra over {tag}: transfers agree with trace, det and norm: {ok}")


if __name__ == "__main__":
    main()
